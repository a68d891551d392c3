#include "pureorder/exactmath.hpp"

#include <algorithm>
#include <cstddef>
#include <random>
#include <sstream>

namespace pureorder {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

ZZ zz_from_u64(std::uint64_t v)
{
    ZZ r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

// uniform-enough residue in [0, m), m >= 1
ZZ random_residue(std::mt19937_64& rng, const ZZ& m)
{
    const std::size_t words = mpz_sizeinbase(m.get_mpz_t(), 2) / 64 + 2;
    ZZ acc = 0;
    for (std::size_t i = 0; i < words; i++) {
        acc <<= 64;
        acc += zz_from_u64(rng());
    }
    return acc % m;
}

} // namespace

/* ---------------------------------------------------------------- */
/* integers                                                          */
/* ---------------------------------------------------------------- */

ZZ Factorization::value() const
{
    ZZ v = sign;
    for (const auto& [q, e] : factors) {
        ZZ qe;
        mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), e);
        v *= qe;
    }
    return v;
}

unsigned Factorization::exponent_of(const ZZ& q) const
{
    for (const auto& [p, e] : factors)
        if (p == q)
            return e;
    return 0;
}

ZZ powmod(const ZZ& base, const ZZ& exp, const ZZ& mod)
{
    ZZ r;
    mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
    return r;
}

bool is_probable_prime(const ZZ& n)
{
    if (n < 2)
        return false;
    static const unsigned long small[] = {2,  3,  5,  7,  11, 13,
                                          17, 19, 23, 29, 31, 37};
    for (unsigned long s : small) {
        if (n == s)
            return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), s))
            return false;
    }
    // n - 1 = d * 2^r
    ZZ d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);
    for (unsigned long s : small) {
        ZZ x = powmod(ZZ(s), d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool witness = true;
        for (unsigned long i = 1; i < r; i++) {
            x = x * x % n;
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness)
            return false;
    }
    return true;
}

namespace {

// Brent's cycle variant of Pollard rho. Returns a nontrivial factor of
// the odd composite n, or n itself when the iteration cap runs out.
ZZ rho_brent(const ZZ& n, const ZZ& c, unsigned long max_iters)
{
    ZZ y = 2, g = 1, q = 1, x, ys;
    unsigned long r = 1, iters = 0;
    const unsigned long blk = 128;
    while (g == 1 && iters < max_iters) {
        x = y;
        for (unsigned long i = 0; i < r; i++)
            y = (y * y + c) % n;
        for (unsigned long k = 0; k < r && g == 1; k += blk) {
            ys = y;
            const unsigned long lim = std::min(blk, r - k);
            for (unsigned long i = 0; i < lim; i++) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            iters += lim;
        }
        r *= 2;
    }
    if (g == n) {
        // the whole block collapsed; retrace one step at a time
        do {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
        } while (g == 1 && iters++ < max_iters);
    }
    return g;
}

void trial_divide(ZZ& m, std::vector<std::pair<ZZ, unsigned>>& out,
                  unsigned long bound)
{
    auto peel = [&](const ZZ& d) {
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), d.get_mpz_t());
            e++;
        }
        if (e)
            out.emplace_back(d, e);
    };
    peel(ZZ(2));
    peel(ZZ(3));
    ZZ d = 5;
    int step = 2;  // alternate +2 / +4 to walk 6k +- 1
    while (d <= bound && d * d <= m) {
        peel(d);
        d += step;
        step = 6 - step;
    }
}

} // namespace

Factorization factorize(const ZZ& n, const FactorBudget& budget)
{
    if (n == 0)
        throw std::invalid_argument("factorize: n must be nonzero");
    Factorization f;
    f.sign = sgn(n) < 0 ? -1 : 1;
    ZZ m = abs(n);
    std::vector<std::pair<ZZ, unsigned>> found;
    trial_divide(m, found, budget.trial_bound);

    std::vector<std::pair<ZZ, unsigned>> todo;  // (cofactor, multiplicity)
    if (m > 1)
        todo.emplace_back(m, 1);
    while (!todo.empty()) {
        auto [t, mult] = todo.back();
        todo.pop_back();
        if (is_probable_prime(t)) {
            found.emplace_back(t, mult);
            continue;
        }
        if (mpz_perfect_power_p(t.get_mpz_t())) {
            for (unsigned long k = 2;; k++) {
                ZZ root;
                if (mpz_root(root.get_mpz_t(), t.get_mpz_t(), k)) {
                    todo.emplace_back(root, mult * k);
                    break;
                }
            }
            continue;
        }
        ZZ d = t;
        for (unsigned attempt = 0; attempt < budget.rho_attempts; attempt++) {
            const ZZ c =
                zz_from_u64(splitmix64(budget.seed + 0x5eedULL * attempt)) %
                    (t - 3) +
                1;
            d = rho_brent(t, c, budget.rho_iterations);
            if (d > 1 && d < t)
                break;
        }
        if (d <= 1 || d >= t) {
            std::ostringstream os;
            os << "factorize: composite cofactor " << t.get_str()
               << " survived trial division and rho; raise the budget or "
                  "supply the factorization manually";
            throw FactorBudgetExceeded(os.str());
        }
        todo.emplace_back(d, mult);
        todo.emplace_back(t / d, mult);
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [q, e] : found) {
        if (!f.factors.empty() && f.factors.back().first == q)
            f.factors.back().second += e;
        else
            f.factors.emplace_back(q, e);
    }
    return f;
}

bool is_wieferich(const ZZ& q, const ZZ& r)
{
    if (q < 3 || mpz_even_p(q.get_mpz_t()) || !is_probable_prime(q))
        throw std::invalid_argument("is_wieferich: q must be an odd prime");
    if (r == 1 || r == -1)
        throw BaseIsUnit("is_wieferich: base r must not be a unit");
    if (r == 0 || mpz_divisible_p(r.get_mpz_t(), q.get_mpz_t()))
        throw NotCoprime("is_wieferich: q divides the base r");
    const ZZ q2 = q * q;
    return powmod(r, q - 1, q2) == 1;
}

std::pair<ZZ, ZZ> pth_power_free(const ZZ& a, unsigned p,
                                 const FactorBudget& budget)
{
    if (a == 0 || a == 1 || a == -1)
        throw std::invalid_argument("pth_power_free: a must not be 0 or +-1");
    const Factorization f = factorize(a, budget);
    ZZ core = 1, s = 1;
    for (const auto& [q, e] : f.factors) {
        ZZ t;
        if (e % p) {
            mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), e % p);
            core *= t;
        }
        if (e / p) {
            mpz_pow_ui(t.get_mpz_t(), q.get_mpz_t(), e / p);
            s *= t;
        }
    }
    if (core == 1)
        throw PerfectPower("pth_power_free: a is a perfect p-th power");
    return {f.sign < 0 ? ZZ(-core) : core, s};
}

/* ---------------------------------------------------------------- */
/* polynomials over Z                                                */
/* ---------------------------------------------------------------- */

IntPoly::IntPoly(std::vector<ZZ> coeffs) : c(std::move(coeffs))
{
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

IntPoly IntPoly::constant(const ZZ& v)
{
    return IntPoly{{v}};
}

IntPoly IntPoly::monomial(const ZZ& coeff, unsigned deg)
{
    std::vector<ZZ> v(deg + 1, ZZ(0));
    v[deg] = coeff;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::power_minus(unsigned p, const ZZ& a)
{
    std::vector<ZZ> v(p + 1, ZZ(0));
    v[0] = -a;
    v[p] = 1;
    return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted_radical(unsigned p, const ZZ& a)
{
    // (X + a)^p - a
    std::vector<ZZ> v(p + 1);
    for (unsigned i = 0; i <= p; i++) {
        ZZ bin;
        mpz_bin_uiui(bin.get_mpz_t(), p, p - i);
        ZZ apow;
        mpz_pow_ui(apow.get_mpz_t(), a.get_mpz_t(), p - i);
        v[i] = bin * apow;
    }
    v[0] -= a;
    return IntPoly(std::move(v));
}

const ZZ& IntPoly::coeff(std::size_t i) const
{
    static const ZZ zero = 0;
    return i < c.size() ? c[i] : zero;
}

ZZ IntPoly::eval(const ZZ& x) const
{
    ZZ r = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        r = r * x + c[i];
    return r;
}

IntPoly IntPoly::derivative() const
{
    std::vector<ZZ> v;
    for (std::size_t i = 1; i < c.size(); i++)
        v.push_back(ZZ(static_cast<unsigned long>(i)) * c[i]);
    return IntPoly(std::move(v));
}

IntPoly add(const IntPoly& a, const IntPoly& b)
{
    std::vector<ZZ> v(std::max(a.c.size(), b.c.size()), ZZ(0));
    for (std::size_t i = 0; i < v.size(); i++)
        v[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly sub(const IntPoly& a, const IntPoly& b)
{
    std::vector<ZZ> v(std::max(a.c.size(), b.c.size()), ZZ(0));
    for (std::size_t i = 0; i < v.size(); i++)
        v[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly neg(const IntPoly& a)
{
    std::vector<ZZ> v = a.c;
    for (auto& x : v)
        x = -x;
    return IntPoly(std::move(v));
}

IntPoly mul(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<ZZ> v(a.c.size() + b.c.size() - 1, ZZ(0));
    for (std::size_t i = 0; i < a.c.size(); i++)
        for (std::size_t j = 0; j < b.c.size(); j++)
            v[i + j] += a.c[i] * b.c[j];
    return IntPoly(std::move(v));
}

IntPoly mul_scalar(const IntPoly& a, const ZZ& s)
{
    if (s == 0)
        return {};
    std::vector<ZZ> v = a.c;
    for (auto& x : v)
        x *= s;
    return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> divmod(const IntPoly& num, const IntPoly& den)
{
    if (den.is_zero())
        throw Error("IntPoly divmod: division by zero");
    std::vector<ZZ> r = num.c;
    const int dd = den.degree();
    const ZZ& lead = den.c.back();
    if (num.degree() < dd)
        return {IntPoly{}, num};
    std::vector<ZZ> q(num.degree() - dd + 1, ZZ(0));
    for (int i = num.degree(); i >= dd; i--) {
        if (r[i] == 0)
            continue;
        if (!mpz_divisible_p(r[i].get_mpz_t(), lead.get_mpz_t()))
            throw Error("IntPoly divmod: inexact leading division");
        ZZ f;
        mpz_divexact(f.get_mpz_t(), r[i].get_mpz_t(), lead.get_mpz_t());
        q[i - dd] = f;
        for (int j = 0; j <= dd; j++)
            r[i - dd + j] -= f * den.c[j];
    }
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

IntPoly divexact(const IntPoly& num, const IntPoly& den)
{
    auto [q, r] = divmod(num, den);
    if (!r.is_zero())
        throw Error("IntPoly divexact: nonzero remainder");
    return q;
}

std::string to_string(const IntPoly& f, const std::string& var)
{
    if (f.is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = f.c.size(); i-- > 0;) {
        const ZZ& a = f.c[i];
        if (a == 0)
            continue;
        if (!first)
            os << (a > 0 ? " + " : " - ");
        else if (a < 0)
            os << "-";
        first = false;
        const ZZ mag = abs(a);
        if (i == 0 || mag != 1)
            os << mag.get_str();
        if (i > 0) {
            if (mag != 1)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

/* ---------------------------------------------------------------- */
/* polynomials over F_q                                              */
/* ---------------------------------------------------------------- */

namespace {

void check_same_modulus(const ModPoly& a, const ModPoly& b)
{
    if (a.q != b.q)
        throw ModulusMismatch("ModPoly: operands have different moduli");
}

ZZ mod_inverse(const ZZ& a, const ZZ& q)
{
    ZZ r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t()))
        throw Error("ModPoly: leading coefficient not invertible");
    return r;
}

} // namespace

ModPoly::ModPoly(ZZ modulus, std::vector<ZZ> coeffs) : q(std::move(modulus))
{
    c = std::move(coeffs);
    for (auto& x : c) {
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    }
    while (!c.empty() && c.back() == 0)
        c.pop_back();
}

ModPoly ModPoly::from_int_poly(const IntPoly& f, const ZZ& q)
{
    return ModPoly(q, f.c);
}

ModPoly ModPoly::x(const ZZ& q)
{
    return ModPoly(q, {ZZ(0), ZZ(1)});
}

const ZZ& ModPoly::coeff(std::size_t i) const
{
    static const ZZ zero = 0;
    return i < c.size() ? c[i] : zero;
}

ZZ ModPoly::eval(const ZZ& x) const
{
    ZZ r = 0;
    for (std::size_t i = c.size(); i-- > 0;)
        r = (r * x + c[i]) % q;
    if (r < 0)
        r += q;
    return r;
}

IntPoly ModPoly::lift() const
{
    return IntPoly(c);
}

ModPoly add(const ModPoly& a, const ModPoly& b)
{
    check_same_modulus(a, b);
    std::vector<ZZ> v(std::max(a.c.size(), b.c.size()), ZZ(0));
    for (std::size_t i = 0; i < v.size(); i++)
        v[i] = a.coeff(i) + b.coeff(i);
    return ModPoly(a.q, std::move(v));
}

ModPoly sub(const ModPoly& a, const ModPoly& b)
{
    check_same_modulus(a, b);
    std::vector<ZZ> v(std::max(a.c.size(), b.c.size()), ZZ(0));
    for (std::size_t i = 0; i < v.size(); i++)
        v[i] = a.coeff(i) - b.coeff(i);
    return ModPoly(a.q, std::move(v));
}

ModPoly mul(const ModPoly& a, const ModPoly& b)
{
    check_same_modulus(a, b);
    if (a.is_zero() || b.is_zero())
        return ModPoly(a.q);
    std::vector<ZZ> v(a.c.size() + b.c.size() - 1, ZZ(0));
    for (std::size_t i = 0; i < a.c.size(); i++)
        for (std::size_t j = 0; j < b.c.size(); j++)
            v[i + j] += a.c[i] * b.c[j];
    return ModPoly(a.q, std::move(v));
}

ModPoly mul_scalar(const ModPoly& a, const ZZ& s)
{
    std::vector<ZZ> v = a.c;
    for (auto& x : v)
        x *= s;
    return ModPoly(a.q, std::move(v));
}

std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den)
{
    check_same_modulus(num, den);
    if (den.is_zero())
        throw Error("ModPoly divmod: division by zero");
    const int dd = den.degree();
    if (num.degree() < dd)
        return {ModPoly(num.q), num};
    const ZZ inv = mod_inverse(den.c.back(), num.q);
    std::vector<ZZ> r = num.c;
    std::vector<ZZ> quo(num.degree() - dd + 1, ZZ(0));
    for (int i = num.degree(); i >= dd; i--) {
        ZZ f = r[i] * inv % num.q;
        if (f == 0)
            continue;
        quo[i - dd] = f;
        for (int j = 0; j <= dd; j++)
            r[i - dd + j] = (r[i - dd + j] - f * den.c[j]) % num.q;
    }
    return {ModPoly(num.q, std::move(quo)), ModPoly(num.q, std::move(r))};
}

ModPoly make_monic(const ModPoly& f)
{
    if (f.is_zero() || f.is_monic())
        return f;
    return mul_scalar(f, mod_inverse(f.c.back(), f.q));
}

ModPoly derivative(const ModPoly& f)
{
    std::vector<ZZ> v;
    for (std::size_t i = 1; i < f.c.size(); i++)
        v.push_back(ZZ(static_cast<unsigned long>(i)) * f.c[i]);
    return ModPoly(f.q, std::move(v));
}

ModPoly poly_gcd_mod_q(const ModPoly& f, const ModPoly& g)
{
    check_same_modulus(f, g);
    ModPoly a = f, b = g;
    while (!b.is_zero()) {
        ModPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a);
}

ModPoly powmod_poly(const ModPoly& base, const ZZ& e, const ModPoly& mod)
{
    check_same_modulus(base, mod);
    ModPoly result(base.q, {ZZ(1)});
    ModPoly b = divmod(base, mod).second;
    for (long i = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1;
         i >= 0; i--) {
        result = divmod(mul(result, result), mod).second;
        if (mpz_tstbit(e.get_mpz_t(), static_cast<unsigned long>(i)))
            result = divmod(mul(result, b), mod).second;
    }
    return result;
}

std::string to_string(const ModPoly& f, const std::string& var)
{
    return to_string(f.lift(), var) + " mod " + f.q.get_str();
}

/* ---------------------------------------------------------------- */
/* factorization over F_q                                            */
/* ---------------------------------------------------------------- */

namespace {

bool mod_poly_less(const ModPoly& a, const ModPoly& b)
{
    if (a.degree() != b.degree())
        return a.degree() < b.degree();
    for (std::size_t i = 0; i < a.c.size(); i++)
        if (a.c[i] != b.c[i])
            return a.c[i] < b.c[i];
    return false;
}

// f(X) = g(X^q) for some g; over F_q that makes f = (pullback g)^q and
// the pullback just reads every q-th coefficient.
ModPoly qth_root(const ModPoly& f)
{
    unsigned long step = mpz_get_ui(f.q.get_mpz_t());
    std::vector<ZZ> v;
    for (std::size_t i = 0; i < f.c.size(); i += step)
        v.push_back(f.c[i]);
    return ModPoly(f.q, std::move(v));
}

ModPoly divexact_mod(const ModPoly& num, const ModPoly& den)
{
    auto [quo, rem] = divmod(num, den);
    if (!rem.is_zero())
        throw Error("ModPoly divexact: nonzero remainder");
    return quo;
}

// Equal-degree splitting of a monic squarefree product of irreducibles
// all of degree d (Cantor-Zassenhaus; trace map in characteristic 2).
void edf(const ModPoly& g, unsigned d, std::mt19937_64& rng,
         std::vector<ModPoly>& out)
{
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(make_monic(g));
        return;
    }
    const ZZ& q = g.q;
    ZZ qd;
    mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
    const ZZ e = (qd - 1) / 2;
    for (;;) {
        std::vector<ZZ> rc(static_cast<std::size_t>(g.degree()));
        for (auto& x : rc)
            x = random_residue(rng, q);
        ModPoly r(q, std::move(rc));
        if (r.degree() < 1)
            continue;
        ModPoly w(q);
        if (q == 2) {
            // trace polynomial r + r^2 + ... + r^(2^(d-1))
            ModPoly t = divmod(r, g).second;
            w = t;
            for (unsigned i = 1; i < d; i++) {
                t = divmod(mul(t, t), g).second;
                w = add(w, t);
            }
        } else {
            w = sub(powmod_poly(r, e, g), ModPoly(q, {ZZ(1)}));
        }
        ModPoly h = poly_gcd_mod_q(w, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            edf(h, d, rng, out);
            edf(divexact_mod(g, h), d, rng, out);
            return;
        }
    }
}

// Distinct-degree split of a monic squarefree f: list of
// (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, unsigned>> ddf(const ModPoly& f)
{
    std::vector<std::pair<ModPoly, unsigned>> res;
    ModPoly rest = f;
    ModPoly h = divmod(ModPoly::x(f.q), rest).second;  // X^(q^d) mod rest
    unsigned d = 0;
    while (rest.degree() > 0 && rest.degree() >= 2 * static_cast<int>(d + 1)) {
        d++;
        h = powmod_poly(h, f.q, rest);
        ModPoly g = poly_gcd_mod_q(sub(h, ModPoly::x(f.q)), rest);
        if (g.degree() > 0) {
            res.emplace_back(g, d);
            rest = divexact_mod(rest, g);
            h = divmod(h, rest).second;
        }
    }
    if (rest.degree() > 0)
        res.emplace_back(rest, static_cast<unsigned>(rest.degree()));
    return res;
}

// All distinct monic irreducible factors of monic f (multiplicities
// ignored). Handles inseparable parts by q-th-root descent.
void distinct_irreducibles(const ModPoly& f, std::mt19937_64& rng,
                           std::vector<ModPoly>& out)
{
    if (f.degree() < 1)
        return;
    const ModPoly fd = derivative(f);
    if (fd.is_zero()) {
        distinct_irreducibles(qth_root(f), rng, out);
        return;
    }
    const ModPoly g = poly_gcd_mod_q(f, fd);
    const ModPoly s = divexact_mod(f, g);  // squarefree, degree >= 1
    for (const auto& [prod, d] : ddf(make_monic(s)))
        edf(prod, d, rng, out);
    distinct_irreducibles(make_monic(g), rng, out);
}

} // namespace

std::vector<std::pair<ModPoly, unsigned>>
factor_mod_q(const IntPoly& T, const ZZ& q, std::uint64_t seed)
{
    if (!T.is_monic())
        throw NonMonicInput("factor_mod_q: input polynomial must be monic");
    const ModPoly tbar = ModPoly::from_int_poly(T, q);
    std::mt19937_64 rng(splitmix64(seed ^ 0x70e0f2a5c3b1d497ULL));

    std::vector<ModPoly> irr;
    distinct_irreducibles(tbar, rng, irr);
    std::sort(irr.begin(), irr.end(), mod_poly_less);
    irr.erase(std::unique(irr.begin(), irr.end()), irr.end());

    std::vector<std::pair<ModPoly, unsigned>> res;
    ModPoly rest = tbar;
    for (const auto& h : irr) {
        unsigned e = 0;
        for (;;) {
            auto [quo, rem] = divmod(rest, h);
            if (!rem.is_zero())
                break;
            rest = quo;
            e++;
        }
        if (e == 0)
            throw Error("factor_mod_q: internal factor bookkeeping failed");
        res.emplace_back(h, e);
    }
    if (rest.degree() != 0)
        throw Error("factor_mod_q: factors do not reconstruct the input");
    return res;
}

} // namespace pureorder
