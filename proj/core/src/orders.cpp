#include "pureorder/orders.hpp"

#include <algorithm>
#include <sstream>

namespace pureorder {

/* ---------------------------------------------------------------- */
/* elements                                                          */
/* ---------------------------------------------------------------- */

bool AlgebraicElement::is_zero() const
{
    for (const auto& v : num)
        if (v != 0)
            return false;
    return true;
}

AlgebraicElement AlgebraicElement::make(std::vector<ZZ> num, ZZ den)
{
    if (den == 0)
        throw Error("AlgebraicElement: zero denominator");
    if (den < 0) {
        den = -den;
        for (auto& v : num)
            v = -v;
    }
    ZZ g = den;
    for (const auto& v : num)
        g = gcd(g, v);
    if (g > 1) {
        mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
        for (auto& v : num)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
    AlgebraicElement e;
    e.num = std::move(num);
    e.den = std::move(den);
    return e;
}

AlgebraicElement AlgebraicElement::zero(std::size_t p)
{
    AlgebraicElement e;
    e.num.assign(p, ZZ(0));
    return e;
}

AlgebraicElement AlgebraicElement::from_integer(std::size_t p, const ZZ& v)
{
    AlgebraicElement e = zero(p);
    e.num[0] = v;
    return e;
}

AlgebraicElement AlgebraicElement::alpha_power(std::size_t p, unsigned k)
{
    if (k >= p)
        throw Error("alpha_power: exponent must be below the degree");
    AlgebraicElement e = zero(p);
    e.num[k] = 1;
    return e;
}

namespace {

void check_same_dim(const AlgebraicElement& x, const AlgebraicElement& y)
{
    if (x.dim() != y.dim())
        throw Error("AlgebraicElement: dimension mismatch");
}

} // namespace

AlgebraicElement add(const AlgebraicElement& x, const AlgebraicElement& y)
{
    check_same_dim(x, y);
    std::vector<ZZ> v(x.dim());
    for (std::size_t i = 0; i < v.size(); i++)
        v[i] = x.num[i] * y.den + y.num[i] * x.den;
    return AlgebraicElement::make(std::move(v), x.den * y.den);
}

AlgebraicElement sub(const AlgebraicElement& x, const AlgebraicElement& y)
{
    return add(x, neg(y));
}

AlgebraicElement neg(const AlgebraicElement& x)
{
    std::vector<ZZ> v = x.num;
    for (auto& t : v)
        t = -t;
    return AlgebraicElement::make(std::move(v), x.den);
}

AlgebraicElement scale(const AlgebraicElement& x, const ZZ& num, const ZZ& den)
{
    std::vector<ZZ> v = x.num;
    for (auto& t : v)
        t *= num;
    return AlgebraicElement::make(std::move(v), x.den * den);
}

AlgebraicElement multiply_elements(const AlgebraicElement& x,
                                   const AlgebraicElement& y,
                                   const IntPoly& minpoly)
{
    check_same_dim(x, y);
    const std::size_t p = minpoly.degree();
    if (x.dim() != p)
        throw Error("multiply_elements: dimension does not match minpoly");
    const IntPoly prod = mul(IntPoly(x.num), IntPoly(y.num));
    const IntPoly red = divmod(prod, minpoly).second;
    std::vector<ZZ> v(p, ZZ(0));
    for (std::size_t i = 0; i < red.c.size(); i++)
        v[i] = red.c[i];
    return AlgebraicElement::make(std::move(v), x.den * y.den);
}

AlgebraicElement element_pow(const AlgebraicElement& x, unsigned e,
                             const IntPoly& minpoly)
{
    AlgebraicElement r = AlgebraicElement::from_integer(x.dim(), ZZ(1));
    AlgebraicElement base = x;
    while (e) {
        if (e & 1)
            r = multiply_elements(r, base, minpoly);
        e >>= 1;
        if (e)
            base = multiply_elements(base, base, minpoly);
    }
    return r;
}

AlgebraicElement eval_poly_at(const IntPoly& u, const AlgebraicElement& x,
                              const IntPoly& minpoly)
{
    AlgebraicElement r = AlgebraicElement::zero(x.dim());
    for (std::size_t i = u.c.size(); i-- > 0;) {
        r = multiply_elements(r, x, minpoly);
        r = add(r, AlgebraicElement::from_integer(x.dim(), u.c[i]));
    }
    return r;
}

std::pair<ZMat, ZZ> multiplication_matrix(const AlgebraicElement& x,
                                          const IntPoly& minpoly)
{
    const std::size_t p = minpoly.degree();
    ZMat n(p, p);
    for (std::size_t j = 0; j < p; j++) {
        AlgebraicElement xj = multiply_elements(
            x, AlgebraicElement::alpha_power(p, static_cast<unsigned>(j)),
            minpoly);
        // bring back to the common denominator x.den
        if (!mpz_divisible_p(x.den.get_mpz_t(), xj.den.get_mpz_t()))
            throw Error("multiplication_matrix: denominator bookkeeping");
        const ZZ f = x.den / xj.den;
        for (std::size_t t = 0; t < p; t++)
            n.at(j, t) = xj.num[t] * f;
    }
    return {std::move(n), x.den};
}

IntPoly minimal_polynomial(const AlgebraicElement& x, const IntPoly& minpoly)
{
    const std::size_t p = minpoly.degree();
    // powers of x over the power basis, at a common denominator
    std::vector<AlgebraicElement> pw{AlgebraicElement::from_integer(p, ZZ(1))};
    for (std::size_t k = 1; k <= p; k++)
        pw.push_back(multiply_elements(pw.back(), x, minpoly));
    for (std::size_t d = 1; d <= p; d++) {
        ZZ big = 1;
        for (std::size_t k = 0; k <= d; k++)
            big = lcm(big, pw[k].den);
        ZMat rows(d + 1, p);
        for (std::size_t k = 0; k <= d; k++) {
            const ZZ f = big / pw[k].den;
            for (std::size_t t = 0; t < p; t++)
                rows.at(k, t) = pw[k].num[t] * f;
        }
        ZMat ker = left_kernel(rows);
        if (ker.rows == 0)
            continue;
        if (ker.rows != 1)
            throw Error("minimal_polynomial: relation of minimal degree "
                        "is not unique");
        std::vector<ZZ> coeffs(d + 1);
        for (std::size_t k = 0; k <= d; k++)
            coeffs[k] = ker.at(0, k);
        IntPoly f(std::move(coeffs));
        if (f.degree() != static_cast<int>(d))
            throw Error("minimal_polynomial: kernel vector degenerated");
        if (f.c.back() < 0)
            f = neg(f);
        return f;
    }
    throw Error("minimal_polynomial: no relation found");
}

bool is_integral(const AlgebraicElement& x, const IntPoly& minpoly)
{
    auto [n, den] = multiplication_matrix(x, minpoly);
    return charpoly_scaled(n, den).has_value();
}

/* ---------------------------------------------------------------- */
/* orders                                                            */
/* ---------------------------------------------------------------- */

AlgebraicElement OrderLattice::basis_element(std::size_t k) const
{
    std::vector<ZZ> v(degree());
    for (std::size_t j = 0; j < degree(); j++)
        v[j] = basis.at(k, j);
    return AlgebraicElement::make(std::move(v), denom);
}

OrderLattice power_basis_order(const IntPoly& minpoly)
{
    if (!minpoly.is_monic())
        throw NotMonic("power_basis_order: minimal polynomial must be monic");
    OrderLattice o;
    o.minpoly = minpoly;
    o.denom = 1;
    o.basis = ZMat::identity(minpoly.degree());
    return o;
}

OrderLattice hnf_from_generators(const IntPoly& minpoly,
                                 const std::vector<AlgebraicElement>& gens)
{
    const std::size_t p = minpoly.degree();
    ZZ d = 1;
    for (const auto& g : gens) {
        if (g.dim() != p)
            throw Error("hnf_from_generators: generator dimension mismatch");
        d = lcm(d, g.den);
    }
    ZMat rows(gens.size(), p);
    for (std::size_t i = 0; i < gens.size(); i++) {
        const ZZ f = d / gens[i].den;
        for (std::size_t j = 0; j < p; j++)
            rows.at(i, j) = gens[i].num[j] * f;
    }
    ZMat h = hnf_lower(rows);
    // minimize the common denominator
    ZZ g = d;
    for (const auto& v : h.a)
        g = gcd(g, v);
    if (g > 1) {
        for (auto& v : h.a)
            mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
    }
    OrderLattice o;
    o.minpoly = minpoly;
    o.denom = std::move(d);
    o.basis = std::move(h);
    return o;
}

OrderLattice order_from_element_powers(const IntPoly& minpoly,
                                       const AlgebraicElement& g)
{
    std::vector<AlgebraicElement> gens;
    AlgebraicElement t = AlgebraicElement::from_integer(g.dim(), ZZ(1));
    for (std::size_t k = 0; k < static_cast<std::size_t>(minpoly.degree());
         k++) {
        gens.push_back(t);
        t = multiply_elements(t, g, minpoly);
    }
    return hnf_from_generators(minpoly, gens);
}

std::optional<std::vector<ZZ>> lattice_coords(const OrderLattice& o,
                                              const AlgebraicElement& x)
{
    const std::size_t p = o.degree();
    if (x.dim() != p)
        throw Error("lattice_coords: dimension mismatch");
    // w = denom * x must be an integer vector
    std::vector<ZZ> w(p);
    for (std::size_t j = 0; j < p; j++) {
        ZZ t = o.denom * x.num[j];
        if (!mpz_divisible_p(t.get_mpz_t(), x.den.get_mpz_t()))
            return std::nullopt;
        mpz_divexact(w[j].get_mpz_t(), t.get_mpz_t(), x.den.get_mpz_t());
    }
    std::vector<ZZ> y(p, ZZ(0));
    for (std::size_t k = p; k-- > 0;) {
        if (w[k] == 0)
            continue;
        if (!mpz_divisible_p(w[k].get_mpz_t(), o.basis.at(k, k).get_mpz_t()))
            return std::nullopt;
        mpz_divexact(y[k].get_mpz_t(), w[k].get_mpz_t(),
                     o.basis.at(k, k).get_mpz_t());
        for (std::size_t j = 0; j <= k; j++)
            w[j] -= y[k] * o.basis.at(k, j);
    }
    return y;
}

bool lattice_member(const OrderLattice& o, const AlgebraicElement& x)
{
    return lattice_coords(o, x).has_value();
}

OrderLattice product_order(const OrderLattice& o1, const OrderLattice& o2)
{
    if (o1.minpoly != o2.minpoly)
        throw MinpolyMismatch("product_order: different defining polynomials");
    const std::size_t p = o1.degree();
    std::vector<AlgebraicElement> gens;
    gens.reserve(p * p);
    for (std::size_t i = 0; i < p; i++) {
        const AlgebraicElement bi = o1.basis_element(i);
        for (std::size_t j = 0; j < p; j++)
            gens.push_back(
                multiply_elements(bi, o2.basis_element(j), o1.minpoly));
    }
    return hnf_from_generators(o1.minpoly, gens);
}

std::vector<ZZ> power_traces(const IntPoly& minpoly)
{
    const std::size_t n = minpoly.degree();
    std::vector<ZZ> s(n);
    s[0] = static_cast<unsigned long>(n);
    for (std::size_t k = 1; k < n; k++) {
        ZZ acc = ZZ(static_cast<unsigned long>(k)) * minpoly.coeff(n - k);
        for (std::size_t i = 1; i < k; i++)
            acc += minpoly.coeff(n - i) * s[k - i];
        s[k] = -acc;
    }
    return s;
}

ZZ discriminant(const OrderLattice& o)
{
    const std::size_t p = o.degree();
    const std::vector<ZZ> s = power_traces(o.minpoly);
    // Gram matrix of the scaled (integral) basis rows, then divide the
    // determinant by denom^(2p).
    std::vector<IntPoly> rows(p);
    for (std::size_t i = 0; i < p; i++) {
        std::vector<ZZ> v(p);
        for (std::size_t j = 0; j < p; j++)
            v[j] = o.basis.at(i, j);
        rows[i] = IntPoly(std::move(v));
    }
    ZMat gram(p, p);
    for (std::size_t i = 0; i < p; i++)
        for (std::size_t j = i; j < p; j++) {
            const IntPoly prod =
                divmod(mul(rows[i], rows[j]), o.minpoly).second;
            ZZ tr = 0;
            for (std::size_t k = 0; k < prod.c.size(); k++)
                tr += prod.c[k] * s[k];
            gram.at(i, j) = tr;
            gram.at(j, i) = tr;
        }
    const ZZ det = bareiss_det(gram);
    ZZ d2p;
    mpz_pow_ui(d2p.get_mpz_t(), o.denom.get_mpz_t(), 2 * p);
    if (!mpz_divisible_p(det.get_mpz_t(), d2p.get_mpz_t()))
        throw ConsistencyError("discriminant: value is not an integer");
    ZZ r;
    mpz_divexact(r.get_mpz_t(), det.get_mpz_t(), d2p.get_mpz_t());
    return r;
}

ZZ order_index(const OrderLattice& sub, const OrderLattice& sup)
{
    if (sub.minpoly != sup.minpoly)
        throw MinpolyMismatch("order_index: different defining polynomials");
    const std::size_t p = sub.degree();
    for (std::size_t k = 0; k < p; k++)
        if (!lattice_member(sup, sub.basis_element(k)))
            throw NotContained("order_index: first order is not contained "
                               "in the second");
    // |det(sub)| / |det(sup)| over Q, both triangular
    ZZ num = 1, den = 1;
    for (std::size_t k = 0; k < p; k++) {
        num *= sub.basis.at(k, k);
        den *= sup.basis.at(k, k);
    }
    ZZ dsub, dsup;
    mpz_pow_ui(dsup.get_mpz_t(), sup.denom.get_mpz_t(), p);
    mpz_pow_ui(dsub.get_mpz_t(), sub.denom.get_mpz_t(), p);
    num *= dsup;
    den *= dsub;
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw ConsistencyError("order_index: index is not an integer");
    ZZ r;
    mpz_divexact(r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return r;
}

bool is_ring(const OrderLattice& o)
{
    const std::size_t p = o.degree();
    if (!lattice_member(o, AlgebraicElement::from_integer(p, ZZ(1))))
        return false;
    for (std::size_t i = 0; i < p; i++)
        for (std::size_t j = i; j < p; j++) {
            const AlgebraicElement prod = multiply_elements(
                o.basis_element(i), o.basis_element(j), o.minpoly);
            if (!lattice_member(o, prod))
                return false;
        }
    return true;
}

ZMat multiplication_table(const OrderLattice& o)
{
    const std::size_t p = o.degree();
    ZMat m(p, p * p);
    for (std::size_t i = 0; i < p; i++)
        for (std::size_t j = 0; j < p; j++) {
            const AlgebraicElement prod = multiply_elements(
                o.basis_element(i), o.basis_element(j), o.minpoly);
            auto coords = lattice_coords(o, prod);
            if (!coords)
                throw Error("multiplication_table: lattice is not "
                            "multiplicatively closed");
            for (std::size_t t = 0; t < p; t++)
                m.at(i, j * p + t) = (*coords)[t];
        }
    return m;
}

namespace {

// product in order coordinates via the multiplication table, mod q
std::vector<ZZ> mult_in_order_mod(const ZMat& table, const std::vector<ZZ>& u,
                                  const std::vector<ZZ>& v, const ZZ& q)
{
    const std::size_t p = u.size();
    std::vector<ZZ> w(p, ZZ(0));
    for (std::size_t i = 0; i < p; i++) {
        if (u[i] == 0)
            continue;
        for (std::size_t j = 0; j < p; j++) {
            if (v[j] == 0)
                continue;
            const ZZ f = u[i] * v[j];
            for (std::size_t t = 0; t < p; t++)
                w[t] += f * table.at(i, j * p + t);
        }
    }
    for (auto& x : w)
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    return w;
}

} // namespace

ZMat q_radical_coords(const OrderLattice& o, const ZZ& q)
{
    const std::size_t p = o.degree();
    const ZMat table = multiplication_table(o);

    auto one = lattice_coords(o, AlgebraicElement::from_integer(p, ZZ(1)));
    if (!one)
        throw Error("q_radical_coords: order does not contain 1");

    // Frobenius x -> x^q on o/qO, row i = coords of (basis elt i)^q
    ZMat frob(p, p);
    for (std::size_t i = 0; i < p; i++) {
        std::vector<ZZ> base(p, ZZ(0));
        base[i] = 1;
        std::vector<ZZ> r = *one;
        for (long b = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 1;
             b >= 0; b--) {
            r = mult_in_order_mod(table, r, r, q);
            if (mpz_tstbit(q.get_mpz_t(), static_cast<unsigned long>(b)))
                r = mult_in_order_mod(table, r, base, q);
        }
        for (std::size_t t = 0; t < p; t++)
            frob.at(i, t) = r[t];
    }

    // iterate until q^k >= degree so the kernel catches all nilpotents
    unsigned k = 1;
    for (ZZ qk = q; qk < static_cast<unsigned long>(p); qk *= q)
        k++;
    ZMat fk = frob;
    for (unsigned i = 1; i < k; i++)
        fk = mul_mod(fk, frob, q);

    const ZMat ker = left_kernel_mod(fk, q);
    ZMat stacked(ker.rows + p, p);
    for (std::size_t i = 0; i < ker.rows; i++)
        for (std::size_t j = 0; j < p; j++)
            stacked.at(i, j) = ker.at(i, j);
    for (std::size_t i = 0; i < p; i++)
        stacked.at(ker.rows + i, i) = q;
    return hnf_lower(stacked);
}

OrderLattice multiplier_ring(const OrderLattice& o, const ZZ& q)
{
    const std::size_t p = o.degree();
    const ZMat table = multiplication_table(o);
    const ZMat rad = q_radical_coords(o, q);

    // For z in o with coordinates v over the order basis, z lies in
    // q * (multiplier ring of the radical) iff v * w == 0 mod q where
    // w expresses multiplication into radical coordinates.
    ZMat w(p, p * p);
    for (std::size_t i = 0; i < p; i++) {
        for (std::size_t k = 0; k < p; k++) {
            // coords over the order basis of (basis elt i) * g_k
            std::vector<ZZ> c(p, ZZ(0));
            for (std::size_t j = 0; j < p; j++) {
                if (rad.at(k, j) == 0)
                    continue;
                for (std::size_t t = 0; t < p; t++)
                    c[t] += rad.at(k, j) * table.at(i, j * p + t);
            }
            // back-substitute to coordinates over the radical basis
            std::vector<ZZ> y(p, ZZ(0));
            for (std::size_t t = p; t-- > 0;) {
                if (c[t] == 0)
                    continue;
                if (!mpz_divisible_p(c[t].get_mpz_t(),
                                     rad.at(t, t).get_mpz_t()))
                    throw ConsistencyError(
                        "multiplier_ring: radical is not an ideal");
                mpz_divexact(y[t].get_mpz_t(), c[t].get_mpz_t(),
                             rad.at(t, t).get_mpz_t());
                for (std::size_t j = 0; j <= t; j++)
                    c[j] -= y[t] * rad.at(t, j);
            }
            for (std::size_t t = 0; t < p; t++)
                w.at(i, k * p + t) = y[t];
        }
    }

    const ZMat ker = left_kernel_mod(w, q);
    ZMat stacked(ker.rows + p, p);
    for (std::size_t i = 0; i < ker.rows; i++)
        for (std::size_t j = 0; j < p; j++)
            stacked.at(i, j) = ker.at(i, j);
    for (std::size_t i = 0; i < p; i++)
        stacked.at(ker.rows + i, i) = q;
    const ZMat m = hnf_lower(stacked);

    // back to power-basis coordinates, divided by q
    std::vector<AlgebraicElement> gens;
    for (std::size_t i = 0; i < p; i++) {
        std::vector<ZZ> v(p, ZZ(0));
        for (std::size_t j = 0; j < p; j++) {
            if (m.at(i, j) == 0)
                continue;
            for (std::size_t t = 0; t < p; t++)
                v[t] += m.at(i, j) * o.basis.at(j, t);
        }
        gens.push_back(AlgebraicElement::make(std::move(v), q * o.denom));
    }
    return hnf_from_generators(o.minpoly, gens);
}

bool is_q_maximal(const OrderLattice& o, const ZZ& q)
{
    return multiplier_ring(o, q) == o;
}

std::string to_string(const AlgebraicElement& x, const std::string& var)
{
    std::ostringstream os;
    const IntPoly n(x.num);
    if (x.den == 1)
        os << to_string(n, var);
    else
        os << "(" << to_string(n, var) << ")/" << x.den.get_str();
    return os.str();
}

} // namespace pureorder
