#include "pureorder/dedekind.hpp"

#include <random>

namespace pureorder {

namespace {

// (a - b)/q with every coefficient division exact
IntPoly sub_div_q(const IntPoly& a, const IntPoly& b, const ZZ& q)
{
    IntPoly d = sub(a, b);
    for (auto& v : d.c) {
        if (!mpz_divisible_p(v.get_mpz_t(), q.get_mpz_t()))
            throw Error("dedekind: G*H is not congruent to T mod q");
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
    }
    return d;
}

// q * (random polynomial of degree < deg), so adding it to a monic
// lift keeps it a monic lift
IntPoly random_lift_noise(int deg, const ZZ& q, std::mt19937_64& rng)
{
    if (deg <= 0)
        return {};
    std::vector<ZZ> v(static_cast<std::size_t>(deg));
    std::uniform_int_distribution<int> d(-3, 3);
    for (auto& x : v)
        x = q * d(rng);
    return IntPoly(std::move(v));
}

DedekindReport dedekind_test_impl(const IntPoly& t, const ZZ& q,
                                  std::mt19937_64* rng)
{
    if (!t.is_monic())
        throw NotMonic("dedekind_test: T must be monic");
    DedekindReport rep;
    rep.q = q;
    rep.t = t;

    const auto factors = factor_mod_q(t, q);
    ModPoly gbar(q, {ZZ(1)});
    for (const auto& [irr, e] : factors) {
        (void)e;
        gbar = mul(gbar, irr);
    }
    const ModPoly tbar = ModPoly::from_int_poly(t, q);
    const ModPoly hbar = divmod(tbar, gbar).first;

    rep.g = gbar.lift();
    rep.h = hbar.lift();
    if (rng) {
        rep.g = add(rep.g, random_lift_noise(rep.g.degree(), q, *rng));
        rep.h = add(rep.h, random_lift_noise(rep.h.degree(), q, *rng));
    }
    rep.f = sub_div_q(mul(rep.g, rep.h), t, q);

    const ModPoly fbar = ModPoly::from_int_poly(rep.f, q);
    rep.gcd_fgh = poly_gcd_mod_q(poly_gcd_mod_q(fbar, gbar), hbar);
    rep.m = static_cast<unsigned>(rep.gcd_fgh.degree());
    rep.q_maximal = rep.m == 0;
    if (!rep.q_maximal)
        rep.u = divmod(tbar, rep.gcd_fgh).first.lift();
    return rep;
}

} // namespace

DedekindReport dedekind_test(const IntPoly& t, const ZZ& q)
{
    return dedekind_test_impl(t, q, nullptr);
}

DedekindReport dedekind_test_randomized(const IntPoly& t, const ZZ& q,
                                        std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return dedekind_test_impl(t, q, &rng);
}

OrderLattice enlarge_with_lift(const IntPoly& t, const DedekindReport& report,
                               const IntPoly& u)
{
    if (report.q_maximal)
        throw AlreadyMaximal("enlarge: Z[theta] is already q-maximal");
    const std::size_t p = t.degree();
    const AlgebraicElement theta = AlgebraicElement::alpha_power(p, 1);
    const AlgebraicElement eta =
        scale(eval_poly_at(u, theta, t), ZZ(1), report.q);
    std::vector<AlgebraicElement> gens;
    AlgebraicElement tp = AlgebraicElement::from_integer(p, ZZ(1));
    for (std::size_t k = 0; k < p; k++) {
        gens.push_back(tp);
        gens.push_back(multiply_elements(eta, tp, t));
        tp = multiply_elements(tp, theta, t);
    }
    return hnf_from_generators(t, gens);
}

OrderLattice enlarge(const IntPoly& t, const DedekindReport& report)
{
    if (report.q_maximal)
        throw AlreadyMaximal("enlarge: Z[theta] is already q-maximal");
    return enlarge_with_lift(t, report, *report.u);
}

OrderLattice iterate_to_maximal(const IntPoly& t, const std::vector<ZZ>& primes)
{
    OrderLattice o = power_basis_order(t);
    // one Dedekind step per prime while the order is still Z[theta]
    for (const ZZ& q : primes) {
        const DedekindReport rep = dedekind_test(t, q);
        if (!rep.q_maximal)
            o = product_order(o, enlarge(t, rep));
    }
    // hand off to the multiplier-ring loop
    for (const ZZ& q : primes) {
        for (;;) {
            OrderLattice next = multiplier_ring(o, q);
            if (next == o)
                break;
            o = std::move(next);
        }
    }
    return o;
}

} // namespace pureorder
