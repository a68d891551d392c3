#include "doctest.h"

#include "pureorder/dedekind.hpp"
#include "pureorder/radical.hpp"

using namespace pureorder;

namespace {

AlgebraicElement el(std::vector<long> num, long den)
{
    std::vector<ZZ> v;
    for (long x : num)
        v.emplace_back(x);
    return AlgebraicElement::make(std::move(v), ZZ(den));
}

} // namespace

TEST_CASE("squarefree prime factors leave Z[alpha] maximal")
{
    for (long a : {2, 6, 10, 21}) {
        const IntPoly t = IntPoly::power_minus(3, ZZ(a));
        for (long q : {2, 3, 5, 7})
            if (a % q == 0)
                CHECK(dedekind_test(t, ZZ(q)).q_maximal);
    }
}

TEST_CASE("the worked q = 2 case of X^3 - 4")
{
    const IntPoly t = IntPoly::power_minus(3, ZZ(4));
    const DedekindReport rep = dedekind_test(t, ZZ(2));
    CHECK_FALSE(rep.q_maximal);
    CHECK(rep.m == 1);
    // F = (X * X^2 - (X^3 - 4))/2 = 2, zero mod 2, so the gcd is X
    CHECK(rep.f == IntPoly::constant(ZZ(2)));
    CHECK(rep.gcd_fgh == ModPoly::x(ZZ(2)));
    REQUIRE(rep.u.has_value());
    CHECK(*rep.u == IntPoly::monomial(ZZ(1), 2));

    const OrderLattice bigger = enlarge(t, rep);
    CHECK(lattice_member(bigger, el({0, 0, 1}, 2)));
    CHECK(bigger == hnf_from_generators(t, {el({1, 0, 0}, 1),
                                            el({0, 1, 0}, 1),
                                            el({0, 0, 1}, 2)}));
    CHECK(discriminant(bigger) * 4 == discriminant(power_basis_order(t)));
    CHECK(order_index(power_basis_order(t), bigger) == 2);
    CHECK_THROWS_AS(enlarge(t, dedekind_test(t, ZZ(3))), AlreadyMaximal);
}

TEST_CASE("the shifted generator detects the Wieferich failure at p")
{
    // a = 19: 3^2 | 19^2 - 1, so Z[beta] is not 3-maximal
    CHECK_FALSE(
        dedekind_test(IntPoly::shifted_radical(3, ZZ(19)), ZZ(3)).q_maximal);
    // non-Wieferich bases stay maximal at p
    for (long a : {2, 5, 6, 7})
        CHECK(dedekind_test(IntPoly::shifted_radical(3, ZZ(a)), ZZ(3))
                  .q_maximal);
    for (long a : {2, 3, 11})
        CHECK(dedekind_test(IntPoly::shifted_radical(5, ZZ(a)), ZZ(5))
                  .q_maximal);
    CHECK_FALSE(
        dedekind_test(IntPoly::shifted_radical(5, ZZ(7)), ZZ(5)).q_maximal);
    CHECK_THROWS_AS(dedekind_test(IntPoly({ZZ(1), ZZ(2)}), ZZ(3)), NotMonic);
}

TEST_CASE("the Wieferich enlargement of Z[beta]")
{
    for (auto [p, a] : std::vector<std::pair<unsigned, long>>{
             {3, 19}, {5, 7}, {11, 3}}) {
        const IntPoly b = IntPoly::shifted_radical(p, ZZ(a));
        const DedekindReport rep = dedekind_test(b, ZZ(p));
        REQUIRE_FALSE(rep.q_maximal);
        CHECK(rep.m == 1);

        const OrderLattice bigger = enlarge(b, rep);
        // basis beta^i (i <= p-2) plus beta^(p-1)/p over the beta
        // power basis
        std::vector<AlgebraicElement> gens;
        for (unsigned k = 0; k + 1 < p; k++)
            gens.push_back(AlgebraicElement::alpha_power(p, k));
        gens.push_back(
            scale(AlgebraicElement::alpha_power(p, p - 1), ZZ(1), ZZ(p)));
        CHECK(bigger == hnf_from_generators(b, gens));

        // disc drops by p^2 and the index is p
        ZZ expect;
        mpz_pow_ui(expect.get_mpz_t(), ZZ(a).get_mpz_t(), p - 1);
        ZZ pp;
        mpz_pow_ui(pp.get_mpz_t(), ZZ(p).get_mpz_t(), p - 2);
        expect *= pp;
        if (((p - 1) / 2) % 2)
            expect = -expect;
        CHECK(discriminant(bigger) == expect);
        CHECK(order_index(power_basis_order(b), bigger) == p);
    }
}

TEST_CASE("a gcd of degree two enlarges by q^2")
{
    // X^4 + 2X^3 + 3X^2 - 2X + 1 = (X^2+X+1)^2 - 4X is irreducible
    // over Z and congruent to a square mod 2 with F vanishing mod 2
    const IntPoly t({ZZ(1), ZZ(-2), ZZ(3), ZZ(2), ZZ(1)});
    const DedekindReport rep = dedekind_test(t, ZZ(2));
    REQUIRE_FALSE(rep.q_maximal);
    CHECK(rep.m == 2);
    CHECK(rep.gcd_fgh == ModPoly(ZZ(2), {ZZ(1), ZZ(1), ZZ(1)}));
    REQUIRE(rep.u.has_value());
    CHECK(rep.u->degree() == t.degree() - 2);  // deg U = deg T - m

    const OrderLattice bigger = enlarge(t, rep);
    CHECK(order_index(power_basis_order(t), bigger) == 4);
    CHECK(discriminant(bigger) * 16 == discriminant(power_basis_order(t)));
    CHECK(is_ring(bigger));
}

TEST_CASE("verdict and gcd degree are independent of the lifts")
{
    const std::vector<std::pair<IntPoly, long>> instances = {
        {IntPoly::power_minus(3, ZZ(4)), 2},
        {IntPoly::power_minus(3, ZZ(12)), 2},
        {IntPoly::power_minus(5, ZZ(16)), 2},
        {IntPoly::power_minus(5, ZZ(175)), 5},
        {IntPoly::shifted_radical(3, ZZ(19)), 3},
        {IntPoly::shifted_radical(5, ZZ(7)), 5},
        {IntPoly::power_minus(3, ZZ(10)), 2},
        {IntPoly::power_minus(3, ZZ(19)), 19},
    };
    for (const auto& [t, q] : instances) {
        const DedekindReport canon = dedekind_test(t, ZZ(q));
        for (std::uint64_t seed = 0; seed < 100; seed++) {
            const DedekindReport r = dedekind_test_randomized(t, ZZ(q), seed);
            CHECK(r.q_maximal == canon.q_maximal);
            CHECK(r.m == canon.m);
        }
    }
}

TEST_CASE("the enlarged lattice is independent of the U lift")
{
    const IntPoly t = IntPoly::power_minus(3, ZZ(4));
    const DedekindReport rep = dedekind_test(t, ZZ(2));
    const OrderLattice canon = enlarge(t, rep);
    // any monic lift of the same residue gives the same lattice
    for (long c0 : {0, 2, -4})
        for (long c1 : {0, -2, 6}) {
            const IntPoly u({ZZ(c0), ZZ(c1), ZZ(1)});
            CHECK(enlarge_with_lift(t, rep, u) == canon);
        }
}

TEST_CASE("iterate_to_maximal reaches the maximal order")
{
    // squarefree non-Wieferich: nothing to do
    {
        const IntPoly t = IntPoly::power_minus(3, ZZ(2));
        CHECK(iterate_to_maximal(t, {ZZ(2), ZZ(3)}) == power_basis_order(t));
    }
    // one enlargement at q = 2
    {
        const IntPoly t = IntPoly::power_minus(3, ZZ(4));
        const OrderLattice o = iterate_to_maximal(t, {ZZ(2), ZZ(3)});
        CHECK(o == assemble_max_order(normalize_field(3, ZZ(4))).order);
        CHECK(is_q_maximal(o, ZZ(2)));
    }
    // Wieferich base: disc -3 * 19^2
    {
        const IntPoly t = IntPoly::power_minus(3, ZZ(19));
        const OrderLattice o = iterate_to_maximal(t, {ZZ(3), ZZ(19)});
        CHECK(discriminant(o) == -1083);
    }
    // deep 2-power: several multiplier-ring rounds after the first
    // Dedekind step
    {
        const IntPoly t = IntPoly::power_minus(5, ZZ(16));
        const OrderLattice o = iterate_to_maximal(t, {ZZ(2), ZZ(5)});
        CHECK(discriminant(o) ==
              disc_formula(normalize_field(5, ZZ(16))).value());
    }
}
