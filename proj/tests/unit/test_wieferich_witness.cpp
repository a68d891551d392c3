#include "doctest.h"

#include "pureorder/radical.hpp"
#include "pureorder/wieferich_witness.hpp"

using namespace pureorder;

namespace {

// first Wieferich bases per degree that also give a valid field,
// scanned rather than hardcoded
std::vector<ZZ> wieferich_bases(unsigned p, std::size_t count, long limit)
{
    std::vector<ZZ> bases;
    for (long r = 2; r <= limit && bases.size() < count; r++) {
        if (r % p == 0)
            continue;
        ZZ root;
        if (mpz_root(root.get_mpz_t(), ZZ(r).get_mpz_t(), p))
            continue;  // reducible defining polynomial
        if (is_wieferich(ZZ(p), ZZ(r)))
            bases.emplace_back(r);
    }
    return bases;
}

} // namespace

TEST_CASE("companion matrix layout")
{
    const CompanionMatrix cm = companion_matrix(3, ZZ(19));
    // last column (a - a^3, -3a^2, -3a)
    CHECK(cm.m.at(0, 2) == 19 - 6859);
    CHECK(cm.m.at(1, 2) == -3 * 361);
    CHECK(cm.m.at(2, 2) == -3 * 19);
    // subdiagonal ones, first row zero off the corner
    CHECK(cm.m.at(1, 0) == 1);
    CHECK(cm.m.at(2, 1) == 1);
    CHECK(cm.m.at(0, 0) == 0);
    CHECK(cm.m.at(0, 1) == 0);
    CHECK(cm.m.at(1, 1) == 0);
    CHECK(cm.m.at(2, 0) == 0);

    // B(M) = 0: the matrix satisfies the minimal polynomial of beta
    for (auto [p, a] : std::vector<std::pair<unsigned, long>>{
             {3, 19}, {5, 7}, {7, 5}}) {
        const IntPoly b = IntPoly::shifted_radical(p, ZZ(a));
        const ZMat m = companion_matrix(p, ZZ(a)).m;
        ZMat acc(p, p);
        ZMat power = ZMat::identity(p);
        for (std::size_t i = 0; i < b.c.size(); i++) {
            for (std::size_t r = 0; r < p; r++)
                for (std::size_t c = 0; c < p; c++)
                    acc.at(r, c) += b.c[i] * power.at(r, c);
            if (static_cast<int>(i) < b.degree())
                power = mul(power, m);
        }
        CHECK(acc == ZMat(p, p));
    }
}

TEST_CASE("power structure of the companion matrix")
{
    // the worked p = 3, a = 19 entry: (2,3) of M^2 is 27 * 19 * 107
    const ZMat m2 = pow(companion_matrix(3, ZZ(19)).m, 2);
    CHECK(m2.at(1, 2) == ZZ(27) * 19 * 107);
    CHECK(matrix_power_structure(3, ZZ(19), 2).all_pass());

    // (11, 3): every region at k = 10, and (5, 7): the diagonal band
    CHECK(matrix_power_structure(11, ZZ(3), 10).all_pass());
    {
        const ZMat m4 = pow(companion_matrix(5, ZZ(7)).m, 4);
        for (unsigned i = 2; i <= 5; i++) {
            const ZZ d = m4.at(i - 1, i - 1);
            CHECK((d + 5) % 25 == 0);
        }
        CHECK(matrix_power_structure(5, ZZ(7), 4).all_pass());
    }

    // scanned pairs for every small degree, all k
    for (unsigned p : {3u, 5u, 7u, 11u, 13u}) {
        const auto bases = wieferich_bases(p, 2, 2000);
        REQUIRE(!bases.empty());
        for (const ZZ& a : bases)
            for (unsigned k = 1; k < p; k++)
                CHECK(matrix_power_structure(p, a, k).all_pass());
    }

    CHECK_THROWS_AS(matrix_power_structure(3, ZZ(2), 1), NotWieferich);
    CHECK_THROWS_AS(matrix_power_structure(3, ZZ(19), 0),
                    std::invalid_argument);
}

TEST_CASE("characteristic polynomial of beta'")
{
    // closed cubic form: X^3 - a^2 X^2 + a^2 (a^2+2)/3 X - a^2 (a^2-1)^2/27
    for (const ZZ& a : wieferich_bases(3, 4, 500)) {
        const ChiReport rep = chi_of_beta_prime(3, a);
        const ZZ a2 = a * a;
        CHECK(rep.chi == IntPoly({ZZ(-a2 * (a2 - 1) * (a2 - 1) / 27),
                                  ZZ(a2 * (a2 + 2) / 3), ZZ(-a2), ZZ(1)}));
        CHECK(rep.congruence_ok);
        // 3-maximality of Z[beta'] is equivalent to (a^2-1)/9 != 1 mod 3
        const ZZ w = (a2 - 1) / 9;
        CHECK(rep.p_maximal_zbetaprime == (w % 3 != 1));
    }

    // a = 19 is the documented failure: (361-1)/9 = 40 = 1 mod 3
    const ChiReport r19 = chi_of_beta_prime(3, ZZ(19));
    CHECK(r19.chi == IntPoly({ZZ(-1732800), ZZ(43681), ZZ(-361), ZZ(1)}));
    CHECK_FALSE(r19.p_maximal_zbetaprime);
    CHECK(r19.chi_minus1 == -1776843);

    // p >= 5: chi(-1) is never divisible by p^2
    for (unsigned p : {5u, 7u, 11u, 13u})
        for (const ZZ& a : wieferich_bases(p, 2, 2000)) {
            const ChiReport rep = chi_of_beta_prime(p, a);
            CHECK(rep.congruence_ok);
            CHECK(rep.p_maximal_zbetaprime);
            CHECK(rep.chi.is_monic());
            CHECK(rep.chi.degree() == static_cast<int>(p));
        }

    CHECK_THROWS_AS(chi_of_beta_prime(3, ZZ(2)), NotWieferich);
}

TEST_CASE("chi equals the independently computed minimal polynomial")
{
    for (auto [p, a] : std::vector<std::pair<unsigned, long>>{
             {3, 19}, {3, 26}, {5, 7}, {11, 3}}) {
        REQUIRE(is_wieferich(ZZ(p), ZZ(a)));
        const IntPoly t = IntPoly::power_minus(p, ZZ(a));
        const AlgebraicElement beta =
            sub(AlgebraicElement::alpha_power(p, 1),
                AlgebraicElement::from_integer(p, ZZ(a)));
        const AlgebraicElement bp =
            scale(element_pow(beta, p - 1, t), ZZ(1), ZZ(p));
        CHECK(minimal_polynomial(bp, t) == chi_of_beta_prime(p, ZZ(a)).chi);
    }
}

TEST_CASE("the p-maximal subring factor")
{
    {
        const PMaximalFactor f = p_maximal_factor(3, ZZ(19));
        CHECK(f.generators.size() == 2);
        CHECK(f.verified);
        CHECK(discriminant(f.lattice) == -3 * 19 * 19);
    }
    {
        const PMaximalFactor f = p_maximal_factor(5, ZZ(7));
        CHECK(f.generators.size() == 1);
        CHECK(f.verified);
    }
    {
        const PMaximalFactor f = p_maximal_factor(11, ZZ(3));
        CHECK(f.generators.size() == 1);
        CHECK(f.verified);
    }
    // Z[beta'] alone may fail p-maximality only for p = 3
    {
        const IntPoly t = IntPoly::power_minus(3, ZZ(19));
        const AlgebraicElement beta =
            sub(AlgebraicElement::alpha_power(3, 1),
                AlgebraicElement::from_integer(3, ZZ(19)));
        const AlgebraicElement bp =
            scale(element_pow(beta, 2, t), ZZ(1), ZZ(3));
        CHECK_FALSE(is_q_maximal(order_from_element_powers(t, bp), ZZ(3)));
    }
}
