#include "doctest.h"

#include <random>

#include "pureorder/oracle.hpp"

using namespace pureorder;

TEST_CASE("round-2 maximal orders on the pinned fields")
{
    {
        const OrderLattice o = round2_max_order(3, ZZ(2));
        CHECK(o == power_basis_order(IntPoly::power_minus(3, ZZ(2))));
    }
    {
        const OrderLattice o = round2_max_order(3, ZZ(4));
        CHECK(o == assemble_max_order(normalize_field(3, ZZ(4))).order);
        CHECK(o.denom == 2);
    }
    {
        // equals the span of the explicit degree-11 basis
        const PureField f = normalize_field(11, ZZ(9));
        std::vector<AlgebraicElement> gens;
        for (const auto& ne : integral_basis(f))
            gens.push_back(ne.elem);
        CHECK(round2_max_order(11, ZZ(9)) ==
              hnf_from_generators(f.minpoly(), gens));
    }
}

TEST_CASE("round-2 iteration strictly divides the discriminant by squares")
{
    // deep power of 2: several multiplier steps at q = 2
    OrderLattice o = power_basis_order(IntPoly::power_minus(5, ZZ(16)));
    ZZ disc = discriminant(o);
    int steps = 0;
    for (;;) {
        const OrderLattice next = multiplier_ring(o, ZZ(2));
        if (next == o)
            break;
        const ZZ nd = discriminant(next);
        const ZZ ratio = disc / nd;
        CHECK(disc == nd * ratio);
        ZZ root;
        CHECK(mpz_root(root.get_mpz_t(), ratio.get_mpz_t(), 2));
        CHECK(ratio > 1);
        o = next;
        disc = nd;
        steps++;
    }
    CHECK(steps >= 2);
    CHECK(is_q_maximal(o, ZZ(2)));
}

TEST_CASE("pipeline and oracle agree on a mini corpus")
{
    for (unsigned p : {3u, 5u}) {
        const long hi = p == 3 ? 60 : 40;
        for (long a = 2; a <= hi; a++) {
            PureField f;
            try {
                f = normalize_field(p, ZZ(a));
            } catch (const ReducibleDefiningPoly&) {
                continue;
            }
            CHECK(assemble_max_order(f).order == round2_max_order(p, ZZ(a)));
        }
    }
}

TEST_CASE("pipeline and oracle agree on randomized larger bases")
{
    std::mt19937_64 rng(424242);
    auto probe = [&](unsigned p, long a) {
        PureField f;
        try {
            f = normalize_field(p, ZZ(a));
        } catch (const ReducibleDefiningPoly&) {
            return;
        }
        CHECK(assemble_max_order(f).order == round2_max_order(p, ZZ(a)));
    };
    for (int i = 0; i < 40; i++)
        probe(3, 2 + static_cast<long>(rng() % 100000));
    for (int i = 0; i < 20; i++)
        probe(5, 2 + static_cast<long>(rng() % 5000));
    for (int i = 0; i < 8; i++)
        probe(7, 2 + static_cast<long>(rng() % 800));
    for (int i = 0; i < 10; i++)
        probe(3, -(static_cast<long>(2 + rng() % 50000)));
    // high p-exponents in the base
    probe(3, 18);
    probe(3, 441);
    probe(5, 1875);
    probe(7, 196);
    // Wieferich composites for p = 3 live in 1 or 8 mod 9
    int wief = 0;
    for (long a = 10; a < 4000 && wief < 8; a++) {
        if (a % 9 != 1 && a % 9 != 8)
            continue;
        PureField f;
        try {
            f = normalize_field(3, ZZ(a));
        } catch (const ReducibleDefiningPoly&) {
            continue;
        }
        if (!f.wieferich)
            continue;
        probe(3, a);
        wief++;
    }
    CHECK(wief == 8);
}

TEST_CASE("audit passes on honest results")
{
    {
        const AuditReport rep =
            audit(assemble_max_order(normalize_field(11, ZZ(9))));
        CHECK(rep.pass);
        // index of Z[alpha] in the maximal order is 3^5 * 11
        bool saw_index = false;
        for (const auto& c : rep.checks)
            if (c.name == "index_identity") {
                CHECK(c.detail == "index 2673");
                saw_index = true;
            }
        CHECK(saw_index);
    }
    {
        const AuditReport rep =
            audit(assemble_max_order(normalize_field(3, ZZ(19))));
        CHECK(rep.pass);
    }
    {
        const AuditReport rep =
            audit(assemble_max_order(normalize_field(3, ZZ(12))));
        CHECK(rep.pass);
    }
}

TEST_CASE("audit negative controls fail exactly the intended check")
{
    // dropping the denominator of the last basis element keeps every
    // element integral but shrinks the span
    {
        MaxOrderResult r = assemble_max_order(normalize_field(3, ZZ(4)));
        REQUIRE(r.basis[2].elem.den == 2);
        r.basis[2].elem.den = 1;
        const AuditReport rep = audit(r);
        CHECK_FALSE(rep.pass);
        for (const auto& c : rep.checks) {
            if (c.name == "lattice_equality")
                CHECK_FALSE(c.pass);
            else
                CHECK(c.pass);
        }
    }
    // corrupting the stored discriminant trips only the Gram
    // comparison
    {
        MaxOrderResult r = assemble_max_order(normalize_field(3, ZZ(19)));
        r.disc.factors[1].second += 1;
        const AuditReport rep = audit(r);
        CHECK_FALSE(rep.pass);
        for (const auto& c : rep.checks) {
            if (c.name == "disc_formula_vs_gram")
                CHECK_FALSE(c.pass);
            else
                CHECK(c.pass);
        }
    }
}
