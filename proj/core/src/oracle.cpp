#include "pureorder/oracle.hpp"

#include <sstream>

namespace pureorder {

OrderLattice round2_max_order(unsigned p, const ZZ& a,
                              const FactorBudget& budget)
{
    const PureField field = normalize_field(p, a, budget);
    OrderLattice o = power_basis_order(field.minpoly());
    const ZZ disc = discriminant(o);
    const Factorization df = factorize(disc, budget);
    for (const auto& [q, e] : df.factors) {
        if (e < 2)
            continue;
        for (;;) {
            OrderLattice next = multiplier_ring(o, q);
            if (next == o)
                break;
            o = std::move(next);
        }
    }
    return o;
}

namespace {

void add_check(AuditReport& rep, const std::string& name, bool pass,
               std::string detail = {})
{
    rep.checks.push_back({name, pass, std::move(detail)});
}

} // namespace

AuditReport audit(const MaxOrderResult& result, const FactorBudget& budget)
{
    const PureField& field = result.field;
    const IntPoly minpoly = field.minpoly();
    AuditReport rep;
    {
        std::ostringstream id;
        id << "p=" << field.p << ", a=" << field.a.get_str();
        rep.field_id = id.str();
    }

    add_check(rep, "ring_closure", is_ring(result.order));

    {
        bool ok = true;
        std::string bad;
        for (const auto& ne : result.basis)
            if (!is_integral(ne.elem, minpoly)) {
                ok = false;
                bad = ne.name;
                break;
            }
        add_check(rep, "basis_integrality", ok,
                  ok ? "" : "non-integral element " + bad);
    }

    {
        ZZ gram;
        bool ok = false;
        std::string detail;
        try {
            gram = discriminant(result.order);
            ok = gram == result.disc.value();
            detail = "gram " + gram.get_str() + ", stored " +
                     result.disc.value().get_str();
        } catch (const Error& e) {
            detail = e.what();
        }
        add_check(rep, "disc_formula_vs_gram", ok, detail);
    }

    {
        bool ok = true;
        std::string bad;
        std::vector<ZZ> qs{ZZ(field.p)};
        for (std::size_t j = 0; j < field.num_primes(); j++)
            if (field.prime(j) != field.p)
                qs.push_back(field.prime(j));
        for (const ZZ& q : qs)
            if (!is_q_maximal(result.order, q)) {
                ok = false;
                bad = q.get_str();
                break;
            }
        add_check(rep, "q_maximality", ok,
                  ok ? "" : "not maximal at " + bad);
    }

    {
        bool ok = false;
        std::string detail;
        try {
            std::vector<AlgebraicElement> belems;
            for (const auto& ne : result.basis)
                belems.push_back(ne.elem);
            const OrderLattice span = hnf_from_generators(minpoly, belems);
            const OrderLattice oracle =
                round2_max_order(field.p, field.a, budget);
            const bool sv = span == result.order;
            const bool ov = oracle == result.order;
            ok = sv && ov;
            if (!sv)
                detail = "basis span differs from the stored order";
            else if (!ov)
                detail = "round-2 order differs from the stored order";
        } catch (const Error& e) {
            detail = e.what();
        }
        add_check(rep, "lattice_equality", ok, detail);
    }

    {
        bool ok = false;
        std::string detail;
        try {
            const OrderLattice za = power_basis_order(minpoly);
            const ZZ idx = order_index(za, result.order);
            ok = discriminant(za) == discriminant(result.order) * idx * idx;
            detail = "index " + idx.get_str();
        } catch (const Error& e) {
            detail = e.what();
        }
        add_check(rep, "index_identity", ok, detail);
    }

    rep.pass = true;
    for (const auto& c : rep.checks)
        rep.pass = rep.pass && c.pass;
    return rep;
}

} // namespace pureorder
