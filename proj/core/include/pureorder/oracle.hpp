#ifndef PUREORDER_ORACLE_HPP
#define PUREORDER_ORACLE_HPP

#include <string>
#include <vector>

#include "pureorder/radical.hpp"

namespace pureorder {

// Independent maximal-order computation: starting from Z[alpha], for
// every prime whose square divides the (Gram-computed, then factored)
// discriminant, replace the order by the multiplier ring of its
// q-radical until stable. Never consumes the closed product/
// discriminant formulas it is used to check.
OrderLattice round2_max_order(unsigned p, const ZZ& a,
                              const FactorBudget& budget = {});

struct AuditCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct AuditReport {
    std::string field_id;
    std::vector<AuditCheck> checks;
    bool pass = false;  // conjunction of all checks
};

// Certifies a MaxOrderResult without trusting how it was produced:
// ring closure, integrality of every basis element, the closed
// discriminant form against the trace Gram determinant, q-maximality
// at every relevant prime, three-way lattice equality (basis span,
// stored order, round-2 order), and the index identity
// disc(Z[alpha]) = disc(O) * index^2.
AuditReport audit(const MaxOrderResult& result,
                  const FactorBudget& budget = {});

} // namespace pureorder

#endif
