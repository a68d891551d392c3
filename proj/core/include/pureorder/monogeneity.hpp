#ifndef PUREORDER_MONOGENEITY_HPP
#define PUREORDER_MONOGENEITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "pureorder/radical.hpp"

namespace pureorder {

enum class MonoStatus {
    Monogenic,
    NotMonogenicWithinBound,
    CriterionInapplicable,
};

// Every Monogenic verdict is post-verified by lattice equality of
// Z[generator] with the maximal order; a generator that fails the
// check raises ConsistencyError instead of being reported.
struct MonogeneityVerdict {
    MonoStatus status = MonoStatus::CriterionInapplicable;
    std::optional<NamedElement> generator;
    std::string equation;  // searched equation instance, when any
    std::vector<std::pair<ZZ, ZZ>> solutions;
    ZZ bound;  // search bound used; 0 when no search ran
};

// Sufficient criterion: when Z[alpha] is p-maximal and all reduced
// exponents agree, alpha^u / prod q_j^(v_j) generates the maximal
// order. Only one direction holds, so the negative outcome is
// CriterionInapplicable rather than a non-monogeneity claim.
MonogeneityVerdict uniform_exponent_criterion(const PureField& field);

// The p = 3, a = q1 q2^2 two-sided criterion: monogenic iff
//   t1^3 q2 - t2^3 q1 = 1                      (3 not Wieferich to a)
//   (3 s1 - 2 s2 q1 q2)^3 q2 - s2^3 q1 = 9     (3 Wieferich to a)
// has an integer solution. The free variable is searched up to
// `bound`; the cube term is recovered exactly by an integer
// cube-root test.
MonogeneityVerdict cubic_mixed_search(const ZZ& q1, const ZZ& q2,
                                      const ZZ& bound = ZZ(10000),
                                      const FactorBudget& budget = {});

// All equation solutions with the searched variable up to the bound,
// without lattice verification. Exposed so the test suite can compare
// the cube-root-accelerated search against plain brute force.
std::vector<std::pair<ZZ, ZZ>>
cubic_equation_solutions(const ZZ& q1, const ZZ& q2, bool wieferich_branch,
                         const ZZ& bound);

} // namespace pureorder

#endif
