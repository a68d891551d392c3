#ifndef PUREORDER_WIEFERICH_WITNESS_HPP
#define PUREORDER_WIEFERICH_WITNESS_HPP

#include <string>
#include <vector>

#include "pureorder/exactmath.hpp"
#include "pureorder/linalg.hpp"
#include "pureorder/orders.hpp"

namespace pureorder {

// Multiplication by beta = alpha - a on the basis {beta^i}: ones on
// the subdiagonal, last column (a - a^p, -C(p,1) a^(p-1), ...,
// -C(p,p-1) a)^T, zeros elsewhere.
struct CompanionMatrix {
    unsigned p = 0;
    ZZ a;
    ZMat m;
};

CompanionMatrix companion_matrix(unsigned p, const ZZ& a);

struct StructureCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Entrywise congruence structure of M^k for a Wieferich pair (p, a):
// the shifted identity block, the first-row divisibility by
// p(a - a^p), the mod-p^2 vanishing region, the binomial congruence
// region, the -p diagonal band, the p >= 5 nonvanishing of entry
// (2, p) mod p^3, and for k = p-1 the full mod-p^2 matrix shape.
struct StructureReport {
    unsigned p = 0;
    ZZ a;
    unsigned k = 0;
    std::vector<StructureCheck> checks;

    bool all_pass() const;
};

// Verifies every region on the exactly computed power and throws
// CongruenceViolation naming the first failing entry. A throw here
// would contradict proven congruences, so it must never fire on a
// genuine Wieferich pair.
StructureReport matrix_power_structure(unsigned p, const ZZ& a, unsigned k);

// chi = characteristic polynomial of M^(p-1)/p, i.e. of
// beta' = beta^(p-1)/p. Integral with chi == X (X+1)^(p-1) mod p on
// Wieferich input; Z[beta'] is p-maximal iff p^2 does not divide
// chi(-1), which is guaranteed for p >= 5.
struct ChiReport {
    unsigned p = 0;
    ZZ a;
    IntPoly chi;
    ZZ chi_minus1;
    bool congruence_ok = false;
    bool p_maximal_zbetaprime = false;
};

ChiReport chi_of_beta_prime(unsigned p, const ZZ& a);

// The p-maximal subring factor of the Wieferich case: Z[beta'] for
// p >= 5, Z[beta'] * Z[alpha] for p = 3; `verified` is the radical
// multiplier-ring confirmation.
struct PMaximalFactor {
    std::vector<AlgebraicElement> generators;
    OrderLattice lattice;
    bool verified = false;
};

PMaximalFactor p_maximal_factor(unsigned p, const ZZ& a);

} // namespace pureorder

#endif
