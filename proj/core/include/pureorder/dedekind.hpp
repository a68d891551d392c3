#ifndef PUREORDER_DEDEKIND_HPP
#define PUREORDER_DEDEKIND_HPP

#include <cstdint>
#include <optional>

#include "pureorder/exactmath.hpp"
#include "pureorder/orders.hpp"

namespace pureorder {

// Outcome of the q-maximality test for Z[theta], T the minimal
// polynomial of theta. G is a product of monic lifts of the distinct
// irreducible factors of T mod q, H a monic lift of T/G mod q, and
// F = (G*H - T)/q exactly. Z[theta] is q-maximal iff
// gcd(F, G, H) = 1 in F_q[X]; otherwise U is a monic lift of
// T/gcd mod q and generates the enlargement.
struct DedekindReport {
    ZZ q;
    IntPoly t;
    IntPoly g, h, f;
    ModPoly gcd_fgh;
    unsigned m = 0;  // degree of gcd_fgh
    bool q_maximal = false;
    std::optional<IntPoly> u;
};

// Deterministic test with canonical coefficientwise lifts into [0, q).
DedekindReport dedekind_test(const IntPoly& t, const ZZ& q);

// Same test with admissible monic lifts perturbed by q * (random
// polynomial); the verdict and m are lift-independent, which the fuzz
// suite checks against this entry point.
DedekindReport dedekind_test_randomized(const IntPoly& t, const ZZ& q,
                                        std::uint64_t seed);

// The enlarged order Z[theta] + (1/q) U(theta) Z[theta]. Its index
// over Z[theta] is q^m and its discriminant is disc(Z[theta])/q^(2m).
OrderLattice enlarge(const IntPoly& t, const DedekindReport& report);

// Enlargement with a caller-supplied monic lift u of T/gcd mod q; the
// resulting lattice does not depend on the admissible choice.
OrderLattice enlarge_with_lift(const IntPoly& t, const DedekindReport& report,
                               const IntPoly& u);

// Chains one Dedekind enlargement per listed prime starting from
// Z[theta], then runs the multiplier-ring loop until the result is
// q-maximal for every listed q. The list must cover all primes whose
// square divides disc(Z[theta]).
OrderLattice iterate_to_maximal(const IntPoly& t,
                                const std::vector<ZZ>& primes);

} // namespace pureorder

#endif
