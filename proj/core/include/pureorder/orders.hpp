#ifndef PUREORDER_ORDERS_HPP
#define PUREORDER_ORDERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "pureorder/exactmath.hpp"
#include "pureorder/linalg.hpp"

namespace pureorder {

/* ---------------------------------------------------------------- */
/* elements                                                          */
/* ---------------------------------------------------------------- */

// Element of Q(alpha) as exact rational coordinates over the power
// basis {1, alpha, ..., alpha^(p-1)}: num/den with den > 0 and
// gcd(den, content(num)) = 1.
struct AlgebraicElement {
    std::vector<ZZ> num;
    ZZ den = 1;

    std::size_t dim() const { return num.size(); }
    bool is_zero() const;
    bool is_integer_vector() const { return den == 1; }

    static AlgebraicElement make(std::vector<ZZ> num, ZZ den);
    static AlgebraicElement zero(std::size_t p);
    static AlgebraicElement from_integer(std::size_t p, const ZZ& v);
    static AlgebraicElement alpha_power(std::size_t p, unsigned k);

    bool operator==(const AlgebraicElement&) const = default;
};

AlgebraicElement add(const AlgebraicElement& x, const AlgebraicElement& y);
AlgebraicElement sub(const AlgebraicElement& x, const AlgebraicElement& y);
AlgebraicElement neg(const AlgebraicElement& x);
AlgebraicElement scale(const AlgebraicElement& x, const ZZ& num,
                       const ZZ& den = ZZ(1));

// Exact product reduced modulo the (monic) defining polynomial.
AlgebraicElement multiply_elements(const AlgebraicElement& x,
                                   const AlgebraicElement& y,
                                   const IntPoly& minpoly);
AlgebraicElement element_pow(const AlgebraicElement& x, unsigned e,
                             const IntPoly& minpoly);
// U(x) for U in Z[X]
AlgebraicElement eval_poly_at(const IntPoly& u, const AlgebraicElement& x,
                              const IntPoly& minpoly);

// Matrix of multiplication by x on Q(alpha) w.r.t. the power basis,
// returned as an integer matrix N with the common denominator so that
// the map is N/den; row j holds den * (coordinates of x * alpha^j).
std::pair<ZMat, ZZ> multiplication_matrix(const AlgebraicElement& x,
                                          const IntPoly& minpoly);

// Minimal polynomial over Q, primitive with positive leading
// coefficient, found by kernel computation over the power basis.
IntPoly minimal_polynomial(const AlgebraicElement& x, const IntPoly& minpoly);

// True iff the characteristic polynomial of multiplication by x has
// integer coefficients, i.e. x is an algebraic integer.
bool is_integral(const AlgebraicElement& x, const IntPoly& minpoly);

/* ---------------------------------------------------------------- */
/* orders                                                            */
/* ---------------------------------------------------------------- */

// Full-rank lattice in Q(alpha) over the power basis of alpha: row k
// of `basis` is denom * (coordinates of the k-th basis element). The
// matrix is in lower-triangular row HNF with positive pivots and the
// denominator is minimal, so equal lattices compare equal fieldwise.
struct OrderLattice {
    IntPoly minpoly;
    ZZ denom = 1;
    ZMat basis;

    std::size_t degree() const { return basis.rows; }
    AlgebraicElement basis_element(std::size_t k) const;

    bool operator==(const OrderLattice&) const = default;
};

// Z[alpha] itself: denominator 1, identity basis.
OrderLattice power_basis_order(const IntPoly& minpoly);

// Canonical HNF lattice spanned by the generators. Throws
// RankDeficient when they span less than full rank.
OrderLattice hnf_from_generators(const IntPoly& minpoly,
                                 const std::vector<AlgebraicElement>& gens);

// Z[g]: the span of 1, g, ..., g^(p-1).
OrderLattice order_from_element_powers(const IntPoly& minpoly,
                                       const AlgebraicElement& g);

// Integer coordinates of x over the lattice basis, or nullopt when x
// is not a lattice member.
std::optional<std::vector<ZZ>> lattice_coords(const OrderLattice& o,
                                              const AlgebraicElement& x);
bool lattice_member(const OrderLattice& o, const AlgebraicElement& x);

// HNF span of all pairwise products of basis elements; contains both
// factors. Throws MinpolyMismatch when the factors live in different
// fields.
OrderLattice product_order(const OrderLattice& o1, const OrderLattice& o2);

// Determinant of the trace Gram matrix of the basis, exact.
ZZ discriminant(const OrderLattice& o);

// Index [sup : sub] for sub contained in sup (checked; NotContained).
ZZ order_index(const OrderLattice& sub, const OrderLattice& sup);

// Membership of 1 and closure of the basis under products.
bool is_ring(const OrderLattice& o);

// Row i, columns j*p .. j*p + p - 1: coordinates over the order basis
// of (basis element i) * (basis element j). Requires a ring.
ZMat multiplication_table(const OrderLattice& o);

// The q-radical of o/qO pulled back to o-coordinates: HNF rows of the
// kernel of the iterated Frobenius together with q*identity.
ZMat q_radical_coords(const OrderLattice& o, const ZZ& q);

// Multiplier ring of the q-radical; equals o exactly when o is
// q-maximal, else a strictly larger order with index a power of q.
OrderLattice multiplier_ring(const OrderLattice& o, const ZZ& q);

bool is_q_maximal(const OrderLattice& o, const ZZ& q);

// Traces of 1, alpha, ..., alpha^(deg-1) via the Newton power-sum
// recurrence on the minimal polynomial coefficients.
std::vector<ZZ> power_traces(const IntPoly& minpoly);

std::string to_string(const AlgebraicElement& x,
                      const std::string& var = "alpha");

} // namespace pureorder

#endif
