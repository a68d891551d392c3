#ifndef PUREORDER_RADICAL_HPP
#define PUREORDER_RADICAL_HPP

#include <string>
#include <vector>

#include "pureorder/exactmath.hpp"
#include "pureorder/orders.hpp"

namespace pureorder {

// A validated degree-p radical field Q(a^(1/p)) with its normalized
// base: a positive, p-th-power-free, together with the per-prime data
// (e_j, u_j, v_j, c_j) where e_j u_j - p v_j = 1 and
// c_j = a^(u_j) / q_j^(p v_j) is an integer with q_j appearing to the
// first power.
struct PureField {
    unsigned p = 0;
    ZZ a_input;
    ZZ a;                      // normalized base
    ZZ scale;                  // |a_input| = a * scale^p
    bool generator_flipped = false;  // a_input < 0 (alpha -> -alpha)
    Factorization fact;        // factorization of a, exponents in [1, p-1]
    bool wieferich = false;    // p Wieferich to base a; false when p | a
    std::vector<unsigned> u;
    std::vector<unsigned> v;
    std::vector<ZZ> c;

    std::size_t num_primes() const { return fact.factors.size(); }
    const ZZ& prime(std::size_t j) const { return fact.factors[j].first; }
    unsigned exponent(std::size_t j) const { return fact.factors[j].second; }
    IntPoly minpoly() const { return IntPoly::power_minus(p, a); }
};

PureField normalize_field(unsigned p, const ZZ& a,
                          const FactorBudget& budget = {});

// gamma_j = alpha^(u_j) / q_j^(v_j), a root of X^p - c_j; Z[gamma_j]
// is the q_j-maximal subring factor.
std::vector<AlgebraicElement> gamma_generators(const PureField& field);

// One generator per distinct exponent value: primes sharing e_j share
// u_j, and their subrings merge into Z[alpha^u / prod q_j^(v_j)].
struct MergedClass {
    unsigned e = 0;
    unsigned u = 0;
    AlgebraicElement gen;
    std::vector<std::size_t> members;  // indices into the prime list
};
std::vector<MergedClass> merged_generators(const PureField& field);

struct NamedElement {
    std::string name;
    AlgebraicElement elem;
};

struct NamedSubring {
    std::string name;
    AlgebraicElement gen;
    OrderLattice lattice;
};

struct MaxOrderResult {
    PureField field;
    OrderLattice order;
    std::vector<NamedSubring> factors;
    std::vector<NamedElement> basis;
    Factorization disc;
    unsigned x_exponent = 0;  // exponent of p in disc: p, or p-2 when
                              // the extra Wieferich factor is present
};

// (alpha - a)^(p-1) / p, the extra generator of the Wieferich case.
AlgebraicElement beta_prime(const PureField& field);

// The maximal order as a product of subrings: all Z[gamma_j], times
// Z[beta'] when p is Wieferich to base a. The result is cross-checked
// against the explicit basis span and the closed discriminant form;
// disagreement throws ConsistencyError.
MaxOrderResult assemble_max_order(const PureField& field);

// t_{kj} with k e_j = p t_{kj} + e'_{kj}, 0 <= e'_{kj} <= p-1, for
// 0 <= k <= p-1; row k lists all j.
std::vector<std::vector<unsigned>> t_exponent_table(const PureField& field);

// The explicit basis: alpha^k / prod_j q_j^(t_kj) for k < p; in the
// Wieferich case the k = p-1 element is replaced by
// (alpha - a)^(p-1) / (p * prod_j q_j^(t_{p-1,j})).
std::vector<NamedElement> integral_basis(const PureField& field);

// Closed form (-1)^((p-1)/2) p^x prod q_j^(p-1), x = p-2 iff
// wieferich; no lattice work.
Factorization disc_formula(const PureField& field);

// The alternative extra generators (gamma_j - c_j)^(p-1)/p, each an
// admissible replacement for beta'.
std::vector<AlgebraicElement> beta_prime_alternatives(const PureField& field);

} // namespace pureorder

#endif
