#ifndef PUREORDER_EXACTMATH_HPP
#define PUREORDER_EXACTMATH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pureorder/errors.hpp"

namespace pureorder {

using ZZ = mpz_class;

/* ---------------------------------------------------------------- */
/* integers                                                          */
/* ---------------------------------------------------------------- */

// Effort/determinism knobs for factorize(). With the defaults every
// |n| up to ~10^12 factors by trial division alone; the rho stage
// covers the larger cofactors this project actually meets. All random
// choices derive from `seed`, so a failing run reproduces exactly.
struct FactorBudget {
    unsigned long trial_bound = 1'000'000;
    unsigned long rho_iterations = 4'000'000;  // per rho attempt
    unsigned rho_attempts = 24;
    std::uint64_t seed = 0;
};

// Signed integer as sign * product of prime powers, primes strictly
// increasing, exponents >= 1. The units +-1 carry an empty factor list.
struct Factorization {
    int sign = 1;
    std::vector<std::pair<ZZ, unsigned>> factors;

    ZZ value() const;
    unsigned exponent_of(const ZZ& q) const;  // 0 if q absent
    bool operator==(const Factorization&) const = default;
};

ZZ powmod(const ZZ& base, const ZZ& exp, const ZZ& mod);

// Deterministic Miller-Rabin with the 12-witness set, a proof of
// primality below 3.317e24 and a strong probable-prime test beyond.
bool is_probable_prime(const ZZ& n);

// Complete factorization of n != 0: trial division, then perfect-power
// peeling and Brent's rho on the remaining cofactors. Throws
// FactorBudgetExceeded if a composite cofactor survives the budget.
Factorization factorize(const ZZ& n, const FactorBudget& budget = {});

// True iff r^(q-1) == 1 (mod q^2) for an odd prime q and base r
// coprime to q, r != +-1.
bool is_wieferich(const ZZ& q, const ZZ& r);

// Splits a = a' * s^p with every prime exponent of a' in [1, p-1] and
// sign(a') = sign(a). Throws PerfectPower when a is a p-th power.
std::pair<ZZ, ZZ> pth_power_free(const ZZ& a, unsigned p,
                                 const FactorBudget& budget = {});

/* ---------------------------------------------------------------- */
/* polynomials over Z                                                */
/* ---------------------------------------------------------------- */

// Dense univariate polynomial over Z, coefficients lowest degree
// first, no trailing zero (the zero polynomial has an empty vector).
struct IntPoly {
    std::vector<ZZ> c;

    IntPoly() = default;
    explicit IntPoly(std::vector<ZZ> coeffs);

    static IntPoly constant(const ZZ& v);
    static IntPoly monomial(const ZZ& coeff, unsigned deg);
    // X^p - a
    static IntPoly power_minus(unsigned p, const ZZ& a);
    // (X + a)^p - a, the minimal polynomial of alpha - a
    static IntPoly shifted_radical(unsigned p, const ZZ& a);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    const ZZ& coeff(std::size_t i) const;
    ZZ eval(const ZZ& x) const;
    IntPoly derivative() const;

    bool operator==(const IntPoly&) const = default;
};

IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly neg(const IntPoly& a);
IntPoly mul(const IntPoly& a, const IntPoly& b);
IntPoly mul_scalar(const IntPoly& a, const ZZ& s);
// Ordinary division; every leading-coefficient division must be exact
// (always the case for monic divisors and inside Bareiss elimination).
std::pair<IntPoly, IntPoly> divmod(const IntPoly& num, const IntPoly& den);
IntPoly divexact(const IntPoly& num, const IntPoly& den);
std::string to_string(const IntPoly& f, const std::string& var = "x");

/* ---------------------------------------------------------------- */
/* polynomials over F_q                                              */
/* ---------------------------------------------------------------- */

// Dense univariate polynomial over the prime field F_q, coefficients
// reduced into [0, q).
struct ModPoly {
    ZZ q;
    std::vector<ZZ> c;

    ModPoly() = default;  // placeholder with modulus 0, not usable
    explicit ModPoly(ZZ modulus) : q(std::move(modulus)) {}
    ModPoly(ZZ modulus, std::vector<ZZ> coeffs);

    static ModPoly from_int_poly(const IntPoly& f, const ZZ& q);
    static ModPoly x(const ZZ& q);

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    const ZZ& coeff(std::size_t i) const;
    ZZ eval(const ZZ& x) const;
    IntPoly lift() const;  // canonical coefficientwise lift into [0, q)

    bool operator==(const ModPoly&) const = default;
};

ModPoly add(const ModPoly& a, const ModPoly& b);
ModPoly sub(const ModPoly& a, const ModPoly& b);
ModPoly mul(const ModPoly& a, const ModPoly& b);
ModPoly mul_scalar(const ModPoly& a, const ZZ& s);
std::pair<ModPoly, ModPoly> divmod(const ModPoly& num, const ModPoly& den);
ModPoly make_monic(const ModPoly& f);
ModPoly derivative(const ModPoly& f);
// Monic gcd; gcd(0, g) is the monic scaling of g.
ModPoly poly_gcd_mod_q(const ModPoly& f, const ModPoly& g);
ModPoly powmod_poly(const ModPoly& base, const ZZ& e, const ModPoly& mod);
std::string to_string(const ModPoly& f, const std::string& var = "x");

// Factors a monic T into monic irreducibles over F_q with
// multiplicities: squarefree split, then distinct-degree, then
// randomized equal-degree splitting. The list is sorted by degree and
// then lexicographically by coefficients, so the output does not
// depend on the seed.
std::vector<std::pair<ModPoly, unsigned>>
factor_mod_q(const IntPoly& T, const ZZ& q, std::uint64_t seed = 0);

} // namespace pureorder

#endif
