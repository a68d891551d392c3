#ifndef PUREORDER_LINALG_HPP
#define PUREORDER_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "pureorder/exactmath.hpp"

namespace pureorder {

// Dense matrix over Z, row major.
struct ZMat {
    std::size_t rows = 0, cols = 0;
    std::vector<ZZ> a;

    ZMat() = default;
    ZMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, ZZ(0)) {}

    ZZ& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const ZZ& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    static ZMat identity(std::size_t n);

    bool operator==(const ZMat&) const = default;
};

ZMat mul(const ZMat& a, const ZMat& b);
ZMat mul_mod(const ZMat& a, const ZMat& b, const ZZ& q);
ZMat pow(const ZMat& a, unsigned e);
ZMat mod_entries(const ZMat& a, const ZZ& q);

// Exact determinant by fraction-free (Bareiss) elimination with row
// pivoting.
ZZ bareiss_det(ZMat m);

// Canonical lower-triangular row-style Hermite normal form of the
// lattice spanned by the rows: pivot of row i on the diagonal and
// positive, entries below a pivot reduced into [0, pivot). Only the
// full-column-rank square form is produced; rank < cols throws
// RankDeficient.
ZMat hnf_lower(const ZMat& in);

// Basis (rows) of the lattice { v : v * A = 0 }.
ZMat left_kernel(const ZMat& a);

// Basis (rows, entries in [0, q)) of { v : v * A == 0 (mod q) }.
ZMat left_kernel_mod(const ZMat& a, const ZZ& q);

// Characteristic polynomial of N/den, exact. Computed fraction-free
// over Z[X]: Bareiss elimination on den*X*I - N followed by the
// coefficientwise division by den^n. Returns nullopt when some
// coefficient of the result is not an integer.
std::optional<IntPoly> charpoly_scaled(const ZMat& n, const ZZ& den);

} // namespace pureorder

#endif
