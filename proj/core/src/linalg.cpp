#include "pureorder/linalg.hpp"

#include <utility>

namespace pureorder {

ZMat ZMat::identity(std::size_t n)
{
    ZMat m(n, n);
    for (std::size_t i = 0; i < n; i++)
        m.at(i, i) = 1;
    return m;
}

ZMat mul(const ZMat& a, const ZMat& b)
{
    if (a.cols != b.rows)
        throw Error("ZMat mul: shape mismatch");
    ZMat r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; i++)
        for (std::size_t k = 0; k < a.cols; k++) {
            const ZZ& aik = a.at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < b.cols; j++)
                r.at(i, j) += aik * b.at(k, j);
        }
    return r;
}

ZMat mul_mod(const ZMat& a, const ZMat& b, const ZZ& q)
{
    ZMat r = mul(a, b);
    for (auto& x : r.a)
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    return r;
}

ZMat pow(const ZMat& a, unsigned e)
{
    if (a.rows != a.cols)
        throw Error("ZMat pow: matrix not square");
    ZMat r = ZMat::identity(a.rows);
    ZMat base = a;
    while (e) {
        if (e & 1)
            r = mul(r, base);
        e >>= 1;
        if (e)
            base = mul(base, base);
    }
    return r;
}

ZMat mod_entries(const ZMat& a, const ZZ& q)
{
    ZMat r = a;
    for (auto& x : r.a)
        mpz_mod(x.get_mpz_t(), x.get_mpz_t(), q.get_mpz_t());
    return r;
}

ZZ bareiss_det(ZMat m)
{
    if (m.rows != m.cols)
        throw Error("bareiss_det: matrix not square");
    const std::size_t n = m.rows;
    if (n == 0)
        return 1;
    int sign = 1;
    ZZ prev = 1;
    for (std::size_t k = 0; k + 1 < n; k++) {
        if (m.at(k, k) == 0) {
            std::size_t piv = k + 1;
            while (piv < n && m.at(piv, k) == 0)
                piv++;
            if (piv == n)
                return 0;
            for (std::size_t j = 0; j < n; j++)
                std::swap(m.at(k, j), m.at(piv, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; i++)
            for (std::size_t j = k + 1; j < n; j++) {
                ZZ t = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
                mpz_divexact(m.at(i, j).get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
        prev = m.at(k, k);
    }
    return sign < 0 ? ZZ(-m.at(n - 1, n - 1)) : m.at(n - 1, n - 1);
}

namespace {

// One right-to-left elimination pass. Afterwards pivots[col] is the
// unique surviving row with rightmost nonzero entry at col (positive
// there), and leftover keeps the rows that vanished on all processed
// columns. Row operations are unimodular throughout.
struct EliminationResult {
    std::vector<std::vector<ZZ>> pivots;   // indexed by column; empty = none
    std::vector<std::vector<ZZ>> leftover;
};

EliminationResult eliminate_rows(std::vector<std::vector<ZZ>> rows,
                                 std::size_t ncols)
{
    EliminationResult res;
    res.pivots.assign(ncols, {});
    for (std::size_t col = ncols; col-- > 0;) {
        std::vector<ZZ> piv;
        std::vector<std::vector<ZZ>> next;
        for (auto& r : rows) {
            if (r[col] == 0) {
                next.push_back(std::move(r));
                continue;
            }
            if (piv.empty()) {
                piv = std::move(r);
                continue;
            }
            ZZ g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                       piv[col].get_mpz_t(), r[col].get_mpz_t());
            ZZ pc, rc;
            mpz_divexact(pc.get_mpz_t(), piv[col].get_mpz_t(), g.get_mpz_t());
            mpz_divexact(rc.get_mpz_t(), r[col].get_mpz_t(), g.get_mpz_t());
            std::vector<ZZ> npiv(r.size()), nrow(r.size());
            for (std::size_t j = 0; j < r.size(); j++) {
                npiv[j] = x * piv[j] + y * r[j];
                nrow[j] = pc * r[j] - rc * piv[j];
            }
            piv = std::move(npiv);
            bool zero = true;
            for (const auto& v : nrow)
                if (v != 0) {
                    zero = false;
                    break;
                }
            if (!zero)
                next.push_back(std::move(nrow));
        }
        if (!piv.empty()) {
            if (piv[col] < 0)
                for (auto& v : piv)
                    v = -v;
            res.pivots[col] = std::move(piv);
        }
        rows = std::move(next);
    }
    for (auto& r : rows) {
        bool zero = true;
        for (std::size_t j = 0; j < ncols && zero; j++)
            if (r[j] != 0)
                zero = false;
        if (zero)
            res.leftover.push_back(std::move(r));
    }
    return res;
}

} // namespace

ZMat hnf_lower(const ZMat& in)
{
    const std::size_t n = in.cols;
    std::vector<std::vector<ZZ>> rows;
    rows.reserve(in.rows);
    for (std::size_t i = 0; i < in.rows; i++) {
        std::vector<ZZ> r(n);
        for (std::size_t j = 0; j < n; j++)
            r[j] = in.at(i, j);
        rows.push_back(std::move(r));
    }
    EliminationResult er = eliminate_rows(std::move(rows), n);
    for (std::size_t col = 0; col < n; col++)
        if (er.pivots[col].empty())
            throw RankDeficient("hnf_lower: rows do not span full rank");
    // reduce entries below each pivot into [0, pivot)
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = i; j-- > 0;) {
            ZZ f;
            mpz_fdiv_q(f.get_mpz_t(), er.pivots[i][j].get_mpz_t(),
                       er.pivots[j][j].get_mpz_t());
            if (f != 0)
                for (std::size_t k = 0; k <= j; k++)
                    er.pivots[i][k] -= f * er.pivots[j][k];
        }
    ZMat h(n, n);
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++)
            h.at(i, j) = er.pivots[i][j];
    return h;
}

ZMat left_kernel(const ZMat& a)
{
    const std::size_t n = a.rows, m = a.cols;
    std::vector<std::vector<ZZ>> rows(n, std::vector<ZZ>(m + n, ZZ(0)));
    for (std::size_t i = 0; i < n; i++) {
        for (std::size_t j = 0; j < m; j++)
            rows[i][j] = a.at(i, j);
        rows[i][m + i] = 1;
    }
    EliminationResult er = eliminate_rows(std::move(rows), m);
    ZMat k(er.leftover.size(), n);
    for (std::size_t i = 0; i < er.leftover.size(); i++)
        for (std::size_t j = 0; j < n; j++)
            k.at(i, j) = er.leftover[i][m + j];
    return k;
}

ZMat left_kernel_mod(const ZMat& a, const ZZ& q)
{
    const std::size_t n = a.rows, m = a.cols;
    ZMat w = mod_entries(a, q);
    ZMat u = ZMat::identity(n);
    std::size_t row = 0;
    for (std::size_t col = 0; col < m && row < n; col++) {
        std::size_t piv = row;
        while (piv < n && w.at(piv, col) == 0)
            piv++;
        if (piv == n)
            continue;
        if (piv != row)
            for (std::size_t j = 0; j < m || j < n; j++) {
                if (j < m)
                    std::swap(w.at(piv, j), w.at(row, j));
                if (j < n)
                    std::swap(u.at(piv, j), u.at(row, j));
            }
        ZZ inv;
        if (!mpz_invert(inv.get_mpz_t(), w.at(row, col).get_mpz_t(),
                        q.get_mpz_t()))
            throw Error("left_kernel_mod: modulus not prime");
        for (std::size_t j = 0; j < m; j++)
            w.at(row, j) = w.at(row, j) * inv % q;
        for (std::size_t j = 0; j < n; j++)
            u.at(row, j) = u.at(row, j) * inv % q;
        for (std::size_t i = 0; i < n; i++) {
            if (i == row || w.at(i, col) == 0)
                continue;
            const ZZ f = w.at(i, col);
            for (std::size_t j = 0; j < m; j++) {
                w.at(i, j) -= f * w.at(row, j);
                mpz_mod(w.at(i, j).get_mpz_t(), w.at(i, j).get_mpz_t(),
                        q.get_mpz_t());
            }
            for (std::size_t j = 0; j < n; j++) {
                u.at(i, j) -= f * u.at(row, j);
                mpz_mod(u.at(i, j).get_mpz_t(), u.at(i, j).get_mpz_t(),
                        q.get_mpz_t());
            }
        }
        row++;
    }
    ZMat k(n - row, n);
    for (std::size_t i = row; i < n; i++)
        for (std::size_t j = 0; j < n; j++)
            k.at(i - row, j) = u.at(i, j);
    return k;
}

std::optional<IntPoly> charpoly_scaled(const ZMat& nmat, const ZZ& den)
{
    if (nmat.rows != nmat.cols)
        throw Error("charpoly_scaled: matrix not square");
    const std::size_t n = nmat.rows;
    if (n == 0)
        return IntPoly::constant(1);

    std::vector<IntPoly> p(n * n);
    for (std::size_t i = 0; i < n; i++)
        for (std::size_t j = 0; j < n; j++) {
            if (i == j)
                p[i * n + j] = IntPoly({-nmat.at(i, j), den});
            else
                p[i * n + j] = IntPoly::constant(-nmat.at(i, j));
        }

    int sign = 1;
    IntPoly prev = IntPoly::constant(1);
    for (std::size_t k = 0; k + 1 < n; k++) {
        if (p[k * n + k].is_zero()) {
            std::size_t piv = k + 1;
            while (piv < n && p[piv * n + k].is_zero())
                piv++;
            if (piv == n)
                return std::nullopt;
            for (std::size_t j = 0; j < n; j++)
                std::swap(p[k * n + j], p[piv * n + j]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; i++)
            for (std::size_t j = k + 1; j < n; j++)
                p[i * n + j] = divexact(
                    sub(mul(p[k * n + k], p[i * n + j]),
                        mul(p[i * n + k], p[k * n + j])),
                    prev);
        prev = p[k * n + k];
    }
    IntPoly det = p[n * n - 1];
    if (sign < 0)
        det = neg(det);

    ZZ dn;
    mpz_pow_ui(dn.get_mpz_t(), den.get_mpz_t(), n);
    std::vector<ZZ> coeffs(det.c.size());
    for (std::size_t i = 0; i < det.c.size(); i++) {
        if (!mpz_divisible_p(det.c[i].get_mpz_t(), dn.get_mpz_t()))
            return std::nullopt;
        mpz_divexact(coeffs[i].get_mpz_t(), det.c[i].get_mpz_t(),
                     dn.get_mpz_t());
    }
    IntPoly chi(std::move(coeffs));
    if (chi.degree() != static_cast<int>(n) || !chi.is_monic())
        throw Error("charpoly_scaled: result is not monic of full degree");
    return chi;
}

} // namespace pureorder
