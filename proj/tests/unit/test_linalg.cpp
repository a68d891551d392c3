#include "doctest.h"

#include <random>

#include "pureorder/linalg.hpp"

using namespace pureorder;

namespace {

ZMat from_rows(std::vector<std::vector<long>> rows)
{
    ZMat m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); i++)
        for (std::size_t j = 0; j < rows[i].size(); j++)
            m.at(i, j) = rows[i][j];
    return m;
}

// cofactor expansion, the independent determinant oracle
ZZ laplace_det(const ZMat& m, std::vector<std::size_t> cols, std::size_t row)
{
    if (cols.empty())
        return 1;
    ZZ acc = 0;
    int sign = 1;
    for (std::size_t k = 0; k < cols.size(); k++) {
        if (m.at(row, cols[k]) != 0) {
            std::vector<std::size_t> rest;
            for (std::size_t t = 0; t < cols.size(); t++)
                if (t != k)
                    rest.push_back(cols[t]);
            acc += sign * m.at(row, cols[k]) * laplace_det(m, rest, row + 1);
        }
        sign = -sign;
    }
    return acc;
}

ZZ laplace_det(const ZMat& m)
{
    std::vector<std::size_t> cols(m.cols);
    for (std::size_t i = 0; i < cols.size(); i++)
        cols[i] = i;
    return laplace_det(m, cols, 0);
}

} // namespace

TEST_CASE("lower-triangular HNF on pinned lattices")
{
    CHECK(hnf_lower(ZMat::identity(3)) == ZMat::identity(3));

    // {1, a, a^2, a^2/2} scaled by 2 for a cubic field
    const ZMat h = hnf_lower(
        from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}, {0, 0, 1}}));
    CHECK(h == from_rows({{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}));

    // reduction into [0, pivot) below the pivot
    const ZMat g = hnf_lower(from_rows({{3, 0, 0}, {0, 3, 0}, {361, -38, 1}}));
    CHECK(g == from_rows({{3, 0, 0}, {0, 3, 0}, {1, 1, 1}}));

    CHECK_THROWS_AS(hnf_lower(from_rows({{1, 2, 0}, {2, 4, 0}, {3, 6, 0}})),
                    RankDeficient);
}

TEST_CASE("HNF is canonical under unimodular row operations")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> val(-9, 9), pickmul(-3, 3);
    for (int trial = 0; trial < 100; trial++) {
        const std::size_t n = 2 + trial % 4;
        ZMat base(n, n);
        for (std::size_t i = 0; i < n; i++) {
            for (std::size_t j = 0; j < i; j++)
                base.at(i, j) = val(rng);
            base.at(i, i) = std::abs(val(rng)) + 1;
        }
        const ZMat canon = hnf_lower(base);

        // shuffle with row swaps, negations, additions, plus a
        // redundant dependent row
        ZMat shuffled(n + 1, n);
        for (std::size_t i = 0; i < n; i++)
            for (std::size_t j = 0; j < n; j++)
                shuffled.at(i, j) = base.at(i, j);
        for (std::size_t j = 0; j < n; j++)
            shuffled.at(n, j) = base.at(0, j) * 2 - base.at(n - 1, j) * 3;
        for (int op = 0; op < 30; op++) {
            const std::size_t i = rng() % (n + 1), k = rng() % (n + 1);
            if (i == k)
                continue;
            const long f = pickmul(rng);
            for (std::size_t j = 0; j < n; j++)
                shuffled.at(i, j) += f * shuffled.at(k, j);
        }
        CHECK(hnf_lower(shuffled) == canon);
        CHECK(hnf_lower(canon) == canon);  // idempotent
    }
}

TEST_CASE("bareiss determinant against cofactor expansion")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<long> val(-20, 20);
    for (int trial = 0; trial < 200; trial++) {
        const std::size_t n = 1 + trial % 5;
        ZMat m(n, n);
        for (auto& x : m.a)
            x = val(rng);
        CHECK(bareiss_det(m) == laplace_det(m));
    }
    // zero pivot needs the row swap
    CHECK(bareiss_det(from_rows({{3, 0, 0}, {0, 0, 6}, {0, 6, 0}})) == -108);
    CHECK(bareiss_det(from_rows({{0, 1}, {1, 0}})) == -1);
    CHECK(bareiss_det(from_rows({{1, 2}, {2, 4}})) == 0);
}

TEST_CASE("integer kernels")
{
    // planted relation 2*r0 - r1 = 0
    const ZMat a = from_rows({{1, 2, 3}, {2, 4, 6}});
    const ZMat k = left_kernel(a);
    REQUIRE(k.rows == 1);
    CHECK(abs(k.at(0, 0)) == 2);
    CHECK(k.at(0, 0) * 1 + k.at(0, 1) * 2 == 0);

    std::mt19937_64 rng(23);
    std::uniform_int_distribution<long> val(-10, 10);
    for (int trial = 0; trial < 100; trial++) {
        const std::size_t rows = 2 + trial % 4, cols = 2 + (trial / 2) % 4;
        ZMat m(rows, cols);
        for (auto& x : m.a)
            x = val(rng);
        const ZMat ker = left_kernel(m);
        for (std::size_t i = 0; i < ker.rows; i++)
            for (std::size_t j = 0; j < cols; j++) {
                ZZ acc = 0;
                for (std::size_t t = 0; t < rows; t++)
                    acc += ker.at(i, t) * m.at(t, j);
                CHECK(acc == 0);
            }
    }
}

TEST_CASE("kernels mod q")
{
    std::mt19937_64 rng(29);
    const long qs[] = {2, 3, 5, 7, 11};
    for (int trial = 0; trial < 150; trial++) {
        const ZZ q = qs[trial % 5];
        const std::size_t rows = 2 + trial % 4, cols = 1 + (trial / 3) % 5;
        ZMat m(rows, cols);
        for (auto& x : m.a)
            x = static_cast<long>(rng() % q.get_ui());
        const ZMat ker = left_kernel_mod(m, q);
        // every kernel row annihilates m mod q
        for (std::size_t i = 0; i < ker.rows; i++) {
            bool nonzero = false;
            for (std::size_t j = 0; j < cols; j++) {
                ZZ acc = 0;
                for (std::size_t t = 0; t < rows; t++)
                    acc += ker.at(i, t) * m.at(t, j);
                CHECK(acc % q == 0);
            }
            for (std::size_t t = 0; t < rows; t++)
                nonzero = nonzero || ker.at(i, t) != 0;
            CHECK(nonzero);
        }
        // kernel rows are independent mod q: no combination of them
        // vanishes, i.e. their own left kernel is trivial
        if (ker.rows)
            CHECK(left_kernel_mod(ker, q).rows == 0);
    }
}

TEST_CASE("scaled characteristic polynomials")
{
    // companion matrix of X^3 - 2 (column convention): charpoly X^3 - 2
    ZMat c(3, 3);
    c.at(1, 0) = 1;
    c.at(2, 1) = 1;
    c.at(0, 2) = 2;
    const auto chi = charpoly_scaled(c, ZZ(1));
    REQUIRE(chi.has_value());
    CHECK(*chi == IntPoly({ZZ(-2), ZZ(0), ZZ(0), ZZ(1)}));

    // halving the matrix gives non-integral coefficients
    CHECK_FALSE(charpoly_scaled(c, ZZ(2)).has_value());

    // 2x identity over denominator 2 is integral again
    ZMat two = ZMat::identity(4);
    for (std::size_t i = 0; i < 4; i++)
        two.at(i, i) = 2;
    const auto half = charpoly_scaled(two, ZZ(2));
    REQUIRE(half.has_value());
    CHECK(*half == IntPoly({ZZ(1), ZZ(-4), ZZ(6), ZZ(-4), ZZ(1)}));

    // random matrices against a symbolic cofactor oracle
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<long> val(-6, 6);
    for (int trial = 0; trial < 60; trial++) {
        const std::size_t n = 1 + trial % 4;
        ZMat m(n, n);
        for (auto& x : m.a)
            x = val(rng);
        // det(X I - M) by expanding over IntPoly entries
        std::vector<IntPoly> entries(n * n);
        for (std::size_t i = 0; i < n; i++)
            for (std::size_t j = 0; j < n; j++)
                entries[i * n + j] =
                    i == j ? IntPoly({-m.at(i, j), ZZ(1)})
                           : IntPoly::constant(-m.at(i, j));
        // tiny recursive Laplace in the polynomial ring
        auto det = [&](auto&& self, std::vector<std::size_t> cols,
                       std::size_t row) -> IntPoly {
            if (cols.empty())
                return IntPoly::constant(ZZ(1));
            IntPoly acc;
            int sign = 1;
            for (std::size_t k = 0; k < cols.size(); k++) {
                std::vector<std::size_t> rest;
                for (std::size_t t = 0; t < cols.size(); t++)
                    if (t != k)
                        rest.push_back(cols[t]);
                IntPoly term = mul(entries[row * n + cols[k]],
                                   self(self, rest, row + 1));
                acc = sign > 0 ? add(acc, term) : sub(acc, term);
                sign = -sign;
            }
            return acc;
        };
        std::vector<std::size_t> cols(n);
        for (std::size_t i = 0; i < n; i++)
            cols[i] = i;
        const auto got = charpoly_scaled(m, ZZ(1));
        REQUIRE(got.has_value());
        CHECK(*got == det(det, cols, 0));
    }
}
