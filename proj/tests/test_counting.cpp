#include <catch2/catch_amalgamated.hpp>

#include <limits>

#include "srjet/counting.hpp"
#include "srjet/grid.hpp"

using namespace srjet;

namespace {

// Path count by dynamic programming over the rectangle, no binomials.
Count paths_by_dp(int drow, int dcol)
{
    std::vector<std::vector<Count>> t(static_cast<std::size_t>(drow) + 1,
                                      std::vector<Count>(static_cast<std::size_t>(dcol) + 1, 1));
    for (int r = 1; r <= drow; ++r)
        for (int c = 1; c <= dcol; ++c)
            t[r][c] = t[r - 1][c] + t[r][c - 1];
    return t[drow][dcol];
}

// Disjoint pairs counted by enumerating both paths and filtering.
std::size_t pairs_by_filter(const GridShape& shape, Cell pivot)
{
    std::size_t count = 0;
    for (const auto& u : enumerate_paths(shape, Layer::Y, {1, 1}, {pivot.row, shape.cols()}))
        for (const auto& l : enumerate_paths(shape, Layer::Y, {2, 1}, {shape.rows(), pivot.col})) {
            bool ok = true;
            for (const auto& c : u.cells())
                ok = ok && !l.contains(c);
            count += ok ? 1 : 0;
        }
    return count;
}

} // namespace

TEST_CASE("binomial values and out-of-range convention", "[counting]")
{
    CHECK(binomial(4, 2) == 6);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(0, -1) == 0);
    CHECK(binomial(3, 4) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(60, 30) == Count("118264581564861424"));
}

TEST_CASE("binomial symmetry, Pascal and path DP", "[counting]")
{
    for (int a = 0; a <= 40; ++a)
        for (int b = 0; b <= a; ++b) {
            CHECK(binomial(a, b) == binomial(a, a - b));
            if (a > 0)
                CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
        }
    for (int r = 0; r <= 8; ++r)
        for (int c = 0; c <= 8; ++c)
            CHECK(path_count({1, 1}, {1 + r, 1 + c}) == paths_by_dp(r, c));
}

TEST_CASE("lgv_pair_count examples", "[counting]")
{
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 5}, {4, 4}})
        CHECK(lgv_pair_count(GridShape(m, n), {1, 1}) == 1);
    CHECK(lgv_pair_count(GridShape(3, 3), {2, 2}) == 3);
    CHECK(lgv_pair_count(GridShape(2, 2), {1, 2}) == 1);
    CHECK_THROWS_AS(lgv_pair_count(GridShape(2, 2), {3, 1}), DomainError);
}

TEST_CASE("lgv_pair_count equals filtered pair enumeration", "[counting]")
{
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= 4; ++n) {
            const GridShape shape(m, n);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n; ++j) {
                    INFO(m << "x" << n << " pivot " << i << "," << j);
                    CHECK(lgv_pair_count(shape, {i, j}) == Count(pairs_by_filter(shape, {i, j})));
                }
        }
}

TEST_CASE("multiplicity examples", "[counting]")
{
    CHECK(multiplicity_sum(GridShape(2, 2)) == 4);
    CHECK(multiplicity_sum(GridShape(3, 3)) == 36);
    CHECK(multiplicity_sum(GridShape(3, 4)) == 100);
    CHECK(multiplicity_closed(GridShape(2, 2)) == 4);
    CHECK(multiplicity_closed(GridShape(4, 4)) == 400);
    CHECK(multiplicity_closed(GridShape(2, 5)) == 25);
}

TEST_CASE("multiplicity sum from enumerated paths and pairs", "[counting]")
{
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= 4; ++n) {
            const GridShape shape(m, n);
            Count brute = 0;
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n; ++j) {
                    if (i == m && j == n)
                        continue;
                    const auto xs = enumerate_paths(shape, Layer::X, {i, j}, {m, n});
                    brute += Count(xs.size()) * Count(pairs_by_filter(shape, {i, j}));
                }
            CHECK(multiplicity_sum(shape) == brute);
        }
}

TEST_CASE("summands are non-negative and vanish at the corner", "[counting]")
{
    for (int m = 2; m <= 8; ++m)
        for (int n = m; n <= 8; ++n) {
            const GridShape shape(m, n);
            for (int i = 1; i <= m; ++i)
                for (int j = 1; j <= n; ++j)
                    CHECK(lgv_pair_count(shape, {i, j}) >= 0);
            // both y-paths would end at (m,n), so no disjoint pair exists
            CHECK(lgv_pair_count(shape, {m, n}) == 0);
        }
}

TEST_CASE("sum formula equals closed form", "[counting]")
{
    for (int m = 2; m <= 12; ++m)
        for (int n = m; n <= 12; ++n)
            CHECK(multiplicity_sum(GridShape(m, n)) == multiplicity_closed(GridShape(m, n)));
}

TEST_CASE("sum formula equals closed form past 64 bits", "[counting][bigint]")
{
    for (int m = 2; m <= 30; ++m)
        for (int n = m; n <= 30; ++n)
            REQUIRE(multiplicity_sum(GridShape(m, n)) == multiplicity_closed(GridShape(m, n)));
    const Count big = multiplicity_closed(GridShape(30, 30));
    CHECK(big > Count(std::numeric_limits<std::uint64_t>::max()));
    CHECK(big == binomial(58, 29) * binomial(58, 29));
}

TEST_CASE("krull dimension", "[counting]")
{
    CHECK(krull_dimension(GridShape(2, 2)) == 6);
    CHECK(krull_dimension(GridShape(3, 3)) == 10);
    CHECK(krull_dimension(GridShape(2, 3)) == 8);
}
