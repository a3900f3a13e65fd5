#ifndef SRJET_COUNTING_HPP
#define SRJET_COUNTING_HPP

// Exact counts: path numbers, the 2x2 non-intersecting pair determinant,
// the multiplicity sum over pivots and its closed form, Krull dimension.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "srjet/grid.hpp"

namespace srjet {

using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

/**
 * Binomial coefficient, total over all integers: zero whenever b < 0 or
 * b > a. The pair determinant relies on this, since its second row asks
 * for C(., i - 2) which must vanish at i = 1.
 */
inline Count binomial(long long a, long long b)
{
    if (b < 0 || a < 0 || b > a)
        return 0;
    if (b > a - b)
        b = a - b;
    Count result = 1;
    for (long long k = 1; k <= b; ++k) {
        result *= a - b + k;
        result /= k;
    }
    return result;
}

// Monotone paths between two cells.
inline Count path_count(Cell start, Cell end)
{
    const long long drow = end.row - start.row;
    const long long dcol = end.col - start.col;
    if (drow < 0 || dcol < 0)
        return 0;
    return binomial(drow + dcol, drow);
}

/**
 * Number of vertex-disjoint pairs (1,1) -> (i,n), (2,1) -> (m,j):
 *
 *   | C(i+n-2, i-1)  C(m+j-2, m-1) |
 *   | C(i+n-3, i-2)  C(m+j-3, m-2) |
 */
inline Count lgv_pair_count(const GridShape& shape, Cell pivot)
{
    require_in_grid(shape, pivot, "pivot");
    const long long m = shape.rows();
    const long long n = shape.cols();
    const long long i = pivot.row;
    const long long j = pivot.col;
    return binomial(i + n - 2, i - 1) * binomial(m + j - 3, m - 2) -
           binomial(m + j - 2, m - 1) * binomial(i + n - 3, i - 2);
}

// Sum over pivots (i,j) != (m,n) of (#x-paths from the pivot) * (#y-pairs).
inline Count multiplicity_sum(const GridShape& shape)
{
    const int m = shape.rows();
    const int n = shape.cols();
    Count total = 0;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == m && j == n)
                continue;
            total += binomial(m + n - i - j, m - i) * lgv_pair_count(shape, {i, j});
        }
    }
    return total;
}

inline Count multiplicity_closed(const GridShape& shape)
{
    const Count c = binomial(shape.rows() + shape.cols() - 2, shape.rows() - 1);
    return c * c;
}

// Also the common facet cardinality; the complex has dimension one less.
inline int krull_dimension(const GridShape& shape) { return 2 * (shape.rows() + shape.cols()) - 2; }

} // namespace srjet

#endif // SRJET_COUNTING_HPP
