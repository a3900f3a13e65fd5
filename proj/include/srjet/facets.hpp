#ifndef SRJET_FACETS_HPP
#define SRJET_FACETS_HPP

// Structured facets: a pivot (i,j) != (m,n), an x-path from the pivot to
// (m,n), and a vertex-disjoint pair of y-paths (1,1) -> (i,n), (2,1) -> (m,j).

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "srjet/counting.hpp"
#include "srjet/grid.hpp"

namespace srjet {

struct FacetProfile {
    GridShape shape;
    Cell mu;
    LatticePath x_path;
    LatticePath y_upper;
    LatticePath y_lower;

    friend bool operator==(const FacetProfile&, const FacetProfile&) = default;
};

inline VertexSet facet_vertex_set(const FacetProfile& p)
{
    VertexSet s(p.shape);
    for (const auto* path : {&p.x_path, &p.y_upper, &p.y_lower})
        for (const Cell& c : path->cells())
            s.insert({path->layer(), c.row, c.col});
    return s;
}

// Pivots in facet order: row descending, then column descending.
inline std::vector<Cell> facet_pivots(const GridShape& shape)
{
    std::vector<Cell> out;
    for (int i = shape.rows(); i >= 1; --i)
        for (int j = shape.cols(); j >= 1; --j)
            if (!(i == shape.rows() && j == shape.cols()))
                out.push_back({i, j});
    return out;
}

/**
 * Streams every facet profile to `visit` in shelling order: pivots as in
 * facet_pivots(), then x-path, upper y-path and lower y-path, each in reverse
 * canonical path order (south-west paths first). Only one pivot's paths are
 * held in memory at a time.
 */
inline void for_each_facet(const GridShape& shape,
                           const std::function<void(const FacetProfile&)>& visit)
{
    const Cell corner{shape.rows(), shape.cols()};
    for (const Cell& mu : facet_pivots(shape)) {
        const auto xs = enumerate_paths(shape, Layer::X, mu, corner);
        const auto pairs =
            enumerate_nonintersecting_pairs(shape, {mu.row, shape.cols()}, {shape.rows(), mu.col});
        for (auto x = xs.rbegin(); x != xs.rend(); ++x)
            for (auto pr = pairs.rbegin(); pr != pairs.rend(); ++pr)
                visit(FacetProfile{shape, mu, *x, pr->first, pr->second});
    }
}

inline std::vector<FacetProfile> enumerate_facets(const GridShape& shape)
{
    std::vector<FacetProfile> out;
    for_each_facet(shape, [&](const FacetProfile& p) { out.push_back(p); });
    return out;
}

inline std::uint64_t count_facets(const GridShape& shape)
{
    std::uint64_t n = 0;
    for_each_facet(shape, [&](const FacetProfile&) { ++n; });
    return n;
}

/**
 * Every way to split `ys` (a set of cells) into an upper path (1,1) -> (i,n)
 * and a lower path (2,1) -> (m,j) covering it exactly, for pivot (i,j).
 * For a facet there is exactly one.
 */
inline std::vector<PathPair> y_decompositions(const GridShape& shape, Cell pivot,
                                              const std::vector<Cell>& ys)
{
    std::vector<char> blocked(static_cast<std::size_t>(shape.cells()), 1);
    for (const Cell& c : ys)
        blocked[(c.row - 1) * shape.cols() + (c.col - 1)] = 0;

    const Cell upper_start{1, 1};
    const Cell upper_end{pivot.row, shape.cols()};
    const Cell lower_start{2, 1};
    const Cell lower_end{shape.rows(), pivot.col};

    std::vector<PathPair> out;
    std::vector<Step> prefix;
    detail::extend_paths(blocked, shape.cols(), upper_start, upper_end, prefix,
                         [&](const std::vector<Step>& s) {
                             LatticePath upper(Layer::Y, upper_start, upper_end, s);
                             const auto used = upper.cells();
                             std::vector<Cell> rest;
                             for (const Cell& c : ys)
                                 if (std::find(used.begin(), used.end(), c) == used.end())
                                     rest.push_back(c);
                             std::sort(rest.begin(), rest.end());
                             if (rest.empty() || rest.front() != lower_start ||
                                 rest.back() != lower_end)
                                 return;
                             try {
                                 out.emplace_back(std::move(upper),
                                                  LatticePath::from_cells(Layer::Y, rest));
                             }
                             catch (const DomainError&) {
                             }
                         });
    return out;
}

/**
 * Recovers the profile of a facet given as a vertex set. Throws
 * ClassificationError naming the first structural condition that fails.
 */
inline FacetProfile decompose(const GridShape& shape, const VertexSet& facet)
{
    if (!(facet.shape() == shape))
        throw DomainError("vertex set belongs to a different grid shape");
    const auto expected = static_cast<std::size_t>(krull_dimension(shape));
    if (facet.size() != expected)
        throw ClassificationError("not a facet: has " + std::to_string(facet.size()) +
                                  " vertices, facets have " + std::to_string(expected));

    const Cell corner{shape.rows(), shape.cols()};
    if (!facet.contains(xv(corner.row, corner.col)))
        throw ClassificationError("not a facet: missing x[m,n]");

    std::vector<Cell> xs;
    std::vector<Cell> ys;
    for (const Vertex& v : facet.vertices())
        (v.layer == Layer::X ? xs : ys).push_back(v.cell());

    if (xs.size() < 2)
        throw ClassificationError("not a facet: fewer than two x vertices");
    const Cell mu = xs.front();
    std::optional<LatticePath> x_path;
    try {
        x_path = LatticePath::from_cells(Layer::X, xs);
    }
    catch (const DomainError&) {
        throw ClassificationError("not a facet: x vertices do not form a single path to x[m,n]");
    }

    auto pairs = y_decompositions(shape, mu, ys);
    if (pairs.empty())
        throw ClassificationError(
            "not a facet: y vertices do not split into disjoint paths (1,1)->(" +
            std::to_string(mu.row) + "," + std::to_string(shape.cols()) + ") and (2,1)->(" +
            std::to_string(shape.rows()) + "," + std::to_string(mu.col) + ")");
    return FacetProfile{shape, mu, std::move(*x_path), std::move(pairs.front().first),
                        std::move(pairs.front().second)};
}

} // namespace srjet

#endif // SRJET_FACETS_HPP
