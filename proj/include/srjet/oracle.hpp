#ifndef SRJET_ORACLE_HPP
#define SRJET_ORACLE_HPP

// Brute-force ground truth: scan every vertex subset of a small grid, count
// faces by size and collect the maximal ones.

#include <cstdint>
#include <string>
#include <vector>

#include "srjet/grid.hpp"
#include "srjet/monomial_ideal.hpp"

namespace srjet {

// 2^24 subsets is the largest scan we support.
inline constexpr int kOracleMaxVertices = 24;

enum class ScanMode {
    // Face bits computed incrementally from the subset minus its top vertex.
    Pruned,
    // Every subset is tested against every generator, nothing reused.
    Reference,
};

struct FaceCensus {
    GridShape shape;
    // faces_by_size[k] = number of faces with k vertices (dimension k - 1).
    std::vector<std::uint64_t> faces_by_size;
    // Maximal faces in canonical set order.
    std::vector<VertexSet> facets;

    std::uint64_t faces_of_dimension(int dim) const
    {
        const int size = dim + 1;
        if (size < 0 || size >= static_cast<int>(faces_by_size.size()))
            return 0;
        return faces_by_size[static_cast<std::size_t>(size)];
    }

    int max_dimension() const
    {
        int top = -1;
        for (std::size_t k = 0; k < faces_by_size.size(); ++k)
            if (faces_by_size[k] != 0)
                top = static_cast<int>(k) - 1;
        return top;
    }
};

inline void require_oracle_capacity(const GridShape& shape)
{
    if (shape.vertex_count() > kOracleMaxVertices)
        throw CapacityError("brute-force scan needs 2mn <= kOracleMaxVertices (" +
                            std::to_string(kOracleMaxVertices) + "), grid " +
                            std::to_string(shape.rows()) + "x" + std::to_string(shape.cols()) +
                            " has " + std::to_string(shape.vertex_count()) + " vertices");
}

inline FaceCensus enumerate_faces_bruteforce(const GridShape& shape,
                                             ScanMode mode = ScanMode::Pruned)
{
    require_oracle_capacity(shape);
    const int nv = shape.vertex_count();
    const std::uint32_t total = std::uint32_t{1} << nv;

    const GeneratorSet gens(shape);
    std::vector<std::uint32_t> masks;
    // by_top[v]: generators whose highest vertex index is v
    std::vector<std::vector<std::uint32_t>> by_top(static_cast<std::size_t>(nv));
    for (const auto& [tag, g] : gens.merged()) {
        std::uint32_t mask = 0;
        for (int i : g.indices())
            mask |= std::uint32_t{1} << i;
        masks.push_back(mask);
        by_top[static_cast<std::size_t>(31 - std::countl_zero(mask))].push_back(mask);
    }

    std::vector<std::uint8_t> face(total, 0);
    face[0] = 1;
    for (std::uint32_t s = 1; s < total; ++s) {
        bool ok = true;
        if (mode == ScanMode::Reference) {
            for (auto g : masks)
                if ((s & g) == g) {
                    ok = false;
                    break;
                }
        }
        else {
            const int top = 31 - std::countl_zero(s);
            ok = face[s & ~(std::uint32_t{1} << top)] != 0;
            if (ok)
                for (auto g : by_top[static_cast<std::size_t>(top)])
                    if ((s & g) == g) {
                        ok = false;
                        break;
                    }
        }
        face[s] = ok ? 1 : 0;
    }

    FaceCensus census{shape, std::vector<std::uint64_t>(static_cast<std::size_t>(nv) + 1, 0), {}};
    for (std::uint32_t s = 0; s < total; ++s) {
        if (face[s] == 0)
            continue;
        ++census.faces_by_size[static_cast<std::size_t>(std::popcount(s))];
        bool maximal = true;
        for (int v = 0; v < nv && maximal; ++v) {
            const std::uint32_t bit = std::uint32_t{1} << v;
            if ((s & bit) == 0 && face[s | bit] != 0)
                maximal = false;
        }
        if (maximal) {
            VertexSet f(shape);
            for (int v = 0; v < nv; ++v)
                if ((s >> v) & 1U)
                    f.insert(vertex_at(shape, v));
            census.facets.push_back(std::move(f));
        }
    }
    std::sort(census.facets.begin(), census.facets.end());
    return census;
}

inline std::vector<VertexSet> enumerate_facets_bruteforce(const GridShape& shape,
                                                          ScanMode mode = ScanMode::Pruned)
{
    return enumerate_faces_bruteforce(shape, mode).facets;
}

} // namespace srjet

#endif // SRJET_ORACLE_HPP
