#ifndef SRJET_MONOMIAL_IDEAL_HPP
#define SRJET_MONOMIAL_IDEAL_HPP

// The squarefree generators of the leading-term ideal, in five families, and
// the face test of its Stanley-Reisner complex.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "srjet/grid.hpp"

namespace srjet {

enum class FamilyTag : std::uint8_t { A, B, C, D, E };

inline constexpr std::array<FamilyTag, 5> kAllFamilies{FamilyTag::A, FamilyTag::B, FamilyTag::C,
                                                       FamilyTag::D, FamilyTag::E};

inline char family_char(FamilyTag t) { return static_cast<char>('A' + static_cast<int>(t)); }

// A squarefree monomial is just its support.
using Monomial = VertexSet;

struct GeneratorFamily {
    FamilyTag tag;
    std::vector<Monomial> members;
};

/**
 * Generator families, each sorted canonically:
 *
 *   A  x[i,l] x[j,k]              i < j,          k < l
 *   B  x[i,k] y[j,l]              i < j,          k < l
 *   C  x[k,p] y[j,q] y[i,r]       i < j <= k,     p < q < r
 *   D  x[i,r] y[j,q] y[k,p]       i < j < k,      p < q <= r
 *   E  y[i,r] y[j,q] y[k,p]       i < j < k,      p < q < r
 */
class GeneratorSet {
public:
    explicit GeneratorSet(const GridShape& shape) : shape_(shape)
    {
        const int m = shape.rows();
        const int n = shape.cols();
        for (auto tag : kAllFamilies)
            families_.push_back({tag, {}});
        auto add = [&](FamilyTag tag, std::initializer_list<Vertex> vs) {
            families_[static_cast<int>(tag)].members.push_back(Monomial(shape, vs));
        };

        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                for (int k = 1; k <= n; ++k)
                    for (int l = k + 1; l <= n; ++l) {
                        add(FamilyTag::A, {xv(i, l), xv(j, k)});
                        add(FamilyTag::B, {xv(i, k), yv(j, l)});
                    }

        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                for (int k = j; k <= m; ++k)
                    for (int p = 1; p <= n; ++p)
                        for (int q = p + 1; q <= n; ++q)
                            for (int r = q + 1; r <= n; ++r)
                                add(FamilyTag::C, {xv(k, p), yv(j, q), yv(i, r)});

        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                for (int k = j + 1; k <= m; ++k)
                    for (int p = 1; p <= n; ++p)
                        for (int q = p + 1; q <= n; ++q)
                            for (int r = q; r <= n; ++r)
                                add(FamilyTag::D, {xv(i, r), yv(j, q), yv(k, p)});

        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                for (int k = j + 1; k <= m; ++k)
                    for (int p = 1; p <= n; ++p)
                        for (int q = p + 1; q <= n; ++q)
                            for (int r = q + 1; r <= n; ++r)
                                add(FamilyTag::E, {yv(i, r), yv(j, q), yv(k, p)});

        for (auto& fam : families_)
            std::sort(fam.members.begin(), fam.members.end());
        for (const auto& fam : families_)
            for (const auto& g : fam.members)
                merged_.emplace_back(fam.tag, g);
        std::sort(merged_.begin(), merged_.end(),
                  [](const auto& a, const auto& b) { return a.second < b.second; });
        merged_.erase(std::unique(merged_.begin(), merged_.end(),
                                  [](const auto& a, const auto& b) { return a.second == b.second; }),
                      merged_.end());
    }

    const GridShape& shape() const { return shape_; }
    const std::vector<GeneratorFamily>& families() const { return families_; }
    const GeneratorFamily& family(FamilyTag tag) const { return families_[static_cast<int>(tag)]; }

    // All generators, deduplicated, in canonical monomial order.
    const std::vector<std::pair<FamilyTag, Monomial>>& merged() const { return merged_; }

    // True iff no generator divides the candidate.
    bool is_face(const VertexSet& candidate) const
    {
        check_shape(candidate);
        for (const auto& [tag, g] : merged_)
            if (g.is_subset_of(candidate))
                return false;
        return true;
    }

    std::vector<std::pair<FamilyTag, Monomial>> violating_generators(const VertexSet& candidate) const
    {
        check_shape(candidate);
        std::vector<std::pair<FamilyTag, Monomial>> out;
        for (const auto& fam : families_)
            for (const auto& g : fam.members)
                if (g.is_subset_of(candidate))
                    out.emplace_back(fam.tag, g);
        return out;
    }

private:
    void check_shape(const VertexSet& s) const
    {
        if (!(s.shape() == shape_))
            throw DomainError("vertex set belongs to a different grid shape");
    }

    GridShape shape_;
    std::vector<GeneratorFamily> families_;
    std::vector<std::pair<FamilyTag, Monomial>> merged_;
};

inline GeneratorSet generators(const GridShape& shape) { return GeneratorSet(shape); }

inline bool is_face(const GridShape& shape, const VertexSet& candidate)
{
    return GeneratorSet(shape).is_face(candidate);
}

inline std::vector<std::pair<FamilyTag, Monomial>> violating_generators(const GridShape& shape,
                                                                        const VertexSet& candidate)
{
    return GeneratorSet(shape).violating_generators(candidate);
}

} // namespace srjet

#endif // SRJET_MONOMIAL_IDEAL_HPP
