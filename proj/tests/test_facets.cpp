#include <catch2/catch_amalgamated.hpp>

#include "srjet/counting.hpp"
#include "srjet/facets.hpp"
#include "srjet/monomial_ideal.hpp"
#include "srjet/oracle.hpp"

using namespace srjet;

namespace {

std::vector<VertexSet> sorted_sets(const std::vector<FacetProfile>& profiles)
{
    std::vector<VertexSet> out;
    for (const auto& p : profiles)
        out.push_back(facet_vertex_set(p));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST_CASE("(2,2) facet profiles", "[facets]")
{
    const GridShape shape(2, 2);
    const auto fs = enumerate_facets(shape);
    REQUIRE(fs.size() == 4);
    CHECK(fs[0].mu == Cell{2, 1});
    CHECK(fs[1].mu == Cell{1, 2});
    CHECK(fs[2].mu == Cell{1, 1});
    CHECK(fs[3].mu == Cell{1, 1});
    CHECK(facet_vertex_set(fs[0]) ==
          VertexSet(shape, {xv(2, 1), xv(2, 2), yv(1, 1), yv(1, 2), yv(2, 2), yv(2, 1)}));
    CHECK(sorted_sets(fs) == enumerate_facets_bruteforce(shape));
}

TEST_CASE("facet counts for small grids", "[facets]")
{
    CHECK(enumerate_facets(GridShape(3, 3)).size() == 36);
    for (int m = 2; m <= 6; ++m)
        for (int n = m; n <= 6; ++n) {
            const GridShape shape(m, n);
            const Count c(count_facets(shape));
            CHECK(c == multiplicity_sum(shape));
            CHECK(c == multiplicity_closed(shape));
        }
}

TEST_CASE("structured facets equal oracle facets", "[facets][oracle]")
{
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 4}, {3, 4}}) {
        const GridShape shape(m, n);
        INFO(m << "x" << n);
        const auto sets = sorted_sets(enumerate_facets(shape));
        CHECK(std::adjacent_find(sets.begin(), sets.end()) == sets.end());
        CHECK(sets == enumerate_facets_bruteforce(shape));
    }
}

TEST_CASE("facet structure", "[facets]")
{
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= 5; ++n) {
            const GridShape shape(m, n);
            const GeneratorSet gens(shape);
            for (const auto& p : enumerate_facets(shape)) {
                const auto s = facet_vertex_set(p);
                CHECK(s.size() == static_cast<std::size_t>(krull_dimension(shape)));
                CHECK(gens.is_face(s));
                CHECK(s.contains(xv(m, n)));
                CHECK(s.contains(yv(p.mu.row, n)));
                CHECK(s.contains(yv(m, p.mu.col)));
                CHECK(s.vertices().front() == xv(p.mu.row, p.mu.col));
                for (const auto& v : s.vertices())
                    if (v.layer == Layer::Y)
                        CHECK(classify_region(p.mu, v.cell()) != Region::R4);
            }
        }
}

TEST_CASE("facet_vertex_set examples", "[facets]")
{
    for (const auto& p : enumerate_facets(GridShape(3, 4)))
        CHECK(facet_vertex_set(p).size() == 12);
    const GridShape g23(2, 3);
    bool seen = false;
    for (const auto& p : enumerate_facets(g23))
        if (p.mu == Cell{1, 2}) {
            seen = true;
            CHECK(facet_vertex_set(p).contains(yv(1, 3)));
            CHECK(facet_vertex_set(p).contains(yv(2, 2)));
        }
    CHECK(seen);
}

TEST_CASE("decompose the bottom-row (2,2) facet", "[facets][decompose]")
{
    const GridShape shape(2, 2);
    const VertexSet f(shape, {xv(2, 1), xv(2, 2), yv(1, 1), yv(1, 2), yv(2, 2), yv(2, 1)});
    const auto p = decompose(shape, f);
    CHECK(p.mu == Cell{2, 1});
    CHECK(p.x_path.step_string() == "R");
    CHECK(p.y_upper.end() == Cell{2, 2});
    CHECK(p.y_upper.step_string() == "RD");
    CHECK(p.y_lower.cells() == std::vector<Cell>{{2, 1}});
}

TEST_CASE("decompose round-trips and is unique", "[facets][decompose]")
{
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 3}, {2, 5}, {3, 4}, {4, 4}}) {
        const GridShape shape(m, n);
        for (const auto& p : enumerate_facets(shape)) {
            const auto s = facet_vertex_set(p);
            const auto q = decompose(shape, s);
            CHECK(q == p);
            CHECK(facet_vertex_set(q) == s);
            std::vector<Cell> ys;
            for (const auto& v : s.vertices())
                if (v.layer == Layer::Y)
                    ys.push_back(v.cell());
            CHECK(y_decompositions(shape, p.mu, ys).size() == 1);
        }
    }
}

TEST_CASE("decompose rejects non-facets", "[facets][decompose]")
{
    const GridShape shape(3, 3);
    const auto facets = enumerate_facets(shape);
    const auto s = facet_vertex_set(facets[5]);

    auto message = [&](const VertexSet& v) {
        try {
            decompose(shape, v);
        }
        catch (const ClassificationError& e) {
            return std::string(e.what());
        }
        return std::string("accepted");
    };

    auto dropped = s;
    dropped.erase(s.vertices().back());
    CHECK(message(dropped).find("vertices") != std::string::npos);

    // right size, x[m,n] swapped for an absent y vertex
    VertexSet no_corner(shape);
    for (const auto& v : s.vertices())
        if (v != xv(3, 3))
            no_corner.insert(v);
    for (int i = 0; i < shape.vertex_count() && no_corner.size() < s.size(); ++i)
        if (vertex_at(shape, i).layer == Layer::Y && !s.contains(vertex_at(shape, i)))
            no_corner.insert(vertex_at(shape, i));
    CHECK(message(no_corner).find("x[m,n]") != std::string::npos);

    // x vertices (1,1) and (3,3) only: not a path
    VertexSet gap(shape, {xv(1, 1), xv(3, 3)});
    for (int i = 0; i < shape.vertex_count() && gap.size() < s.size(); ++i)
        if (vertex_at(shape, i).layer == Layer::Y)
            gap.insert(vertex_at(shape, i));
    CHECK(message(gap).find("single path") != std::string::npos);

    // valid x-path, y vertices are the first seven in canonical order
    VertexSet bad_y(shape, {xv(2, 2), xv(2, 3), xv(3, 3)});
    for (int i = 0; i < shape.vertex_count() && bad_y.size() < s.size(); ++i)
        if (vertex_at(shape, i).layer == Layer::Y)
            bad_y.insert(vertex_at(shape, i));
    CHECK(message(bad_y).find("disjoint paths") != std::string::npos);

    CHECK_THROWS_AS(decompose(GridShape(2, 3), s), DomainError);
}
