#ifndef SRJET_GRID_HPP
#define SRJET_GRID_HPP

// Grid coordinates, the two vertex layers, vertex sets, monotone lattice
// paths and the non-intersecting path pairs that make up facet y-parts.
//
// All indices are 1-based: row in 1..m, col in 1..n.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "srjet/error.hpp"

namespace srjet {

class GridShape {
public:
    GridShape(int m, int n) : m_(m), n_(n)
    {
        if (m < 2 || n < m)
            throw DomainError("grid shape requires 2 <= m <= n, got m=" + std::to_string(m) +
                              ", n=" + std::to_string(n));
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    int cells() const { return m_ * n_; }
    int vertex_count() const { return 2 * m_ * n_; }

    friend bool operator==(const GridShape&, const GridShape&) = default;

private:
    int m_;
    int n_;
};

struct Cell {
    int row = 1;
    int col = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline bool in_grid(const GridShape& shape, Cell c)
{
    return c.row >= 1 && c.row <= shape.rows() && c.col >= 1 && c.col <= shape.cols();
}

inline void require_in_grid(const GridShape& shape, Cell c, const char* what)
{
    if (!in_grid(shape, c))
        throw DomainError(std::string(what) + " (" + std::to_string(c.row) + "," +
                          std::to_string(c.col) + ") lies outside the " +
                          std::to_string(shape.rows()) + "x" + std::to_string(shape.cols()) +
                          " grid");
}

enum class Layer : std::uint8_t { X = 0, Y = 1 };

inline char layer_char(Layer l) { return l == Layer::X ? 'x' : 'y'; }

// Ordered by layer (X first), then row, then column.
struct Vertex {
    Layer layer = Layer::X;
    int row = 1;
    int col = 1;

    Cell cell() const { return {row, col}; }

    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

inline Vertex xv(int row, int col) { return {Layer::X, row, col}; }
inline Vertex yv(int row, int col) { return {Layer::Y, row, col}; }

// "x[2,1]"
inline std::string to_string(const Vertex& v)
{
    return std::string(1, layer_char(v.layer)) + "[" + std::to_string(v.row) + "," +
           std::to_string(v.col) + "]";
}

inline std::ostream& operator<<(std::ostream& os, const Vertex& v) { return os << to_string(v); }

// Dense index in 0..2mn-1; increasing index agrees with the vertex order.
inline int vertex_index(const GridShape& shape, const Vertex& v)
{
    return (v.layer == Layer::Y ? shape.cells() : 0) + (v.row - 1) * shape.cols() + (v.col - 1);
}

inline Vertex vertex_at(const GridShape& shape, int index)
{
    const Layer layer = index >= shape.cells() ? Layer::Y : Layer::X;
    const int local = index % shape.cells();
    return {layer, local / shape.cols() + 1, local % shape.cols() + 1};
}

/**
 * A set of vertices of one grid, stored as a bitset over the 2mn vertex
 * indices. Iteration and comparison follow the canonical vertex order.
 */
class VertexSet {
public:
    explicit VertexSet(const GridShape& shape)
        : shape_(shape), words_((shape.vertex_count() + 63) / 64, 0)
    {
    }

    VertexSet(const GridShape& shape, std::initializer_list<Vertex> vs) : VertexSet(shape)
    {
        for (const auto& v : vs)
            insert(v);
    }

    template <class Range>
    static VertexSet from_range(const GridShape& shape, const Range& vs)
    {
        VertexSet s(shape);
        for (const auto& v : vs)
            s.insert(v);
        return s;
    }

    const GridShape& shape() const { return shape_; }

    void insert(const Vertex& v)
    {
        require_in_grid(shape_, v.cell(), "vertex");
        set_bit(vertex_index(shape_, v));
    }

    void erase(const Vertex& v)
    {
        require_in_grid(shape_, v.cell(), "vertex");
        const int i = vertex_index(shape_, v);
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    }

    bool contains(const Vertex& v) const
    {
        if (!in_grid(shape_, v.cell()))
            return false;
        return test_bit(vertex_index(shape_, v));
    }

    std::size_t size() const
    {
        std::size_t count = 0;
        for (auto w : words_)
            count += static_cast<std::size_t>(std::popcount(w));
        return count;
    }

    bool empty() const
    {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    bool is_subset_of(const VertexSet& other) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if ((words_[k] & ~other.words_[k]) != 0)
                return false;
        return true;
    }

    // |this \ other| without materializing the difference.
    std::size_t difference_size(const VertexSet& other) const
    {
        std::size_t count = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            count += static_cast<std::size_t>(std::popcount(words_[k] & ~other.words_[k]));
        return count;
    }

    VertexSet operator-(const VertexSet& other) const
    {
        VertexSet out = *this;
        for (std::size_t k = 0; k < words_.size(); ++k)
            out.words_[k] &= ~other.words_[k];
        return out;
    }

    VertexSet operator|(const VertexSet& other) const
    {
        VertexSet out = *this;
        for (std::size_t k = 0; k < words_.size(); ++k)
            out.words_[k] |= other.words_[k];
        return out;
    }

    VertexSet operator&(const VertexSet& other) const
    {
        VertexSet out = *this;
        for (std::size_t k = 0; k < words_.size(); ++k)
            out.words_[k] &= other.words_[k];
        return out;
    }

    // Sorted in the canonical vertex order.
    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        for (int i : indices())
            out.push_back(vertex_at(shape_, i));
        return out;
    }

    std::vector<int> indices() const
    {
        std::vector<int> out;
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                out.push_back(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
        return out;
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b)
    {
        return a.shape_ == b.shape_ && a.words_ == b.words_;
    }

    // Lexicographic on the sorted vertex lists.
    friend bool operator<(const VertexSet& a, const VertexSet& b)
    {
        const auto ia = a.indices();
        const auto ib = b.indices();
        return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
    }

private:
    void set_bit(int i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
    bool test_bit(int i) const { return ((words_[i / 64] >> (i % 64)) & 1U) != 0; }

    GridShape shape_;
    std::vector<std::uint64_t> words_;
};

// "x[1,2]*x[2,1]"
inline std::string to_string(const VertexSet& s, const std::string& sep = "*")
{
    std::string out;
    for (const auto& v : s.vertices()) {
        if (!out.empty())
            out += sep;
        out += to_string(v);
    }
    return out;
}

enum class Step : std::uint8_t { Right, Down };

/**
 * A monotone lattice path inside one layer. Each step moves one cell to the
 * right or one cell down, so the path visits drow + dcol + 1 distinct cells.
 */
class LatticePath {
public:
    LatticePath(Layer layer, Cell start, Cell end, std::vector<Step> steps)
        : layer_(layer), start_(start), end_(end), steps_(std::move(steps))
    {
        if (start.row > end.row || start.col > end.col)
            throw DomainError("lattice path endpoints are inverted");
        const auto downs = std::count(steps_.begin(), steps_.end(), Step::Down);
        const auto rights = static_cast<std::ptrdiff_t>(steps_.size()) - downs;
        if (downs != end.row - start.row || rights != end.col - start.col)
            throw DomainError("lattice path steps do not connect its endpoints");
    }

    // Builds a path from consecutive cells; throws if some move is not a
    // single right or down step.
    static LatticePath from_cells(Layer layer, const std::vector<Cell>& cells)
    {
        if (cells.empty())
            throw DomainError("a lattice path needs at least one cell");
        std::vector<Step> steps;
        for (std::size_t k = 1; k < cells.size(); ++k) {
            const Cell a = cells[k - 1];
            const Cell b = cells[k];
            if (b.row == a.row && b.col == a.col + 1)
                steps.push_back(Step::Right);
            else if (b.col == a.col && b.row == a.row + 1)
                steps.push_back(Step::Down);
            else
                throw DomainError("cells do not form a monotone lattice path");
        }
        return LatticePath(layer, cells.front(), cells.back(), std::move(steps));
    }

    Layer layer() const { return layer_; }
    Cell start() const { return start_; }
    Cell end() const { return end_; }
    const std::vector<Step>& steps() const { return steps_; }

    std::vector<Cell> cells() const
    {
        std::vector<Cell> out{start_};
        Cell c = start_;
        for (Step s : steps_) {
            if (s == Step::Right)
                ++c.col;
            else
                ++c.row;
            out.push_back(c);
        }
        return out;
    }

    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        for (const Cell& c : cells())
            out.push_back({layer_, c.row, c.col});
        return out;
    }

    bool contains(Cell c) const
    {
        const auto cs = cells();
        return std::find(cs.begin(), cs.end(), c) != cs.end();
    }

    // For each row start.row..end.row, the column at which the path first
    // occupies that row. Determines the path uniquely given its endpoints.
    std::vector<int> entry_columns() const
    {
        std::vector<int> out{start_.col};
        int col = start_.col;
        for (Step s : steps_) {
            if (s == Step::Right)
                ++col;
            else
                out.push_back(col);
        }
        return out;
    }

    // Interior cells entered by a Right step and left by a Down step.
    std::vector<Cell> right_turns() const
    {
        std::vector<Cell> out;
        Cell c = start_;
        for (std::size_t k = 0; k < steps_.size(); ++k) {
            if (steps_[k] == Step::Right)
                ++c.col;
            else
                ++c.row;
            if (k + 1 < steps_.size() && steps_[k] == Step::Right && steps_[k + 1] == Step::Down)
                out.push_back(c);
        }
        return out;
    }

    // "RDR"; empty for a single-cell path.
    std::string step_string() const
    {
        std::string out;
        for (Step s : steps_)
            out += s == Step::Right ? 'R' : 'D';
        return out;
    }

    friend bool operator==(const LatticePath&, const LatticePath&) = default;

private:
    Layer layer_;
    Cell start_;
    Cell end_;
    std::vector<Step> steps_;
};

inline LatticePath path_from_string(Layer layer, Cell start, const std::string& steps)
{
    std::vector<Step> out;
    Cell end = start;
    for (char ch : steps) {
        if (ch == 'R') {
            out.push_back(Step::Right);
            ++end.col;
        }
        else if (ch == 'D') {
            out.push_back(Step::Down);
            ++end.row;
        }
        else {
            throw DomainError(std::string("invalid step character '") + ch + "'");
        }
    }
    return LatticePath(layer, start, end, std::move(out));
}

namespace detail {

inline void extend_paths(const std::vector<char>& blocked, int cols, Cell cur, Cell end,
                         std::vector<Step>& prefix,
                         const std::function<void(const std::vector<Step>&)>& emit)
{
    if (blocked.size() > 0 && blocked[(cur.row - 1) * cols + (cur.col - 1)] != 0)
        return;
    if (cur == end) {
        emit(prefix);
        return;
    }
    if (cur.col < end.col) {
        prefix.push_back(Step::Right);
        extend_paths(blocked, cols, {cur.row, cur.col + 1}, end, prefix, emit);
        prefix.pop_back();
    }
    if (cur.row < end.row) {
        prefix.push_back(Step::Down);
        extend_paths(blocked, cols, {cur.row + 1, cur.col}, end, prefix, emit);
        prefix.pop_back();
    }
}

} // namespace detail

/**
 * All monotone paths from `start` to `end` in lexicographic order of their
 * step strings with Right < Down. There are binomial(drow + dcol, drow).
 */
inline std::vector<LatticePath> enumerate_paths(const GridShape& shape, Layer layer, Cell start,
                                                Cell end)
{
    require_in_grid(shape, start, "path start");
    require_in_grid(shape, end, "path end");
    if (start.row > end.row || start.col > end.col)
        throw DomainError("path endpoints are inverted");

    std::vector<LatticePath> out;
    std::vector<Step> prefix;
    detail::extend_paths({}, shape.cols(), start, end, prefix, [&](const std::vector<Step>& s) {
        out.emplace_back(layer, start, end, s);
    });
    return out;
}

using PathPair = std::pair<LatticePath, LatticePath>;

/**
 * Vertex-disjoint Y-layer pairs: upper path (1,1) -> upper_end and lower path
 * (2,1) -> lower_end. Ordered by the upper path's canonical order, then the
 * lower path's. The lower path is grown around the cells of the upper one,
 * never by filtering a Cartesian product.
 */
inline std::vector<PathPair> enumerate_nonintersecting_pairs(const GridShape& shape,
                                                             Cell upper_end, Cell lower_end)
{
    require_in_grid(shape, upper_end, "upper path end");
    require_in_grid(shape, lower_end, "lower path end");
    const Cell upper_start{1, 1};
    const Cell lower_start{2, 1};
    if (lower_end.row < lower_start.row)
        throw DomainError("lower path end must lie in row 2 or below");

    std::vector<PathPair> out;
    for (auto& upper : enumerate_paths(shape, Layer::Y, upper_start, upper_end)) {
        std::vector<char> blocked(static_cast<std::size_t>(shape.cells()), 0);
        for (const Cell& c : upper.cells())
            blocked[(c.row - 1) * shape.cols() + (c.col - 1)] = 1;
        std::vector<Step> prefix;
        detail::extend_paths(blocked, shape.cols(), lower_start, lower_end, prefix,
                             [&](const std::vector<Step>& s) {
                                 out.emplace_back(upper,
                                                  LatticePath(Layer::Y, lower_start, lower_end, s));
                             });
    }
    return out;
}

enum class Region : std::uint8_t { R1, R2, R3, R4 };

inline const char* to_string(Region r)
{
    switch (r) {
    case Region::R1: return "R1";
    case Region::R2: return "R2";
    case Region::R3: return "R3";
    case Region::R4: return "R4";
    }
    return "?";
}

// R1 = north-east of the pivot column, R2 = north-west block including the
// pivot, R3 = south-west, R4 = strictly south-east.
inline Region classify_region(Cell pivot, Cell cell)
{
    const bool upper = cell.row <= pivot.row;
    const bool left = cell.col <= pivot.col;
    if (upper)
        return left ? Region::R2 : Region::R1;
    return left ? Region::R3 : Region::R4;
}

inline Region classify_region(const GridShape& shape, Cell pivot, Cell cell)
{
    require_in_grid(shape, pivot, "pivot");
    require_in_grid(shape, cell, "cell");
    return classify_region(pivot, cell);
}

} // namespace srjet

#endif // SRJET_GRID_HPP
