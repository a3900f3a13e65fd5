#ifndef SRJET_SHELLING_HPP
#define SRJET_SHELLING_HPP

// Shelling of the facet list: the total order, the literal shelling check,
// explicit exchange witnesses, restriction faces and the h-vector.

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "srjet/counting.hpp"
#include "srjet/facets.hpp"
#include "srjet/grid.hpp"

namespace srjet {

/**
 * Path dominance between two paths with the same endpoints. `a` lies to the
 * right of `b`, in the sense of a walker travelling from start to end, when
 * it is weakly south-west of `b` everywhere: every entry column of `a` is at
 * most the matching entry column of `b`, and the paths differ.
 */
inline bool lies_right_of(const LatticePath& a, const LatticePath& b)
{
    if (a.start() != b.start() || a.end() != b.end())
        return false;
    const auto ea = a.entry_columns();
    const auto eb = b.entry_columns();
    bool strict = false;
    for (std::size_t r = 0; r < ea.size(); ++r) {
        if (ea[r] > eb[r])
            return false;
        strict = strict || ea[r] < eb[r];
    }
    return strict;
}

// The five generating relations of the facet partial order. Each states
// when P must precede Q.
namespace order_rules {

inline bool pivot_row_below(const FacetProfile& p, const FacetProfile& q)
{
    return p.mu.row > q.mu.row;
}

inline bool pivot_same_row_right(const FacetProfile& p, const FacetProfile& q)
{
    return p.mu.row == q.mu.row && p.mu.col > q.mu.col;
}

inline bool x_path_right(const FacetProfile& p, const FacetProfile& q)
{
    return p.mu == q.mu && lies_right_of(p.x_path, q.x_path);
}

inline bool upper_path_right(const FacetProfile& p, const FacetProfile& q)
{
    return p.x_path == q.x_path && lies_right_of(p.y_upper, q.y_upper);
}

inline bool lower_path_right(const FacetProfile& p, const FacetProfile& q)
{
    return p.x_path == q.x_path && p.y_upper == q.y_upper && lies_right_of(p.y_lower, q.y_lower);
}

inline bool forces_less(const FacetProfile& p, const FacetProfile& q)
{
    return pivot_row_below(p, q) || pivot_same_row_right(p, q) || x_path_right(p, q) ||
           upper_path_right(p, q) || lower_path_right(p, q);
}

} // namespace order_rules

/**
 * Total order on facets of one grid. Key, compared lexicographically:
 * pivot row (descending), pivot column (descending), then the entry-column
 * vectors of the x-path, upper y-path and lower y-path (ascending). Equal
 * exactly when the profiles, hence the vertex sets, coincide.
 */
inline std::strong_ordering compare(const FacetProfile& p, const FacetProfile& q)
{
    if (!(p.shape == q.shape))
        throw DomainError("cannot compare facets of different grid shapes");
    if (auto c = q.mu.row <=> p.mu.row; c != 0)
        return c;
    if (auto c = q.mu.col <=> p.mu.col; c != 0)
        return c;
    if (auto c = p.x_path.entry_columns() <=> q.x_path.entry_columns(); c != 0)
        return c;
    if (auto c = p.y_upper.entry_columns() <=> q.y_upper.entry_columns(); c != 0)
        return c;
    return p.y_lower.entry_columns() <=> q.y_lower.entry_columns();
}

/**
 * A sequence of facets together with their vertex sets. Positions are
 * 1-based throughout this module.
 */
class ShellingOrder {
public:
    ShellingOrder(const GridShape& shape, std::vector<FacetProfile> facets)
        : shape_(shape), facets_(std::move(facets))
    {
        sets_.reserve(facets_.size());
        for (std::size_t k = 0; k < facets_.size(); ++k) {
            if (!(facets_[k].shape == shape_))
                throw DomainError("facet list mixes grid shapes");
            sets_.push_back(facet_vertex_set(facets_[k]));
            position_.emplace(sets_.back(), k + 1);
        }
    }

    const GridShape& shape() const { return shape_; }
    std::size_t size() const { return facets_.size(); }
    const std::vector<FacetProfile>& facets() const { return facets_; }
    const std::vector<VertexSet>& vertex_sets() const { return sets_; }

    const FacetProfile& facet(std::size_t pos) const { return facets_.at(pos - 1); }
    const VertexSet& vertex_set(std::size_t pos) const { return sets_.at(pos - 1); }

    std::optional<std::size_t> position(const VertexSet& s) const
    {
        auto it = position_.find(s);
        if (it == position_.end())
            return std::nullopt;
        return it->second;
    }

private:
    GridShape shape_;
    std::vector<FacetProfile> facets_;
    std::vector<VertexSet> sets_;
    std::map<VertexSet, std::size_t> position_;
};

inline ShellingOrder shelling_sequence(const GridShape& shape)
{
    auto facets = enumerate_facets(shape);
    std::stable_sort(facets.begin(), facets.end(),
                     [](const auto& a, const auto& b) { return compare(a, b) < 0; });
    return ShellingOrder(shape, std::move(facets));
}

// For the pair (earlier, later): F_later \ F_via = {vertex}, vertex not in
// F_earlier, via < later.
struct PairCertificate {
    std::size_t later;
    std::size_t earlier;
    Vertex vertex;
    std::size_t via;
};

struct ShellingReport {
    bool valid = true;
    std::size_t pairs_checked = 0;
    std::vector<PairCertificate> certificates;
    // (later, earlier) of the first pair with no exchange vertex.
    std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
};

/**
 * Checks the shelling condition pair by pair: for all j < i there must be
 * v in F_i \ F_j and k < i with F_i \ F_k = {v}. Stops at the first failure.
 */
inline ShellingReport verify_shelling(const ShellingOrder& order, bool keep_certificates = true)
{
    ShellingReport report;
    const auto& sets = order.vertex_sets();
    const std::size_t e = sets.size();
    for (std::size_t i = 1; i < e; ++i) {
        // predecessors differing from F_i in exactly one vertex
        std::vector<std::pair<std::size_t, Vertex>> neighbours;
        for (std::size_t k = 0; k < i; ++k) {
            if (sets[i].difference_size(sets[k]) == 1)
                neighbours.emplace_back(k, (sets[i] - sets[k]).vertices().front());
        }
        for (std::size_t j = 0; j < i; ++j) {
            ++report.pairs_checked;
            bool found = false;
            for (const auto& [k, v] : neighbours) {
                if (!sets[j].contains(v)) {
                    if (keep_certificates)
                        report.certificates.push_back({i + 1, j + 1, v, k + 1});
                    found = true;
                    break;
                }
            }
            if (!found) {
                report.valid = false;
                report.failing_pair = std::make_pair(i + 1, j + 1);
                return report;
            }
        }
    }
    return report;
}

/**
 * Vertices v of F_i such that F_i \ {v} lies in an earlier facet. Empty for
 * the first facet.
 */
inline VertexSet restriction_face(const ShellingOrder& order, std::size_t pos)
{
    if (pos < 1 || pos > order.size())
        throw std::out_of_range("restriction_face: position " + std::to_string(pos) +
                                " outside 1.." + std::to_string(order.size()));
    const auto& sets = order.vertex_sets();
    const VertexSet& f = sets[pos - 1];
    VertexSet out(order.shape());
    for (std::size_t k = 0; k + 1 < pos; ++k)
        if (f.difference_size(sets[k]) == 1)
            for (const Vertex& v : (f - sets[k]).vertices())
                out.insert(v);
    return out;
}

// h_k = number of facets whose restriction face has k vertices, k = 0..d.
inline std::vector<Count> h_vector(const ShellingOrder& order)
{
    std::vector<Count> h(static_cast<std::size_t>(krull_dimension(order.shape())) + 1, 0);
    for (std::size_t pos = 1; pos <= order.size(); ++pos) {
        const auto k = restriction_face(order, pos).size();
        if (k >= h.size())
            throw ConsistencyError("restriction face larger than a facet");
        h[k] += 1;
    }
    return h;
}

/**
 * Face counts by size from an h-vector of a shellable complex whose facets
 * have d vertices: f_s = sum_k h_k C(d - k, s - k). Entry s counts faces
 * with s vertices, so entry 0 is the empty face.
 */
inline std::vector<Count> f_vector_from_h(const std::vector<Count>& h)
{
    const long long d = static_cast<long long>(h.size()) - 1;
    std::vector<Count> f(h.size(), 0);
    for (long long s = 0; s <= d; ++s)
        for (long long k = 0; k <= s; ++k)
            f[static_cast<std::size_t>(s)] += h[static_cast<std::size_t>(k)] * binomial(d - k, s - k);
    return f;
}

enum class WitnessCase {
    // pivot differs: the pivot is dropped and the x-path starts one step later
    PivotStepRight,
    PivotStepDown,
    // as above, but the added y vertex was already present and the
    // neighbouring path is rerouted around the new pivot's endpoint
    PivotStepRightRerouted,
    PivotStepDownRerouted,
    // pivot (m-1, n): x-path becomes x[m,n-1] x[m,n]
    PivotSpecial,
    // same pivot, x-paths differ: flip a right turn of Q_x
    XCorner,
    // same x-path, upper paths differ: flip a right turn of Q's upper path
    UpperCorner,
    // ... whose flip lands on Q's lower path, which is flipped as well
    UpperDoubleCascade,
    // same x-path and upper path: flip a right turn of Q's lower path
    LowerCorner,
};

// 1: pivot differs, 2: x-paths differ, 3: upper paths differ, 4: lower paths.
inline int proof_case(WitnessCase w)
{
    switch (w) {
    case WitnessCase::PivotStepRight:
    case WitnessCase::PivotStepDown:
    case WitnessCase::PivotStepRightRerouted:
    case WitnessCase::PivotStepDownRerouted:
    case WitnessCase::PivotSpecial: return 1;
    case WitnessCase::XCorner: return 2;
    case WitnessCase::UpperCorner:
    case WitnessCase::UpperDoubleCascade: return 3;
    case WitnessCase::LowerCorner: return 4;
    }
    return 0;
}

inline const char* to_string(WitnessCase w)
{
    switch (w) {
    case WitnessCase::PivotStepRight: return "pivot-step-right";
    case WitnessCase::PivotStepDown: return "pivot-step-down";
    case WitnessCase::PivotStepRightRerouted: return "pivot-step-right-rerouted";
    case WitnessCase::PivotStepDownRerouted: return "pivot-step-down-rerouted";
    case WitnessCase::PivotSpecial: return "pivot-special";
    case WitnessCase::XCorner: return "x-corner";
    case WitnessCase::UpperCorner: return "upper-corner";
    case WitnessCase::UpperDoubleCascade: return "upper-double-cascade";
    case WitnessCase::LowerCorner: return "lower-corner";
    }
    return "?";
}

struct ShellingWitness {
    FacetProfile later;        // Q
    FacetProfile earlier;      // P
    Vertex pivot_vertex;       // v in Q \ P
    FacetProfile intermediate; // R < Q with Q \ R = {v}
    WitnessCase kind;
};

/**
 * First right turn of `q` lying strictly north-east of `p` (same endpoints).
 * Exists whenever q != p and q is not to the right of p in the lexicographic
 * sense: take the first row r where q enters east of p; the cell where q
 * leaves row r - 1 is such a turn.
 */
inline std::optional<Cell> first_turn_left_of(const LatticePath& q, const LatticePath& p)
{
    const auto eq = q.entry_columns();
    const auto ep = p.entry_columns();
    for (std::size_t r = 1; r < eq.size() && r < ep.size(); ++r)
        if (eq[r] > ep[r])
            return Cell{q.start().row + static_cast<int>(r) - 1, eq[r]};
    return std::nullopt;
}

/**
 * Builds v in Q \ P and R < Q with Q \ R = {v}, following the four-way case
 * split on where P and Q first differ. The returned R is canonicalized via
 * decompose(). Throws PreconditionError unless P < Q, and ConsistencyError
 * if the constructed R fails any postcondition.
 */
inline ShellingWitness construct_witness(const FacetProfile& p, const FacetProfile& q,
                                         const ShellingOrder& order)
{
    if (compare(p, q) >= 0)
        throw PreconditionError("construct_witness requires P < Q");
    const GridShape& shape = q.shape;
    const int m = shape.rows();
    const int n = shape.cols();
    const VertexSet qset = facet_vertex_set(q);
    const VertexSet pset = facet_vertex_set(p);

    Vertex v{};
    Vertex added{};
    WitnessCase kind{};

    auto required_turn = [&](const LatticePath& qp, const LatticePath& pp) {
        auto t = first_turn_left_of(qp, pp);
        if (!t)
            throw ConsistencyError("no right turn of Q lies strictly left of P");
        return *t;
    };

    if (p.mu != q.mu) {
        const auto [i, j] = q.mu;
        v = xv(i, j);
        if (i == m - 1 && j == n) {
            added = xv(m, n - 1);
            kind = WitnessCase::PivotSpecial;
        }
        else {
            const Cell next = q.x_path.cells().at(1);
            if (next == Cell{i, j + 1}) {
                added = yv(m, j + 1);
                kind = WitnessCase::PivotStepRight;
                if (qset.contains(added)) {
                    // only when i = m: the upper path enters row m at j+1
                    added = yv(m - 1, j + 2);
                    kind = WitnessCase::PivotStepRightRerouted;
                }
            }
            else {
                added = yv(i + 1, n);
                kind = WitnessCase::PivotStepDown;
                if (qset.contains(added)) {
                    // only when j = n: the lower path enters column n at i+1
                    added = yv(i + 2, n - 1);
                    kind = WitnessCase::PivotStepDownRerouted;
                }
            }
        }
    }
    else if (p.x_path != q.x_path) {
        const Cell h = required_turn(q.x_path, p.x_path);
        v = xv(h.row, h.col);
        added = xv(h.row + 1, h.col - 1);
        kind = WitnessCase::XCorner;
    }
    else if (p.y_upper != q.y_upper) {
        const Cell h = required_turn(q.y_upper, p.y_upper);
        v = yv(h.row, h.col);
        if (q.y_lower.contains({h.row + 1, h.col - 1})) {
            added = yv(h.row + 2, h.col - 2);
            kind = WitnessCase::UpperDoubleCascade;
        }
        else {
            added = yv(h.row + 1, h.col - 1);
            kind = WitnessCase::UpperCorner;
        }
    }
    else {
        const Cell h = required_turn(q.y_lower, p.y_lower);
        v = yv(h.row, h.col);
        added = yv(h.row + 1, h.col - 1);
        kind = WitnessCase::LowerCorner;
    }

    if (!in_grid(shape, added.cell()))
        throw ConsistencyError("witness vertex " + to_string(added) + " leaves the grid");
    VertexSet rset = qset;
    rset.erase(v);
    rset.insert(added);

    std::optional<FacetProfile> r;
    try {
        r = decompose(shape, rset);
    }
    catch (const ClassificationError& e) {
        throw ConsistencyError(std::string("witness (") + to_string(kind) +
                               ") is not a facet: " + e.what());
    }

    if (!qset.contains(v) || pset.contains(v))
        throw ConsistencyError("witness vertex is not in Q \\ P");
    if (!((qset - rset) == VertexSet(shape, {v})))
        throw ConsistencyError("Q \\ R is not the witness vertex");
    if (compare(*r, q) >= 0)
        throw ConsistencyError(std::string("witness (") + to_string(kind) + ") has R >= Q");
    if (!order.position(rset))
        throw ConsistencyError("witness facet R is missing from the facet order");

    return ShellingWitness{q, p, v, std::move(*r), kind};
}

} // namespace srjet

#endif // SRJET_SHELLING_HPP
