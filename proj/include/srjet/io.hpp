#ifndef SRJET_IO_HPP
#define SRJET_IO_HPP

// JSON and plain-text renderings shared by the command-line tool.
//
// Every JSON document is {"schema_version", "command", "shape", "payload"}.
// Counts are decimal strings; object keys are emitted sorted.

#include <string>
#include <vector>

#include "json.hpp"

#include "srjet/counting.hpp"
#include "srjet/facets.hpp"
#include "srjet/grid.hpp"
#include "srjet/monomial_ideal.hpp"

namespace srjet::io {

using json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

inline json document(const std::string& command, const GridShape& shape, json payload)
{
    return json{{"schema_version", kSchemaVersion},
                {"command", command},
                {"shape", {{"m", shape.rows()}, {"n", shape.cols()}}},
                {"payload", std::move(payload)}};
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

inline json to_json(const Vertex& v)
{
    return json{{"layer", std::string(1, layer_char(v.layer))}, {"row", v.row}, {"col", v.col}};
}

inline json to_json(const VertexSet& s)
{
    json arr = json::array();
    for (const auto& v : s.vertices())
        arr.push_back(to_json(v));
    return arr;
}

inline json to_json(const Cell& c) { return json{{"row", c.row}, {"col", c.col}}; }

inline json to_json(const FacetProfile& p)
{
    return json{{"pivot", to_json(p.mu)},
                {"x_path", p.x_path.step_string()},
                {"y_upper", p.y_upper.step_string()},
                {"y_lower", p.y_lower.step_string()}};
}

inline std::string count_string(const Count& c) { return c.str(); }

inline std::string count_string(std::uint64_t c) { return std::to_string(c); }

// "pivot=(1,2) x=D upper=R lower=R"; an empty step string is a single cell.
inline std::string profile_text(const FacetProfile& p)
{
    return "pivot=(" + std::to_string(p.mu.row) + "," + std::to_string(p.mu.col) +
           ") x=" + p.x_path.step_string() + " upper=" + p.y_upper.step_string() +
           " lower=" + p.y_lower.step_string();
}

// "# family A" headers, one monomial per line below each.
inline std::string generators_text(const GeneratorSet& gens)
{
    std::string out;
    for (const auto& fam : gens.families()) {
        out += std::string("# family ") + family_char(fam.tag) + "\n";
        for (const auto& g : fam.members)
            out += to_string(g) + "\n";
    }
    return out;
}

inline json generators_json(const GeneratorSet& gens)
{
    json fams = json::object();
    for (const auto& fam : gens.families()) {
        json members = json::array();
        for (const auto& g : fam.members)
            members.push_back(to_json(g));
        fams[std::string(1, family_char(fam.tag))] = std::move(members);
    }
    return json{{"families", std::move(fams)},
                {"generator_count", count_string(static_cast<std::uint64_t>(gens.merged().size()))}};
}

} // namespace srjet::io

#endif // SRJET_IO_HPP
