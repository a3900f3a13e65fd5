#ifndef SRJET_CLI_HPP
#define SRJET_CLI_HPP

// Command-line front end. run_cli() is the whole program minus main(), so
// tests can drive it with in-memory streams.
//
// Exit status: 0 ok, 1 bad grid shape, 2 oracle size guard, 3 a check
// failed, 64 usage error.

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "srjet/counting.hpp"
#include "srjet/facets.hpp"
#include "srjet/io.hpp"
#include "srjet/monomial_ideal.hpp"
#include "srjet/oracle.hpp"
#include "srjet/shelling.hpp"

namespace srjet::cli {

enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,
    kCapacityError = 2,
    kVerificationFailed = 3,
    kUsage = 64,
};

struct Options {
    int rows = 0;
    int cols = 0;
    std::string format = "json";
    std::string out;
    bool profile = false;
    bool no_prune = false;
    bool certificates = false;
};

struct Output {
    int status = kOk;
    std::string body;
};

namespace detail {

using io::json;

inline const char* yes_no(bool b) { return b ? "true" : "false"; }

inline Output finish(const Options& opt, const std::string& command, const GridShape& shape,
                     json payload, std::string text, int status = kOk)
{
    if (opt.format == "text")
        return {status, std::move(text)};
    return {status, io::dump(io::document(command, shape, std::move(payload)))};
}

inline Output cmd_generators(const Options& opt)
{
    const GridShape shape(opt.rows, opt.cols);
    const GeneratorSet gens(shape);
    return finish(opt, "generators", shape, io::generators_json(gens), io::generators_text(gens));
}

inline Output cmd_facets(const Options& opt)
{
    const GridShape shape(opt.rows, opt.cols);
    json facets = json::array();
    std::string text;
    std::uint64_t count = 0;
    for_each_facet(shape, [&](const FacetProfile& p) {
        ++count;
        const VertexSet s = facet_vertex_set(p);
        json entry{{"vertices", io::to_json(s)}};
        std::string line = to_string(s, " ");
        if (opt.profile) {
            entry["profile"] = io::to_json(p);
            line += " | " + io::profile_text(p);
        }
        facets.push_back(std::move(entry));
        text += line + "\n";
    });
    json payload{{"facet_count", io::count_string(count)}, {"facets", std::move(facets)}};
    return finish(opt, "facets", shape, std::move(payload), text);
}

inline Output cmd_oracle(const Options& opt)
{
    const GridShape shape(opt.rows, opt.cols);
    const auto census =
        enumerate_faces_bruteforce(shape, opt.no_prune ? ScanMode::Reference : ScanMode::Pruned);
    json fvec = json::array();
    std::string text;
    for (std::size_t k = 0; k < census.faces_by_size.size(); ++k) {
        const int dim = static_cast<int>(k) - 1;
        if (dim > census.max_dimension())
            break;
        fvec.push_back({{"dim", dim}, {"count", io::count_string(census.faces_by_size[k])}});
        text += "dim " + std::to_string(dim) + ": " + io::count_string(census.faces_by_size[k]) + "\n";
    }
    json facets = json::array();
    for (const auto& f : census.facets) {
        facets.push_back(io::to_json(f));
        text += "facet: " + to_string(f, " ") + "\n";
    }
    json payload{{"scan", opt.no_prune ? "reference" : "pruned"},
                 {"f_vector", std::move(fvec)},
                 {"facet_count", io::count_string(static_cast<std::uint64_t>(census.facets.size()))},
                 {"facets", std::move(facets)}};
    return finish(opt, "oracle", shape, std::move(payload), text);
}

inline Output cmd_count(const Options& opt)
{
    const GridShape shape(opt.rows, opt.cols);
    const Count sum = multiplicity_sum(shape);
    const Count closed = multiplicity_closed(shape);
    const bool agree = sum == closed;
    const int krull = krull_dimension(shape);
    json payload{{"sum_formula", io::count_string(sum)},
                 {"closed_form", io::count_string(closed)},
                 {"agree", agree},
                 {"krull_dimension", krull},
                 {"complex_dimension", krull - 1}};
    std::string text = "sum_formula: " + io::count_string(sum) + "\nclosed_form: " +
                       io::count_string(closed) + "\nagree: " + yes_no(agree) +
                       "\nkrull_dimension: " + std::to_string(krull) +
                       "\ncomplex_dimension: " + std::to_string(krull - 1) + "\n";
    return finish(opt, "count", shape, std::move(payload), std::move(text),
                  agree ? kOk : kVerificationFailed);
}

inline Output cmd_check(const Options& opt)
{
    const GridShape shape(opt.rows, opt.cols);
    const auto oracle =
        enumerate_facets_bruteforce(shape, opt.no_prune ? ScanMode::Reference : ScanMode::Pruned);
    std::vector<VertexSet> structured;
    for_each_facet(shape, [&](const FacetProfile& p) { structured.push_back(facet_vertex_set(p)); });
    std::sort(structured.begin(), structured.end());

    json only_oracle = json::array();
    json only_structured = json::array();
    std::string diff_text;
    for (const auto& f : oracle)
        if (!std::binary_search(structured.begin(), structured.end(), f)) {
            only_oracle.push_back(io::to_json(f));
            diff_text += "only_in_oracle: " + to_string(f, " ") + "\n";
        }
    for (const auto& f : structured)
        if (!std::binary_search(oracle.begin(), oracle.end(), f)) {
            only_structured.push_back(io::to_json(f));
            diff_text += "only_in_structured: " + to_string(f, " ") + "\n";
        }
    const bool equal = oracle == structured;
    json payload{{"oracle_facets", io::count_string(static_cast<std::uint64_t>(oracle.size()))},
                 {"structured_facets",
                  io::count_string(static_cast<std::uint64_t>(structured.size()))},
                 {"equal", equal},
                 {"only_in_oracle", std::move(only_oracle)},
                 {"only_in_structured", std::move(only_structured)}};
    std::string text = "oracle_facets: " + std::to_string(oracle.size()) +
                       "\nstructured_facets: " + std::to_string(structured.size()) +
                       "\nequal: " + yes_no(equal) + "\n" + diff_text;
    return finish(opt, "check", shape, std::move(payload), std::move(text),
                  equal ? kOk : kVerificationFailed);
}

inline Output cmd_shelling_verify(const Options& opt)
{
    const GridShape shape(opt.rows, opt.cols);
    const ShellingOrder order = shelling_sequence(shape);
    const ShellingReport report = verify_shelling(order, false);

    bool witnesses_ok = true;
    std::string witness_error;
    std::map<std::string, std::uint64_t> cases;
    json witnesses = json::array();
    std::string witness_text;
    for (std::size_t b = 2; b <= order.size() && witnesses_ok; ++b) {
        for (std::size_t a = 1; a < b; ++a) {
            try {
                const auto w = construct_witness(order.facet(a), order.facet(b), order);
                ++cases[to_string(w.kind)];
                if (opt.certificates) {
                    const auto r = *order.position(facet_vertex_set(w.intermediate));
                    witnesses.push_back({{"later", b},
                                         {"earlier", a},
                                         {"vertex", io::to_json(w.pivot_vertex)},
                                         {"intermediate", r},
                                         {"case", to_string(w.kind)}});
                    witness_text += "witness later=" + std::to_string(b) + " earlier=" +
                                    std::to_string(a) + " vertex=" + to_string(w.pivot_vertex) +
                                    " intermediate=" + std::to_string(r) + " case=" +
                                    to_string(w.kind) + "\n";
                }
            }
            catch (const std::logic_error& e) {
                witnesses_ok = false;
                witness_error = "pair earlier=" + std::to_string(a) + " later=" +
                                std::to_string(b) + ": " + e.what();
                break;
            }
        }
    }

    json case_counts = json::object();
    std::string text = "facets: " + std::to_string(order.size()) +
                       "\npairs_checked: " + std::to_string(report.pairs_checked) +
                       "\nshelling_valid: " + yes_no(report.valid) +
                       "\nwitnesses_validated: " + yes_no(witnesses_ok) + "\n";
    if (report.failing_pair)
        text += "failing_pair: later=" + std::to_string(report.failing_pair->first) +
                " earlier=" + std::to_string(report.failing_pair->second) + "\n";
    if (!witnesses_ok)
        text += "witness_error: " + witness_error + "\n";
    for (const auto& [name, count] : cases) {
        case_counts[name] = io::count_string(count);
        text += "case " + name + ": " + std::to_string(count) + "\n";
    }
    text += witness_text;

    json payload{{"facets", io::count_string(static_cast<std::uint64_t>(order.size()))},
                 {"pairs_checked", io::count_string(static_cast<std::uint64_t>(report.pairs_checked))},
                 {"shelling_valid", report.valid},
                 {"witnesses_validated", witnesses_ok},
                 {"witness_cases", std::move(case_counts)}};
    payload["failing_pair"] =
        report.failing_pair ? json{{"later", report.failing_pair->first},
                                   {"earlier", report.failing_pair->second}}
                            : json(nullptr);
    if (!witnesses_ok)
        payload["witness_error"] = witness_error;
    if (opt.certificates)
        payload["witnesses"] = std::move(witnesses);
    const bool ok = report.valid && witnesses_ok;
    return finish(opt, "shelling-verify", shape, std::move(payload), std::move(text),
                  ok ? kOk : kVerificationFailed);
}

inline Output cmd_hvector(const Options& opt)
{
    const GridShape shape(opt.rows, opt.cols);
    const ShellingOrder order = shelling_sequence(shape);
    const ShellingReport report = verify_shelling(order, false);
    const auto h = h_vector(order);
    const auto f = f_vector_from_h(h);
    Count sum = 0;
    json hj = json::array();
    json fj = json::array();
    std::string text = "h:";
    for (const auto& x : h) {
        sum += x;
        hj.push_back(io::count_string(x));
        text += " " + io::count_string(x);
    }
    text += "\nf:";
    for (std::size_t k = 0; k < f.size(); ++k) {
        fj.push_back({{"dim", static_cast<int>(k) - 1}, {"count", io::count_string(f[k])}});
        text += " " + io::count_string(f[k]);
    }
    text += "\nsum: " + io::count_string(sum) + "\nshelling_valid: " + yes_no(report.valid) + "\n";
    json payload{{"h_vector", std::move(hj)},
                 {"f_vector_from_h", std::move(fj)},
                 {"sum", io::count_string(sum)},
                 {"facet_count", io::count_string(static_cast<std::uint64_t>(order.size()))},
                 {"shelling_valid", report.valid}};
    return finish(opt, "hvector", shape, std::move(payload), std::move(text),
                  report.valid ? kOk : kVerificationFailed);
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Stanley-Reisner complex of the jet-scheme leading-term ideal: "
                 "generators, facets, counts and shelling checks"};
    app.name("srjet");
    app.require_subcommand(1);

    Options opt;
    using Handler = Output (*)(const Options&);
    std::vector<std::pair<CLI::App*, Handler>> commands;
    auto add = [&](const std::string& name, const std::string& desc, Handler h) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->add_option("-m,--rows", opt.rows, "number of rows m (2 <= m <= n)")->required();
        sub->add_option("-n,--cols", opt.cols, "number of columns n")->required();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", opt.out, "write output to FILE instead of standard output");
        commands.emplace_back(sub, h);
        return sub;
    };

    add("generators", "generators of the leading-term ideal, by family", detail::cmd_generators);
    add("facets", "facets from the path construction", detail::cmd_facets)
        ->add_flag("--profile", opt.profile, "include pivot and path decomposition");
    add("oracle", "brute-force face census (2mn <= 24)", detail::cmd_oracle)
        ->add_flag("--no-prune", opt.no_prune, "use the pruning-free reference scan");
    add("count", "multiplicity by sum formula and closed form, and dimension",
        detail::cmd_count);
    add("check", "brute-force facets equal structured facets", detail::cmd_check)
        ->add_flag("--no-prune", opt.no_prune, "use the pruning-free reference scan");
    add("shelling-verify", "check the shelling order and every exchange witness",
        detail::cmd_shelling_verify)
        ->add_flag("--certificates", opt.certificates, "export every witness");
    add("hvector", "h-vector from restriction faces of the shelling", detail::cmd_hvector);

    std::vector<std::string> argv_store{"srjet"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& a : argv_store)
        argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    }
    catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kUsage;
    }

    Output result;
    try {
        for (const auto& [sub, handler] : commands)
            if (sub->parsed())
                result = handler(opt);
    }
    catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
    catch (const CapacityError& e) {
        err << "error: " << e.what() << "\n";
        return kCapacityError;
    }

    if (opt.out.empty()) {
        out << result.body;
    }
    else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << opt.out << " for writing\n";
            return kUsage;
        }
        file << result.body;
    }
    return result.status;
}

} // namespace srjet::cli

#endif // SRJET_CLI_HPP
