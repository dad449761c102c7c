#include "quivarity/cli.hpp"

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "quivarity/cycles.hpp"
#include "quivarity/io.hpp"
#include "quivarity/local.hpp"
#include "quivarity/oracle.hpp"
#include "quivarity/quiver.hpp"
#include "quivarity/reduction.hpp"
#include "quivarity/simples.hpp"
#include "quivarity/symm.hpp"

namespace quivarity::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "quivarity/1";

constexpr int kExitNotCoregular = 2;
constexpr int kExitParseError = 3;
constexpr int kExitBadDecomposition = 4;

json setting_to_json(const QuiverSetting& s) {
    json doc;
    doc["vertices"] = json::array();
    for (int v = 0; v < s.quiver.vertex_count(); ++v)
        doc["vertices"].push_back({{"id", s.quiver.vertex_id(v)}, {"dim", s.alpha[v]}});
    doc["arrows"] = json::array();
    std::map<std::pair<int, int>, Int> counts;
    for (const Arrow& a : s.quiver.arrows()) ++counts[{a.src, a.dst}];
    for (const auto& [pair, count] : counts)
        doc["arrows"].push_back({{"from", s.quiver.vertex_id(pair.first)},
                                 {"to", s.quiver.vertex_id(pair.second)},
                                 {"count", count}});
    return doc;
}

std::string compact_setting(const QuiverSetting& s) {
    if (s.quiver.vertex_count() == 0) return "(empty)";
    std::ostringstream out;
    for (int v = 0; v < s.quiver.vertex_count(); ++v) {
        if (v) out << ", ";
        out << s.quiver.vertex_id(v) << "/" << s.alpha[v];
    }
    std::map<std::pair<int, int>, Int> counts;
    for (const Arrow& a : s.quiver.arrows()) ++counts[{a.src, a.dst}];
    if (!counts.empty()) {
        out << "; ";
        bool first = true;
        for (const auto& [pair, count] : counts) {
            if (!first) out << ", ";
            first = false;
            out << s.quiver.vertex_id(pair.first) << "->" << s.quiver.vertex_id(pair.second);
            if (count > 1) out << " x" << count;
        }
    }
    return out.str();
}

bool use_color(const std::ostream& out) {
    return &out == &std::cout && isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
}

std::string verdict_word(bool coregular, const std::ostream& out) {
    std::string word = coregular ? "coregular" : "not coregular";
    if (use_color(out))
        return (coregular ? std::string("\033[32m") : std::string("\033[31m")) + word + "\033[0m";
    return word;
}

std::string beta_string(const DimensionVector& beta) {
    std::ostringstream out;
    out << "(";
    for (int v = 0; v < beta.count(); ++v) {
        if (v) out << ",";
        out << beta[v];
    }
    out << ")";
    return out.str();
}

std::string decomposition_string(const Decomposition& d) {
    std::ostringstream out;
    for (std::size_t i = 0; i < d.factors.size(); ++i) {
        if (i) out << " + ";
        out << d.factors[i].multiplicity << "x" << beta_string(d.factors[i].beta);
    }
    return out.str();
}

json decomposition_to_json(const Decomposition& d) {
    json factors = json::array();
    for (const DecompositionFactor& f : d.factors)
        factors.push_back({{"beta", f.beta.values()}, {"multiplicity", f.multiplicity}});
    return factors;
}

json step_to_json(const ReductionStep& step) {
    json j;
    switch (step.kind) {
        case StepKind::RI: {
            j["kind"] = "RI";
            j["vertex"] = step.vertex;
            json created = json::array();
            for (const auto& [from, to] : step.created_arrows)
                created.push_back({{"from", from}, {"to", to}});
            j["created_arrows"] = created;
            break;
        }
        case StepKind::RII:
            j["kind"] = "RII";
            j["vertex"] = step.vertex;
            j["k"] = step.k;
            break;
        case StepKind::RIII:
            j["kind"] = "RIII";
            j["vertex"] = step.vertex;
            j["k"] = step.k;
            j["side"] = step.side == LoopSide::Incoming ? "incoming" : "outgoing";
            break;
    }
    return j;
}

std::string step_string(const ReductionStep& step) {
    std::ostringstream out;
    switch (step.kind) {
        case StepKind::RI: {
            out << "RI at " << step.vertex << ": created ";
            if (step.created_arrows.empty()) out << "no arrows";
            for (std::size_t i = 0; i < step.created_arrows.size(); ++i) {
                if (i) out << ", ";
                out << step.created_arrows[i].first << "->" << step.created_arrows[i].second;
            }
            break;
        }
        case StepKind::RII:
            out << "RII at " << step.vertex << ": removed " << step.k << " loop"
                << (step.k == 1 ? "" : "s");
            break;
        case StepKind::RIII:
            out << "RIII at " << step.vertex << " ("
                << (step.side == LoopSide::Incoming ? "incoming" : "outgoing")
                << "): loop removed, arrow multiplied by " << step.k;
            break;
    }
    return out.str();
}

struct Options {
    std::string path;
    bool json_output = false;
    bool quiet = false;
    bool trace = false;
    bool dot = false;
    bool enumerate = false;
    bool check = false;
    bool primitive = false;
    std::optional<std::uint64_t> seed;
    std::uint64_t oracle_seed = 1;
    std::size_t limit = 10000;
    std::optional<Int> max_len;
    int samples = 8;
    double tol = 1e-8;
    std::string decomposition;
};

int cmd_classify(const Options& opt, std::ostream& out) {
    QuiverSetting s = load_quiver_file(opt.path);
    Verdict verdict = classify(s);
    SimpleClassInfo info = has_simple(s);
    if (opt.json_output) {
        json doc;
        doc["schema"] = kSchema;
        doc["command"] = "classify";
        doc["coregular"] = verdict.coregular;
        doc["polynomial_part"] = verdict.polynomial_part();
        doc["total_dimension"] =
            verdict.total_dimension() ? json(*verdict.total_dimension()) : json(nullptr);
        doc["iss_dimension"] = info.exists ? json(*info.iss_dimension) : json(nullptr);
        doc["components"] = json::array();
        for (const ComponentResult& c : verdict.components) {
            json comp;
            comp["vertices"] = c.component.quiver.vertex_ids();
            comp["terminal"] = c.terminal ? json(terminal_name(*c.terminal)) : json(nullptr);
            comp["polynomial_part"] = c.trace.polynomial_part;
            comp["final"] = setting_to_json(c.trace.final);
            doc["components"].push_back(comp);
        }
        out << doc.dump(2) << "\n";
    } else if (!opt.quiet) {
        out << "verdict: " << verdict_word(verdict.coregular, out) << "\n";
        out << "polynomial part: " << verdict.polynomial_part() << "\n";
        if (auto total = verdict.total_dimension())
            out << "total dimension: " << *total << "\n";
        if (info.exists)
            out << "iss dimension (1 - chi(alpha, alpha)): " << *info.iss_dimension << "\n";
        out << "components: " << verdict.components.size() << "\n";
        for (std::size_t i = 0; i < verdict.components.size(); ++i) {
            const ComponentResult& c = verdict.components[i];
            out << "  [" << (i + 1) << "] "
                << (c.terminal ? terminal_name(*c.terminal) : "stuck") << ": "
                << compact_setting(c.trace.final)
                << " (polynomial part " << c.trace.polynomial_part << ")\n";
        }
    }
    return verdict.coregular ? 0 : kExitNotCoregular;
}

int cmd_reduce(const Options& opt, std::ostream& out) {
    QuiverSetting s = strip_zero_vertices(load_quiver_file(opt.path));
    ReduceOptions reduce_options =
        opt.seed ? ReduceOptions::randomized(*opt.seed) : ReduceOptions::canonical();
    ReductionTrace trace = reduce(s, reduce_options);
    std::optional<TerminalKind> terminal = is_terminal(trace.final);
    if (opt.dot) {
        out << to_dot(trace.final);
        return 0;
    }
    if (opt.json_output) {
        json doc;
        doc["schema"] = kSchema;
        doc["command"] = "reduce";
        doc["strategy"] = opt.seed ? "randomized" : "canonical";
        doc["seed"] = opt.seed ? json(*opt.seed) : json(nullptr);
        doc["final"] = setting_to_json(trace.final);
        doc["polynomial_part"] = trace.polynomial_part;
        doc["terminal"] = terminal ? json(terminal_name(*terminal)) : json(nullptr);
        doc["steps"] = json::array();
        for (const ReductionStep& step : trace.steps) doc["steps"].push_back(step_to_json(step));
        out << doc.dump(2) << "\n";
        return 0;
    }
    if (opt.trace) {
        for (const ReductionStep& step : trace.steps) out << step_string(step) << "\n";
        if (trace.steps.empty()) out << "(no steps applicable)\n";
    }
    out << "final: " << compact_setting(trace.final) << "\n";
    out << "polynomial part: " << trace.polynomial_part << "\n";
    if (terminal) out << "terminal: " << terminal_name(*terminal) << "\n";
    return 0;
}

int cmd_simples(const Options& opt, std::ostream& out) {
    QuiverSetting s = load_quiver_file(opt.path);
    SimpleClassInfo info = has_simple(s);
    if (opt.json_output) {
        json doc;
        doc["schema"] = kSchema;
        doc["command"] = "simples";
        doc["exists"] = info.exists;
        doc["class_count"] = info.class_count == ClassCount::Zero
                                 ? "zero"
                                 : (info.class_count == ClassCount::One ? "one" : "infinite");
        doc["iss_dimension"] = info.iss_dimension ? json(*info.iss_dimension) : json(nullptr);
        out << doc.dump(2) << "\n";
        return 0;
    }
    if (!info.exists) {
        out << "simple representations of dimension alpha: none\n";
        return 0;
    }
    out << "simple representations of dimension alpha: "
        << (info.class_count == ClassCount::One ? "one class" : "infinitely many classes") << "\n";
    out << "iss dimension: " << *info.iss_dimension << "\n";
    return 0;
}

Decomposition parse_decomposition(const QuiverSetting& s, const std::string& text) {
    Decomposition d;
    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) -> void {
        throw std::invalid_argument("decomposition: " + what + " at offset " + std::to_string(pos));
    };
    while (true) {
        skip_space();
        if (pos >= text.size()) fail("expected a term");
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a multiplicity");
        Int mult = std::stoll(text.substr(start, pos - start));
        skip_space();
        if (pos < text.size() && (text[pos] == 'x' || text[pos] == '*'))
            ++pos;
        else if (pos + 1 < text.size() && text.compare(pos, 2, "\xc3\x97") == 0)
            pos += 2;  // UTF-8 multiplication sign
        else
            fail("expected 'x' after the multiplicity");
        skip_space();
        if (pos >= text.size() || text[pos] != '(') fail("expected '('");
        ++pos;
        std::vector<Int> dims;
        while (true) {
            skip_space();
            std::size_t dstart = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == dstart) fail("expected a dimension");
            dims.push_back(std::stoll(text.substr(dstart, pos - dstart)));
            skip_space();
            if (pos < text.size() && text[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            fail("expected ',' or ')'");
        }
        if (static_cast<int>(dims.size()) != s.quiver.vertex_count())
            throw std::invalid_argument(
                "decomposition: each term needs one dimension per vertex (canonical id order)");
        d.factors.push_back({DimensionVector(dims), mult});
        skip_space();
        if (pos >= text.size()) break;
        if (text[pos] != '+') fail("expected '+'");
        ++pos;
    }
    return d;
}

int cmd_local(const Options& opt, std::ostream& out, std::ostream& err) {
    QuiverSetting s = strip_zero_vertices(load_quiver_file(opt.path));
    if (opt.check) {
        LocalConsistencyReport report = local_consistency_check(s, opt.limit);
        if (opt.json_output) {
            json doc;
            doc["schema"] = kSchema;
            doc["command"] = "local";
            doc["mode"] = "check";
            doc["coregular"] = report.setting_coregular;
            doc["decompositions_checked"] = report.decompositions_checked;
            doc["truncated"] = report.truncated;
            doc["bug_witnesses"] = json::array();
            for (const LocalWitness& w : report.bug_witnesses)
                doc["bug_witnesses"].push_back({{"decomposition", decomposition_to_json(w.decomposition)},
                                                {"local", setting_to_json(w.local)},
                                                {"minimal", setting_to_json(w.minimal)}});
            doc["counterexample"] =
                report.counterexample
                    ? json({{"decomposition", decomposition_to_json(report.counterexample->decomposition)},
                            {"local", setting_to_json(report.counterexample->local)},
                            {"minimal", setting_to_json(report.counterexample->minimal)}})
                    : json(nullptr);
            out << doc.dump(2) << "\n";
        } else {
            out << "setting: " << verdict_word(report.setting_coregular, out) << "\n";
            out << "decompositions checked: " << report.decompositions_checked
                << (report.truncated ? " (truncated)" : "") << "\n";
            if (report.setting_coregular) {
                out << "non-coregular local quivers: " << report.bug_witnesses.size() << "\n";
            } else if (report.counterexample) {
                out << "non-coregular local witness: "
                    << decomposition_string(report.counterexample->decomposition) << "\n";
                out << "  local:   " << compact_setting(report.counterexample->local) << "\n";
                out << "  minimal: " << compact_setting(report.counterexample->minimal) << "\n";
            } else {
                out << "no non-coregular local quiver within the limit (inconclusive)\n";
            }
        }
        return 0;
    }
    if (!opt.decomposition.empty()) {
        Decomposition d;
        try {
            d = parse_decomposition(s, opt.decomposition);
        } catch (const std::invalid_argument& e) {
            err << e.what() << "\n";
            return kExitBadDecomposition;
        }
        if (!is_valid_decomposition(s, d)) {
            err << "decomposition: factors must be simple, sum to alpha, and repeat a "
                   "unique-class factor at most once\n";
            return kExitBadDecomposition;
        }
        LocalQuiverSetting local = local_quiver(s, d);
        bool coregular = classify(local.setting).coregular;
        if (opt.json_output) {
            json doc;
            doc["schema"] = kSchema;
            doc["command"] = "local";
            doc["mode"] = "single";
            doc["decomposition"] = decomposition_to_json(d);
            doc["local"] = setting_to_json(local.setting);
            doc["coregular"] = coregular;
            out << doc.dump(2) << "\n";
        } else {
            out << decomposition_string(d) << "\n";
            out << "local quiver: " << compact_setting(local.setting) << "\n";
            out << "local verdict: " << verdict_word(coregular, out) << "\n";
        }
        return 0;
    }
    // --enumerate
    DecompositionList list = enumerate_decompositions(s, opt.limit);
    if (opt.json_output) {
        json doc;
        doc["schema"] = kSchema;
        doc["command"] = "local";
        doc["mode"] = "enumerate";
        doc["truncated"] = list.truncated;
        doc["decompositions"] = json::array();
        for (const Decomposition& d : list.items) {
            LocalQuiverSetting local = local_quiver(s, d);
            doc["decompositions"].push_back({{"factors", decomposition_to_json(d)},
                                             {"local", setting_to_json(local.setting)},
                                             {"coregular", classify(local.setting).coregular}});
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << list.items.size() << " decomposition" << (list.items.size() == 1 ? "" : "s")
        << (list.truncated ? " (truncated)" : "") << "\n";
    for (const Decomposition& d : list.items) {
        LocalQuiverSetting local = local_quiver(s, d);
        out << "- " << decomposition_string(d) << "\n";
        out << "    local: " << compact_setting(local.setting) << " -> "
            << verdict_word(classify(local.setting).coregular, out) << "\n";
    }
    return 0;
}

int cmd_cycles(const Options& opt, std::ostream& out) {
    QuiverSetting s = strip_zero_vertices(load_quiver_file(opt.path));
    Int max_len = opt.max_len.value_or(default_cycle_length_bound(s.alpha));
    std::vector<Cycle> cycles =
        opt.primitive ? primitive_cycles(s.quiver) : quasi_primitive_cycles(s, max_len);
    if (opt.json_output) {
        json doc;
        doc["schema"] = kSchema;
        doc["command"] = "cycles";
        doc["kind"] = opt.primitive ? "primitive" : "quasi-primitive";
        if (!opt.primitive) doc["max_len"] = max_len;
        doc["count"] = cycles.size();
        doc["cycles"] = json::array();
        for (const Cycle& c : cycles) {
            json item;
            item["length"] = c.length();
            item["arrows"] = c.arrows;
            doc["cycles"].push_back(item);
        }
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << cycles.size() << (opt.primitive ? " primitive" : " quasi-primitive") << " cycle"
        << (cycles.size() == 1 ? "" : "s");
    if (!opt.primitive) out << " of length <= " << max_len;
    out << "\n";
    for (const Cycle& c : cycles) {
        out << "- length " << c.length() << ": ";
        // traversal order is the reverse of the stored composition order
        for (std::size_t i = c.arrows.size(); i-- > 0;) {
            const Arrow& a = s.quiver.arrows()[static_cast<std::size_t>(c.arrows[i])];
            out << s.quiver.vertex_id(a.src) << " -> ";
            if (i == 0) out << s.quiver.vertex_id(a.dst);
        }
        out << "  (arrows";
        for (int idx : c.arrows) out << " " << idx;
        out << ")\n";
    }
    return 0;
}

int cmd_dim(const Options& opt, std::ostream& out, std::ostream& err) {
    QuiverSetting s = load_quiver_file(opt.path);
    EulerForm e = euler_matrix(s.quiver);
    Int value = 1 - chi(e, s.alpha, s.alpha);
    SimpleClassInfo info = has_simple(s);
    if (opt.json_output) {
        json doc;
        doc["schema"] = kSchema;
        doc["command"] = "dim";
        doc["one_minus_chi"] = value;
        doc["simples_exist"] = info.exists;
        doc["iss_dimension"] = info.exists ? json(*info.iss_dimension) : json(nullptr);
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << value << "\n";
    if (!info.exists)
        err << "note: no simple representations of this dimension vector; the value is formal\n";
    return 0;
}

int cmd_oracle(const Options& opt, std::ostream& out) {
    QuiverSetting s = strip_zero_vertices(load_quiver_file(opt.path));
    Int max_len = opt.max_len.value_or(default_cycle_length_bound(s.alpha));
    std::vector<Cycle> generators = quasi_primitive_cycles(s, std::max<Int>(max_len, 1));
    Int estimated = estimate_iss_dimension(s, opt.samples, opt.tol, opt.oracle_seed, max_len);
    SimpleClassInfo info = has_simple(s);
    if (opt.json_output) {
        json doc;
        doc["schema"] = kSchema;
        doc["command"] = "oracle";
        doc["estimated_dimension"] = estimated;
        doc["generators"] = generators.size();
        doc["samples"] = opt.samples;
        doc["tol"] = opt.tol;
        doc["seed"] = opt.oracle_seed;
        doc["iss_dimension"] = info.exists ? json(*info.iss_dimension) : json(nullptr);
        out << doc.dump(2) << "\n";
        return 0;
    }
    out << "estimated iss dimension: " << estimated << "\n";
    out << "generators: " << generators.size() << " (length <= " << max_len << ")\n";
    if (info.exists) out << "1 - chi(alpha, alpha): " << *info.iss_dimension << "\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quivarity: coregularity of quiver quotient varieties"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", opt.path, "quiver file (JSON)")->required();
        cmd->add_flag("--json", opt.json_output, "machine-readable output");
    };

    CLI::App* classify_cmd = app.add_subcommand("classify", "decide coregularity");
    add_common(classify_cmd);
    classify_cmd->add_flag("--quiet", opt.quiet, "suppress prose; rely on the exit code");

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "apply reduction steps to a fixpoint");
    add_common(reduce_cmd);
    reduce_cmd->add_flag("--trace", opt.trace, "list every applied step");
    reduce_cmd->add_option("--seed", opt.seed, "use the randomized strategy with this seed");
    reduce_cmd->add_flag("--dot", opt.dot, "print the final setting as Graphviz DOT");

    CLI::App* simples_cmd = app.add_subcommand("simples", "existence of simple representations");
    add_common(simples_cmd);

    CLI::App* local_cmd = app.add_subcommand("local", "local quiver settings");
    add_common(local_cmd);
    CLI::Option* decomposition_option = local_cmd->add_option(
        "--decomposition", opt.decomposition, "terms like '2x(1,0) + 1x(0,1)', canonical id order");
    CLI::Option* enumerate_option =
        local_cmd->add_flag("--enumerate", opt.enumerate, "enumerate decompositions");
    CLI::Option* check_option = local_cmd->add_flag(
        "--check", opt.check, "classify every local quiver and cross-check the verdict");
    local_cmd->add_option("--limit", opt.limit, "maximum number of decompositions");
    decomposition_option->excludes(enumerate_option)->excludes(check_option);
    enumerate_option->excludes(check_option);

    CLI::App* cycles_cmd = app.add_subcommand("cycles", "enumerate generator cycles");
    add_common(cycles_cmd);
    cycles_cmd->add_option("--max-len", opt.max_len, "length bound (default |alpha|^2)");
    cycles_cmd->add_flag("--primitive", opt.primitive, "primitive cycles only");

    CLI::App* dim_cmd = app.add_subcommand("dim", "quotient dimension 1 - chi(alpha, alpha)");
    add_common(dim_cmd);

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "numerical dimension estimate");
    add_common(oracle_cmd);
    oracle_cmd->add_option("--samples", opt.samples, "random representations to try");
    oracle_cmd->add_option("--tol", opt.tol, "relative singular-value cutoff");
    oracle_cmd->add_option("--seed", opt.oracle_seed, "RNG seed");
    oracle_cmd->add_option("--max-len", opt.max_len, "generator length bound");

    std::vector<const char*> argv{"quivarity"};
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage;
        int code = app.exit(e, usage, usage);
        (code == 0 ? out : err) << usage.str();
        return code == 0 ? 0 : 1;  // usage errors must not collide with 2/3/4
    }

    try {
        if (classify_cmd->parsed()) return cmd_classify(opt, out);
        if (reduce_cmd->parsed()) return cmd_reduce(opt, out);
        if (simples_cmd->parsed()) return cmd_simples(opt, out);
        if (local_cmd->parsed()) {
            if (!opt.enumerate && !opt.check && opt.decomposition.empty()) {
                err << "local: pass --decomposition, --enumerate, or --check\n";
                return 1;
            }
            return cmd_local(opt, out, err);
        }
        if (cycles_cmd->parsed()) return cmd_cycles(opt, out);
        if (dim_cmd->parsed()) return cmd_dim(opt, out, err);
        if (oracle_cmd->parsed()) return cmd_oracle(opt, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitParseError;
    }
    return 1;
}

}  // namespace quivarity::cli
