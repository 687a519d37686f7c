#include "observa/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "observa/analysis.hpp"
#include "observa/design.hpp"
#include "observa/generators.hpp"
#include "observa/oracle.hpp"
#include "observa/serialization.hpp"
#include "observa/tracker.hpp"

namespace observa::cli {

namespace {

using nlohmann::json;

enum class OutputFormat { text, json, dot };

class InputError : public std::runtime_error {
public:
    InputError(const std::string& message, std::string location = {})
        : std::runtime_error(message), location_(std::move(location)) {}
    const std::string& location() const { return location_; }

private:
    std::string location_;
};

std::string set_text(const ColoredDigraph& g, const NodeSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](NodeId v) {
        if (!first) out += ",";
        out += g.node_labels[v];
        first = false;
    });
    return out + "}";
}

json set_json(const ColoredDigraph& g, const NodeSet& s) {
    json out = json::array();
    s.for_each([&](NodeId v) { out.push_back(g.node_labels[v]); });
    return out;
}

json witness_json(const Witness& witness, const ColoredDigraph& g) {
    if (const auto* cycle = std::get_if<PairCycleWitness>(&witness)) {
        json pairs = json::array(), colors = json::array();
        for (const PairNode& p : cycle->pairs) pairs.push_back({g.node_labels[p.first], g.node_labels[p.second]});
        for (ColorId c : cycle->colors) colors.push_back(g.color_labels[c]);
        return {{"type", "pair_cycle"}, {"graph", to_string(cycle->kind)}, {"pairs", pairs}, {"colors", colors}};
    }
    const auto& b = std::get<BranchingWitness>(witness);
    return {{"type", "branching"},
            {"node", g.node_labels[b.node]},
            {"color", g.color_labels[b.color]},
            {"targets", {g.node_labels[b.first_target], g.node_labels[b.second_target]}}};
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const unsigned long long v = std::stoull(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("expected a non-negative integer for " + what + ", got '" + text + "'");
    }
}

double parse_real(const std::string& text, const std::string& what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::logic_error&) {
        throw InputError("expected a number for " + what + ", got '" + text + "'");
    }
}

class Session {
public:
    Session(std::istream& in, std::ostream& out, OutputFormat format) : in_(in), out_(out), format_(format) {}

    OutputFormat format() const { return format_; }
    std::ostream& out() { return out_; }

    std::string read(const std::string& path) {
        if (path == "-") return {std::istreambuf_iterator<char>(in_), std::istreambuf_iterator<char>()};
        std::ifstream file(path, std::ios::binary);
        if (!file) throw InputError("cannot open '" + path + "'");
        return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
    }

    ColoredDigraph load_unchecked(const std::string& path) {
        const std::string text = read(path);
        return parse_graph(text, detect_format(text));
    }

    ColoredDigraph load(const std::string& path) {
        ColoredDigraph g = load_unchecked(path);
        const ValidationReport report = validate(g);
        for (const ValidationIssue& issue : report.issues)
            if (issue.severity == Severity::error) throw InputError("invalid graph: " + issue.message, issue.location);
        return g;
    }

    // Analysis runs on the closure when silent moves are present.
    ColoredDigraph load_closed(const std::string& path, bool& closed) {
        ColoredDigraph g = load(path);
        closed = !g.unobservable.empty();
        return closed ? epsilon_closure(g) : g;
    }

    void write_graph(const ColoredDigraph& g, std::optional<GraphFormat> forced = std::nullopt) {
        const GraphFormat f = forced ? *forced : (format_ == OutputFormat::dot ? GraphFormat::dot : GraphFormat::json);
        if (f == GraphFormat::dot) out_ << graph_to_dot(g);
        else out_ << graph_to_json(g).dump(2) << "\n";
    }

    void write_json(const json& j) { out_ << j.dump(2) << "\n"; }

private:
    std::istream& in_;
    std::ostream& out_;
    OutputFormat format_;
};

// ---------------------------------------------------------------------------

int cmd_validate(Session& s, const std::string& input) {
    const ColoredDigraph g = s.load_unchecked(input);
    const ValidationReport report = validate(g);
    if (s.format() == OutputFormat::json) {
        json issues = json::array();
        for (const auto& i : report.issues)
            issues.push_back({{"severity", i.severity == Severity::error ? "error" : "warning"},
                              {"message", i.message},
                              {"location", i.location}});
        s.write_json({{"valid", report.ok}, {"issues", issues}});
    } else {
        if (report.ok) s.out() << "valid (" << g.node_count() << " nodes, " << g.color_count() << " colors, "
                               << g.edges.size() << " edges, " << g.unobservable.size() << " unobservable)\n";
        for (const auto& i : report.issues)
            s.out() << (i.severity == Severity::error ? "error" : "warning") << ": "
                    << (i.location.empty() ? "" : i.location + ": ") << i.message << "\n";
    }
    return report.ok ? success : negative;
}

int cmd_check(Session& s, const std::string& input, bool observable, bool partly, bool aposteriori) {
    if (!observable && !partly && !aposteriori) observable = true;
    bool closed = false;
    const ColoredDigraph g = s.load_closed(input, closed);
    json report;
    std::ostringstream text;
    bool all = true;
    auto emit = [&](const char* name, bool holds, const std::optional<Witness>& witness) {
        all = all && holds;
        json entry{{"holds", holds}};
        text << name << ": " << (holds ? "yes" : "no") << "\n";
        if (witness) {
            entry["witness"] = witness_json(*witness, g);
            text << "  witness: " << describe(*witness, g) << "\n";
        }
        report[name] = entry;
    };
    if (observable) {
        const Verdict v = is_observable(g);
        emit("observable", v.holds, v.witness);
    }
    if (partly) {
        const Verdict v = is_partly_observable(g);
        emit("partly_observable", v.holds, v.witness);
    }
    if (aposteriori) emit("partly_aposteriori_observable", is_partly_aposteriori_observable(g), std::nullopt);
    if (s.format() == OutputFormat::json) {
        report["epsilon_closed"] = closed;
        s.write_json(report);
    } else {
        if (closed) s.out() << "note: analysed the epsilon closure of the input\n";
        s.out() << text.str();
    }
    return all ? success : negative;
}

int cmd_min_time(Session& s, const std::string& input, bool partial) {
    bool closed = false;
    const ColoredDigraph g = s.load_closed(input, closed);
    const auto t = partial ? min_partial_observation_time(g) : min_observation_time(g);
    const char* property = partial ? "partly_observable" : "observable";
    if (s.format() == OutputFormat::json) {
        json j{{"property", property}, {"epsilon_closed", closed}};
        j["min_time"] = t ? json(*t) : json(nullptr);
        s.write_json(j);
    } else if (t) {
        s.out() << *t << "\n";
    } else {
        s.out() << "none (not " << (partial ? "partly observable" : "observable") << ")\n";
    }
    return t ? success : negative;
}

int cmd_track(Session& s, const std::string& input, const std::string& word_text) {
    bool closed = false;
    const ColoredDigraph g = s.load_closed(input, closed);
    Word word;
    try {
        word = parse_word(g, word_text);
    } catch (const GraphError& e) {
        throw InputError(e.what(), "word");
    }
    const auto states = track(g, word);
    const auto times = localization_times(g, word);
    if (s.format() == OutputFormat::json) {
        json steps = json::array();
        for (const TrackState& st : states) {
            json step{{"t", st.step}, {"possible", set_json(g, st.possible)}};
            step["symbol"] = st.step == 0 ? json(nullptr) : json(g.color_labels[word[st.step - 1]]);
            steps.push_back(step);
        }
        s.write_json({{"word", format_word(g, word)},
                      {"steps", steps},
                      {"localization_times", times},
                      {"final", set_json(g, states.back().possible)},
                      {"epsilon_closed", closed}});
    } else {
        for (const TrackState& st : states) {
            s.out() << "t=" << st.step;
            if (st.step > 0) s.out() << " " << g.color_labels[word[st.step - 1]];
            s.out() << " " << set_text(g, st.possible) << "\n";
        }
        s.out() << "final: " << set_text(g, states.back().possible) << "\n";
        s.out() << "localized at:";
        if (times.empty()) s.out() << " never";
        for (std::size_t t : times) s.out() << " " << t;
        s.out() << "\n";
    }
    return success;
}

int cmd_des_close(Session& s, const std::string& input) {
    s.write_graph(epsilon_closure(s.load(input)));
    return success;
}

int cmd_convert(Session& s, const std::string& input, const std::string& to) {
    s.write_graph(s.load(input), to == "dot" ? GraphFormat::dot : GraphFormat::json);
    return success;
}

// ---------------------------------------------------------------------------
// gen

UndirectedGraph reduction_source(Session& s, const std::string& spec) {
    auto size_after = [&](std::size_t prefix) { return parse_count(spec.substr(prefix), "source size"); };
    if (spec == "paw") return UndirectedGraph::paw();
    if (spec.size() > 1 && (spec[0] == 'K' || spec[0] == 'C') &&
        spec.find_first_not_of("0123456789", 1) == std::string::npos) {
        const std::size_t n = size_after(1);
        if (spec[0] == 'K') return UndirectedGraph::complete(n);
        if (n < 3) throw InputError("cycles need at least 3 nodes");
        return UndirectedGraph::cycle(n);
    }
    const ColoredDigraph g = s.load(spec);
    UndirectedGraph u(g.node_count());
    for (const Arc& a : topology_of(g).arcs) {
        if (a.from == a.to) throw InputError("reduction sources cannot have self-loops");
        if (!u.adjacent(a.from, a.to)) u.add_edge(a.from, a.to);
    }
    return u;
}

std::optional<std::vector<ColorId>> find_proper_3coloring(const UndirectedGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<ColorId> c(n, 0);
    auto proper = [&] {
        for (const auto& [u, v] : g.edges())
            if (c[u] == c[v]) return false;
        return true;
    };
    while (true) {
        if (proper()) return c;
        std::size_t i = 0;
        while (i < n && c[i] == 2) c[i++] = 0;
        if (i == n) return std::nullopt;
        ++c[i];
    }
}

std::optional<std::vector<ColorId>> find_triangle_2coloring(const UndirectedGraph& g) {
    const std::size_t s = g.edges().size();
    if (s > 24) throw InputError("source has too many edges to search for a triangle 2-coloring");
    const auto triangles = g.triangles();
    const auto& edges = g.edges();
    auto index = [&](NodeId a, NodeId b) {
        return static_cast<std::size_t>(std::lower_bound(edges.begin(), edges.end(), std::pair{a, b}) - edges.begin());
    };
    // First pass wants every triangle to hold exactly one D edge. With shallow
    // trees the recipe breaks when a triangle's matching pair is D.
    for (const bool single_dashed : {true, false}) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
            auto bit = [&](std::size_t i) { return (mask >> i) & 1; };
            bool ok = true;
            for (const auto& [x, y, z] : triangles) {
                const auto a = bit(index(x, y)), b = bit(index(x, z)), c = bit(index(y, z));
                if ((a == b && b == c) || (single_dashed && a + b + c != 1)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<ColorId> coloring(s);
            for (std::size_t i = 0; i < s; ++i) coloring[i] = static_cast<ColorId>(bit(i));
            return coloring;
        }
    }
    return std::nullopt;
}

void write_roles(Session& s, const std::string& path, const ReductionArtifact& a) {
    json roles = json::object(), tags = json::object();
    for (std::size_t v = 0; v < a.output.node_count(); ++v) {
        roles[a.output.node_labels[v]] = a.node_roles[v];
        tags[a.output.node_labels[v]] = a.node_tag[v];
    }
    const json doc{{"node_roles", roles}, {"node_tags", tags}, {"metadata", a.metadata}};
    if (path == "-") {
        s.out() << doc.dump(2) << "\n";
        return;
    }
    std::ofstream file(path);
    if (!file) throw InputError("cannot write '" + path + "'");
    file << doc.dump(2) << "\n";
}

std::size_t param_count(const std::vector<std::string>& params, std::size_t expected, const std::string& usage) {
    if (params.size() != expected) throw InputError("usage: gen " + usage);
    return expected;
}

int cmd_gen(Session& s, const std::string& family, const std::vector<std::string>& params,
            const std::string& roles_path, bool colored) {
    const bool reduction = family == "reduce-3col" || family == "reduce-triangle";
    if (!reduction && (colored || !roles_path.empty()))
        throw InputError("--colored and --roles only apply to reductions");
    if (family == "worst-case") {
        param_count(params, 1, "worst-case N");
        const std::size_t n = parse_count(params[0], "N");
        if (n < 3) throw InputError("worst-case family needs N >= 3");
        s.write_graph(worst_case_family(n));
    } else if (family == "random") {
        param_count(params, 4, "random N M P SEED");
        s.write_graph(random_colored_graph(parse_count(params[0], "N"), parse_count(params[1], "M"),
                                           parse_real(params[2], "P"), parse_count(params[3], "SEED")));
    } else if (family == "star") {
        param_count(params, 1, "star K");
        s.write_graph(star_graph(parse_count(params[0], "K")));
    } else if (family == "example") {
        param_count(params, 1, "example NAME");
        s.write_graph(named_example(params[0]));
    } else if (reduction) {
        param_count(params, 1, family + " {K<n>|C<n>|paw|FILE}");
        const UndirectedGraph source = reduction_source(s, params[0]);
        const bool three = family == "reduce-3col";
        const ReductionArtifact a = three ? reduce_3colorability(source) : reduce_monochromatic_triangle(source);
        if (colored) {
            if (three) {
                const auto coloring = find_proper_3coloring(source);
                if (!coloring) throw InputError("source is not 3-colorable; no recipe coloring exists");
                s.write_graph(color_3colorability_reduction(a, source, *coloring));
            } else {
                const auto coloring = find_triangle_2coloring(source);
                if (!coloring) throw InputError("source has no triangle-free 2-edge-coloring");
                s.write_graph(color_triangle_reduction(a, source, *coloring));
            }
        } else {
            s.write_graph(uncolored_graph(a.output));
        }
        if (!roles_path.empty()) write_roles(s, roles_path, a);
    } else {
        if (!params.empty()) throw InputError("unknown family '" + family + "'");
        s.write_graph(named_example(family));
    }
    return success;
}

// ---------------------------------------------------------------------------
// design

DesignBudget budget_from_environment() {
    DesignBudget b;
    if (const char* nodes = std::getenv("OBSERVA_BUDGET_NODES")) b.max_nodes = parse_count(nodes, "OBSERVA_BUDGET_NODES");
    if (const char* secs = std::getenv("OBSERVA_BUDGET_SECONDS"))
        b.time_limit = std::chrono::milliseconds(
            static_cast<std::int64_t>(parse_real(secs, "OBSERVA_BUDGET_SECONDS") * 1000.0));
    return b;
}

void design_text(Session& s, DesignStatus status, std::optional<std::size_t> k,
                 const std::optional<ColoringAssignment>& a, const Topology& topology, std::uint64_t explored) {
    s.out() << "status: " << to_string(status) << "\n";
    if (k) s.out() << "k: " << *k << "\n";
    if (a) {
        if (a->target == DesignTarget::nodes) {
            for (std::size_t v = 0; v < a->colors.size(); ++v)
                s.out() << "  " << topology.node_labels[v] << " -> c" << a->colors[v] << "\n";
        } else {
            for (std::size_t i = 0; i < a->colors.size(); ++i)
                s.out() << "  " << topology.node_labels[topology.arcs[i].from] << "->"
                        << topology.node_labels[topology.arcs[i].to] << " -> c" << a->colors[i] << "\n";
        }
    }
    s.out() << "search nodes: " << explored << "\n";
}

int status_code(DesignStatus status) {
    switch (status) {
        case DesignStatus::feasible: return success;
        case DesignStatus::infeasible: return negative;
        case DesignStatus::budget_exceeded: return budget_exceeded;
    }
    return input_error;
}

int cmd_design(Session& s, const std::string& target_name, const std::string& input, std::optional<std::size_t> k,
               const std::string& goal_name, std::optional<std::uint64_t> max_nodes, std::optional<double> seconds) {
    const DesignTarget target = target_name == "nodes" ? DesignTarget::nodes : DesignTarget::edges;
    DesignGoal goal = default_goal(target);
    if (goal_name == "observable") goal = DesignGoal::observable;
    if (goal_name == "partly") goal = DesignGoal::partly_observable;
    DesignBudget budget = budget_from_environment();
    if (max_nodes) budget.max_nodes = *max_nodes;
    if (seconds) budget.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(*seconds * 1000.0));
    if (k && *k == 0) throw InputError("--k must be at least 1");

    const Topology topology = topology_of(s.load(input));
    const bool experimental = is_experimental(target, goal);
    if (k) {
        const DesignResult r = design_coloring(topology, target, goal, *k, budget);
        if (s.format() == OutputFormat::json) {
            json j = to_json(r, topology, *k);
            j["goal"] = to_string(goal);
            j["experimental"] = experimental;
            s.write_json(j);
        } else {
            if (experimental) s.out() << "note: experimental target/goal combination\n";
            design_text(s, r.status, r.assignment ? std::optional(r.assignment->k) : std::nullopt, r.assignment,
                        topology, r.nodes_explored);
        }
        return status_code(r.status);
    }
    const MinimumColorsResult r = minimum_colors(topology, target, goal, budget);
    if (s.format() == OutputFormat::json) {
        json j = to_json(r, topology);
        j["goal"] = to_string(goal);
        j["experimental"] = experimental;
        s.write_json(j);
    } else {
        if (experimental) s.out() << "note: experimental target/goal combination\n";
        design_text(s, r.status, r.status == DesignStatus::feasible ? std::optional(r.k) : std::nullopt,
                    r.assignment, topology, r.nodes_explored);
        if (r.status != DesignStatus::feasible) s.out() << "largest k proven infeasible: " << r.k << "\n";
    }
    return status_code(r.status);
}

// ---------------------------------------------------------------------------

void report_error(std::ostream& err, OutputFormat format, int code, const std::string& kind,
                  const std::string& message, const std::string& location = {}) {
    if (format == OutputFormat::json) {
        json e{{"code", code}, {"kind", kind}, {"message", message}};
        if (!location.empty()) e["location"] = location;
        err << json{{"error", e}}.dump() << "\n";
    } else {
        err << "observa: " << (location.empty() ? "" : location + ": ") << message << "\n";
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Observability analysis for edge-colored digraphs", "observa"};
    app.require_subcommand(1);
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "json", "dot"}));

    std::string input, word, family, roles_path, target, goal_name, to;
    std::vector<std::string> params;
    bool observable = false, partly = false, aposteriori = false, partial = false, colored = false, minimum = false;
    std::optional<std::size_t> k;
    std::optional<std::uint64_t> max_nodes;
    std::optional<double> seconds;

    auto* validate_cmd = app.add_subcommand("validate", "Check a graph file for structural problems");
    validate_cmd->add_option("input", input, "Graph file, or - for stdin")->required();

    auto* check = app.add_subcommand("check", "Decide observability properties");
    check->add_flag("--observable", observable, "Observability");
    check->add_flag("--partly", partly, "Partial observability");
    check->add_flag("--aposteriori", aposteriori, "Partial a-posteriori observability");
    check->add_option("input", input)->required();

    auto* min_time = app.add_subcommand("min-time", "Minimal observation time");
    min_time->add_flag("--partial", partial, "Time for partial observability");
    min_time->add_option("input", input)->required();

    auto* track_cmd = app.add_subcommand("track", "Possible positions after each observed color");
    track_cmd->add_option("input", input)->required();
    track_cmd->add_option("word", word, "Colors, concatenated or comma-separated")->required();

    auto* close = app.add_subcommand("des-close", "Fold unobservable edges into colored ones");
    close->add_option("input", input)->required();

    auto* gen = app.add_subcommand("gen", "Generate graphs and reductions");
    gen->add_option("family", family,
                    "worst-case N | random N M P SEED | star K | example NAME | NAME | "
                    "reduce-3col SRC | reduce-triangle SRC")
        ->required();
    gen->add_option("params", params);
    gen->add_option("--roles", roles_path, "Write the node-role sidecar of a reduction here");
    gen->add_flag("--colored", colored, "Color a reduction with the recipe from a valid source coloring");

    auto* design = app.add_subcommand("design", "Search for a coloring");
    design->add_option("target", target)->required()->check(CLI::IsMember({"nodes", "edges"}));
    design->add_option("input", input)->required();
    auto* k_opt = design->add_option("--k", k, "Number of colors");
    design->add_flag("--min", minimum, "Smallest number of colors (default)")->excludes(k_opt);
    design->add_option("--goal", goal_name, "observable | partly (default depends on target)")
        ->check(CLI::IsMember({"observable", "partly"}));
    design->add_option("--budget-nodes", max_nodes, "Search node limit");
    design->add_option("--budget-seconds", seconds, "Wall-clock limit");

    auto* convert = app.add_subcommand("convert", "Rewrite a graph as JSON or DOT");
    convert->add_option("--to", to)->required()->check(CLI::IsMember({"json", "dot"}));
    convert->add_option("input", input)->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    OutputFormat format = OutputFormat::text;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return success;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return success;
    } catch (const CLI::ParseError& e) {
        if (format_name == "json") format = OutputFormat::json;
        report_error(err, format, input_error, "usage", e.what());
        return input_error;
    }
    if (format_name == "json") format = OutputFormat::json;
    if (format_name == "dot") format = OutputFormat::dot;

    Session session(in, out, format);
    try {
        if (*validate_cmd) return cmd_validate(session, input);
        if (*check) return cmd_check(session, input, observable, partly, aposteriori);
        if (*min_time) return cmd_min_time(session, input, partial);
        if (*track_cmd) return cmd_track(session, input, word);
        if (*close) return cmd_des_close(session, input);
        if (*gen) return cmd_gen(session, family, params, roles_path, colored);
        if (*design) return cmd_design(session, target, input, k, goal_name, max_nodes, seconds);
        if (*convert) return cmd_convert(session, input, to);
    } catch (const ParseError& e) {
        report_error(err, format, input_error, "parse_error", e.what());
        return input_error;
    } catch (const InputError& e) {
        report_error(err, format, input_error, "input_error", e.what(), e.location());
        return input_error;
    } catch (const GraphError& e) {
        report_error(err, format, input_error, "graph_error", e.what());
        return input_error;
    } catch (const BudgetExceeded& e) {
        report_error(err, format, budget_exceeded, "budget_exceeded", e.what());
        return budget_exceeded;
    } catch (const std::exception& e) {
        report_error(err, format, input_error, "internal_error", e.what());
        return input_error;
    }
    return input_error;
}

}  // namespace observa::cli
