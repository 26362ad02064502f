#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bicover/bounds.hpp"
#include "bicover/construct.hpp"
#include "bicover/covering.hpp"
#include "bicover/errors.hpp"
#include "bicover/graph.hpp"
#include "bicover/oracle.hpp"
#include "bicover/proofcheck.hpp"

namespace bicover::cli {

namespace {

using json = nlohmann::json;

constexpr int schema_version = 1;
constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

// Raised for bad files or inconsistent inputs; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
    if (text.empty() || text.back() != '\n') out << '\n';
    if (!out) throw UsageError("cannot write " + path);
}

json header(const std::string& command, json config) {
    return {{"schema_version", schema_version}, {"command", command}, {"config", std::move(config)}};
}

json opt_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::string csv_number(const json& v) {
    if (v.is_null()) return "";
    if (v.is_number_float()) {
        std::ostringstream s;
        s << std::setprecision(10) << v.get<double>();
        return s.str();
    }
    return v.dump();
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
    std::vector<int> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::logic_error&) {
            throw UsageError(flag + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw UsageError(flag + " is empty");
    return out;
}

struct Options {
    unsigned threads = 1;

    struct {
        int n = 0, lambda = 1;
        std::string method, graph, out;
    } construct;

    struct {
        std::string path, graph;
        std::optional<int> n;
        int lambda = 1;
    } verify;

    struct {
        std::optional<int> n, lambda;
        std::string graph, format = "json";
    } bounds;

    struct {
        int n = 0, lambda = 1;
        SearchBudget budget;
    } exact;

    struct {
        std::string path, graph;
        std::optional<int> n;
        int lambda = 1;
        bool exhaustive = false;
        std::optional<std::uint64_t> samples;
        std::uint64_t seed = 1;
    } proofcheck;

    struct {
        std::string n_list, lambda_list, format = "json";
        std::uint64_t exact_node_limit = 2'000'000;
    } sweep;

    struct {
        int n = 0;
        double p = 0.5;
        std::uint64_t seed = 1;
        std::string out;
    } random_graph;
};

int cmd_construct(const Options& o, std::ostream& out, std::ostream&) {
    const auto& c = o.construct;
    auto method = parse_method(c.method);
    if (!method) throw UsageError("unknown method " + c.method);
    std::optional<Graph> g;
    int n = c.n;
    if (!c.graph.empty()) {
        g = parse_graph(read_file(c.graph));
        n = g->order();
    } else if (*method == Method::coloring) {
        throw UsageError("--method coloring needs --graph");
    }
    if (c.out.empty()) throw UsageError("--out is required");

    json config = {{"n", n}, {"lambda", c.lambda}, {"method", c.method}, {"out", c.out}};
    if (g) config["graph"] = c.graph;

    auto built = construct(*method, n, c.lambda, g ? &*g : nullptr);
    write_file(c.out, serialize_covering(built.covering));

    json report = header("construct", config);
    report["covering"] = c.out;
    report["capacity"] = capacity(built.covering);
    report["blocks"] = built.covering.block_count();
    report["method"] = built.method;
    report["parameters"] = built.parameters;
    report["guaranteed_lambda"] = built.guaranteed_lambda;
    report["dropped_rows"] = built.dropped_rows;
    write_file(c.out + ".report.json", report.dump(2));
    out << report.dump(2) << '\n';
    return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream&) {
    const auto& v = o.verify;
    auto cov = parse_covering(read_file(v.path));
    json config = {{"path", v.path}, {"lambda", v.lambda}};
    CoverageReport report;
    try {
        if (!v.graph.empty()) {
            auto g = parse_graph(read_file(v.graph));
            config["graph"] = v.graph;
            report = verify(cov, g, v.lambda);
        } else {
            int n = v.n.value_or(cov.order());
            config["n"] = n;
            report = verify(cov, n, v.lambda);
        }
    } catch (const GroundSetMismatch& e) {
        throw UsageError(e.what());
    }
    json doc = header("verify", config);
    doc["report"] = report_to_json(report);
    doc["capacity"] = capacity(cov);
    out << doc.dump(2) << '\n';
    return report.valid() ? exit_ok : exit_failure;
}

void print_bound_table(const BoundReport& report, std::ostream& out) {
    out << "# instance: " << report.instance.dump() << '\n';
    out << std::left << std::setw(12) << "bound" << std::setw(8) << "side" << std::setw(16) << "value" << "notes\n";
    for (const auto& e : report.entries) {
        std::ostringstream value;
        if (e.value)
            value << std::fixed << std::setprecision(4) << *e.value;
        else
            value << "-";
        std::string notes;
        for (const auto& f : e.flags) notes += (notes.empty() ? "" : ",") + f;
        if (!e.error.empty()) notes += (notes.empty() ? "" : "; ") + e.error;
        out << std::left << std::setw(12) << e.name << std::setw(8) << e.side << std::setw(16) << value.str()
            << notes << '\n';
    }
}

int cmd_bounds(const Options& o, std::ostream& out, std::ostream&) {
    const auto& b = o.bounds;
    json config = {{"format", b.format}};
    BoundReport report;
    if (!b.graph.empty()) {
        if (b.n || b.lambda) throw UsageError("--graph excludes --n and --lambda");
        auto g = parse_graph(read_file(b.graph));
        config["graph"] = b.graph;
        report = bound_report(g, {.exact_limit = 200, .threads = o.threads});
    } else {
        if (!b.n || !b.lambda) throw UsageError("bounds needs --n and --lambda, or --graph");
        config["n"] = *b.n;
        config["lambda"] = *b.lambda;
        report = bound_report(*b.n, *b.lambda);
    }
    if (b.format == "table") {
        out << "# config: " << header("bounds", config).dump() << '\n';
        print_bound_table(report, out);
    } else {
        json doc = header("bounds", config);
        doc["report"] = bound_report_to_json(report);
        out << doc.dump(2) << '\n';
    }
    return exit_ok;
}

int cmd_exact(const Options& o, std::ostream& out, std::ostream&) {
    const auto& e = o.exact;
    json config = {{"n", e.n},
                   {"lambda", e.lambda},
                   {"max_capacity", e.budget.max_capacity},
                   {"max_blocks", e.budget.max_blocks},
                   {"node_limit", e.budget.node_limit}};
    auto result = exact_cap(e.n, e.lambda, e.budget);
    json doc = header("exact", config);
    doc.update(exact_result_to_json(result));
    out << doc.dump(2) << '\n';
    return exit_ok;
}

int cmd_proofcheck(const Options& o, std::ostream& out, std::ostream&) {
    const auto& p = o.proofcheck;
    auto cov = parse_covering(read_file(p.path));
    if (p.exhaustive && p.samples) throw UsageError("--exhaustive and --samples are exclusive");

    SweepMode mode;
    if (p.samples)
        mode = SweepMode::sampled(p.seed, *p.samples);
    else if (!p.exhaustive && cov.block_count() > static_cast<std::size_t>(exhaustive_block_limit))
        mode = SweepMode::sampled(p.seed, 100'000);

    json config = {{"path", p.path}};
    if (mode.kind == SweepMode::Kind::exhaustive) {
        config["mode"] = "exhaustive";
    } else {
        config["mode"] = "sampled";
        config["samples"] = mode.trials;
        config["seed"] = mode.seed;
    }

    std::vector<CheckReport> checks;
    if (!p.graph.empty()) {
        if (p.n) throw UsageError("--graph excludes --n");
        auto g = parse_graph(read_file(p.graph));
        if (g.order() != cov.order()) throw UsageError("covering and graph have different vertex counts");
        config["graph"] = p.graph;
        auto alpha = alpha_per_vertex(g, {.exact_limit = 200, .threads = o.threads});
        checks.push_back(check_overlap_lemma(cov, g, alpha, mode));
        checks.push_back(check_independent_event_sets(cov, g, mode));
    } else {
        int n = p.n.value_or(cov.order());
        if (n != cov.order()) throw UsageError("covering has " + std::to_string(cov.order()) + " vertices, not " +
                                               std::to_string(n));
        config["n"] = n;
        config["lambda"] = p.lambda;
        checks.push_back(check_tail_sum(cov, p.lambda));
        checks.push_back(check_event_disjointness(cov, p.lambda, mode));
        const int r = (p.lambda - 1) / 2;
        if (r >= 1) {
            checks.push_back(check_eq1(cov, p.lambda));
            checks.push_back(check_convexity(r, 2 * r + 1, 50, 480));
        }
    }

    bool ok = true;
    json doc = header("proofcheck", config);
    doc["checks"] = json::array();
    for (const auto& c : checks) {
        ok = ok && c.ok;
        doc["checks"].push_back(check_report_to_json(c));
    }
    doc["ok"] = ok;
    out << doc.dump(2) << '\n';
    return ok ? exit_ok : exit_failure;
}

int cmd_sweep(const Options& o, std::ostream& out, std::ostream&) {
    const auto& s = o.sweep;
    auto ns = parse_int_list(s.n_list, "--n-list");
    auto lams = parse_int_list(s.lambda_list, "--lambda-list");
    for (int n : ns)
        if (n < 2) throw UsageError("--n-list entries must be >= 2");
    for (int l : lams)
        if (l < 1) throw UsageError("--lambda-list entries must be >= 1");

    json config = {{"n_list", ns}, {"lambda_list", lams}, {"format", s.format},
                   {"exact_node_limit", s.exact_node_limit}};
    static const char* const columns[] = {"n",       "lambda",  "lb_edgecount", "lb_thm11",
                                          "ub_item1", "ub_item2", "ub_item3",     "ub_item4",
                                          "best_construction", "best_capacity", "exact"};

    json rows = json::array();
    for (int n : ns) {
        for (int lam : lams) {
            auto report = bound_report(n, lam);
            auto value = [&](const char* name) {
                const auto* e = report.find(name);
                return e ? opt_number(e->value) : json(nullptr);
            };
            auto best = best_construction(n, lam);
            json exact = nullptr;
            if (n <= 7) {
                SearchBudget budget;
                budget.node_limit = s.exact_node_limit;
                auto r = exact_cap(n, lam, budget);
                if (r.optimal()) exact = *r.upper;
            }
            rows.push_back({{"n", n},
                            {"lambda", lam},
                            {"lb_edgecount", value("edge_count")},
                            {"lb_thm11", value("thm11")},
                            {"ub_item1", value("item1")},
                            {"ub_item2", value("item2")},
                            {"ub_item3", value("item3")},
                            {"ub_item4", value("item4")},
                            {"best_construction", best.method},
                            {"best_capacity", capacity(best.covering)},
                            {"exact", exact}});
        }
    }

    if (s.format == "csv") {
        out << "# config: " << header("sweep", config).dump() << '\n';
        for (std::size_t i = 0; i < std::size(columns); ++i) out << (i ? "," : "") << columns[i];
        out << '\n';
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < std::size(columns); ++i) {
                const auto& v = row.at(columns[i]);
                out << (i ? "," : "") << (v.is_string() ? v.get<std::string>() : csv_number(v));
            }
            out << '\n';
        }
    } else {
        json doc = header("sweep", config);
        doc["rows"] = rows;
        out << doc.dump(2) << '\n';
    }
    return exit_ok;
}

int cmd_random_graph(const Options& o, std::ostream& out, std::ostream&) {
    const auto& r = o.random_graph;
    auto g = random_graph(r.n, r.p, r.seed);
    write_file(r.out, serialize_graph(g));
    json doc = header("random-graph", {{"n", r.n}, {"p", r.p}, {"seed", r.seed}, {"out", r.out}});
    doc["edges"] = g.edge_count();
    out << doc.dump(2) << '\n';
    return exit_ok;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Bipartite coverings of multigraphs: constructions, verification, bounds"};
    app.name("bicover");
    app.require_subcommand(1);
    app.add_option("--threads", o.threads, "Worker threads for independence-number searches (0 = all cores)")
        ->capture_default_str();

    auto* construct_cmd = app.add_subcommand("construct", "Build a covering of K_n^lambda or of a graph");
    construct_cmd->add_option("--n", o.construct.n, "Number of vertices")->check(CLI::Range(2, 1 << 24));
    construct_cmd->add_option("--lambda", o.construct.lambda, "Required multiplicity")
        ->check(CLI::Range(1, 1 << 20))
        ->capture_default_str();
    construct_cmd->add_option("--method", o.construct.method, "Construction method")
        ->required()
        ->check(CLI::IsMember({"even-weight", "gv", "bch", "hadamard", "balanced", "coloring"}));
    construct_cmd->add_option("--graph", o.construct.graph, "Graph JSON (coloring method)")->check(CLI::ExistingFile);
    construct_cmd->add_option("--out", o.construct.out, "Output covering JSON")->required();

    auto* verify_cmd = app.add_subcommand("verify", "Check a covering file");
    verify_cmd->add_option("path", o.verify.path, "Covering JSON")->required()->check(CLI::ExistingFile);
    auto* verify_n = verify_cmd->add_option("--n", o.verify.n, "Vertex count (default: the covering's)");
    verify_cmd->add_option("--lambda", o.verify.lambda, "Required multiplicity")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify_cmd->add_option("--graph", o.verify.graph, "Target graph JSON instead of K_n")
        ->check(CLI::ExistingFile)
        ->excludes(verify_n);

    auto* bounds_cmd = app.add_subcommand("bounds", "Lower and upper bounds on the capacity");
    bounds_cmd->add_option("--n", o.bounds.n, "Number of vertices");
    bounds_cmd->add_option("--lambda", o.bounds.lambda, "Required multiplicity");
    bounds_cmd->add_option("--graph", o.bounds.graph, "Graph JSON")->check(CLI::ExistingFile);
    bounds_cmd->add_option("--format", o.bounds.format, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();

    auto* exact_cmd = app.add_subcommand("exact", "Exact minimum capacity for small n");
    exact_cmd->add_option("--n", o.exact.n, "Number of vertices")->required();
    exact_cmd->add_option("--lambda", o.exact.lambda, "Required multiplicity")->required();
    exact_cmd->add_option("--max-capacity", o.exact.budget.max_capacity, "Largest capacity searched")
        ->capture_default_str();
    exact_cmd->add_option("--max-blocks", o.exact.budget.max_blocks, "Largest block count")->capture_default_str();
    exact_cmd->add_option("--node-limit", o.exact.budget.node_limit, "Search node budget")->capture_default_str();

    auto* proof_cmd = app.add_subcommand("proofcheck", "Numerical checks of the lower-bound argument");
    proof_cmd->add_option("path", o.proofcheck.path, "Covering JSON")->required()->check(CLI::ExistingFile);
    proof_cmd->add_option("--n", o.proofcheck.n, "Vertex count (default: the covering's)");
    proof_cmd->add_option("--lambda", o.proofcheck.lambda, "Required multiplicity")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    proof_cmd->add_option("--graph", o.proofcheck.graph, "Target graph JSON")->check(CLI::ExistingFile);
    proof_cmd->add_flag("--exhaustive", o.proofcheck.exhaustive, "Enumerate every vector (at most 20 blocks)");
    proof_cmd->add_option("--samples", o.proofcheck.samples, "Sampled vectors instead of enumeration");
    proof_cmd->add_option("--seed", o.proofcheck.seed, "Seed for sampling")->capture_default_str();

    auto* sweep_cmd = app.add_subcommand("sweep", "Bounds, constructions and exact values over a grid");
    sweep_cmd->add_option("--n-list", o.sweep.n_list, "Comma-separated n values")->required();
    sweep_cmd->add_option("--lambda-list", o.sweep.lambda_list, "Comma-separated lambda values")->required();
    sweep_cmd->add_option("--format", o.sweep.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    sweep_cmd->add_option("--exact-node-limit", o.sweep.exact_node_limit, "Node budget of the exact search per row")
        ->capture_default_str();

    auto* random_cmd = app.add_subcommand("random-graph", "Write a seeded G(n, p)");
    random_cmd->add_option("--n", o.random_graph.n, "Number of vertices")->required()->check(CLI::Range(1, 1 << 16));
    random_cmd->add_option("--p", o.random_graph.p, "Edge probability")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    random_cmd->add_option("--seed", o.random_graph.seed, "Seed")->capture_default_str();
    random_cmd->add_option("--out", o.random_graph.out, "Output graph JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*construct_cmd) {
            if (o.construct.graph.empty() && !construct_cmd->count("--n")) throw UsageError("construct needs --n");
            return cmd_construct(o, out, err);
        }
        if (*verify_cmd) return cmd_verify(o, out, err);
        if (*bounds_cmd) return cmd_bounds(o, out, err);
        if (*exact_cmd) return cmd_exact(o, out, err);
        if (*proof_cmd) return cmd_proofcheck(o, out, err);
        if (*sweep_cmd) return cmd_sweep(o, out, err);
        if (*random_cmd) return cmd_random_graph(o, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const RangeError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const OverlapError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const GroundSetMismatch& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}

} // namespace bicover::cli
