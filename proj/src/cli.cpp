#include "pebble/cli.hpp"

#include "pebble/cover_number.hpp"
#include "pebble/json_io.hpp"
#include "pebble/random_config.hpp"
#include "pebble/reduction.hpp"
#include "pebble/solvability.hpp"
#include "pebble/threshold.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace pebble {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string decimal(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

struct Options {
    std::string graph, config, certificate, instance, out, out_graph, out_config;
    std::string model, family;
    std::uint64_t budget = SolveOptions{}.node_budget;
    bool oracle = false;
    std::size_t n = 0, d = 0;
    Count t = 0, t_min = 0, t_max = 0, step = 1;
    std::optional<std::uint64_t> x;
    std::optional<std::uint64_t> seed;
    std::uint64_t count = 1, trials = 0;
    unsigned workers = 1;
    bool crossing = false;
    std::vector<std::size_t> parts;
    std::optional<double> p;
};

int cmd_lambda(const Options& o, std::ostream& out) {
    const auto g = graph_from_json(read_file(o.graph));
    const auto r = cover_pebbling_number(g);
    out << "{\"lambda\": \"" << r.lambda.str() << "\", \"argmax\": " << r.argmax_vertex << "}\n";
    return kExitOk;
}

int cmd_solve(const Options& o, std::ostream& out) {
    const auto g = graph_from_json(read_file(o.graph));
    const auto c = config_from_json(read_file(o.config));
    check_dimensions(g, c);
    if (o.oracle) {
        const bool ok = solve_bruteforce(g, c);
        out << "{\"result\": \"" << (ok ? "solvable" : "unsolvable") << "\", \"strategy\": \"bruteforce\"}\n";
        return ok ? kExitOk : kExitNegative;
    }
    const auto r = solve(g, c, SolveOptions{o.budget});
    out << "{\"result\": \"" << to_string(r.outcome) << "\", \"strategy\": \"" << to_string(r.stats.strategy)
        << "\", \"nodes\": " << r.stats.nodes_expanded << "}\n";
    if (r.certificate && !o.certificate.empty()) write_file(o.certificate, certificate_to_json(*r.certificate));
    switch (r.outcome) {
        case Outcome::Solvable: return kExitOk;
        case Outcome::Unsolvable: return kExitNegative;
        case Outcome::Undecided: return kExitUndecided;
    }
    return kExitUndecided;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto g = graph_from_json(read_file(o.graph));
    const auto c = config_from_json(read_file(o.config));
    const auto m = certificate_from_json(read_file(o.certificate));
    const bool ok = verify_certificate(g, c, m);
    out << (ok ? "valid" : "invalid") << "\n";
    return ok ? kExitOk : kExitNegative;
}

int cmd_sample(const Options& o, std::ostream& out) {
    const auto model = parse_model(o.model);
    for (std::uint64_t i = 0; i < o.count; ++i) out << config_to_json(sample(model, o.n, o.t, {*o.seed, i}));
    return kExitOk;
}

int cmd_dist(const Options& o, std::ostream& out) {
    if (o.n == 0) throw InputError("--n must be at least 1");
    if (o.x) {
        out << to_fraction_string(be_odd_stack_pmf(o.n, o.t, *o.x)) << "\n";
        return kExitOk;
    }
    for (std::uint64_t x = o.t % 2; x <= std::min<std::uint64_t>(o.n, o.t); x += 2) {
        const auto p = be_odd_stack_pmf(o.n, o.t, x);
        out << x << " " << to_fraction_string(p) << " " << decimal(to_double(p)) << "\n";
    }
    const auto mean = be_expected_odd_stacks_exact(o.n, o.t);
    out << "# mean " << to_fraction_string(mean) << " " << decimal(to_double(mean)) << " approx "
        << decimal(be_expected_odd_stacks_approx(double(o.n), double(o.t))) << "\n";
    return kExitOk;
}

int cmd_threshold(const Options& o, std::ostream& out) {
    const auto curve = sweep(parse_model(o.model), o.n, o.t_min, o.t_max, o.step, o.trials, *o.seed, o.workers);
    if (o.out.empty()) {
        write_csv(out, curve, o.crossing);
    } else {
        std::ostringstream ss;
        write_csv(ss, curve, o.crossing);
        write_file(o.out, ss.str());
    }
    return kExitOk;
}

int cmd_reduce(const Options& o, std::ostream& out) {
    const auto x = instance_from_json(read_file(o.instance));
    const auto r = build_reduction(x);
    write_file(o.out_graph, graph_to_json(r.graph));
    write_file(o.out_config, config_to_json(r.config));
    out << "{\"vertices\": " << r.graph.vertex_count() << ", \"edges\": " << r.graph.edge_count()
        << ", \"pebbles\": " << r.config.total() << ", \"labels\": [";
    for (std::size_t v = 0; v < r.labels.size(); ++v) out << (v ? ", " : "") << '"' << r.labels[v].tag() << '"';
    out << "]}\n";
    return kExitOk;
}

int cmd_xcover(const Options& o, std::ostream& out) {
    const auto x = instance_from_json(read_file(o.instance));
    const auto cover = exact_cover_bruteforce(x);
    if (!cover) {
        out << "none\n";
        return kExitNegative;
    }
    out << "[";
    for (std::size_t i = 0; i < cover->size(); ++i) out << (i ? ", " : "") << (*cover)[i];
    out << "]\n";
    return kExitOk;
}

int cmd_gen(const Options& o) {
    FamilySpec spec;
    auto need = [](bool present, const char* flag, const std::string& family) {
        if (!present) throw UsageError("gen --family " + family + " requires " + flag);
    };
    const std::string& f = o.family;
    if (f == "kn" || f == "pn" || f == "cn" || f == "tree" || f == "gnp") need(o.n > 0, "--n", f);
    if (f == "kn") spec.family = Family::Complete;
    else if (f == "pn") spec.family = Family::Path;
    else if (f == "cn") spec.family = Family::Cycle;
    else if (f == "qd") spec.family = Family::Cube;
    else if (f == "kmulti") {
        need(!o.parts.empty(), "--parts", f);
        spec.family = Family::CompleteMultipartite;
    } else if (f == "tree") {
        need(o.seed.has_value(), "--seed", f);
        spec.family = Family::RandomTree;
    } else {
        need(o.seed.has_value(), "--seed", f);
        need(o.p.has_value(), "--p", f);
        spec.family = Family::ErdosRenyi;
    }
    spec.n = o.n;
    spec.dimension = o.d;
    spec.parts = o.parts;
    spec.p = o.p.value_or(0.0);
    spec.seed = o.seed.value_or(0);
    write_file(o.out, graph_to_json(generate_family(spec)));
    return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cover pebbling toolkit"};
    app.name("pebble");
    app.require_subcommand(1);
    Options o;

    auto existing = CLI::ExistingFile;

    auto* lambda = app.add_subcommand("lambda", "Cover pebbling number of a connected graph");
    lambda->add_option("--graph", o.graph, "Graph JSON")->required()->check(existing);

    auto* solve_cmd = app.add_subcommand("solve", "Decide cover solvability (exit 0/1/2)");
    solve_cmd->add_option("--graph", o.graph)->required()->check(existing);
    solve_cmd->add_option("--config", o.config)->required()->check(existing);
    auto* cert_opt = solve_cmd->add_option("--certificate", o.certificate, "Write the certificate here when solvable");
    solve_cmd->add_option("--budget", o.budget, "Node budget for the search");
    solve_cmd->add_flag("--oracle", o.oracle, "Use the exhaustive reference search")->excludes(cert_opt);

    auto* verify = app.add_subcommand("verify", "Check a move certificate (exit 0 valid, 1 invalid)");
    verify->add_option("--graph", o.graph)->required()->check(existing);
    verify->add_option("--config", o.config)->required()->check(existing);
    verify->add_option("--certificate", o.certificate)->required()->check(existing);

    const auto models = CLI::IsMember({"mb", "be"});
    auto* sample_cmd = app.add_subcommand("sample", "Random configurations, one JSON document per line");
    sample_cmd->add_option("--model", o.model)->required()->check(models);
    sample_cmd->add_option("--n", o.n)->required();
    sample_cmd->add_option("--t", o.t)->required();
    sample_cmd->add_option("--seed", o.seed)->required();
    sample_cmd->add_option("--count", o.count);

    auto* dist = app.add_subcommand("dist", "Exact odd-stack distribution under Bose-Einstein placement");
    dist->add_option("--n", o.n)->required();
    dist->add_option("--t", o.t)->required();
    dist->add_option("--x", o.x);

    auto* threshold = app.add_subcommand("threshold", "Monte Carlo solvability curve on K_n (CSV)");
    threshold->add_option("--model", o.model)->required()->check(models);
    threshold->add_option("--n", o.n)->required();
    threshold->add_option("--t-min", o.t_min)->required();
    threshold->add_option("--t-max", o.t_max)->required();
    threshold->add_option("--step", o.step)->required()->check(CLI::PositiveNumber);
    threshold->add_option("--trials", o.trials)->required()->check(CLI::PositiveNumber);
    threshold->add_option("--seed", o.seed)->required();
    threshold->add_option("--workers", o.workers)->check(CLI::PositiveNumber);
    threshold->add_flag("--crossing", o.crossing, "Append the 0.5 crossing summary");
    threshold->add_option("--out", o.out);

    auto* reduce = app.add_subcommand("reduce", "Build the gadget graph for an exact-cover-by-4-sets instance");
    reduce->add_option("--instance", o.instance)->required()->check(existing);
    reduce->add_option("--out-graph", o.out_graph)->required();
    reduce->add_option("--out-config", o.out_config)->required();

    auto* xcover = app.add_subcommand("xcover", "Exact cover witness or 'none'");
    xcover->add_option("--instance", o.instance)->required()->check(existing);

    auto* gen = app.add_subcommand("gen", "Generate a graph family");
    gen->add_option("--family", o.family)->required()->check(CLI::IsMember({"kn", "pn", "cn", "qd", "kmulti", "tree", "gnp"}));
    gen->add_option("--n", o.n);
    gen->add_option("--d", o.d);
    gen->add_option("--parts", o.parts)->delimiter(',');
    gen->add_option("--p", o.p);
    gen->add_option("--seed", o.seed);
    gen->add_option("--out", o.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*lambda) return cmd_lambda(o, out);
        if (*solve_cmd) return cmd_solve(o, out);
        if (*verify) return cmd_verify(o, out);
        if (*sample_cmd) return cmd_sample(o, out);
        if (*dist) return cmd_dist(o, out);
        if (*threshold) return cmd_threshold(o, out);
        if (*reduce) return cmd_reduce(o, out);
        if (*xcover) return cmd_xcover(o, out);
        if (*gen) return cmd_gen(o);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitDataError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitDataError;
    }
    return kExitUsage;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"pebble"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace pebble
