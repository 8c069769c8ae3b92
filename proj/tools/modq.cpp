// modq: generate counterexample graphs, score clusterings, reproduce the
// modularity tables and run parameter sweeps. All output is CSV on stdout.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "modq/commands.hpp"
#include "modq/errors.hpp"

namespace {

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
        modq::fail(modq::ErrorKind::MalformedInput, "x range must look like a..b, got '" + text + "'");
    }
    try {
        std::size_t used = 0;
        const std::string first = text.substr(0, dots);
        const std::string last = text.substr(dots + 2);
        std::int64_t a = std::stoll(first, &used);
        if (used != first.size()) throw std::invalid_argument(first);
        std::int64_t b = std::stoll(last, &used);
        if (used != last.size()) throw std::invalid_argument(last);
        return {a, b};
    } catch (const std::logic_error&) {
        modq::fail(modq::ErrorKind::MalformedInput, "x range must look like a..b, got '" + text + "'");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Modularity counterexample toolkit"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Write a family instance with its natural and balanced clusterings");
    std::string gen_family = "G";
    modq::cli::GenerateOptions gen;
    std::string gen_out;
    generate->add_option("--family", gen_family, "G or H")->required();
    generate->add_option("--K", gen.params.K, "number of blocks")->required();
    generate->add_option("--N1", gen.params.N1, "first block size")->required();
    generate->add_option("--N2", gen.params.N2, "second block size")->required();
    generate->add_option("--J", gen.Js, "balanced clusterings to write (repeatable)");
    generate->add_option("--out", gen_out, "output prefix")->required();

    // score
    auto* score = app.add_subcommand("score", "Compute Q_f, Q_0, Q_N (and Q_gamma) for a graph and clustering");
    modq::cli::ScoreOptions sc;
    std::string sc_graph, sc_clustering;
    double sc_gamma = 1.0;
    score->add_option("graph", sc_graph, "edge-list file")->required();
    score->add_option("clustering", sc_clustering, "clustering file")->required();
    auto* gamma_opt = score->add_option("--gamma", sc_gamma, "resolution parameter");

    // table
    auto* table = app.add_subcommand("table", "Reproduce table 1 (family G) or table 2 (family H)");
    int table_id = 1;
    std::vector<std::int64_t> table_xs;
    std::int64_t table_k = 0;
    std::int64_t table_n1 = 0;
    table->add_option("table", table_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    table->add_option("--x", table_xs, "x values (repeatable); defaults to the published columns");
    table->add_option("--K", table_k, "override K");
    table->add_option("--N1", table_n1, "override N1");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Evaluate the witness construction over a range of x");
    std::string sw_family = "G";
    std::string sw_range;
    modq::SweepSpec sw;
    std::int64_t sw_n1 = 0;
    double sw_eps = 0;
    sweep->add_option("--family", sw_family, "G or H")->required();
    sweep->add_option("--K", sw.K, "number of blocks")->required();
    sweep->add_option("--x-range", sw_range, "inclusive range a..b")->required();
    sweep->add_option("--N1", sw_n1, "override N1");
    auto* eps_opt = sweep->add_option("--epsilon", sw_eps, "target epsilon; also runs the witness search");

    // maximize
    auto* maximize = app.add_subcommand("maximize", "Exhaustive or greedy maximization of a quality function");
    std::string mx_graph, mx_method = "exhaustive", mx_quality = "qn", mx_out;
    double mx_gamma = 1.0;
    unsigned mx_k = 0;
    maximize->add_option("graph", mx_graph, "edge-list file")->required();
    maximize->add_option("--method", mx_method, "exhaustive or greedy")->check(CLI::IsMember({"exhaustive", "greedy"}));
    maximize->add_option("--quality", mx_quality, "qn, qf, q0 or qgamma")
        ->check(CLI::IsMember({"qn", "qf", "q0", "qgamma"}));
    maximize->add_option("--gamma", mx_gamma, "resolution parameter for qgamma");
    auto* k_opt = maximize->add_option("--K", mx_k, "exact cluster count (exhaustive only)");
    maximize->add_option("--out", mx_out, "write the best clustering here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (generate->parsed()) {
            gen.params.family = modq::parse_family(gen_family);
            gen.out_prefix = gen_out;
            modq::cli::generate(gen, std::cout);
        } else if (score->parsed()) {
            sc.graph = sc_graph;
            sc.clustering = sc_clustering;
            if (gamma_opt->count() > 0) sc.gamma = sc_gamma;
            modq::cli::score(sc, std::cout);
        } else if (table->parsed()) {
            modq::TableSpec spec = modq::TableSpec::published(table_id);
            if (!table_xs.empty()) spec.xs = table_xs;
            if (table_k > 0) spec.K = table_k;
            if (table_n1 > 0) spec.N1 = table_n1;
            modq::cli::table(spec, std::cout);
        } else if (sweep->parsed()) {
            sw.family = modq::parse_family(sw_family);
            std::tie(sw.x_first, sw.x_last) = parse_range(sw_range);
            if (sw_n1 > 0) sw.N1 = sw_n1;
            if (eps_opt->count() > 0) sw.epsilon = sw_eps;
            modq::cli::sweep(sw, std::cout);
        } else if (maximize->parsed()) {
            modq::cli::MaximizeOptions mx;
            mx.graph = mx_graph;
            mx.method = mx_method == "greedy" ? modq::SearchMethod::Greedy : modq::SearchMethod::Exhaustive;
            mx.quality = modq::QualityFunction::parse(mx_quality, mx_gamma);
            if (k_opt->count() > 0) mx.K = mx_k;
            if (!mx_out.empty()) mx.clustering_out = mx_out;
            modq::cli::maximize(mx, std::cout);
        }
    } catch (const modq::Error& e) {
        std::cerr << "error (" << modq::to_string(e.kind()) << "): " << e.what() << "\n";
        return modq::exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
