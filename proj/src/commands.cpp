#include "modq/commands.hpp"

#include <fmt/format.h>

#include "modq/bounds.hpp"
#include "modq/errors.hpp"
#include "modq/io.hpp"

namespace modq::cli {

void generate(const GenerateOptions& opts, std::ostream& out) {
    Graph g = generate(opts.params);
    const std::string prefix = opts.out_prefix.string();
    if (prefix.empty()) fail(ErrorKind::MalformedInput, "an output prefix is required");

    out << "file,kind,n,m,K\n";
    const std::string graph_path = prefix + ".edges";
    write_file(graph_path, write_edge_list(g));
    out << fmt::format("{},graph,{},{},\n", graph_path, g.node_count(), g.edge_count());

    Clustering natural = natural_clustering(opts.params);
    const std::string natural_path = prefix + ".V.clu";
    write_file(natural_path, write_clustering(natural));
    out << fmt::format("{},natural,{},,{}\n", natural_path, natural.node_count(), natural.cluster_count());

    for (std::int64_t J : opts.Js) {
        Clustering balanced = balanced_clustering(opts.params.node_count(), J);
        const std::string path = fmt::format("{}.U{}.clu", prefix, J);
        write_file(path, write_clustering(balanced));
        out << fmt::format("{},balanced,{},,{}\n", path, balanced.node_count(), balanced.cluster_count());
    }
}

void score(const ScoreOptions& opts, std::ostream& out) {
    Graph g = load_graph(opts.graph);
    Clustering c = load_clustering(opts.clustering);
    QualityReport r = evaluate(g, c);
    out << "m,K,q_f,q_0,q_n";
    if (opts.gamma) out << ",gamma,q_gamma";
    out << ",q_f_exact,q_0_exact,q_n_exact\n";
    out << fmt::format("{},{},{:.10f},{:.10f},{:.10f}", r.m, r.K, r.q_f, r.q_0, r.q_n);
    if (opts.gamma) out << fmt::format(",{},{:.10f}", *opts.gamma, q_gamma(g, c, *opts.gamma));
    out << fmt::format(",{},{},{}\n", to_fraction_string(r.exact_q_f), to_fraction_string(r.exact_q_0),
                       to_fraction_string(r.exact_q_n));
}

void table(const TableSpec& spec, std::ostream& out) { out << table_csv(compute_table(spec)); }

void sweep(const SweepSpec& spec, std::ostream& out) {
    out << sweep_csv(compute_sweep(spec), spec.epsilon.has_value());
    if (spec.epsilon) {
        WitnessOptions options;
        WitnessResult w = find_witness(spec.K, *spec.epsilon, spec.family, options);
        const auto& e = w.evaluation;
        out << fmt::format("# witness: x={} N1={} N2={} J={} qn_v={} qn_u={} jaccard={} instances_evaluated={}\n",
                           e.witness.x, e.witness.params.N1, e.witness.params.N2, e.witness.J,
                           to_fixed(e.q_natural, 6), to_fixed(e.q_balanced, 6), to_fixed(e.jaccard_ordered, 6),
                           w.instances_evaluated);
    }
}

void maximize(const MaximizeOptions& opts, std::ostream& out) {
    Graph g = load_graph(opts.graph);
    SearchResult r;
    switch (opts.method) {
        case SearchMethod::Exhaustive:
            r = opts.K ? brute_force_max_fixed_k(g, opts.quality, *opts.K) : brute_force_max(g, opts.quality);
            break;
        case SearchMethod::ExhaustiveFixedK:
            if (!opts.K) fail(ErrorKind::MalformedInput, "fixed-K search needs K");
            r = brute_force_max_fixed_k(g, opts.quality, *opts.K);
            break;
        case SearchMethod::Greedy:
            if (opts.K) fail(ErrorKind::MalformedInput, "greedy search does not take K");
            r = greedy_agglomerative(g, opts.quality);
            break;
    }
    out << "method,quality,gamma,n,m,clusters,score,evaluations\n";
    out << fmt::format("{},{},{},{},{},{},{:.10f},{}\n", to_string(r.method), opts.quality.name(),
                       opts.quality.gamma, g.node_count(), g.edge_count(), r.best_clustering.cluster_count(),
                       r.best_score, r.evaluations);
    if (opts.K && opts.quality.objective == Objective::IntraFraction) {
        out << fmt::format("# F_G({}) = {}\n", *opts.K, to_fraction_string(evaluate(g, r.best_clustering).exact_q_f));
    }
    const std::string clustering = write_clustering(r.best_clustering);
    if (opts.clustering_out) {
        write_file(*opts.clustering_out, clustering);
    } else {
        out << "# best clustering\n" << clustering;
    }
}

}  // namespace modq::cli
