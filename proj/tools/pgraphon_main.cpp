#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "pgraphon/delta_cut.hpp"
#include "pgraphon/errors.hpp"
#include "pgraphon/experiments.hpp"
#include "pgraphon/hom_density.hpp"
#include "pgraphon/json_io.hpp"
#include "pgraphon/random_instances.hpp"
#include "pgraphon/regularity.hpp"
#include "pgraphon/sampling.hpp"

namespace pg = pgraphon;
using pg::Json;

namespace {

void print_result(const Json& j) { std::cout << j.dump(2) << "\n"; }

pg::MetricChoice metric_from_name(const std::string& name, const pg::WeightSpacePtr& space) {
    if (name == "prohorov") return pg::MetricChoice::prohorov_metric();
    if (name == "kr") return pg::MetricChoice::kr();
    if (name == "fm") return pg::MetricChoice::fm();
    if (name == "fnorm") return pg::MetricChoice::f_norm(pg::canonical_family(space));
    throw pg::InputError("unknown metric '" + name + "'");
}

void write_report(const pg::ExperimentReport& rep, const std::string& out_path) {
    if (!out_path.empty()) {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw pg::InputError("cannot open CSV output file: " + out_path);
        pg::csv_emit(rep.to_csv(), out);
    }
    Json j;
    j["experiment"] = rep.experiment;
    j["trials"] = rep.trials;
    j["violations"] = rep.violations;
    j["violation_fraction"] = rep.violation_fraction();
    Json agg;
    for (const auto& [k, v] : rep.aggregates) agg[k] = v;
    j["aggregates"] = std::move(agg);
    print_result(j);
}

pg::MeasureGraph default_graph_close_instance(int k, std::uint64_t seed) {
    const auto space = pg::make_discrete_space(2, 0);
    pg::CounterRng rng(pg::derive_seed(seed, 0x68ULL));
    std::vector<pg::SignedMeasure> cells;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            cells.push_back(i == j ? pg::dirac(space, 0)
                                   : pg::random_probability_measure(rng, space));
    return pg::MeasureGraph(space, k, std::move(cells));
}

int run(int argc, char** argv) {
    CLI::App app{"probability-graphon toolkit: metrics on measures, cut distances, sampling,\n"
                 "homomorphism densities, and empirical verification suites"};
    app.require_subcommand(1);

    std::string in_path = "-";
    std::string out_path;
    std::string metric_name = "fnorm";
    std::string mode;
    std::uint64_t seed = 1;
    int trials = 100;
    std::int64_t granularity = 4;

    auto add_common = [&](CLI::App* cmd, bool with_metric) {
        cmd->add_option("--in", in_path, "input JSON file ('-' for stdin)");
        cmd->add_option("--seed", seed, "PRNG seed");
        if (with_metric)
            cmd->add_option("--metric", metric_name, "prohorov|kr|fm|fnorm (default fnorm)");
        return cmd;
    };

    // dist
    auto* dist = add_common(app.add_subcommand("dist", "distance between two measures"), true);
    dist->callback([&] {
        const Json j = pg::load_json(in_path);
        pg::WeightSpacePtr space;
        if (j.contains("space")) space = pg::parse_weight_space(j.at("space"));
        const auto mu = pg::parse_measure(j.at("mu"), space);
        const auto nu = pg::parse_measure(j.at("nu"), space);
        const auto metric = metric_from_name(metric_name, mu.space);
        Json out;
        out["metric"] = metric_name;
        out["value"] = pg::eval_dist(metric, mu, nu);
        print_result(out);
    });

    // cutnorm
    int restarts = 16;
    auto* cutnorm =
        add_common(app.add_subcommand("cutnorm", "cut norm of a signed step kernel"), true);
    cutnorm->add_option("--mode", mode, "exact|heuristic (default exact)");
    cutnorm->add_option("--restarts", restarts, "heuristic restarts");
    cutnorm->callback([&] {
        const Json j = pg::load_json(in_path);
        const auto d = pg::parse_graphon(j.contains("d") ? j.at("d") : j,
                                         j.contains("space") ? pg::parse_weight_space(j.at("space"))
                                                             : nullptr);
        const auto metric = metric_from_name(metric_name, d.space());
        const std::string m = mode.empty() ? "exact" : mode;
        pg::CutWitness wit;
        if (m == "exact")
            wit = pg::cut_norm_exact(d, metric);
        else if (m == "heuristic")
            wit = pg::cut_norm_heuristic(d, metric, restarts, seed);
        else
            throw pg::InputError("cutnorm mode must be exact or heuristic");
        Json out;
        out["metric"] = metric_name;
        out["mode"] = m;
        out["bound"] = m == "exact" ? "exact" : "lower";
        out["value"] = wit.value;
        out["witness"] = pg::witness_to_json(wit);
        print_result(out);
    });

    // cutdist
    auto* cutdist =
        add_common(app.add_subcommand("cutdist", "labeled cut distance between two kernels"), true);
    cutdist->callback([&] {
        const Json j = pg::load_json(in_path);
        pg::WeightSpacePtr space;
        if (j.contains("space")) space = pg::parse_weight_space(j.at("space"));
        const auto u = pg::parse_graphon(j.at("u"), space);
        const auto w = pg::parse_graphon(j.at("w"), space);
        const auto metric = metric_from_name(metric_name, u.space());
        const auto wit = pg::cut_dist_exact(u, w, metric);
        Json out;
        out["metric"] = metric_name;
        out["value"] = wit.value;
        out["witness"] = pg::witness_to_json(wit);
        print_result(out);
    });

    // delta
    auto* delta = add_common(
        app.add_subcommand("delta", "unlabeled cut distance at a fixed granularity"), true);
    delta->add_option("--mode", mode, "brute|anneal (default brute)");
    delta->add_option("--granularity", granularity, "equipartition block count L");
    delta->callback([&] {
        const Json j = pg::load_json(in_path);
        pg::WeightSpacePtr space;
        if (j.contains("space")) space = pg::parse_weight_space(j.at("space"));
        const auto u = pg::parse_graphon(j.at("u"), space);
        const auto w = pg::parse_graphon(j.at("w"), space);
        const auto metric = metric_from_name(metric_name, u.space());
        const std::string m = mode.empty() ? "brute" : mode;
        pg::DeltaResult res;
        if (m == "brute")
            res = pg::delta_cut_brute(u, w, metric, granularity);
        else if (m == "anneal")
            res = pg::delta_cut_anneal(u, w, metric, granularity, seed);
        else
            throw pg::InputError("delta mode must be brute or anneal");
        Json out;
        out["metric"] = metric_name;
        out["mode"] = m;
        out["granularity"] = granularity;
        out["value"] = res.value;
        out["permutation"] = res.permutation;
        out["inner_exact"] = res.inner_exact;
        out["bound"] = m == "brute" ? "exact-at-granularity" : "estimate";
        print_result(out);
    });

    // sample
    int sample_k = 8;
    bool symmetric = false;
    std::string stage = "g";
    auto* sample = add_common(app.add_subcommand("sample", "W-random graphs and subsampling"), false);
    sample->add_option("--k", sample_k, "vertex count");
    sample->add_flag("--symmetric", symmetric, "draw each undirected edge once");
    sample->add_option("--stage", stage, "h|g|sub (default g)");
    sample->callback([&] {
        const Json j = pg::load_json(in_path);
        Json out;
        if (stage == "sub") {
            const auto g = pg::parse_graph(j);
            out = pg::graph_to_json(pg::subsample(g, sample_k, seed));
        } else if (stage == "h") {
            const auto w = pg::parse_graphon(j);
            const auto hs = pg::sample_h(w, sample_k, seed);
            out["space"] = pg::weight_space_to_json(*hs.graph.space);
            out["n"] = hs.graph.n;
            out["vertex_blocks"] = hs.vertex_blocks;
            Json cells = Json::array();
            for (int i = 0; i < hs.graph.n; ++i) {
                Json row = Json::array();
                for (int jj = 0; jj < hs.graph.n; ++jj)
                    row.push_back(pg::measure_to_json(hs.graph.cell(i, jj)));
                cells.push_back(std::move(row));
            }
            out["cells"] = std::move(cells);
        } else if (stage == "g") {
            const auto w = pg::parse_graphon(j);
            out = pg::graph_to_json(pg::sample_g(w, sample_k, seed, symmetric));
        } else {
            throw pg::InputError("sample stage must be h, g or sub");
        }
        print_result(out);
    });

    // homdens
    std::int64_t samples = 100000;
    auto* homdens =
        add_common(app.add_subcommand("homdens", "homomorphism density of a decorated graph"),
                   false);
    homdens->add_option("--mode", mode, "exact|mc (default exact)");
    homdens->add_option("--samples", samples, "Monte Carlo sample count");
    homdens->callback([&] {
        const Json j = pg::load_json(in_path);
        pg::WeightSpacePtr space;
        if (j.contains("space")) space = pg::parse_weight_space(j.at("space"));
        const std::string m = mode.empty() ? "exact" : mode;
        Json out;
        out["mode"] = m;
        if (j.contains("g")) {
            const auto g = pg::parse_graph(j.at("g"), space);
            const auto f = pg::parse_decorated_graph(j.at("f"), pg::canonical_family(g.space));
            out["value"] = pg::hom_density_graph(f, g);
        } else {
            const auto w = pg::parse_graphon(j.at("w"), space);
            const auto f = pg::parse_decorated_graph(j.at("f"), pg::canonical_family(w.space()));
            if (m == "exact") {
                out["value"] = pg::hom_density_exact(f, w);
            } else if (m == "mc") {
                const auto est = pg::hom_density_mc(f, w, samples, seed);
                out["estimate"] = est.estimate;
                out["std_error"] = est.std_error;
                out["samples"] = samples;
            } else {
                throw pg::InputError("homdens mode must be exact or mc");
            }
        }
        print_result(out);
    });

    // regularize
    int target_k = 8;
    auto* regularize =
        add_common(app.add_subcommand("regularize", "weak regularity partition"), false);
    regularize->add_option("--target-k", target_k, "class budget");
    regularize->callback([&] {
        const Json j = pg::load_json(in_path);
        const auto w = pg::parse_graphon(j);
        const auto res = pg::weak_regularity_partition(w, target_k, pg::canonical_family(w.space()));
        Json out;
        Json groups = Json::array();
        for (const auto& group : res.partition.groups) {
            Json g = Json::array();
            for (const auto& sb : group) g.push_back(sb.fine_index);
            groups.push_back(std::move(g));
        }
        out["partition"] = std::move(groups);
        out["achieved_error"] = res.achieved_error;
        out["witnesses_exact"] = res.witnesses_exact;
        out["stepped"] = pg::graphon_to_json(res.stepped);
        print_result(out);
    });

    // verify <suite>
    std::string suite;
    int verify_k = 1000;
    std::vector<int> k_list = {16, 64, 256};
    auto* verify = app.add_subcommand("verify", "empirical verification suites");
    verify->add_option("suite", suite, "sampling1|sampling2|graphclose|counting|norms|stepping")
        ->required();
    verify->add_option("--in", in_path, "optional instance JSON");
    verify->add_option("--seed", seed, "PRNG seed");
    verify->add_option("--trials", trials, "trial count");
    verify->add_option("--out", out_path, "CSV output path");
    verify->add_option("--k", verify_k, "sample size (sampling1, graphclose)");
    verify->add_option("--k-list", k_list, "sample sizes (sampling2)");
    verify->callback([&] {
        if (trials < 0) throw pg::InputError("trial count must be nonnegative");
        if (suite == "sampling1") {
            pg::StepGraphon u = pg::sbm2_graphon(0.9, 0.1);
            pg::StepGraphon w = pg::sbm2_graphon(0.7, 0.3);
            if (in_path != "-") {
                const Json j = pg::load_json(in_path);
                pg::WeightSpacePtr space;
                if (j.contains("space")) space = pg::parse_weight_space(j.at("space"));
                u = pg::parse_graphon(j.at("u"), space);
                w = pg::parse_graphon(j.at("w"), space);
            }
            write_report(pg::verify_sampling_lemma_1(u, w, verify_k, trials, seed), out_path);
        } else if (suite == "sampling2") {
            pg::StepGraphon w = pg::sbm2_graphon_sampleable(0.8, 0.2);
            if (in_path != "-") w = pg::parse_graphon(pg::load_json(in_path));
            write_report(pg::verify_sampling_lemma_2(w, k_list, trials, seed), out_path);
        } else if (suite == "graphclose") {
            if (verify_k == 1000) verify_k = 16;
            write_report(
                pg::verify_graph_close(default_graph_close_instance(verify_k, seed), trials, seed),
                out_path);
        } else if (suite == "counting") {
            write_report(pg::verify_counting(trials, seed), out_path);
        } else if (suite == "norms") {
            write_report(pg::verify_norm_inequalities(trials, seed), out_path);
        } else if (suite == "stepping") {
            write_report(pg::verify_stepping(trials, seed), out_path);
        } else {
            throw pg::InputError("unknown verify suite '" + suite + "'");
        }
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const pg::CapabilityError& e) {
        std::cerr << "capability limit: " << e.what() << "\n";
        return 3;
    } catch (const pg::InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
