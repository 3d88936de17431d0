// Command-line front end: precision sweeps, fringe tables, optimization
// reports, Monte Carlo estimation runs, and Poincare patch descriptors.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "lossymz/estimation.hpp"
#include "lossymz/sweep.hpp"

using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIo = 2;
constexpr int kExitNonConvergence = 3;

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

// Returns kExitOk or kExitIo.
int write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output path: " << path << "\n";
        return kExitIo;
    }
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "error: write failed: " << path << "\n";
        return kExitIo;
    }
    return kExitOk;
}

struct GlobalOpts {
    std::string out_path;
    std::string format = "csv";
    std::uint64_t seed = 0;
    std::string config_path;
};

json result_row(const lossymz::StrategyResult& r) {
    json row;
    row["strategy"] = lossymz::strategy_name(r.strategy);
    row["eta"] = r.transmission;
    row["N"] = r.resource_n;
    row["fisher"] = r.fisher;
    row["delta_phi"] = r.delta_phi;
    if (!r.probe_weights.empty()) row["weights"] = r.probe_weights;
    if (r.passes > 0) row["passes"] = r.passes;
    row["converged"] = r.converged;
    return row;
}

std::string single_result_output(const lossymz::StrategyResult& r, const GlobalOpts& g) {
    if (g.format == "json") {
        json doc;
        doc["meta"] = {{"version", lossymz::kVersion}};
        doc["rows"] = json::array({result_row(r)});
        return doc.dump(2) + "\n";
    }
    return lossymz::sweep_to_csv({r});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Phase-estimation precision in a lossy Mach-Zehnder interferometer"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--out", g.out_path, "Output path (default: stdout)");
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--seed", g.seed, "RNG seed");
    app.add_option("--config", g.config_path, "JSON config file (flags win on conflict)");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Precision-vs-resource sweep");
    std::vector<double> etas{1.0, 0.9, 0.8, 0.6};
    std::vector<long long> n_values;
    long long n_min = 1, n_max = 100;
    int n_count = 25;
    std::vector<std::string> strategy_names{"classical", "noon", "optimal", "multipass"};
    bool detected_counts = false;
    std::string plot_script_path;
    sweep->add_option("--etas", etas, "Transmissions in (0,1]");
    sweep->add_option("--n-values", n_values, "Explicit resource values");
    sweep->add_option("--n-min", n_min, "Log-spaced resource range: minimum");
    sweep->add_option("--n-max", n_max, "Log-spaced resource range: maximum");
    sweep->add_option("--n-count", n_count, "Log-spaced resource range: point count");
    sweep->add_option("--strategies", strategy_names,
                      "Subset of classical, noon, optimal, multipass");
    sweep->add_flag("--detected-counts", detected_counts,
                    "Label classical rows with detected mean counts");
    sweep->add_option("--plot-script", plot_script_path,
                      "Also emit a gnuplot script referencing the CSV");

    // fringe
    auto* fringe = app.add_subcommand("fringe", "Mean-photocount fringe table");
    double fr_counts = 100.0, fr_visibility = 1.0;
    int fr_samples = 64;
    fringe->add_option("--counts", fr_counts, "Total mean photocounts N");
    fringe->add_option("--visibility", fr_visibility, "Fringe visibility in [0,1]");
    fringe->add_option("--samples", fr_samples, "Phase samples over [0, 2pi]");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Monte Carlo MLE vs the Cramer-Rao bound");
    double sim_eta = 1.0, sim_photons = 100.0;
    long sim_reps = 10000, sim_batches = 200;
    simulate->add_option("--eta", sim_eta, "Arm transmission");
    simulate->add_option("--input-photons", sim_photons, "Mean input photons per shot");
    simulate->add_option("--repetitions", sim_reps, "Count pairs pooled per estimate");
    simulate->add_option("--batches", sim_batches, "Independent estimates");

    // optimize-state
    auto* optimize = app.add_subcommand("optimize-state", "Optimal N-photon probe");
    int opt_photons = 2;
    double opt_eta = 1.0;
    optimize->add_option("--photons", opt_photons, "Photon number N")->required();
    optimize->add_option("--eta", opt_eta, "Arm transmission");

    // noon
    auto* noon = app.add_subcommand("noon", "N00N probe precision");
    int noon_photons = 2;
    double noon_eta = 1.0;
    noon->add_option("--photons", noon_photons, "Photon number N")->required();
    noon->add_option("--eta", noon_eta, "Arm transmission");

    // multipass
    auto* multipass = app.add_subcommand("multipass", "Best single-photon multipass strategy");
    long long mp_resource = 10;
    double mp_eta = 1.0;
    bool mp_integer = false;
    multipass->add_option("--resource", mp_resource, "Photon-pass budget N")->required();
    multipass->add_option("--eta", mp_eta, "Arm transmission");
    multipass->add_flag("--integer-photons", mp_integer, "Whole photons only");

    // poincare
    auto* poincare = app.add_subcommand("poincare", "Poincare uncertainty-patch descriptor");
    long long pc_photons = 4;
    double pc_db = 0.0, pc_angle = 0.0;
    poincare->add_option("--photons", pc_photons, "Photon number N")->required();
    poincare->add_option("--squeezing-db", pc_db, "Squeezing in dB (>= 0)");
    poincare->add_option("--angle", pc_angle, "Equatorial angle, radians");

    // global flags (--out, --format, --seed, --config) may also appear after
    // the subcommand name
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    // JSON config file: load as defaults before parsing so flags override.
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::string(argv[i]) == "--config") {
            std::ifstream cfg(argv[i + 1]);
            if (!cfg) {
                std::cerr << "error: cannot read config file: " << argv[i + 1] << "\n";
                return kExitIo;
            }
            json j;
            try {
                cfg >> j;
            } catch (const json::exception& e) {
                std::cerr << "error: bad config file: " << e.what() << "\n";
                return kExitUsage;
            }
            if (j.contains("etas")) etas = j["etas"].get<std::vector<double>>();
            if (j.contains("n_values")) n_values = j["n_values"].get<std::vector<long long>>();
            if (j.contains("strategies"))
                strategy_names = j["strategies"].get<std::vector<std::string>>();
            if (j.contains("detected_counts_axis"))
                detected_counts = j["detected_counts_axis"].get<bool>();
            if (j.contains("format")) g.format = j["format"].get<std::string>();
            if (j.contains("seed")) g.seed = j["seed"].get<std::uint64_t>();
            if (j.contains("out")) g.out_path = j["out"].get<std::string>();
            break;
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (sweep->parsed()) {
            lossymz::SweepConfig cfg;
            cfg.etas = etas;
            cfg.n_values = n_values.empty() ? lossymz::log_spaced(n_min, n_max, n_count)
                                            : n_values;
            cfg.strategies.clear();
            for (const std::string& name : strategy_names)
                cfg.strategies.push_back(lossymz::strategy_from_name(name));
            cfg.detected_counts_axis = detected_counts;
            cfg.format = g.format == "json" ? lossymz::OutputFormat::json
                                            : lossymz::OutputFormat::csv;
            cfg.output_path = g.out_path;
            cfg.seed = g.seed;

            const std::vector<lossymz::StrategyResult> rows = lossymz::run_sweep(cfg);
            const std::string content =
                cfg.format == lossymz::OutputFormat::json
                    ? lossymz::sweep_to_json(rows, cfg)
                    : lossymz::sweep_to_csv(rows, cfg.detected_counts_axis);
            const int rc = write_output(g.out_path, content);
            if (rc != kExitOk) return rc;
            if (!plot_script_path.empty()) {
                const std::string csv_ref = g.out_path.empty() ? "sweep.csv" : g.out_path;
                const int rc2 =
                    write_output(plot_script_path, lossymz::gnuplot_script(cfg, csv_ref));
                if (rc2 != kExitOk) return rc2;
            }
            for (const lossymz::StrategyResult& r : rows)
                if (!r.converged) return kExitNonConvergence;
            return kExitOk;
        }

        if (fringe->parsed()) {
            if (fr_samples < 2) {
                std::cerr << "error: need at least two samples\n";
                return kExitUsage;
            }
            const lossymz::FringeModel model(fr_counts, fr_visibility);
            std::string content;
            json jrows = json::array();
            if (g.format == "csv") content = "phi,n1_mean,n2_mean\n";
            for (int i = 0; i < fr_samples; ++i) {
                const double phi =
                    2.0 * std::numbers::pi * static_cast<double>(i) / (fr_samples - 1);
                if (g.format == "csv") {
                    content += fmt12(phi) + "," + fmt12(model.mean_n1(phi)) + "," +
                               fmt12(model.mean_n2(phi)) + "\n";
                } else {
                    jrows.push_back({{"phi", phi},
                                     {"n1_mean", model.mean_n1(phi)},
                                     {"n2_mean", model.mean_n2(phi)}});
                }
            }
            if (g.format == "json") {
                json doc;
                doc["meta"] = {{"version", lossymz::kVersion},
                               {"config", {{"counts", fr_counts},
                                           {"visibility", fr_visibility},
                                           {"samples", fr_samples}}}};
                doc["rows"] = std::move(jrows);
                content = doc.dump(2) + "\n";
            }
            return write_output(g.out_path, content);
        }

        if (simulate->parsed()) {
            const lossymz::ClassicalOptimum opt =
                lossymz::optimize_classical(sim_eta, sim_photons);
            lossymz::SimulationConfig cfg;
            cfg.model = lossymz::fringe_from_setting(
                {sim_photons, opt.tau_star, sim_eta, opt.phi_star});
            cfg.true_phase = opt.phi_star;
            cfg.pairs_per_estimate = sim_reps;
            cfg.repetitions = sim_batches;
            cfg.seed = g.seed;
            const lossymz::SimulationRun run = lossymz::run_simulation(cfg);
            const lossymz::SimulationReport rep = lossymz::summarize(run);

            json doc;
            doc["meta"] = {{"version", lossymz::kVersion},
                           {"config", {{"eta", sim_eta},
                                       {"input_photons", sim_photons},
                                       {"repetitions", sim_reps},
                                       {"batches", sim_batches},
                                       {"seed", cfg.seed},
                                       {"true_phase", cfg.true_phase}}}};
            doc["empirical_std"] = rep.empirical_std;
            doc["empirical_mean"] = rep.empirical_mean;
            doc["crb"] = rep.crb;
            doc["ratio"] = rep.ratio;
            doc["undefined_estimates"] = run.undefined_estimates;
            return write_output(g.out_path, doc.dump(2) + "\n");
        }

        if (optimize->parsed()) {
            lossymz::ProbeOptions opts;
            opts.seed ^= g.seed;
            const lossymz::StrategyResult r =
                lossymz::optimize_probe(opt_photons, opt_eta, opts);
            const int rc = write_output(g.out_path, single_result_output(r, g));
            if (rc != kExitOk) return rc;
            return r.converged ? kExitOk : kExitNonConvergence;
        }

        if (noon->parsed()) {
            const lossymz::StrategyResult r = lossymz::noon_precision(noon_photons, noon_eta);
            return write_output(g.out_path, single_result_output(r, g));
        }

        if (multipass->parsed()) {
            const lossymz::StrategyResult r =
                lossymz::best_multipass(mp_resource, mp_eta, mp_integer);
            return write_output(g.out_path, single_result_output(r, g));
        }

        if (poincare->parsed()) {
            const lossymz::PoincarePatch p =
                lossymz::poincare_patch(pc_photons, pc_db, pc_angle);
            json doc;
            doc["meta"] = {{"version", lossymz::kVersion},
                           {"config", {{"photons", pc_photons},
                                       {"squeezing_db", pc_db},
                                       {"angle", pc_angle}}}};
            doc["center"] = {p.center_x, p.center_y};
            doc["center_length"] = p.center_length;
            doc["axis_minor"] = p.axis_minor;
            doc["axis_major"] = p.axis_major;
            doc["orientation"] = p.orientation;
            return write_output(g.out_path, doc.dump(2) + "\n");
        }
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
