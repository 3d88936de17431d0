#include "lossymz/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lossymz {

namespace {

std::string fmt12(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace

std::vector<long long> log_spaced(long long lo, long long hi, int count) {
    if (lo < 1 || hi < lo || count < 1)
        throw std::domain_error("log_spaced: need 1 <= lo <= hi and count >= 1");
    std::vector<long long> out;
    const double la = std::log(static_cast<double>(lo));
    const double lb = std::log(static_cast<double>(hi));
    for (int i = 0; i < count; ++i) {
        const double t = count == 1 ? 0.0 : static_cast<double>(i) / (count - 1);
        const long long v = std::llround(std::exp(la + t * (lb - la)));
        if (out.empty() || v != out.back()) out.push_back(v);
    }
    return out;
}

std::vector<StrategyResult> run_sweep(const SweepConfig& config) {
    if (config.etas.empty() || config.n_values.empty() || config.strategies.empty())
        throw std::domain_error("run_sweep: etas, n_values and strategies must be non-empty");
    for (double eta : config.etas)
        if (!(eta > 0.0 && eta <= 1.0))
            throw std::domain_error("run_sweep: transmissions must lie in (0,1]");

    ProbeOptions probe_opts;
    probe_opts.seed ^= config.seed;

    std::vector<StrategyResult> rows;
    for (const Strategy strat : config.strategies) {
        for (const double eta : config.etas) {
            for (const long long n : config.n_values) {
                switch (strat) {
                    case Strategy::classical:
                        rows.push_back(classical_precision(n, eta));
                        break;
                    case Strategy::noon:
                        rows.push_back(noon_precision(static_cast<int>(n), eta));
                        break;
                    case Strategy::optimal:
                        rows.push_back(optimize_probe(static_cast<int>(n), eta, probe_opts));
                        break;
                    case Strategy::multipass:
                        rows.push_back(best_multipass(n, eta));
                        break;
                }
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const StrategyResult& a, const StrategyResult& b) {
        const std::string an = strategy_name(a.strategy), bn = strategy_name(b.strategy);
        if (an != bn) return an < bn;
        if (a.transmission != b.transmission) return a.transmission < b.transmission;
        return a.resource_n < b.resource_n;
    });
    return rows;
}

std::string sweep_to_csv(const std::vector<StrategyResult>& rows, bool detected_counts) {
    std::string out = "strategy,eta,N,fisher,delta_phi\n";
    for (const StrategyResult& r : rows) {
        double n_axis = static_cast<double>(r.resource_n);
        if (detected_counts && r.strategy == Strategy::classical)
            n_axis *= std::sqrt(r.transmission);
        out += strategy_name(r.strategy);
        out += ',';
        out += fmt12(r.transmission);
        out += ',';
        out += fmt12(n_axis);
        out += ',';
        out += fmt12(r.fisher);
        out += ',';
        out += fmt12(r.delta_phi);
        out += '\n';
    }
    return out;
}

std::string sweep_to_json(const std::vector<StrategyResult>& rows, const SweepConfig& config) {
    nlohmann::json meta;
    meta["version"] = kVersion;
    nlohmann::json cfg;
    cfg["etas"] = config.etas;
    cfg["n_values"] = config.n_values;
    std::vector<std::string> strat_names;
    for (Strategy s : config.strategies) strat_names.push_back(strategy_name(s));
    cfg["strategies"] = strat_names;
    cfg["format"] = config.format == OutputFormat::csv ? "csv" : "json";
    cfg["detected_counts_axis"] = config.detected_counts_axis;
    cfg["seed"] = config.seed;
    meta["config"] = cfg;

    nlohmann::json jrows = nlohmann::json::array();
    for (const StrategyResult& r : rows) {
        nlohmann::json row;
        row["strategy"] = strategy_name(r.strategy);
        row["eta"] = r.transmission;
        row["N"] = r.resource_n;
        row["fisher"] = r.fisher;
        row["delta_phi"] = r.delta_phi;
        if (!r.probe_weights.empty()) row["weights"] = r.probe_weights;
        if (r.passes > 0) row["passes"] = r.passes;
        if (!r.converged) row["converged"] = false;
        jrows.push_back(std::move(row));
    }

    nlohmann::json doc;
    doc["meta"] = std::move(meta);
    doc["rows"] = std::move(jrows);
    return doc.dump(2) + "\n";
}

std::string gnuplot_script(const SweepConfig& config, const std::string& csv_path) {
    std::string s;
    s += "set datafile separator ','\n";
    s += "set logscale xy\n";
    s += "set xlabel 'N'\n";
    s += "set ylabel 'phase uncertainty'\n";
    s += "set key outside\n";
    s += "plot ";
    bool first = true;
    for (const Strategy strat : config.strategies) {
        for (const double eta : config.etas) {
            if (!first) s += ", \\\n     ";
            first = false;
            const std::string name = strategy_name(strat);
            s += "'" + csv_path + "' using 3:(strcol(1) eq '" + name +
                 "' && $2 == " + fmt12(eta) + " ? $5 : 1/0) with linespoints title '" + name +
                 " eta=" + fmt12(eta) + "'";
        }
    }
    s += "\n";
    return s;
}

PoincarePatch poincare_patch(long long total_photons, double squeezing_db, double angle) {
    if (total_photons < 1)
        throw std::domain_error("poincare_patch: N must be >= 1");
    if (squeezing_db < 0.0)
        throw std::domain_error("poincare_patch: squeezing must be non-negative");
    const double n = static_cast<double>(total_photons);
    const double radius = 0.5 * std::sqrt(n);
    const double scale = std::pow(10.0, squeezing_db / 20.0);
    PoincarePatch p;
    p.center_length = 0.5 * n;
    p.center_x = p.center_length * std::cos(angle);
    p.center_y = p.center_length * std::sin(angle);
    p.axis_minor = radius / scale;
    p.axis_major = radius * scale;
    p.orientation = angle;  // minor axis along the phase direction
    return p;
}

}  // namespace lossymz
