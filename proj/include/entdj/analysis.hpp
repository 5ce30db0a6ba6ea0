#pragma once

#include <cmath>
#include <cstdint>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "entdj/histogram.hpp"

namespace entdj {

// Bhattacharyya coefficient sum sqrt(p_i q_i); 1 for identical
// distributions, 0 for disjoint supports. Inputs must each sum to 1.
inline double fidelity(const Histogram& p_th, const Histogram& p_ex) {
    const Histogram p = p_th.to_probabilities();
    const Histogram q = p_ex.to_probabilities();
    if (std::abs(p.sum() - 1.0) > 1e-6 || std::abs(q.sum() - 1.0) > 1e-6) {
        throw std::invalid_argument("fidelity: inputs must be normalized distributions");
    }
    double f = 0.0;
    for (const auto& [outcome, pv] : p.entries) {
        const double qv = q.value(outcome);
        if (pv > 0.0 && qv > 0.0) f += std::sqrt(pv * qv);
    }
    return f;
}

struct RunSummary {
    std::map<std::string, double> per_outcome_mean;
    std::map<std::string, double> per_outcome_stddev;
    int num_runs = 0;
    int shots_per_run = 0;
};

// Per-outcome mean frequency and sample standard deviation (n-1 divisor)
// across repeated sampled runs of the same circuit.
inline RunSummary aggregate_runs(const std::vector<Histogram>& runs) {
    if (runs.size() < 2) {
        throw std::invalid_argument("aggregate_runs: need at least 2 runs");
    }
    const std::uint64_t shots = runs.front().total_shots;
    if (shots == 0) {
        throw std::invalid_argument("aggregate_runs: runs must be sampled histograms");
    }
    for (const Histogram& run : runs) {
        if (run.total_shots != shots) {
            throw std::invalid_argument("aggregate_runs: runs must share a shot count");
        }
    }

    std::set<std::string> outcomes;
    for (const Histogram& run : runs) {
        for (const auto& [outcome, count] : run.entries) outcomes.insert(outcome);
    }

    RunSummary summary;
    summary.num_runs = static_cast<int>(runs.size());
    summary.shots_per_run = static_cast<int>(shots);
    const double n = static_cast<double>(runs.size());
    for (const std::string& outcome : outcomes) {
        double mean = 0.0;
        for (const Histogram& run : runs) {
            mean += run.value(outcome) / static_cast<double>(shots);
        }
        mean /= n;
        double var = 0.0;
        for (const Histogram& run : runs) {
            const double d = run.value(outcome) / static_cast<double>(shots) - mean;
            var += d * d;
        }
        var /= (n - 1.0);
        summary.per_outcome_mean[outcome] = mean;
        summary.per_outcome_stddev[outcome] = std::sqrt(var);
    }
    return summary;
}

// Bar-chart table over the full outcome space: one row per bitstring of the
// measured register in lexicographic order, zeros filled in for outcomes
// neither side observed.
inline std::string export_chart_data(const RunSummary& summary, const Histogram& theory) {
    std::size_t width = 0;
    if (!theory.entries.empty()) {
        width = theory.entries.begin()->first.size();
    } else if (!summary.per_outcome_mean.empty()) {
        width = summary.per_outcome_mean.begin()->first.size();
    } else {
        throw std::invalid_argument("export_chart_data: no outcomes to export");
    }
    for (const auto& [outcome, v] : theory.entries) {
        if (outcome.size() != width) {
            throw std::invalid_argument("export_chart_data: outcome widths differ");
        }
    }
    for (const auto& [outcome, v] : summary.per_outcome_mean) {
        if (outcome.size() != width) {
            throw std::invalid_argument("export_chart_data: outcome widths differ");
        }
    }

    const Histogram th = theory.to_probabilities();
    std::ostringstream out;
    out << "outcome,theory,exp_mean,exp_std\n";
    out << std::fixed << std::setprecision(6);
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << width); ++i) {
        std::string outcome(width, '0');
        for (std::size_t j = 0; j < width; ++j) {
            if (i & (std::uint64_t{1} << (width - 1 - j))) outcome[j] = '1';
        }
        const auto mean_it = summary.per_outcome_mean.find(outcome);
        const auto std_it = summary.per_outcome_stddev.find(outcome);
        out << outcome << ',' << th.value(outcome) << ','
            << (mean_it == summary.per_outcome_mean.end() ? 0.0 : mean_it->second) << ','
            << (std_it == summary.per_outcome_stddev.end() ? 0.0 : std_it->second) << '\n';
    }
    return out.str();
}

} // namespace entdj
