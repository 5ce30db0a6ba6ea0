#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "entdj/rng.hpp"

namespace entdj {

// Outcome distribution over measured-qubit bitstrings. total_shots == 0
// marks an exact distribution whose entries are probabilities; otherwise
// entries are counts summing to total_shots.
struct Histogram {
    std::map<std::string, double> entries;
    std::uint64_t total_shots = 0;

    bool is_exact() const { return total_shots == 0; }

    double value(std::string_view outcome) const {
        const auto it = entries.find(std::string(outcome));
        return it == entries.end() ? 0.0 : it->second;
    }

    // Probability of an outcome; counts are converted to frequencies.
    double probability(std::string_view outcome) const {
        const double v = value(outcome);
        return is_exact() ? v : v / static_cast<double>(total_shots);
    }

    double sum() const {
        double s = 0.0;
        for (const auto& [outcome, v] : entries) {
            s += v;
        }
        return s;
    }

    Histogram to_probabilities() const {
        if (is_exact()) {
            return *this;
        }
        Histogram out;
        for (const auto& [outcome, count] : entries) {
            out.entries[outcome] = count / static_cast<double>(total_shots);
        }
        return out;
    }

    bool operator==(const Histogram& other) const = default;
};

// Sums entries down to the listed character positions of the outcome keys,
// preserving their order.
inline Histogram marginalize(const Histogram& hist, const std::vector<int>& positions) {
    if (positions.empty()) {
        throw std::invalid_argument("marginalize: position list must not be empty");
    }
    Histogram out;
    out.total_shots = hist.total_shots;
    for (const auto& [outcome, v] : hist.entries) {
        std::string key(positions.size(), '0');
        for (std::size_t j = 0; j < positions.size(); ++j) {
            const int p = positions[j];
            if (p < 0 || static_cast<std::size_t>(p) >= outcome.size()) {
                throw std::invalid_argument("marginalize: position out of range");
            }
            key[j] = outcome[static_cast<std::size_t>(p)];
        }
        out.entries[key] += v;
    }
    return out;
}

// Multinomial sample of `shots` draws from an exact distribution.
// Reproducible: a given (hist, shots, seed) always yields the same counts.
inline Histogram sample_shots(const Histogram& hist, int shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("sample_shots: shots must be >= 1");
    }
    if (!hist.is_exact()) {
        throw std::invalid_argument("sample_shots: input must be a probability distribution");
    }
    if (std::abs(hist.sum() - 1.0) > 1e-6) {
        throw std::invalid_argument("sample_shots: probabilities must sum to 1");
    }
    std::vector<const std::string*> outcomes;
    std::vector<double> cumulative;
    outcomes.reserve(hist.entries.size());
    cumulative.reserve(hist.entries.size());
    double acc = 0.0;
    for (const auto& [outcome, p] : hist.entries) {
        if (p < 0.0) {
            throw std::invalid_argument("sample_shots: negative probability");
        }
        acc += p;
        outcomes.push_back(&outcome);
        cumulative.push_back(acc);
    }
    if (outcomes.empty()) {
        throw std::invalid_argument("sample_shots: empty distribution");
    }

    Histogram out;
    out.total_shots = static_cast<std::uint64_t>(shots);
    std::mt19937_64 gen(seed);
    for (int s = 0; s < shots; ++s) {
        const double u = uniform_unit(gen) * acc;
        std::size_t lo = 0;
        std::size_t hi = cumulative.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cumulative[mid] > u) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        out.entries[*outcomes[lo]] += 1.0;
    }
    return out;
}

} // namespace entdj
