#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "entdj/algorithms.hpp"
#include "entdj/analysis.hpp"
#include "entdj/boolean_function.hpp"
#include "entdj/circuit.hpp"
#include "entdj/errors.hpp"
#include "entdj/histogram.hpp"
#include "entdj/noise.hpp"
#include "entdj/rng.hpp"

namespace entdj {

// One of the four demonstration cases: a pair of one-bit functions together
// with the (class, equality) verdict the hardware run is supposed to show.
struct CaseSpec {
    int case_id = 0;
    BooleanFunction f;
    BooleanFunction g;
    PromiseClass expected_class = PromiseClass::Neither;
    Equality expected_equality = Equality::NotApplicable;

    CaseSpec(int id, BooleanFunction f_in, BooleanFunction g_in, PromiseClass cls, Equality eq)
        : case_id(id), f(std::move(f_in)), g(std::move(g_in)), expected_class(cls),
          expected_equality(eq) {
        if (case_id < 1 || case_id > 4) {
            throw std::invalid_argument("CaseSpec: case_id must be in 1..4");
        }
        if (f.arity() != 1 || g.arity() != 1) {
            throw std::invalid_argument("CaseSpec: functions must have arity 1");
        }
        if (classify(f) != expected_class || classify(g) != expected_class) {
            throw std::invalid_argument("CaseSpec: functions do not match the expected class");
        }
        const Equality actual = f == g ? Equality::Equal : Equality::Unequal;
        if (actual != expected_equality) {
            throw std::invalid_argument("CaseSpec: functions do not match the expected equality");
        }
    }

    // The published four cases: balanced/equal, balanced/unequal,
    // constant/equal, constant/unequal.
    static CaseSpec standard(int id) {
        switch (id) {
        case 1:
            return CaseSpec(1, BooleanFunction::from_table_string("01"),
                            BooleanFunction::from_table_string("01"), PromiseClass::Balanced,
                            Equality::Equal);
        case 2:
            return CaseSpec(2, BooleanFunction::from_table_string("01"),
                            BooleanFunction::from_table_string("10"), PromiseClass::Balanced,
                            Equality::Unequal);
        case 3:
            return CaseSpec(3, BooleanFunction::from_table_string("00"),
                            BooleanFunction::from_table_string("00"), PromiseClass::Constant,
                            Equality::Equal);
        case 4:
            return CaseSpec(4, BooleanFunction::from_table_string("00"),
                            BooleanFunction::from_table_string("11"), PromiseClass::Constant,
                            Equality::Unequal);
        default:
            throw std::invalid_argument("CaseSpec::standard: case id must be in 1..4");
        }
    }
};

namespace detail {

// Arity-1 controlled bit oracles decompose into at most CNOT + X; the
// hardware-style circuit uses that form so a constant oracle really costs
// fewer noisy gates than a balanced one.
inline void append_compiled_oracle(Circuit& circuit, const BooleanFunction& f, int control,
                                   int target) {
    if (f(0) != f(1)) {                     // depends on the control bit
        circuit.add(make_cnot(control, target));
    }
    if (f(0) == 1) {                        // f(c) = c (+) 1 or constant-1
        circuit.add(make_x(target));
    }
}

} // namespace detail

// Three-qubit demonstration circuit: qubit 0 register, qubits 1-2 the
// entangled ancilla pair. After the oracles, a CNOT from ancilla-1 onto
// ancilla-2 moves f(c) (+) g(c) into ancilla-2, and H followed by X returns
// ancilla-1 to |0>; the register qubit reads 0 for constant pairs. Final
// outcomes are therefore |promise, 0, equality|.
inline Circuit build_case_circuit(const CaseSpec& spec) {
    Circuit circuit(3);
    circuit.add(make_h(0));
    circuit.add(make_x(1));
    circuit.add(make_h(1));
    circuit.add(make_cnot(1, 2));
    detail::append_compiled_oracle(circuit, spec.f, 0, 1);
    detail::append_compiled_oracle(circuit, spec.g, 0, 2);
    circuit.add(make_cnot(1, 2));
    circuit.add(make_h(1));
    circuit.add(make_x(1));
    circuit.add(make_h(0));
    circuit.set_measured_qubits({0, 1, 2});
    return circuit;
}

// Reads (promise, equality) off a three-bit case outcome: the register bit
// distinguishes constant from balanced, ancilla-2 equal from unequal.
inline Verdict decode_case_outcome(const std::string& outcome) {
    if (outcome.size() != 3 ||
        outcome.find_first_not_of("01") != std::string::npos) {
        throw std::invalid_argument("decode_case_outcome: expected a 3-bit outcome");
    }
    Verdict verdict;
    verdict.promise = outcome[0] == '0' ? PromiseClass::Constant : PromiseClass::Balanced;
    verdict.equality = outcome[2] == '0' ? Equality::Equal : Equality::Unequal;
    return verdict;
}

struct CaseResult {
    int case_id = 0;
    Histogram theory;
    std::vector<Histogram> run_counts;
    RunSummary summary;
    std::vector<double> run_fidelities;
    double mean_fidelity = 0.0;
    double fidelity_of_mean = 0.0;
};

// Repeats the sampled experiment num_runs times with per-run derived seeds
// and reports per-run fidelities to the exact distribution plus the fidelity
// of the averaged distribution.
inline CaseResult run_case(const CaseSpec& spec, const NoiseModel& model, int shots, int num_runs,
                           std::uint64_t seed) {
    if (num_runs < 1) {
        throw std::invalid_argument("run_case: num_runs must be >= 1");
    }
    const Circuit circuit = build_case_circuit(spec);

    CaseResult result;
    result.case_id = spec.case_id;
    result.theory = circuit.exact_distribution();

    for (int r = 0; r < num_runs; ++r) {
        Histogram counts = noisy_sample(circuit, model, shots, stream_seed(seed, static_cast<std::uint64_t>(r)));
        result.run_fidelities.push_back(fidelity(result.theory, counts));
        result.run_counts.push_back(std::move(counts));
    }

    double mean_f = 0.0;
    for (const double f : result.run_fidelities) mean_f += f;
    result.mean_fidelity = mean_f / static_cast<double>(num_runs);

    if (num_runs >= 2) {
        result.summary = aggregate_runs(result.run_counts);
    } else {
        result.summary.num_runs = 1;
        result.summary.shots_per_run = shots;
        for (const auto& [outcome, count] : result.run_counts.front().entries) {
            result.summary.per_outcome_mean[outcome] = count / static_cast<double>(shots);
            result.summary.per_outcome_stddev[outcome] = 0.0;
        }
    }

    Histogram mean_dist;
    mean_dist.entries = result.summary.per_outcome_mean;
    result.fidelity_of_mean = fidelity(result.theory, mean_dist);
    return result;
}

} // namespace entdj
