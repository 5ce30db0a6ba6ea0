#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "entdj/boolean_function.hpp"
#include "entdj/circuit.hpp"
#include "entdj/errors.hpp"
#include "entdj/histogram.hpp"
#include "entdj/oracles.hpp"
#include "entdj/state_vector.hpp"

namespace entdj {

// Verdicts are only ever read off distributions that are deterministic in
// theory, so anything farther than kDecisionTolerance from {0, 1} indicates
// a simulator defect rather than an unlucky sample.
inline constexpr double kDecisionTolerance = 1e-10;

enum class Equality { Equal, Unequal, NotApplicable };

inline std::string to_string(Equality e) {
    switch (e) {
    case Equality::Equal: return "Equal";
    case Equality::Unequal: return "Unequal";
    case Equality::NotApplicable: return "NotApplicable";
    }
    return "?";
}

struct Verdict {
    PromiseClass promise = PromiseClass::Neither;
    Equality equality = Equality::NotApplicable;

    bool operator==(const Verdict&) const = default;
};

// Tracks how often each oracle was consulted, keyed by function index.
struct QueryLedger {
    std::map<int, int> oracle_calls;
    int total = 0;

    void record(int function_index) {
        ++oracle_calls[function_index];
        ++total;
    }
};

struct AlgorithmResult {
    Verdict verdict;
    QueryLedger ledger;
    Histogram histogram;
};

struct PairResult {
    Verdict verdict;
    QueryLedger ledger;
    Histogram histogram;
    double correlated_probability = 0.0;
};

struct BaselineResult {
    Verdict verdict;
    QueryLedger ledger;
};

namespace detail {

// Maps a probability that must be 0 or 1 in exact arithmetic onto a bool.
inline bool decide_deterministic(double p, const char* what) {
    if (p >= 1.0 - kDecisionTolerance) return true;
    if (p <= kDecisionTolerance) return false;
    throw ConsistencyError(std::string(what) + ": probability " + std::to_string(p) +
                           " is not deterministic");
}

inline double correlated_probability(const Histogram& ancilla_marginal) {
    double corr = 0.0;
    for (const auto& [outcome, p] : ancilla_marginal.entries) {
        bool all_equal = true;
        for (const char c : outcome) {
            if (c != outcome.front()) {
                all_equal = false;
                break;
            }
        }
        if (all_equal) corr += p;
    }
    return corr;
}

} // namespace detail

// Textbook single-function run: n query qubits plus one answer qubit in |->.
// The register reads all zeros exactly when f is constant, so one oracle
// call settles what classically needs 2^(n-1)+1 evaluations.
inline AlgorithmResult run_deutsch_jozsa(const BooleanFunction& f) {
    const PromiseClass cls = classify(f);
    if (cls == PromiseClass::Neither) {
        throw PromiseViolation("run_deutsch_jozsa: function is neither constant nor balanced");
    }
    const int n = f.arity();

    Circuit circuit(n + 1);
    circuit.add(make_x(n));
    for (int q = 0; q <= n; ++q) circuit.add(make_h(q));
    circuit.add(build_uf(f));
    for (int q = 0; q < n; ++q) circuit.add(make_h(q));

    std::vector<int> register_qubits(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) register_qubits[static_cast<std::size_t>(q)] = q;
    circuit.set_measured_qubits(register_qubits);

    AlgorithmResult result;
    result.histogram = circuit.exact_distribution();
    result.ledger.record(0);

    const double p_zeros = result.histogram.value(std::string(static_cast<std::size_t>(n), '0'));
    result.verdict.promise = detail::decide_deterministic(p_zeros, "run_deutsch_jozsa")
                                 ? PromiseClass::Constant
                                 : PromiseClass::Balanced;
    result.verdict.equality = Equality::NotApplicable;

    if (result.verdict.promise != cls) {
        throw ConsistencyError("run_deutsch_jozsa: verdict disagrees with the truth table");
    }
    return result;
}

// Entangled-ancilla run over k one-bit functions sharing a promise class.
// One register qubit drives k controlled oracles whose targets form a
// (|0...0> - |1...1>)/sqrt(2) ancilla block; the register bit announces the
// shared class while the ancillas agree pairwise exactly when all functions
// are identical. k quantum queries replace the k+1 classical lookups.
inline AlgorithmResult run_generalized(const FunctionFamily& family) {
    const int k = static_cast<int>(family.size());

    std::vector<Gate> gates;
    gates.push_back(make_h(0));
    for (int i = 0; i < k; ++i) {
        gates.push_back(build_controlled_uf(family[static_cast<std::size_t>(i)], 0, 1 + i));
    }
    gates.push_back(make_h(0));

    StateVector state = tensor(StateVector(1), init_entangled_ancilla(k));
    AlgorithmResult result;
    for (std::size_t i = 0; i < gates.size(); ++i) {
        state.apply(gates[i]);
    }
    for (int i = 0; i < k; ++i) result.ledger.record(i);

    std::vector<int> all_qubits(static_cast<std::size_t>(k) + 1);
    for (int q = 0; q <= k; ++q) all_qubits[static_cast<std::size_t>(q)] = q;
    result.histogram = measure_probabilities(state, all_qubits);

    const Histogram register_marginal = marginalize(result.histogram, {0});
    result.verdict.promise = detail::decide_deterministic(register_marginal.value("1"),
                                                          "run_generalized")
                                 ? PromiseClass::Balanced
                                 : PromiseClass::Constant;

    if (k == 1) {
        result.verdict.equality = Equality::NotApplicable;
    } else {
        std::vector<int> ancilla_positions(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) ancilla_positions[static_cast<std::size_t>(i)] = 1 + i;
        const double corr =
            detail::correlated_probability(marginalize(result.histogram, ancilla_positions));
        result.verdict.equality = detail::decide_deterministic(corr, "run_generalized equality")
                                      ? Equality::Equal
                                      : Equality::Unequal;
    }

    if (result.verdict.promise != family.promise()) {
        throw ConsistencyError("run_generalized: verdict disagrees with the family's class");
    }
    return result;
}

// p counts inputs where f and g agree, m those where both are zero. For
// balanced pairs agreements split evenly between the two output values
// (2m = p), which is what pins the register to read nonzero below.
struct AgreementCounts {
    int m = 0;
    int p = 0;
};

inline AgreementCounts compute_m_p(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.arity() != g.arity()) {
        throw std::invalid_argument("compute_m_p: arities differ");
    }
    AgreementCounts counts;
    for (std::uint64_t x = 0; x < f.domain_size(); ++x) {
        if (f(x) == g(x)) {
            ++counts.p;
            if (f(x) == 0) ++counts.m;
        }
    }
    return counts;
}

// Two n-bit functions of the same promise class, one register, two entangled
// ancilla qubits. The register reads all zeros exactly for constant pairs;
// the ancillas land on a correlated outcome (00 or 11) with probability
// agree/2^n, so equal functions are certified by a correlated readout while
// unequal balanced pairs are flagged with probability 1 - agree/2^n.
inline PairResult run_two_function_extension(const BooleanFunction& f, const BooleanFunction& g) {
    if (f.arity() != g.arity()) {
        throw std::invalid_argument("run_two_function_extension: arities differ");
    }
    const PromiseClass cls_f = classify(f);
    const PromiseClass cls_g = classify(g);
    if (cls_f == PromiseClass::Neither || cls_g == PromiseClass::Neither) {
        throw PromiseViolation("run_two_function_extension: functions must be constant or balanced");
    }
    if (cls_f != cls_g) {
        throw PromiseViolation("run_two_function_extension: functions must share a promise class");
    }
    const int n = f.arity();

    std::vector<int> register_qubits(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) register_qubits[static_cast<std::size_t>(q)] = q;

    StateVector state = tensor(StateVector(n), init_entangled_ancilla(2));
    for (int q = 0; q < n; ++q) state.apply(make_h(q));
    state.apply(build_uf(f, register_qubits, n));
    state.apply(build_uf(g, register_qubits, n + 1));
    for (int q = 0; q < n; ++q) state.apply(make_h(q));

    PairResult result;
    result.ledger.record(0);
    result.ledger.record(1);

    std::vector<int> all_qubits(static_cast<std::size_t>(n) + 2);
    for (int q = 0; q < n + 2; ++q) all_qubits[static_cast<std::size_t>(q)] = q;
    result.histogram = measure_probabilities(state, all_qubits);

    const Histogram register_marginal = marginalize(result.histogram, register_qubits);
    const double p_zeros = register_marginal.value(std::string(static_cast<std::size_t>(n), '0'));
    result.verdict.promise = detail::decide_deterministic(p_zeros, "run_two_function_extension")
                                 ? PromiseClass::Constant
                                 : PromiseClass::Balanced;

    result.correlated_probability =
        detail::correlated_probability(marginalize(result.histogram, {n, n + 1}));
    result.verdict.equality = result.correlated_probability >= 1.0 - kDecisionTolerance
                                  ? Equality::Equal
                                  : Equality::Unequal;

    if (result.verdict.promise != cls_f) {
        throw ConsistencyError("run_two_function_extension: verdict disagrees with the truth tables");
    }
    return result;
}

// Classical reference: two lookups classify the first function, then one
// lookup per further function settles equality (one-bit functions in a known
// class are determined by their value at 0). Always k + 1 lookups.
inline BaselineResult run_classical_baseline(const FunctionFamily& family) {
    const std::size_t k = family.size();

    BaselineResult result;
    const int f0_at_0 = family[0](0);
    result.ledger.record(0);
    const int f0_at_1 = family[0](1);
    result.ledger.record(0);
    result.verdict.promise =
        f0_at_0 == f0_at_1 ? PromiseClass::Constant : PromiseClass::Balanced;

    if (k == 1) {
        result.verdict.equality = Equality::NotApplicable;
    } else {
        bool all_equal = true;
        for (std::size_t i = 1; i < k; ++i) {
            const int fi_at_0 = family[i](0);
            result.ledger.record(static_cast<int>(i));
            if (fi_at_0 != f0_at_0) all_equal = false;
        }
        result.verdict.equality = all_equal ? Equality::Equal : Equality::Unequal;
    }

    if (result.verdict.promise != family.promise()) {
        throw ConsistencyError("run_classical_baseline: verdict disagrees with the family");
    }
    return result;
}

} // namespace entdj
