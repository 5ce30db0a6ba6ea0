#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "entdj/gate.hpp"
#include "entdj/histogram.hpp"

namespace entdj {

using Amplitude = std::complex<double>;

// Outcomes with accumulated probability below this floor are dropped from
// measurement histograms. Double-precision cancellation noise sits around
// 1e-30 at the register sizes supported here, while genuine outcome
// probabilities are at least 2^-24.
inline constexpr double kProbabilityFloor = 1e-15;

// Dense state vector over 2^num_qubits basis states. Qubit 0 is the most
// significant bit of the basis index, so a ket label |q0 q1 q2> reads left
// to right. Gates are applied by index bit manipulation; no 2^n x 2^n
// matrices are materialized.
class StateVector {
  public:
    static constexpr int kMaxQubits = 24;

    explicit StateVector(int num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1 || num_qubits > kMaxQubits) {
            throw std::invalid_argument("StateVector: num_qubits must be in [1, 24]");
        }
        amps_.assign(std::uint64_t{1} << num_qubits, Amplitude{0.0, 0.0});
        amps_[0] = Amplitude{1.0, 0.0};
    }

    StateVector(int num_qubits, std::vector<Amplitude> amplitudes)
        : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
        if (num_qubits < 1 || num_qubits > kMaxQubits) {
            throw std::invalid_argument("StateVector: num_qubits must be in [1, 24]");
        }
        if (amps_.size() != (std::uint64_t{1} << num_qubits)) {
            throw std::invalid_argument("StateVector: amplitude count must be 2^num_qubits");
        }
    }

    int num_qubits() const { return num_qubits_; }
    std::uint64_t size() const { return amps_.size(); }
    const Amplitude& amplitude(std::uint64_t index) const { return amps_[index]; }
    std::span<const Amplitude> amplitudes() const { return amps_; }

    std::uint64_t qubit_mask(int qubit) const {
        return std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    }

    StateVector& apply(const Gate& gate) {
        validate_gate(gate, num_qubits_);
        switch (gate.kind) {
        case GateKind::H:
            apply_hadamard(gate.targets[0]);
            break;
        case GateKind::X:
            apply_x(gate.targets[0]);
            break;
        case GateKind::Z:
            apply_z(gate.targets[0]);
            break;
        case GateKind::CNOT:
            apply_cnot(gate.targets[0], gate.targets[1]);
            break;
        case GateKind::CZ:
            apply_cz(gate.targets[0], gate.targets[1]);
            break;
        case GateKind::PermutationOracle:
            apply_bit_oracle(*gate.function,
                             {gate.targets.data(), gate.targets.size() - 1},
                             gate.targets.back());
            break;
        case GateKind::ControlledBitOracle:
            apply_bit_oracle(*gate.function, {gate.targets.data(), 1}, gate.targets[1]);
            break;
        }
        return *this;
    }

    double norm() const {
        double s = 0.0;
        for (const Amplitude& a : amps_) {
            s += std::norm(a);
        }
        return std::sqrt(s);
    }

    Amplitude inner_product(const StateVector& other) const {
        if (other.num_qubits_ != num_qubits_) {
            throw std::invalid_argument("inner_product: qubit counts differ");
        }
        Amplitude s{0.0, 0.0};
        for (std::uint64_t i = 0; i < size(); ++i) {
            s += std::conj(amps_[i]) * other.amps_[i];
        }
        return s;
    }

    // |<this|other>|; equals 1 for states that match up to global phase.
    double overlap(const StateVector& other) const { return std::abs(inner_product(other)); }

  private:
    void apply_hadamard(int target) {
        static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
        const std::uint64_t m = qubit_mask(target);
        for (std::uint64_t i = 0; i < size(); ++i) {
            if (i & m) continue;
            const Amplitude a = amps_[i];
            const Amplitude b = amps_[i | m];
            amps_[i] = inv_sqrt2 * (a + b);
            amps_[i | m] = inv_sqrt2 * (a - b);
        }
    }

    void apply_x(int target) {
        const std::uint64_t m = qubit_mask(target);
        for (std::uint64_t i = 0; i < size(); ++i) {
            if (i & m) continue;
            std::swap(amps_[i], amps_[i | m]);
        }
    }

    void apply_z(int target) {
        const std::uint64_t m = qubit_mask(target);
        for (std::uint64_t i = 0; i < size(); ++i) {
            if (i & m) amps_[i] = -amps_[i];
        }
    }

    void apply_cnot(int control, int target) {
        const std::uint64_t c = qubit_mask(control);
        const std::uint64_t t = qubit_mask(target);
        for (std::uint64_t i = 0; i < size(); ++i) {
            if ((i & c) && !(i & t)) {
                std::swap(amps_[i], amps_[i | t]);
            }
        }
    }

    void apply_cz(int a, int b) {
        const std::uint64_t ma = qubit_mask(a);
        const std::uint64_t mb = qubit_mask(b);
        for (std::uint64_t i = 0; i < size(); ++i) {
            if ((i & ma) && (i & mb)) amps_[i] = -amps_[i];
        }
    }

    // |x>|y> -> |x>|y ^ f(x)>: pairs (i, i | out) with f(x(i)) = 1 swap.
    void apply_bit_oracle(const BooleanFunction& f, std::span<const int> inputs, int output) {
        const std::uint64_t out = qubit_mask(output);
        for (std::uint64_t i = 0; i < size(); ++i) {
            if (i & out) continue;
            std::uint64_t x = 0;
            for (const int q : inputs) {
                x = (x << 1) | ((i & qubit_mask(q)) ? 1u : 0u);
            }
            if (f(x)) {
                std::swap(amps_[i], amps_[i | out]);
            }
        }
    }

    int num_qubits_;
    std::vector<Amplitude> amps_;

    friend StateVector init_basis_state(int, std::string_view);
    friend StateVector init_entangled_ancilla(int);
    friend StateVector tensor(const StateVector&, const StateVector&);
};

// Computational basis state for a bitstring, e.g. init_basis_state(2, "10") = |10>.
inline StateVector init_basis_state(int num_qubits, std::string_view bits) {
    if (static_cast<int>(bits.size()) != num_qubits) {
        throw std::invalid_argument("init_basis_state: bitstring length must equal num_qubits");
    }
    StateVector state(num_qubits);
    std::uint64_t index = 0;
    for (const char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("init_basis_state: bitstring may contain only 0 and 1");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c - '0');
    }
    state.amps_[0] = Amplitude{0.0, 0.0};
    state.amps_[index] = Amplitude{1.0, 0.0};
    return state;
}

// (|0...0> - |1...1>)/sqrt(2) over num_qubits qubits.
inline StateVector init_entangled_ancilla(int num_qubits) {
    StateVector state(num_qubits);
    static const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    state.amps_[0] = Amplitude{inv_sqrt2, 0.0};
    state.amps_[state.size() - 1] = Amplitude{-inv_sqrt2, 0.0};
    return state;
}

// a (x) b with a's qubits first, i.e. more significant.
inline StateVector tensor(const StateVector& a, const StateVector& b) {
    if (a.num_qubits() + b.num_qubits() > StateVector::kMaxQubits) {
        throw std::invalid_argument("tensor: combined qubit count exceeds 24");
    }
    StateVector out(a.num_qubits() + b.num_qubits());
    for (std::uint64_t ia = 0; ia < a.size(); ++ia) {
        for (std::uint64_t ib = 0; ib < b.size(); ++ib) {
            out.amps_[(ia << b.num_qubits()) | ib] = a.amplitude(ia) * b.amplitude(ib);
        }
    }
    return out;
}

// Marginal distribution over the listed qubits, in the listed order, by
// summing |amplitude|^2 over the unlisted ones. Exact (total_shots = 0).
inline Histogram measure_probabilities(const StateVector& state, const std::vector<int>& qubits) {
    if (qubits.empty()) {
        throw std::invalid_argument("measure_probabilities: qubit list must not be empty");
    }
    std::vector<std::uint64_t> masks;
    masks.reserve(qubits.size());
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        const int q = qubits[i];
        if (q < 0 || q >= state.num_qubits()) {
            throw std::invalid_argument("measure_probabilities: qubit index out of range");
        }
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[j] == q) {
                throw std::invalid_argument("measure_probabilities: duplicate qubit index");
            }
        }
        masks.push_back(state.qubit_mask(q));
    }

    Histogram hist;
    std::string key(qubits.size(), '0');
    for (std::uint64_t i = 0; i < state.size(); ++i) {
        const double p = std::norm(state.amplitude(i));
        if (p == 0.0) continue;
        for (std::size_t j = 0; j < masks.size(); ++j) {
            key[j] = (i & masks[j]) ? '1' : '0';
        }
        hist.entries[key] += p;
    }
    std::erase_if(hist.entries, [](const auto& kv) { return kv.second < kProbabilityFloor; });
    return hist;
}

} // namespace entdj
