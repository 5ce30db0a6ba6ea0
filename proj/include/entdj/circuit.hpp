#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "entdj/gate.hpp"
#include "entdj/histogram.hpp"
#include "entdj/state_vector.hpp"

namespace entdj {

// Ordered gate list over a fixed register, with a designated set of measured
// qubits. Gates are validated on insertion so a Circuit is always runnable.
class Circuit {
  public:
    explicit Circuit(int num_qubits) : num_qubits_(num_qubits) {
        if (num_qubits < 1 || num_qubits > StateVector::kMaxQubits) {
            throw std::invalid_argument("Circuit: num_qubits must be in [1, 24]");
        }
    }

    int num_qubits() const { return num_qubits_; }
    const std::vector<Gate>& gates() const { return gates_; }
    const std::vector<int>& measured_qubits() const { return measured_; }

    Circuit& add(Gate gate) {
        validate_gate(gate, num_qubits_);
        gates_.push_back(std::move(gate));
        return *this;
    }

    Circuit& set_measured_qubits(std::vector<int> qubits) {
        for (std::size_t i = 0; i < qubits.size(); ++i) {
            if (qubits[i] < 0 || qubits[i] >= num_qubits_) {
                throw std::invalid_argument("set_measured_qubits: qubit index out of range");
            }
            for (std::size_t j = i + 1; j < qubits.size(); ++j) {
                if (qubits[j] == qubits[i]) {
                    throw std::invalid_argument("set_measured_qubits: duplicate qubit index");
                }
            }
        }
        measured_ = std::move(qubits);
        return *this;
    }

    StateVector simulate() const {
        StateVector state(num_qubits_);
        for (const Gate& gate : gates_) {
            state.apply(gate);
        }
        return state;
    }

    // Exact outcome distribution over the measured qubits.
    Histogram exact_distribution() const {
        if (measured_.empty()) {
            throw std::logic_error("exact_distribution: no measured qubits set");
        }
        const StateVector state = simulate();
        return measure_probabilities(state, measured_);
    }

  private:
    int num_qubits_;
    std::vector<Gate> gates_;
    std::vector<int> measured_;
};

} // namespace entdj
