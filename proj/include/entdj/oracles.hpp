#pragma once

#include <memory>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "entdj/boolean_function.hpp"
#include "entdj/gate.hpp"

namespace entdj {

// Standard bit oracle U_f |x>|y> = |x>|y ^ f(x)> acting on qubits
// [input_qubits..., output_qubit].
inline Gate build_uf(const BooleanFunction& f, std::vector<int> input_qubits, int output_qubit) {
    if (static_cast<int>(input_qubits.size()) != f.arity()) {
        throw std::invalid_argument("build_uf: input qubit count must equal function arity");
    }
    Gate gate;
    gate.kind = GateKind::PermutationOracle;
    gate.targets = std::move(input_qubits);
    gate.targets.push_back(output_qubit);
    gate.function = std::make_shared<BooleanFunction>(f);
    return gate;
}

// Convenience layout with inputs on qubits 0..arity-1 and output on arity.
inline Gate build_uf(const BooleanFunction& f) {
    std::vector<int> inputs(static_cast<std::size_t>(f.arity()));
    std::iota(inputs.begin(), inputs.end(), 0);
    return build_uf(f, std::move(inputs), f.arity());
}

// Single-control oracle |c>|a> = |c>|a ^ f(c)> used by the entangled-ancilla
// algorithms; requires a one-bit function.
inline Gate build_controlled_uf(const BooleanFunction& f, int control, int target) {
    if (f.arity() != 1) {
        throw std::invalid_argument("build_controlled_uf: function arity must be 1");
    }
    Gate gate;
    gate.kind = GateKind::ControlledBitOracle;
    gate.targets = {control, target};
    gate.function = std::make_shared<BooleanFunction>(f);
    return gate;
}

} // namespace entdj
