#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "entdj/boolean_function.hpp"

namespace entdj {

enum class GateKind { H, X, Z, CNOT, CZ, PermutationOracle, ControlledBitOracle };

inline const char* to_string(GateKind kind) {
    switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CZ: return "CZ";
    case GateKind::PermutationOracle: return "PermutationOracle";
    default: return "ControlledBitOracle";
    }
}

// One circuit operation over named qubit indices.
//
// PermutationOracle over targets [x_0 .. x_{n-1}, y] maps |x>|y> to
// |x>|y ^ f(x)>, where x_0 is the most significant input bit.
// ControlledBitOracle over [c, a] maps |c>|a> to |c>|a ^ f(c)>.
struct Gate {
    GateKind kind;
    std::vector<int> targets;
    std::shared_ptr<const BooleanFunction> function; // oracle kinds only

    int num_targets() const { return static_cast<int>(targets.size()); }
    bool is_oracle() const {
        return kind == GateKind::PermutationOracle || kind == GateKind::ControlledBitOracle;
    }
};

inline Gate make_h(int target) { return Gate{GateKind::H, {target}, nullptr}; }
inline Gate make_x(int target) { return Gate{GateKind::X, {target}, nullptr}; }
inline Gate make_z(int target) { return Gate{GateKind::Z, {target}, nullptr}; }
inline Gate make_cnot(int control, int target) {
    return Gate{GateKind::CNOT, {control, target}, nullptr};
}
inline Gate make_cz(int a, int b) { return Gate{GateKind::CZ, {a, b}, nullptr}; }

// Structural checks shared by StateVector::apply and Circuit::add. Throws
// std::invalid_argument on a malformed gate.
inline void validate_gate(const Gate& gate, int num_qubits) {
    const auto fail = [&](const std::string& what) {
        throw std::invalid_argument(std::string(to_string(gate.kind)) + " gate: " + what);
    };
    if (gate.targets.empty()) {
        fail("no targets");
    }
    for (int t : gate.targets) {
        if (t < 0 || t >= num_qubits) {
            fail("target " + std::to_string(t) + " out of range for " +
                 std::to_string(num_qubits) + " qubits");
        }
    }
    for (std::size_t i = 0; i < gate.targets.size(); ++i) {
        for (std::size_t j = i + 1; j < gate.targets.size(); ++j) {
            if (gate.targets[i] == gate.targets[j]) {
                fail("duplicate target " + std::to_string(gate.targets[i]));
            }
        }
    }
    switch (gate.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Z:
        if (gate.num_targets() != 1) fail("expects exactly one target");
        break;
    case GateKind::CNOT:
    case GateKind::CZ:
        if (gate.num_targets() != 2) fail("expects exactly two targets");
        break;
    case GateKind::PermutationOracle:
        if (!gate.function) fail("missing truth table");
        if (gate.num_targets() < 2) fail("expects input qubits plus one output qubit");
        if (gate.function->arity() != gate.num_targets() - 1) {
            fail("truth-table arity does not match the input qubit count");
        }
        break;
    case GateKind::ControlledBitOracle:
        if (!gate.function) fail("missing truth table");
        if (gate.num_targets() != 2) fail("expects a control and a target");
        if (gate.function->arity() != 1) fail("truth table must have arity 1");
        break;
    }
}

} // namespace entdj
