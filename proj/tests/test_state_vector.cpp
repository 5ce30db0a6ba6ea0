#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "test_support.hpp"

using namespace entdj;
using support::bits_of;
using support::random_state;

namespace {
const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("basis states put a unit amplitude where the label says", "[state_vector]") {
    const StateVector s1 = init_basis_state(1, "0");
    REQUIRE(s1.amplitude(0) == Amplitude{1.0, 0.0});
    REQUIRE(s1.amplitude(1) == Amplitude{0.0, 0.0});

    // qubit 0 is the most significant index bit: |10> lands on index 2
    const StateVector s2 = init_basis_state(2, "10");
    REQUIRE(s2.amplitude(2) == Amplitude{1.0, 0.0});
    REQUIRE(std::abs(s2.norm() - 1.0) < 1e-12);

    const StateVector s3 = init_basis_state(3, "011");
    int nonzero = 0;
    for (std::uint64_t i = 0; i < s3.size(); ++i) {
        if (std::abs(s3.amplitude(i)) > 0.0) ++nonzero;
    }
    REQUIRE(nonzero == 1);
    REQUIRE(std::abs(s3.amplitude(3).real() - 1.0) < 1e-12);
}

TEST_CASE("basis state construction rejects bad labels", "[state_vector]") {
    REQUIRE_THROWS_AS(init_basis_state(2, "1"), std::invalid_argument);
    REQUIRE_THROWS_AS(init_basis_state(2, "102"), std::invalid_argument);
    REQUIRE_THROWS_AS(init_basis_state(2, "1x"), std::invalid_argument);
}

TEST_CASE("state vector bounds", "[state_vector]") {
    REQUIRE_THROWS_AS(StateVector(0), std::invalid_argument);
    REQUIRE_THROWS_AS(StateVector(25), std::invalid_argument);
    REQUIRE_THROWS_AS(StateVector(2, std::vector<Amplitude>(3)), std::invalid_argument);
    REQUIRE(StateVector(1).size() == 2);
}

TEST_CASE("entangled ancilla holds two opposite-sign amplitudes", "[state_vector]") {
    const StateVector a1 = init_entangled_ancilla(1);
    REQUIRE(std::abs(a1.amplitude(0).real() - inv_sqrt2) < 1e-12);
    REQUIRE(std::abs(a1.amplitude(1).real() + inv_sqrt2) < 1e-12);

    const StateVector a2 = init_entangled_ancilla(2);
    REQUIRE(std::abs(a2.amplitude(0).real() - inv_sqrt2) < 1e-12);
    REQUIRE(std::abs(a2.amplitude(1)) == 0.0);
    REQUIRE(std::abs(a2.amplitude(2)) == 0.0);
    REQUIRE(std::abs(a2.amplitude(3).real() + inv_sqrt2) < 1e-12);

    const StateVector a3 = init_entangled_ancilla(3);
    int nonzero = 0;
    for (std::uint64_t i = 0; i < a3.size(); ++i) {
        if (std::abs(a3.amplitude(i)) > 0.0) ++nonzero;
    }
    REQUIRE(nonzero == 2);
    REQUIRE(std::abs(a3.norm() - 1.0) < 1e-12);
}

TEST_CASE("hadamard on |0> gives the uniform pair", "[state_vector]") {
    StateVector s(1);
    s.apply(make_h(0));
    REQUIRE(std::abs(s.amplitude(0).real() - inv_sqrt2) < 1e-12);
    REQUIRE(std::abs(s.amplitude(1).real() - inv_sqrt2) < 1e-12);
}

TEST_CASE("cnot entangles a superposed control", "[state_vector]") {
    StateVector s(2);
    s.apply(make_h(0));
    s.apply(make_cnot(0, 1));
    REQUIRE(std::abs(s.amplitude(0).real() - inv_sqrt2) < 1e-12);
    REQUIRE(std::abs(s.amplitude(3).real() - inv_sqrt2) < 1e-12);
    REQUIRE(std::abs(s.amplitude(1)) == 0.0);
    REQUIRE(std::abs(s.amplitude(2)) == 0.0);
}

TEST_CASE("involutions return random states unchanged", "[state_vector]") {
    std::mt19937_64 gen(271828);
    for (int trial = 0; trial < 20; ++trial) {
        const StateVector original = random_state(3, gen);

        StateVector s = original;
        s.apply(make_h(1)).apply(make_h(1));
        REQUIRE(support::max_amplitude_diff(s, original) < 1e-10);

        s = original;
        s.apply(make_x(2)).apply(make_x(2));
        REQUIRE(support::max_amplitude_diff(s, original) < 1e-10);

        s = original;
        s.apply(make_z(0)).apply(make_z(0));
        REQUIRE(support::max_amplitude_diff(s, original) < 1e-10);

        s = original;
        s.apply(make_cnot(0, 2)).apply(make_cnot(0, 2));
        REQUIRE(support::max_amplitude_diff(s, original) < 1e-10);

        s = original;
        s.apply(make_cz(1, 2)).apply(make_cz(1, 2));
        REQUIRE(support::max_amplitude_diff(s, original) < 1e-10);
    }
}

TEST_CASE("every built-in gate is unitary as a dense matrix", "[state_vector]") {
    REQUIRE(support::unitarity_defect(support::dense_matrix(make_h(0), 2)) < 1e-10);
    REQUIRE(support::unitarity_defect(support::dense_matrix(make_x(1), 2)) < 1e-10);
    REQUIRE(support::unitarity_defect(support::dense_matrix(make_z(0), 2)) < 1e-10);
    REQUIRE(support::unitarity_defect(support::dense_matrix(make_cnot(0, 1), 2)) < 1e-10);
    REQUIRE(support::unitarity_defect(support::dense_matrix(make_cz(0, 1), 2)) < 1e-10);

    const BooleanFunction f = BooleanFunction::from_table_string("0110");
    REQUIRE(support::unitarity_defect(support::dense_matrix(build_uf(f), 3)) < 1e-10);
    const BooleanFunction g = BooleanFunction::from_table_string("01");
    REQUIRE(support::unitarity_defect(
                support::dense_matrix(build_controlled_uf(g, 0, 1), 2)) < 1e-10);
}

TEST_CASE("norm survives long random gate sequences", "[state_vector]") {
    std::mt19937_64 gen(8675309);
    for (int trial = 0; trial < 50; ++trial) {
        const int nq = 2 + static_cast<int>(gen() % 4);
        StateVector s(nq);
        for (int g = 0; g < 30; ++g) {
            const int q = static_cast<int>(gen() % static_cast<std::uint64_t>(nq));
            int q2 = static_cast<int>(gen() % static_cast<std::uint64_t>(nq));
            if (q2 == q) q2 = (q2 + 1) % nq;
            switch (gen() % 5) {
            case 0: s.apply(make_h(q)); break;
            case 1: s.apply(make_x(q)); break;
            case 2: s.apply(make_z(q)); break;
            case 3: s.apply(make_cnot(q, q2)); break;
            default: s.apply(make_cz(q, q2)); break;
            }
            REQUIRE(std::abs(s.norm() - 1.0) < 1e-10);
        }
    }
}

TEST_CASE("gate validation rejects malformed targets", "[state_vector]") {
    StateVector s(2);
    REQUIRE_THROWS_AS(s.apply(make_h(2)), std::invalid_argument);
    REQUIRE_THROWS_AS(s.apply(make_h(-1)), std::invalid_argument);
    REQUIRE_THROWS_AS(s.apply(make_cnot(0, 0)), std::invalid_argument);
    Gate no_table{GateKind::PermutationOracle, {0, 1}, nullptr};
    REQUIRE_THROWS_AS(s.apply(no_table), std::invalid_argument);
}

TEST_CASE("tensor places the left factor on the high bits", "[state_vector]") {
    const StateVector left = init_basis_state(1, "1");
    const StateVector right = init_basis_state(2, "01");
    const StateVector joint = tensor(left, right);
    REQUIRE(joint.num_qubits() == 3);
    REQUIRE(std::abs(joint.amplitude(0b101).real() - 1.0) < 1e-12);

    const StateVector plus = [] {
        StateVector s(1);
        s.apply(make_h(0));
        return s;
    }();
    const StateVector combined = tensor(plus, init_entangled_ancilla(2));
    REQUIRE(std::abs(combined.amplitude(0b000).real() - 0.5) < 1e-12);
    REQUIRE(std::abs(combined.amplitude(0b011).real() + 0.5) < 1e-12);
    REQUIRE(std::abs(combined.amplitude(0b100).real() - 0.5) < 1e-12);
    REQUIRE(std::abs(combined.amplitude(0b111).real() + 0.5) < 1e-12);
}

TEST_CASE("overlap ignores global phase", "[state_vector]") {
    StateVector t = init_basis_state(1, "1");
    t.apply(make_z(0)); // -|1>, a pure global phase
    REQUIRE(std::abs(t.amplitude(1).real() + 1.0) < 1e-12);
    REQUIRE(std::abs(t.overlap(init_basis_state(1, "1")) - 1.0) < 1e-10);

    std::mt19937_64 gen(11);
    const StateVector s = random_state(3, gen);
    REQUIRE(std::abs(s.overlap(s) - 1.0) < 1e-10);
    REQUIRE_THROWS_AS(s.inner_product(StateVector(2)), std::invalid_argument);
}

TEST_CASE("measurement marginals match direct summation", "[state_vector]") {
    const StateVector ten = init_basis_state(2, "10");
    const Histogram full = measure_probabilities(ten, {0, 1});
    REQUIRE(full.entries.size() == 1);
    REQUIRE(std::abs(full.value("10") - 1.0) < 1e-12);

    StateVector bell(2);
    bell.apply(make_h(0)).apply(make_cnot(0, 1));
    const Histogram first = measure_probabilities(bell, {0});
    REQUIRE(std::abs(first.value("0") - 0.5) < 1e-12);
    REQUIRE(std::abs(first.value("1") - 0.5) < 1e-12);

    // summing the joint distribution over dropped bits reproduces the marginal
    std::mt19937_64 gen(99);
    const StateVector random = random_state(4, gen);
    const Histogram joint = measure_probabilities(random, {0, 1, 2, 3});
    const Histogram direct = measure_probabilities(random, {1, 3});
    const Histogram via_joint = marginalize(joint, {1, 3});
    for (const auto& [outcome, p] : direct.entries) {
        REQUIRE(std::abs(p - via_joint.value(outcome)) < 1e-12);
    }

    REQUIRE_THROWS_AS(measure_probabilities(bell, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(measure_probabilities(bell, {0, 0}), std::invalid_argument);
    REQUIRE_THROWS_AS(measure_probabilities(bell, {2}), std::invalid_argument);
}

TEST_CASE("measured qubit order controls the outcome string order", "[state_vector]") {
    const StateVector s = init_basis_state(3, "011");
    const Histogram swapped = measure_probabilities(s, {2, 0});
    REQUIRE(std::abs(swapped.value("10") - 1.0) < 1e-12);
}
