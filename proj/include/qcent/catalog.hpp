#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcent/binary_unitary.hpp"
#include "qcent/channel.hpp"
#include "qcent/code.hpp"

namespace qcent::catalog {

struct Expectation {
    std::string label;     // code label or "channel"
    std::string quantity;  // e.g. "entropy_bits"
    double value = 0.0;
    double tolerance = 0.0;
    std::string provenance;
    // Target point for quantities measured as a distance.
    Complex reference{0.0, 0.0};
};

struct NamedInstance {
    std::string name;
    std::string description;
    QuantumChannel channel;
    std::vector<std::pair<std::string, CodeSubspace>> codes;
    std::vector<Expectation> expected;
    // Set for binary unitary instances.
    std::optional<Matrix> unitary;
    double p = 0.0;
    std::size_t code_rank = 0;
};

struct CheckRow {
    std::string label;
    std::string quantity;
    double expected = 0.0;
    double computed = 0.0;
    double abs_delta = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string provenance;
};

/// Recomputes every expectation of an instance through the main pipeline.
std::vector<CheckRow> evaluate(const NamedInstance& instance, const ToleranceConfig& tol = {});

// Kraus weights sqrt((3-p-q-r)/3), sqrt(p/3), sqrt(q/3), sqrt(r/3) on {1, X1, X2, X3}.
QuantumChannel bitflip_channel(double p, double q, double r);

// span{|000>, |111>}.
CodeSubspace stabilizer_code();

// Closed-form entropy of the stabilizer code under bitflip_channel(p, q, r).
double stabilizer_entropy(double p, double q, double r);

NamedInstance table1_instances();
NamedInstance stabilizer_instance(double p = 0.75, double q = 0.75, double r = 0.75);

// Two-qubit unitary with phases pi/4, 3pi/4, 5pi/4, 7pi/4.
Matrix example33_unitary();
// Two-qutrit unitary with nine evenly spaced phases starting at 0.
Matrix qutrit_unitary();
Matrix pauli_zz_unitary();

// Intersection of the chord z1-z7 and z6-z9 of the qutrit spectrum (1-based, CCW).
Complex qutrit_chord_vertex();

std::vector<NamedInstance> example_unitaries();

// All instances, in a fixed order.
std::vector<NamedInstance> all_instances();
std::vector<std::string> instance_names();
// Throws DomainError for an unknown name.
NamedInstance get(const std::string& name);

}  // namespace qcent::catalog
