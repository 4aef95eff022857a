#include "qcent/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "qcent/entropy.hpp"

namespace qcent::catalog {

namespace {

Vector ket(const std::vector<int>& indices, std::size_t dim) {
    Vector v(dim);
    for (int i : indices) v[static_cast<std::size_t>(i)] += 1.0;
    return v;
}

Matrix diagonal_phases(const std::vector<double>& phases) {
    std::vector<Complex> diag;
    for (double ph : phases) diag.push_back(std::polar(1.0, ph));
    return Matrix::diagonal(std::span<const Complex>(diag));
}

double plogp(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

}  // namespace

QuantumChannel bitflip_channel(double p, double q, double r) {
    if (p < 0.0 || q < 0.0 || r < 0.0 || p + q + r > 3.0) {
        throw DomainError("bit-flip channel needs p, q, r >= 0 and p + q + r <= 3");
    }
    return pauli_channel({{(3.0 - p - q - r) / 3.0, "III"}, {p / 3.0, "XII"}, {q / 3.0, "IXI"}, {r / 3.0, "IIX"}});
}

CodeSubspace stabilizer_code() { return CodeSubspace(8, {Vector::basis(8, 0), Vector::basis(8, 7)}); }

double stabilizer_entropy(double p, double q, double r) {
    return plogp((3.0 - p - q - r) / 3.0) + plogp(p / 3.0) + plogp(q / 3.0) + plogp(r / 3.0);
}

NamedInstance table1_instances() {
    const double third = 1.0 / 3.0;
    NamedInstance inst{
        "table1",
        "qubit codes under the noise model {I, X1, X2}/sqrt(3) on three qubits",
        pauli_channel({{third, "III"}, {third, "XII"}, {third, "IXI"}}),
        {},
        {},
        std::nullopt,
        0.0,
        2,
    };
    // Basis index = 4 a + 2 b + c for |abc>.
    inst.codes.emplace_back("code1", CodeSubspace::from_unnormalized(8, {ket({0}, 8), ket({7}, 8)}));
    inst.codes.emplace_back("code2", CodeSubspace::from_unnormalized(8, {ket({0, 4}, 8), ket({3, 7}, 8)}));
    inst.codes.emplace_back("code3",
                            CodeSubspace::from_unnormalized(8, {ket({0, 4, 2, 6}, 8), ket({3, 7, 1, 5}, 8)}));
    const double log3 = std::log2(3.0);
    inst.expected = {
        {"code1", "entropy_bits", log3, 1e-9, "reported value log 3 (non-degenerate code)"},
        {"code2", "entropy_bits", log3 - 2.0 / 3.0, 1e-9, "reported value log 3 - 2/3 (partially degenerate)"},
        {"code3", "entropy_bits", 0.0, 1e-9, "reported value 0 (decoherence-free subspace)"},
    };
    return inst;
}

NamedInstance stabilizer_instance(double p, double q, double r) {
    NamedInstance inst{
        "stabilizer",
        "three-qubit bit-flip channel with the {Z1Z2, Z2Z3} stabilizer code",
        bitflip_channel(p, q, r),
        {{"stabilizer", stabilizer_code()}},
        {},
        std::nullopt,
        0.0,
        2,
    };
    inst.expected = {
        {"stabilizer", "entropy_bits", stabilizer_entropy(p, q, r), 1e-9,
         "closed form -sum x log x over diag((3-p-q-r)/3, p/3, q/3, r/3); log 4 = 2 at p=q=r=3/4"},
        {"channel", "choi_rank", 4.0, 0.0, "reported Choi rank 4 at p=q=r=3/4"},
    };
    return inst;
}

Matrix example33_unitary() {
    const double q = std::numbers::pi / 4.0;
    return diagonal_phases({q, 3.0 * q, 5.0 * q, 7.0 * q});
}

Matrix qutrit_unitary() {
    std::vector<double> phases;
    for (int j = 0; j < 9; ++j) phases.push_back(2.0 * std::numbers::pi * j / 9.0);
    return diagonal_phases(phases);
}

Matrix pauli_zz_unitary() { return pauli_word("ZZ"); }

Complex qutrit_chord_vertex() {
    auto z = [](int j) { return std::polar(1.0, 2.0 * std::numbers::pi * (j - 1) / 9.0); };
    // Solve a + s (b - a) = c + t (d - c) for s.
    const Complex a = z(1);
    const Complex b = z(7);
    const Complex c = z(6);
    const Complex d = z(9);
    const Complex u = b - a;
    const Complex v = d - c;
    const Complex w = c - a;
    const double det = -u.real() * v.imag() + u.imag() * v.real();
    const double s = (-w.real() * v.imag() + w.imag() * v.real()) / det;
    return a + s * u;
}

std::vector<NamedInstance> example_unitaries() {
    std::vector<NamedInstance> out;

    {
        const Matrix u = example33_unitary();
        const double s = 1.0 / std::numbers::sqrt2;
        // Eigenvectors are the computational basis in phase order; pair antipodal eigenvalues.
        CodeSubspace code(4, {s * (Vector::basis(4, 0) + Vector::basis(4, 2)),
                              s * (Vector::basis(4, 1) + Vector::basis(4, 3))});
        NamedInstance inst{
            "example33",
            "two-qubit binary unitary channel, phases pi/4 3pi/4 5pi/4 7pi/4, p = 0.01, k = 2",
            binary_unitary_channel(0.01, u),
            {{"antipodal_pairs", std::move(code)}},
            {},
            u,
            0.01,
            2,
        };
        inst.expected = {
            {"channel", "omega_max_modulus", 0.0, 1e-9, "reported rank-2 numerical range {0}"},
            {"antipodal_pairs", "entropy_bits", 0.081, 5e-4, "reported code entropy 0.081 at p = 0.01"},
        };
        out.push_back(std::move(inst));
    }

    {
        const Matrix u = qutrit_unitary();
        const Complex vertex = qutrit_chord_vertex();
        auto grouping = grouping_code(u, 3, vertex);
        NamedInstance inst{
            "qutrit",
            "two-qutrit binary unitary channel, nine evenly spaced phases from 0, p = 0.01, k = 3",
            binary_unitary_channel(0.01, u),
            {{"min_entropy_grouping", std::move(grouping.code)}},
            {},
            u,
            0.01,
            3,
        };
        inst.expected = {
            {"channel", "min_entropy_vertex_offset", 0.0, 1e-3,
             "reported max-modulus compression value 0.092 - 0.524i", Complex{0.092, -0.524}},
            {"channel", "min_entropy_lambda_minus", 0.007, 5e-4, "reported Lambda spectrum {0.007, 0.993}"},
            {"channel", "min_entropy_bits", 0.060, 5e-4, "reported minimal qutrit code entropy 0.060"},
            {"channel", "max_entropy_bits", 0.081, 5e-4, "reported maximal entropy 0.081 at lambda = 0"},
        };
        out.push_back(std::move(inst));
    }

    {
        const Matrix u = pauli_zz_unitary();
        auto grouping = grouping_code(u, 2, Complex{1.0, 0.0});
        NamedInstance inst{
            "pauli_zz",
            "binary unitary channel with U = Z (x) Z at p = 1/2, k = 2",
            binary_unitary_channel(0.5, u),
            {{"plus_eigenspace", std::move(grouping.code)}},
            {},
            u,
            0.5,
            2,
        };
        inst.expected = {
            {"channel", "omega_max_modulus", 1.0, 1e-9, "closed form: segment [-1, 1]"},
            {"plus_eigenspace", "entropy_bits", 0.0, 1e-9, "reported: |lambda| = 1 gives zero entropy even at p = 1/2"},
        };
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<NamedInstance> all_instances() {
    std::vector<NamedInstance> out;
    out.push_back(table1_instances());
    out.push_back(stabilizer_instance());
    for (auto& inst : example_unitaries()) out.push_back(std::move(inst));
    return out;
}

std::vector<std::string> instance_names() { return {"table1", "stabilizer", "example33", "qutrit", "pauli_zz"}; }

NamedInstance get(const std::string& name) {
    if (name == "table1") return table1_instances();
    if (name == "stabilizer") return stabilizer_instance();
    for (auto& inst : example_unitaries()) {
        if (inst.name == name) return std::move(inst);
    }
    throw DomainError("unknown catalog instance '" + name + "'");
}

std::vector<CheckRow> evaluate(const NamedInstance& instance, const ToleranceConfig& tol) {
    std::optional<NumRangeRegion> region;
    std::optional<ExtremalLambdas> extremes;
    auto geometry = [&]() -> const ExtremalLambdas& {
        if (!extremes) {
            if (!instance.unitary) throw DomainError(instance.name + " has no unitary");
            region = numerical_range(*instance.unitary, instance.code_rank, tol);
            extremes = extremal_lambda(*region, tol);
        }
        return *extremes;
    };
    auto code_named = [&](const std::string& label) -> const CodeSubspace& {
        for (const auto& [name, code] : instance.codes) {
            if (name == label) return code;
        }
        throw DomainError("instance " + instance.name + " has no code '" + label + "'");
    };

    std::vector<CheckRow> rows;
    for (const auto& e : instance.expected) {
        double computed = 0.0;
        if (e.quantity == "entropy_bits") {
            computed = code_entropy(instance.channel, code_named(e.label), tol);
        } else if (e.quantity == "choi_rank") {
            computed = choi_gram(instance.channel, tol).choi_rank;
        } else if (e.quantity == "omega_max_modulus") {
            geometry();
            for (auto v : region->vertices) computed = std::max(computed, std::abs(v));
        } else if (e.quantity == "min_entropy_vertex_offset") {
            computed = std::numeric_limits<double>::infinity();
            for (auto v : geometry().min_entropy_lambdas) computed = std::min(computed, std::abs(v - e.reference));
        } else if (e.quantity == "min_entropy_lambda_minus") {
            computed = lambda_spectrum(instance.p, geometry().min_entropy_lambdas.front(), tol).second;
        } else if (e.quantity == "min_entropy_bits") {
            computed = biunitary_code_entropy(instance.p, geometry().min_entropy_lambdas.front(), tol);
        } else if (e.quantity == "max_entropy_bits") {
            computed = biunitary_code_entropy(instance.p, *geometry().max_entropy_lambda, tol);
        } else {
            throw DomainError("unknown catalog quantity '" + e.quantity + "'");
        }
        const double delta = std::abs(computed - e.value);
        rows.push_back({e.label, e.quantity, e.value, computed, delta, e.tolerance, delta <= e.tolerance,
                        e.provenance});
    }
    return rows;
}

}  // namespace qcent::catalog
