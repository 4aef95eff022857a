#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "qcent/channel.hpp"

namespace qcent {

/// Subspace of C^N spanned by an orthonormal basis.
class CodeSubspace {
public:
    // Basis must be orthonormal within eps_eig * k.
    CodeSubspace(std::size_t ambient_dim, std::vector<Vector> basis, const ToleranceConfig& tol = {});
    // Normalizes each ket first; they must already be mutually orthogonal.
    static CodeSubspace from_unnormalized(std::size_t ambient_dim, const std::vector<Vector>& kets,
                                          const ToleranceConfig& tol = {});

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    // N x k isometry whose columns are the basis.
    Matrix isometry() const;
    Matrix projector() const;

private:
    std::size_t ambient_dim_;
    std::vector<Vector> basis_;
};

/// Lambda = (lambda_ij) from P E_i^dagger E_j P = lambda_ij P.
struct ErrorCorrectionMatrix {
    Matrix matrix;
    std::vector<double> spectrum;  // ascending, clipped at 0
};

struct KlResult {
    ErrorCorrectionMatrix lambda;
    double max_residual = 0.0;
    double threshold = 0.0;
};

enum class CodeClass : std::uint8_t {
    UnitarilyCorrectable,
    DecoherenceFree,
    NonDegenerate,
    PartiallyDegenerate,
};

std::string_view to_string(CodeClass c);

struct CodeReport {
    ErrorCorrectionMatrix lambda;
    double entropy_bits = 0.0;
    int lambda_rank = 0;
    int choi_rank = 0;
    // Precedence: DecoherenceFree, UnitarilyCorrectable, NonDegenerate, PartiallyDegenerate.
    CodeClass classification = CodeClass::PartiallyDegenerate;
    bool unitarily_correctable = false;
    bool decoherence_free = false;
    bool non_degenerate = false;
    double max_kl_residual = 0.0;
};

/// Recovery channel Psi with Psi(Phi(rho)) = rho for rho supported on the code.
struct RecoveryOperation {
    QuantumChannel channel;
    // Kraus operators that undo a correctable error; a trailing completion
    // projector (if present) is not counted.
    std::size_t correction_count = 0;
    double verification_residual = 0.0;
};

/// Least-squares Knill-Laflamme extraction, lambda_ij = Tr(P E_i^dagger E_j P)/k.
/// Throws NotCorrectable when max_ij ||P E_i^dagger E_j P - lambda_ij P||_F
/// exceeds eps_kl * max_ij ||E_i||_F ||E_j||_F.
KlResult kl_check(const QuantumChannel& c, const CodeSubspace& code, const ToleranceConfig& tol = {});

double code_entropy(const QuantumChannel& c, const CodeSubspace& code, const ToleranceConfig& tol = {});

CodeReport classify_code(const QuantumChannel& c, const CodeSubspace& code, const ToleranceConfig& tol = {});

/// Draws `samples` random states supported on the code (seeded) and checks
/// that the exchange state sigma matches Lambda entrywise within 1e-8.
bool sigma_equals_lambda_check(const QuantumChannel& c, const CodeSubspace& code, int samples,
                               std::uint64_t seed = 0, const ToleranceConfig& tol = {});

RecoveryOperation build_recovery(const QuantumChannel& c, const CodeSubspace& code,
                                 const ToleranceConfig& tol = {});

// max over code matrix units |a><b| of ||Psi(Phi(|a><b|)) - |a><b|||_F.
double recovery_residual(const QuantumChannel& recovery, const QuantumChannel& c, const CodeSubspace& code);

// rank(Lambda) <= Choi rank.
bool rank_bound_check(const QuantumChannel& c, const CodeSubspace& code, const ToleranceConfig& tol = {});

}  // namespace qcent
