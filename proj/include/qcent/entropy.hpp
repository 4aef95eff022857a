#pragma once

#include <span>

#include "qcent/channel.hpp"

namespace qcent {

// -sum x log2 x over the spectrum; entries in [-eps_rank, 0) count as 0.
double spectrum_entropy(std::span<const double> spectrum, const ToleranceConfig& tol = {});

/// Von Neumann entropy in bits.
double von_neumann_entropy(const DensityMatrix& rho, const ToleranceConfig& tol = {});
// Same, for any Hermitian PSD matrix of unit trace (Lambda, sigma, omega).
double von_neumann_entropy(const Matrix& state, const ToleranceConfig& tol = {});

/// Environment state sigma_ij = Tr rho E_i^dagger E_j.
struct ExchangeState {
    Matrix matrix;
    double entropy_bits = 0.0;
};

ExchangeState entropy_exchange(const QuantumChannel& c, const DensityMatrix& rho,
                               const ToleranceConfig& tol = {});

/// Entropy exchange through a purification: rho = sum p_r |v_r><v_r| is
/// purified onto a reference of dimension rank(rho), the channel acts on the
/// system half and the entropy of the joint output is returned.
double purification_exchange_entropy(const QuantumChannel& c, const DensityMatrix& rho,
                                     const ToleranceConfig& tol = {});

/// Joint system-environment state after the Stinespring dilation,
/// omega = sum_ij E_i rho E_j^dagger (x) |i><j|, laid out as an M x M grid of
/// N x N blocks (block (i, j) = E_i rho E_j^dagger).
struct CompositeState {
    Matrix matrix;
    std::size_t system_dim = 0;
    std::size_t index_dim = 0;

    // Trace over the system: (i, j) entry Tr E_i rho E_j^dagger, i.e. sigma^T.
    Matrix trace_system() const;
    // Trace over the environment index: Phi(rho).
    Matrix trace_index() const;
};

CompositeState lindblad_omega(const QuantumChannel& c, const DensityMatrix& rho,
                              const ToleranceConfig& tol = {});

struct LindbladReport {
    double s_rho = 0.0;
    double s_rho_prime = 0.0;
    double s_sigma = 0.0;
    bool holds = false;
};

// |S(rho') - S(sigma)| <= S(rho) <= S(sigma) + S(rho'), with 1e-8 slack.
LindbladReport check_lindblad_bounds(const QuantumChannel& c, const DensityMatrix& rho,
                                     const ToleranceConfig& tol = {});

}  // namespace qcent
