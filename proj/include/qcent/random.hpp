#pragma once

#include <cstdint>
#include <random>

#include "qcent/channel.hpp"

namespace qcent {

using Rng = std::mt19937_64;

// Haar-distributed unitary (Gram-Schmidt on a complex Ginibre matrix).
Matrix random_unitary(std::size_t n, Rng& rng);

// Random state W W^dagger / Tr, W an n x rank Ginibre matrix. rank 0 means full rank.
Matrix random_density_matrix(std::size_t n, Rng& rng, std::size_t rank = 0);

// Kraus operators are the N x N blocks of a random N*M x N isometry.
QuantumChannel random_channel(std::size_t n, std::size_t m, Rng& rng);

// Diagonal unitary with independent uniform phases.
Matrix random_diagonal_unitary(std::size_t n, Rng& rng);

}  // namespace qcent
