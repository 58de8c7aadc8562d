// random.hpp — seeded generators for unitaries, pure states, and densities.

#pragma once

#include "chancomp/linalg.hpp"

#include <cstdint>
#include <random>

namespace chancomp {

using Rng = std::mt19937_64;

Matrix random_complex_matrix(int rows, int cols, Rng& rng);

// Gaussian vector on the complex unit sphere.
Vector random_pure_state(int d, Rng& rng);

// Orthonormalized seeded random complex matrix (QR with positive diagonal).
Matrix random_unitary(int d, Rng& rng);

// GG†/Tr normalization of a Gaussian matrix; full rank almost surely.
Matrix random_density(int d, Rng& rng);

}  // namespace chancomp
