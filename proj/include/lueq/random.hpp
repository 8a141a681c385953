#pragma once

#include <cstdint>
#include <random>

#include "lueq/complex_matrix.hpp"

namespace lueq {

// Standard normal samples from a seeded mt19937_64, via Box-Muller on
// uniforms built directly from the raw 64-bit words. Avoids
// std::normal_distribution, whose output is not pinned by the standard.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : gen_(seed) {}

  double next();

 private:
  double uniform01();

  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Derives an independent stream seed from a master seed and an index.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Haar-distributed unitary: complex Ginibre matrix, then Gram-Schmidt with
// the R diagonal kept real positive so the factorization is unique.
ComplexMatrix haar_unitary(std::size_t dim, std::uint64_t seed);

}  // namespace lueq
