#include "lueq/random.hpp"

#include <cmath>

#include "lueq/eig.hpp"
#include "lueq/errors.hpp"

namespace lueq {

double GaussianStream::uniform01() {
  // 53 significant bits, strictly inside (0, 1) so log() below is safe.
  return (static_cast<double>(gen_() >> 11) + 0.5) * 0x1p-53;
}

double GaussianStream::next() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * M_PI * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over master + golden-ratio increments.
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

ComplexMatrix haar_unitary(std::size_t dim, std::uint64_t seed) {
  if (dim < 1) fail(errc::dimension_mismatch, "unitary dimension must be at least 1");
  GaussianStream g(seed);
  ComplexMatrix m(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const double re = g.next();
      const double im = g.next();
      m(r, c) = cplx(re, im);
    }
  orthonormalize_columns(m);
  return m;
}

}  // namespace lueq
