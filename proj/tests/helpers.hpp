#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "lueq/complex_matrix.hpp"
#include "lueq/errors.hpp"
#include "lueq/state.hpp"

namespace testutil {

inline lueq::PureState ghz() {
  const double r = 1.0 / std::sqrt(2.0);
  lueq::ComplexVector amp(8, 0.0);
  amp[0] = r;
  amp[7] = r;
  return lueq::PureState({2, 2, 2}, amp);
}

inline lueq::PureState w_state() {
  const double r = 1.0 / std::sqrt(3.0);
  lueq::ComplexVector amp(8, 0.0);
  amp[1] = r;
  amp[2] = r;
  amp[4] = r;
  return lueq::PureState({2, 2, 2}, amp);
}

inline lueq::PureState basis_state(std::vector<std::size_t> dims, std::size_t index) {
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  lueq::ComplexVector amp(total, 0.0);
  amp[index] = 1.0;
  return lueq::PureState(std::move(dims), std::move(amp));
}

inline lueq::ComplexMatrix pauli_x() {
  lueq::ComplexMatrix x(2, 2);
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  return x;
}

inline lueq::ComplexMatrix hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  lueq::ComplexMatrix h(2, 2);
  h(0, 0) = r;
  h(0, 1) = r;
  h(1, 0) = r;
  h(1, 1) = -r;
  return h;
}

// Hermitian with N(0,1) entries, deterministic in the seed.
inline lueq::ComplexMatrix random_hermitian(std::size_t dim, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  lueq::ComplexMatrix h(dim, dim);
  for (std::size_t r = 0; r < dim; ++r) {
    h(r, r) = normal(gen);
    for (std::size_t c = r + 1; c < dim; ++c) {
      const double re = normal(gen);
      const double im = normal(gen);
      h(r, c) = lueq::cplx(re, im);
      h(c, r) = lueq::cplx(re, -im);
    }
  }
  return h;
}

inline double max_abs_diff(const lueq::ComplexMatrix& a, const lueq::ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

// Runs f and reports which error code it threw, if any.
template <typename F>
inline bool throws_code(F&& f, lueq::errc expected) {
  try {
    f();
  } catch (const lueq::Error& e) {
    return e.code() == expected;
  } catch (...) {
    return false;
  }
  return false;
}

}  // namespace testutil
