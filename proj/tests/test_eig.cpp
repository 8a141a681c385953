#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <vector>

#include "helpers.hpp"
#include "lueq/complex_matrix.hpp"
#include "lueq/eig.hpp"
#include "lueq/errors.hpp"
#include "lueq/random.hpp"
#include "lueq/tolerances.hpp"

using namespace lueq;
using testutil::max_abs_diff;
using testutil::throws_code;

namespace {

double eigen_residual(const ComplexMatrix& h, const EigenSystem& sys) {
  double worst = 0.0;
  const std::size_t n = h.rows();
  for (std::size_t k = 0; k < n; ++k) {
    ComplexVector v(n);
    for (std::size_t r = 0; r < n; ++r) v[r] = sys.eigenvectors(r, k);
    const ComplexVector hv = h * v;
    double acc = 0.0;
    for (std::size_t r = 0; r < n; ++r) acc += std::norm(hv[r] - sys.eigenvalues[k] * v[r]);
    worst = std::max(worst, std::sqrt(acc));
  }
  return worst;
}

}  // namespace

TEST_CASE("diagonal input sorts descending") {
  ComplexMatrix h(3, 3);
  h(0, 0) = 1.0;
  h(1, 1) = 5.0;
  h(2, 2) = -2.0;
  const EigenSystem sys = hermitian_eig(h);
  CHECK(sys.eigenvalues == std::vector<double>{5.0, 1.0, -2.0});
  CHECK(unitarity_defect(sys.eigenvectors) < 1e-14);
  CHECK(eigen_residual(h, sys) < 1e-14);
}

TEST_CASE("two by two with complex off-diagonal") {
  ComplexMatrix h(2, 2);
  h(0, 0) = 1.0;
  h(0, 1) = cplx(0.0, 1.0);
  h(1, 0) = cplx(0.0, -1.0);
  h(1, 1) = 1.0;
  const EigenSystem sys = hermitian_eig(h);
  CHECK(sys.eigenvalues[0] == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sys.eigenvalues[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(eigen_residual(h, sys) < 1e-14);
}

TEST_CASE("random hermitian matrices") {
  for (std::size_t dim : {2, 3, 5, 8, 16}) {
    ComplexMatrix h = testutil::random_hermitian(dim, 100 + dim);
    const EigenSystem sys = hermitian_eig(h);
    const double scale = 1.0 + frobenius_norm(h);

    CHECK(eigen_residual(h, sys) <= 1e-9 * scale);
    CHECK(unitarity_defect(sys.eigenvectors) <= 1e-9 * scale);

    double sum = 0.0;
    double sq = 0.0;
    for (double v : sys.eigenvalues) {
      sum += v;
      sq += v * v;
    }
    CHECK(sum == doctest::Approx(trace(h).real()).epsilon(1e-10));
    CHECK(sq == doctest::Approx(frobenius_norm(h) * frobenius_norm(h)).epsilon(1e-10));

    for (std::size_t k = 1; k < dim; ++k) CHECK(sys.eigenvalues[k - 1] >= sys.eigenvalues[k]);
  }
}

TEST_CASE("column phase convention") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const ComplexMatrix h = testutil::random_hermitian(6, 200 + seed);
    const EigenSystem sys = hermitian_eig(h);
    for (std::size_t k = 0; k < 6; ++k) {
      std::size_t best = 0;
      double mag = 0.0;
      for (std::size_t r = 0; r < 6; ++r) {
        const double a = std::abs(sys.eigenvectors(r, k));
        if (a > mag) {
          mag = a;
          best = r;
        }
      }
      const cplx pivot = sys.eigenvectors(best, k);
      CHECK(pivot.real() >= 0.0);
      CHECK(std::abs(pivot.imag()) <= 1e-12 * (1.0 + mag));
    }
  }
}

TEST_CASE("deterministic output") {
  const ComplexMatrix h = testutil::random_hermitian(7, 77);
  const EigenSystem a = hermitian_eig(h);
  const EigenSystem b = hermitian_eig(h);
  CHECK(a.eigenvalues == b.eigenvalues);
  CHECK(max_abs_diff(a.eigenvectors, b.eigenvectors) == 0.0);
}

TEST_CASE("degenerate spectrum") {
  const ComplexMatrix id = ComplexMatrix::identity(4);
  const EigenSystem sys = hermitian_eig(id);
  for (double v : sys.eigenvalues) CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(unitarity_defect(sys.eigenvectors) < 1e-13);
}

TEST_CASE("eig input validation") {
  CHECK(throws_code([] { return hermitian_eig(ComplexMatrix(2, 3)); }, errc::not_square));
  ComplexMatrix m(2, 2);
  m(0, 1) = 1.0;
  CHECK(throws_code([&] { return hermitian_eig(m); }, errc::not_hermitian));
}

TEST_CASE("orthonormalize columns") {
  ComplexMatrix a(3, 2);
  a(0, 0) = 1.0;
  a(1, 0) = 1.0;
  a(0, 1) = 1.0;
  a(2, 1) = cplx(0.0, 2.0);
  const ComplexMatrix original = a;
  orthonormalize_columns(a);
  CHECK(max_abs_diff(adjoint(a) * a, ComplexMatrix::identity(2)) < 1e-14);
  // span preserved: projecting the input onto the new frame loses nothing
  const ComplexMatrix residual = original - a * (adjoint(a) * original);
  CHECK(frobenius_norm(residual) < 1e-13);

  ComplexMatrix dependent(3, 2);
  dependent(0, 0) = 1.0;
  dependent(0, 1) = 2.0;
  CHECK(throws_code([&] { orthonormalize_columns(dependent); }, errc::not_orthonormal));
}

TEST_CASE("complete to unitary") {
  const ComplexMatrix u = haar_unitary(5, 9);
  ComplexMatrix frame(5, 2);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 2; ++c) frame(r, c) = u(r, c);

  const ComplexMatrix full = complete_to_unitary(frame);
  CHECK(full.rows() == 5);
  CHECK(full.cols() == 5);
  CHECK(unitarity_defect(full) < 1e-13);
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 2; ++c) CHECK(full(r, c) == frame(r, c));

  ComplexMatrix crooked(3, 1);
  crooked(0, 0) = 0.5;
  CHECK(throws_code([&] { return complete_to_unitary(crooked); }, errc::not_orthonormal));
}

TEST_CASE("exp of i H") {
  const ComplexMatrix z3(3, 3);
  CHECK(max_abs_diff(expi_hermitian(z3), ComplexMatrix::identity(3)) < 1e-15);

  ComplexMatrix d(2, 2);
  d(0, 0) = 0.3;
  d(1, 1) = -1.1;
  const ComplexMatrix e = expi_hermitian(d);
  CHECK(std::abs(e(0, 0) - std::exp(cplx(0.0, 0.3))) < 1e-14);
  CHECK(std::abs(e(1, 1) - std::exp(cplx(0.0, -1.1))) < 1e-14);
  CHECK(std::abs(e(0, 1)) < 1e-15);

  const ComplexMatrix h = testutil::random_hermitian(4, 303);
  const ComplexMatrix u = expi_hermitian(h);
  CHECK(unitarity_defect(u) < 1e-12);
  ComplexMatrix minus = h;
  minus *= cplx(-1.0);
  CHECK(max_abs_diff(u * expi_hermitian(minus), ComplexMatrix::identity(4)) < 1e-12);
}
