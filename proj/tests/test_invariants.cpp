#include <doctest.h>

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "helpers.hpp"
#include "lueq/complex_matrix.hpp"
#include "lueq/eig.hpp"
#include "lueq/errors.hpp"
#include "lueq/invariants.hpp"
#include "lueq/random.hpp"
#include "lueq/state.hpp"
#include "lueq/tolerances.hpp"

using namespace lueq;
using testutil::basis_state;
using testutil::ghz;
using testutil::max_abs_diff;
using testutil::throws_code;
using testutil::w_state;

namespace {

InvariantFingerprint fp_of(const PureState& state, const char* label = "12-3") {
  return fingerprint(state, parse_split_label(label, 3));
}

}  // namespace

TEST_CASE("min spectral gap") {
  CHECK(min_spectral_gap({1.0}) == 1.0);
  CHECK(min_spectral_gap({0.7, 0.3}) == doctest::Approx(0.4));
  CHECK(min_spectral_gap({0.5, 0.4, 0.1}) == doctest::Approx(0.1));
  CHECK(min_spectral_gap({0.5, 0.5}) == doctest::Approx(0.0));
}

TEST_CASE("eigen ensemble of the W reduction") {
  const EigenEnsemble ens = eigen_ensemble(partial_trace(w_state(), {2}));
  REQUIRE(ens.rank() == 2);
  CHECK(ens.d1 == 2);
  CHECK(ens.d2 == 2);
  CHECK(ens.mu[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(ens.mu[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(ens.canonical);

  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix a1(2, 2);
  a1(0, 1) = r;
  a1(1, 0) = r;
  CHECK(max_abs_diff(ens.A[0], a1) < 1e-14);
  ComplexMatrix a2(2, 2);
  a2(0, 0) = 1.0;
  CHECK(max_abs_diff(ens.A[1], a2) < 1e-14);

  // rho_1 = theta_1 = I/2, rho_2 = theta_2 = diag(1, 0)
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= cplx(0.5);
  CHECK(max_abs_diff(ens.rho[0], half) < 1e-14);
  CHECK(max_abs_diff(ens.theta[0], half) < 1e-14);
  ComplexMatrix top(2, 2);
  top(0, 0) = 1.0;
  CHECK(max_abs_diff(ens.rho[1], top) < 1e-14);
  CHECK(max_abs_diff(ens.theta[1], top) < 1e-14);
}

TEST_CASE("metric matrices of W") {
  const MetricMatrices metrics = metric_matrices(eigen_ensemble(partial_trace(w_state(), {2})));
  REQUIRE(metrics.n == 2);
  const std::vector<double> expected{0.5, 0.5, 0.5, 1.0};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(metrics.omega[i] == doctest::Approx(expected[i]).epsilon(1e-13));
    CHECK(metrics.theta[i] == doctest::Approx(expected[i]).epsilon(1e-13));
  }
  // symmetric by construction, exactly
  CHECK(metrics.omega[1] == metrics.omega[2]);
  CHECK(metrics.theta[1] == metrics.theta[2]);
}

TEST_CASE("cubic tensors of W") {
  const CubicTensors cubes = cubic_tensors(eigen_ensemble(partial_trace(w_state(), {2})));
  REQUIRE(cubes.n == 2);
  auto at = [&](std::size_t i, std::size_t j, std::size_t k) { return cubes.x[(i * 2 + j) * 2 + k]; };
  CHECK(std::abs(at(0, 0, 0) - cplx(0.25)) < 1e-14);
  CHECK(std::abs(at(0, 0, 1) - cplx(0.25)) < 1e-14);
  CHECK(std::abs(at(0, 1, 1) - cplx(0.5)) < 1e-14);
  CHECK(std::abs(at(1, 1, 1) - cplx(1.0)) < 1e-14);
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(cubes.x[i] - cubes.y[i]) < 1e-14);
}

TEST_CASE("cubic tensor symmetries on a random reduction") {
  const PureState psi = random_state({2, 2, 2}, 61);
  const CubicTensors cubes = cubic_tensors(eigen_ensemble(partial_trace(psi, {2})));
  const std::size_t n = cubes.n;
  auto id3 = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * n + k; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        // traces of products of Hermitian factors: cyclic, and reversal conjugates
        CHECK(std::abs(cubes.x[id3(i, j, k)] - cubes.x[id3(j, k, i)]) < 1e-12);
        CHECK(std::abs(cubes.x[id3(i, j, k)] - std::conj(cubes.x[id3(k, j, i)])) < 1e-12);
        CHECK(std::abs(cubes.y[id3(i, j, k)] - cubes.y[id3(j, k, i)]) < 1e-12);
      }
}

TEST_CASE("moment invariants") {
  const std::vector<double> w_moments = moment_invariants(partial_trace(w_state(), {2}), 4);
  REQUIRE(w_moments.size() == 4);
  CHECK(w_moments[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(w_moments[1] == doctest::Approx(5.0 / 9.0).epsilon(1e-13));
  CHECK(w_moments[2] == doctest::Approx(1.0 / 3.0).epsilon(1e-13));
  CHECK(w_moments[3] == doctest::Approx(17.0 / 81.0).epsilon(1e-13));

  const std::vector<double> g_moments = moment_invariants(partial_trace(ghz(), {2}), 4);
  for (std::size_t s = 1; s <= 4; ++s)
    CHECK(g_moments[s - 1] == doctest::Approx(std::pow(2.0, 1.0 - double(s))).epsilon(1e-13));

  CHECK(throws_code([] { return moment_invariants(partial_trace(ghz(), {2}), 3); },
                    errc::dimension_mismatch));
}

TEST_CASE("moments are power sums of the full spectrum") {
  const DensityMatrix sigma = partial_trace(random_state({2, 2, 2, 2}, 44), {3});
  REQUIRE(sigma.hilbert_dim() == 8);
  const std::vector<double> moments = moment_invariants(sigma, 8);
  const EigenSystem sys = hermitian_eig(sigma.matrix());
  for (std::size_t s = 1; s <= 8; ++s) {
    double acc = 0.0;
    for (double v : sys.eigenvalues) acc += std::pow(std::max(v, 0.0), double(s));
    CHECK(moments[s - 1] == doctest::Approx(acc).epsilon(1e-11));
  }
  CHECK(moments[0] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("tables ignore eigenvector phases") {
  const EigenEnsemble base = eigen_ensemble(partial_trace(random_state({2, 2, 2}, 83), {2}));
  std::mt19937_64 gen(99);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  std::vector<ComplexMatrix> rotated = base.A;
  for (ComplexMatrix& a : rotated) a *= std::exp(cplx(0.0, angle(gen)));
  const EigenEnsemble twisted = ensemble_from_eigenpairs(base.d1, base.d2, base.mu, rotated);

  const MetricMatrices m1 = metric_matrices(base);
  const MetricMatrices m2 = metric_matrices(twisted);
  for (std::size_t i = 0; i < m1.omega.size(); ++i) {
    CHECK(std::abs(m1.omega[i] - m2.omega[i]) < 1e-14);
    CHECK(std::abs(m1.theta[i] - m2.theta[i]) < 1e-14);
  }
  const CubicTensors c1 = cubic_tensors(base);
  const CubicTensors c2 = cubic_tensors(twisted);
  for (std::size_t i = 0; i < c1.x.size(); ++i) {
    CHECK(std::abs(c1.x[i] - c2.x[i]) < 1e-14);
    CHECK(std::abs(c1.y[i] - c2.y[i]) < 1e-14);
  }
}

TEST_CASE("genericity") {
  CHECK(genericity(metric_matrices(eigen_ensemble(partial_trace(w_state(), {2})))));
  CHECK(genericity(metric_matrices(eigen_ensemble(partial_trace(basis_state({2, 2, 2}, 0), {2})))));

  // GHZ reduction in the (|00> +- |11>)/sqrt(2) eigenbasis: all four pair
  // traces equal 1/2, so both tables are singular.
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix plus(2, 2);
  plus(0, 0) = r;
  plus(1, 1) = r;
  ComplexMatrix minus(2, 2);
  minus(0, 0) = r;
  minus(1, 1) = -r;
  const EigenEnsemble alt = ensemble_from_eigenpairs(2, 2, {0.5, 0.5}, {plus, minus});
  const MetricMatrices metrics = metric_matrices(alt);
  CHECK(metrics.omega[0] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(metrics.omega[3] == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(!genericity(metrics));
}

TEST_CASE("W fingerprint against hand values") {
  const InvariantFingerprint fp = fp_of(w_state());
  CHECK(fp.split == "12-3");
  CHECK(fp.dims == std::vector<std::size_t>{2, 2, 2});
  CHECK(fp.padded_size == 4);
  REQUIRE(fp.rank() == 2);
  CHECK(std::abs(fp.spectrum[0] - 2.0 / 3.0) < 1e-12);
  CHECK(std::abs(fp.spectrum[1] - 1.0 / 3.0) < 1e-12);
  REQUIRE(fp.J.size() == 4);
  CHECK(std::abs(fp.J[1] - 5.0 / 9.0) < 1e-12);
  CHECK(std::abs(fp.J[3] - 17.0 / 81.0) < 1e-12);
  CHECK(std::abs(fp.omega[0] - 0.5) < 1e-12);
  CHECK(std::abs(fp.omega[3] - 1.0) < 1e-12);
  CHECK(std::abs(fp.X[7] - cplx(1.0)) < 1e-12);
  CHECK(fp.generic);
  CHECK(fp.canonical);
  CHECK(fp.gap == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("GHZ fingerprint is degenerate") {
  const InvariantFingerprint fp = fp_of(ghz());
  CHECK(!fp.canonical);
  CHECK(fp.gap < tol::degeneracy_gap);
  CHECK(std::abs(fp.spectrum[0] - 0.5) < 1e-12);
  CHECK(std::abs(fp.spectrum[1] - 0.5) < 1e-12);
}

TEST_CASE("fingerprint shape validation") {
  CHECK(throws_code([] { return fingerprint(random_state({2, 2}, 1), parse_split_label("1-2", 2)); },
                    errc::not_tripartite));
  CHECK(throws_code(
      [] { return fingerprint(random_state({2, 2, 2, 2}, 1), Bipartition{{0, 1}, {2, 3}}); },
      errc::not_tripartite));
  CHECK(throws_code([] { return fingerprint(w_state(), parse_split_label("3-12", 3)); },
                    errc::not_tripartite));
}

TEST_CASE("fingerprint is LU invariant") {
  for (const std::vector<std::size_t>& dims :
       {std::vector<std::size_t>{2, 2, 2}, std::vector<std::size_t>{2, 3, 4}}) {
    const PureState psi = random_state(dims, 131);
    std::vector<ComplexMatrix> units;
    for (std::size_t p = 0; p < dims.size(); ++p) units.push_back(haar_unitary(dims[p], 500 + p));
    const PureState moved = apply_local_unitaries(psi, units);

    for (const char* label : {"12-3", "13-2", "23-1"}) {
      const Bipartition split = parse_split_label(label, 3);
      const InvariantFingerprint a = fingerprint(psi, split);
      const InvariantFingerprint b = fingerprint(moved, split);
      const ComparisonDetail detail = compare_fingerprints_detailed(a, b, tol::compare_default);
      CHECK(detail.verdict != Verdict::Distinct);
      if (a.generic && a.canonical) CHECK(detail.verdict == Verdict::ConsistentGeneric);
    }
  }
}

TEST_CASE("verdicts") {
  CHECK(std::string(verdict_name(Verdict::Distinct)) == "distinct");
  CHECK(std::string(verdict_name(Verdict::ConsistentGeneric)) == "consistent-generic");
  CHECK(std::string(verdict_name(Verdict::Inconclusive)) == "inconclusive");

  const InvariantFingerprint w_fp = fp_of(w_state());
  const InvariantFingerprint g_fp = fp_of(ghz());

  CHECK(compare_fingerprints(w_fp, w_fp, tol::compare_default) == Verdict::ConsistentGeneric);
  CHECK(compare_fingerprints(g_fp, g_fp, tol::compare_default) == Verdict::Inconclusive);

  const ComparisonDetail detail = compare_fingerprints_detailed(g_fp, w_fp, tol::compare_default);
  CHECK(detail.verdict == Verdict::Distinct);
  CHECK(detail.reason == "spectrum[1]");

  const InvariantFingerprint other_split = fp_of(w_state(), "13-2");
  CHECK(throws_code([&] { return compare_fingerprints(w_fp, other_split, tol::compare_default); },
                    errc::split_mismatch));

  const InvariantFingerprint wide = fingerprint(random_state({2, 2, 3}, 7), parse_split_label("12-3", 3));
  CHECK(throws_code([&] { return compare_fingerprints(w_fp, wide, tol::compare_default); },
                    errc::split_mismatch));
}

TEST_CASE("distinct outranks missing genericity") {
  // same split and dims, spectra differ: Distinct even though GHZ is degenerate
  const ComparisonDetail detail =
      compare_fingerprints_detailed(fp_of(w_state()), fp_of(ghz()), tol::compare_default);
  CHECK(detail.verdict == Verdict::Distinct);
}
