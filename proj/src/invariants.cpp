#include "lueq/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lueq/eig.hpp"
#include "lueq/errors.hpp"
#include "lueq/tolerances.hpp"

namespace lueq {

namespace {

double real_det(std::vector<double> m, std::size_t n) {
  // LU with partial pivoting; good enough for the tiny blocks seen here.
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(m[r * n + col]) > std::abs(m[pivot * n + col])) pivot = r;
    if (m[pivot * n + col] == 0.0) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m[pivot * n + c], m[col * n + c]);
      det = -det;
    }
    det *= m[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r * n + col] / m[col * n + col];
      for (std::size_t c = col; c < n; ++c) m[r * n + c] -= f * m[col * n + c];
    }
  }
  return det;
}

std::string index_pair(std::size_t i, std::size_t j) {
  return "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
}

}  // namespace

double min_spectral_gap(const std::vector<double>& mu) {
  if (mu.empty()) return 0.0;
  if (mu.size() == 1) return mu[0];
  double gap = mu[0] - mu[1];
  for (std::size_t i = 1; i + 1 < mu.size(); ++i) gap = std::min(gap, mu[i] - mu[i + 1]);
  return gap;
}

EigenEnsemble ensemble_from_eigenpairs(std::size_t d1, std::size_t d2, std::vector<double> mu,
                                       std::vector<ComplexMatrix> a) {
  if (mu.size() != a.size())
    fail(errc::dimension_mismatch, "eigenvalue and eigenvector counts differ");
  EigenEnsemble ens;
  ens.d1 = d1;
  ens.d2 = d2;
  ens.mu = std::move(mu);
  ens.A = std::move(a);
  ens.rho.reserve(ens.A.size());
  ens.theta.reserve(ens.A.size());
  for (const ComplexMatrix& ai : ens.A) {
    if (ai.rows() != d1 || ai.cols() != d2)
      fail(errc::dimension_mismatch, "eigenvector matrix has the wrong shape");
    ens.rho.push_back(gram(ai));
    ens.theta.push_back(gram(transpose(ai)));
  }
  ens.canonical = min_spectral_gap(ens.mu) > tol::degeneracy_gap;
  return ens;
}

EigenEnsemble eigen_ensemble(const DensityMatrix& sigma) {
  if (sigma.num_parties() != 2)
    fail(errc::not_bipartite, "ensemble needs a two-party density matrix");
  const std::size_t d1 = sigma.dims()[0];
  const std::size_t d2 = sigma.dims()[1];
  const EigenSystem es = hermitian_eig(sigma.matrix());

  std::vector<double> mu;
  std::vector<ComplexMatrix> a;
  for (std::size_t i = 0; i < es.eigenvalues.size(); ++i) {
    if (es.eigenvalues[i] <= tol::rank_threshold) break;
    mu.push_back(es.eigenvalues[i]);
    ComplexMatrix ai(d1, d2);
    for (std::size_t k = 0; k < d1; ++k)
      for (std::size_t l = 0; l < d2; ++l) ai(k, l) = es.eigenvectors(k * d2 + l, i);
    a.push_back(std::move(ai));
  }
  return ensemble_from_eigenpairs(d1, d2, std::move(mu), std::move(a));
}

MetricMatrices metric_matrices(const EigenEnsemble& ens) {
  const std::size_t n = ens.rank();
  MetricMatrices out;
  out.n = n;
  out.omega.assign(n * n, 0.0);
  out.theta.assign(n * n, 0.0);
  // Fill i <= j and mirror, so symmetry holds exactly rather than to
  // summation-order roundoff.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double w = trace_product(ens.rho[i], ens.rho[j]).real();
      const double t = trace_product(ens.theta[i], ens.theta[j]).real();
      out.omega[i * n + j] = w;
      out.omega[j * n + i] = w;
      out.theta[i * n + j] = t;
      out.theta[j * n + i] = t;
    }
  return out;
}

CubicTensors cubic_tensors(const EigenEnsemble& ens) {
  const std::size_t n = ens.rank();
  CubicTensors out;
  out.n = n;
  out.x.resize(n * n * n);
  out.y.resize(n * n * n);
  std::vector<ComplexMatrix> rr(n * n), tt(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      rr[i * n + j] = ens.rho[i] * ens.rho[j];
      tt[i * n + j] = ens.theta[i] * ens.theta[j];
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        out.x[(i * n + j) * n + k] = trace_product(rr[i * n + j], ens.rho[k]);
        out.y[(i * n + j) * n + k] = trace_product(tt[i * n + j], ens.theta[k]);
      }
  return out;
}

std::vector<double> moment_invariants(const DensityMatrix& sigma, std::size_t count) {
  if (count != sigma.hilbert_dim())
    fail(errc::dimension_mismatch, "moment count must equal the reduced-space dimension");
  const EigenSystem es = hermitian_eig(sigma.matrix());
  std::vector<double> lambda = es.eigenvalues;
  for (double& x : lambda) x = std::max(x, 0.0);

  std::vector<double> powers = lambda;
  std::vector<double> out(count, 0.0);
  for (std::size_t s = 0; s < count; ++s) {
    double acc = 0.0;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (s > 0) powers[i] *= lambda[i];
      acc += powers[i];
    }
    out[s] = acc;
  }
  return out;
}

bool genericity(const MetricMatrices& metrics) {
  if (metrics.n == 0) return false;
  return std::abs(real_det(metrics.omega, metrics.n)) > tol::rank_threshold &&
         std::abs(real_det(metrics.theta, metrics.n)) > tol::rank_threshold;
}

InvariantFingerprint fingerprint(const PureState& state, const Bipartition& split) {
  if (state.num_parties() != 3) fail(errc::not_tripartite, "fingerprint needs three parties");
  validate_bipartition(split, 3);
  Bipartition sorted = split;
  std::sort(sorted.left.begin(), sorted.left.end());
  std::sort(sorted.right.begin(), sorted.right.end());
  if (sorted.left.size() != 2 || sorted.right.size() != 1)
    fail(errc::not_tripartite, "split must pair two parties against one");

  const DensityMatrix sigma = partial_trace(state, sorted.right);
  const EigenEnsemble ens = eigen_ensemble(sigma);
  const MetricMatrices metrics = metric_matrices(ens);
  const CubicTensors cubic = cubic_tensors(ens);

  InvariantFingerprint fp;
  fp.split = split_label(sorted);
  fp.dims = state.dims();
  fp.spectrum = ens.mu;
  fp.padded_size = sigma.hilbert_dim();
  fp.J = moment_invariants(sigma, fp.padded_size);
  fp.omega = metrics.omega;
  fp.theta = metrics.theta;
  fp.X = cubic.x;
  fp.Y = cubic.y;
  fp.generic = genericity(metrics);
  fp.canonical = ens.canonical;
  fp.gap = min_spectral_gap(ens.mu);
  return fp;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Distinct: return "distinct";
    case Verdict::ConsistentGeneric: return "consistent-generic";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "unknown";
}

ComparisonDetail compare_fingerprints_detailed(const InvariantFingerprint& f1,
                                               const InvariantFingerprint& f2, double tolerance) {
  if (f1.split != f2.split || f1.dims != f2.dims)
    fail(errc::split_mismatch, "fingerprints describe different splits or dimensions");

  const std::size_t m = f1.padded_size;
  auto spectrum_at = [m](const InvariantFingerprint& f, std::size_t i) {
    return i < f.spectrum.size() ? f.spectrum[i] : 0.0;
  };
  for (std::size_t i = 0; i < m; ++i)
    if (std::abs(spectrum_at(f1, i) - spectrum_at(f2, i)) > tolerance)
      return {Verdict::Distinct, "spectrum[" + std::to_string(i + 1) + "]"};
  for (std::size_t s = 0; s < m; ++s)
    if (std::abs(f1.J[s] - f2.J[s]) > tolerance)
      return {Verdict::Distinct, "J[" + std::to_string(s + 1) + "]"};

  if (!f1.canonical || !f2.canonical)
    return {Verdict::Inconclusive, "degenerate spectrum: basis-dependent tables not comparable"};

  const std::size_t n1 = f1.rank();
  const std::size_t n2 = f2.rank();
  const std::size_t n = std::max(n1, n2);
  auto block_at = [](const std::vector<double>& block, std::size_t nb, std::size_t i,
                     std::size_t j) { return (i < nb && j < nb) ? block[i * nb + j] : 0.0; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(block_at(f1.omega, n1, i, j) - block_at(f2.omega, n2, i, j)) > tolerance)
        return {Verdict::Distinct, "omega" + index_pair(i, j)};
      if (std::abs(block_at(f1.theta, n1, i, j) - block_at(f2.theta, n2, i, j)) > tolerance)
        return {Verdict::Distinct, "theta" + index_pair(i, j)};
    }
  auto cubic_at = [](const std::vector<cplx>& table, std::size_t nb, std::size_t i, std::size_t j,
                     std::size_t k) {
    return (i < nb && j < nb && k < nb) ? table[(i * nb + j) * nb + k] : cplx(0.0, 0.0);
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const std::string at = "[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                               std::to_string(k + 1) + "]";
        if (std::abs(cubic_at(f1.X, n1, i, j, k) - cubic_at(f2.X, n2, i, j, k)) > tolerance)
          return {Verdict::Distinct, "X" + at};
        if (std::abs(cubic_at(f1.Y, n1, i, j, k) - cubic_at(f2.Y, n2, i, j, k)) > tolerance)
          return {Verdict::Distinct, "Y" + at};
      }

  if (f1.generic && f2.generic) return {Verdict::ConsistentGeneric, "all invariants agree"};
  return {Verdict::Inconclusive, "invariants agree but a metric block is singular"};
}

Verdict compare_fingerprints(const InvariantFingerprint& f1, const InvariantFingerprint& f2,
                             double tolerance) {
  return compare_fingerprints_detailed(f1, f2, tolerance).verdict;
}

}  // namespace lueq
