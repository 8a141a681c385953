#include "lueq/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "lueq/errors.hpp"
#include "lueq/tolerances.hpp"

namespace lueq {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) acc += std::norm(a(r, c));
  return std::sqrt(acc);
}

// One Jacobi rotation in the (p, q) plane, p < q. The plane rotation J has
//   J(p,p) = c, J(p,q) = -conj(s), J(q,p) = s, J(q,q) = c
// with s = t*c*exp(-i phi), phi the phase of a(p,q), and t the smaller-angle
// root of the annihilation condition. a <- J'aJ zeroes a(p,q); v <- vJ
// accumulates the eigenvector basis.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
  const cplx apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const cplx phase = apq / r;
  const double tau = (app - aqq) / (2.0 * r);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const cplx s = (t * c) * std::conj(phase);

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {  // a <- aJ
    const cplx akp = a(k, p);
    const cplx akq = a(k, q);
    a(k, p) = c * akp + s * akq;
    a(k, q) = -std::conj(s) * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {  // a <- J'a
    const cplx apk = a(p, k);
    const cplx aqk = a(q, k);
    a(p, k) = c * apk + std::conj(s) * aqk;
    a(q, k) = -s * apk + c * aqk;
  }
  a(p, q) = cplx(0.0, 0.0);
  a(q, p) = cplx(0.0, 0.0);
  a(p, p) = cplx(a(p, p).real(), 0.0);
  a(q, q) = cplx(a(q, q).real(), 0.0);
  for (std::size_t k = 0; k < n; ++k) {  // v <- vJ
    const cplx vkp = v(k, p);
    const cplx vkq = v(k, q);
    v(k, p) = c * vkp + s * vkq;
    v(k, q) = -std::conj(s) * vkp + c * vkq;
  }
}

void fix_column_phases(ComplexMatrix& v) {
  for (std::size_t c = 0; c < v.cols(); ++c) {
    std::size_t lead = 0;
    double best = -1.0;
    for (std::size_t r = 0; r < v.rows(); ++r) {
      const double mag = std::abs(v(r, c));
      if (mag > best) {
        best = mag;
        lead = r;
      }
    }
    if (best <= 0.0) continue;
    const cplx phase = v(lead, c) / best;
    for (std::size_t r = 0; r < v.rows(); ++r) v(r, c) *= std::conj(phase);
    v(lead, c) = cplx(std::abs(v(lead, c)), 0.0);
  }
}

}  // namespace

EigenSystem hermitian_eig(const ComplexMatrix& matrix) {
  if (!matrix.square()) fail(errc::not_square, "eigendecomposition needs a square matrix");
  const std::size_t n = matrix.rows();
  const double scale = frobenius_norm(matrix);
  if (hermiticity_defect(matrix) > tol::hermitian * (1.0 + scale))
    fail(errc::not_hermitian, "matrix is not Hermitian within tolerance");

  // Work on the Hermitian average so roundoff asymmetry in the input cannot
  // leak into the iteration.
  ComplexMatrix a(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = cplx(matrix(r, r).real(), 0.0);
    for (std::size_t c = r + 1; c < n; ++c) {
      const cplx z = 0.5 * (matrix(r, c) + std::conj(matrix(c, r)));
      a(r, c) = z;
      a(c, r) = std::conj(z);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  const double stop = tol::jacobi_off * scale;
  bool converged = false;
  for (int sweep = 0; sweep < tol::jacobi_max_sweeps; ++sweep) {
    if (off_diagonal_norm(a) <= stop) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
  }
  if (!converged && off_diagonal_norm(a) > stop)
    fail(errc::no_convergence, "Jacobi sweeps did not reach the off-diagonal threshold");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](std::size_t i, std::size_t j) { return a(i, i).real() > a(j, j).real(); });

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.eigenvectors(r, k) = v(r, order[k]);
  }
  fix_column_phases(out.eigenvectors);
  return out;
}

void orthonormalize_columns(ComplexMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  ComplexVector col(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    for (std::size_t r = 0; r < rows; ++r) col[r] = m(r, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        cplx proj(0.0, 0.0);
        for (std::size_t r = 0; r < rows; ++r) proj += std::conj(m(r, i)) * col[r];
        for (std::size_t r = 0; r < rows; ++r) col[r] -= proj * m(r, i);
      }
    }
    const double len = norm2(col);
    if (len <= tol::rank_threshold)
      fail(errc::not_orthonormal, "column " + std::to_string(j) + " is linearly dependent");
    for (std::size_t r = 0; r < rows; ++r) m(r, j) = col[r] / len;
  }
}

ComplexMatrix complete_to_unitary(const ComplexMatrix& columns) {
  const std::size_t d = columns.rows();
  const std::size_t k = columns.cols();
  if (k > d) fail(errc::dimension_mismatch, "more columns than the space can hold");
  {
    double defect = 0.0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) {
        cplx dot(0.0, 0.0);
        for (std::size_t r = 0; r < d; ++r) dot += std::conj(columns(r, i)) * columns(r, j);
        if (i == j) dot -= cplx(1.0, 0.0);
        defect += std::norm(dot);
      }
    if (std::sqrt(defect) > tol::orthonormal)
      fail(errc::not_orthonormal, "input columns are not an orthonormal frame");
  }

  ComplexMatrix u(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < k; ++c) u(r, c) = columns(r, c);

  ComplexVector cand(d), best(d);
  for (std::size_t j = k; j < d; ++j) {
    double best_len = -1.0;
    for (std::size_t e = 0; e < d; ++e) {
      std::fill(cand.begin(), cand.end(), cplx(0.0, 0.0));
      cand[e] = cplx(1.0, 0.0);
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t i = 0; i < j; ++i) {
          cplx proj(0.0, 0.0);
          for (std::size_t r = 0; r < d; ++r) proj += std::conj(u(r, i)) * cand[r];
          for (std::size_t r = 0; r < d; ++r) cand[r] -= proj * u(r, i);
        }
      }
      const double len = norm2(cand);
      if (len > best_len) {
        best_len = len;
        best = cand;
      }
    }
    for (std::size_t r = 0; r < d; ++r) u(r, j) = best[r] / best_len;
  }

  if (unitarity_defect(u) > tol::unitarity)
    fail(errc::no_convergence, "unitary completion lost orthonormality");
  return u;
}

ComplexMatrix expi_hermitian(const ComplexMatrix& h) {
  const EigenSystem es = hermitian_eig(h);
  const std::size_t n = h.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const cplx ph = std::polar(1.0, es.eigenvalues[k]);
    for (std::size_t r = 0; r < n; ++r) {
      const cplx scaled = ph * es.eigenvectors(r, k);
      for (std::size_t c = 0; c < n; ++c) out(r, c) += scaled * std::conj(es.eigenvectors(c, k));
    }
  }
  return out;
}

}  // namespace lueq
