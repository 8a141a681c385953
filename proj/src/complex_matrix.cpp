#include "lueq/complex_matrix.hpp"

#include <cmath>
#include <string>

#include "lueq/errors.hpp"

namespace lueq {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    fail(errc::dimension_mismatch, "entry count " + std::to_string(data_.size()) +
                                       " does not fill a " + std::to_string(rows_) + "x" +
                                       std::to_string(cols_) + " matrix");
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = cplx(1.0, 0.0);
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail(errc::dimension_mismatch, "matrix addition shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    fail(errc::dimension_mismatch, "matrix subtraction shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cplx scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs += rhs; }
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) { return lhs -= rhs; }
ComplexMatrix operator*(cplx scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs) {
  if (lhs.cols() != rhs.rows()) fail(errc::dimension_mismatch, "matrix product shape mismatch");
  ComplexMatrix out(lhs.rows(), rhs.cols());
  for (std::size_t r = 0; r < lhs.rows(); ++r) {
    for (std::size_t k = 0; k < lhs.cols(); ++k) {
      const cplx l = lhs(r, k);
      if (l == cplx(0.0, 0.0)) continue;
      for (std::size_t c = 0; c < rhs.cols(); ++c) out(r, c) += l * rhs(k, c);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v) {
  if (m.cols() != v.size()) fail(errc::dimension_mismatch, "matrix-vector shape mismatch");
  ComplexVector out(m.rows(), cplx(0.0, 0.0));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    cplx acc(0.0, 0.0);
    for (std::size_t c = 0; c < m.cols(); ++c) acc += m(r, c) * v[c];
    out[r] = acc;
  }
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& m) {
  ComplexMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.entries().size(); ++i) out.entries()[i] = std::conj(m.entries()[i]);
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  ComplexMatrix out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ar = 0; ar < a.rows(); ++ar)
    for (std::size_t ac = 0; ac < a.cols(); ++ac) {
      const cplx f = a(ar, ac);
      if (f == cplx(0.0, 0.0)) continue;
      for (std::size_t br = 0; br < b.rows(); ++br)
        for (std::size_t bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = f * b(br, bc);
    }
  return out;
}

ComplexMatrix gram(const ComplexMatrix& a) {
  ComplexMatrix out(a.rows(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.rows(); ++c) {
      cplx acc(0.0, 0.0);
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(r, k) * std::conj(a(c, k));
      out(r, c) = acc;
    }
  return out;
}

ComplexMatrix outer_product(const ComplexVector& v) {
  ComplexMatrix out(v.size(), v.size());
  for (std::size_t r = 0; r < v.size(); ++r)
    for (std::size_t c = 0; c < v.size(); ++c) out(r, c) = v[r] * std::conj(v[c]);
  return out;
}

cplx trace(const ComplexMatrix& m) {
  if (!m.square()) fail(errc::not_square, "trace of a non-square matrix");
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < m.rows(); ++i) acc += m(i, i);
  return acc;
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols())
    fail(errc::dimension_mismatch, "trace-product shape mismatch");
  cplx acc(0.0, 0.0);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) acc += a(r, c) * b(c, r);
  return acc;
}

cplx inner(const ComplexVector& a, const ComplexVector& b) {
  if (a.size() != b.size()) fail(errc::dimension_mismatch, "inner-product length mismatch");
  cplx acc(0.0, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm2(const ComplexVector& v) {
  double acc = 0.0;
  for (const auto& z : v) acc += std::norm(z);
  return std::sqrt(acc);
}

double frobenius_norm(const ComplexMatrix& m) {
  double acc = 0.0;
  for (const auto& z : m.entries()) acc += std::norm(z);
  return std::sqrt(acc);
}

double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    fail(errc::dimension_mismatch, "frobenius distance shape mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    acc += std::norm(a.entries()[i] - b.entries()[i]);
  return std::sqrt(acc);
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.square()) fail(errc::not_square, "hermiticity defect of a non-square matrix");
  double acc = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) acc += std::norm(m(r, c) - std::conj(m(c, r)));
  return std::sqrt(acc);
}

double unitarity_defect(const ComplexMatrix& m) {
  if (!m.square()) return 1.0;
  double acc = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cplx dot(0.0, 0.0);
      for (std::size_t k = 0; k < m.rows(); ++k) dot += std::conj(m(k, r)) * m(k, c);
      if (r == c) dot -= cplx(1.0, 0.0);
      acc += std::norm(dot);
    }
  return std::sqrt(acc);
}

bool is_hermitian(const ComplexMatrix& m, double tolerance) {
  return m.square() && hermiticity_defect(m) <= tolerance;
}

bool is_unitary(const ComplexMatrix& m, double tolerance) {
  return m.square() && unitarity_defect(m) <= tolerance;
}

bool all_finite(const ComplexVector& v) {
  for (const auto& z : v)
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
  return true;
}

bool all_finite(const ComplexMatrix& m) { return all_finite(m.entries()); }

}  // namespace lueq
