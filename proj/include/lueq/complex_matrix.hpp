#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace lueq {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

// Dense row-major complex matrix. Sized for the few-qudit regime this
// library lives in; no views, no expression templates.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, cplx(0.0, 0.0)) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, ComplexVector entries);

  static ComplexMatrix identity(std::size_t dim);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ComplexVector& entries() { return data_; }
  const ComplexVector& entries() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cplx scale);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  ComplexVector data_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(cplx scale, ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexVector operator*(const ComplexMatrix& m, const ComplexVector& v);

ComplexMatrix transpose(const ComplexMatrix& m);
ComplexMatrix conjugate(const ComplexMatrix& m);
ComplexMatrix adjoint(const ComplexMatrix& m);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// a a' for a matrix a, and |v><v| for a vector.
ComplexMatrix gram(const ComplexMatrix& a);
ComplexMatrix outer_product(const ComplexVector& v);

cplx trace(const ComplexMatrix& m);
// Tr(a b) without forming the product.
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// <a|b>, conjugate-linear in the first argument.
cplx inner(const ComplexVector& a, const ComplexVector& b);
double norm2(const ComplexVector& v);

double frobenius_norm(const ComplexMatrix& m);
double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b);
double hermiticity_defect(const ComplexMatrix& m);  // ||M - M'||_F
double unitarity_defect(const ComplexMatrix& m);    // ||M'M - I||_F

bool is_hermitian(const ComplexMatrix& m, double tolerance);
bool is_unitary(const ComplexMatrix& m, double tolerance);

bool all_finite(const ComplexVector& v);
bool all_finite(const ComplexMatrix& m);

}  // namespace lueq
