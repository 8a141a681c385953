#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lueq/complex_matrix.hpp"

namespace lueq {

// Index convention used everywhere: amplitudes are stored lexicographically
// with party 0 varying slowest. For dims (d0, d1, d2) the basis label
// (k0, k1, k2) sits at k0*d1*d2 + k1*d2 + k2.

class PureState {
 public:
  PureState(std::vector<std::size_t> dims, ComplexVector amplitudes);

  // Scales the amplitudes to unit norm before validating.
  static PureState normalized(std::vector<std::size_t> dims, ComplexVector amplitudes);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  std::size_t num_parties() const { return dims_.size(); }
  std::size_t hilbert_dim() const { return amplitudes_.size(); }

 private:
  std::vector<std::size_t> dims_;
  ComplexVector amplitudes_;
};

class DensityMatrix {
 public:
  DensityMatrix(std::vector<std::size_t> dims, ComplexMatrix matrix);

  const std::vector<std::size_t>& dims() const { return dims_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  std::size_t num_parties() const { return dims_.size(); }
  std::size_t hilbert_dim() const { return matrix_.rows(); }

 private:
  std::vector<std::size_t> dims_;
  ComplexMatrix matrix_;
};

// Two disjoint party lists covering every party, 0-based.
struct Bipartition {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

// Parses labels like "12-3" or "2-13" (1-based party digits) into a
// bipartition with both sides sorted ascending.
Bipartition parse_split_label(const std::string& label, std::size_t num_parties);
std::string split_label(const Bipartition& split);
void validate_bipartition(const Bipartition& split, std::size_t num_parties);

// Reduced state on the complement of `traced`, parties kept in ascending
// order. For a pure input this is the Gram matrix of the bipartition slices
// rather than a trace over the full projector.
DensityMatrix partial_trace(const PureState& state, const std::vector<std::size_t>& traced);
DensityMatrix partial_trace(const DensityMatrix& state, const std::vector<std::size_t>& traced);

// Amplitudes rearranged into a (left dims) x (right dims) matrix. Local
// unitaries act as M -> U_left M U_right^T on this layout.
ComplexMatrix bipartition_matrix(const PureState& state, const Bipartition& split);

PureState apply_local_unitaries(const PureState& state, const std::vector<ComplexMatrix>& unitaries);

// Singular values of the bipartition matrix, descending, truncated at the
// squared-value rank threshold.
std::vector<double> schmidt_coefficients(const PureState& state, const Bipartition& split);

DensityMatrix pure_to_density(const PureState& state);

PureState random_state(const std::vector<std::size_t>& dims, std::uint64_t seed);

}  // namespace lueq
