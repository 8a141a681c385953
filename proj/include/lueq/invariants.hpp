#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lueq/complex_matrix.hpp"
#include "lueq/state.hpp"

namespace lueq {

// Eigendecomposition of a two-party mixed state with each eigenvector
// reshaped into a d1 x d2 matrix A_i, plus the pair of one-sided squares
// rho_i = A_i A_i' and theta_i = A_i^T conj(A_i) that the invariants are
// built from.
struct EigenEnsemble {
  std::size_t d1 = 0;
  std::size_t d2 = 0;
  std::vector<double> mu;            // descending, all above the rank threshold
  std::vector<ComplexMatrix> A;
  std::vector<ComplexMatrix> rho;
  std::vector<ComplexMatrix> theta;
  bool canonical = false;

  std::size_t rank() const { return mu.size(); }
};

// Smallest gap between consecutive entries of a descending spectrum. A
// lone eigenvalue gaps against the discarded zero space, i.e. itself.
double min_spectral_gap(const std::vector<double>& mu);

// Derives rho/theta and the canonical flag from eigenpairs. Split out from
// eigen_ensemble so tests can build ensembles in a hand-picked eigenbasis.
EigenEnsemble ensemble_from_eigenpairs(std::size_t d1, std::size_t d2, std::vector<double> mu,
                                       std::vector<ComplexMatrix> a);

EigenEnsemble eigen_ensemble(const DensityMatrix& sigma);

struct MetricMatrices {
  std::size_t n = 0;
  std::vector<double> omega;  // n x n row-major
  std::vector<double> theta;
};

MetricMatrices metric_matrices(const EigenEnsemble& ens);

struct CubicTensors {
  std::size_t n = 0;
  std::vector<cplx> x;  // n^3, index (i,j,k) at (i*n + j)*n + k
  std::vector<cplx> y;
};

CubicTensors cubic_tensors(const EigenEnsemble& ens);

// J[s] = Tr(sigma^s) for s = 1..count, from the full spectrum with negative
// roundoff clamped to zero. count must equal the reduced-space dimension.
std::vector<double> moment_invariants(const DensityMatrix& sigma, std::size_t count);

// True iff both n x n blocks have |det| above the rank threshold. The
// zero-padded extensions are always singular, so the test lives on the
// blocks; see the README notes on padding.
bool genericity(const MetricMatrices& metrics);

struct InvariantFingerprint {
  std::string split;
  std::vector<std::size_t> dims;  // of the tripartite state
  std::vector<double> spectrum;
  std::vector<double> J;          // J[k] holds the moment of order k+1
  std::vector<double> omega;      // n x n row-major block
  std::vector<double> theta;
  std::size_t padded_size = 0;    // declared full size of omega/theta/J space
  std::vector<cplx> X;            // rank^3 lexicographic
  std::vector<cplx> Y;
  bool generic = false;
  bool canonical = false;
  double gap = 0.0;

  std::size_t rank() const { return spectrum.size(); }
};

InvariantFingerprint fingerprint(const PureState& state, const Bipartition& split);

enum class Verdict { Distinct, ConsistentGeneric, Inconclusive };

const char* verdict_name(Verdict v);

// Distinct needs a disagreement it can trust: basis-free scalars always
// count, the basis-dependent tables only when both sides are canonical.
// ConsistentGeneric needs everything to match with both sides generic and
// canonical. Anything else is Inconclusive.
Verdict compare_fingerprints(const InvariantFingerprint& f1, const InvariantFingerprint& f2,
                             double tolerance);

struct ComparisonDetail {
  Verdict verdict;
  std::string reason;  // first offending field, or why the verdict is weak
};

ComparisonDetail compare_fingerprints_detailed(const InvariantFingerprint& f1,
                                               const InvariantFingerprint& f2, double tolerance);

}  // namespace lueq
