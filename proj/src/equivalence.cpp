#include "lueq/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lueq/eig.hpp"
#include "lueq/errors.hpp"
#include "lueq/tolerances.hpp"

namespace lueq {

namespace {

std::vector<std::size_t> other_parties(std::size_t n, std::size_t j) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < n; ++p)
    if (p != j) out.push_back(p);
  return out;
}

}  // namespace

double check_lu_fidelity(const PureState& psi, const PureState& psi_prime,
                         const std::vector<ComplexMatrix>& unitaries) {
  if (psi.dims() != psi_prime.dims())
    fail(errc::dimension_mismatch, "states live on different party dimensions");
  const PureState moved = apply_local_unitaries(psi, unitaries);
  const double f = std::abs(inner(psi_prime.amplitudes(), moved.amplitudes()));
  return std::min(f, 1.0);
}

ComplexMatrix match_purification(const PureState& psi, const PureState& psi_prime, std::size_t j) {
  if (psi.dims() != psi_prime.dims())
    fail(errc::dimension_mismatch, "states live on different party dimensions");
  const std::size_t n = psi.num_parties();
  if (j >= n) fail(errc::invalid_party_set, "party index out of range");
  if (n < 2) fail(errc::invalid_party_set, "need a nontrivial complement to match against");
  const std::size_t dj = psi.dims()[j];

  const Bipartition split{other_parties(n, j), {j}};
  const ComplexMatrix slice = bipartition_matrix(psi, split);
  const ComplexMatrix slice_prime = bipartition_matrix(psi_prime, split);
  const ComplexMatrix red = gram(slice);
  const ComplexMatrix red_prime = gram(slice_prime);
  if (frobenius_distance(red, red_prime) > tol::reduced_match)
    fail(errc::reduced_mismatch, "reduced states on the complement of party " +
                                     std::to_string(j + 1) + " disagree");

  // Eigendecompose the average of the two (nearly equal) reduced matrices so
  // neither state is privileged. For eigenvector e_k with eigenvalue
  // lambda_k, the party-j slice u_k = slice^T conj(e_k) has
  // <u_k|u_l> = lambda_k delta_kl, so the normalized slices of both states
  // form orthonormal frames and W is the unitary carrying one to the other.
  // A degenerate lambda block only rotates its slices inside a subspace the
  // frames share, which the orthonormalization absorbs.
  ComplexMatrix avg = red;
  avg += red_prime;
  avg *= cplx(0.5, 0.0);
  const EigenSystem es = hermitian_eig(avg);

  std::size_t kept = 0;
  while (kept < es.eigenvalues.size() && es.eigenvalues[kept] > tol::rank_threshold) ++kept;
  kept = std::min(kept, dj);  // Schmidt rank cannot exceed the matched party

  ComplexMatrix frame(dj, kept), frame_prime(dj, kept);
  const std::size_t drest = slice.rows();
  for (std::size_t k = 0; k < kept; ++k) {
    const double scale = 1.0 / std::sqrt(es.eigenvalues[k]);
    for (std::size_t c = 0; c < dj; ++c) {
      cplx acc(0.0, 0.0), acc_prime(0.0, 0.0);
      for (std::size_t r = 0; r < drest; ++r) {
        const cplx e = std::conj(es.eigenvectors(r, k));
        acc += slice(r, c) * e;
        acc_prime += slice_prime(r, c) * e;
      }
      frame(c, k) = scale * acc;
      frame_prime(c, k) = scale * acc_prime;
    }
  }
  orthonormalize_columns(frame);
  orthonormalize_columns(frame_prime);
  const ComplexMatrix full = complete_to_unitary(frame);
  const ComplexMatrix full_prime = complete_to_unitary(frame_prime);
  const ComplexMatrix w = full_prime * adjoint(full);

  std::vector<ComplexMatrix> action;
  for (std::size_t p = 0; p < n; ++p)
    action.push_back(p == j ? w : ComplexMatrix::identity(psi.dims()[p]));
  if (check_lu_fidelity(psi, psi_prime, action) < 1.0 - tol::fidelity_floor)
    fail(errc::reconstruction_failed, "matched unitary does not carry the state across");
  return w;
}

LUWitness lift_witness(const PureState& psi, const PureState& psi_prime, std::size_t j,
                       const std::vector<ComplexMatrix>& witness) {
  if (psi.dims() != psi_prime.dims())
    fail(errc::dimension_mismatch, "states live on different party dimensions");
  const std::size_t n = psi.num_parties();
  if (j >= n) fail(errc::invalid_party_set, "party index out of range");
  if (witness.size() + 1 != n)
    fail(errc::dimension_mismatch, "witness must cover every party except the lifted one");

  std::vector<ComplexMatrix> action;
  std::size_t w_at = 0;
  for (std::size_t p = 0; p < n; ++p)
    action.push_back(p == j ? ComplexMatrix::identity(psi.dims()[p]) : witness[w_at++]);
  const PureState rotated = apply_local_unitaries(psi, action);

  const std::vector<std::size_t> traced{j};
  const double residual = frobenius_distance(partial_trace(rotated, traced).matrix(),
                                             partial_trace(psi_prime, traced).matrix());
  if (residual > tol::reduced_match)
    fail(errc::witness_mismatch, "witness does not map the reduced state across");

  LUWitness out;
  out.unitaries = action;
  out.unitaries[j] = match_purification(rotated, psi_prime, j);
  const PureState moved = apply_local_unitaries(psi, out.unitaries);
  const cplx overlap = inner(psi_prime.amplitudes(), moved.amplitudes());
  out.fidelity = std::min(std::abs(overlap), 1.0);
  out.phase = out.fidelity > 0.0 ? overlap / std::abs(overlap) : cplx(1.0, 0.0);
  return out;
}

const char* counterexample_verdict_name(CounterexampleVerdict v) {
  return v == CounterexampleVerdict::NotUnitarilyEquivalent ? "not-unitarily-equivalent"
                                                            : "spectrum-consistent";
}

CounterexampleReport counterexample_report() {
  const std::vector<std::size_t> dims{2, 2, 2};
  const double r2 = 1.0 / std::sqrt(2.0);
  ComplexVector plus(8, cplx(0.0, 0.0)), minus(8, cplx(0.0, 0.0));
  plus[0] = cplx(r2, 0.0);
  plus[7] = cplx(r2, 0.0);
  minus[0] = cplx(r2, 0.0);
  minus[7] = cplx(-r2, 0.0);

  const ComplexMatrix proj_plus = outer_product(plus);
  const ComplexMatrix proj_minus = outer_product(minus);
  ComplexMatrix m1 = proj_plus;
  m1 *= cplx(1.0 / 3.0, 0.0);
  {
    ComplexMatrix t = proj_minus;
    t *= cplx(2.0 / 3.0, 0.0);
    m1 += t;
  }
  ComplexMatrix m2 = proj_plus;
  m2 *= cplx(0.5, 0.0);
  {
    ComplexMatrix t = proj_minus;
    t *= cplx(0.5, 0.0);
    m2 += t;
  }
  const DensityMatrix rho1(dims, m1);
  const DensityMatrix rho2(dims, m2);

  CounterexampleReport report;
  for (std::size_t p = 0; p < 3; ++p)
    report.reduced_residuals[p] = frobenius_distance(partial_trace(rho1, {p}).matrix(),
                                                     partial_trace(rho2, {p}).matrix());

  auto nonzero_spectrum = [](const DensityMatrix& rho) {
    std::vector<double> out;
    for (double lambda : hermitian_eig(rho.matrix()).eigenvalues) {
      if (lambda <= tol::rank_threshold) break;
      out.push_back(lambda);
    }
    return out;
  };
  report.spectrum_1 = nonzero_spectrum(rho1);
  report.spectrum_2 = nonzero_spectrum(rho2);

  const std::size_t len = std::max(report.spectrum_1.size(), report.spectrum_2.size());
  double gap = 0.0;
  for (std::size_t i = 0; i < len; ++i) {
    const double a = i < report.spectrum_1.size() ? report.spectrum_1[i] : 0.0;
    const double b = i < report.spectrum_2.size() ? report.spectrum_2[i] : 0.0;
    gap = std::max(gap, std::abs(a - b));
  }
  report.max_spectral_gap = gap;
  report.verdict = gap > tol::rank_threshold ? CounterexampleVerdict::NotUnitarilyEquivalent
                                             : CounterexampleVerdict::SpectrumConsistent;
  return report;
}

}  // namespace lueq
