#pragma once

#include <array>
#include <vector>

#include "lueq/complex_matrix.hpp"
#include "lueq/state.hpp"

namespace lueq {

struct LUWitness {
  std::vector<ComplexMatrix> unitaries;  // one per party
  double fidelity = 0.0;
  cplx phase = cplx(1.0, 0.0);  // <psi'|(x)U|psi> normalized to unit modulus
};

// |<psi'|(U_1 x ... x U_n)|psi>|, clamped into [0, 1].
double check_lu_fidelity(const PureState& psi, const PureState& psi_prime,
                         const std::vector<ComplexMatrix>& unitaries);

// Recovers the single local unitary W on party j that maps psi to psi_prime,
// given that the two states have the same reduced matrix on the other
// parties. Works by matching the party-j slices of each eigenvector of the
// shared reduced matrix; degenerate eigenvalue blocks are matched as whole
// subspaces, and the result is certified by a fidelity check afterwards.
ComplexMatrix match_purification(const PureState& psi, const PureState& psi_prime, std::size_t j);

// Completes a witness that acts on every party except j into a full witness,
// by rotating psi with it and recovering the missing factor via
// match_purification. The witness unitaries are given in party order with
// party j skipped.
LUWitness lift_witness(const PureState& psi, const PureState& psi_prime, std::size_t j,
                       const std::vector<ComplexMatrix>& witness);

enum class CounterexampleVerdict { SpectrumConsistent, NotUnitarilyEquivalent };

const char* counterexample_verdict_name(CounterexampleVerdict v);

// Two fixed rank-2 mixtures of GHZ-like states that agree on every two-party
// reduced matrix yet have different global spectra, so no unitary of any
// kind maps one to the other. Demonstrates that matching reduced states on
// all bipartitions certifies nothing for mixed states.
struct CounterexampleReport {
  std::array<double, 3> reduced_residuals{};  // traced party 1, 2, 3
  std::vector<double> spectrum_1;             // nonzero parts, descending
  std::vector<double> spectrum_2;
  double max_spectral_gap = 0.0;
  CounterexampleVerdict verdict = CounterexampleVerdict::SpectrumConsistent;
};

CounterexampleReport counterexample_report();

}  // namespace lueq
