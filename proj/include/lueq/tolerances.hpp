#pragma once

namespace lueq::tol {

// Numeric thresholds shared across the library. Several of these are part of
// the comparison and file-format contracts, so they are pinned here rather
// than scattered as magic numbers.
inline constexpr double hermitian = 1e-10;       // symmetry defect, relative to 1 + ||H||_F
inline constexpr double unitarity = 1e-10;       // ||U'U - I||_F
inline constexpr double orthonormal = 1e-10;     // column frames fed to completion
inline constexpr double state_norm = 1e-12;      // | ||psi||_2 - 1 |
inline constexpr double rank_threshold = 1e-10;  // eigenvalues at or below count as zero
inline constexpr double degeneracy_gap = 1e-8;   // smaller spectral gaps mark a basis as non-canonical
inline constexpr double compare_default = 1e-8;  // per-entry fingerprint comparison
inline constexpr double reduced_match = 1e-8;    // reduced-state agreement required before matching
inline constexpr double fidelity_floor = 1e-6;   // reconstruction rejected below 1 - this
inline constexpr double jacobi_off = 1e-14;      // off-diagonal stop, relative to ||H||_F
inline constexpr int jacobi_max_sweeps = 100;
inline constexpr double search_accept = 1e-4;    // search certifies equivalence above 1 - this

}  // namespace lueq::tol
