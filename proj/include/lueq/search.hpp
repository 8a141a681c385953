#pragma once

#include <cstdint>

#include "lueq/equivalence.hpp"

namespace lueq {

// Brute-force maximization of check_lu_fidelity over products of local
// unitary groups. Each U_j is exp(i H_j) with H_j Hermitian, built from
// d_j^2 real parameters; the optimizer is coordinate-wise derivative-free
// descent (coarse scan plus golden-section refinement on each coordinate,
// with a shrinking trust window) from `budget` restarts. Restart 0 starts
// at the identity; the rest start at seeded uniform parameters. The result
// is deterministic in (inputs, budget, seed) and independent of the order
// restarts run in: best fidelity wins, ties go to the lowest restart index.
//
// A high fidelity certifies equivalence to that tolerance. A low one
// certifies nothing by itself; use fingerprints for distinctness.
LUWitness search_lu(const PureState& psi, const PureState& psi_prime, std::size_t budget,
                    std::uint64_t seed);

}  // namespace lueq
