#pragma once

#include <string>
#include <variant>
#include <vector>

#include "lueq/complex_matrix.hpp"
#include "lueq/equivalence.hpp"
#include "lueq/invariants.hpp"
#include "lueq/state.hpp"

namespace lueq {

// On-disk documents are JSON with a fixed key order, LF line endings, and
// every real written as %.16e (17 significant digits), so identical values
// serialize to identical bytes and every reader round-trips bit-exactly.
// Readers reject malformed or inconsistent documents with bad-document.

std::string format_real(double x);

std::string matrix_to_json(const ComplexMatrix& m, bool unitary_kind);
ComplexMatrix matrix_from_json(const std::string& text);

std::string pure_to_json(const PureState& state);
std::string density_to_json(const DensityMatrix& state);

using StateDocument = std::variant<PureState, DensityMatrix>;
StateDocument state_from_json(const std::string& text);
PureState pure_from_json(const std::string& text);

std::string fingerprint_to_json(const InvariantFingerprint& fp);
InvariantFingerprint fingerprint_from_json(const std::string& text);

std::string witness_to_json(const LUWitness& w);
LUWitness witness_from_json(const std::string& text);

std::string counterexample_to_json(const CounterexampleReport& report);

std::string schmidt_to_json(const std::string& split, const std::vector<std::size_t>& dims,
                            const std::vector<double>& coefficients);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace lueq
