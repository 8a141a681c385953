#include "lueq/errors.hpp"

namespace lueq {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_square: return "not-square";
    case errc::not_hermitian: return "not-hermitian";
    case errc::not_orthonormal: return "not-orthonormal";
    case errc::not_unitary: return "not-unitary";
    case errc::dimension_mismatch: return "dimension-mismatch";
    case errc::invalid_party_set: return "invalid-party-set";
    case errc::not_bipartite: return "not-bipartite";
    case errc::not_tripartite: return "not-tripartite";
    case errc::split_mismatch: return "split-mismatch";
    case errc::dimension_too_large: return "dimension-too-large";
    case errc::bad_document: return "bad-document";
    case errc::reduced_mismatch: return "reduced-mismatch";
    case errc::witness_mismatch: return "witness-mismatch";
    case errc::reconstruction_failed: return "reconstruction-failed";
    case errc::no_convergence: return "no-convergence";
  }
  return "unknown";
}

bool is_input_error(errc code) {
  switch (code) {
    case errc::reduced_mismatch:
    case errc::witness_mismatch:
    case errc::reconstruction_failed:
    case errc::no_convergence:
      return false;
    default:
      return true;
  }
}

void fail(errc code, const std::string& message) { throw Error(code, message); }

}  // namespace lueq
