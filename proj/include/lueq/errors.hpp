#pragma once

#include <stdexcept>
#include <string>

namespace lueq {

enum class errc {
  not_square,
  not_hermitian,
  not_orthonormal,
  not_unitary,
  dimension_mismatch,
  invalid_party_set,
  not_bipartite,
  not_tripartite,
  split_mismatch,
  dimension_too_large,
  bad_document,
  reduced_mismatch,
  witness_mismatch,
  reconstruction_failed,
  no_convergence,
};

const char* errc_name(errc code);

// Input errors are precondition violations detectable from the arguments;
// everything else is a numerical failure. The CLI maps the two classes to
// different exit codes.
bool is_input_error(errc code);

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] void fail(errc code, const std::string& message);

}  // namespace lueq
