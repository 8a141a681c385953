#include "lueq/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "lueq/equivalence.hpp"
#include "lueq/errors.hpp"
#include "lueq/invariants.hpp"
#include "lueq/io.hpp"
#include "lueq/random.hpp"
#include "lueq/search.hpp"
#include "lueq/state.hpp"
#include "lueq/tolerances.hpp"

namespace lueq {

namespace {

std::vector<std::size_t> parse_dims_flag(const std::string& text) {
  std::vector<std::size_t> dims;
  std::size_t value = 0;
  bool in_number = false;
  for (const char ch : text) {
    if (ch >= '0' && ch <= '9') {
      value = value * 10 + static_cast<std::size_t>(ch - '0');
      in_number = true;
    } else if (ch == ',' && in_number) {
      dims.push_back(value);
      value = 0;
      in_number = false;
    } else {
      fail(errc::invalid_party_set, "--dims expects a comma-separated list like 2,2,2");
    }
  }
  if (in_number) dims.push_back(value);
  if (dims.empty()) fail(errc::invalid_party_set, "--dims is empty");
  return dims;
}

std::vector<std::size_t> parse_trace_flag(const std::string& text) {
  std::vector<std::size_t> parties;
  for (const char ch : text) {
    if (ch == ',') continue;
    if (ch < '1' || ch > '9')
      fail(errc::invalid_party_set, "--trace expects 1-based party digits like 3 or 1,3");
    parties.push_back(static_cast<std::size_t>(ch - '1'));
  }
  if (parties.empty()) fail(errc::invalid_party_set, "--trace is empty");
  return parties;
}

void print_dims(std::ostream& os, const std::vector<std::size_t>& dims) {
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
}

void print_reals(std::ostream& os, const std::vector<double>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << format_real(v[i]);
}

void print_block(std::ostream& os, const std::vector<double>& block, std::size_t n) {
  for (std::size_t r = 0; r < n; ++r) {
    os << " ";
    for (std::size_t c = 0; c < n; ++c) os << " " << format_real(block[r * n + c]);
    os << "\n";
  }
}

void maybe_write(const std::string& path, const std::string& content, std::ostream& os) {
  if (path.empty()) return;
  write_text_file(path, content);
  os << "out: " << path << "\n";
}

struct Flags {
  std::string dims, state, split, trace, a, b, psi, psi_prime, out;
  std::vector<std::string> unitaries, witness;
  std::uint64_t seed = 1;
  std::size_t dim = 2, budget = 64, party = 1;
  double tolerance = tol::compare_default;
};

int run_random_state(const Flags& f, std::ostream& os) {
  const PureState state = random_state(parse_dims_flag(f.dims), f.seed);
  os << "dims: ";
  print_dims(os, state.dims());
  os << "\nseed: " << f.seed << "\n";
  maybe_write(f.out, pure_to_json(state), os);
  return 0;
}

int run_random_unitary(const Flags& f, std::ostream& os) {
  const ComplexMatrix u = haar_unitary(f.dim, f.seed);
  os << "dim: " << f.dim << "\nseed: " << f.seed << "\n";
  os << "unitarity_defect: " << format_real(unitarity_defect(u)) << "\n";
  maybe_write(f.out, matrix_to_json(u, true), os);
  return 0;
}

int run_apply_lu(const Flags& f, std::ostream& os) {
  const PureState state = pure_from_json(read_text_file(f.state));
  std::vector<ComplexMatrix> us;
  for (const auto& path : f.unitaries) us.push_back(matrix_from_json(read_text_file(path)));
  const PureState moved = apply_local_unitaries(state, us);
  os << "dims: ";
  print_dims(os, moved.dims());
  os << "\nunitaries: " << us.size() << "\n";
  maybe_write(f.out, pure_to_json(moved), os);
  return 0;
}

int run_reduce(const Flags& f, std::ostream& os) {
  const StateDocument doc = state_from_json(read_text_file(f.state));
  const auto traced = parse_trace_flag(f.trace);
  const DensityMatrix reduced = std::holds_alternative<PureState>(doc)
                                    ? partial_trace(std::get<PureState>(doc), traced)
                                    : partial_trace(std::get<DensityMatrix>(doc), traced);
  os << "kept dims: ";
  print_dims(os, reduced.dims());
  os << "\ntrace: " << format_real(trace(reduced.matrix()).real()) << "\n";
  maybe_write(f.out, density_to_json(reduced), os);
  return 0;
}

int run_schmidt(const Flags& f, std::ostream& os) {
  const PureState state = pure_from_json(read_text_file(f.state));
  const Bipartition split = parse_split_label(f.split, state.num_parties());
  const auto coeffs = schmidt_coefficients(state, split);
  os << "split: " << split_label(split) << "\ncoefficients: ";
  print_reals(os, coeffs);
  os << "\n";
  maybe_write(f.out, schmidt_to_json(split_label(split), state.dims(), coeffs), os);
  return 0;
}

void print_fingerprint(std::ostream& os, const InvariantFingerprint& fp) {
  os << "split: " << fp.split << "\ndims: ";
  print_dims(os, fp.dims);
  os << "\nrank: " << fp.rank() << "\nspectrum: ";
  print_reals(os, fp.spectrum);
  os << "\nJ: ";
  print_reals(os, fp.J);
  os << "\nomega:\n";
  print_block(os, fp.omega, fp.rank());
  os << "theta:\n";
  print_block(os, fp.theta, fp.rank());
  os << "generic: " << (fp.generic ? "true" : "false") << "\n";
  os << "canonical: " << (fp.canonical ? "true" : "false") << "\n";
  os << "gap: " << format_real(fp.gap) << "\n";
}

int run_fingerprint(const Flags& f, std::ostream& os) {
  const PureState state = pure_from_json(read_text_file(f.state));
  const Bipartition split = parse_split_label(f.split, state.num_parties());
  const InvariantFingerprint fp = fingerprint(state, split);
  print_fingerprint(os, fp);
  maybe_write(f.out, fingerprint_to_json(fp), os);
  return 0;
}

int run_compare(const Flags& f, std::ostream& os) {
  const InvariantFingerprint fa = fingerprint_from_json(read_text_file(f.a));
  const InvariantFingerprint fb = fingerprint_from_json(read_text_file(f.b));
  const ComparisonDetail detail = compare_fingerprints_detailed(fa, fb, f.tolerance);
  os << "verdict: " << verdict_name(detail.verdict) << "\n";
  os << "reason: " << detail.reason << "\n";
  os << "tolerance: " << format_real(f.tolerance) << "\n";
  switch (detail.verdict) {
    case Verdict::ConsistentGeneric: return 0;
    case Verdict::Distinct: return 1;
    case Verdict::Inconclusive: return 2;
  }
  return 2;
}

int run_match_purification(const Flags& f, std::ostream& os) {
  const PureState psi = pure_from_json(read_text_file(f.psi));
  const PureState psi_prime = pure_from_json(read_text_file(f.psi_prime));
  if (f.party < 1 || f.party > psi.num_parties())
    fail(errc::invalid_party_set, "--party is out of range");
  const std::size_t j = f.party - 1;
  const ComplexMatrix w = match_purification(psi, psi_prime, j);
  std::vector<ComplexMatrix> action;
  for (std::size_t p = 0; p < psi.num_parties(); ++p)
    action.push_back(p == j ? w : ComplexMatrix::identity(psi.dims()[p]));
  os << "party: " << f.party << "\n";
  os << "fidelity: " << format_real(check_lu_fidelity(psi, psi_prime, action)) << "\n";
  maybe_write(f.out, matrix_to_json(w, true), os);
  return 0;
}

int run_lift_witness(const Flags& f, std::ostream& os) {
  const PureState psi = pure_from_json(read_text_file(f.psi));
  const PureState psi_prime = pure_from_json(read_text_file(f.psi_prime));
  if (f.party < 1 || f.party > psi.num_parties())
    fail(errc::invalid_party_set, "--party is out of range");
  std::vector<ComplexMatrix> partial;
  for (const auto& path : f.witness) partial.push_back(matrix_from_json(read_text_file(path)));
  const LUWitness w = lift_witness(psi, psi_prime, f.party - 1, partial);
  os << "party: " << f.party << "\n";
  os << "fidelity: " << format_real(w.fidelity) << "\n";
  os << "phase: " << format_real(w.phase.real()) << " " << format_real(w.phase.imag()) << "\n";
  maybe_write(f.out, witness_to_json(w), os);
  return 0;
}

int run_search_lu(const Flags& f, std::ostream& os) {
  const PureState psi = pure_from_json(read_text_file(f.psi));
  const PureState psi_prime = pure_from_json(read_text_file(f.psi_prime));
  const LUWitness w = search_lu(psi, psi_prime, f.budget, f.seed);
  const bool accepted = w.fidelity >= 1.0 - tol::search_accept;
  os << "budget: " << f.budget << "\nseed: " << f.seed << "\n";
  os << "fidelity: " << format_real(w.fidelity) << "\n";
  os << "phase: " << format_real(w.phase.real()) << " " << format_real(w.phase.imag()) << "\n";
  os << "equivalent: " << (accepted ? "true" : "false") << "\n";
  maybe_write(f.out, witness_to_json(w), os);
  return accepted ? 0 : 2;  // a failed search never certifies distinctness
}

int run_counterexample(const Flags& f, std::ostream& os) {
  const CounterexampleReport report = counterexample_report();
  for (std::size_t p = 0; p < 3; ++p)
    os << "reduced_residual_" << p + 1 << ": " << format_real(report.reduced_residuals[p])
       << "\n";
  os << "spectrum_1: ";
  print_reals(os, report.spectrum_1);
  os << "\nspectrum_2: ";
  print_reals(os, report.spectrum_2);
  os << "\nmax_spectral_gap: " << format_real(report.max_spectral_gap) << "\n";
  os << "verdict: " << counterexample_verdict_name(report.verdict) << "\n";
  maybe_write(f.out, counterexample_to_json(report), os);
  return 0;
}

}  // namespace

CommandOutcome dispatch(const std::vector<std::string>& args) {
  CLI::App app{"local-unitary equivalence toolkit"};
  app.name("lueq");
  app.require_subcommand(1);
  Flags f;

  CLI::App* random_state_cmd = app.add_subcommand("random-state", "sample a random pure state");
  random_state_cmd->add_option("--dims", f.dims, "party dimensions, e.g. 2,2,2")->required();
  random_state_cmd->add_option("--seed", f.seed, "rng seed");
  random_state_cmd->add_option("--out", f.out, "write the state document here");

  CLI::App* random_unitary_cmd = app.add_subcommand("random-unitary", "sample a Haar unitary");
  random_unitary_cmd->add_option("--dim", f.dim, "matrix dimension")->required();
  random_unitary_cmd->add_option("--seed", f.seed, "rng seed");
  random_unitary_cmd->add_option("--out", f.out, "write the matrix document here");

  CLI::App* apply_cmd = app.add_subcommand("apply-lu", "apply one unitary per party");
  apply_cmd->add_option("--state", f.state, "pure state document")->required();
  apply_cmd->add_option("--unitaries", f.unitaries, "matrix documents, one per party")
      ->required()
      ->expected(-1);
  apply_cmd->add_option("--out", f.out, "write the rotated state here");

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "partial trace");
  reduce_cmd->add_option("--state", f.state, "state document (pure or density)")->required();
  reduce_cmd->add_option("--trace", f.trace, "parties to trace out, 1-based digits")->required();
  reduce_cmd->add_option("--out", f.out, "write the reduced density document here");

  CLI::App* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt coefficients of a split");
  schmidt_cmd->add_option("--state", f.state, "pure state document")->required();
  schmidt_cmd->add_option("--split", f.split, "bipartition label, e.g. 12-3")->required();
  schmidt_cmd->add_option("--out", f.out, "write the coefficient document here");

  CLI::App* fingerprint_cmd =
      app.add_subcommand("fingerprint", "invariant fingerprint of a tripartite split");
  fingerprint_cmd->add_option("--state", f.state, "pure state document")->required();
  fingerprint_cmd->add_option("--split", f.split, "bipartition label, e.g. 12-3")->required();
  fingerprint_cmd->add_option("--tol", f.tolerance, "comparison tolerance recorded in the report");
  fingerprint_cmd->add_option("--out", f.out, "write the fingerprint document here");

  CLI::App* compare_cmd = app.add_subcommand("compare", "compare two fingerprints");
  compare_cmd->add_option("--a", f.a, "first fingerprint document")->required();
  compare_cmd->add_option("--b", f.b, "second fingerprint document")->required();
  compare_cmd->add_option("--tol", f.tolerance, "per-entry tolerance");

  CLI::App* match_cmd =
      app.add_subcommand("match-purification", "recover the unitary linking two purifications");
  match_cmd->add_option("--psi", f.psi, "first pure state")->required();
  match_cmd->add_option("--psi-prime", f.psi_prime, "second pure state")->required();
  match_cmd->add_option("--party", f.party, "1-based party carrying the unitary")->required();
  match_cmd->add_option("--out", f.out, "write the recovered unitary here");

  CLI::App* lift_cmd =
      app.add_subcommand("lift-witness", "extend a reduced-state witness to all parties");
  lift_cmd->add_option("--psi", f.psi, "first pure state")->required();
  lift_cmd->add_option("--psi-prime", f.psi_prime, "second pure state")->required();
  lift_cmd->add_option("--party", f.party, "1-based party the witness skips")->required();
  lift_cmd->add_option("--witness", f.witness, "matrix documents for the other parties")
      ->required()
      ->expected(-1);
  lift_cmd->add_option("--out", f.out, "write the full witness here");

  CLI::App* search_cmd = app.add_subcommand("search-lu", "numerically search for an LU witness");
  search_cmd->add_option("--psi", f.psi, "first pure state")->required();
  search_cmd->add_option("--psi-prime", f.psi_prime, "second pure state")->required();
  search_cmd->add_option("--budget", f.budget, "restart count");
  search_cmd->add_option("--seed", f.seed, "rng seed");
  search_cmd->add_option("--out", f.out, "write the best witness here");

  CLI::App* counter_cmd =
      app.add_subcommand("counterexample", "reduced states do not determine a mixed state");
  counter_cmd->add_option("--out", f.out, "write the report document here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  std::ostringstream os;
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return {0, app.help()};
  } catch (const CLI::ParseError& e) {
    return {3, std::string("error: ") + e.what() + "\n"};
  }

  try {
    if (random_state_cmd->parsed()) return {run_random_state(f, os), os.str()};
    if (random_unitary_cmd->parsed()) return {run_random_unitary(f, os), os.str()};
    if (apply_cmd->parsed()) return {run_apply_lu(f, os), os.str()};
    if (reduce_cmd->parsed()) return {run_reduce(f, os), os.str()};
    if (schmidt_cmd->parsed()) return {run_schmidt(f, os), os.str()};
    if (fingerprint_cmd->parsed()) return {run_fingerprint(f, os), os.str()};
    if (compare_cmd->parsed()) return {run_compare(f, os), os.str()};
    if (match_cmd->parsed()) return {run_match_purification(f, os), os.str()};
    if (lift_cmd->parsed()) return {run_lift_witness(f, os), os.str()};
    if (search_cmd->parsed()) return {run_search_lu(f, os), os.str()};
    if (counter_cmd->parsed()) return {run_counterexample(f, os), os.str()};
  } catch (const Error& e) {
    return {is_input_error(e.code()) ? 3 : 4, std::string("error: ") + e.what() + "\n"};
  }
  return {3, "error: no command given\n"};
}

}  // namespace lueq
