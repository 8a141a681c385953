#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <variant>

#include "helpers.hpp"
#include "lueq/equivalence.hpp"
#include "lueq/errors.hpp"
#include "lueq/invariants.hpp"
#include "lueq/io.hpp"
#include "lueq/random.hpp"
#include "lueq/state.hpp"

using namespace lueq;
using testutil::max_abs_diff;
using testutil::throws_code;
using testutil::w_state;

TEST_CASE("format real") {
  CHECK(format_real(1.0) == "1.0000000000000000e+00");
  CHECK(format_real(-0.5) == "-5.0000000000000000e-01");
  CHECK(format_real(1.0 / 3.0) == "3.3333333333333331e-01");
  CHECK(format_real(0.0) == "0.0000000000000000e+00");
}

TEST_CASE("matrix documents round-trip bit-exactly") {
  const ComplexMatrix u = haar_unitary(3, 15);
  const std::string text = matrix_to_json(u, true);
  CHECK(text.find("\"kind\": \"unitary\"") != std::string::npos);
  CHECK(text.back() == '\n');

  const ComplexMatrix back = matrix_from_json(text);
  CHECK(max_abs_diff(u, back) == 0.0);
  CHECK(matrix_to_json(back, true) == text);

  const std::string plain = matrix_to_json(u, false);
  CHECK(plain.find("\"kind\": \"matrix\"") != std::string::npos);
  CHECK(matrix_to_json(matrix_from_json(plain), false) == plain);
}

TEST_CASE("pure state documents round-trip bit-exactly") {
  const PureState psi = random_state({2, 3, 2}, 19);
  const std::string text = pure_to_json(psi);

  const StateDocument doc = state_from_json(text);
  REQUIRE(std::holds_alternative<PureState>(doc));
  CHECK(pure_to_json(std::get<PureState>(doc)) == text);
  CHECK(pure_to_json(pure_from_json(text)) == text);
}

TEST_CASE("density documents round-trip bit-exactly") {
  const DensityMatrix rho = partial_trace(random_state({2, 2, 2}, 20), {2});
  const std::string text = density_to_json(rho);

  const StateDocument doc = state_from_json(text);
  REQUIRE(std::holds_alternative<DensityMatrix>(doc));
  const DensityMatrix& back = std::get<DensityMatrix>(doc);
  CHECK(back.dims() == rho.dims());
  CHECK(density_to_json(back) == text);

  CHECK(throws_code([&] { return pure_from_json(text); }, errc::bad_document));
}

TEST_CASE("fingerprint documents round-trip bit-exactly") {
  const InvariantFingerprint fp = fingerprint(w_state(), parse_split_label("12-3", 3));
  const std::string text = fingerprint_to_json(fp);
  const InvariantFingerprint back = fingerprint_from_json(text);
  CHECK(fingerprint_to_json(back) == text);
  CHECK(back.split == fp.split);
  CHECK(back.rank() == fp.rank());
  CHECK(back.generic == fp.generic);
  CHECK(compare_fingerprints(fp, back, 1e-12) == Verdict::ConsistentGeneric);
}

TEST_CASE("witness documents round-trip bit-exactly") {
  const PureState psi = random_state({2, 2, 2}, 21);
  std::vector<ComplexMatrix> units;
  for (std::size_t p = 0; p < 3; ++p) units.push_back(haar_unitary(2, 210 + p));
  const PureState psi_prime = apply_local_unitaries(psi, units);
  const LUWitness w = lift_witness(psi, psi_prime, 0, {units[1], units[2]});

  const std::string text = witness_to_json(w);
  const LUWitness back = witness_from_json(text);
  REQUIRE(back.unitaries.size() == 3);
  CHECK(witness_to_json(back) == text);
  CHECK(back.fidelity == w.fidelity);
  CHECK(back.phase == w.phase);
}

TEST_CASE("schmidt and counterexample writers emit well-formed json") {
  const std::string schmidt = schmidt_to_json("12-3", {2, 2, 2}, {0.8, 0.6});
  const nlohmann::json sj = nlohmann::json::parse(schmidt);
  CHECK(sj["kind"] == "schmidt");
  CHECK(sj["split"] == "12-3");
  CHECK(sj["coefficients"].size() == 2);

  const std::string counter = counterexample_to_json(counterexample_report());
  const nlohmann::json cj = nlohmann::json::parse(counter);
  CHECK(cj["kind"] == "counterexample");
  CHECK(cj["verdict"] == "not-unitarily-equivalent");
  CHECK(cj["spectrum_1"].size() == 2);
  CHECK(cj["reduced_residuals"].size() == 3);
}

TEST_CASE("malformed documents are rejected") {
  CHECK(throws_code([] { return matrix_from_json("not json at all"); }, errc::bad_document));
  CHECK(throws_code([] { return matrix_from_json("{\"rows\": 2}"); }, errc::bad_document));
  CHECK(throws_code([] { return matrix_from_json("{\"kind\": \"pure\"}"); }, errc::bad_document));
  CHECK(throws_code([] { return state_from_json("{\"kind\": \"pure\", \"dims\": [2, 2]}"); },
                    errc::bad_document));
  CHECK(throws_code([] { return state_from_json("{\"kind\": \"pure\", \"dims\": [2, 0]}"); },
                    errc::bad_document));

  // entry count disagrees with the declared shape
  const std::string text = matrix_to_json(ComplexMatrix::identity(2), false);
  const std::string clipped = text.substr(0, text.rfind('['));
  CHECK(throws_code([&] { return matrix_from_json(clipped); }, errc::bad_document));

  // a density document must be positive semidefinite
  ComplexMatrix half = ComplexMatrix::identity(2);
  half *= cplx(0.5);
  nlohmann::json dj = nlohmann::json::parse(density_to_json(DensityMatrix({2}, half)));
  dj["matrix"][0][0] = 1.5;
  dj["matrix"][3][0] = -0.5;
  CHECK(throws_code([&] { return state_from_json(dj.dump()); }, errc::bad_document));

  // unnormalized amplitudes fail the state's own validation
  nlohmann::json pj = nlohmann::json::parse(pure_to_json(random_state({2, 2}, 5)));
  pj["amplitudes"][0][0] = 3.0;
  CHECK_THROWS_AS(state_from_json(pj.dump()), Error);
}

TEST_CASE("text file round-trip") {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "lueq-io-test";
  fs::create_directories(dir);
  const std::string path = (dir / "doc.json").string();

  const std::string payload = "line one\nline two\n";
  write_text_file(path, payload);
  CHECK(read_text_file(path) == payload);

  CHECK(throws_code([&] { return read_text_file((dir / "missing.json").string()); },
                    errc::bad_document));
  fs::remove_all(dir);
}
