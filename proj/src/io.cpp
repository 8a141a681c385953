#include "lueq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lueq/eig.hpp"
#include "lueq/errors.hpp"
#include "lueq/tolerances.hpp"

namespace lueq {

namespace {

using nlohmann::json;

void indent(std::string& out, int depth) { out.append(static_cast<std::size_t>(depth) * 2, ' '); }

void append_complex_pair(std::string& out, cplx z) {
  out += '[';
  out += format_real(z.real());
  out += ", ";
  out += format_real(z.imag());
  out += ']';
}

// One [re, im] pair per line; long amplitude lists stay diffable.
void append_complex_lines(std::string& out, const ComplexVector& v, int depth) {
  out += "[\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    indent(out, depth + 1);
    append_complex_pair(out, v[i]);
    out += i + 1 < v.size() ? ",\n" : "\n";
  }
  indent(out, depth);
  out += ']';
}

void append_real_inline(std::string& out, const std::vector<double>& v) {
  out += '[';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += format_real(v[i]);
  }
  out += ']';
}

void append_real_lines(std::string& out, const std::vector<double>& v, int depth) {
  out += "[\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    indent(out, depth + 1);
    out += format_real(v[i]);
    out += i + 1 < v.size() ? ",\n" : "\n";
  }
  indent(out, depth);
  out += ']';
}

void append_dims_inline(std::string& out, const std::vector<std::size_t>& dims) {
  out += '[';
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(dims[i]);
  }
  out += ']';
}

void append_matrix_body(std::string& out, const ComplexMatrix& m, bool unitary_kind, int depth) {
  indent(out, depth);
  out += "{\n";
  indent(out, depth + 1);
  out += unitary_kind ? "\"kind\": \"unitary\",\n" : "\"kind\": \"matrix\",\n";
  indent(out, depth + 1);
  out += "\"rows\": " + std::to_string(m.rows()) + ",\n";
  indent(out, depth + 1);
  out += "\"cols\": " + std::to_string(m.cols()) + ",\n";
  indent(out, depth + 1);
  out += "\"entries\": ";
  append_complex_lines(out, m.entries(), depth + 1);
  out += '\n';
  indent(out, depth);
  out += '}';
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number()) fail(errc::bad_document, std::string(what) + " is not a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) fail(errc::bad_document, std::string(what) + " is not finite");
  return x;
}

cplx complex_pair(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    fail(errc::bad_document, std::string(what) + " is not an [re, im] pair");
  return cplx(finite_number(j[0], what), finite_number(j[1], what));
}

ComplexVector complex_list(const json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected)
    fail(errc::bad_document, std::string(what) + " must hold " + std::to_string(expected) +
                                 " complex entries");
  ComplexVector out;
  out.reserve(expected);
  for (const auto& item : j) out.push_back(complex_pair(item, what));
  return out;
}

std::vector<double> real_list(const json& j, std::size_t expected, const char* what) {
  if (!j.is_array() || j.size() != expected)
    fail(errc::bad_document,
         std::string(what) + " must hold " + std::to_string(expected) + " numbers");
  std::vector<double> out;
  out.reserve(expected);
  for (const auto& item : j) out.push_back(finite_number(item, what));
  return out;
}

std::vector<std::size_t> dims_list(const json& j) {
  if (!j.is_array() || j.empty()) fail(errc::bad_document, "dims must be a nonempty list");
  std::vector<std::size_t> out;
  for (const auto& item : j) {
    if (!item.is_number_unsigned() || item.get<std::uint64_t>() < 2)
      fail(errc::bad_document, "dims entries must be integers of at least 2");
    out.push_back(item.get<std::size_t>());
  }
  return out;
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(errc::bad_document, e.what());
  }
}

std::string kind_of(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    fail(errc::bad_document, "document has no kind field");
  return j["kind"].get<std::string>();
}

ComplexMatrix matrix_from_document(const json& j) {
  const std::string kind = kind_of(j);
  if (kind != "matrix" && kind != "unitary")
    fail(errc::bad_document, "expected a matrix document, found kind \"" + kind + "\"");
  if (!j.contains("rows") || !j.contains("cols") || !j["rows"].is_number_unsigned() ||
      !j["cols"].is_number_unsigned())
    fail(errc::bad_document, "matrix document needs unsigned rows and cols");
  const auto rows = j["rows"].get<std::size_t>();
  const auto cols = j["cols"].get<std::size_t>();
  if (rows == 0 || cols == 0) fail(errc::bad_document, "matrix document has an empty shape");
  if (!j.contains("entries")) fail(errc::bad_document, "matrix document has no entries");
  return ComplexMatrix(rows, cols, complex_list(j["entries"], rows * cols, "entries"));
}

}  // namespace

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.16e", x);
  return std::string(buf);
}

std::string matrix_to_json(const ComplexMatrix& m, bool unitary_kind) {
  std::string out;
  append_matrix_body(out, m, unitary_kind, 0);
  out += '\n';
  return out;
}

ComplexMatrix matrix_from_json(const std::string& text) {
  return matrix_from_document(parse_document(text));
}

std::string pure_to_json(const PureState& state) {
  std::string out = "{\n  \"kind\": \"pure\",\n  \"dims\": ";
  append_dims_inline(out, state.dims());
  out += ",\n  \"amplitudes\": ";
  append_complex_lines(out, state.amplitudes(), 1);
  out += "\n}\n";
  return out;
}

std::string density_to_json(const DensityMatrix& state) {
  std::string out = "{\n  \"kind\": \"density\",\n  \"dims\": ";
  append_dims_inline(out, state.dims());
  out += ",\n  \"matrix\": ";
  append_complex_lines(out, state.matrix().entries(), 1);
  out += "\n}\n";
  return out;
}

StateDocument state_from_json(const std::string& text) {
  const json j = parse_document(text);
  const std::string kind = kind_of(j);
  if (!j.contains("dims")) fail(errc::bad_document, "state document has no dims");
  const auto dims = dims_list(j["dims"]);
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  if (kind == "pure") {
    if (!j.contains("amplitudes")) fail(errc::bad_document, "pure document has no amplitudes");
    return PureState(dims, complex_list(j["amplitudes"], total, "amplitudes"));
  }
  if (kind == "density") {
    if (!j.contains("matrix")) fail(errc::bad_document, "density document has no matrix");
    DensityMatrix out(dims, ComplexMatrix(total, total,
                                          complex_list(j["matrix"], total * total, "matrix")));
    // Constructors check Hermiticity and trace; positivity needs a spectrum.
    const EigenSystem es = hermitian_eig(out.matrix());
    if (!es.eigenvalues.empty() && es.eigenvalues.back() < -tol::rank_threshold)
      fail(errc::bad_document, "density document is not positive semidefinite");
    return out;
  }
  fail(errc::bad_document, "expected a state document, found kind \"" + kind + "\"");
}

PureState pure_from_json(const std::string& text) {
  StateDocument doc = state_from_json(text);
  if (const PureState* p = std::get_if<PureState>(&doc)) return *p;
  fail(errc::bad_document, "expected a pure state document");
}

std::string fingerprint_to_json(const InvariantFingerprint& fp) {
  std::string out = "{\n  \"kind\": \"fingerprint\",\n  \"split\": \"" + fp.split +
                    "\",\n  \"dims\": ";
  append_dims_inline(out, fp.dims);
  out += ",\n  \"spectrum\": ";
  append_real_inline(out, fp.spectrum);
  out += ",\n  \"J\": ";
  append_real_inline(out, fp.J);
  out += ",\n  \"omega\": ";
  append_real_lines(out, fp.omega, 1);
  out += ",\n  \"theta\": ";
  append_real_lines(out, fp.theta, 1);
  out += ",\n  \"padded_size\": " + std::to_string(fp.padded_size);
  out += ",\n  \"X\": ";
  append_complex_lines(out, fp.X, 1);
  out += ",\n  \"Y\": ";
  append_complex_lines(out, fp.Y, 1);
  out += fp.generic ? ",\n  \"generic\": true" : ",\n  \"generic\": false";
  out += fp.canonical ? ",\n  \"canonical\": true" : ",\n  \"canonical\": false";
  out += ",\n  \"gap\": " + format_real(fp.gap);
  out += "\n}\n";
  return out;
}

InvariantFingerprint fingerprint_from_json(const std::string& text) {
  const json j = parse_document(text);
  if (kind_of(j) != "fingerprint") fail(errc::bad_document, "expected a fingerprint document");
  for (const char* field : {"split", "dims", "spectrum", "J", "omega", "theta", "padded_size",
                            "X", "Y", "generic", "canonical", "gap"})
    if (!j.contains(field))
      fail(errc::bad_document, std::string("fingerprint document lacks ") + field);

  InvariantFingerprint fp;
  if (!j["split"].is_string()) fail(errc::bad_document, "split must be a string");
  fp.split = j["split"].get<std::string>();
  fp.dims = dims_list(j["dims"]);
  const Bipartition split = parse_split_label(fp.split, fp.dims.size());
  if (split.left.size() != 2 || split.right.size() != 1)
    fail(errc::bad_document, "fingerprint split must pair two parties against one");
  if (!j["padded_size"].is_number_unsigned())
    fail(errc::bad_document, "padded_size must be an unsigned integer");
  fp.padded_size = j["padded_size"].get<std::size_t>();
  if (fp.padded_size != fp.dims[split.left[0]] * fp.dims[split.left[1]])
    fail(errc::bad_document, "padded_size disagrees with the split dimensions");

  if (!j["spectrum"].is_array() || j["spectrum"].empty() ||
      j["spectrum"].size() > fp.padded_size)
    fail(errc::bad_document, "spectrum length must lie between 1 and the padded size");
  fp.spectrum = real_list(j["spectrum"], j["spectrum"].size(), "spectrum");
  const std::size_t n = fp.spectrum.size();
  fp.J = real_list(j["J"], fp.padded_size, "J");
  fp.omega = real_list(j["omega"], n * n, "omega");
  fp.theta = real_list(j["theta"], n * n, "theta");
  fp.X = complex_list(j["X"], n * n * n, "X");
  fp.Y = complex_list(j["Y"], n * n * n, "Y");
  if (!j["generic"].is_boolean() || !j["canonical"].is_boolean())
    fail(errc::bad_document, "generic and canonical must be booleans");
  fp.generic = j["generic"].get<bool>();
  fp.canonical = j["canonical"].get<bool>();
  fp.gap = finite_number(j["gap"], "gap");
  return fp;
}

std::string witness_to_json(const LUWitness& w) {
  std::string out = "{\n  \"kind\": \"witness\",\n  \"unitaries\": [\n";
  for (std::size_t p = 0; p < w.unitaries.size(); ++p) {
    append_matrix_body(out, w.unitaries[p], true, 2);
    out += p + 1 < w.unitaries.size() ? ",\n" : "\n";
  }
  out += "  ],\n  \"fidelity\": " + format_real(w.fidelity);
  out += ",\n  \"phase\": ";
  append_complex_pair(out, w.phase);
  out += "\n}\n";
  return out;
}

LUWitness witness_from_json(const std::string& text) {
  const json j = parse_document(text);
  if (kind_of(j) != "witness") fail(errc::bad_document, "expected a witness document");
  if (!j.contains("unitaries") || !j["unitaries"].is_array() || j["unitaries"].empty())
    fail(errc::bad_document, "witness document needs a nonempty unitaries list");
  LUWitness w;
  for (const auto& item : j["unitaries"]) w.unitaries.push_back(matrix_from_document(item));
  if (!j.contains("fidelity") || !j.contains("phase"))
    fail(errc::bad_document, "witness document needs fidelity and phase");
  w.fidelity = finite_number(j["fidelity"], "fidelity");
  if (w.fidelity < 0.0 || w.fidelity > 1.0 + 1e-12)
    fail(errc::bad_document, "fidelity must lie in [0, 1]");
  w.phase = complex_pair(j["phase"], "phase");
  return w;
}

std::string counterexample_to_json(const CounterexampleReport& report) {
  std::string out = "{\n  \"kind\": \"counterexample\",\n  \"reduced_residuals\": ";
  append_real_inline(out, {report.reduced_residuals.begin(), report.reduced_residuals.end()});
  out += ",\n  \"spectrum_1\": ";
  append_real_inline(out, report.spectrum_1);
  out += ",\n  \"spectrum_2\": ";
  append_real_inline(out, report.spectrum_2);
  out += ",\n  \"max_spectral_gap\": " + format_real(report.max_spectral_gap);
  out += ",\n  \"verdict\": \"";
  out += counterexample_verdict_name(report.verdict);
  out += "\"\n}\n";
  return out;
}

std::string schmidt_to_json(const std::string& split, const std::vector<std::size_t>& dims,
                            const std::vector<double>& coefficients) {
  std::string out = "{\n  \"kind\": \"schmidt\",\n  \"split\": \"" + split + "\",\n  \"dims\": ";
  append_dims_inline(out, dims);
  out += ",\n  \"coefficients\": ";
  append_real_inline(out, coefficients);
  out += "\n}\n";
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::bad_document, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (!in.good() && !in.eof()) fail(errc::bad_document, "cannot read " + path);
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(errc::bad_document, "cannot open " + path + " for writing");
  out << content;
  out.flush();
  if (!out.good()) fail(errc::bad_document, "cannot write " + path);
}

}  // namespace lueq
