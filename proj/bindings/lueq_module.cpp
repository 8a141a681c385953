#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <cstddef>
#include <vector>

#include "lueq/complex_matrix.hpp"
#include "lueq/eig.hpp"
#include "lueq/equivalence.hpp"
#include "lueq/errors.hpp"
#include "lueq/invariants.hpp"
#include "lueq/random.hpp"
#include "lueq/search.hpp"
#include "lueq/state.hpp"
#include "lueq/tolerances.hpp"

namespace py = pybind11;

namespace {

using lueq::ComplexMatrix;
using lueq::ComplexVector;
using lueq::cplx;

using complex_array = py::array_t<cplx, py::array::c_style | py::array::forcecast>;

ComplexMatrix matrix_from_array(const complex_array& arr) {
  if (arr.ndim() != 2) throw py::value_error("expected a 2-d complex array");
  auto view = arr.unchecked<2>();
  ComplexMatrix m(static_cast<std::size_t>(view.shape(0)), static_cast<std::size_t>(view.shape(1)));
  for (py::ssize_t r = 0; r < view.shape(0); ++r)
    for (py::ssize_t c = 0; c < view.shape(1); ++c)
      m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = view(r, c);
  return m;
}

std::vector<ComplexMatrix> matrices_from_arrays(const std::vector<complex_array>& arrays) {
  std::vector<ComplexMatrix> out;
  out.reserve(arrays.size());
  for (const auto& arr : arrays) out.push_back(matrix_from_array(arr));
  return out;
}

py::array_t<cplx> array_from_matrix(const ComplexMatrix& m) {
  py::array_t<cplx> arr({m.rows(), m.cols()});
  auto view = arr.mutable_unchecked<2>();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) view(static_cast<py::ssize_t>(r), static_cast<py::ssize_t>(c)) = m(r, c);
  return arr;
}

ComplexVector vector_from_array(const complex_array& arr) {
  if (arr.ndim() != 1) throw py::value_error("expected a 1-d complex array");
  auto view = arr.unchecked<1>();
  ComplexVector v(static_cast<std::size_t>(view.shape(0)));
  for (py::ssize_t i = 0; i < view.shape(0); ++i) v[static_cast<std::size_t>(i)] = view(i);
  return v;
}

py::array_t<cplx> array_from_vector(const ComplexVector& v) {
  py::array_t<cplx> arr(static_cast<py::ssize_t>(v.size()));
  auto view = arr.mutable_unchecked<1>();
  for (std::size_t i = 0; i < v.size(); ++i) view(static_cast<py::ssize_t>(i)) = v[i];
  return arr;
}

py::array_t<double> array_from_reals(const std::vector<double>& v) {
  py::array_t<double> arr(static_cast<py::ssize_t>(v.size()));
  auto view = arr.mutable_unchecked<1>();
  for (std::size_t i = 0; i < v.size(); ++i) view(static_cast<py::ssize_t>(i)) = v[i];
  return arr;
}

py::array_t<double> square_from_reals(const std::vector<double>& v, std::size_t n) {
  py::array_t<double> arr({n, n});
  auto view = arr.mutable_unchecked<2>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j)) = v[i * n + j];
  return arr;
}

py::array_t<cplx> cube_from_complex(const std::vector<cplx>& v, std::size_t n) {
  py::array_t<cplx> arr({n, n, n});
  auto view = arr.mutable_unchecked<3>();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        view(static_cast<py::ssize_t>(i), static_cast<py::ssize_t>(j), static_cast<py::ssize_t>(k)) =
            v[(i * n + j) * n + k];
  return arr;
}

lueq::Bipartition split_from_label(const std::string& label, std::size_t num_parties) {
  return lueq::parse_split_label(label, num_parties);
}

}  // namespace

PYBIND11_MODULE(lueq, m) {
  m.doc() =
      "Local-unitary invariants and witness recovery for multipartite pure "
      "states. Party indices are 0-based; split labels use 1-based digits "
      "(\"12-3\") to match the file formats.";

  py::register_exception<lueq::Error>(m, "Error");

  py::class_<lueq::PureState>(m, "PureState")
      .def(py::init([](const std::vector<std::size_t>& dims, const complex_array& amplitudes) {
             return lueq::PureState(dims, vector_from_array(amplitudes));
           }),
           py::arg("dims"), py::arg("amplitudes"),
           "Unit-norm state vector over the given local dimensions, party 0 "
           "varying slowest.")
      .def_static(
          "normalized",
          [](const std::vector<std::size_t>& dims, const complex_array& amplitudes) {
            return lueq::PureState::normalized(dims, vector_from_array(amplitudes));
          },
          py::arg("dims"), py::arg("amplitudes"), "Scales the amplitudes to unit norm first.")
      .def_property_readonly("dims", [](const lueq::PureState& s) { return s.dims(); })
      .def_property_readonly("amplitudes",
                             [](const lueq::PureState& s) { return array_from_vector(s.amplitudes()); })
      .def_property_readonly("num_parties", &lueq::PureState::num_parties)
      .def_property_readonly("hilbert_dim", &lueq::PureState::hilbert_dim)
      .def("__repr__", [](const lueq::PureState& s) {
        std::string out = "PureState(dims=[";
        for (std::size_t i = 0; i < s.dims().size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(s.dims()[i]);
        }
        return out + "])";
      });

  py::class_<lueq::DensityMatrix>(m, "DensityMatrix")
      .def(py::init([](const std::vector<std::size_t>& dims, const complex_array& matrix) {
             return lueq::DensityMatrix(dims, matrix_from_array(matrix));
           }),
           py::arg("dims"), py::arg("matrix"),
           "Hermitian unit-trace matrix over the given local dimensions.")
      .def_property_readonly("dims", [](const lueq::DensityMatrix& s) { return s.dims(); })
      .def_property_readonly("matrix",
                             [](const lueq::DensityMatrix& s) { return array_from_matrix(s.matrix()); })
      .def_property_readonly("num_parties", &lueq::DensityMatrix::num_parties)
      .def_property_readonly("hilbert_dim", &lueq::DensityMatrix::hilbert_dim)
      .def("__repr__", [](const lueq::DensityMatrix& s) {
        std::string out = "DensityMatrix(dims=[";
        for (std::size_t i = 0; i < s.dims().size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(s.dims()[i]);
        }
        return out + "])";
      });

  py::enum_<lueq::Verdict>(m, "Verdict")
      .value("Distinct", lueq::Verdict::Distinct)
      .value("ConsistentGeneric", lueq::Verdict::ConsistentGeneric)
      .value("Inconclusive", lueq::Verdict::Inconclusive);

  py::class_<lueq::InvariantFingerprint>(m, "Fingerprint")
      .def_readonly("split", &lueq::InvariantFingerprint::split)
      .def_readonly("dims", &lueq::InvariantFingerprint::dims)
      .def_property_readonly("spectrum",
                             [](const lueq::InvariantFingerprint& f) { return array_from_reals(f.spectrum); })
      .def_property_readonly("J", [](const lueq::InvariantFingerprint& f) { return array_from_reals(f.J); })
      .def_property_readonly("omega",
                             [](const lueq::InvariantFingerprint& f) { return square_from_reals(f.omega, f.rank()); })
      .def_property_readonly("theta",
                             [](const lueq::InvariantFingerprint& f) { return square_from_reals(f.theta, f.rank()); })
      .def_readonly("padded_size", &lueq::InvariantFingerprint::padded_size)
      .def_property_readonly("X",
                             [](const lueq::InvariantFingerprint& f) { return cube_from_complex(f.X, f.rank()); })
      .def_property_readonly("Y",
                             [](const lueq::InvariantFingerprint& f) { return cube_from_complex(f.Y, f.rank()); })
      .def_readonly("generic", &lueq::InvariantFingerprint::generic)
      .def_readonly("canonical", &lueq::InvariantFingerprint::canonical)
      .def_readonly("gap", &lueq::InvariantFingerprint::gap)
      .def_property_readonly("rank", &lueq::InvariantFingerprint::rank)
      .def("__repr__", [](const lueq::InvariantFingerprint& f) {
        return "Fingerprint(split='" + f.split + "', rank=" + std::to_string(f.rank()) + ")";
      });

  py::class_<lueq::LUWitness>(m, "Witness")
      .def_property_readonly("unitaries",
                             [](const lueq::LUWitness& w) {
                               std::vector<py::array_t<cplx>> out;
                               out.reserve(w.unitaries.size());
                               for (const auto& u : w.unitaries) out.push_back(array_from_matrix(u));
                               return out;
                             })
      .def_readonly("fidelity", &lueq::LUWitness::fidelity)
      .def_readonly("phase", &lueq::LUWitness::phase)
      .def("__repr__", [](const lueq::LUWitness& w) {
        return "Witness(parties=" + std::to_string(w.unitaries.size()) +
               ", fidelity=" + std::to_string(w.fidelity) + ")";
      });

  py::enum_<lueq::CounterexampleVerdict>(m, "CounterexampleVerdict")
      .value("SpectrumConsistent", lueq::CounterexampleVerdict::SpectrumConsistent)
      .value("NotUnitarilyEquivalent", lueq::CounterexampleVerdict::NotUnitarilyEquivalent);

  py::class_<lueq::CounterexampleReport>(m, "CounterexampleReport")
      .def_property_readonly("reduced_residuals",
                             [](const lueq::CounterexampleReport& r) {
                               return std::vector<double>(r.reduced_residuals.begin(), r.reduced_residuals.end());
                             })
      .def_property_readonly("spectrum_1",
                             [](const lueq::CounterexampleReport& r) { return array_from_reals(r.spectrum_1); })
      .def_property_readonly("spectrum_2",
                             [](const lueq::CounterexampleReport& r) { return array_from_reals(r.spectrum_2); })
      .def_readonly("max_spectral_gap", &lueq::CounterexampleReport::max_spectral_gap)
      .def_readonly("verdict", &lueq::CounterexampleReport::verdict);

  m.def(
      "random_state",
      [](const std::vector<std::size_t>& dims, std::uint64_t seed) { return lueq::random_state(dims, seed); },
      py::arg("dims"), py::arg("seed"), "Haar-uniform pure state, deterministic in the seed.");

  m.def(
      "haar_unitary",
      [](std::size_t dim, std::uint64_t seed) { return array_from_matrix(lueq::haar_unitary(dim, seed)); },
      py::arg("dim"), py::arg("seed"), "Haar-distributed unitary, deterministic in the seed.");

  m.def(
      "hermitian_eig",
      [](const complex_array& h) {
        lueq::EigenSystem sys = lueq::hermitian_eig(matrix_from_array(h));
        return py::make_tuple(array_from_reals(sys.eigenvalues), array_from_matrix(sys.eigenvectors));
      },
      py::arg("matrix"),
      "Eigenvalues (descending) and eigenvector columns of a Hermitian matrix.");

  m.def(
      "complete_to_unitary",
      [](const complex_array& frame) { return array_from_matrix(lueq::complete_to_unitary(matrix_from_array(frame))); },
      py::arg("columns"), "Extends orthonormal columns to a full unitary.");

  m.def(
      "partial_trace",
      [](const lueq::PureState& state, const std::vector<std::size_t>& traced) {
        return lueq::partial_trace(state, traced);
      },
      py::arg("state"), py::arg("traced"), "Reduced state after tracing out the listed parties (0-based).");

  m.def(
      "partial_trace",
      [](const lueq::DensityMatrix& state, const std::vector<std::size_t>& traced) {
        return lueq::partial_trace(state, traced);
      },
      py::arg("state"), py::arg("traced"));

  m.def(
      "pure_to_density", [](const lueq::PureState& state) { return lueq::pure_to_density(state); },
      py::arg("state"));

  m.def(
      "bipartition_matrix",
      [](const lueq::PureState& state, const std::string& split) {
        return array_from_matrix(lueq::bipartition_matrix(state, split_from_label(split, state.num_parties())));
      },
      py::arg("state"), py::arg("split"),
      "Amplitudes reshaped to rows indexed by the left side of the split.");

  m.def(
      "apply_local_unitaries",
      [](const lueq::PureState& state, const std::vector<complex_array>& unitaries) {
        return lueq::apply_local_unitaries(state, matrices_from_arrays(unitaries));
      },
      py::arg("state"), py::arg("unitaries"), "One unitary per party, applied in place.");

  m.def(
      "schmidt_coefficients",
      [](const lueq::PureState& state, const std::string& split) {
        return array_from_reals(lueq::schmidt_coefficients(state, split_from_label(split, state.num_parties())));
      },
      py::arg("state"), py::arg("split"), "Descending, truncated at the rank threshold.");

  m.def(
      "fingerprint",
      [](const lueq::PureState& state, const std::string& split) {
        return lueq::fingerprint(state, split_from_label(split, state.num_parties()));
      },
      py::arg("state"), py::arg("split"),
      "Invariant fingerprint of a tripartite pure state across the given split.");

  m.def(
      "compare_fingerprints",
      [](const lueq::InvariantFingerprint& a, const lueq::InvariantFingerprint& b, double tolerance) {
        return lueq::compare_fingerprints(a, b, tolerance);
      },
      py::arg("a"), py::arg("b"), py::arg("tolerance") = lueq::tol::compare_default);

  m.def(
      "compare_fingerprints_detailed",
      [](const lueq::InvariantFingerprint& a, const lueq::InvariantFingerprint& b, double tolerance) {
        lueq::ComparisonDetail detail = lueq::compare_fingerprints_detailed(a, b, tolerance);
        return py::make_tuple(detail.verdict, detail.reason);
      },
      py::arg("a"), py::arg("b"), py::arg("tolerance") = lueq::tol::compare_default,
      "Verdict plus the first offending field, as a pair.");

  m.def(
      "check_lu_fidelity",
      [](const lueq::PureState& psi, const lueq::PureState& psi_prime, const std::vector<complex_array>& unitaries) {
        return lueq::check_lu_fidelity(psi, psi_prime, matrices_from_arrays(unitaries));
      },
      py::arg("psi"), py::arg("psi_prime"), py::arg("unitaries"));

  m.def(
      "match_purification",
      [](const lueq::PureState& psi, const lueq::PureState& psi_prime, std::size_t party) {
        return array_from_matrix(lueq::match_purification(psi, psi_prime, party));
      },
      py::arg("psi"), py::arg("psi_prime"), py::arg("party"),
      "Single-party unitary mapping psi to psi_prime when the two agree after "
      "tracing out that party (0-based).");

  m.def(
      "lift_witness",
      [](const lueq::PureState& psi, const lueq::PureState& psi_prime, std::size_t party,
         const std::vector<complex_array>& witness) {
        return lueq::lift_witness(psi, psi_prime, party, matrices_from_arrays(witness));
      },
      py::arg("psi"), py::arg("psi_prime"), py::arg("party"), py::arg("witness"),
      "Completes a witness acting on every party except `party` (0-based) into "
      "a full witness.");

  m.def(
      "search_lu",
      [](const lueq::PureState& psi, const lueq::PureState& psi_prime, std::size_t budget, std::uint64_t seed) {
        return lueq::search_lu(psi, psi_prime, budget, seed);
      },
      py::arg("psi"), py::arg("psi_prime"), py::arg("budget") = 64, py::arg("seed") = 1,
      "Best local-unitary witness found by seeded coordinate descent.");

  m.def("counterexample_report", &lueq::counterexample_report,
        "Fixed pair of mixed states with matching two-party reductions and "
        "different spectra.");

  m.attr("__version__") = "0.1.0";
}
