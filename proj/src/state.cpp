#include "lueq/state.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lueq/eig.hpp"
#include "lueq/errors.hpp"
#include "lueq/random.hpp"
#include "lueq/tolerances.hpp"

namespace lueq {

namespace {

std::size_t product(const std::vector<std::size_t>& dims) {
  std::size_t p = 1;
  for (std::size_t d : dims) p *= d;
  return p;
}

void validate_dims(const std::vector<std::size_t>& dims) {
  if (dims.empty()) fail(errc::invalid_party_set, "need at least one party");
  for (std::size_t d : dims)
    if (d < 2) fail(errc::invalid_party_set, "every party dimension must be at least 2");
}

// stride[p] = product of dims after p; party 0 varies slowest.
std::vector<std::size_t> strides_for(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> s(dims.size(), 1);
  for (std::size_t p = dims.size(); p-- > 1;) s[p - 1] = s[p] * dims[p];
  return s;
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& parties,
                                       std::size_t num_parties) {
  std::vector<bool> in(num_parties, false);
  for (std::size_t p : parties) in[p] = true;
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < num_parties; ++p)
    if (!in[p]) out.push_back(p);
  return out;
}

void validate_party_list(const std::vector<std::size_t>& parties, std::size_t num_parties,
                         const char* what) {
  if (parties.empty()) fail(errc::invalid_party_set, std::string(what) + " is empty");
  std::vector<bool> seen(num_parties, false);
  for (std::size_t p : parties) {
    if (p >= num_parties)
      fail(errc::invalid_party_set, std::string(what) + " names party " + std::to_string(p + 1) +
                                        " of " + std::to_string(num_parties));
    if (seen[p]) fail(errc::invalid_party_set, std::string(what) + " repeats a party");
    seen[p] = true;
  }
}

}  // namespace

PureState::PureState(std::vector<std::size_t> dims, ComplexVector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  validate_dims(dims_);
  if (amplitudes_.size() != product(dims_))
    fail(errc::dimension_mismatch, "amplitude count does not match the party dimensions");
  if (!all_finite(amplitudes_)) fail(errc::bad_document, "amplitudes contain non-finite values");
  if (std::abs(norm2(amplitudes_) - 1.0) > tol::state_norm)
    fail(errc::dimension_mismatch, "state is not normalized");
}

PureState PureState::normalized(std::vector<std::size_t> dims, ComplexVector amplitudes) {
  const double len = norm2(amplitudes);
  if (len <= 0.0 || !std::isfinite(len))
    fail(errc::dimension_mismatch, "cannot normalize a zero state");
  for (auto& z : amplitudes) z /= len;
  return PureState(std::move(dims), std::move(amplitudes));
}

DensityMatrix::DensityMatrix(std::vector<std::size_t> dims, ComplexMatrix matrix)
    : dims_(std::move(dims)), matrix_(std::move(matrix)) {
  validate_dims(dims_);
  if (!matrix_.square() || matrix_.rows() != product(dims_))
    fail(errc::dimension_mismatch, "matrix shape does not match the party dimensions");
  if (!all_finite(matrix_)) fail(errc::bad_document, "matrix contains non-finite values");
  const double scale = 1.0 + frobenius_norm(matrix_);
  if (hermiticity_defect(matrix_) > tol::hermitian * scale)
    fail(errc::not_hermitian, "density matrix is not Hermitian");
  const cplx tr = trace(matrix_);
  if (std::abs(tr.real() - 1.0) > 1e-10 || std::abs(tr.imag()) > 1e-10)
    fail(errc::dimension_mismatch, "density matrix trace is not 1");
}

Bipartition parse_split_label(const std::string& label, std::size_t num_parties) {
  const auto dash = label.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == label.size())
    fail(errc::invalid_party_set, "split label must look like \"12-3\"");
  Bipartition split;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i == dash) continue;
    const char ch = label[i];
    if (ch < '1' || ch > '9')
      fail(errc::invalid_party_set, std::string("bad character '") + ch + "' in split label");
    const std::size_t party = static_cast<std::size_t>(ch - '1');
    (i < dash ? split.left : split.right).push_back(party);
  }
  std::sort(split.left.begin(), split.left.end());
  std::sort(split.right.begin(), split.right.end());
  validate_bipartition(split, num_parties);
  return split;
}

std::string split_label(const Bipartition& split) {
  std::string out;
  for (std::size_t p : split.left) out += static_cast<char>('1' + p);
  out += '-';
  for (std::size_t p : split.right) out += static_cast<char>('1' + p);
  return out;
}

void validate_bipartition(const Bipartition& split, std::size_t num_parties) {
  validate_party_list(split.left, num_parties, "left side");
  validate_party_list(split.right, num_parties, "right side");
  if (split.left.size() + split.right.size() != num_parties)
    fail(errc::invalid_party_set, "bipartition does not cover every party exactly once");
  for (std::size_t p : split.left)
    if (std::find(split.right.begin(), split.right.end(), p) != split.right.end())
      fail(errc::invalid_party_set, "party " + std::to_string(p + 1) + " appears on both sides");
}

ComplexMatrix bipartition_matrix(const PureState& state, const Bipartition& split) {
  validate_bipartition(split, state.num_parties());
  const auto& dims = state.dims();
  const auto strides = strides_for(dims);

  std::size_t rows = 1, cols = 1;
  for (std::size_t p : split.left) rows *= dims[p];
  for (std::size_t p : split.right) cols *= dims[p];

  // Per-party contribution of each digit to (row, col), in the given order.
  struct Leg {
    std::size_t stride_in, dim;
    bool to_row;
    std::size_t stride_out;
  };
  std::vector<Leg> legs;
  std::size_t acc = rows;
  for (std::size_t p : split.left) {
    acc /= dims[p];
    legs.push_back({strides[p], dims[p], true, acc});
  }
  acc = cols;
  for (std::size_t p : split.right) {
    acc /= dims[p];
    legs.push_back({strides[p], dims[p], false, acc});
  }

  ComplexMatrix out(rows, cols);
  for (std::size_t i = 0; i < state.hilbert_dim(); ++i) {
    std::size_t row = 0, col = 0;
    for (const Leg& leg : legs) {
      const std::size_t digit = (i / leg.stride_in) % leg.dim;
      (leg.to_row ? row : col) += digit * leg.stride_out;
    }
    out(row, col) = state.amplitudes()[i];
  }
  return out;
}

DensityMatrix partial_trace(const PureState& state, const std::vector<std::size_t>& traced) {
  validate_party_list(traced, state.num_parties(), "traced set");
  auto kept = complement_of(traced, state.num_parties());
  if (kept.empty()) fail(errc::invalid_party_set, "cannot trace out every party");
  std::vector<std::size_t> traced_sorted(traced);
  std::sort(traced_sorted.begin(), traced_sorted.end());
  const ComplexMatrix slice = bipartition_matrix(state, Bipartition{kept, traced_sorted});
  std::vector<std::size_t> kept_dims;
  for (std::size_t p : kept) kept_dims.push_back(state.dims()[p]);
  return DensityMatrix(std::move(kept_dims), gram(slice));
}

DensityMatrix partial_trace(const DensityMatrix& state, const std::vector<std::size_t>& traced) {
  validate_party_list(traced, state.num_parties(), "traced set");
  const auto kept = complement_of(traced, state.num_parties());
  if (kept.empty()) fail(errc::invalid_party_set, "cannot trace out every party");
  const auto& dims = state.dims();
  const auto strides = strides_for(dims);

  std::vector<std::size_t> kept_dims;
  for (std::size_t p : kept) kept_dims.push_back(dims[p]);
  std::size_t dim_kept = 1;
  for (std::size_t d : kept_dims) dim_kept *= d;
  std::size_t dim_traced = state.hilbert_dim() / dim_kept;

  // Map a kept (or traced) multi-index back to its offset in the full space.
  auto offsets = [&](const std::vector<std::size_t>& parties, std::size_t count) {
    std::vector<std::size_t> out(count);
    for (std::size_t m = 0; m < count; ++m) {
      std::size_t rem = m, off = 0;
      for (std::size_t i = parties.size(); i-- > 0;) {
        const std::size_t p = parties[i];
        off += (rem % dims[p]) * strides[p];
        rem /= dims[p];
      }
      out[m] = off;
    }
    return out;
  };
  std::vector<std::size_t> traced_sorted(traced);
  std::sort(traced_sorted.begin(), traced_sorted.end());
  const auto kept_off = offsets(kept, dim_kept);
  const auto traced_off = offsets(traced_sorted, dim_traced);

  ComplexMatrix out(dim_kept, dim_kept);
  const ComplexMatrix& m = state.matrix();
  for (std::size_t r = 0; r < dim_kept; ++r)
    for (std::size_t c = 0; c < dim_kept; ++c) {
      cplx acc(0.0, 0.0);
      for (std::size_t t = 0; t < dim_traced; ++t)
        acc += m(kept_off[r] + traced_off[t], kept_off[c] + traced_off[t]);
      out(r, c) = acc;
    }
  return DensityMatrix(std::move(kept_dims), std::move(out));
}

PureState apply_local_unitaries(const PureState& state, const std::vector<ComplexMatrix>& unitaries) {
  const auto& dims = state.dims();
  if (unitaries.size() != dims.size())
    fail(errc::dimension_mismatch, "need one unitary per party");
  for (std::size_t p = 0; p < dims.size(); ++p) {
    const ComplexMatrix& u = unitaries[p];
    if (!u.square() || u.rows() != dims[p])
      fail(errc::dimension_mismatch,
           "unitary for party " + std::to_string(p + 1) + " has the wrong shape");
    if (unitarity_defect(u) > tol::unitarity)
      fail(errc::not_unitary, "matrix for party " + std::to_string(p + 1) + " is not unitary");
  }

  const auto strides = strides_for(dims);
  ComplexVector amps = state.amplitudes();
  ComplexVector scratch;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    const std::size_t d = dims[p];
    const std::size_t stride = strides[p];
    const std::size_t block = stride * d;
    const ComplexMatrix& u = unitaries[p];
    scratch.assign(d, cplx(0.0, 0.0));
    for (std::size_t base = 0; base < amps.size(); base += block)
      for (std::size_t off = 0; off < stride; ++off) {
        for (std::size_t a = 0; a < d; ++a) {
          cplx acc(0.0, 0.0);
          for (std::size_t b = 0; b < d; ++b) acc += u(a, b) * amps[base + off + b * stride];
          scratch[a] = acc;
        }
        for (std::size_t a = 0; a < d; ++a) amps[base + off + a * stride] = scratch[a];
      }
  }
  return PureState(dims, std::move(amps));
}

std::vector<double> schmidt_coefficients(const PureState& state, const Bipartition& split) {
  const ComplexMatrix m = bipartition_matrix(state, split);
  const EigenSystem es = hermitian_eig(gram(m));
  std::vector<double> out;
  for (double lambda : es.eigenvalues) {
    if (lambda <= tol::rank_threshold) break;
    out.push_back(std::sqrt(lambda));
  }
  return out;
}

DensityMatrix pure_to_density(const PureState& state) {
  return DensityMatrix(state.dims(), outer_product(state.amplitudes()));
}

PureState random_state(const std::vector<std::size_t>& dims, std::uint64_t seed) {
  validate_dims(dims);
  std::size_t total = product(dims);
  GaussianStream g(seed);
  ComplexVector amps(total);
  for (auto& z : amps) {
    const double re = g.next();
    const double im = g.next();
    z = cplx(re, im);
  }
  return PureState::normalized(dims, std::move(amps));
}

}  // namespace lueq
