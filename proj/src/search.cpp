#include "lueq/search.hpp"

#include <cmath>
#include <random>

#include "lueq/eig.hpp"
#include "lueq/errors.hpp"
#include "lueq/random.hpp"

namespace lueq {

namespace {

constexpr double golden = 0.6180339887498949;
constexpr double initial_window = 1.6;
constexpr double window_shrink = 0.5;
constexpr double window_floor = 1e-7;
constexpr double progress_floor = 1e-12;
constexpr int max_sweeps = 160;
constexpr int golden_iters = 22;

// Fidelity as a function of the stacked generator parameters. Party p
// contributes d_p^2 reals: the diagonal of H_p, then (re, im) for each
// upper off-diagonal entry. Evaluation reuses preallocated buffers; the
// optimizer calls it millions of times.
class WitnessSearch {
 public:
  WitnessSearch(const PureState& psi, const PureState& psi_prime)
      : dims_(psi.dims()), source_(psi.amplitudes()), target_(psi_prime.amplitudes()) {
    strides_.assign(dims_.size(), 1);
    for (std::size_t p = dims_.size(); p-- > 1;) strides_[p - 1] = strides_[p] * dims_[p];
    std::size_t maxd = 0;
    for (std::size_t d : dims_) {
      offsets_.push_back(param_count_);
      param_count_ += d * d;
      units_.emplace_back(d, d);
      maxd = std::max(maxd, d);
    }
    work_.resize(source_.size());
    mixed_.resize(maxd);
  }

  std::size_t param_count() const { return param_count_; }

  double evaluate(const std::vector<double>& params) {
    for (std::size_t p = 0; p < dims_.size(); ++p) build_unitary(p, &params[offsets_[p]]);
    apply_all();
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < work_.size(); ++i) acc += std::conj(target_[i]) * work_[i];
    return std::abs(acc);
  }

  std::vector<ComplexMatrix> unitaries(const std::vector<double>& params) {
    for (std::size_t p = 0; p < dims_.size(); ++p) build_unitary(p, &params[offsets_[p]]);
    return units_;
  }

 private:
  void build_unitary(std::size_t p, const double* theta) {
    const std::size_t d = dims_[p];
    ComplexMatrix& u = units_[p];
    if (d == 2) {
      // exp(i(mean + B)) with B traceless, B^2 = r^2, done in closed form.
      const double mean = 0.5 * (theta[0] + theta[1]);
      const double m = 0.5 * (theta[0] - theta[1]);
      const double x = theta[2];
      const double y = theta[3];
      const double r = std::sqrt(m * m + x * x + y * y);
      const double cr = std::cos(r);
      const double sc = r > 0.0 ? std::sin(r) / r : 1.0;
      const cplx ph = std::polar(1.0, mean);
      u(0, 0) = ph * cplx(cr, m * sc);
      u(0, 1) = ph * cplx(-y * sc, x * sc);
      u(1, 0) = ph * cplx(y * sc, x * sc);
      u(1, 1) = ph * cplx(cr, -m * sc);
      return;
    }
    ComplexMatrix h(d, d);
    std::size_t at = 0;
    for (std::size_t k = 0; k < d; ++k) h(k, k) = cplx(theta[at++], 0.0);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t l = k + 1; l < d; ++l) {
        const double re = theta[at++];
        const double im = theta[at++];
        h(k, l) = cplx(re, im);
        h(l, k) = cplx(re, -im);
      }
    u = expi_hermitian(h);
  }

  void apply_all() {
    work_ = source_;
    for (std::size_t p = 0; p < dims_.size(); ++p) {
      const std::size_t d = dims_[p];
      const std::size_t stride = strides_[p];
      const std::size_t block = stride * d;
      const ComplexMatrix& u = units_[p];
      for (std::size_t base = 0; base < work_.size(); base += block)
        for (std::size_t off = 0; off < stride; ++off) {
          for (std::size_t a = 0; a < d; ++a) {
            cplx acc(0.0, 0.0);
            for (std::size_t b = 0; b < d; ++b) acc += u(a, b) * work_[base + off + b * stride];
            mixed_[a] = acc;
          }
          for (std::size_t a = 0; a < d; ++a) work_[base + off + a * stride] = mixed_[a];
        }
    }
  }

  std::vector<std::size_t> dims_;
  std::vector<std::size_t> strides_;
  std::vector<std::size_t> offsets_;
  std::size_t param_count_ = 0;
  ComplexVector source_, target_, work_, mixed_;
  std::vector<ComplexMatrix> units_;
};

// Maximize along one coordinate: scan seven equally spaced points across the
// window, then tighten around the winner by golden section. Accepts the move
// only on strict improvement.
double line_maximize(WitnessSearch& prob, std::vector<double>& params, std::size_t coord,
                     double window, double current) {
  const double center = params[coord];
  double best_t = center;
  double best_f = current;
  auto probe = [&](double t) {
    params[coord] = t;
    const double f = prob.evaluate(params);
    if (f > best_f) {
      best_f = f;
      best_t = t;
    }
    return f;
  };
  for (int i = -3; i <= 3; ++i) {
    if (i == 0) continue;
    probe(center + window * static_cast<double>(i) / 3.0);
  }
  double lo = best_t - window / 3.0;
  double hi = best_t + window / 3.0;
  double x1 = hi - golden * (hi - lo);
  double x2 = lo + golden * (hi - lo);
  double f1 = probe(x1);
  double f2 = probe(x2);
  for (int it = 0; it < golden_iters; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + golden * (hi - lo);
      f2 = probe(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - golden * (hi - lo);
      f1 = probe(x1);
    }
  }
  params[coord] = best_t;
  return best_f;
}

// Sweeps the coordinates at a fixed window for as long as that makes
// progress, and halves the window otherwise, so the schedule adapts to the
// instance instead of shrinking on a clock.
double refine(WitnessSearch& prob, std::vector<double>& params) {
  double f = prob.evaluate(params);
  double window = initial_window;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    const double before = f;
    for (std::size_t c = 0; c < params.size(); ++c) f = line_maximize(prob, params, c, window, f);
    if (f >= 1.0 - 1e-12) break;
    if (f - before < progress_floor) {
      if (window <= window_floor) break;
      window = std::max(window * window_shrink, window_floor);
    }
  }
  return f;
}

}  // namespace

LUWitness search_lu(const PureState& psi, const PureState& psi_prime, std::size_t budget,
                    std::uint64_t seed) {
  if (psi.dims() != psi_prime.dims())
    fail(errc::dimension_mismatch, "states live on different party dimensions");
  if (psi.hilbert_dim() > 64)
    fail(errc::dimension_too_large, "search handles total dimension up to 64");
  if (budget < 1) fail(errc::dimension_mismatch, "budget must be at least 1");

  WitnessSearch prob(psi, psi_prime);
  const std::size_t count = prob.param_count();

  std::vector<double> best_params(count, 0.0);
  double best_f = -1.0;
  std::vector<double> params(count);
  for (std::size_t restart = 0; restart < budget; ++restart) {
    if (restart == 0) {
      std::fill(params.begin(), params.end(), 0.0);
    } else {
      std::mt19937_64 gen(derive_seed(seed, restart));
      for (double& t : params) {
        const double u = (static_cast<double>(gen() >> 11) + 0.5) * 0x1p-53;
        t = (2.0 * u - 1.0) * M_PI;
      }
    }
    const double f = refine(prob, params);
    if (f > best_f) {  // strict: ties keep the earliest restart
      best_f = f;
      best_params = params;
    }
    if (best_f >= 1.0 - 1e-12) break;  // nothing left to gain from more restarts
  }

  LUWitness out;
  out.unitaries = prob.unitaries(best_params);
  const PureState moved = apply_local_unitaries(psi, out.unitaries);
  const cplx overlap = inner(psi_prime.amplitudes(), moved.amplitudes());
  out.fidelity = std::min(std::abs(overlap), 1.0);
  out.phase = out.fidelity > 0.0 ? overlap / std::abs(overlap) : cplx(1.0, 0.0);
  return out;
}

}  // namespace lueq
