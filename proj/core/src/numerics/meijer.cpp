#include "rfso/numerics/meijer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "rfso/errors.hpp"
#include "rfso/numerics/gamma.hpp"

namespace rfso::numerics {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// target digits of the node-spacing model: trapezoid error ~ exp(-2 pi d / h)
constexpr double kDecayBudget = 42.0;

// log of the Mellin-Barnes gamma ratio at s.
std::complex<double> log_ratio(std::complex<double> s, int m, int n,
                               const std::vector<double>& a, const std::vector<double>& b) {
  std::complex<double> tot = 0.0;
  const int p = static_cast<int>(a.size());
  const int q = static_cast<int>(b.size());
  for (int j = 0; j < m; ++j) tot += log_gamma(b[j] - s);
  for (int j = 0; j < n; ++j) tot += log_gamma(1.0 - a[j] + s);
  for (int j = m; j < q; ++j) tot -= log_gamma(1.0 - b[j] + s);
  for (int j = n; j < p; ++j) tot -= log_gamma(a[j] - s);
  return tot;
}

struct KahanComplex {
  std::complex<double> sum{0.0, 0.0};
  std::complex<double> carry{0.0, 0.0};
  void add(std::complex<double> v) {
    const std::complex<double> y = v - carry;
    const std::complex<double> t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

void MeijerGSpec::validate() const {
  if (m < 0 || m > q()) throw DomainError("meijer_g: need 0 <= m <= q");
  if (n < 0 || n > p()) throw DomainError("meijer_g: need 0 <= n <= p");
  if (!(z > 0.0)) throw DomainError("meijer_g: argument must be positive");
  if (p() >= q()) throw DomainError("meijer_g: only p < q is supported");
  const double cstar = m + n - 0.5 * (p() + q());
  if (!(cstar > 0.0))
    throw DomainError("meijer_g: contour integral does not converge (m+n <= (p+q)/2)");
}

MeijerGContour::MeijerGContour(int m, int n, std::vector<double> a, std::vector<double> b,
                               QuadratureSettings settings, ContourOptions options)
    : m_(m), n_(n), a_(std::move(a)), b_(std::move(b)), settings_(settings), options_(options) {
  MeijerGSpec spec{m_, n_, a_, b_, 1.0};
  spec.validate();
  if (m_ == 0 && n_ == 0) throw DomainError("meijer_g: no numerator gamma factors");

  double right = kInf;  // poles of Gamma(b_j - s) start here and go right
  for (int j = 0; j < m_; ++j) right = std::min(right, b_[j]);
  double left = -kInf;  // poles of Gamma(1 - a_j + s) end here going left
  for (int j = 0; j < n_; ++j) left = std::max(left, a_[j] - 1.0);

  const double zh = options_.z_hint > 0.0 ? options_.z_hint : 1.0;
  const double lnz_hint = std::log(zh);
  double pole_dist;
  if (std::isfinite(right) && std::isfinite(left)) {
    if (!(left < right - 1e-9))
      throw DomainError("meijer_g: pole families overlap; no vertical contour separates them");
    // bias wide gaps toward the left family: |z^sigma| then stays small on
    // both ends of the argument range, which keeps the absolute roundoff of
    // the oscillatory sum down (the ascending series covers tiny arguments)
    sigma_ = left + std::min(0.5 * (right - left), 0.35);
    pole_dist = std::min(right - sigma_, sigma_ - left);
  } else {
    // one-sided pole family: slide the abscissa toward the saddle to reduce
    // cancellation, judged by the integrand magnitude at t = 0
    const double offsets[] = {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0};
    double best_score = kInf;
    double best_sigma = 0.0;
    for (double off : offsets) {
      const double cand = std::isfinite(right) ? right - off : left + off;
      const double score = log_ratio(cand, m_, n_, a_, b_).real() + cand * lnz_hint;
      if (score < best_score) {
        best_score = score;
        best_sigma = cand;
      }
    }
    sigma_ = best_sigma;
    pole_dist = std::isfinite(right) ? right - sigma_ : sigma_ - left;
  }

  sigma_ += options_.sigma_shift;
  if (std::isfinite(right) && !(sigma_ < right - 0.05))
    throw DomainError("meijer_g: shifted contour too close to the right pole family");
  if (std::isfinite(left) && !(sigma_ > left + 0.05))
    throw DomainError("meijer_g: shifted contour too close to the left pole family");
  if (std::isfinite(right)) pole_dist = std::min(pole_dist, right - sigma_);
  if (std::isfinite(left)) pole_dist = std::min(pole_dist, sigma_ - left);

  const double d = std::min(1.0, 0.9 * pole_dist);
  const double span = std::max({options_.log_arg_span, std::abs(lnz_hint) + 2.0, 4.0});
  // spacing for ~kDecayBudget digits against oscillation exp(i t ln z); built
  // at half this step so the embedded stride-2 check measures the model step
  const double h_model = 2.0 * M_PI * d / (kDecayBudget + d * span);
  build(0.5 * h_model / std::max(1.0, options_.resolution_scale));
  build_series_plan();
}

void MeijerGContour::build_series_plan() {
  // candidate pole levels s = b_j + l of the numerator gamma factors
  struct Level {
    double value;
    int j;
    int l;
  };
  std::vector<Level> levels;
  double min_level = kInf;
  for (int j = 0; j < m_; ++j) min_level = std::min(min_level, b_[j]);
  const double horizon = min_level + 4.0;
  for (int j = 0; j < m_; ++j)
    for (int l = 0; b_[j] + l <= horizon + 1.0; ++l)
      levels.push_back({b_[j] + l, j, l});
  std::sort(levels.begin(), levels.end(),
            [](const Level& x, const Level& y) { return x.value < y.value; });
  // stop at the first coincident level (double pole: needs logarithmic terms)
  series_stop_ = horizon;
  for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
    if (std::abs(levels[i].value - levels[i + 1].value) < 1e-9) {
      series_stop_ = std::min(series_stop_, levels[i].value);
      break;
    }
  }
  const int p = static_cast<int>(a_.size());
  const int q = static_cast<int>(b_.size());
  series_cmax_ = 0.0;
  for (const auto& lev : levels) {
    if (lev.value >= series_stop_ - 1e-12) continue;
    double coef = (lev.l % 2 == 0 ? 1.0 : -1.0);
    for (int i = 2; i <= lev.l; ++i) coef /= i;
    const double s = lev.value;
    for (int i = 0; i < m_; ++i)
      if (i != lev.j) coef *= std::tgamma(b_[i] - s);
    for (int i = 0; i < n_; ++i) coef *= std::tgamma(1.0 - a_[i] + s);
    for (int i = m_; i < q; ++i) coef /= std::tgamma(1.0 - b_[i] + s);
    for (int i = n_; i < p; ++i) coef /= std::tgamma(a_[i] - s);
    if (!std::isfinite(coef)) {  // unexpected pole hit: disable the series
      series_.clear();
      return;
    }
    series_.push_back({s, coef});
    series_cmax_ = std::max(series_cmax_, std::abs(coef));
  }
  std::sort(series_.begin(), series_.end(),
            [](const SeriesTerm& x, const SeriesTerm& y) { return x.exponent < y.exponent; });
}

void MeijerGContour::build(double step) {
  step_ = step;
  nodes_.clear();
  std::vector<std::complex<double>> raw;
  raw.reserve(4096);
  double max_re = -kInf;
  int consecutive_small = 0;
  const double tail_cut = kDecayBudget + 8.0;
  const std::size_t max_nodes = 4u << 20;
  for (std::size_t i = 0;; ++i) {
    const std::complex<double> s(sigma_, static_cast<double>(i) * step_);
    const std::complex<double> lr = log_ratio(s, m_, n_, a_, b_);
    raw.push_back(lr);
    max_re = std::max(max_re, lr.real());
    if (static_cast<double>(i) * step_ > 3.0 && lr.real() - max_re < -tail_cut) {
      if (++consecutive_small >= 4) break;
    } else {
      consecutive_small = 0;
    }
    if (i > max_nodes)
      throw EvaluationError("meijer_g: contour tail does not decay within budget", 0.0, kInf);
  }
  log_scale_ = max_re;
  nodes_.resize(raw.size());
  envelope_sum_ = 0.0;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    nodes_[i] = std::exp(raw[i] - log_scale_);
    envelope_sum_ += std::abs(nodes_[i]);
  }
}

double MeijerGContour::operator()(double z) const {
  if (!(z > 0.0)) throw DomainError("meijer_g: argument must be positive");
  // small arguments: the ascending series is exact and well-conditioned where
  // the vertical contour cancels catastrophically; use it whenever its
  // truncation bound meets the tolerance
  if (!series_.empty() && z < 0.1) {
    double sum = 0.0;
    for (auto it = series_.rbegin(); it != series_.rend(); ++it)
      sum += it->coeff * std::pow(z, it->exponent);
    const double bound = 8.0 * std::max(series_cmax_, 1.0) * std::pow(z, series_stop_) *
                         (1.0 + std::abs(std::log(z)));
    if (bound <= std::max(settings_.abs_tol, settings_.rel_tol * std::abs(sum)))
      return sum;
  }
  const double w = std::log(z);
  // rotation e^{i t w} by multiplicative recurrence, re-synced periodically
  const std::complex<double> rot_step = std::polar(1.0, step_ * w);
  std::complex<double> rot = 1.0;
  KahanComplex fine;   // all nodes, spacing step_
  KahanComplex coarse; // even nodes, spacing 2*step_
  fine.add(0.5 * nodes_[0]);
  coarse.add(0.5 * nodes_[0]);
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    if (i % 64 == 0) {
      rot = std::polar(1.0, static_cast<double>(i) * step_ * w);
    } else {
      rot *= rot_step;
    }
    const std::complex<double> term = nodes_[i] * rot;
    fine.add(term);
    if (i % 2 == 0) coarse.add(term);
  }
  const double exponent = log_scale_ + sigma_ * w;
  if (exponent > 690.0)
    throw RangeError("meijer_g: result overflows double precision");
  const double scale = std::exp(exponent) * step_ / M_PI;
  const double value = scale * fine.sum.real();
  const double coarse_value = 2.0 * scale * coarse.sum.real();
  const double err = std::abs(value - coarse_value);
  // the oscillatory sum cannot be certified below its roundoff floor, which
  // scales with the envelope mass rather than the (possibly tiny) result; a
  // floor-limited acceptance is allowed only while it keeps the relative
  // error at or below 1e-6
  const double floor =
      8.0 * std::numeric_limits<double>::epsilon() * envelope_sum_ * scale;
  double tol = std::max(settings_.abs_tol, settings_.rel_tol * std::abs(value));
  if (floor <= 1e-6 * std::abs(value)) tol = std::max(tol, floor);
  if (!(err <= tol) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "meijer_g: contour quadrature error " << err << " exceeds tolerance " << tol
        << " at z=" << z << " (|ln z| beyond the configured span?)";
    throw EvaluationError(msg.str(), value, err);
  }
  return value;
}

double meijer_g(const MeijerGSpec& spec, const QuadratureSettings& settings,
                const ContourOptions& options) {
  spec.validate();
  ContourOptions opts = options;
  if (opts.z_hint <= 0.0) opts.z_hint = spec.z;
  opts.log_arg_span = std::max(options.log_arg_span, std::abs(std::log(spec.z)) + 2.0);
  double best = 0.0;
  double bound = kInf;
  for (int attempt = 0; attempt < 4; ++attempt) {
    MeijerGContour contour(spec.m, spec.n, spec.a, spec.b, settings, opts);
    try {
      return contour(spec.z);
    } catch (const EvaluationError& e) {
      best = e.best_estimate();
      bound = e.error_bound();
      opts.resolution_scale *= 2.0;
    }
  }
  throw EvaluationError("meijer_g: failed to reach tolerance after refinement", best, bound);
}

}  // namespace rfso::numerics
