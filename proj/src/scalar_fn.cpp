#include "cyclostab/scalar_fn.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace cyclostab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const std::string& msg) {
  if (!ok) throw ValidationError(msg);
}

// Antiderivative of u -> sat(g*(u-1)), evaluated at x (arbitrary additive
// constant; callers difference two evaluations). Pieces meet at 1 -+ 1/g.
double sat_ramp_integral(double x, double g) {
  const double w = 1.0 / g;
  if (x <= 1.0 - w) return -x;
  if (x >= 1.0 + w) return x - 2.0;
  // middle piece, continuous with the left one at x = 1 - w
  return -(1.0 - w) + 0.5 * g * ((x - 1.0) * (x - 1.0) - w * w);
}

}  // namespace

double sat(double s) {
  if (s > 1.0) return 1.0;
  if (s < -1.0) return -1.0;
  return s;
}

std::string to_string(FnKind kind) {
  switch (kind) {
    case FnKind::linear: return "linear";
    case FnKind::michaelis_menten: return "michaelis_menten";
    case FnKind::inhibitory_hill: return "inhibitory_hill";
    case FnKind::exp_sat: return "exp_sat";
    case FnKind::constant: return "constant";
    case FnKind::tabulated: return "tabulated";
  }
  return "unknown";
}

FnKind fn_kind_from_string(const std::string& name) {
  if (name == "linear") return FnKind::linear;
  if (name == "michaelis_menten") return FnKind::michaelis_menten;
  if (name == "inhibitory_hill") return FnKind::inhibitory_hill;
  if (name == "exp_sat") return FnKind::exp_sat;
  if (name == "constant") return FnKind::constant;
  if (name == "tabulated") return FnKind::tabulated;
  throw ValidationError("unknown nonlinearity kind '" + name + "'");
}

ScalarFn::ScalarFn(FnKind kind, std::vector<double> params)
    : kind_(kind), params_(std::move(params)) {}

ScalarFn ScalarFn::linear(double slope) { return ScalarFn(FnKind::linear, {slope}); }

ScalarFn ScalarFn::michaelis_menten(double b, double c) {
  require(c > 0.0, "michaelis_menten requires c > 0");
  return ScalarFn(FnKind::michaelis_menten, {b, c});
}

ScalarFn ScalarFn::inhibitory_hill(double mu, double k) {
  require(k > 0.0, "inhibitory_hill requires k > 0");
  return ScalarFn(FnKind::inhibitory_hill, {mu, k});
}

ScalarFn ScalarFn::exp_sat(double alpha, double beta, double sat_gain) {
  require(alpha > 0.0, "exp_sat requires alpha > 0");
  require(sat_gain > 0.0, "exp_sat requires sat_gain > 0");
  return ScalarFn(FnKind::exp_sat, {alpha, beta, sat_gain});
}

ScalarFn ScalarFn::constant(double value) { return ScalarFn(FnKind::constant, {value}); }

ScalarFn ScalarFn::tabulated(std::vector<double> x, std::vector<double> y) {
  require(x.size() >= 2, "tabulated requires at least two points");
  require(x.size() == y.size(), "tabulated requires matching x/y sizes");
  require(std::is_sorted(x.begin(), x.end(),
                         [](double a, double b) { return a <= b; }),
          "tabulated abscissae must be strictly increasing");
  ScalarFn fn(FnKind::tabulated, {});
  fn.table_x_ = std::move(x);
  fn.table_y_ = std::move(y);
  return fn;
}

ScalarFn ScalarFn::recentered(double x0) const {
  ScalarFn fn(*this);
  fn.shift_ = has_shift_ ? shift_ + x0 : x0;
  fn.has_shift_ = true;
  fn.require_in_domain(0.0);  // the new center must be evaluable
  return fn;
}

ScalarFn ScalarFn::scaled(double factor) const {
  ScalarFn fn(*this);
  fn.scale_ *= factor;
  return fn;
}

double ScalarFn::domain_lo() const {
  double lo = -kInf;
  switch (kind_) {
    case FnKind::michaelis_menten: lo = -params_[1]; break;     // pole at -c
    case FnKind::inhibitory_hill: lo = -1.0 / params_[1]; break;  // pole at -1/k
    case FnKind::tabulated: lo = table_x_.front(); break;
    default: break;
  }
  return lo - (has_shift_ ? shift_ : 0.0);
}

double ScalarFn::domain_hi() const {
  double hi = kInf;
  if (kind_ == FnKind::tabulated) hi = table_x_.back();
  return hi - (has_shift_ ? shift_ : 0.0);
}

bool ScalarFn::in_domain(double s) const {
  if (kind_ == FnKind::tabulated) return s >= domain_lo() && s <= domain_hi();
  return s > domain_lo() && s < domain_hi();
}

void ScalarFn::require_in_domain(double s) const {
  if (in_domain(s)) return;
  std::ostringstream msg;
  msg << describe() << ": argument " << s << " outside domain (" << domain_lo() << ", "
      << domain_hi() << ")";
  if (kind_ == FnKind::michaelis_menten)
    msg << "; pole at s = " << -params_[1] - (has_shift_ ? shift_ : 0.0);
  if (kind_ == FnKind::inhibitory_hill)
    msg << "; pole at s = " << -1.0 / params_[1] - (has_shift_ ? shift_ : 0.0);
  throw DomainViolation(msg.str());
}

double ScalarFn::base_eval(double s) const {
  switch (kind_) {
    case FnKind::linear: return params_[0] * s;
    case FnKind::michaelis_menten: return params_[0] * s / (params_[1] + s);
    case FnKind::inhibitory_hill: return params_[0] / (1.0 + params_[1] * s);
    case FnKind::exp_sat:
      return std::exp(-params_[0] * (s - 1.0)) + params_[1] * sat(params_[2] * (s - 1.0));
    case FnKind::constant: return params_[0];
    case FnKind::tabulated: {
      auto it = std::upper_bound(table_x_.begin(), table_x_.end(), s);
      std::size_t hi = std::min<std::size_t>(
          std::max<std::ptrdiff_t>(it - table_x_.begin(), 1), table_x_.size() - 1);
      const double x0 = table_x_[hi - 1], x1 = table_x_[hi];
      const double y0 = table_y_[hi - 1], y1 = table_y_[hi];
      return y0 + (y1 - y0) * (s - x0) / (x1 - x0);
    }
  }
  return 0.0;
}

double ScalarFn::base_derivative(double s) const {
  switch (kind_) {
    case FnKind::linear: return params_[0];
    case FnKind::michaelis_menten: {
      const double d = params_[1] + s;
      return params_[0] * params_[1] / (d * d);
    }
    case FnKind::inhibitory_hill: {
      const double d = 1.0 + params_[1] * s;
      return -params_[0] * params_[1] / (d * d);
    }
    case FnKind::exp_sat: {
      double d = -params_[0] * std::exp(-params_[0] * (s - 1.0));
      if (std::abs(params_[2] * (s - 1.0)) < 1.0) d += params_[1] * params_[2];
      return d;
    }
    case FnKind::constant: return 0.0;
    case FnKind::tabulated: {
      auto it = std::upper_bound(table_x_.begin(), table_x_.end(), s);
      std::size_t hi = std::min<std::size_t>(
          std::max<std::ptrdiff_t>(it - table_x_.begin(), 1), table_x_.size() - 1);
      return (table_y_[hi] - table_y_[hi - 1]) / (table_x_[hi] - table_x_[hi - 1]);
    }
  }
  return 0.0;
}

double ScalarFn::base_antiderivative(double s) const {
  switch (kind_) {
    case FnKind::linear: return 0.5 * params_[0] * s * s;
    case FnKind::michaelis_menten: {
      const double b = params_[0], c = params_[1];
      return b * (s - c * std::log((c + s) / c));
    }
    case FnKind::inhibitory_hill: {
      const double mu = params_[0], k = params_[1];
      return mu / k * std::log1p(k * s);
    }
    case FnKind::exp_sat: {
      const double a = params_[0], b = params_[1], g = params_[2];
      const double exp_part = (std::exp(a) - std::exp(-a * (s - 1.0))) / a;
      return exp_part + b * (sat_ramp_integral(s, g) - sat_ramp_integral(0.0, g));
    }
    case FnKind::constant: return params_[0] * s;
    case FnKind::tabulated: {
      // exact integral of the piecewise-linear interpolant from 0 to s
      auto segment_integral = [&](double lo, double hi) {
        return 0.5 * (base_eval(lo) + base_eval(hi)) * (hi - lo);
      };
      const double sign = s >= 0.0 ? 1.0 : -1.0;
      const double lo = std::min(0.0, s), hi = std::max(0.0, s);
      double acc = 0.0;
      double cursor = lo;
      for (std::size_t i = 1; i < table_x_.size() && cursor < hi; ++i) {
        if (table_x_[i] <= cursor) continue;
        const double stop = std::min(hi, table_x_[i]);
        acc += segment_integral(cursor, stop);
        cursor = stop;
      }
      return sign * acc;
    }
  }
  return 0.0;
}

double ScalarFn::operator()(double s) const {
  require_in_domain(s);
  const double shifted = has_shift_ ? s + shift_ : s;
  double v = base_eval(shifted);
  if (has_shift_) v -= base_eval(shift_);
  return scale_ * v;
}

double ScalarFn::derivative(double s) const {
  require_in_domain(s);
  return scale_ * base_derivative(has_shift_ ? s + shift_ : s);
}

double ScalarFn::antiderivative(double s) const {
  require_in_domain(s);
  require_in_domain(0.0);
  if (!has_shift_) return scale_ * base_antiderivative(s);
  // d/ds [B(s+x0) - B(x0) - base(x0) s] = base(s+x0) - base(x0), zero at s = 0
  return scale_ * (base_antiderivative(s + shift_) - base_antiderivative(shift_) -
                   base_eval(shift_) * s);
}

std::string ScalarFn::describe() const {
  std::ostringstream out;
  if (scale_ != 1.0) out << scale_ << "*";
  out << to_string(kind_) << "(";
  if (kind_ == FnKind::tabulated) {
    out << table_x_.size() << " points";
  } else {
    for (std::size_t i = 0; i < params_.size(); ++i) out << (i ? ", " : "") << params_[i];
  }
  out << ")";
  if (has_shift_) out << " recentered at " << shift_;
  return out.str();
}

namespace {

double simpson(const std::function<double(double)>& f, double a, double fa, double b, double fb,
               double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double fa, double b,
                     double fb, double m, double fm, double whole, double tol, int depth,
                     double* worst) {
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double err = (left + right - whole) / 15.0;
  if (std::abs(err) <= tol || depth >= 48) {
    if (depth >= 48) *worst = std::max(*worst, std::abs(err));
    return left + right + err;
  }
  return adaptive_step(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth + 1, worst) +
         adaptive_step(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth + 1, worst);
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), m = 0.5 * (a + b), fm = f(m);
  const double whole = simpson(f, a, fa, b, fb, m, fm);
  double worst = 0.0;
  const double value = adaptive_step(f, a, fa, b, fb, m, fm, whole, abs_tol, 0, &worst);
  if (worst > abs_tol) {
    std::ostringstream msg;
    msg << "adaptive quadrature did not reach tolerance " << abs_tol
        << "; worst panel error estimate " << worst;
    throw NumericalError(msg.str());
  }
  return value;
}

}  // namespace cyclostab
