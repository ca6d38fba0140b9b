#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "cyclostab/errors.hpp"

namespace cyclostab {

// Saturation, sgn(s)*min(1,|s|).
double sat(double s);

enum class FnKind { linear, michaelis_menten, inhibitory_hill, exp_sat, constant, tabulated };

std::string to_string(FnKind kind);
FnKind fn_kind_from_string(const std::string& name);

// One-dimensional static nonlinearity from the catalog of reaction, coupling,
// and diffusion terms. Immutable; evaluation, derivative and antiderivative
// (P(s) = integral of the function from 0 to s, so P(0) = 0) are all exact
// closed forms per kind.
//
// Two composable transforms cover equilibrium-shifted analysis:
//   recentered(x0): s -> base(s + x0) - base(x0)   (vanishes at s = 0)
//   scaled(c):      s -> c * base(s)
class ScalarFn {
 public:
  static ScalarFn linear(double slope);
  static ScalarFn michaelis_menten(double b, double c);       // b*s/(c+s), pole at s = -c
  static ScalarFn inhibitory_hill(double mu, double k);       // mu/(1+k*s), pole at s = -1/k
  static ScalarFn exp_sat(double alpha, double beta, double sat_gain);  // e^{-alpha(s-1)} + beta*sat(sat_gain*(s-1))
  static ScalarFn constant(double value);
  static ScalarFn tabulated(std::vector<double> x, std::vector<double> y);  // piecewise linear

  ScalarFn recentered(double x0) const;
  ScalarFn scaled(double factor) const;

  double operator()(double s) const;
  double derivative(double s) const;
  double antiderivative(double s) const;

  // Open domain interval in the (possibly recentered) variable.
  double domain_lo() const;
  double domain_hi() const;
  bool in_domain(double s) const;

  FnKind kind() const { return kind_; }
  const std::vector<double>& params() const { return params_; }
  bool has_shift() const { return has_shift_; }
  double shift() const { return shift_; }
  double scale() const { return scale_; }
  const std::vector<double>& table_x() const { return table_x_; }
  const std::vector<double>& table_y() const { return table_y_; }

  std::string describe() const;

 private:
  ScalarFn(FnKind kind, std::vector<double> params);

  double base_eval(double s) const;
  double base_derivative(double s) const;
  double base_antiderivative(double s) const;
  void require_in_domain(double s) const;

  FnKind kind_;
  std::vector<double> params_;
  std::vector<double> table_x_, table_y_;
  bool has_shift_ = false;
  double shift_ = 0.0;
  double scale_ = 1.0;
};

// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance abs_tol.
// Fallback integration path for functions without a closed-form
// antiderivative; throws NumericalError with the achieved tolerance if the
// recursion bottoms out before converging.
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double abs_tol = 1e-10);

}  // namespace cyclostab
