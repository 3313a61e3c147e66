#pragma once

#include <functional>
#include <limits>
#include <utility>

#include <Eigen/Dense>

namespace tvac {

/// Maximal monotone graph given as the subdifferential of a proper convex
/// l.s.c. potential vanishing at 0. Either the indicator of an interval
/// [a,b] (with a possibly -inf, b possibly +inf), or a user-supplied smooth
/// convex potential with its derivative.
class MonotoneGraph {
 public:
  static MonotoneGraph interval(double a, double b);
  static MonotoneGraph smooth(std::function<double(double)> value,
                              std::function<double(double)> slope);

  bool is_interval() const { return is_interval_; }
  double lower() const { return a_; }
  double upper() const { return b_; }
  double potential(double x) const;   // +inf outside the interval domain
  double slope(double x) const;       // derivative of the smooth potential

 private:
  MonotoneGraph() = default;
  bool is_interval_ = true;
  double a_ = 0.0, b_ = 0.0;
  std::function<double(double)> value_fn_, slope_fn_;
};

/// Regularization parameters shared by the solver: Yosida parameter, lower
/// truncation level, upper truncation level.
struct RegularizationParams {
  double yosida = 1e-2;                                  // > 0
  double trunc_eps = 0.0;                                // 0 => identity
  double trunc_M = std::numeric_limits<double>::infinity();  // inf => positive part

  void validate() const;
};

/// Yosida approximation of the graph at parameter varsigma > 0. For the
/// indicator of [a,b] this is (min(x-a,0)+max(x-b,0))/varsigma; monotone
/// nondecreasing and Lipschitz with constant 1/varsigma.
double yosida(const MonotoneGraph& g, double varsigma, double x);

/// Resolvent: the unique J with J + varsigma*slope(J) = x (projection onto
/// [a,b] for interval indicators). yosida(x) = (x - resolvent(x))/varsigma.
double resolvent(const MonotoneGraph& g, double varsigma, double x);

/// Moreau envelope of the potential: min_y { pot(y) + (x-y)^2/(2*varsigma) }.
/// This is the primitive of the Yosida approximation, vanishing at 0.
double moreau_envelope(const MonotoneGraph& g, double varsigma, double x);

/// Lower truncation: max(r, eps); eps == 0 means the identity.
double trunc_eps(double eps, double r);

/// Upper truncation: clamp(r, 0, M); M == +inf means the positive part.
double trunc_M(double M, double r);

/// Selection in the subdifferential of the positive part: 1 where chi >= 0,
/// 0 where chi < 0. The value at 0 is fixed to 1.
double sigma_select(double chi);
Eigen::VectorXd sigma_select(const Eigen::VectorXd& chi);

/// Splitting lambda(r) = [lambda(r) - delta r^2/2] + delta r^2/2 with a
/// concave regular part; returns (regular part, quadratic part).
std::pair<double, double> split_lambda(const std::function<double(double)>& lambda_fn,
                                       double delta, double r);

/// Splitting gamma(r) = [gamma(r) + nu r^2/2] - nu r^2/2 with a convex
/// regular part; returns (regular part, negative quadratic part).
std::pair<double, double> split_gamma(const std::function<double(double)>& gamma_fn,
                                      double nu, double r);

/// Second-difference scans over a sampled grid; throw std::invalid_argument
/// when the claimed modulus fails at some sampled point.
void validate_delta_concave(const std::function<double(double)>& f, double delta,
                            double lo, double hi, int samples);
void validate_nu_convex(const std::function<double(double)>& f, double nu,
                        double lo, double hi, int samples);

}  // namespace tvac
