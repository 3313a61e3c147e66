#include "tvac/monotone.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace tvac {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

MonotoneGraph MonotoneGraph::interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("MonotoneGraph: need a < b");
  if (!(a <= 0.0 && 0.0 <= b))
    throw std::invalid_argument("MonotoneGraph: 0 must be an admissible point");
  MonotoneGraph g;
  g.is_interval_ = true;
  g.a_ = a;
  g.b_ = b;
  return g;
}

MonotoneGraph MonotoneGraph::smooth(std::function<double(double)> value,
                                    std::function<double(double)> slope) {
  MonotoneGraph g;
  g.is_interval_ = false;
  g.a_ = -kInf;
  g.b_ = kInf;
  g.value_fn_ = std::move(value);
  g.slope_fn_ = std::move(slope);
  if (std::abs(g.value_fn_(0.0)) > 1e-12)
    throw std::invalid_argument("MonotoneGraph: potential must vanish at 0");
  // Monotone slope on a sampled grid; convexity of the potential.
  double prev = g.slope_fn_(-10.0);
  for (int i = 1; i <= 100; ++i) {
    const double x = -10.0 + 0.2 * i;
    const double s = g.slope_fn_(x);
    if (s < prev - 1e-10)
      throw std::invalid_argument("MonotoneGraph: slope not monotone (potential not convex)");
    prev = s;
  }
  return g;
}

double MonotoneGraph::potential(double x) const {
  if (is_interval_) return (x >= a_ && x <= b_) ? 0.0 : kInf;
  return value_fn_(x);
}

double MonotoneGraph::slope(double x) const {
  if (is_interval_) throw std::logic_error("interval indicator has no single-valued slope");
  return slope_fn_(x);
}

void RegularizationParams::validate() const {
  if (!(yosida > 0.0)) throw std::invalid_argument("RegularizationParams: yosida must be > 0");
  if (!(trunc_eps >= 0.0 && trunc_eps < 1.0))
    throw std::invalid_argument("RegularizationParams: eps must lie in [0,1)");
  if (!(trunc_M >= 1.0))
    throw std::invalid_argument("RegularizationParams: M must be >= 1 (or +inf)");
}

double resolvent(const MonotoneGraph& g, double varsigma, double x) {
  if (!(varsigma > 0.0)) throw std::invalid_argument("resolvent: varsigma must be > 0");
  if (g.is_interval()) return std::clamp(x, g.lower(), g.upper());

  // Solve J + varsigma*slope(J) = x by safeguarded Newton. The map is
  // strictly increasing, so a bracket always exists around x.
  double lo = x, hi = x;
  auto F = [&](double j) { return j + varsigma * g.slope(j) - x; };
  double flo = F(lo), fhi = F(hi);
  double step = 1.0 + std::abs(x);
  while (flo > 0.0) { lo -= step; step *= 2.0; flo = F(lo); }
  step = 1.0 + std::abs(x);
  while (fhi < 0.0) { hi += step; step *= 2.0; fhi = F(hi); }

  double j = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    const double f = F(j);
    if (std::abs(f) <= 1e-12 * (1.0 + std::abs(x))) return j;
    if (f > 0.0) hi = j; else lo = j;
    // Newton step with numeric derivative of the slope, bisection fallback.
    const double h = 1e-7 * (1.0 + std::abs(j));
    const double dF = 1.0 + varsigma * (g.slope(j + h) - g.slope(j - h)) / (2.0 * h);
    double cand = (dF > 0.0) ? j - f / dF : j;
    if (!(cand > lo && cand < hi)) cand = 0.5 * (lo + hi);
    j = cand;
  }
  return j;
}

double yosida(const MonotoneGraph& g, double varsigma, double x) {
  if (!(varsigma > 0.0)) throw std::invalid_argument("yosida: varsigma must be > 0");
  if (g.is_interval()) {
    double v = 0.0;
    if (std::isfinite(g.lower())) v += std::min(x - g.lower(), 0.0);
    if (std::isfinite(g.upper())) v += std::max(x - g.upper(), 0.0);
    return v / varsigma;
  }
  return (x - resolvent(g, varsigma, x)) / varsigma;
}

double moreau_envelope(const MonotoneGraph& g, double varsigma, double x) {
  if (!(varsigma > 0.0)) throw std::invalid_argument("moreau_envelope: varsigma must be > 0");
  if (g.is_interval()) {
    const double d = std::max({g.lower() - x, 0.0, x - g.upper()});
    return d * d / (2.0 * varsigma);
  }
  const double j = resolvent(g, varsigma, x);
  return g.potential(j) + (x - j) * (x - j) / (2.0 * varsigma);
}

double trunc_eps(double eps, double r) {
  if (eps == 0.0) return r;
  return std::max(r, eps);
}

double trunc_M(double M, double r) {
  return std::min(std::max(r, 0.0), M);
}

double sigma_select(double chi) { return chi >= 0.0 ? 1.0 : 0.0; }

Eigen::VectorXd sigma_select(const Eigen::VectorXd& chi) {
  Eigen::VectorXd out(chi.size());
  for (Eigen::Index i = 0; i < chi.size(); ++i) out[i] = sigma_select(chi[i]);
  return out;
}

std::pair<double, double> split_lambda(const std::function<double(double)>& lambda_fn,
                                       double delta, double r) {
  const double q = 0.5 * delta * r * r;
  return {lambda_fn(r) - q, q};
}

std::pair<double, double> split_gamma(const std::function<double(double)>& gamma_fn,
                                      double nu, double r) {
  const double q = 0.5 * nu * r * r;
  return {gamma_fn(r) + q, -q};
}

namespace {

void scan_second_differences(const std::function<double(double)>& f, double lo,
                             double hi, int samples, bool want_concave,
                             const char* what) {
  if (samples < 3) throw std::invalid_argument("second-difference scan needs >= 3 samples");
  const double h = (hi - lo) / (samples - 1);
  const double tol = 1e-9 * std::max(1.0, h * h);
  double fm = f(lo), f0 = f(lo + h);
  for (int i = 2; i < samples; ++i) {
    const double fp = f(lo + i * h);
    const double d2 = fp - 2.0 * f0 + fm;
    if (want_concave ? (d2 > tol) : (d2 < -tol))
      throw std::invalid_argument(std::string(what) +
                                  ": second-difference check failed at a sampled point");
    fm = f0;
    f0 = fp;
  }
}

}  // namespace

void validate_delta_concave(const std::function<double(double)>& f, double delta,
                            double lo, double hi, int samples) {
  if (delta < 0.0)
    throw std::invalid_argument("concavity modulus delta must be >= 0");
  auto g = [&](double r) { return f(r) - 0.5 * delta * r * r; };
  scan_second_differences(g, lo, hi, samples, /*want_concave=*/true, "delta-concavity");
}

void validate_nu_convex(const std::function<double(double)>& f, double nu,
                        double lo, double hi, int samples) {
  if (nu < 0.0)
    throw std::invalid_argument("convexity modulus nu must be >= 0");
  auto g = [&](double r) { return f(r) + 0.5 * nu * r * r; };
  scan_second_differences(g, lo, hi, samples, /*want_concave=*/false, "nu-convexity");
}

}  // namespace tvac
