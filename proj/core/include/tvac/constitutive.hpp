#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "tvac/geometry.hpp"
#include "tvac/monotone.hpp"

namespace tvac {

/// Symmetric fourth-order tensor in 2D with minor and major symmetries.
struct Tensor4 {
  double c[2][2][2][2] = {};

  static Tensor4 isotropic(double lame_lambda, double lame_mu);

  Eigen::Matrix2d contract(const Eigen::Matrix2d& eps) const;

  /// Checks e_{ijkh}=e_{jikh}=e_{khij}; throws on violation.
  void validate_symmetry() const;

  /// Exact ellipticity constant: the smallest eigenvalue of the quadratic
  /// form xi : C : xi over symmetric xi with |xi| = 1.
  double ellipticity() const;
};

/// Heat conductivity alpha with its primitives. The power-law kind is
/// alpha(t) = c0 * (1 + |t|^mu), mu > 1; the constant kind is the linear
/// diagnostic reduction and is exempt from the growth envelope.
struct AlphaSpec {
  enum class Kind { PowerLaw, Constant, Custom };
  Kind kind = Kind::PowerLaw;
  double c0 = 1.0, c1 = 1.0, mu = 2.0;
  double constant = 1.0;
  std::function<double(double)> fn, dfn;  // Custom only

  double value(double t) const;
  double slope(double t) const;
};

struct KappaSpec {
  enum class Kind { Quadratic, Constant, Custom };
  Kind kind = Kind::Quadratic;
  double ck = 1.0;   // growth constant C_k
  double s = 2.0;    // growth exponent
  double constant = 0.0;
  std::function<double(double)> fn;

  double value(double x) const;
};

struct LambdaSpec {
  enum class Kind { Linear, Custom };
  Kind kind = Kind::Linear;
  double lipschitz = 0.0;  // L; Linear kind is lambda(r) = L * r
  double delta = 0.0;      // concavity modulus, >= 0
  std::function<double(double)> fn, dfn;

  double value(double r) const;
  double slope(double r) const;
};

struct GammaSpec {
  enum class Kind { Zero, Quadratic, DoubleWell, Custom };
  Kind kind = Kind::Zero;
  double a = 0.0;     // Quadratic: a*(r-1/2)^2; DoubleWell: a*(r^4/4 - r^2/2)
  double nu = 0.0;    // convexity modulus, >= 0
  std::function<double(double)> fn, dfn;

  double value(double r) const;
  double slope(double r) const;
};

/// All material data: conductivity, exchange coefficient, latent heat,
/// adhesion potential, constraint graphs, and the elasticity/viscosity
/// tensors. Immutable after construction; construction validates the
/// structural assumptions by sampling and records the derived constants.
class Constitutive {
 public:
  Constitutive(AlphaSpec alpha, KappaSpec kappa, LambdaSpec lambda, GammaSpec gamma,
               Tensor4 elastic, Tensor4 viscous,
               MonotoneGraph beta = MonotoneGraph::interval(0.0, 1.0),
               MonotoneGraph eta = MonotoneGraph::interval(
                   -std::numeric_limits<double>::infinity(), 0.0));

  const AlphaSpec& alpha_spec() const { return alpha_; }
  const KappaSpec& kappa_spec() const { return kappa_; }
  const LambdaSpec& lambda_spec() const { return lambda_; }
  const GammaSpec& gamma_spec() const { return gamma_; }
  const Tensor4& elastic() const { return elastic_; }
  const Tensor4& viscous() const { return viscous_; }
  const MonotoneGraph& beta() const { return beta_; }
  const MonotoneGraph& eta() const { return eta_; }

  double alpha(double t) const { return alpha_.value(t); }
  double alpha_slope(double t) const { return alpha_.slope(t); }
  double kappa(double x) const { return kappa_.value(x); }
  double lambda(double r) const { return lambda_.value(r); }
  double lambda_slope(double r) const { return lambda_.slope(r); }
  double gamma(double r) const { return gamma_.value(r); }
  double gamma_slope(double r) const { return gamma_.slope(r); }

  /// alpha composed with the upper truncation; >= c0 for the power-law kind.
  double alpha_M(double M, double r) const;
  double alpha_M_slope(double M, double r) const;

  /// Primitive of alpha vanishing at 0; requires r >= 0.
  double alpha_hat(double r) const;
  /// Second primitive (primitive of alpha_hat), convex.
  double alpha_hat_hat(double r) const;

  /// Regularized potential W_ς(x) = env_ς(beta)(x) + gamma(x).
  double potential_W(double varsigma, double x) const;
  /// Unregularized W(x) = beta_pot(x) + gamma(x); +inf outside dom(beta).
  double potential_W_exact(double x) const;

  double elastic_ellipticity() const { return eps0_; }
  double viscous_ellipticity() const { return nu0_; }
  double lower_bound_W() const { return cw_; }  // W >= -C_W on the working range

 private:
  AlphaSpec alpha_;
  KappaSpec kappa_;
  LambdaSpec lambda_;
  GammaSpec gamma_;
  Tensor4 elastic_, viscous_;
  MonotoneGraph beta_, eta_;
  double eps0_ = 0.0, nu0_ = 0.0, cw_ = 0.0;
};

/// Default material set used across the test suites.
Constitutive default_constitutive();

/// The bilinear forms e(.,.) and v(.,.) assembled with exact P1 quadrature.
/// Fields are interleaved vector fields vanishing on Dirichlet nodes; throws
/// when a Dirichlet entry is nonzero.
double bilinear_e(const Constitutive& c, const Meshes& m,
                  const Eigen::VectorXd& u, const Eigen::VectorXd& w);
double bilinear_v(const Constitutive& c, const Meshes& m,
                  const Eigen::VectorXd& u, const Eigen::VectorXd& w);

/// Discrete Korn constants: smallest generalized eigenvalue of the form
/// against the vector H1 Gram on the Dirichlet-constrained subspace.
struct KornConstants {
  double ce = 0.0;
  double cv = 0.0;
};
KornConstants korn_constants(const Constitutive& c, const Meshes& m);

}  // namespace tvac
