#include "tvac/constitutive.hpp"

#include <cmath>
#include <stdexcept>

#include "tvac/fem.hpp"

namespace tvac {

Tensor4 Tensor4::isotropic(double lame_lambda, double lame_mu) {
  Tensor4 t;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int h = 0; h < 2; ++h)
          t.c[i][j][k][h] = lame_lambda * (i == j) * (k == h) +
                            lame_mu * ((i == k) * (j == h) + (i == h) * (j == k));
  return t;
}

Eigen::Matrix2d Tensor4::contract(const Eigen::Matrix2d& eps) const {
  Eigen::Matrix2d out = Eigen::Matrix2d::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int h = 0; h < 2; ++h)
          out(i, j) += c[i][j][k][h] * eps(k, h);
  return out;
}

void Tensor4::validate_symmetry() const {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int h = 0; h < 2; ++h) {
          if (std::abs(c[i][j][k][h] - c[j][i][k][h]) > 1e-14 ||
              std::abs(c[i][j][k][h] - c[k][h][i][j]) > 1e-14)
            throw std::invalid_argument("tensor symmetry violated (ass-K)");
        }
}

double Tensor4::ellipticity() const {
  // Quadratic form over symmetric 2x2 matrices in the orthonormal basis
  // {e11, e22, (e12+e21)/sqrt(2)} of the Frobenius product.
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::Matrix2d basis[3];
  basis[0] << 1, 0, 0, 0;
  basis[1] << 0, 0, 0, 1;
  basis[2] << 0, r, r, 0;
  Eigen::Matrix3d Q;
  for (int a = 0; a < 3; ++a) {
    const Eigen::Matrix2d Cb = contract(basis[a]);
    for (int b = 0; b < 3; ++b) Q(a, b) = (Cb.array() * basis[b].array()).sum();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(Q);
  return es.eigenvalues().minCoeff();
}

double AlphaSpec::value(double t) const {
  switch (kind) {
    case Kind::PowerLaw: return c0 * (1.0 + std::pow(std::abs(t), mu));
    case Kind::Constant: return constant;
    case Kind::Custom: return fn(t);
  }
  throw std::logic_error("bad alpha kind");
}

double AlphaSpec::slope(double t) const {
  switch (kind) {
    case Kind::PowerLaw: {
      const double a = std::abs(t);
      const double d = c0 * mu * std::pow(a, mu - 1.0);
      return t >= 0.0 ? d : -d;
    }
    case Kind::Constant: return 0.0;
    case Kind::Custom:
      if (dfn) return dfn(t);
      return (fn(t + 1e-7) - fn(t - 1e-7)) / 2e-7;
  }
  throw std::logic_error("bad alpha kind");
}

double KappaSpec::value(double x) const {
  switch (kind) {
    case Kind::Quadratic: return std::max(ck * (x * x + 1.0), 0.0);
    case Kind::Constant: return constant;
    case Kind::Custom: return fn(x);
  }
  throw std::logic_error("bad kappa kind");
}

double LambdaSpec::value(double r) const {
  return kind == Kind::Linear ? lipschitz * r : fn(r);
}

double LambdaSpec::slope(double r) const {
  if (kind == Kind::Linear) return lipschitz;
  if (dfn) return dfn(r);
  return (fn(r + 1e-7) - fn(r - 1e-7)) / 2e-7;
}

double GammaSpec::value(double r) const {
  switch (kind) {
    case Kind::Zero: return 0.0;
    case Kind::Quadratic: return a * (r - 0.5) * (r - 0.5);
    case Kind::DoubleWell: return a * (0.25 * r * r * r * r - 0.5 * r * r);
    case Kind::Custom: return fn(r);
  }
  throw std::logic_error("bad gamma kind");
}

double GammaSpec::slope(double r) const {
  switch (kind) {
    case Kind::Zero: return 0.0;
    case Kind::Quadratic: return 2.0 * a * (r - 0.5);
    case Kind::DoubleWell: return a * (r * r * r - r);
    case Kind::Custom:
      if (dfn) return dfn(r);
      return (fn(r + 1e-7) - fn(r - 1e-7)) / 2e-7;
  }
  throw std::logic_error("bad gamma kind");
}

namespace {

// Adaptive Simpson quadrature for the custom primitives.
double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return simpson(f, a, b, fa, fm, fb, whole, tol, 48);
}

}  // namespace

Constitutive::Constitutive(AlphaSpec alpha, KappaSpec kappa, LambdaSpec lambda,
                           GammaSpec gamma, Tensor4 elastic, Tensor4 viscous,
                           MonotoneGraph beta, MonotoneGraph eta)
    : alpha_(std::move(alpha)),
      kappa_(std::move(kappa)),
      lambda_(std::move(lambda)),
      gamma_(std::move(gamma)),
      elastic_(elastic),
      viscous_(viscous),
      beta_(std::move(beta)),
      eta_(std::move(eta)) {
  elastic_.validate_symmetry();
  viscous_.validate_symmetry();
  eps0_ = elastic_.ellipticity();
  nu0_ = viscous_.ellipticity();
  if (!(eps0_ > 0.0)) throw std::invalid_argument("elasticity tensor not elliptic (ass-K)");
  if (!(nu0_ > 0.0)) throw std::invalid_argument("viscosity tensor not elliptic (ass-K)");

  if (alpha_.kind == AlphaSpec::Kind::PowerLaw) {
    if (!(alpha_.c0 > 0.0) || !(alpha_.c1 >= alpha_.c0) || !(alpha_.mu > 1.0))
      throw std::invalid_argument("conductivity growth needs c1 >= c0 > 0 and mu > 1 (hyp-alpha)");
  }
  if (alpha_.kind == AlphaSpec::Kind::Custom) {
    // Sampled growth envelope c0(1+t^mu) <= alpha(t) <= c1(1+t^mu).
    for (int i = 0; i <= 200; ++i) {
      const double t = 5.0 * i / 200.0;
      const double env = 1.0 + std::pow(t, alpha_.mu);
      const double v = alpha_.value(t);
      if (v < alpha_.c0 * env - 1e-9 || v > alpha_.c1 * env + 1e-9)
        throw std::invalid_argument("conductivity outside the growth envelope (hyp-alpha)");
    }
  }
  if (alpha_.kind == AlphaSpec::Kind::Constant && !(alpha_.constant >= 0.0))
    throw std::invalid_argument("constant conductivity must be >= 0");

  // Exchange coefficient: nonnegative with polynomial growth.
  if (!(kappa_.ck >= 0.0) || !(kappa_.s > 1.0))
    throw std::invalid_argument("exchange growth needs C_k >= 0 and s > 1 (hyp-kappa)");
  for (int i = 0; i <= 200; ++i) {
    const double x = -5.0 + 10.0 * i / 200.0;
    const double v = kappa_.value(x);
    if (!(v >= 0.0))
      throw std::invalid_argument("exchange coefficient must be nonnegative (hyp-kappa)");
    const double grow = std::max(kappa_.ck, kappa_.constant) *
                        (std::pow(std::abs(x), kappa_.s) + 1.0);
    if (v > grow + 1e-9)
      throw std::invalid_argument("exchange coefficient exceeds polynomial growth (hyp-kappa)");
  }

  // Latent heat: Lipschitz with the claimed constant, delta-concave.
  {
    const int n = 400;
    double prev = lambda_.value(-10.0);
    for (int i = 1; i <= n; ++i) {
      const double x = -10.0 + 20.0 * i / n;
      const double v = lambda_.value(x);
      if (std::abs(v - prev) > lambda_.lipschitz * (20.0 / n) + 1e-9)
        throw std::invalid_argument("latent-heat function not Lipschitz with the stated constant (hyp-lambda)");
      prev = v;
    }
    validate_delta_concave([this](double r) { return lambda_.value(r); }, lambda_.delta,
                           -10.0, 10.0, 2001);
  }
  validate_nu_convex([this](double r) { return gamma_.value(r); }, gamma_.nu, -10.0, 10.0,
                     2001);

  // Lower bound for W = beta_pot + gamma. On dom(beta) the indicator part
  // vanishes, so for interval graphs the bound comes from gamma alone.
  double wmin = 0.0;
  const double lo = std::isfinite(beta_.lower()) ? beta_.lower() : -10.0;
  const double hi = std::isfinite(beta_.upper()) ? beta_.upper() : 10.0;
  for (int i = 0; i <= 1000; ++i) {
    const double x = lo + (hi - lo) * i / 1000.0;
    wmin = std::min(wmin, potential_W_exact(x));
  }
  cw_ = std::max(0.0, -wmin);
}

double Constitutive::alpha_M(double M, double r) const {
  return alpha_.value(trunc_M(M, r));
}

double Constitutive::alpha_M_slope(double M, double r) const {
  if (r < 0.0 || r > M) return 0.0;
  return alpha_.slope(r);
}

double Constitutive::alpha_hat(double r) const {
  if (r < 0.0) throw std::invalid_argument("alpha_hat: requires r >= 0");
  switch (alpha_.kind) {
    case AlphaSpec::Kind::PowerLaw:
      return alpha_.c0 * (r + std::pow(r, alpha_.mu + 1.0) / (alpha_.mu + 1.0));
    case AlphaSpec::Kind::Constant:
      return alpha_.constant * r;
    case AlphaSpec::Kind::Custom:
      return integrate([this](double s) { return alpha_.value(s); }, 0.0, r, 1e-12);
  }
  throw std::logic_error("bad alpha kind");
}

double Constitutive::alpha_hat_hat(double r) const {
  if (r < 0.0) throw std::invalid_argument("alpha_hat_hat: requires r >= 0");
  switch (alpha_.kind) {
    case AlphaSpec::Kind::PowerLaw: {
      const double mu = alpha_.mu;
      return alpha_.c0 * (0.5 * r * r + std::pow(r, mu + 2.0) / ((mu + 2.0) * (mu + 1.0)));
    }
    case AlphaSpec::Kind::Constant:
      return 0.5 * alpha_.constant * r * r;
    case AlphaSpec::Kind::Custom:
      return integrate([this](double s) { return alpha_hat(s); }, 0.0, r, 1e-12);
  }
  throw std::logic_error("bad alpha kind");
}

double Constitutive::potential_W(double varsigma, double x) const {
  return moreau_envelope(beta_, varsigma, x) + gamma_.value(x);
}

double Constitutive::potential_W_exact(double x) const {
  return beta_.potential(x) + gamma_.value(x);
}

Constitutive default_constitutive() {
  AlphaSpec a;  // c0(1 + t^2)
  KappaSpec k;  // C_k (x^2 + 1)
  LambdaSpec l;
  l.lipschitz = 0.5;
  GammaSpec g;
  g.kind = GammaSpec::Kind::Quadratic;
  g.a = 1.0;
  return Constitutive(a, k, l, g, Tensor4::isotropic(1.0, 1.0),
                      Tensor4::isotropic(0.5, 0.5));
}

namespace {

double bilinear_form(const Tensor4& C, const Meshes& m, const Eigen::VectorXd& u,
                     const Eigen::VectorXd& w) {
  const int n2 = 2 * m.bulk.num_nodes();
  if (u.size() != n2 || w.size() != n2)
    throw std::invalid_argument("bilinear form: field size mismatch");
  for (int i = 0; i < m.bulk.num_nodes(); ++i) {
    if (m.bulk.is_dirichlet(i) &&
        (u[2 * i] != 0.0 || u[2 * i + 1] != 0.0 || w[2 * i] != 0.0 || w[2 * i + 1] != 0.0))
      throw std::invalid_argument("bilinear form: field nonzero at a Dirichlet node");
  }
  double acc = 0.0;
  for (const auto& g : tri_geometry(m.bulk)) {
    const Eigen::Matrix2d eu = strain(g, u);
    const Eigen::Matrix2d ew = strain(g, w);
    acc += g.area * (C.contract(eu).array() * ew.array()).sum();
  }
  return acc;
}

}  // namespace

double bilinear_e(const Constitutive& c, const Meshes& m, const Eigen::VectorXd& u,
                  const Eigen::VectorXd& w) {
  return bilinear_form(c.elastic(), m, u, w);
}

double bilinear_v(const Constitutive& c, const Meshes& m, const Eigen::VectorXd& u,
                  const Eigen::VectorXd& w) {
  return bilinear_form(c.viscous(), m, u, w);
}

KornConstants korn_constants(const Constitutive& c, const Meshes& m) {
  const Eigen::SparseMatrix<double> E = elastic_matrix(m.bulk, c.elastic());
  const Eigen::SparseMatrix<double> V = elastic_matrix(m.bulk, c.viscous());
  const Eigen::SparseMatrix<double> G = vector_h1_gram(m.bulk);

  std::vector<int> free;
  for (int i = 0; i < m.bulk.num_nodes(); ++i)
    if (!m.bulk.is_dirichlet(i)) {
      free.push_back(2 * i);
      free.push_back(2 * i + 1);
    }
  const int nf = static_cast<int>(free.size());
  Eigen::MatrixXd Ef(nf, nf), Vf(nf, nf), Gf(nf, nf);
  for (int a = 0; a < nf; ++a)
    for (int b = 0; b < nf; ++b) {
      Ef(a, b) = E.coeff(free[a], free[b]);
      Vf(a, b) = V.coeff(free[a], free[b]);
      Gf(a, b) = G.coeff(free[a], free[b]);
    }
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ese(Ef, Gf);
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> esv(Vf, Gf);
  return {ese.eigenvalues().minCoeff(), esv.eigenvalues().minCoeff()};
}

}  // namespace tvac
