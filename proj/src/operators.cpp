#include "cosserat_plate/operators.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "cosserat_plate/plate_constitutive.hpp"
#include "cosserat_plate/polynomial.hpp"

namespace cosserat_plate {

namespace {

using Mat20x9 = Eigen::Matrix<double, kNumResultants, kNumKinematicFields>;
using Mat20 = Eigen::Matrix<double, kNumResultants, kNumResultants>;
using Mat20x4 = Eigen::Matrix<double, kNumResultants, 4>;

constexpr std::array<int, 6> kFlexuralFields{0, 1, 2, 3, 4, 5};
constexpr std::array<int, 3> kExtensionalFields{6, 7, 8};

// Linear pieces of the plate model, obtained by probing the pointwise maps:
//   strain = G1 dH/dx1 + G2 dH/dx2 + G0 H,  stress = C strain + P loads.
struct Composition {
  std::array<Mat20x9, 3> G;  // G[0] = G1, G[1] = G2, G[2] = G0
  Mat20 C;
  Mat20x4 P;
  Eigen::Matrix<double, kNumKinematicFields, 4> direct = Eigen::Matrix<double, 9, 4>::Zero();
};

Composition compose(const TechnicalConstants& tc) {
  Composition c;
  for (int j = 0; j < kNumKinematicFields; ++j) {
    const PlateKinematics unit = PlateKinematics::from_vector(Vector9::Unit(j));
    KinematicsGradient g1, g2;
    g1.d1 = unit;
    g2.d2 = unit;
    c.G[0].col(j) = strain_from_kinematics(PlateKinematics{}, g1).to_vector();
    c.G[1].col(j) = strain_from_kinematics(PlateKinematics{}, g2).to_vector();
    c.G[2].col(j) = strain_from_kinematics(unit, KinematicsGradient{}).to_vector();
  }
  for (int k = 0; k < kNumResultants; ++k)
    c.C.col(k) = stress_from_strain(PlateStrain::from_vector(Vector20::Unit(k)), tc, LoadValues{})
                     .to_vector();
  for (int l = 0; l < 4; ++l)
    c.P.col(l) = stress_from_strain(PlateStrain{}, tc, LoadValues::from_vector(Eigen::Vector4d::Unit(l)))
                     .to_vector();
  c.direct(2, 0) = 1.0;  // p in the transverse balance
  c.direct(8, 2) = 1.0;  // v in the Omega3_0 balance
  return c;
}

template <std::size_t n>
Eigen::MatrixXd block(const Eigen::MatrixXd& full, const std::array<int, n>& rows,
                      const std::array<int, n>& cols) {
  Eigen::MatrixXd out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = full(rows[i], cols[j]);
  return out;
}

template <std::size_t n>
Eigen::Matrix<double, Eigen::Dynamic, 4> rows_of(const Eigen::Matrix<double, 9, 4>& full,
                                                 const std::array<int, n>& rows) {
  Eigen::Matrix<double, Eigen::Dynamic, 4> out(n, 4);
  for (std::size_t i = 0; i < n; ++i) out.row(i) = full.row(rows[i]);
  return out;
}

template <std::size_t n>
void fill_system(const Composition& c, const std::array<int, n>& fields, SymbolTables& L,
                 LoadTables& loads) {
  const auto& G0 = c.G[2];
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      const Eigen::MatrixXd full = c.G[a].transpose() * c.C * c.G[b];
      L.second[a][b] = block(full, fields, fields);
    }
    const Eigen::MatrixXd first =
        c.G[a].transpose() * c.C * G0 - G0.transpose() * c.C * c.G[a];
    L.first[a] = block(first, fields, fields);
    const Eigen::Matrix<double, 9, 4> grad = c.G[a].transpose() * c.P;
    loads.gradient[a] = -rows_of(grad, fields);
  }
  const Eigen::MatrixXd zeroth = -G0.transpose() * c.C * G0;
  L.zeroth = block(zeroth, fields, fields);
  const Eigen::Matrix<double, 9, 4> value = -G0.transpose() * c.P + c.direct;
  loads.value = -rows_of(value, fields);
}

template <std::size_t n>
void fill_boundary(const Composition& c, const std::array<int, n>& fields, BoundaryTables& T) {
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b)
      T.first[a][b] = block(Eigen::MatrixXd(c.G[a].transpose() * c.C * c.G[b]), fields, fields);
    T.zeroth[a] = block(Eigen::MatrixXd(c.G[a].transpose() * c.C * c.G[2]), fields, fields);
    const Eigen::Matrix<double, 9, 4> load = c.G[a].transpose() * c.P;
    T.load[a] = rows_of(load, fields);
  }
}

void check_inputs(const TechnicalConstants& tc, double h) {
  if (!(h > 0.0)) throw DomainError("plate thickness must be positive");
  if (!(tc.G > 0.0) || !(tc.D > 0.0) || !(tc.N >= 0.0 && tc.N < 1.0) ||
      !(tc.l_t > 0.0) || !(tc.l_b > 0.0) || !(tc.Psi_polar > 0.0) ||
      !(4.0 * tc.l_b * tc.l_b > tc.l_t * tc.l_t))
    throw DomainError("technical constants are not admissible");
  if (std::abs(tc.h - h) > 1e-12 * h) throw DomainError("technical constants built for another thickness");
}

}  // namespace

Eigen::MatrixXd SymbolTables::evaluate(double xi1, double xi2) const {
  const double xi[2] = {xi1, xi2};
  Eigen::MatrixXd out = zeroth;
  for (int a = 0; a < 2; ++a) {
    out += first[a] * xi[a];
    for (int b = 0; b < 2; ++b) out += second[a][b] * (xi[a] * xi[b]);
  }
  return out;
}

Eigen::MatrixXcd SymbolTables::wave_stiffness(double k1, double k2) const {
  const double k[2] = {k1, k2};
  const std::complex<double> i(0.0, 1.0);
  Eigen::MatrixXcd out = -zeroth.cast<std::complex<double>>();
  for (int a = 0; a < 2; ++a) {
    out -= i * k[a] * first[a].cast<std::complex<double>>();
    for (int b = 0; b < 2; ++b) out += (k[a] * k[b]) * second[a][b].cast<std::complex<double>>();
  }
  return out;
}

Eigen::VectorXd LoadTables::F(const LoadValues& l, const LoadValues& d1,
                              const LoadValues& d2) const {
  return gradient[0] * d1.to_vector() + gradient[1] * d2.to_vector() + value * l.to_vector();
}

Eigen::MatrixXd BoundaryTables::evaluate(double xi1, double xi2, double n1, double n2) const {
  const double xi[2] = {xi1, xi2};
  const double n[2] = {n1, n2};
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(size(), size());
  for (int a = 0; a < 2; ++a) {
    out += n[a] * zeroth[a];
    for (int b = 0; b < 2; ++b) out += (n[a] * xi[b]) * first[a][b];
  }
  return out;
}

Eigen::VectorXd BoundaryTables::F_star(double n1, double n2, const LoadValues& loads,
                                       const Eigen::VectorXd& prescribed) const {
  const Eigen::Vector4d l = loads.to_vector();
  return prescribed - n1 * load[0] * l - n2 * load[1] * l;
}

std::array<double, 14> printed_k(const TechnicalConstants& tc) {
  const double D = tc.D, G = tc.G, h = tc.h, nu = tc.nu, psi = tc.Psi_polar;
  const double n2 = tc.N * tc.N, lt2 = tc.l_t * tc.l_t, lb2 = tc.l_b * tc.l_b;
  return {D * (1.0 - n2),
          D * (1.0 - nu) / 2.0,
          -5.0 * G * h / 6.0,
          5.0 * G * h / 6.0,
          D * (1.0 - nu) * lt2 * (4.0 * lb2 - lt2) * (1.0 - n2) / (2.0 * lb2),
          2.0 * n2 * D * (1.0 - nu),
          5.0 * h * (1.0 - n2) * G * lt2 * (2.0 - psi) / 3.0,
          10.0 * h * (1.0 - n2) * G * lb2 / 3.0,
          10.0 * h * G * n2 / 3.0,
          D * (1.0 + nu - 2.0 * n2) / 2.0,
          5.0 * G * h * (2.0 * n2 - 1.0) / 6.0,
          D * n2 * (1.0 - nu),
          5.0 * G * h * n2 / 3.0,
          5.0 * h * (1.0 - n2) * G * (lt2 * (2.0 - psi) - 2.0 * lb2) / 3.0};
}

std::array<double, 5> printed_kappa(const TechnicalConstants& tc) {
  const double n2 = tc.N * tc.N, lt2 = tc.l_t * tc.l_t, lb2 = tc.l_b * tc.l_b;
  const double k1 = 2.0 * (1.0 - n2) / (1.0 - tc.nu);
  return {k1, 2.0 * n2, (1.0 + tc.nu - 2.0 * n2) / (1.0 - tc.nu), n2,
          lt2 * (4.0 * lb2 - lt2) * (1.0 - n2) / (2.0 * lb2)};
}

double flexural_normalization(const TechnicalConstants& tc) { return 1.0 - tc.N * tc.N; }

double extensional_normalization(const TechnicalConstants& tc) {
  return (1.0 - tc.N * tc.N) / (tc.G * tc.h);
}

Eigen::MatrixXd printed_flexural_symbol(const TechnicalConstants& tc, double x1, double x2) {
  const auto k = printed_k(tc);
  auto K = [&](int i) { return k[i - 1]; };
  const double lap = x1 * x1 + x2 * x2;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(6, 6);
  const double L11 = K(1) * x1 * x1 + K(2) * x2 * x2 - K(3);
  const double L22 = K(1) * x2 * x2 + K(2) * x1 * x1 - K(3);
  const double L55 = K(7) * x1 * x1 + K(8) * x2 * x2 - K(9);
  const double L66 = -(K(7) * x2 * x2 + K(8) * x1 * x1 - K(9));
  const double L12 = K(10) * x1 * x2, L13 = K(11) * x1, L14 = K(12) * x2, L16 = K(13);
  const double L23 = K(11) * x2, L24 = K(12) * x1, L35 = -K(13) * x2, L36 = K(13) * x1;
  const double L56 = K(14) * x1 * x2;
  L << L11, L12, L13, L14, 0, L16,
       L12, L22, L23, L24, -L16, 0,
       -L13, -L23, K(4) * lap, 0, L35, L36,
       -L14, L24, 0, K(5) * lap - K(6), 0, 0,
       0, L16, -L35, 0, L55, L56,
       L16, 0, L36, 0, -L56, L66;
  return L;
}

Eigen::MatrixXd printed_extensional_symbol(const TechnicalConstants& tc, double x1, double x2) {
  const auto c = printed_kappa(tc);
  Eigen::MatrixXd L(3, 3);
  const double L11 = c[0] * x1 * x1 + c[1] * x2 * x2;
  const double L12 = c[2] * x1 * x2;
  L << L11, L12, 2.0 * c[3] * x2,
       L12, L11, 2.0 * c[3] * x1,
       -c[3] * x2, c[3] * x1, c[4] * (x1 * x1 + x2 * x2) - c[1];
  return L;
}

Eigen::MatrixXd printed_flexural_traction(const TechnicalConstants& tc, double x1, double x2,
                                          double n1, double n2) {
  const double D = tc.D, G = tc.G, h = tc.h, nu = tc.nu, psi = tc.Psi_polar;
  const double N2 = tc.N * tc.N, lt2 = tc.l_t * tc.l_t, lb2 = tc.l_b * tc.l_b;
  // Argument swaps such as T1(xi2, xi1) exchange the normal components as well.
  auto T1 = [&](double a1, double a2, double m1, double m2) {
    return D * m1 * a1 + D * (1.0 + nu) / (2.0 * (1.0 - N2)) * m2 * a2;
  };
  auto T2 = [&](double a1, double a2, double m1, double m2) {
    return 5.0 * G * h / 3.0 * (lt2 * m1 * (1.0 - psi) * a2 + (lt2 - 2.0 * lb2) * m2 * a1);
  };
  const double nx = n1 * x1 + n2 * x2;
  const double twist = D * (1.0 + nu) * (1.0 - 2.0 * N2) / (2.0 * (1.0 - N2));
  const double shear = 5.0 * G * h * (1.0 - 2.0 * N2) / (6.0 * (1.0 - N2));
  Eigen::MatrixXd T = Eigen::MatrixXd::Zero(6, 6);
  T(0, 0) = T1(x1, x2, n1, n2);
  T(1, 1) = T1(x2, x1, n2, n1);
  T(2, 2) = 5.0 * G * h / (6.0 * (1.0 - N2)) * nx;
  T(3, 3) = G * lt2 * (4.0 * lb2 - lt2) * h * h * h / (12.0 * lb2) * nx;
  T(4, 4) = 5.0 * G * h / 3.0 * (lt2 * n1 * (2.0 - psi) * x1 + 2.0 * lb2 * n2 * x2);
  T(5, 5) = 5.0 * G * h / 3.0 * (2.0 * lb2 * n1 * x1 + lt2 * (2.0 - psi) * n2 * x2);
  T(0, 1) = D * nu * n1 * x2 + twist * n2 * x1;
  T(0, 3) = D * (1.0 + nu) * N2 / (1.0 - N2) * n2;
  T(1, 0) = D * nu * n2 * x1 + twist * n1 * x2;
  T(1, 3) = -D * (1.0 + nu) * N2 / (1.0 - N2) * n1;
  T(2, 0) = shear * n1;
  T(2, 1) = shear * n2;
  T(2, 5) = 5.0 * G * h * N2 / (3.0 * (1.0 - N2)) * (n1 - n2);
  T(4, 5) = T2(x2, x1, n2, n1);
  T(5, 4) = T(4, 5);
  return T;
}

FlexuralOperator build_flexural(const TechnicalConstants& tc, const InertiaSet& inertia,
                                double h) {
  check_inputs(tc, h);
  FlexuralOperator op;
  op.tc = tc;
  op.k = printed_k(tc);
  fill_system(compose(tc), kFlexuralFields, op.L, op.loads);
  op.mass = inertia.flexural_mass();
  return op;
}

ExtensionalOperator build_extensional(const TechnicalConstants& tc, const InertiaSet& inertia,
                                      double h) {
  check_inputs(tc, h);
  ExtensionalOperator op;
  op.tc = tc;
  op.kappa = printed_kappa(tc);
  fill_system(compose(tc), kExtensionalFields, op.L, op.loads);
  op.mass = inertia.extensional_mass();
  return op;
}

TractionOperator build_traction(const TechnicalConstants& tc, double h) {
  check_inputs(tc, h);
  TractionOperator op;
  op.tc = tc;
  const Composition c = compose(tc);
  fill_boundary(c, kFlexuralFields, op.flexural);
  fill_boundary(c, kExtensionalFields, op.extensional);
  return op;
}

namespace {

struct PolyFields {
  std::array<Poly2, kNumKinematicFields> u;
  std::array<Poly2, 4> loads;
};

PolyFields random_fields(std::uint64_t seed, int degree) {
  std::mt19937_64 rng(seed);
  PolyFields f;
  for (auto& p : f.u) p = Poly2::random(degree, rng);
  for (auto& p : f.loads) p = Poly2::random(degree, rng);
  return f;
}

PlateKinematics eval_u(const std::array<Poly2, 9>& u, double x, double y) {
  Vector9 v;
  for (int j = 0; j < 9; ++j) v[j] = u[j](x, y);
  return PlateKinematics::from_vector(v);
}

LoadValues eval_l(const std::array<Poly2, 4>& l, double x, double y) {
  return {l[0](x, y), l[1](x, y), l[2](x, y), l[3](x, y)};
}

template <std::size_t n>
std::array<Poly2, n> diff(const std::array<Poly2, n>& p, int axis) {
  std::array<Poly2, n> d;
  for (std::size_t i = 0; i < n; ++i) d[i] = p[i].derivative(axis);
  return d;
}

// Resultants and their first derivatives at a point, all from the pointwise
// constitutive map (jointly linear in kinematics, gradients and loads).
struct PointState {
  PlateStress S;
  std::array<PlateStress, 2> dS;
  LoadValues loads;
  std::array<LoadValues, 2> dloads;
  Vector9 H;
  std::array<Vector9, 2> dH;
  std::array<std::array<Vector9, 2>, 2> ddH;
};

PointState point_state(const PolyFields& f, const TechnicalConstants& tc, double x, double y) {
  PointState s;
  const std::array<std::array<Poly2, 9>, 2> du = {diff(f.u, 0), diff(f.u, 1)};
  const std::array<std::array<Poly2, 4>, 2> dl = {diff(f.loads, 0), diff(f.loads, 1)};
  s.loads = eval_l(f.loads, x, y);
  s.H = eval_u(f.u, x, y).to_vector();
  const KinematicsGradient grad{eval_u(du[0], x, y), eval_u(du[1], x, y)};
  s.S = stress_from_kinematics(eval_u(f.u, x, y), grad, tc, s.loads);
  for (int a = 0; a < 2; ++a) {
    s.dloads[a] = eval_l(dl[a], x, y);
    s.dH[a] = eval_u(du[a], x, y).to_vector();
    const KinematicsGradient dgrad{eval_u(diff(du[a], 0), x, y), eval_u(diff(du[a], 1), x, y)};
    s.ddH[a][0] = dgrad.d1.to_vector();
    s.ddH[a][1] = dgrad.d2.to_vector();
    s.dS[a] = stress_from_kinematics(eval_u(du[a], x, y), dgrad, tc, s.dloads[a]);
  }
  return s;
}

constexpr double levi(int a, int b) { return a == b ? 0.0 : (a == 0 ? 1.0 : -1.0); }

template <std::size_t n>
Eigen::VectorXd apply(const SymbolTables& L, const PointState& s, const std::array<int, n>& f) {
  auto pick = [&](const Vector9& v) {
    Eigen::VectorXd out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = v[f[i]];
    return out;
  };
  Eigen::VectorXd out = L.zeroth * pick(s.H);
  for (int a = 0; a < 2; ++a) {
    out += L.first[a] * pick(s.dH[a]);
    for (int b = 0; b < 2; ++b) out += L.second[a][b] * pick(s.ddH[a][b]);
  }
  return out;
}

template <class Op, std::size_t n, class Balance>
OracleResult run_oracle(const Op& op, const std::array<int, n>& fields, std::uint64_t seed,
                        int degree, int samples, Balance balance) {
  const PolyFields f = random_fields(seed, degree);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  OracleResult r;
  for (int k = 0; k < samples; ++k) {
    const PointState s = point_state(f, op.tc, u(rng), u(rng));
    const Eigen::VectorXd lhs = apply(op.L, s, fields);
    const Eigen::VectorXd F = op.F(s.loads, s.dloads[0], s.dloads[1]);
    const Eigen::VectorXd bal = balance(s);
    r.residual = std::max(r.residual, (lhs - F - bal).cwiseAbs().maxCoeff());
    r.scale = std::max({r.scale, lhs.cwiseAbs().maxCoeff(), F.cwiseAbs().maxCoeff(),
                        bal.cwiseAbs().maxCoeff()});
  }
  return r;
}

}  // namespace

OracleResult operator_residual_oracle(const FlexuralOperator& op, std::uint64_t seed, int degree,
                                      int samples) {
  return run_oracle(op, kFlexuralFields, seed, degree, samples, [](const PointState& s) {
    Eigen::VectorXd b = Eigen::VectorXd::Zero(6);
    for (int beta = 0; beta < 2; ++beta) {
      b[beta] = s.dS[0].M(0, beta) + s.dS[1].M(1, beta) - s.S.Q[beta];
      b[4 + beta] = s.dS[0].R(0, beta) + s.dS[1].R(1, beta);
      for (int g = 0; g < 2; ++g) b[4 + beta] += levi(beta, g) * (s.S.Q_s[g] - s.S.Q[g]);
    }
    b[2] = s.dS[0].Q_s[0] + s.dS[1].Q_s[1] + s.loads.p;
    b[3] = s.dS[0].S_s[0] + s.dS[1].S_s[1] + s.S.M(0, 1) - s.S.M(1, 0);
    return b;
  });
}

OracleResult operator_residual_oracle(const ExtensionalOperator& op, std::uint64_t seed,
                                      int degree, int samples) {
  return run_oracle(op, kExtensionalFields, seed, degree, samples, [](const PointState& s) {
    Eigen::VectorXd b = Eigen::VectorXd::Zero(3);
    for (int beta = 0; beta < 2; ++beta) b[beta] = s.dS[0].N(0, beta) + s.dS[1].N(1, beta);
    b[2] = s.dS[0].M_s[0] + s.dS[1].M_s[1] + s.S.N(0, 1) - s.S.N(1, 0) + s.loads.v;
    return b;
  });
}

namespace {

using SymbolFn = std::function<Eigen::MatrixXd(double, double)>;

// Monomial coefficients of a symbol of degree <= 2: 1, xi1, xi2, xi1^2, xi1 xi2, xi2^2.
std::array<Eigen::MatrixXd, 6> monomials(const SymbolFn& f) {
  const Eigen::MatrixXd c0 = f(0, 0);
  const Eigen::MatrixXd p1 = f(1, 0), m1 = f(-1, 0), p2 = f(0, 1), m2 = f(0, -1);
  std::array<Eigen::MatrixXd, 6> c;
  c[0] = c0;
  c[1] = 0.5 * (p1 - m1);
  c[2] = 0.5 * (p2 - m2);
  c[3] = 0.5 * (p1 + m1) - c0;
  c[5] = 0.5 * (p2 + m2) - c0;
  c[4] = f(1, 1) - c0 - c[1] - c[2] - c[3] - c[5];
  return c;
}

constexpr std::array<const char*, 6> kMonomialNames{"1", "xi1", "xi2", "xi1^2", "xi1*xi2",
                                                    "xi2^2"};

const std::array<std::array<const char*, 6>, 6> kPrintedL{{
    {"k1*xi1^2+k2*xi2^2-k3", "k10*xi1*xi2", "k11*xi1", "k12*xi2", "0", "k13"},
    {"k10*xi1*xi2", "k1*xi2^2+k2*xi1^2-k3", "k11*xi2", "k12*xi1", "-k13", "0"},
    {"-k11*xi1", "-k11*xi2", "k4*(xi1^2+xi2^2)", "0", "-k13*xi2", "k13*xi1"},
    {"-k12*xi2", "k12*xi1", "0", "k5*(xi1^2+xi2^2)-k6", "0", "0"},
    {"0", "k13", "k13*xi2", "0", "k7*xi1^2+k8*xi2^2-k9", "k14*xi1*xi2"},
    {"k13", "0", "k13*xi1", "0", "-k14*xi1*xi2", "-(k7*xi2^2+k8*xi1^2-k9)"},
}};

const std::array<std::array<const char*, 3>, 3> kPrintedLt{{
    {"kappa1*xi1^2+kappa2*xi2^2", "kappa3*xi1*xi2", "2*kappa4*xi2"},
    {"kappa3*xi1*xi2", "kappa1*xi1^2+kappa2*xi2^2", "2*kappa4*xi1"},
    {"-kappa4*xi2", "kappa4*xi1", "kappa5*(xi1^2+xi2^2)-kappa2"},
}};

const std::array<std::array<const char*, 6>, 6> kPrintedT{{
    {"D*n1*xi1+D*(1+nu)/(2*(1-N^2))*n2*xi2", "D*nu*n1*xi2+D*(1+nu)*(1-2N^2)/(2*(1-N^2))*n2*xi1",
     "0", "D*(1+nu)*N^2/(1-N^2)*n2", "0", "0"},
    {"D*nu*n2*xi1+D*(1+nu)*(1-2N^2)/(2*(1-N^2))*n1*xi2", "D*n2*xi2+D*(1+nu)/(2*(1-N^2))*n1*xi1",
     "0", "-D*(1+nu)*N^2/(1-N^2)*n1", "0", "0"},
    {"5Gh*(1-2N^2)/(6*(1-N^2))*n1", "5Gh*(1-2N^2)/(6*(1-N^2))*n2",
     "5Gh/(6*(1-N^2))*(n1*xi1+n2*xi2)", "0", "0", "5Gh*N^2/(3*(1-N^2))*(n1-n2)"},
    {"0", "0", "0", "G*lt^2*(4lb^2-lt^2)*h^3/(12lb^2)*(n1*xi1+n2*xi2)", "0", "0"},
    {"0", "0", "0", "0", "5Gh/3*(lt^2*n1*(2-Psi)*xi1+2lb^2*n2*xi2)", "T2(xi2,xi1)"},
    {"0", "0", "0", "0", "T2(xi2,xi1)", "5Gh/3*(2lb^2*n1*xi1+lt^2*(2-Psi)*n2*xi2)"},
}};

void push_rows(std::vector<CoefficientDiff>& out, const std::string& prefix, int rows, int cols,
               const SymbolFn& paper, const SymbolFn& oracle, int monomial_count,
               const std::function<std::string(int, int)>& expr) {
  const auto pc = monomials(paper);
  const auto oc = monomials(oracle);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      for (int m = 0; m < monomial_count; ++m) {
        const double pv = pc[m](i, j);
        const double ov = oc[m](i, j);
        if (pv == 0.0 && std::abs(ov) < 1e-300) continue;
        CoefficientDiff d;
        d.entry = prefix + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")[" +
                  kMonomialNames[m] + "]";
        d.paper_value_expr = expr(i, j);
        d.paper_value = pv;
        d.oracle_value = ov;
        d.abs_diff = std::abs(pv - ov);
        out.push_back(d);
      }
}

}  // namespace

std::vector<CoefficientDiff> coefficient_diff(const TechnicalConstants& tc) {
  InertiaSet unit_mass{1, 1, 1, 1, 1, 1};
  const FlexuralOperator flex = build_flexural(tc, unit_mass, tc.h);
  const ExtensionalOperator ext = build_extensional(tc, unit_mass, tc.h);
  const TractionOperator trac = build_traction(tc, tc.h);
  const double sf = flexural_normalization(tc);
  const double se = extensional_normalization(tc);

  std::vector<CoefficientDiff> out;
  push_rows(
      out, "L", 6, 6, [&](double a, double b) { return printed_flexural_symbol(tc, a, b); },
      [&](double a, double b) { return Eigen::MatrixXd(sf * flex.symbol(a, b)); }, 6,
      [](int i, int j) { return std::string(kPrintedL[i][j]); });
  push_rows(
      out, "Lt", 3, 3, [&](double a, double b) { return printed_extensional_symbol(tc, a, b); },
      [&](double a, double b) { return Eigen::MatrixXd(se * ext.symbol(a, b)); }, 6,
      [](int i, int j) { return std::string(kPrintedLt[i][j]); });
  for (int axis = 0; axis < 2; ++axis) {
    const double n1 = axis == 0 ? 1.0 : 0.0, n2 = 1.0 - n1;
    const std::string tag = axis == 0 ? "T[n=e1]" : "T[n=e2]";
    push_rows(
        out, tag, 6, 6,
        [&](double a, double b) { return printed_flexural_traction(tc, a, b, n1, n2); },
        [&](double a, double b) { return trac.flexural.evaluate(a, b, n1, n2); }, 3,
        [](int i, int j) { return std::string(kPrintedT[i][j]); });
  }

  // Load vectors: printed F per unit load gradient / load value.
  const double nu = tc.nu, h = tc.h, n2 = tc.N * tc.N, psi = tc.Psi_polar;
  auto add_load = [&](const std::string& entry, const std::string& expr, double paper,
                      double oracle) {
    out.push_back({entry, expr, paper, oracle, std::abs(paper - oracle)});
  };
  const LoadValues zero{};
  const LoadValues unit_p{1, 0, 0, 0}, unit_s{0, 1, 0, 0}, unit_v{0, 0, 1, 0}, unit_t{0, 0, 0, 1};
  const Eigen::VectorXd F_dp1 = sf * flex.F(zero, unit_p, zero);
  const Eigen::VectorXd F_dp2 = sf * flex.F(zero, zero, unit_p);
  const Eigen::VectorXd F_p = sf * flex.F(unit_p, zero, zero);
  const Eigen::VectorXd F_dt1 = sf * flex.F(zero, unit_t, zero);
  const Eigen::VectorXd F_dt2 = sf * flex.F(zero, zero, unit_t);
  const double fp = -h * h * nu * (1.0 - n2) / (10.0 * (1.0 - nu));
  const double ft = 5.0 * h * (1.0 - n2) / 6.0 * (1.0 - psi);
  add_load("F1[dp/dx1]", "-h^2*nu*(1-N^2)/(10*(1-nu))", fp, F_dp1[0]);
  add_load("F2[dp/dx2]", "-h^2*nu*(1-N^2)/(10*(1-nu))", fp, F_dp2[1]);
  add_load("F3[p]", "-(1-N^2)", -(1.0 - n2), F_p[2]);
  add_load("F5[dt/dx1]", "-5h*(1-N^2)/6*(1-Psi)", -ft, F_dt1[4]);
  add_load("F6[dt/dx2]", "5h*(1-N^2)/6*(1-Psi)", ft, F_dt2[5]);
  const Eigen::VectorXd Ft_ds1 = se * ext.F(zero, unit_s, zero);
  const Eigen::VectorXd Ft_ds2 = se * ext.F(zero, zero, unit_s);
  const Eigen::VectorXd Ft_v = se * ext.F(unit_v, zero, zero);
  const double fs = -nu * printed_kappa(tc)[0] / (2.0 * tc.G);
  add_load("Ft1[dsigma0/dx1]", "-nu*kappa1/(2G)", fs, Ft_ds1[0]);
  add_load("Ft2[dsigma0/dx2]", "-nu*kappa1/(2G)", fs, Ft_ds2[1]);
  add_load("Ft3[v]", "-(1-N^2)/(Gh)", -(1.0 - n2) / (tc.G * h), Ft_v[2]);
  return out;
}

std::string coefficient_diff_csv(const std::vector<CoefficientDiff>& rows) {
  std::ostringstream os;
  os << "entry,paper_value_expr,oracle_value,abs_diff\n" << std::setprecision(17);
  for (const auto& r : rows)
    os << r.entry << ",\"" << r.paper_value_expr << "\"," << r.oracle_value << ',' << r.abs_diff
       << '\n';
  return os.str();
}

}  // namespace cosserat_plate
