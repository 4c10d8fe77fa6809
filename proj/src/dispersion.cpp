#include "cosserat_plate/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

namespace cosserat_plate {

BranchSet branches(const SymbolTables& L, const Eigen::VectorXd& mass, double k1, double k2,
                   bool with_modes) {
  const Eigen::VectorXd inv_sqrt = mass.cwiseSqrt().cwiseInverse();
  Eigen::MatrixXcd A = L.wave_stiffness(k1, k2);
  A = inv_sqrt.asDiagonal() * A * inv_sqrt.asDiagonal();
  A = 0.5 * (A + A.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      A, with_modes ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
  const Eigen::VectorXd lam = es.eigenvalues();
  const double scale = std::max(1.0, lam.cwiseAbs().maxCoeff());
  BranchSet out;
  for (int i = 0; i < lam.size(); ++i) {
    if (lam[i] < -1e-10 * scale)
      throw DomainError("non-conservative symbol: negative squared frequency " +
                        std::to_string(lam[i]));
    out.omega.push_back(std::sqrt(std::max(0.0, lam[i])));
  }
  if (with_modes) {
    out.modes = inv_sqrt.asDiagonal() * es.eigenvectors();
    for (int c = 0; c < out.modes.cols(); ++c) {
      Eigen::Index imax = 0;
      out.modes.col(c).cwiseAbs().maxCoeff(&imax);
      const std::complex<double> z = out.modes(imax, c);
      if (std::abs(z) > 0.0) out.modes.col(c) *= std::conj(z) / std::abs(z);
    }
  }
  return out;
}

std::vector<WaveDirection> default_directions() {
  return {{"x1", {1.0, 0.0}}, {"x2", {0.0, 1.0}}, {"diagonal", Eigen::Vector2d(1.0, 1.0).normalized()}};
}

std::vector<double> wavenumber_samples(double k_min, double k_split, double k_max, int n_log,
                                       int n_lin) {
  std::vector<double> k{0.0};
  for (int i = 0; i < n_log; ++i)
    k.push_back(k_min * std::pow(k_split / k_min, static_cast<double>(i) / n_log));
  for (int i = 0; i < n_lin; ++i)
    k.push_back(k_split + (k_max - k_split) * (n_lin == 1 ? 0.0 : static_cast<double>(i) / (n_lin - 1)));
  return k;
}

DispersionResult dispersion_curves(const FlexuralOperator& flexural,
                                   const ExtensionalOperator& extensional,
                                   const std::vector<WaveDirection>& directions,
                                   const std::vector<double>& magnitudes, bool with_modes) {
  DispersionResult r;
  for (const auto& d : directions)
    for (double k : magnitudes) {
      DispersionSample s;
      s.direction = d.name;
      s.xi = k * d.unit;
      const BranchSet f = branches(flexural.L, flexural.mass, s.xi[0], s.xi[1], with_modes);
      const BranchSet e = branches(extensional.L, extensional.mass, s.xi[0], s.xi[1], with_modes);
      s.flexural = f.omega;
      s.extensional = e.omega;
      s.flexural_modes = f.modes;
      s.extensional_modes = e.modes;
      r.samples.push_back(std::move(s));
    }
  return r;
}

namespace {

int count_zero(const std::vector<double>& omega, double tol) {
  double top = 0.0;
  for (double w : omega) top = std::max(top, w * w);
  int n = 0;
  for (double w : omega)
    if (w * w <= tol * std::max(1.0, top)) ++n;
  return n;
}

std::vector<std::string> zero_fields(const BranchSet& b, int count, int field_offset) {
  std::vector<std::string> names;
  for (int c = 0; c < count; ++c) {
    Eigen::Index imax = 0;
    b.modes.col(c).cwiseAbs().maxCoeff(&imax);
    names.emplace_back(PlateKinematics::field_name(static_cast<int>(imax) + field_offset));
  }
  return names;
}

}  // namespace

CutoffResult cutoff_frequencies(const FlexuralOperator& flexural,
                                const ExtensionalOperator& extensional, double zero_tol) {
  const BranchSet f = branches(flexural.L, flexural.mass, 0.0, 0.0, true);
  const BranchSet e = branches(extensional.L, extensional.mass, 0.0, 0.0, true);
  CutoffResult r;
  r.flexural = f.omega;
  r.extensional = e.omega;
  r.flexural_zero_modes = count_zero(f.omega, zero_tol);
  r.extensional_zero_modes = count_zero(e.omega, zero_tol);
  r.flexural_zero_fields = zero_fields(f, r.flexural_zero_modes, 0);
  r.extensional_zero_fields = zero_fields(e, r.extensional_zero_modes, kNumFlexuralFields);
  return r;
}

std::string dispersion_csv(const DispersionResult& r) {
  std::ostringstream os;
  os << "direction,xi,branch,omega,subsystem\n" << std::setprecision(17);
  for (const auto& s : r.samples) {
    const double k = s.xi.norm();
    for (std::size_t b = 0; b < s.flexural.size(); ++b)
      os << s.direction << ',' << k << ',' << b << ',' << s.flexural[b] << ",flexural\n";
    for (std::size_t b = 0; b < s.extensional.size(); ++b)
      os << s.direction << ',' << k << ',' << b << ',' << s.extensional[b] << ",extensional\n";
  }
  return os.str();
}

std::vector<double> mindlin_branches(double D, double nu, double kGh, double I, double rho_h,
                                     double k) {
  const double k2 = k * k;
  // Shear-horizontal rotation: I w^2 = D (1 - nu)/2 k^2 + kGh.
  const double w_sh = std::sqrt((D * (1.0 - nu) / 2.0 * k2 + kGh) / I);
  // (D k^2 + kGh - I w^2)(kGh k^2 - rho_h w^2) - (kGh k)^2 = 0, quadratic in w^2.
  const double a = I * rho_h;
  const double b = -(I * kGh * k2 + rho_h * (D * k2 + kGh));
  const double c = (D * k2 + kGh) * kGh * k2 - kGh * kGh * k2;
  const double disc = std::sqrt(std::max(0.0, b * b - 4.0 * a * c));
  const double hi = (-b + disc) / (2.0 * a);
  const double lo = c / (a * hi);  // stable small root
  return {w_sh, std::sqrt(std::max(0.0, lo)), std::sqrt(hi)};
}

}  // namespace cosserat_plate
