#pragma once

// Classical Reissner-Mindlin plate on a clamped square, written directly in
// (w, psi_x, psi_y) with central differences. Used as an oracle for the
// classical limit of the micropolar plate.

#include <vector>

#include <Eigen/Sparse>

namespace mindlin_oracle {

struct Plate {
  double D, nu, kGh, I, rho_h;
};

class ClampedSquare {
 public:
  ClampedSquare(const Plate& p, double a, int n) : p_(p), n_(n), d_(a / (n - 1)) {
    const int m = 3 * (n - 2) * (n - 2);
    std::vector<Eigen::Triplet<double>> trip;
    Eigen::VectorXd e = Eigen::VectorXd::Zero(m);
    for (int c = 0; c < m; ++c) {
      e[c] = 1.0;
      const Eigen::VectorXd col = apply(e);
      e[c] = 0.0;
      for (int r = 0; r < m; ++r)
        if (col[r] != 0.0) trip.emplace_back(r, c, col[r]);
    }
    A_.resize(m, m);
    A_.setFromTriplets(trip.begin(), trip.end());
  }

  int size() const { return static_cast<int>(A_.rows()); }
  int index(int i, int j, int f) const { return 3 * ((j - 1) * (n_ - 2) + (i - 1)) + f; }

  /// Balance-law left sides at interior nodes: rows (w, psi_x, psi_y).
  Eigen::VectorXd apply(const Eigen::VectorXd& x) const {
    auto at = [&](int i, int j, int f) {
      if (i <= 0 || j <= 0 || i >= n_ - 1 || j >= n_ - 1) return 0.0;
      return x[index(i, j, f)];
    };
    const double h2 = d_ * d_;
    Eigen::VectorXd y(x.size());
    for (int j = 1; j < n_ - 1; ++j)
      for (int i = 1; i < n_ - 1; ++i) {
        auto dxx = [&](int f) { return (at(i + 1, j, f) - 2 * at(i, j, f) + at(i - 1, j, f)) / h2; };
        auto dyy = [&](int f) { return (at(i, j + 1, f) - 2 * at(i, j, f) + at(i, j - 1, f)) / h2; };
        auto dx = [&](int f) { return (at(i + 1, j, f) - at(i - 1, j, f)) / (2 * d_); };
        auto dy = [&](int f) { return (at(i, j + 1, f) - at(i, j - 1, f)) / (2 * d_); };
        auto dxy = [&](int f) {
          return (at(i + 1, j + 1, f) - at(i + 1, j - 1, f) - at(i - 1, j + 1, f) +
                  at(i - 1, j - 1, f)) /
                 (4 * h2);
        };
        const double c = 0.5 * (1 - p_.nu), s = 0.5 * (1 + p_.nu);
        // Q_a = kGh (psi_a + w_,a); M-balance: M_ab,b - Q_a; shear balance: Q_a,a.
        y[index(i, j, 0)] = p_.kGh * (dxx(0) + dyy(0) + dx(1) + dy(2));
        y[index(i, j, 1)] = p_.D * (dxx(1) + c * dyy(1) + s * dxy(2)) - p_.kGh * (at(i, j, 1) + dx(0));
        y[index(i, j, 2)] = p_.D * (dyy(2) + c * dxx(2) + s * dxy(1)) - p_.kGh * (at(i, j, 2) + dy(0));
      }
    return y;
  }

  /// Static solve under uniform pressure q: A x + q e_w = 0.
  Eigen::VectorXd solve_static(double q) const {
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(size());
    for (int k = 0; k < size(); k += 3) rhs[k] = -q;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu(A_);
    return lu.solve(rhs);
  }

  double mass(int k) const { return k % 3 == 0 ? p_.rho_h : p_.I; }
  const Eigen::SparseMatrix<double>& matrix() const { return A_; }
  double spacing() const { return d_; }

 private:
  Plate p_;
  int n_;
  double d_;
  Eigen::SparseMatrix<double> A_;
};

}  // namespace mindlin_oracle
