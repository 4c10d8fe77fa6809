#pragma once

// Dense bivariate polynomials used by the exact-calculus operator checks.

#include <cmath>
#include <random>
#include <vector>

namespace cosserat_plate {

/// p(x, y) = sum c[i][j] x^i y^j for i + j <= degree.
class Poly2 {
 public:
  Poly2() : Poly2(0) {}
  explicit Poly2(int degree)
      : degree_(degree), c_((degree + 1) * (degree + 1), 0.0) {}

  int degree() const { return degree_; }
  double& coeff(int i, int j) { return c_[i * (degree_ + 1) + j]; }
  double coeff(int i, int j) const { return c_[i * (degree_ + 1) + j]; }

  double operator()(double x, double y) const {
    double s = 0.0;
    for (int i = 0; i <= degree_; ++i)
      for (int j = 0; i + j <= degree_; ++j) s += coeff(i, j) * std::pow(x, i) * std::pow(y, j);
    return s;
  }

  /// Partial derivative along axis 0 (x) or 1 (y).
  Poly2 derivative(int axis) const {
    Poly2 d(degree_);
    for (int i = 0; i <= degree_; ++i)
      for (int j = 0; i + j <= degree_; ++j) {
        if (axis == 0 && i > 0) d.coeff(i - 1, j) += i * coeff(i, j);
        if (axis == 1 && j > 0) d.coeff(i, j - 1) += j * coeff(i, j);
      }
    return d;
  }

  static Poly2 random(int degree, std::mt19937_64& rng, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    Poly2 p(degree);
    for (int i = 0; i <= degree; ++i)
      for (int j = 0; i + j <= degree; ++j) p.coeff(i, j) = u(rng);
    return p;
  }

 private:
  int degree_;
  std::vector<double> c_;
};

}  // namespace cosserat_plate
