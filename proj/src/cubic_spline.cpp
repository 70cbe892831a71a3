#include "cubic_spline.hpp"

#include <algorithm>
#include <cmath>

namespace dualruled::detail {

CubicSpline::CubicSpline(double x0, double h, std::vector<double> y)
    : x0_(x0), h_(h), y_(std::move(y)) {
  const std::size_t n = y_.size() - 1;
  const double slope0 = (-25 * y_[0] + 48 * y_[1] - 36 * y_[2] + 16 * y_[3] - 3 * y_[4]) / (12 * h_);
  const double slopen = (25 * y_[n] - 48 * y_[n - 1] + 36 * y_[n - 2] - 16 * y_[n - 3] + 3 * y_[n - 4]) / (12 * h_);

  // Tridiagonal system for the knot second derivatives (Thomas algorithm).
  std::vector<double> sub(n + 1, 1.0), diag(n + 1, 4.0), sup(n + 1, 1.0), rhs(n + 1);
  diag[0] = 2.0;
  diag[n] = 2.0;
  rhs[0] = 6.0 / h_ * ((y_[1] - y_[0]) / h_ - slope0);
  rhs[n] = 6.0 / h_ * (slopen - (y_[n] - y_[n - 1]) / h_);
  for (std::size_t i = 1; i < n; ++i) rhs[i] = 6.0 / (h_ * h_) * (y_[i + 1] - 2 * y_[i] + y_[i - 1]);

  for (std::size_t i = 1; i <= n; ++i) {
    const double k = sub[i] / diag[i - 1];
    diag[i] -= k * sup[i - 1];
    rhs[i] -= k * rhs[i - 1];
  }
  m_.assign(n + 1, 0.0);
  m_[n] = rhs[n] / diag[n];
  for (std::size_t i = n; i-- > 0;) m_[i] = (rhs[i] - sup[i] * m_[i + 1]) / diag[i];
}

void CubicSpline::eval(double x, double out[4]) const {
  const std::size_t n = y_.size() - 1;
  const double pos = (x - x0_) / h_;
  const std::size_t i = static_cast<std::size_t>(std::clamp(std::floor(pos), 0.0, static_cast<double>(n - 1)));
  const double a = x0_ + h_ * static_cast<double>(i + 1) - x;  // distance to right knot
  const double b = x - (x0_ + h_ * static_cast<double>(i));     // distance to left knot
  const double mi = m_[i], mj = m_[i + 1];
  const double ci = y_[i] / h_ - mi * h_ / 6.0;
  const double cj = y_[i + 1] / h_ - mj * h_ / 6.0;
  out[0] = mi * a * a * a / (6 * h_) + mj * b * b * b / (6 * h_) + ci * a + cj * b;
  out[1] = -mi * a * a / (2 * h_) + mj * b * b / (2 * h_) - ci + cj;
  out[2] = mi * a / h_ + mj * b / h_;
  out[3] = (mj - mi) / h_;
}

}  // namespace dualruled::detail
