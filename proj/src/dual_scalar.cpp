#include "dualruled/dual_scalar.hpp"

#include <charconv>
#include <cstdio>
#include <string>

namespace dualruled {

DualScalar operator/(const DualScalar& a, const DualScalar& b) {
  if (std::abs(b.re) <= kPureDualThreshold) {
    throw Error(ErrorCode::ZeroRealPart, "division by a pure dual number");
  }
  return {a.re / b.re, (a.du * b.re - a.re * b.du) / (b.re * b.re)};
}

namespace {

[[noreturn]] void domain_error(const char* fn, double x) {
  throw Error(ErrorCode::DomainError,
              std::string(fn) + ": argument " + std::to_string(x) + " outside domain");
}

}  // namespace

DualScalar sqrt(const DualScalar& x) {
  if (x.re < 0.0 || (x.re == 0.0 && x.du != 0.0)) domain_error("sqrt", x.re);
  return lift([](double v) { return std::sqrt(v); },
              [](double v) { return 0.5 / std::sqrt(v); }, x);
}

DualScalar sin(const DualScalar& x) {
  return lift([](double v) { return std::sin(v); }, [](double v) { return std::cos(v); }, x);
}

DualScalar cos(const DualScalar& x) {
  return lift([](double v) { return std::cos(v); }, [](double v) { return -std::sin(v); }, x);
}

DualScalar asin(const DualScalar& x) {
  const double a = std::abs(x.re);
  if (a > 1.0 || (a == 1.0 && x.du != 0.0)) domain_error("asin", x.re);
  return lift([](double v) { return std::asin(v); },
              [](double v) { return 1.0 / std::sqrt(1.0 - v * v); }, x);
}

DualScalar acos(const DualScalar& x) {
  const double a = std::abs(x.re);
  if (a > 1.0 || (a == 1.0 && x.du != 0.0)) domain_error("acos", x.re);
  return lift([](double v) { return std::acos(v); },
              [](double v) { return -1.0 / std::sqrt(1.0 - v * v); }, x);
}

DualScalar atan(const DualScalar& x) {
  return lift([](double v) { return std::atan(v); },
              [](double v) { return 1.0 / (1.0 + v * v); }, x);
}

DualScalar pow(const DualScalar& x, Rational q) {
  if (q.den == 0) throw Error(ErrorCode::InvalidArgument, "pow: zero denominator");
  if (!(x.re > 0.0)) domain_error("pow", x.re);
  const double e = q.value();
  return lift([e](double v) { return std::pow(v, e); },
              [e](double v) { return e * std::pow(v, e - 1.0); }, x);
}

std::string format(const DualScalar& x, int precision) {
  char buf[96];
  const double du = x.du == 0.0 ? 0.0 : x.du;  // fold -0
  const double re = x.re == 0.0 ? 0.0 : x.re;
  std::snprintf(buf, sizeof buf, "%.*g %s \xCE\xB5%.*g", precision, re,
                std::signbit(du) ? "-" : "+", precision, std::abs(du));
  return buf;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::Parse, "cannot parse dual number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

DualScalar parse_dual(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  std::size_t unit = text.find("\xCE\xB5");
  std::size_t unit_len = 2;
  if (unit == std::string_view::npos) {
    unit = text.find("eps");
    unit_len = 3;
  }
  if (unit == std::string_view::npos) return {parse_number(text, whole), 0.0};

  std::string_view left = trim(text.substr(0, unit));
  std::string_view right = trim(text.substr(unit + unit_len));

  double sign = 1.0;
  if (!left.empty() && (left.back() == '+' || left.back() == '-')) {
    sign = left.back() == '-' ? -1.0 : 1.0;
    left = trim(left.substr(0, left.size() - 1));
  }
  const double re = left.empty() ? 0.0 : parse_number(left, whole);
  const double du = right.empty() ? 1.0 : parse_number(right, whole);
  return {re, sign * du};
}

}  // namespace dualruled
