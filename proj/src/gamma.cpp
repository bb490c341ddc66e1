#include "mucb/gamma.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "mucb/errors.hpp"

namespace mucb {
namespace {

constexpr int kMaxIterations = 100000;
constexpr double kEps = 1e-16;
constexpr double kTiny = 1e-300;

void check_args(double a, double x) {
  if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("incomplete gamma: shape must be positive");
  if (!(x >= 0.0)) throw InvalidArgument("incomplete gamma: argument must be >= 0");
}

double log_prefactor(double a, double x) { return -x + a * std::log(x) - std::lgamma(a); }

// P(a, x) by its power series; valid and fast for x < a + 1.
double series_p(double a, double x) {
  double ap = a;
  double term = 1.0 / a;
  double sum = term;
  for (int i = 0; i < kMaxIterations; ++i) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) return sum * std::exp(log_prefactor(a, x));
  }
  throw ConvergenceError("incomplete gamma series did not converge for a=" + std::to_string(a) +
                         ", x=" + std::to_string(x));
}

// Q(a, x) by continued fraction (modified Lentz); valid for x >= a + 1.
double continued_fraction_q(double a, double x) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= kMaxIterations; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return std::exp(log_prefactor(a, x)) * h;
  }
  throw ConvergenceError("incomplete gamma continued fraction did not converge for a=" +
                         std::to_string(a) + ", x=" + std::to_string(x));
}

}  // namespace

double gamma_p(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < a + 1.0) return series_p(a, x);
  return 1.0 - continued_fraction_q(a, x);
}

double gamma_q(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < a + 1.0) return 1.0 - series_p(a, x);
  return continued_fraction_q(a, x);
}

}  // namespace mucb
