#pragma once

namespace mucb {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
// Power series for x < a + 1, modified Lentz continued fraction otherwise.
// Throws ConvergenceError if the expansion does not settle.
double gamma_p(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), evaluated directly
// in its own convergent region so small tails keep relative accuracy.
double gamma_q(double a, double x);

}  // namespace mucb
