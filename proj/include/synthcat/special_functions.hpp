#pragma once

#include <cstddef>

namespace synthcat {

// Natural log of the gamma function for x > 0 (Lanczos, g = 7).
double log_gamma(double x);

// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x),
// series for x < a + 1, continued fraction otherwise.
double regularized_gamma_p(double a, double x);
double regularized_gamma_q(double a, double x);

// Upper-tail probability of the chi-square distribution: Q(dof/2, x/2).
double chi_square_upper_tail(double statistic, std::size_t dof);

} // namespace synthcat
