#pragma once

namespace synthcat {

// Standard normal CDF.
double normal_cdf(double z);

// Inverse standard normal CDF. Rational initial guess refined with one
// Halley step against erfc; absolute error below 1e-9 on [1e-12, 1 - 1e-12].
// Arguments outside (0, 1) are numeric errors.
double normal_quantile(double p);

} // namespace synthcat
