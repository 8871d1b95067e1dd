#pragma once

#include <cstdint>

namespace stfb::special {

// 1/Gamma(x) for any real x; returns 0 at the poles x = 0, -1, -2, ...
double recip_gamma(double x);

// log|1/Gamma(x)| and sign of 1/Gamma(x); sign 0 at the poles.
struct LogRecipGamma {
    double log_abs;
    int sign;
};
LogRecipGamma log_recip_gamma(double x);

// sin(pi*x) without the argument-reduction error of sin(M_PI*x).
double sinpi(double x);

// Sine integral Si(x) = int_0^x sin(u)/u du, absolute accuracy ~1e-12.
double sine_integral(double x);

// Inverse of the standard normal CDF (Wichura's PPND16), u in (0,1).
double inverse_normal_cdf(double u);

} // namespace stfb::special
