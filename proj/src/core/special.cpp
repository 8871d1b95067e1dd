#include "core/special.hpp"

#include <cmath>
#include <limits>

namespace stfb::special {

double sinpi(double x) {
    const double n = std::round(x);
    const double r = x - n; // in [-0.5, 0.5]; exact zero at integers
    const double s = std::sin(M_PI * r);
    return std::fmod(std::fabs(n), 2.0) == 1.0 ? -s : s;
}

double recip_gamma(double x) {
    if (x > 0.5) {
        if (x > 170.0) {
            // 1/Gamma underflows gracefully
            return std::exp(-std::lgamma(x));
        }
        return 1.0 / std::tgamma(x);
    }
    // reflection: 1/Gamma(x) = Gamma(1-x) * sin(pi x) / pi
    const double s = sinpi(x);
    if (s == 0.0) return 0.0;
    const double lg = std::lgamma(1.0 - x);
    const double v = std::exp(lg + std::log(std::fabs(s)) - std::log(M_PI));
    return s > 0.0 ? v : -v;
}

LogRecipGamma log_recip_gamma(double x) {
    if (x > 0.5) return {-std::lgamma(x), 1};
    const double s = sinpi(x);
    if (s == 0.0) return {-std::numeric_limits<double>::infinity(), 0};
    const double la = std::lgamma(1.0 - x) + std::log(std::fabs(s)) - std::log(M_PI);
    return {la, s > 0.0 ? 1 : -1};
}

double sine_integral(double x) {
    const double ax = std::fabs(x);
    double si;
    if (ax <= 25.0) {
        // power series; cancellation stays below ~8 digits at x = 25
        double term = ax;
        double sum = ax;
        const double x2 = ax * ax;
        for (int k = 1; k < 200; ++k) {
            const double two_k = 2.0 * k;
            term *= -x2 / (two_k * (two_k + 1.0));
            const double add = term / (two_k + 1.0);
            sum += add;
            if (std::fabs(add) < 1e-17 * std::fabs(sum)) break;
        }
        si = sum;
    } else {
        // Si(x) = pi/2 - f(x) cos(x) - g(x) sin(x), asymptotic f, g
        const double inv2 = 1.0 / (ax * ax);
        double f = 1.0, g = 1.0, tf = 1.0, tg = 1.0;
        for (int k = 1; k < 20; ++k) {
            tf *= -(2.0 * k) * (2.0 * k - 1.0) * inv2;
            tg *= -(2.0 * k) * (2.0 * k + 1.0) * inv2;
            if (std::fabs(tf) > 1.0) break; // past optimal truncation
            f += tf;
            g += tg;
        }
        f /= ax;
        g *= inv2;
        si = 0.5 * M_PI - f * std::cos(ax) - g * std::sin(ax);
    }
    return x >= 0.0 ? si : -si;
}

double inverse_normal_cdf(double p) {
    // Wichura (1988), algorithm AS 241, PPND16.
    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((2.5090809287301226727e3 * r + 3.3430575583588128105e4) * r +
                     6.7265770927008700853e4) * r + 4.5921953931549871457e4) * r +
                   1.3731693765509461125e4) * r + 1.9715909503065514427e3) * r +
                 1.3314166789178437745e2) * r + 3.3871328727963666080e0) /
               (((((((5.2264952788528545610e3 * r + 2.8729085735721942674e4) * r +
                     3.9307895800092710610e4) * r + 2.1213794301586595867e4) * r +
                   5.3941960214247511077e3) * r + 6.8718700749205790830e2) * r +
                 4.2313330701600911252e1) * r + 1.0);
    }
    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double v;
    if (r <= 5.0) {
        r -= 1.6;
        v = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) * r +
                  2.41780725177450611770e-1) * r + 1.27045825245236838258e0) * r +
                3.64784832476320460504e0) * r + 5.76949722146069140550e0) * r +
              4.63033784615654529590e0) * r + 1.42343711074968357734e0) /
            (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) * r +
                  1.51986665636164571966e-2) * r + 1.48103976427480074590e-1) * r +
                6.89767334985100004550e-1) * r + 1.67638483018380384940e0) * r +
              2.05319162663775882187e0) * r + 1.0);
    } else {
        r -= 5.0;
        v = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) * r +
                  1.24266094738807843860e-3) * r + 2.65321895265761230930e-2) * r +
                2.96560571828504891230e-1) * r + 1.78482653991729133580e0) * r +
              5.46378491116411436990e0) * r + 6.65790464350110377720e0) /
            (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) * r +
                  1.84631831751005468180e-5) * r + 7.86869131145613259100e-4) * r +
                1.48753612908506148525e-2) * r + 1.36929880922735805310e-1) * r +
              5.99832206555887937690e-1) * r + 1.0);
    }
    return q < 0.0 ? -v : v;
}

} // namespace stfb::special
