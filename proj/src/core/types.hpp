#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "core/errors.hpp"

namespace stfb {

// Pair (alpha, beta) of fractional orders with the derived constant
// c0 = (2*beta-1)_+ / alpha + kappa0 * [beta == 1/2].
// alpha = 1 is accepted as the classical limit used by the benchmark runs.
struct FractionalOrders {
    double alpha = 1.0;
    double beta = 1.0;
    double kappa0 = 0.01;

    double c0() const {
        const double pos = std::max(2.0 * beta - 1.0, 0.0);
        return pos / alpha + (beta == 0.5 ? kappa0 : 0.0);
    }

    // Throws DomainError naming the violated condition.
    void validate() const {
        if (!(alpha > 0.0 && alpha <= 1.0))
            throw DomainError("orders: alpha must lie in (0, 1]");
        if (!(beta < 0.75 * alpha + 0.5))
            throw DomainError("orders: beta < 3*alpha/4 + 1/2 violated");
        if (!(kappa0 > 0.0 && kappa0 <= 0.05))
            throw DomainError("orders: kappa0 must lie in (0, 0.05]");
    }

    // Admissibility of the spatial dimension, Theorem-level condition d < 4 - 2*c0.
    void validate_dimension(int d) const {
        validate();
        if (d != 1 && d != 2)
            throw DomainError("orders: spatial dimension must be 1 or 2");
        if (!(static_cast<double>(d) < 4.0 - 2.0 * c0()))
            throw DomainError("orders: d < 4 - 2*c0 violated");
    }
};

// Uniform samples f(n*dt), n = 0..size-1.
struct TimeSeries {
    std::vector<double> values;
    double dt = 0.0;

    std::size_t size() const { return values.size(); }
    double time(std::size_t n) const { return dt * static_cast<double>(n); }

    void validate() const {
        if (!(dt > 0.0)) throw DomainError("time series: dt must be positive");
        if (values.size() < 2) throw DomainError("time series: need at least 2 samples");
        for (double v : values)
            if (!std::isfinite(v)) throw DomainError("time series: non-finite value");
    }
};

} // namespace stfb
