#pragma once

#include <vector>

#include "core/types.hpp"

namespace stfb::ml {

struct MlParams {
    double a;
    double b;

    void validate() const {
        if (!(a > 0.0 && a <= 2.0)) throw DomainError("ml: first parameter must lie in (0, 2]");
        if (!(b > 0.0)) throw DomainError("ml: second parameter must be positive");
    }
};

// Evaluator for E_{a,b} on the real line. Branch selection:
//   z >= 0                      power series (all terms positive, no cancellation)
//   z < 0, mild cancellation    power series in double
//   z <= -1, tail reachable     algebraic asymptotic series (+ exponential branch terms for a >= 1)
//   otherwise                   parabolic inverse-Laplace contour, with residue correction for a > 1
//   last resort                 power series in __float128
// Each branch reports an absolute error estimate; eval() takes the first branch meeting
// max(1e-13, 1e-11*|value|) and throws NumericError when none does.
class MlEvaluator {
public:
    MlEvaluator(double a, double b);

    double a() const { return a_; }
    double b() const { return b_; }

    double operator()(double z) const;

    struct Branch {
        double value = 0.0;
        double err_abs = 0.0;
        bool usable = false;
    };
    // individual branches, exposed for cross-validation tests
    Branch series_double(double z) const;
    Branch series_quad(double z) const;
    Branch asymptotic(double z) const; // requires z <= -1
    Branch contour(double z) const;    // requires z < 0

    // estimated decimal digits lost to cancellation in the power series at z
    double cancellation_digits(double z) const;

private:
    double a_, b_;
    std::vector<double> series_coeff_;   // 1/Gamma(a k + b)
    std::vector<double> asym_log_;       // log|1/Gamma(b - j a)|, j >= 1
    std::vector<int> asym_sign_;

    Branch contour_fixed(double z, int n_nodes, bool* pole_near) const;
};

// One-shot evaluation of E_{a,b}(z).
double ml(const MlParams& p, double z);

// E_{alpha,1}(-t^alpha * xi_sq); equals 1 at t = 0.
double ml_heat_symbol(const FractionalOrders& orders, double t, double xi_sq);

} // namespace stfb::ml
