#include "core/mittag_leffler.hpp"

#include <quadmath.h>

#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include "core/special.hpp"

namespace stfb::ml {

namespace {

constexpr int kSeriesTerms = 1400;
constexpr int kAsymTerms = 320;
constexpr double kOverflowExponent = 705.0;

double target_abs_err(double v) { return std::max(1e-13, 1e-11 * std::fabs(v)); }

} // namespace

MlEvaluator::MlEvaluator(double a, double b) : a_(a), b_(b) {
    MlParams{a, b}.validate();
    series_coeff_.resize(kSeriesTerms);
    for (int k = 0; k < kSeriesTerms; ++k)
        series_coeff_[k] = special::recip_gamma(a_ * k + b_);
    asym_log_.resize(kAsymTerms + 1);
    asym_sign_.resize(kAsymTerms + 1);
    asym_log_[0] = 0.0;
    asym_sign_[0] = 0;
    for (int j = 1; j <= kAsymTerms; ++j) {
        const auto lg = special::log_recip_gamma(b_ - a_ * j);
        asym_log_[j] = lg.log_abs;
        asym_sign_[j] = lg.sign;
    }
}

double MlEvaluator::cancellation_digits(double z) const {
    const double az = std::fabs(z);
    if (az <= 1.0) return 0.0;
    const double x = std::log(az);
    // stationary term index: x = a * psi(a k + b), psi^{-1}(y) ~ exp(y) + 0.5
    double kstar = (std::exp(x / a_) + 0.5 - b_) / a_;
    if (kstar < 1.0) return 0.0;
    const double max_log = kstar * x - std::lgamma(a_ * kstar + b_);
    return std::max(0.0, max_log) / std::log(10.0) + 0.5;
}

MlEvaluator::Branch MlEvaluator::series_double(double z) const {
    Branch out;
    double sum = 0.0;
    double sum_abs = 0.0;
    double zk = 1.0;
    for (int k = 0; k < kSeriesTerms; ++k) {
        const double term = zk * series_coeff_[k];
        sum += term;
        sum_abs += std::fabs(term);
        if (k > 2 && std::fabs(term) < 1e-18 * (sum_abs + 1e-300) &&
            std::fabs(zk) < std::exp(std::lgamma(a_ * k + b_))) {
            out.value = sum;
            out.err_abs = sum_abs * 1.1e-16 + 1e-300;
            out.usable = true;
            return out;
        }
        zk *= z;
        if (!std::isfinite(zk)) return out; // overflow before convergence
    }
    return out;
}

MlEvaluator::Branch MlEvaluator::series_quad(double z) const {
    Branch out;
    if (z == 0.0) {
        out.value = series_coeff_[0];
        out.err_abs = 1e-17 * std::fabs(out.value);
        out.usable = true;
        return out;
    }
    const __float128 lz = logq(fabsq((__float128)z));
    const int zsign = z < 0.0 ? -1 : 1;
    __float128 sum = 0;
    __float128 sum_abs = 0;
    int consecutive_small = 0;
    for (int k = 0; k < 60000; ++k) {
        const __float128 lt = k * lz - (__float128)lgammaq(a_ * k + b_);
        if (lt > (__float128)11000.0) return out; // term overflow, hopeless
        __float128 term = expq(lt);
        sum_abs += term;
        if (zsign < 0 && (k & 1)) term = -term;
        sum += term;
        if (fabsq(term) < (__float128)1e-38 * sum_abs + (__float128)1e-300) {
            if (++consecutive_small > 3) {
                out.value = (double)sum;
                out.err_abs = (double)sum_abs * 1.5e-33 + 1e-300;
                out.usable = true;
                return out;
            }
        } else {
            consecutive_small = 0;
        }
    }
    return out;
}

MlEvaluator::Branch MlEvaluator::asymptotic(double z) const {
    Branch out;
    if (z > -1.0) return out;
    const double laz = std::log(-z);

    // algebraic part: E_{a,b}(z) ~ -sum_{j>=1} z^{-j} / Gamma(b - j a)
    double terms[kAsymTerms + 2];
    double abs_terms[kAsymTerms + 2];
    int jmax = kAsymTerms;
    for (int j = 1; j <= kAsymTerms; ++j) {
        const double lt = -static_cast<double>(j) * laz + asym_log_[j];
        const double at = asym_sign_[j] == 0 ? 0.0 : std::exp(lt);
        // z^{-j} = (-1)^j |z|^{-j}, overall minus sign from the expansion
        const double s = (j & 1) ? 1.0 : -1.0;
        terms[j] = s * static_cast<double>(asym_sign_[j]) * at;
        abs_terms[j] = std::fabs(terms[j]);
        jmax = j;
        // pole-adjacent terms vanish exactly; stop only on two consecutive tiny terms
        if (j > 3 && abs_terms[j] < 1e-18 && abs_terms[j - 1] < 1e-18) break;
    }
    terms[jmax + 1] = abs_terms[jmax + 1] = 0.0;
    // truncate where the two-term lookahead envelope is smallest
    int best_j = 0;
    double best_err = std::numeric_limits<double>::infinity();
    for (int j = 0; j <= jmax - 1; ++j) {
        const double env = abs_terms[j + 1] + (j + 2 <= jmax ? abs_terms[j + 2] : 0.0);
        if (env < best_err) {
            best_err = env;
            best_j = j;
        }
    }
    double sum = 0.0;
    for (int j = 1; j <= best_j; ++j) sum += terms[j];

    // exponential branch terms live on the negative axis only for a >= 1
    double exp_part = 0.0;
    if (a_ == 1.0) {
        const double r = -z;
        exp_part = (std::pow(std::complex<double>(-r, 0.0), 1.0 - b_) * std::exp(-r)).real();
    } else if (a_ > 1.0) {
        const std::complex<double> s = std::polar(std::pow(-z, 1.0 / a_), M_PI / a_);
        exp_part = 2.0 / a_ * (std::pow(s, 1.0 - b_) * std::exp(s)).real();
    }

    out.value = sum + exp_part;
    out.err_abs = best_err + 1e-15 * std::fabs(exp_part) + 1e-300;
    out.usable = true;
    return out;
}

MlEvaluator::Branch MlEvaluator::contour_fixed(double z, int n_nodes, bool* pole_near) const {
    // Weideman-Trefethen parabolic contour for the inverse Laplace representation
    //   E_{a,b}(z) = (1/2 pi i) int e^s s^{a-b} / (s^a - z) ds.
    Branch out;
    *pole_near = false;
    const double N = static_cast<double>(n_nodes);
    const double h = 2.0 * M_PI / N;

    std::complex<double> pole(0.0, 0.0);
    bool pole_inside = false;
    if (a_ > 1.0) {
        pole = std::polar(std::pow(-z, 1.0 / a_), M_PI / a_);
        const double theta_p = pole.imag() / (0.25 * N);
        pole_inside = pole.real() > N * (0.1309 - 0.1194 * theta_p * theta_p);
        // distance of the pole to the quadrature line in the theta plane
        const std::complex<double> A(-0.1194 * N, 0.0);
        const std::complex<double> B(0.0, 0.25 * N);
        const std::complex<double> C = std::complex<double>(0.1309 * N, 0.0) - pole;
        const std::complex<double> disc = std::sqrt(B * B - 4.0 * A * C);
        const std::complex<double> t1 = (-B + disc) / (2.0 * A);
        const std::complex<double> t2 = (-B - disc) / (2.0 * A);
        const double margin = std::min(std::fabs(t1.imag()), std::fabs(t2.imag()));
        if (margin < 0.5) {
            *pole_near = true;
            return out;
        }
    }

    std::complex<double> acc(0.0, 0.0);
    double acc_abs = 0.0;
    for (int j = 0; j < n_nodes; ++j) {
        const double theta = -M_PI + (j + 0.5) * h;
        const std::complex<double> s =
            N * std::complex<double>(0.1309 - 0.1194 * theta * theta, 0.25 * theta);
        const std::complex<double> ds = N * std::complex<double>(-0.2388 * theta, 0.25);
        const std::complex<double> sa = std::pow(s, a_);
        const std::complex<double> summand = std::exp(s) * std::pow(s, a_ - b_) / (sa - z) * ds;
        acc += summand;
        acc_abs += std::abs(summand);
    }
    double value = (acc * std::complex<double>(0.0, -1.0)).real() * h / (2.0 * M_PI);
    double roundoff = acc_abs * h / (2.0 * M_PI) * 2e-16;
    if (pole_inside) {
        const std::complex<double> res = std::pow(pole, 1.0 - b_) * std::exp(pole);
        value += 2.0 / a_ * res.real();
        roundoff += 2e-16 * std::fabs(2.0 / a_ * res.real());
    }
    out.value = value;
    out.err_abs = roundoff;
    out.usable = true;
    return out;
}

MlEvaluator::Branch MlEvaluator::contour(double z) const {
    // Truncation decays like exp(-1.047 N) while roundoff grows like exp(0.1309 N);
    // accept the earliest value confirmed by the next refinement, before roundoff bites.
    Branch out;
    if (!(z < 0.0)) return out;
    bool have_prev = false;
    Branch prev;
    for (int n : {32, 64, 128, 256}) {
        bool pole_near = false;
        Branch cur = contour_fixed(z, n, &pole_near);
        if (pole_near) continue; // the vertex of a larger contour may clear the pole
        if (have_prev) {
            const double diff = std::fabs(cur.value - prev.value);
            if (diff <= std::max(2e-13, 2e-11 * std::fabs(prev.value))) {
                prev.err_abs = std::max(diff, prev.err_abs);
                return prev;
            }
        }
        prev = cur;
        have_prev = true;
    }
    return out; // did not converge
}

double MlEvaluator::operator()(double z) const {
    if (!std::isfinite(z)) throw DomainError("ml: non-finite argument");
    if (z == 0.0) return series_coeff_[0];
    if (z > 0.0) {
        if (std::pow(z, 1.0 / a_) > kOverflowExponent)
            throw DomainError("ml: argument exceeds overflow threshold");
        Branch s = series_double(z);
        if (s.usable) return s.value;
        s = series_quad(z);
        if (s.usable && std::isfinite(s.value)) return s.value;
        throw NumericError("ml: power series failed for positive argument");
    }

    const double cancel = cancellation_digits(z);
    if (cancel <= 2.5) {
        const Branch s = series_double(z);
        if (s.usable && s.err_abs <= target_abs_err(s.value)) return s.value;
    }
    if (z <= -1.0) {
        const Branch as = asymptotic(z);
        if (as.usable && as.err_abs <= target_abs_err(as.value)) return as.value;
    }
    const Branch c = contour(z);
    if (c.usable && c.err_abs <= target_abs_err(c.value)) return c.value;
    if (cancel <= 19.0) {
        const Branch q = series_quad(z);
        if (q.usable && q.err_abs <= target_abs_err(q.value)) return q.value;
    }
    std::ostringstream msg;
    msg << "ml: no branch met the accuracy target for E_{" << a_ << "," << b_ << "}(" << z
        << "); cancellation estimate " << cancel << " digits";
    throw NumericError(msg.str());
}

double ml(const MlParams& p, double z) {
    MlEvaluator eval(p.a, p.b);
    return eval(z);
}

double ml_heat_symbol(const FractionalOrders& orders, double t, double xi_sq) {
    if (!(t >= 0.0)) throw DomainError("ml_heat_symbol: t must be nonnegative");
    if (!(xi_sq >= 0.0)) throw DomainError("ml_heat_symbol: xi_sq must be nonnegative");
    if (t == 0.0 || xi_sq == 0.0) return 1.0;
    MlEvaluator eval(orders.alpha, 1.0);
    return eval(-std::pow(t, orders.alpha) * xi_sq);
}

} // namespace stfb::ml
