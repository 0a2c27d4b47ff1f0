#include "tracerec/lambert.hpp"

#include <cmath>
#include <string>

#include "tracerec/errors.hpp"

namespace tracerec {

double lambert_w0(double x) {
    if (x < 0.0) throw DomainError("lambert_w0 requires x >= 0");
    if (x == 0.0) return 0.0;

    // W(x) <= ln(1+x) on [0, inf), so [0, ln(1+x)] brackets the root.
    double lo = 0.0, hi = std::log1p(x);
    double w = hi;
    const double tol = 1e-12 * std::max(1.0, x);
    for (int iter = 0; iter < 200; ++iter) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        if (std::abs(f) <= tol) return w;
        if (f > 0.0) hi = w; else lo = w;
        // Halley step, falling back to bisection when it leaves the bracket
        const double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        double next = w - f / denom;
        if (!(next >= lo) || !(next <= hi)) next = 0.5 * (lo + hi);
        w = next;
    }
    return w;
}

double delta_star(std::size_t n, double alpha, double p_target) {
    const double arg = std::sqrt(std::exp(1.0)) *
                       std::pow(static_cast<double>(n), 1.0 - alpha) * p_target;
    if (!(arg > 1.0))
        throw DomainError("delta_star requires sqrt(e) * n^(1-alpha) * p_target > 1 (got " +
                          std::to_string(arg) + ")");
    const double log_arg = std::log(arg);
    return 2.0 * log_arg / lambert_w0(2.0 * std::exp(1.0) * log_arg);
}

int select_delta(std::size_t n, double alpha, double p_target) {
    return static_cast<int>(std::ceil(delta_star(n, alpha, p_target)));
}

}  // namespace tracerec
