#include "tracerec/code_params.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "tracerec/errors.hpp"

namespace tracerec {

namespace {

using u128 = unsigned __int128;

constexpr u128 kU128Max = ~static_cast<u128>(0);

// base^exp, or kU128Max on overflow (saturating).
u128 pow_sat(u128 base, int exp) {
    u128 acc = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && acc > kU128Max / base) return kU128Max;
        acc *= base;
    }
    return acc;
}

// alpha == a/b with b <= 12, in lowest terms. Returns false for other reals.
bool small_rational(double alpha, int& a, int& b) {
    for (int den = 1; den <= 12; ++den) {
        const double num = alpha * den;
        const double rounded = std::round(num);
        if (std::abs(num - rounded) < 1e-12 && rounded >= 1.0) {
            a = static_cast<int>(rounded);
            b = den;
            return true;
        }
    }
    return false;
}

// floor(n^alpha / k). Long-double evaluation with a floor guard (values
// within 1e-9 below an integer are nudged up), then an exact integer
// verification pass whenever k is integral and alpha = a/b with small b:
//   ell = max { m : (m*k)^b <= n^a }.
std::size_t block_length_floor(std::size_t n, double k, double alpha) {
    const long double inv =
        std::pow(static_cast<long double>(n), static_cast<long double>(alpha)) /
        static_cast<long double>(k);
    long double f = std::floor(inv);
    if (inv - f > 1.0L - 1e-9L) f += 1.0L;
    if (f < 0.0L) f = 0.0L;
    auto ell = static_cast<std::uint64_t>(f);

    int a = 0, b = 0;
    const bool k_integral = std::abs(k - std::round(k)) == 0.0 && k >= 1.0 && k < 1e15;
    if (k_integral && small_rational(alpha, a, b)) {
        const u128 n_pow = pow_sat(n, a);
        if (n_pow != kU128Max) {
            const auto ki = static_cast<std::uint64_t>(std::llround(k));
            auto fits = [&](std::uint64_t m) {
                return pow_sat(static_cast<u128>(m) * ki, b) <= n_pow;
            };
            while (ell > 0 && !fits(ell)) --ell;
            while (fits(ell + 1)) ++ell;
        }
    }
    return static_cast<std::size_t>(ell);
}

[[noreturn]] void fail(const std::string& what) { throw ParamError(what); }

}  // namespace

CodeParams derive_params(std::size_t n, double k, double alpha, int delta) {
    if (n < 4) fail("n must be at least 4 (got " + std::to_string(n) + ")");
    if (!(k > 1.0)) fail("k must be greater than 1");
    if (!(alpha > 0.5) || !(alpha <= 1.0)) fail("alpha must lie in (0.5, 1]");
    if (delta < 2) fail("delta must be at least 2");

    CodeParams cp;
    cp.n = n;
    cp.k = k;
    cp.alpha = alpha;
    cp.delta = delta;
    cp.detect_cap = delta - 1;
    cp.p = k / std::pow(static_cast<double>(n), alpha);
    if (!(cp.p < 0.5))
        fail("deletion probability p = k/n^alpha must be below 0.5 (got " +
             std::to_string(cp.p) + ")");

    cp.ell = block_length_floor(n, k, alpha);
    const auto d = static_cast<std::size_t>(delta);
    if (cp.ell <= d * d)
        fail("block length ell = " + std::to_string(cp.ell) +
             " must exceed delta^2 = " + std::to_string(d * d));
    if (2 * static_cast<std::size_t>(cp.detect_cap) >= cp.ell)
        fail("2*(delta-1) must be below the block length");
    if (2 * cp.ell > n)
        fail("block length ell = " + std::to_string(cp.ell) +
             " must not exceed n/2 (need at least two blocks)");

    cp.num_blocks = (n + cp.ell - 1) / cp.ell;
    cp.last_block_len = n - (cp.num_blocks - 1) * cp.ell;
    return cp;
}

bool claim1_bounds_hold(const CodeParams& params) {
    const double blocks = static_cast<double>(params.num_blocks);
    const double knp = params.k * std::pow(static_cast<double>(params.n), 1.0 - params.alpha);
    return knp - 1.0 <= blocks - 1.0 && blocks - 1.0 < 2.0 * knp &&
           knp <= blocks && blocks < (2.0 * params.k + 1.0) *
                                         std::pow(static_cast<double>(params.n), 1.0 - params.alpha);
}

}  // namespace tracerec
