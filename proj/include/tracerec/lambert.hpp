#pragma once

#include <cstddef>

namespace tracerec {

/// Principal branch of the Lambert W function on x >= 0: the w >= 0 with
/// w * e^w = x, to 1e-12 * max(1, x) absolute residual. Halley iteration from
/// w0 = ln(1 + x), bracketed within [0, ln(1 + x)]. Throws DomainError for
/// x < 0.
double lambert_w0(double x);

/// Detection-budget selector: for a target error-decay rate p_target,
///   delta_star = 2 ln(sqrt(e) n^(1-alpha) p_target)
///                / W(2 e ln(sqrt(e) n^(1-alpha) p_target)).
/// Requires sqrt(e) * n^(1-alpha) * p_target > 1 (throws DomainError).
double delta_star(std::size_t n, double alpha, double p_target);

/// ceil(delta_star), the integer code parameter.
int select_delta(std::size_t n, double alpha, double p_target);

}  // namespace tracerec
