#pragma once

#include <cstddef>

namespace tracerec {

/// Code and channel parameters. The channel deletes each bit independently
/// with probability p = k / n^alpha; the code splits the n-bit codeword into
/// ceil(n / ell) blocks of length ell = floor(1/p) (the last one possibly
/// shorter) and can detect up to delta - 1 deletions per block.
struct CodeParams {
    std::size_t n = 0;       ///< codeword length in bits
    double k = 0.0;          ///< channel constant, k > 1
    double alpha = 1.0;      ///< channel exponent, 0.5 < alpha <= 1
    int delta = 0;           ///< detection budget per block is delta - 1
    double p = 0.0;          ///< derived deletion probability k / n^alpha
    std::size_t ell = 0;     ///< derived block length floor(1/p)
    int detect_cap = 0;      ///< delta - 1
    std::size_t num_blocks = 0;
    std::size_t last_block_len = 0;
};

/// Computes all derived fields and validates every constraint:
///   n >= 4, k > 1, 0.5 < alpha <= 1, delta >= 2,
///   p < 0.5, ell > delta^2, 2*(delta-1) < ell, ell <= n/2.
/// The floor in ell = floor(1/p) is computed with exact integer arithmetic
/// whenever k is integral and alpha is a small-denominator rational, and is
/// otherwise guarded against values within 1e-9 below an integer.
/// Throws ParamError naming the violated constraint.
CodeParams derive_params(std::size_t n, double k, double alpha, int delta);

/// Floor/ceiling bounds on the block count:
///   k*n^(1-alpha) - 1 <= ceil(n/ell) - 1 < 2*k*n^(1-alpha)   and
///   k*n^(1-alpha)     <= ceil(n/ell)     < (2k+1)*n^(1-alpha).
/// Holds for every valid CodeParams; a false return indicates a bug.
bool claim1_bounds_hold(const CodeParams& params);

}  // namespace tracerec
