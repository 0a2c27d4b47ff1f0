#pragma once

#include <cstddef>

#include "tracerec/bitstring.hpp"
#include "tracerec/code_params.hpp"
#include "tracerec/rng.hpp"

namespace tracerec {

inline constexpr std::size_t kDefaultRetryLimit = 1'000'000;

/// floor(sqrt(v)), exact.
std::size_t isqrt(std::size_t v);

/// Run-length cap of the code: floor(sqrt(ell)). Always >= delta because
/// ell > delta^2.
std::size_t max_run_bound(const CodeParams& params);

/// Full-code membership: delimiter positions pinned and no run longer than
/// max_run_bound(params). Requires x.size() == n.
bool is_codeword(const BitString& x, const CodeParams& params);

/// Uniform sample from the code: free bits drawn uniformly, rejected until
/// the run-length constraint holds. Delimiters break every run at a block
/// boundary, so the global constraint factors by block and each block is
/// rejection-sampled independently; the output distribution is exactly the
/// uniform distribution over the code. Throws SamplerExhausted if any block
/// exceeds retry_limit attempts.
BitString sample_codeword(const CodeParams& params, RandomStream& rng,
                          std::size_t retry_limit = kDefaultRetryLimit);

/// Uniform member of the run-length-limited set {x in {0,1}^n : no run > max_run},
/// by whole-string rejection. Throws SamplerExhausted past retry_limit.
BitString sample_rll_sequence(std::size_t n, std::size_t max_run, RandomStream& rng,
                              std::size_t retry_limit = kDefaultRetryLimit);

/// Number of free (non-delimiter) positions.
std::size_t info_length(const CodeParams& params);

/// Systematic encoder: places info bits into the free positions left to
/// right and stamps the delimiters. Throws RllViolation (with the offending
/// run's position) if the result breaks the run-length constraint; not every
/// information word is encodable by this map.
BitString encode_systematic(const BitString& info, const CodeParams& params);

/// Reads the free positions back out; inverts encode_systematic.
BitString extract_info(const BitString& codeword, const CodeParams& params);

/// Delimiter redundancy (2*delta - 1) * (num_blocks - 1), in bits.
std::size_t delimiter_redundancy(const CodeParams& params);

/// (n - delimiter_redundancy) / n.
double code_rate(const CodeParams& params);

/// log2 of the number of length-n binary strings with no run longer than
/// max_run. Transfer-matrix DP evaluated in log space.
double log2_rll_count(std::size_t n, std::size_t max_run);

}  // namespace tracerec
