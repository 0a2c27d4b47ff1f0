#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tracerec/code_params.hpp"
#include "tracerec/trace_code.hpp"

namespace tracerec {

/// Reconstruction scheme under test.
///   Blockwise  — delimiter-segmented majority alignment ("ours")
///   CodedBma   — whole-sequence BMA over run-length-limited codewords ("coded-bma")
///   UncodedBma — whole-sequence BMA over uniform strings ("uncoded-bma")
enum class Scheme { Blockwise, CodedBma, UncodedBma };

std::string_view scheme_name(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);

/// A Monte-Carlo run description. List-valued fields sweep the product of
/// their values.
struct ExperimentConfig {
    std::vector<Scheme> schemes;
    std::vector<std::size_t> n_values;
    std::vector<double> k_values;
    std::vector<double> alpha_values{1.0};
    std::vector<int> delta_values{3};
    std::vector<std::size_t> t_values;
    std::size_t trials = 1000;
    std::uint64_t master_seed = 1;
    std::size_t retry_limit = kDefaultRetryLimit;
};

/// Parses the flat key=value format. Keys: scheme, n, k, alpha, delta, t,
/// trials, seed, retry_limit. List values are comma-separated; blank lines and
/// lines starting with '#' are skipped. Unknown keys are errors (ConfigError).
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_text(std::string_view text);

/// One sweep point.
struct ParameterPoint {
    Scheme scheme;
    std::size_t n;
    double k;
    double alpha;
    int delta;
    std::size_t t;
};

/// Outcome of a single trial.
struct TrialResult {
    std::size_t edit_distance = 0;
    bool exact_match = false;
    std::size_t segmentation_failures = 0;  ///< traces that failed segmentation
    std::vector<std::size_t> trace_lengths;
    bool sampler_exhausted = false;         ///< trial skipped, nothing measured
};

/// Runs one trial: sample a codeword from the scheme's codebook, generate t
/// traces, reconstruct, compute metrics. Fully determined by
/// (master_seed, trial_index). SamplerExhausted is absorbed into the result.
TrialResult run_trial(const ParameterPoint& point, const CodeParams& params,
                      std::uint64_t master_seed, std::size_t trial_index,
                      std::size_t retry_limit = kDefaultRetryLimit);

/// One CSV row. For a parameter point that fails validation, `skipped` equals
/// `trials`, ell is 0 and the statistics are NaN; otherwise `skipped` counts
/// trials lost to sampler exhaustion.
struct SummaryRow {
    Scheme scheme;
    std::size_t n;
    double k;
    double alpha;
    int delta;
    std::size_t ell;
    std::size_t t;
    std::size_t trials;
    std::uint64_t seed;
    double rate;
    double mean_norm_edit;
    double stderr_norm_edit;
    double p_e_hat;
    double mean_seg_fail_rate;
    std::size_t skipped;
};

/// Executes the sweep. Trials run concurrently on `threads` workers
/// (0 = hardware concurrency); the output is bit-identical for any thread
/// count. Row order: scheme, n, k, alpha, delta, t, nested in that order.
std::vector<SummaryRow> run_experiment(const ExperimentConfig& config,
                                       unsigned threads = 0);

/// Header plus one line per row; floating-point fields with 6 significant
/// digits.
std::string to_csv(const std::vector<SummaryRow>& rows);

}  // namespace tracerec
