#include "tracerec/experiment.hpp"

#include <atomic>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <sstream>
#include <thread>

#include "tracerec/channel.hpp"
#include "tracerec/delimiter_code.hpp"
#include "tracerec/errors.hpp"
#include "tracerec/levenshtein.hpp"
#include "tracerec/reconstruct.hpp"
#include "tracerec/rng.hpp"

namespace tracerec {

std::string_view scheme_name(Scheme s) {
    switch (s) {
        case Scheme::Blockwise: return "ours";
        case Scheme::CodedBma: return "coded-bma";
        case Scheme::UncodedBma: return "uncoded-bma";
    }
    return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
    if (name == "ours") return Scheme::Blockwise;
    if (name == "coded-bma") return Scheme::CodedBma;
    if (name == "uncoded-bma") return Scheme::UncodedBma;
    return std::nullopt;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    std::size_t e = s.find_last_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= value.size()) {
        std::size_t comma = value.find(',', start);
        if (comma == std::string::npos) comma = value.size();
        items.push_back(trim(std::string_view(value).substr(start, comma - start)));
        start = comma + 1;
    }
    return items;
}

template <typename T, typename Parse>
std::vector<T> parse_values(const std::string& key, const std::string& value, Parse parse) {
    std::vector<T> out;
    for (const std::string& item : split_list(value)) {
        if (item.empty()) throw ConfigError("empty list item for key '" + key + "'");
        out.push_back(parse(key, item));
    }
    return out;
}

std::uint64_t parse_u64(const std::string& key, const std::string& item) {
    std::uint64_t v{};
    auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || p != item.data() + item.size())
        throw ConfigError("invalid integer '" + item + "' for key '" + key + "'");
    return v;
}

double parse_real(const std::string& key, const std::string& item) {
    try {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("");
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid number '" + item + "' for key '" + key + "'");
    }
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
    ExperimentConfig cfg;
    bool saw_scheme = false, saw_n = false, saw_k = false, saw_t = false;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped[0] == '#') continue;
        const std::size_t eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key=value");
        const std::string key = trim(std::string_view(stripped).substr(0, eq));
        const std::string value = trim(std::string_view(stripped).substr(eq + 1));

        if (key == "scheme") {
            cfg.schemes = parse_values<Scheme>(key, value, [](const std::string& k, const std::string& item) {
                const auto s = parse_scheme(item);
                if (!s) throw ConfigError("unknown scheme '" + item + "' for key '" + k + "'");
                return *s;
            });
            saw_scheme = true;
        } else if (key == "n") {
            cfg.n_values = parse_values<std::size_t>(key, value, [](const std::string& k, const std::string& item) {
                return static_cast<std::size_t>(parse_u64(k, item));
            });
            saw_n = true;
        } else if (key == "k") {
            cfg.k_values = parse_values<double>(key, value, parse_real);
            saw_k = true;
        } else if (key == "alpha") {
            cfg.alpha_values = parse_values<double>(key, value, parse_real);
        } else if (key == "delta") {
            cfg.delta_values = parse_values<int>(key, value, [](const std::string& k, const std::string& item) {
                return static_cast<int>(parse_u64(k, item));
            });
        } else if (key == "t") {
            cfg.t_values = parse_values<std::size_t>(key, value, [](const std::string& k, const std::string& item) {
                return static_cast<std::size_t>(parse_u64(k, item));
            });
            saw_t = true;
        } else if (key == "trials") {
            cfg.trials = static_cast<std::size_t>(parse_u64(key, value));
            if (cfg.trials < 1) throw ConfigError("trials must be at least 1");
        } else if (key == "seed") {
            cfg.master_seed = parse_u64(key, value);
        } else if (key == "retry_limit") {
            cfg.retry_limit = static_cast<std::size_t>(parse_u64(key, value));
        } else {
            throw ConfigError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
        }
    }
    if (!saw_scheme) throw ConfigError("missing required key 'scheme'");
    if (!saw_n) throw ConfigError("missing required key 'n'");
    if (!saw_k) throw ConfigError("missing required key 'k'");
    if (!saw_t) throw ConfigError("missing required key 't'");
    return cfg;
}

ExperimentConfig parse_config_text(std::string_view text) {
    std::istringstream in{std::string(text)};
    return parse_config(in);
}

TrialResult run_trial(const ParameterPoint& point, const CodeParams& params,
                      std::uint64_t master_seed, std::size_t trial_index,
                      std::size_t retry_limit) {
    TrialResult result;
    const std::uint64_t trial_seed = combine_seed(master_seed, trial_index);
    RandomStream rng(trial_seed);

    BitString x;
    try {
        switch (point.scheme) {
            case Scheme::Blockwise:
                x = sample_codeword(params, rng, retry_limit);
                break;
            case Scheme::CodedBma:
                x = sample_rll_sequence(point.n, isqrt(point.n), rng, retry_limit);
                break;
            case Scheme::UncodedBma: {
                x.reserve(point.n);
                for (std::size_t i = 0; i < point.n; ++i) x.push_back(rng.next_bit());
                break;
            }
        }
    } catch (const SamplerExhausted&) {
        result.sampler_exhausted = true;
        return result;
    }

    std::vector<Trace> traces;
    traces.reserve(point.t);
    for (std::size_t j = 0; j < point.t; ++j) {
        RandomStream trace_rng(combine_seed(trial_seed, j + 1));
        traces.push_back(transmit(x, params.p, trace_rng));
        result.trace_lengths.push_back(traces.back().bits.size());
    }

    BitString xhat;
    if (point.scheme == Scheme::Blockwise) {
        ReconstructStats stats;
        xhat = reconstruct_blockwise(traces, params, &stats);
        result.segmentation_failures = stats.failed_traces;
    } else {
        xhat = reconstruct_bma(traces, point.n);
    }

    result.edit_distance = levenshtein(x, xhat);
    result.exact_match = result.edit_distance == 0;
    return result;
}

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

SummaryRow skipped_row(const ParameterPoint& pt, std::size_t trials, std::uint64_t seed) {
    return SummaryRow{pt.scheme, pt.n,  pt.k, pt.alpha, pt.delta, 0,    pt.t, trials,
                      seed,      kNan, kNan, kNan,     kNan,     kNan, trials};
}

SummaryRow run_point(const ParameterPoint& pt, const CodeParams& params,
                     std::size_t trials, std::uint64_t seed, std::size_t retry_limit,
                     unsigned threads) {
    std::vector<TrialResult> results(trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= trials) break;
            results[i] = run_trial(pt, params, seed, i, retry_limit);
        }
    };
    if (threads <= 1 || trials <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        const unsigned count = static_cast<unsigned>(
            std::min<std::size_t>(threads, trials));
        pool.reserve(count);
        for (unsigned w = 0; w < count; ++w) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // aggregate in trial order so the output is schedule-invariant
    const double n = static_cast<double>(pt.n);
    std::size_t completed = 0, skipped = 0, mismatches = 0;
    double sum = 0.0, sum_sq = 0.0, seg_fail = 0.0;
    for (const TrialResult& r : results) {
        if (r.sampler_exhausted) { ++skipped; continue; }
        ++completed;
        const double norm = static_cast<double>(r.edit_distance) / n;
        sum += norm;
        sum_sq += norm * norm;
        if (!r.exact_match) ++mismatches;
        seg_fail += static_cast<double>(r.segmentation_failures) / static_cast<double>(pt.t);
    }

    SummaryRow row{pt.scheme, pt.n, pt.k, pt.alpha, pt.delta, params.ell, pt.t,
                   trials,    seed, kNan, kNan,     kNan,     kNan,       kNan,
                   skipped};
    switch (pt.scheme) {
        case Scheme::Blockwise: row.rate = code_rate(params); break;
        case Scheme::CodedBma:
            row.rate = log2_rll_count(pt.n, isqrt(pt.n)) / n;
            break;
        case Scheme::UncodedBma: row.rate = 1.0; break;
    }
    if (completed > 0) {
        const double c = static_cast<double>(completed);
        row.mean_norm_edit = sum / c;
        double var = 0.0;
        if (completed > 1) {
            var = (sum_sq - sum * sum / c) / (c - 1.0);
            if (var < 0.0) var = 0.0;  // rounding
        }
        row.stderr_norm_edit = std::sqrt(var / c);
        row.p_e_hat = static_cast<double>(mismatches) / c;
        row.mean_seg_fail_rate = seg_fail / c;
    }
    return row;
}

}  // namespace

std::vector<SummaryRow> run_experiment(const ExperimentConfig& config, unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<SummaryRow> rows;
    for (Scheme scheme : config.schemes)
        for (std::size_t n : config.n_values)
            for (double k : config.k_values)
                for (double alpha : config.alpha_values)
                    for (int delta : config.delta_values) {
                        bool valid = true;
                        CodeParams params;
                        try {
                            params = derive_params(n, k, alpha, delta);
                        } catch (const ParamError&) {
                            valid = false;
                        }
                        for (std::size_t t : config.t_values) {
                            const ParameterPoint pt{scheme, n, k, alpha, delta, t};
                            rows.push_back(valid ? run_point(pt, params, config.trials,
                                                             config.master_seed,
                                                             config.retry_limit, threads)
                                                 : skipped_row(pt, config.trials,
                                                               config.master_seed));
                        }
                    }
    return rows;
}

std::string to_csv(const std::vector<SummaryRow>& rows) {
    std::string out =
        "scheme,n,k,alpha,delta,ell,t,trials,seed,rate,mean_norm_edit,"
        "stderr_norm_edit,p_e_hat,mean_seg_fail_rate,skipped\n";
    char buf[512];
    for (const SummaryRow& r : rows) {
        std::snprintf(buf, sizeof(buf),
                      "%s,%zu,%.6g,%.6g,%d,%zu,%zu,%zu,%llu,%.6g,%.6g,%.6g,%.6g,%.6g,%zu\n",
                      std::string(scheme_name(r.scheme)).c_str(), r.n, r.k, r.alpha, r.delta,
                      r.ell, r.t, r.trials,
                      static_cast<unsigned long long>(r.seed), r.rate, r.mean_norm_edit,
                      r.stderr_norm_edit, r.p_e_hat, r.mean_seg_fail_rate, r.skipped);
        out += buf;
    }
    return out;
}

}  // namespace tracerec
