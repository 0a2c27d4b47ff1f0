#include "tracerec/trace_code.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <string>
#include <vector>

#include "tracerec/delimiter_code.hpp"
#include "tracerec/errors.hpp"

namespace tracerec {

std::size_t isqrt(std::size_t v) {
    if (v == 0) return 0;
    auto r = static_cast<std::size_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
}

std::size_t max_run_bound(const CodeParams& params) { return isqrt(params.ell); }

bool is_codeword(const BitString& x, const CodeParams& params) {
    return is_delimiter_codeword(x, params) && max_run_length(x) <= max_run_bound(params);
}

namespace {

struct BlockSpan {
    std::size_t start;       // absolute offset of the block
    std::size_t len;         // block length
    std::size_t free_begin;  // absolute offset of the first free bit
    std::size_t free_end;    // one past the last free bit
};

std::vector<BlockSpan> block_spans(const CodeParams& params) {
    const DelimiterParams dp = delimiter_view(params);
    const auto dcap = static_cast<std::size_t>(dp.detect_cap);
    std::vector<BlockSpan> spans;
    spans.reserve(dp.num_blocks);
    for (std::size_t m = 0; m < dp.num_blocks; ++m) {
        BlockSpan s;
        s.start = m * dp.ell;
        s.len = dp.block_length(m);
        const std::size_t zeros = m > 0 ? std::min(dcap + 1, s.len) : 0;
        const std::size_t ones = m + 1 < dp.num_blocks ? dcap : 0;
        s.free_begin = s.start + zeros;
        s.free_end = s.start + s.len - ones;
        spans.push_back(s);
    }
    return spans;
}

// longest run inside x[start, start+len)
std::size_t run_within(const BitString& x, std::size_t start, std::size_t len) {
    std::size_t best = len > 0 ? 1 : 0, run = 1;
    for (std::size_t i = start + 1; i < start + len; ++i) {
        if (x[i] == x[i - 1]) {
            if (++run > best) best = run;
        } else {
            run = 1;
        }
    }
    return best;
}

}  // namespace

// Every block boundary is a 1 -> 0 transition (suffix ones, then prefix
// zeros), so no run crosses a boundary and the global run constraint is the
// conjunction of independent per-block constraints. Sampling each block by
// rejection therefore draws exactly from the uniform distribution over the
// code, at a per-block acceptance rate that stays moderate even when the
// whole-string acceptance rate vanishes.
BitString sample_codeword(const CodeParams& params, RandomStream& rng,
                          std::size_t retry_limit) {
    const std::size_t bound = max_run_bound(params);
    BitString x = stamp_delimiters(BitString::zeros(params.n), params);
    for (const BlockSpan& s : block_spans(params)) {
        std::size_t attempts = 0;
        for (;;) {
            if (attempts++ >= retry_limit)
                throw SamplerExhausted("no run-length-admissible block found after " +
                                       std::to_string(retry_limit) + " attempts");
            for (std::size_t i = s.free_begin; i < s.free_end; ++i) x.set(i, rng.next_bit());
            if (run_within(x, s.start, s.len) <= bound) break;
        }
    }
    assert(is_codeword(x, params));
    return x;
}

BitString sample_rll_sequence(std::size_t n, std::size_t max_run, RandomStream& rng,
                              std::size_t retry_limit) {
    if (max_run < 1 && n > 0) throw DomainError("max_run must be at least 1");
    BitString x = BitString::zeros(n);
    std::size_t attempts = 0;
    for (;;) {
        if (attempts++ >= retry_limit)
            throw SamplerExhausted("no run-length-limited sequence found after " +
                                   std::to_string(retry_limit) + " attempts");
        for (std::size_t i = 0; i < n; ++i) x.set(i, rng.next_bit());
        if (max_run_length(x) <= max_run) return x;
    }
}

std::size_t info_length(const CodeParams& params) {
    std::size_t fixed = 0;
    for (const BlockSpan& s : block_spans(params)) fixed += s.len - (s.free_end - s.free_begin);
    return params.n - fixed;
}

BitString encode_systematic(const BitString& info, const CodeParams& params) {
    if (info.size() != info_length(params))
        throw ParamError("encode_systematic: expected " + std::to_string(info_length(params)) +
                         " information bits, got " + std::to_string(info.size()));
    BitString x = BitString::zeros(params.n);
    std::size_t next = 0;
    for (const BlockSpan& s : block_spans(params))
        for (std::size_t i = s.free_begin; i < s.free_end; ++i) x.set(i, info[next++]);
    x = stamp_delimiters(x, params);

    const std::size_t bound = max_run_bound(params);
    std::size_t run_start = 0;
    for (std::size_t i = 1; i <= params.n; ++i) {
        if (i == params.n || x[i] != x[i - 1]) {
            const std::size_t run = i - run_start;
            if (run > bound)
                throw RllViolation("run of length " + std::to_string(run) +
                                       " starting at position " + std::to_string(run_start) +
                                       " exceeds the bound " + std::to_string(bound),
                                   run_start, run);
            run_start = i;
        }
    }
    return x;
}

BitString extract_info(const BitString& codeword, const CodeParams& params) {
    if (codeword.size() != params.n)
        throw ParamError("extract_info: input length != n");
    BitString info;
    info.reserve(info_length(params));
    for (const BlockSpan& s : block_spans(params))
        for (std::size_t i = s.free_begin; i < s.free_end; ++i) info.push_back(codeword[i]);
    return info;
}

std::size_t delimiter_redundancy(const CodeParams& params) {
    return (2 * static_cast<std::size_t>(params.delta) - 1) * (params.num_blocks - 1);
}

double code_rate(const CodeParams& params) {
    return static_cast<double>(params.n - delimiter_redundancy(params)) /
           static_cast<double>(params.n);
}

double log2_rll_count(std::size_t n, std::size_t max_run) {
    if (n == 0) return 0.0;
    if (max_run < 1) throw DomainError("max_run must be at least 1");
    const std::size_t m = std::min(max_run, n);
    // f[r] ~ number of strings whose current run has length r+1, renormalized
    // each step; the dropped scale accumulates in log2acc.
    std::vector<double> f(m, 0.0), g(m, 0.0);
    f[0] = 2.0;
    double log2acc = 0.0;
    for (std::size_t i = 1; i < n; ++i) {
        double total = 0.0;
        for (double v : f) total += v;
        log2acc += std::log2(total);
        for (double& v : f) v /= total;
        g[0] = 1.0;  // = sum of normalized f: flip the symbol
        for (std::size_t r = 1; r < m; ++r) g[r] = f[r - 1];
        std::swap(f, g);
    }
    double total = 0.0;
    for (double v : f) total += v;
    return log2acc + std::log2(total);
}

}  // namespace tracerec
