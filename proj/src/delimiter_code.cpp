#include "tracerec/delimiter_code.hpp"

#include <algorithm>
#include <string>

#include "tracerec/errors.hpp"

namespace tracerec {

DelimiterParams make_delimiter_params(std::size_t n, std::size_t ell, int detect_cap) {
    if (detect_cap < 1) throw ParamError("detect_cap must be at least 1");
    if (2 * static_cast<std::size_t>(detect_cap) >= ell)
        throw ParamError("2*detect_cap must be below the block length");
    if (2 * ell > n)
        throw ParamError("block length must not exceed n/2 (need at least two blocks)");
    DelimiterParams dp;
    dp.n = n;
    dp.ell = ell;
    dp.detect_cap = detect_cap;
    dp.num_blocks = (n + ell - 1) / ell;
    dp.last_block_len = n - (dp.num_blocks - 1) * ell;
    return dp;
}

DelimiterParams delimiter_view(const CodeParams& params) {
    DelimiterParams dp;
    dp.n = params.n;
    dp.ell = params.ell;
    dp.detect_cap = params.detect_cap;
    dp.num_blocks = params.num_blocks;
    dp.last_block_len = params.last_block_len;
    return dp;
}

DelimiterLayout delimiter_layout(const DelimiterParams& params) {
    const auto dcap = static_cast<std::size_t>(params.detect_cap);
    DelimiterLayout layout;
    layout.fixed.reserve((2 * dcap + 1) * (params.num_blocks - 1));
    for (std::size_t m = 0; m < params.num_blocks; ++m) {
        const std::size_t start = m * params.ell;
        const std::size_t len = params.block_length(m);
        if (m > 0) {
            // leading zeros; truncated if a short last block cannot hold them all
            const std::size_t zeros = std::min(dcap + 1, len);
            for (std::size_t i = 0; i < zeros; ++i)
                layout.fixed.push_back({start + i, 0});
        }
        if (m + 1 < params.num_blocks) {
            for (std::size_t i = len - dcap; i < len; ++i)
                layout.fixed.push_back({start + i, 1});
        }
    }
    std::sort(layout.fixed.begin(), layout.fixed.end(),
              [](const FixedBit& a, const FixedBit& b) { return a.pos < b.pos; });
    return layout;
}

BitString stamp_delimiters(const BitString& x, const DelimiterParams& params) {
    if (x.size() != params.n)
        throw ParamError("stamp_delimiters: input length " + std::to_string(x.size()) +
                         " != n = " + std::to_string(params.n));
    BitString out = x;
    for (const auto& fb : delimiter_layout(params).fixed) out.set(fb.pos, fb.value);
    return out;
}

bool is_delimiter_codeword(const BitString& x, const DelimiterParams& params) {
    if (x.size() != params.n) return false;
    for (const auto& fb : delimiter_layout(params).fixed)
        if (x[fb.pos] != fb.value) return false;
    return true;
}

Segmentation segment_trace(const Trace& y, const DelimiterParams& params) {
    const auto dcap = static_cast<std::size_t>(params.detect_cap);
    const std::size_t len = y.bits.size();
    Segmentation seg;
    seg.segments.reserve(params.num_blocks);

    std::size_t pos = 0;
    for (std::size_t m = 0; m + 1 < params.num_blocks; ++m) {
        if (len - pos < params.ell) {  // window [ell - dcap, ell) does not fit
            seg.failed_block = m;
            return seg;
        }
        std::size_t run = 0;
        while (run < dcap && y.bits[pos + params.ell - dcap + run] == 1) ++run;
        const std::size_t declared = dcap - run;
        seg.segments.push_back({pos, params.ell - declared, declared});
        pos += params.ell - declared;
    }

    const std::size_t remainder = len - pos;
    if (remainder > params.last_block_len) {
        seg.failed_block = params.num_blocks - 1;
        return seg;
    }
    seg.segments.push_back({pos, remainder, params.last_block_len - remainder});
    return seg;
}

DelimiterLayout delimiter_layout(const CodeParams& params) {
    return delimiter_layout(delimiter_view(params));
}
BitString stamp_delimiters(const BitString& x, const CodeParams& params) {
    return stamp_delimiters(x, delimiter_view(params));
}
bool is_delimiter_codeword(const BitString& x, const CodeParams& params) {
    return is_delimiter_codeword(x, delimiter_view(params));
}
Segmentation segment_trace(const Trace& y, const CodeParams& params) {
    return segment_trace(y, delimiter_view(params));
}

}  // namespace tracerec
