#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "tracerec/bitstring.hpp"
#include "tracerec/code_params.hpp"

namespace tracerec {

/// Block layout plus per-block detection capability of the delimiter code.
/// Standalone parameter set: only 2*detect_cap < ell <= n/2 is required, so
/// layouts can be built independently of the full code's constraints.
struct DelimiterParams {
    std::size_t n = 0;
    std::size_t ell = 0;
    int detect_cap = 0;  ///< deletions detectable per block, >= 1
    std::size_t num_blocks = 0;
    std::size_t last_block_len = 0;

    /// Nominal length of 0-based block m (ell, except possibly the last).
    std::size_t block_length(std::size_t m) const {
        return m + 1 == num_blocks ? last_block_len : ell;
    }
};

/// Validates 1 <= detect_cap, 2*detect_cap < ell, 2*ell <= n. Throws ParamError.
DelimiterParams make_delimiter_params(std::size_t n, std::size_t ell, int detect_cap);

/// The delimiter view of a full parameter set (detect_cap = delta - 1).
DelimiterParams delimiter_view(const CodeParams& params);

/// One bit position pinned by the delimiter code. Positions are 0-based.
struct FixedBit {
    std::size_t pos;
    std::uint8_t value;
};

inline bool operator==(const FixedBit& a, const FixedBit& b) {
    return a.pos == b.pos && a.value == b.value;
}

/// All pinned positions, in increasing position order. Every block except the
/// last ends with detect_cap ones; every block except the first starts with
/// detect_cap + 1 zeros (truncated if the last block is shorter than that).
/// When the last block is long enough, the total count is
/// (2*detect_cap + 1) * (num_blocks - 1).
struct DelimiterLayout {
    std::vector<FixedBit> fixed;
};

DelimiterLayout delimiter_layout(const DelimiterParams& params);
DelimiterLayout delimiter_layout(const CodeParams& params);

/// Overwrites every pinned position with its fixed value. Idempotent; the
/// result is always a delimiter codeword. Requires x.size() == n.
BitString stamp_delimiters(const BitString& x, const DelimiterParams& params);
BitString stamp_delimiters(const BitString& x, const CodeParams& params);

/// True iff every pinned position holds its fixed value. Requires x.size() == n.
bool is_delimiter_codeword(const BitString& x, const DelimiterParams& params);
bool is_delimiter_codeword(const BitString& x, const CodeParams& params);

/// One recovered block: the half-open range [offset, offset + length) of the
/// trace, plus the number of deletions declared for the block.
struct SegmentInfo {
    std::size_t offset;
    std::size_t length;
    std::size_t deletions;
};

/// Decoder-side partition of a trace into per-block segments. On success,
/// `segments` has one entry per block, entries are contiguous, and their
/// lengths sum to the trace length. On failure, `failed_block` holds the
/// 0-based index of the first structurally impossible block and `segments`
/// keeps the blocks recovered before it.
struct Segmentation {
    std::vector<SegmentInfo> segments;
    std::optional<std::size_t> failed_block;

    bool ok() const { return !failed_block.has_value(); }
};

/// Recovers block boundaries of a trace of a delimiter codeword.
///
/// For each block boundary, left to right: read the detect_cap-bit window at
/// relative positions [ell - detect_cap, ell) of the residual trace, count the
/// run of ones starting at the window head, declare d = detect_cap - run, and
/// consume ell - d bits. The remainder becomes the last block.
///
/// If every block of the original codeword lost at most detect_cap bits, the
/// declared counts equal the true per-block deletion counts exactly. A block
/// that lost more can be mis-segmented without local evidence; the decoder
/// reports FailedAtBlock only at the first structural impossibility (window
/// no longer fits, or the remainder exceeds the last block's length).
Segmentation segment_trace(const Trace& y, const DelimiterParams& params);
Segmentation segment_trace(const Trace& y, const CodeParams& params);

}  // namespace tracerec
