#include "tracerec/reconstruct.hpp"

#include "tracerec/bma.hpp"

namespace tracerec {

namespace {

// delimiter bits at their fixed positions, zeros elsewhere
BitString fallback_block(const DelimiterParams& params, std::size_t m) {
    const std::size_t len = params.block_length(m);
    BitString out = BitString::zeros(len);
    if (m + 1 < params.num_blocks) {
        for (std::size_t i = len - static_cast<std::size_t>(params.detect_cap); i < len; ++i)
            out.set(i, 1);
    }
    return out;
}

}  // namespace

BitString reconstruct_blockwise(const std::vector<Trace>& traces,
                                const DelimiterParams& params,
                                ReconstructStats* stats) {
    std::vector<Segmentation> segs;
    segs.reserve(traces.size());
    ReconstructStats local;
    for (const Trace& y : traces) {
        segs.push_back(segment_trace(y, params));
        if (!segs.back().ok()) ++local.failed_traces;
    }

    BitString out;
    out.reserve(params.n);
    for (std::size_t m = 0; m < params.num_blocks; ++m) {
        BlockMatrix matrix;
        matrix.width = params.block_length(m);
        for (std::size_t j = 0; j < traces.size(); ++j) {
            // a failed segmentation contributes only the blocks it recovered
            if (m < segs[j].segments.size()) {
                const SegmentInfo& s = segs[j].segments[m];
                matrix.rows.push_back(traces[j].bits.slice(s.offset, s.length));
            }
        }
        if (matrix.rows.empty()) {
            ++local.empty_blocks;
            out.append(fallback_block(params, m));
        } else {
            out.append(bma(matrix));
        }
    }
    if (stats) *stats = local;
    return out;
}

BitString reconstruct_blockwise(const std::vector<Trace>& traces,
                                const CodeParams& params, ReconstructStats* stats) {
    return reconstruct_blockwise(traces, delimiter_view(params), stats);
}

BitString reconstruct_bma(const std::vector<Trace>& traces, std::size_t n) {
    BlockMatrix matrix;
    matrix.width = n;
    matrix.rows.reserve(traces.size());
    for (const Trace& y : traces) matrix.rows.push_back(y.bits);
    return bma(matrix);
}

}  // namespace tracerec
