#pragma once

#include <cstddef>
#include <vector>

#include "tracerec/bitstring.hpp"
#include "tracerec/code_params.hpp"
#include "tracerec/delimiter_code.hpp"

namespace tracerec {

/// Per-call diagnostics of reconstruct_blockwise.
struct ReconstructStats {
    std::size_t failed_traces = 0;  ///< traces whose segmentation failed somewhere
    std::size_t empty_blocks = 0;   ///< blocks reconstructed with zero rows
};

/// Block-wise reconstruction: segment every trace, run majority alignment per
/// block over the rows whose segmentation reached that block, and concatenate
/// the block outputs. A trace whose segmentation failed at block m contributes
/// rows only for blocks before m. A block with no rows at all is emitted as
/// its delimiter bits with zeros elsewhere. Never aborts; output length is
/// always n. Linear time in the total trace length.
BitString reconstruct_blockwise(const std::vector<Trace>& traces,
                                const DelimiterParams& params,
                                ReconstructStats* stats = nullptr);
BitString reconstruct_blockwise(const std::vector<Trace>& traces,
                                const CodeParams& params,
                                ReconstructStats* stats = nullptr);

/// Baseline: majority alignment over the whole traces at once, each padded to
/// length n. Output length is always n.
BitString reconstruct_bma(const std::vector<Trace>& traces, std::size_t n);

}  // namespace tracerec
