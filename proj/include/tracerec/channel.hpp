#pragma once

#include <cstddef>
#include <vector>

#include "tracerec/bitstring.hpp"
#include "tracerec/rng.hpp"

namespace tracerec {

struct ChannelSpec {
    double p = 0.0;     ///< deletion probability, 0 <= p < 1
    std::size_t t = 1;  ///< number of traces, >= 1
};

/// One pass through the i.i.d. deletion channel: each bit is deleted with
/// probability p, decided by one draw per bit in index order (so the deletion
/// pattern is replayable from the stream's seed alone).
Trace transmit(const BitString& x, double p, RandomStream& rng);

/// t independent traces, one per substream rng.substream(1..t).
/// Throws DomainError on an invalid spec.
std::vector<Trace> generate_traces(const BitString& x, const ChannelSpec& spec,
                                   const RandomStream& rng);

}  // namespace tracerec
