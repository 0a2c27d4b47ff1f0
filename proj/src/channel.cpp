#include "tracerec/channel.hpp"

#include "tracerec/errors.hpp"

namespace tracerec {

Trace transmit(const BitString& x, double p, RandomStream& rng) {
    if (!(p >= 0.0) || !(p < 1.0)) throw DomainError("transmit requires 0 <= p < 1");
    BitString kept;
    kept.reserve(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        // one draw per input bit, in index order, even when p == 0
        if (!(rng.next_unit() < p)) kept.push_back(x[i]);
    }
    return Trace{std::move(kept), x.size()};
}

std::vector<Trace> generate_traces(const BitString& x, const ChannelSpec& spec,
                                   const RandomStream& rng) {
    if (!(spec.p >= 0.0) || !(spec.p < 1.0)) throw DomainError("channel p must lie in [0, 1)");
    if (spec.t < 1) throw DomainError("channel t must be at least 1");
    std::vector<Trace> traces;
    traces.reserve(spec.t);
    for (std::size_t j = 0; j < spec.t; ++j) {
        RandomStream sub = rng.substream(j + 1);
        traces.push_back(transmit(x, spec.p, sub));
    }
    return traces;
}

}  // namespace tracerec
