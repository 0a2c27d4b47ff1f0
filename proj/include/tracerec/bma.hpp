#pragma once

#include <cstddef>
#include <vector>

#include "tracerec/bitstring.hpp"

namespace tracerec {

/// Input to bitwise majority alignment: rows conceptually padded to `width`
/// with a non-binary PAD marker. Padding only ever appears as a suffix, so a
/// row is stored unpadded and every position >= row.size() is PAD.
struct BlockMatrix {
    std::size_t width = 0;
    std::vector<BitString> rows;
};

/// Bitwise majority alignment. One cursor per row, starting at 0. For each of
/// the `width` output positions: rows whose cursor is in bounds vote with the
/// symbol under their cursor (PAD positions abstain); the majority symbol is
/// emitted, ties and all-abstain steps resolve to 0; exactly the cursors of
/// rows whose current symbol equals the emitted bit advance.
/// Output length is always `width`. O(rows * width) time.
BitString bma(const BlockMatrix& matrix);

}  // namespace tracerec
