#pragma once

#include <cstddef>

#include "tracerec/bitstring.hpp"

namespace tracerec {

/// Unit-cost insert/delete/substitute edit distance. Two-row dynamic program:
/// O(|a|*|b|) time, O(min(|a|,|b|)) working memory; common prefix/suffix are
/// trimmed first.
std::size_t levenshtein(const BitString& a, const BitString& b);

}  // namespace tracerec
