#include "tracerec/levenshtein.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

namespace tracerec {

std::size_t levenshtein(const BitString& a, const BitString& b) {
    const std::uint8_t* s = a.data().data();
    const std::uint8_t* t = b.data().data();
    std::size_t sn = a.size(), tn = b.size();

    while (sn > 0 && tn > 0 && s[0] == t[0]) { ++s; ++t; --sn; --tn; }
    while (sn > 0 && tn > 0 && s[sn - 1] == t[tn - 1]) { --sn; --tn; }
    if (sn == 0) return tn;
    if (tn == 0) return sn;
    if (tn > sn) { std::swap(s, t); std::swap(sn, tn); }

    std::vector<std::uint32_t> row(tn + 1);
    std::iota(row.begin(), row.end(), 0u);
    for (std::size_t i = 0; i < sn; ++i) {
        std::uint32_t diag = row[0];
        row[0] = static_cast<std::uint32_t>(i + 1);
        const std::uint8_t si = s[i];
        for (std::size_t j = 0; j < tn; ++j) {
            const std::uint32_t up = row[j + 1];
            const std::uint32_t sub = diag + (si != t[j]);
            row[j + 1] = std::min({up + 1, row[j] + 1, sub});
            diag = up;
        }
    }
    return row[tn];
}

}  // namespace tracerec
