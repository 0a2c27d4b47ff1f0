#include "tracerec/bma.hpp"

namespace tracerec {

BitString bma(const BlockMatrix& matrix) {
    const std::size_t rows = matrix.rows.size();
    std::vector<std::size_t> cursor(rows, 0);
    BitString out;
    out.reserve(matrix.width);
    for (std::size_t i = 0; i < matrix.width; ++i) {
        std::size_t ones = 0, zeros = 0;
        for (std::size_t j = 0; j < rows; ++j) {
            if (cursor[j] < matrix.rows[j].size()) {
                if (matrix.rows[j][cursor[j]]) ++ones; else ++zeros;
            }
        }
        const std::uint8_t b = ones > zeros ? 1 : 0;  // ties and all-abstain emit 0
        out.push_back(b);
        for (std::size_t j = 0; j < rows; ++j) {
            if (cursor[j] < matrix.rows[j].size() && matrix.rows[j][cursor[j]] == b) ++cursor[j];
        }
    }
    return out;
}

}  // namespace tracerec
