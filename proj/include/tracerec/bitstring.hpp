#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace tracerec {

/// A finite sequence over {0,1}, one byte per symbol.
class BitString {
public:
    BitString() = default;
    explicit BitString(std::vector<std::uint8_t> bits);

    static BitString zeros(std::size_t n) { return BitString(std::vector<std::uint8_t>(n, 0)); }

    std::size_t size() const noexcept { return bits_.size(); }
    bool empty() const noexcept { return bits_.empty(); }

    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, std::uint8_t v) { bits_[i] = v ? 1 : 0; }
    void push_back(std::uint8_t v) { bits_.push_back(v ? 1 : 0); }
    void reserve(std::size_t n) { bits_.reserve(n); }
    void append(const BitString& other);

    /// Copy of the half-open range [offset, offset + length).
    BitString slice(std::size_t offset, std::size_t length) const;

    const std::vector<std::uint8_t>& data() const noexcept { return bits_; }

    auto begin() const noexcept { return bits_.begin(); }
    auto end() const noexcept { return bits_.end(); }

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

/// A deletion-channel output together with the length of the string it was
/// produced from. bits.size() <= origin_len always.
struct Trace {
    BitString bits;
    std::size_t origin_len = 0;
};

/// Parses '0'/'1' characters, skipping whitespace. Throws FormatError (with a
/// 1-based position) on anything else.
BitString parse_bitstring(std::string_view text);

std::string format_bitstring(const BitString& x);

/// Length of the longest run of equal consecutive symbols (0 for empty input).
std::size_t max_run_length(const BitString& x);

/// Reads the line-oriented text format: one sequence per line; lines starting
/// with '#' and blank lines are skipped.
std::vector<BitString> read_bit_sequences(std::istream& in);
void write_bit_sequences(std::ostream& out, const std::vector<BitString>& seqs);

}  // namespace tracerec
