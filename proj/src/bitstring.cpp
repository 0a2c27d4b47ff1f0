#include "tracerec/bitstring.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "tracerec/errors.hpp"

namespace tracerec {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("BitString symbols must be 0 or 1");
    }
}

void BitString::append(const BitString& other) {
    bits_.insert(bits_.end(), other.bits_.begin(), other.bits_.end());
}

BitString BitString::slice(std::size_t offset, std::size_t length) const {
    if (offset > bits_.size() || length > bits_.size() - offset)
        throw std::out_of_range("BitString::slice out of range");
    BitString out;
    out.bits_.assign(bits_.begin() + static_cast<std::ptrdiff_t>(offset),
                     bits_.begin() + static_cast<std::ptrdiff_t>(offset + length));
    return out;
}

BitString parse_bitstring(std::string_view text) {
    BitString out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '0') {
            out.push_back(0);
        } else if (c == '1') {
            out.push_back(1);
        } else if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        } else {
            throw FormatError("invalid character '" + std::string(1, c) +
                                  "' at position " + std::to_string(i + 1),
                              i + 1);
        }
    }
    return out;
}

std::string format_bitstring(const BitString& x) {
    std::string s;
    s.reserve(x.size());
    for (auto b : x) s.push_back(b ? '1' : '0');
    return s;
}

std::size_t max_run_length(const BitString& x) {
    if (x.empty()) return 0;
    std::size_t best = 1, run = 1;
    for (std::size_t i = 1; i < x.size(); ++i) {
        if (x[i] == x[i - 1]) {
            if (++run > best) best = run;
        } else {
            run = 1;
        }
    }
    return best;
}

std::vector<BitString> read_bit_sequences(std::istream& in) {
    std::vector<BitString> out;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;  // blank
        if (line[start] == '#') continue;          // comment
        out.push_back(parse_bitstring(line));
    }
    return out;
}

void write_bit_sequences(std::ostream& out, const std::vector<BitString>& seqs) {
    for (const auto& s : seqs) out << format_bitstring(s) << '\n';
}

}  // namespace tracerec
