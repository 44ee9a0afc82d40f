#include "evss/bitstring.hpp"

#include <algorithm>
#include <stdexcept>

namespace evss {

BitString::BitString(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("BitString: bits must be 0 or 1");
    }
}

BitString BitString::from_string(std::string_view s) {
    std::vector<std::uint8_t> bits;
    bits.reserve(s.size());
    for (char ch : s) {
        if (ch == '0') {
            bits.push_back(0);
        } else if (ch == '1') {
            bits.push_back(1);
        } else {
            throw std::invalid_argument("BitString: only '0' and '1' accepted");
        }
    }
    return BitString(std::move(bits));
}

BitString BitString::zeros(std::size_t n) {
    return BitString(std::vector<std::uint8_t>(n, 0));
}

BitString BitString::prefix(std::size_t n) const {
    if (n > bits_.size()) throw std::invalid_argument("BitString::prefix: n exceeds length");
    return BitString(std::vector<std::uint8_t>(bits_.begin(), bits_.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::string BitString::to_string() const {
    std::string s;
    s.reserve(bits_.size());
    for (auto b : bits_) s.push_back(b ? '1' : '0');
    return s;
}

BitString operator+(const BitString& a, const BitString& b) {
    std::vector<std::uint8_t> bits;
    bits.reserve(a.size() + b.size());
    bits.insert(bits.end(), a.raw().begin(), a.raw().end());
    bits.insert(bits.end(), b.raw().begin(), b.raw().end());
    return BitString(std::move(bits));
}

BitString unary_alpha(std::uint64_t m) {
    std::vector<std::uint8_t> bits(m + 1, 0);
    bits.back() = 1;
    return BitString(std::move(bits));
}

BitString binary_beta(std::uint64_t m) {
    if (m == 0) return BitString{};
    std::vector<std::uint8_t> bits;
    for (std::uint64_t v = m; v > 0; v >>= 1) bits.push_back(static_cast<std::uint8_t>(v & 1));
    std::reverse(bits.begin(), bits.end());
    return BitString(std::move(bits));
}

BitString strip_msb(const BitString& b) {
    if (b.empty() || b.bit(0) != 1) {
        throw std::invalid_argument("strip_msb: input must be non-empty with leading 1");
    }
    return BitString(std::vector<std::uint8_t>(b.raw().begin() + 1, b.raw().end()));
}

BitString bit_xor(const BitString& a, const BitString& b) {
    if (a.size() != b.size()) throw std::invalid_argument("bit_xor: length mismatch");
    std::vector<std::uint8_t> bits(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        bits[i] = static_cast<std::uint8_t>(a.bit(i) ^ b.bit(i));
    }
    return BitString(std::move(bits));
}

bool is_prefix(const BitString& a, const BitString& b) {
    if (a.size() > b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a.bit(i) != b.bit(i)) return false;
    }
    return true;
}

}  // namespace evss
