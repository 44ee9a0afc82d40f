#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace evss {

// Finite ordered bit sequence, most-significant-bit first. Value type;
// no operation mutates an existing string, they all return new values.
class BitString {
public:
    BitString() = default;

    // bits must hold only 0/1 values
    explicit BitString(std::vector<std::uint8_t> bits);

    // accepts only '0' and '1' characters
    static BitString from_string(std::string_view s);
    static BitString zeros(std::size_t n);

    std::size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    int bit(std::size_t i) const { return bits_[i]; }

    // first n bits, n <= size()
    BitString prefix(std::size_t n) const;

    std::string to_string() const;

    const std::vector<std::uint8_t>& raw() const { return bits_; }

    friend bool operator==(const BitString&, const BitString&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// concatenation
BitString operator+(const BitString& a, const BitString& b);

// m zeros followed by a single 1
BitString unary_alpha(std::uint64_t m);

// standard binary representation of m; the null string for m = 0
BitString binary_beta(std::uint64_t m);

// drop the leading 1 bit; input must be non-empty and start with 1
BitString strip_msb(const BitString& b);

// bitwise exclusive-or of equal-length strings
BitString bit_xor(const BitString& a, const BitString& b);

// true iff a equals the first a.size() bits of b (the null string is a
// prefix of everything)
bool is_prefix(const BitString& a, const BitString& b);

}  // namespace evss
