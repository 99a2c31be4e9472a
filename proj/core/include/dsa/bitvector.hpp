#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace dsa {

// Fixed-length packed bit vector over GF(2). XOR is defined only between
// vectors of the same length; unused high bits of the last word stay zero.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : length_(length), words_((length + 63) / 64, 0) {}

    static BitVector unit(std::size_t length, std::size_t index);
    static BitVector random(std::size_t length, std::mt19937_64& gen);

    std::size_t size() const { return length_; }
    bool empty() const { return length_ == 0; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool value = true);
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    bool any() const;
    bool none() const { return !any(); }
    std::size_t count() const;       // popcount
    std::ptrdiff_t first_set() const;  // -1 when all zero

    // Throws LengthMismatchError on unequal lengths.
    BitVector& operator^=(const BitVector& other);
    friend BitVector operator^(BitVector lhs, const BitVector& rhs) {
        lhs ^= rhs;
        return lhs;
    }

    bool operator==(const BitVector&) const = default;

    std::span<const std::uint64_t> words() const { return words_; }

    // "0"/"1" characters, bit 0 first.
    std::string to_string() const;

private:
    std::size_t length_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace dsa
