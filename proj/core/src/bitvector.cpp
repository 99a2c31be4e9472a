#include "dsa/bitvector.hpp"

#include <bit>
#include <stdexcept>

#include "dsa/errors.hpp"

namespace dsa {

BitVector BitVector::unit(std::size_t length, std::size_t index) {
    if (index >= length) throw std::out_of_range("unit bit index out of range");
    BitVector v(length);
    v.set(index);
    return v;
}

BitVector BitVector::random(std::size_t length, std::mt19937_64& gen) {
    BitVector v(length);
    for (auto& w : v.words_) w = gen();
    if (length % 64 != 0 && !v.words_.empty())
        v.words_.back() &= (std::uint64_t{1} << (length % 64)) - 1;
    return v;
}

void BitVector::set(std::size_t i, bool value) {
    if (i >= length_) throw std::out_of_range("bit index out of range");
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value)
        words_[i >> 6] |= mask;
    else
        words_[i >> 6] &= ~mask;
}

bool BitVector::any() const {
    for (const auto w : words_)
        if (w != 0) return true;
    return false;
}

std::size_t BitVector::count() const {
    std::size_t total = 0;
    for (const auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

std::ptrdiff_t BitVector::first_set() const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi)
        if (words_[wi] != 0)
            return static_cast<std::ptrdiff_t>(wi * 64 + static_cast<std::size_t>(std::countr_zero(words_[wi])));
    return -1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
    if (length_ != other.length_)
        throw LengthMismatchError("xor of bit vectors with lengths " + std::to_string(length_) +
                                  " and " + std::to_string(other.length_));
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

std::string BitVector::to_string() const {
    std::string s;
    s.reserve(length_);
    for (std::size_t i = 0; i < length_; ++i) s.push_back(test(i) ? '1' : '0');
    return s;
}

}  // namespace dsa
