#pragma once
// Fixed-capacity unsigned integers used as extended-keys.
//
// A key produced from d coordinates of m bits each occupies exactly d*m
// bits. Keys are compared as plain unsigned integers; all keys inside one
// subindex share the same width, so the comparison induces the curve's
// total order.

#include <array>
#include <compare>
#include <cstdint>
#include <cstddef>
#include <string>

#ifndef HC_MAX_KEY_BITS
#define HC_MAX_KEY_BITS 1024
#endif

namespace hc {

inline constexpr std::size_t kMaxKeyBits = HC_MAX_KEY_BITS;
static_assert(kMaxKeyBits % 64 == 0, "key capacity must be a multiple of 64");
inline constexpr std::size_t kKeyWords = kMaxKeyBits / 64;

struct ExtendedKey {
    // words[0] is least significant; bits above width_bits stay zero.
    std::array<std::uint64_t, kKeyWords> words{};
    std::uint32_t width_bits = 0;

    static ExtendedKey zero(std::uint32_t width) {
        ExtendedKey k;
        k.width_bits = width;
        return k;
    }

    bool bit(std::uint32_t pos) const {
        return (words[pos >> 6] >> (pos & 63)) & 1u;
    }
    void set_bit(std::uint32_t pos) {
        words[pos >> 6] |= std::uint64_t{1} << (pos & 63);
    }

    bool is_zero() const {
        for (auto w : words)
            if (w) return false;
        return true;
    }

    // Value comparison; width does not participate.
    friend std::strong_ordering operator<=>(const ExtendedKey& a, const ExtendedKey& b) {
        for (std::size_t i = kKeyWords; i-- > 0;) {
            if (a.words[i] != b.words[i])
                return a.words[i] < b.words[i] ? std::strong_ordering::less
                                               : std::strong_ordering::greater;
        }
        return std::strong_ordering::equal;
    }
    friend bool operator==(const ExtendedKey& a, const ExtendedKey& b) {
        return a.words == b.words;
    }

    // Low 64 bits, handy for small-grid tests.
    std::uint64_t low64() const { return words[0]; }

    std::string to_hex() const;
};

} // namespace hc
