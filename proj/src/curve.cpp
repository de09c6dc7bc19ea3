#include "hypercurves/curve.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace hc {

std::string ExtendedKey::to_hex() const {
    std::string out;
    char buf[17];
    bool started = false;
    for (std::size_t i = kKeyWords; i-- > 0;) {
        if (!started) {
            if (words[i] == 0 && i != 0) continue;
            std::snprintf(buf, sizeof buf, "%llx", (unsigned long long)words[i]);
            started = true;
        } else {
            std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)words[i]);
        }
        out += buf;
    }
    return out;
}

const char* curve_kind_name(CurveKind kind) {
    return kind == CurveKind::ZOrder ? "zorder" : "hilbert";
}

CurveKind curve_kind_from_name(const std::string& name) {
    if (name == "zorder" || name == "z") return CurveKind::ZOrder;
    if (name == "hilbert" || name == "h") return CurveKind::Hilbert;
    throw std::invalid_argument("unknown curve kind: " + name);
}

void validate_point(const OrdinalPoint& p) {
    const std::uint32_t d = p.dims();
    const std::uint32_t m = p.bits_per_dim;
    if (d < 1) throw std::invalid_argument("point needs at least one dimension");
    if (m < 1 || m > 64) throw std::invalid_argument("bits_per_dim out of range [1,64]");
    if (std::uint64_t(d) * m > kMaxKeyBits)
        throw std::invalid_argument("key width " + std::to_string(std::uint64_t(d) * m) +
                                    " exceeds capacity " + std::to_string(kMaxKeyBits));
    if (m < 64) {
        const std::uint64_t limit = std::uint64_t{1} << m;
        for (auto c : p.coords)
            if (c >= limit) throw std::invalid_argument("coordinate exceeds 2^m");
    }
}

static void validate_width(const ExtendedKey& k, std::uint32_t d, std::uint32_t m) {
    if (d < 1 || m < 1 || m > 64 || std::uint64_t(d) * m > kMaxKeyBits)
        throw std::invalid_argument("invalid (dims, bits_per_dim)");
    if (k.width_bits != d * m)
        throw std::invalid_argument("key width mismatch: key has " +
                                    std::to_string(k.width_bits) + " bits, want " +
                                    std::to_string(d * m));
}

// Bit plane j (0 = most significant) of coordinate i lands at key
// position j*d + i counted from the key's most significant bit.
static ExtendedKey interleave(const std::vector<std::uint64_t>& coords, std::uint32_t m) {
    const std::uint32_t d = static_cast<std::uint32_t>(coords.size());
    const std::uint32_t width = d * m;
    ExtendedKey key = ExtendedKey::zero(width);
    for (std::uint32_t j = 0; j < m; ++j) {
        for (std::uint32_t i = 0; i < d; ++i) {
            if ((coords[i] >> (m - 1 - j)) & 1u)
                key.set_bit(width - 1 - (j * d + i));
        }
    }
    return key;
}

static std::vector<std::uint64_t> deinterleave(const ExtendedKey& k, std::uint32_t d,
                                               std::uint32_t m) {
    const std::uint32_t width = d * m;
    std::vector<std::uint64_t> coords(d, 0);
    for (std::uint32_t j = 0; j < m; ++j) {
        for (std::uint32_t i = 0; i < d; ++i) {
            if (k.bit(width - 1 - (j * d + i)))
                coords[i] |= std::uint64_t{1} << (m - 1 - j);
        }
    }
    return coords;
}

ExtendedKey zorder_encode(const OrdinalPoint& p) {
    validate_point(p);
    return interleave(p.coords, p.bits_per_dim);
}

OrdinalPoint zorder_decode(const ExtendedKey& k, std::uint32_t d, std::uint32_t m) {
    validate_width(k, d, m);
    return OrdinalPoint{deinterleave(k, d, m), m};
}

// Axes -> transpose (Skilling). After this transform, interleaving the
// transformed coordinates yields the Hilbert index.
static void axes_to_transpose(std::vector<std::uint64_t>& x, std::uint32_t m) {
    const std::size_t d = x.size();
    for (std::uint64_t q = std::uint64_t{1} << (m - 1); q > 1; q >>= 1) {
        const std::uint64_t p = q - 1;
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i] & q) {
                x[0] ^= p; // invert low bits of axis 0
            } else {
                const std::uint64_t t = (x[0] ^ x[i]) & p;
                x[0] ^= t;
                x[i] ^= t;
            }
        }
    }
    // Gray encode
    for (std::size_t i = 1; i < d; ++i) x[i] ^= x[i - 1];
    std::uint64_t t = 0;
    for (std::uint64_t q = std::uint64_t{1} << (m - 1); q > 1; q >>= 1) {
        if (x[d - 1] & q) t ^= q - 1;
    }
    for (std::size_t i = 0; i < d; ++i) x[i] ^= t;
}

static void transpose_to_axes(std::vector<std::uint64_t>& x, std::uint32_t m) {
    const std::size_t d = x.size();
    const std::uint64_t n = (m >= 64) ? 0 : (std::uint64_t{2} << (m - 1)); // 2^m; 0 stands for 2^64
    // Gray decode
    std::uint64_t t = x[d - 1] >> 1;
    for (std::size_t i = d - 1; i > 0; --i) x[i] ^= x[i - 1];
    x[0] ^= t;
    // Undo excess work
    for (std::uint64_t q = 2; q != n; q <<= 1) {
        const std::uint64_t p = q - 1;
        for (std::size_t i = d; i-- > 0;) {
            if (x[i] & q) {
                x[0] ^= p;
            } else {
                const std::uint64_t t2 = (x[0] ^ x[i]) & p;
                x[0] ^= t2;
                x[i] ^= t2;
            }
        }
    }
}

ExtendedKey hilbert_encode(const OrdinalPoint& p) {
    validate_point(p);
    if (p.dims() == 1) return interleave(p.coords, p.bits_per_dim);
    std::vector<std::uint64_t> x = p.coords;
    axes_to_transpose(x, p.bits_per_dim);
    return interleave(x, p.bits_per_dim);
}

OrdinalPoint hilbert_decode(const ExtendedKey& k, std::uint32_t d, std::uint32_t m) {
    validate_width(k, d, m);
    std::vector<std::uint64_t> x = deinterleave(k, d, m);
    if (d > 1) transpose_to_axes(x, m);
    return OrdinalPoint{std::move(x), m};
}

ExtendedKey curve_encode(CurveKind kind, const OrdinalPoint& p) {
    return kind == CurveKind::ZOrder ? zorder_encode(p) : hilbert_encode(p);
}

std::uint32_t float_to_ordinal(float x) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite component");
    const auto bits = std::bit_cast<std::uint32_t>(x);
    return (bits & 0x80000000u) ? ~bits : (bits | 0x80000000u);
}

std::uint64_t quantize_component(float x, std::uint32_t m) {
    return std::uint64_t{float_to_ordinal(x)} >> (32 - m);
}

} // namespace hc
