#pragma once
// Space-filling curve maps: given a point on a d-dimensional grid of
// 2^m cells per axis, compute its position along the curve (the
// extended-key) and back.
//
// Two curves are provided. The Z-order key is plain bit interleaving.
// The Hilbert key uses the iterative per-bit-plane algorithm (Butz
// family, Skilling's formulation): coordinates are transformed in place
// through Gray-code/rotation steps, then interleaved exactly like the
// Z-order. Both maps are bijections of the grid onto [0, 2^(d*m)).

#include <cstdint>
#include <vector>

#include "hypercurves/keys.hpp"

namespace hc {

struct OrdinalPoint {
    std::vector<std::uint64_t> coords; // each value < 2^bits_per_dim
    std::uint32_t bits_per_dim = 0;

    std::uint32_t dims() const { return static_cast<std::uint32_t>(coords.size()); }
};

enum class CurveKind : std::uint32_t { ZOrder = 0, Hilbert = 1 };

const char* curve_kind_name(CurveKind kind);
CurveKind curve_kind_from_name(const std::string& name);

// Throws std::invalid_argument when the point violates its invariants
// (empty, m out of [1,64], coordinate >= 2^m) or d*m exceeds kMaxKeyBits.
void validate_point(const OrdinalPoint& p);

ExtendedKey zorder_encode(const OrdinalPoint& p);
OrdinalPoint zorder_decode(const ExtendedKey& k, std::uint32_t dims, std::uint32_t bits_per_dim);

ExtendedKey hilbert_encode(const OrdinalPoint& p);
OrdinalPoint hilbert_decode(const ExtendedKey& k, std::uint32_t dims, std::uint32_t bits_per_dim);

ExtendedKey curve_encode(CurveKind kind, const OrdinalPoint& p);

// Order-preserving map from finite IEEE-754 floats to 32-bit ordinals:
// x < y  <=>  float_to_ordinal(x) < float_to_ordinal(y).
// Sign bit is flipped for non-negatives, all bits for negatives, so the
// unsigned order of the result equals the numeric order (-0 lands just
// below +0). NaN and infinities are rejected.
std::uint32_t float_to_ordinal(float x);

// Top m bits of the ordinal, the m-bit grid cell of a float component.
std::uint64_t quantize_component(float x, std::uint32_t bits_per_dim);

} // namespace hc
