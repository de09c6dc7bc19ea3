#pragma once
// Feature-vector datasets: fvecs/bvecs file I/O, Euclidean distance and
// the exact (brute-force) kNN used as ground truth everywhere.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hc {

struct FeatureVector {
    std::uint64_t id = 0;
    std::vector<float> components;

    std::uint32_t dims() const { return static_cast<std::uint32_t>(components.size()); }
};

struct Dataset {
    std::uint32_t dims = 0;
    std::vector<FeatureVector> vectors; // ids are 0..n-1 in order

    std::size_t size() const { return vectors.size(); }
    bool empty() const { return vectors.empty(); }
    const FeatureVector& operator[](std::size_t i) const { return vectors[i]; }
};

struct Neighbor {
    std::uint64_t id = 0;
    double distance = 0.0;

    friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Sorted ascending by (distance, id), no duplicate ids, length <= k.
using NeighborList = std::vector<Neighbor>;

enum class VectorFormat { fvecs, bvecs };

VectorFormat format_from_name(const std::string& name);

// Record layout: little-endian u32 dimension header, then `dim` payload
// entries (f32 for fvecs, u8 for bvecs). The dimension must be constant
// across records. bvecs bytes are widened to floats on read.
Dataset read_vectors(const std::string& path, VectorFormat format);
void write_vectors(const Dataset& ds, const std::string& path, VectorFormat format);

double squared_distance(std::span<const float> a, std::span<const float> b);
double euclidean_distance(const FeatureVector& a, const FeatureVector& b);

// Exact k nearest neighbors by Euclidean distance, ties broken by
// ascending id. Returns fewer than k entries only when the dataset is
// smaller than k.
NeighborList brute_force_knn(const Dataset& ds, const FeatureVector& query, std::size_t k);

// Top-k selection over (id, squared distance) pairs shared by every
// search path; emits true (rooted) distances.
NeighborList select_top_k(std::vector<Neighbor>&& squared, std::size_t k);

} // namespace hc
