#pragma once
// The sequential index: each of `curves` subindexes covers a projection
// of the input space onto a subset of the dimensions. Every vector is
// stored in every subindex under the extended-key of its projection;
// a query retrieves a window of candidates around its own key in each
// subindex and refines them by exact Euclidean distance.

#include <cstdint>
#include <string>
#include <vector>

#include "hypercurves/curve.hpp"
#include "hypercurves/keys.hpp"
#include "hypercurves/vecio.hpp"

namespace hc {

struct ProjectionScheme {
    std::uint32_t d_full = 0;
    std::uint32_t bits_per_dim = 8;
    CurveKind curve_kind = CurveKind::Hilbert;
    std::uint64_t seed = 0;
    // assignment[c][slot] is the input dimension feeding that slot.
    std::vector<std::vector<std::uint32_t>> assignment;

    std::uint32_t curves() const { return static_cast<std::uint32_t>(assignment.size()); }
    std::uint32_t dims_of(std::uint32_t c) const {
        return static_cast<std::uint32_t>(assignment[c].size());
    }

    void validate() const;
};

// Input dimensions dealt round-robin over the curves; a nonzero seed
// applies a reproducible random permutation of the dimensions first.
ProjectionScheme default_scheme(std::uint32_t d_full, std::uint32_t curves,
                                std::uint32_t bits_per_dim, CurveKind kind,
                                std::uint64_t seed);

OrdinalPoint project(const FeatureVector& v, const ProjectionScheme& scheme, std::uint32_t c);

struct SubIndexEntry {
    ExtendedKey key;
    std::uint64_t id;
};

// One sorted list of (key, id). Equal keys are ordered by id so windows
// are reproducible.
class SubIndex {
  public:
    void bulk_load(std::vector<SubIndexEntry>&& entries);
    void insert(SubIndexEntry entry);

    std::size_t size() const { return entries_.size(); }
    const std::vector<SubIndexEntry>& entries() const { return entries_; }

    // Number of entries with key strictly below `key`.
    std::size_t rank_of(const ExtendedKey& key) const;

    // The window of `depth` entries around `key`: floor(depth/2) below,
    // ceil(depth/2) at-or-above, with boundary deficits spilling to the
    // other side. Returns [begin, end) positions into entries().
    std::pair<std::size_t, std::size_t> window(const ExtendedKey& key, std::size_t depth) const;

  private:
    std::vector<SubIndexEntry> entries_;
};

struct SearchParams {
    std::size_t k = 1;
    std::size_t probe_depth = 1;
};

class MulticurvesIndex {
  public:
    MulticurvesIndex() = default;
    MulticurvesIndex(const Dataset& ds, ProjectionScheme scheme);

    void insert(const FeatureVector& v);

    NeighborList search(const FeatureVector& query, const SearchParams& params) const;

    // Ids of the per-curve candidate window for `query` on curve c.
    std::vector<std::uint64_t> retrieve_candidates(const FeatureVector& query, std::uint32_t c,
                                                   std::size_t depth) const;

    // Union of all curves' windows, deduplicated.
    std::vector<std::uint64_t> candidate_union(const FeatureVector& query,
                                               std::size_t depth) const;

    const ProjectionScheme& scheme() const { return scheme_; }
    const Dataset& dataset() const { return dataset_; }
    const SubIndex& subindex(std::uint32_t c) const { return subindexes_[c]; }
    std::size_t size() const { return dataset_.size(); }

    // Little-endian binary persistence; bit-exact round trip.
    void save(const std::string& path) const;
    static MulticurvesIndex load(const std::string& path);

  private:
    ProjectionScheme scheme_;
    Dataset dataset_; // owned copy; ids must stay unique
    std::vector<SubIndex> subindexes_;
    std::vector<std::uint64_t> id_to_slot_; // dataset position by id

    void index_vector(const FeatureVector& v, bool bulk, std::vector<std::vector<SubIndexEntry>>* sink);
};

} // namespace hc
