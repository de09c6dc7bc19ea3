#include "hypercurves/vecio.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace hc {

VectorFormat format_from_name(const std::string& name) {
    if (name == "fvecs") return VectorFormat::fvecs;
    if (name == "bvecs") return VectorFormat::bvecs;
    throw std::invalid_argument("unknown vector format: " + name);
}

Dataset read_vectors(const std::string& path, VectorFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);

    Dataset ds;
    std::uint32_t dim = 0;
    std::vector<unsigned char> raw;
    while (true) {
        std::uint32_t rec_dim = 0;
        in.read(reinterpret_cast<char*>(&rec_dim), 4);
        if (in.gcount() == 0) break; // clean end of file
        if (in.gcount() != 4) throw std::runtime_error(path + ": truncated record header");
        if (rec_dim == 0) throw std::runtime_error(path + ": zero-dimension record");
        if (ds.vectors.empty()) {
            dim = rec_dim;
        } else if (rec_dim != dim) {
            throw std::runtime_error(path + ": inconsistent dimension header (" +
                                     std::to_string(rec_dim) + " vs " + std::to_string(dim) + ")");
        }

        FeatureVector v;
        v.id = ds.vectors.size();
        v.components.resize(rec_dim);
        if (format == VectorFormat::fvecs) {
            in.read(reinterpret_cast<char*>(v.components.data()), std::streamsize(rec_dim) * 4);
            if (in.gcount() != std::streamsize(rec_dim) * 4)
                throw std::runtime_error(path + ": truncated fvecs payload");
        } else {
            raw.resize(rec_dim);
            in.read(reinterpret_cast<char*>(raw.data()), std::streamsize(rec_dim));
            if (in.gcount() != std::streamsize(rec_dim))
                throw std::runtime_error(path + ": truncated bvecs payload");
            for (std::uint32_t i = 0; i < rec_dim; ++i)
                v.components[i] = float(raw[i]);
        }
        for (float c : v.components)
            if (!std::isfinite(c))
                throw std::runtime_error(path + ": non-finite component in record " +
                                         std::to_string(v.id));
        ds.vectors.push_back(std::move(v));
    }
    ds.dims = dim;
    return ds;
}

void write_vectors(const Dataset& ds, const std::string& path, VectorFormat format) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    std::vector<unsigned char> raw;
    for (const auto& v : ds.vectors) {
        const std::uint32_t dim = v.dims();
        out.write(reinterpret_cast<const char*>(&dim), 4);
        if (format == VectorFormat::fvecs) {
            out.write(reinterpret_cast<const char*>(v.components.data()),
                      std::streamsize(dim) * 4);
        } else {
            raw.resize(dim);
            for (std::uint32_t i = 0; i < dim; ++i) {
                const float c = v.components[i];
                if (c < 0.0f || c > 255.0f || c != std::floor(c))
                    throw std::invalid_argument("bvecs requires integral components in [0,255]");
                raw[i] = static_cast<unsigned char>(c);
            }
            out.write(reinterpret_cast<const char*>(raw.data()), std::streamsize(dim));
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

double squared_distance(std::span<const float> a, std::span<const float> b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = double(a[i]) - double(b[i]);
        acc += d * d;
    }
    return acc;
}

double euclidean_distance(const FeatureVector& a, const FeatureVector& b) {
    return std::sqrt(squared_distance(a.components, b.components));
}

NeighborList select_top_k(std::vector<Neighbor>&& squared, std::size_t k) {
    auto less = [](const Neighbor& x, const Neighbor& y) {
        if (x.distance != y.distance) return x.distance < y.distance;
        return x.id < y.id;
    };
    if (squared.size() > k) {
        std::nth_element(squared.begin(), squared.begin() + k, squared.end(), less);
        squared.resize(k);
    }
    std::sort(squared.begin(), squared.end(), less);
    for (auto& n : squared) n.distance = std::sqrt(n.distance);
    return std::move(squared);
}

NeighborList brute_force_knn(const Dataset& ds, const FeatureVector& query, std::size_t k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<Neighbor> all;
    all.reserve(ds.size());
    for (const auto& v : ds.vectors)
        all.push_back({v.id, squared_distance(query.components, v.components)});
    return select_top_k(std::move(all), k);
}

} // namespace hc
