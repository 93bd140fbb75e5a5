#pragma once

// Shared generators for the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "dles/colorspace.hpp"
#include "dles/image.hpp"

namespace dles::testing {

/// Multisets of 2..9 symmetric matrices with entries uniform in [-1, 1].
inline std::vector<std::vector<SymMatrix2>> random_multisets(std::uint64_t seed, int count, int min_size = 2,
                                                             int max_size = 9) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> entry(-1.0, 1.0);
    std::uniform_int_distribution<int> size(min_size, max_size);
    std::vector<std::vector<SymMatrix2>> sets(static_cast<std::size_t>(count));
    for (auto& set : sets) {
        const int n = size(rng);
        for (int i = 0; i < n; ++i) {
            const double a = entry(rng);
            const double b = entry(rng);
            const double c = entry(rng);
            set.push_back({a, b, c});
        }
    }
    return sets;
}

inline RgbColor random_rgb(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = u(rng);
    const double g = u(rng);
    const double b = u(rng);
    return {r, g, b};
}

/// RGB on a coarse lattice (levels per channel), so ties in every key field occur often.
inline RgbColor lattice_rgb(std::mt19937_64& rng, int levels) {
    std::uniform_int_distribution<int> level(0, levels - 1);
    const double s = 1.0 / (levels - 1);
    const double r = level(rng) * s;
    const double g = level(rng) * s;
    const double b = level(rng) * s;
    return {r, g, b};
}

inline double frobenius_distance(const SymMatrix2& x, const SymMatrix2& y) { return (x - y).frobenius_norm(); }

/// True iff `out(x, y)` equals some input pixel of the clipped window {(x, y) + s : s in steps}.
inline bool pixel_from_window(const ColorImage& in, const ColorImage& out, int x, int y,
                              const std::vector<Offset>& steps) {
    for (const auto& s : steps) {
        if (in.contains(x + s.dx, y + s.dy) && in.at(x + s.dx, y + s.dy) == out.at(x, y)) return true;
    }
    return false;
}

}  // namespace dles::testing
