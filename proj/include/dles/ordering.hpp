#pragma once

// Total order used to pick the supremum/infimum colour of a window: distance to
// a reference colour first, then the lexicographic cascade luminance -> chroma ->
// hue, then position.
//
// Dilation takes the colour nearest the reference; among equal distances it
// prefers larger lm, then larger chroma, then the hue maximal under the hue
// relation (closest to the reference hue, the clockwise side on equal arcs).
// Erosion flips the luminance and chroma preferences and keeps the hue rule.

#include <cstddef>
#include <span>

#include "dles/colorspace.hpp"
#include "dles/distance.hpp"

namespace dles {

struct OrderKey {
    double dist = 0.0;      ///< distance to the reference colour
    double lm = 0.0;
    double c = 0.0;
    double hue_dist = 0.0;  ///< angular distance to the reference hue, [0, pi]
    bool hue_wrap = false;  ///< (h - h_ref) mod 2pi <= pi

    friend bool operator==(const OrderKey&, const OrderKey&) = default;
};

/// The hue relation: h1 precedes h2 iff h1 is farther from h_ref, or equally far and
/// (h1 - h_ref) mod 2pi <= pi. All angles in radians, [0, 2pi).
bool hue_precedes(double h1, double h2, double h_ref);

/// A colour with its derived coordinates cached; the image kernels build one per pixel.
struct ColorSample {
    HclColor hcl;
    CartesianColor cart;
    double hue = 0.0;  ///< radians

    static ColorSample from_hcl(const HclColor& q) { return {q, hcl_to_cartesian(q), q.hue_radians()}; }
};

OrderKey make_order_key(const ColorSample& f, const ColorSample& ref, const DistanceConfig& cfg);
OrderKey make_order_key(const HclColor& f, const HclColor& ref, const DistanceConfig& cfg);

/// Key with an externally computed distance (baselines with RGB distances).
OrderKey cascade_key(double dist, const ColorSample& f, const ColorSample& ref);

/// Strict orders on keys: true iff `a` ranks strictly ahead of `b`.
bool ranks_ahead_for_supremum(const OrderKey& a, const OrderKey& b);
bool ranks_ahead_for_infimum(const OrderKey& a, const OrderKey& b);

/// Index of the colour nearest the reference under the supremum cascade; the
/// smallest index wins full ties. Throws DomainError on an empty list.
std::size_t select_supremum(std::span<const HclColor> colours, const HclColor& ref,
                            const DistanceConfig& cfg);

/// Index of the colour nearest the infimum reference under the dual cascade.
std::size_t select_infimum(std::span<const HclColor> colours, const HclColor& ref_inf,
                           const DistanceConfig& cfg);

}  // namespace dles
