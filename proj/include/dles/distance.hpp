#pragma once

#include <optional>
#include <string_view>

#include "dles/colorspace.hpp"

namespace dles {

enum class DistanceKind { MHYAB, ONE_H, POLAR };

/// Hue weight of the 1H distance: |C1 - C2| / 2 (as the formula is printed) or the
/// average chroma (C1 + C2) / 2 (as the accompanying prose describes).
enum class OneHWeight { Diff, Avg };

struct DistanceConfig {
    DistanceKind kind = DistanceKind::MHYAB;
    OneHWeight one_h_weight = OneHWeight::Diff;

    DistanceConfig() = default;
    DistanceConfig(DistanceKind k, OneHWeight w = OneHWeight::Diff) : kind(k), one_h_weight(w) {}
};

std::string_view to_string(DistanceKind kind);
std::optional<DistanceKind> parse_distance_kind(std::string_view name);
std::string_view to_string(OneHWeight weight);
std::optional<OneHWeight> parse_one_h_weight(std::string_view name);

/// Shortest arc between two angles in [0, 2pi); result in [0, pi].
double angular_distance(double h1, double h2);

/// Chroma-plane Euclidean distance plus absolute luminance difference.
double delta_e_mhyab(const CartesianColor& f1, const CartesianColor& f2);

double delta_e_1h(const HclColor& f1, const HclColor& f2, OneHWeight weight = OneHWeight::Diff);

/// Euclidean distance in cylindrical coordinates (law of cosines on the hue angle).
double delta_e_polar(const HclColor& f1, const HclColor& f2);

/// Dispatch on cfg.kind. MHYAB converts both colours to Cartesian coordinates first.
double color_distance(const HclColor& f1, const HclColor& f2, const DistanceConfig& cfg);

}  // namespace dles
