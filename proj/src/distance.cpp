#include "dles/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dles {

std::string_view to_string(DistanceKind kind) {
    switch (kind) {
        case DistanceKind::MHYAB: return "mhyab";
        case DistanceKind::ONE_H: return "1h";
        case DistanceKind::POLAR: return "polar";
    }
    return "?";
}

std::optional<DistanceKind> parse_distance_kind(std::string_view name) {
    if (name == "mhyab") return DistanceKind::MHYAB;
    if (name == "1h") return DistanceKind::ONE_H;
    if (name == "polar") return DistanceKind::POLAR;
    return std::nullopt;
}

std::string_view to_string(OneHWeight weight) {
    return weight == OneHWeight::Diff ? "diff" : "avg";
}

std::optional<OneHWeight> parse_one_h_weight(std::string_view name) {
    if (name == "diff") return OneHWeight::Diff;
    if (name == "avg") return OneHWeight::Avg;
    return std::nullopt;
}

double angular_distance(double h1, double h2) {
    const double d = std::abs(h1 - h2);
    return d <= std::numbers::pi ? d : 2.0 * std::numbers::pi - d;
}

double delta_e_mhyab(const CartesianColor& f1, const CartesianColor& f2) {
    return std::hypot(f1.x - f2.x, f1.y - f2.y) + std::abs(f1.z - f2.z);
}

double delta_e_1h(const HclColor& f1, const HclColor& f2, OneHWeight weight) {
    const double dc = std::abs(f1.c - f2.c);
    const double hue_weight = weight == OneHWeight::Diff ? 0.5 * dc : 0.5 * (f1.c + f2.c);
    return std::abs(f1.lm - f2.lm) + dc +
           hue_weight * angular_distance(f1.hue_radians(), f2.hue_radians());
}

double delta_e_polar(const HclColor& f1, const HclColor& f2) {
    const double dl = f1.lm - f2.lm;
    const double cos_hue = std::cos(angular_distance(f1.hue_radians(), f2.hue_radians()));
    const double radicand = dl * dl + (f1.c * f1.c + f2.c * f2.c) - 2.0 * (f1.c * f2.c) * cos_hue;
    return std::sqrt(std::max(radicand, 0.0));
}

double color_distance(const HclColor& f1, const HclColor& f2, const DistanceConfig& cfg) {
    switch (cfg.kind) {
        case DistanceKind::MHYAB: return delta_e_mhyab(hcl_to_cartesian(f1), hcl_to_cartesian(f2));
        case DistanceKind::ONE_H: return delta_e_1h(f1, f2, cfg.one_h_weight);
        case DistanceKind::POLAR: return delta_e_polar(f1, f2);
    }
    return 0.0;
}

}  // namespace dles
