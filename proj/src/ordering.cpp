#include "dles/ordering.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "dles/errors.hpp"

namespace dles {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool wraps_forward(double h, double h_ref) {
    double d = std::fmod(h - h_ref, kTwoPi);
    if (d < 0.0) d += kTwoPi;
    return d <= std::numbers::pi;
}

// Shared hue tail of both cascades: the ≺-maximal hue ranks ahead.
bool hue_ranks_ahead(const OrderKey& a, const OrderKey& b) {
    if (a.hue_dist != b.hue_dist) return a.hue_dist < b.hue_dist;
    return !a.hue_wrap && b.hue_wrap;
}

template <typename RanksAhead>
std::size_t select_best(std::span<const HclColor> colours, const HclColor& ref,
                        const DistanceConfig& cfg, RanksAhead ranks_ahead, const char* who) {
    if (colours.empty()) throw DomainError(std::string(who) + ": empty colour list");
    const ColorSample ref_sample = ColorSample::from_hcl(ref);
    std::size_t best = 0;
    OrderKey best_key = make_order_key(ColorSample::from_hcl(colours[0]), ref_sample, cfg);
    for (std::size_t i = 1; i < colours.size(); ++i) {
        const OrderKey key = make_order_key(ColorSample::from_hcl(colours[i]), ref_sample, cfg);
        if (ranks_ahead(key, best_key)) {
            best = i;
            best_key = key;
        }
    }
    return best;
}

}  // namespace

bool hue_precedes(double h1, double h2, double h_ref) {
    const double d1 = angular_distance(h1, h_ref);
    const double d2 = angular_distance(h2, h_ref);
    if (-d1 < -d2) return true;
    return -d1 == -d2 && wraps_forward(h1, h_ref);
}

OrderKey cascade_key(double dist, const ColorSample& f, const ColorSample& ref) {
    return {dist, f.hcl.lm, f.hcl.c, angular_distance(f.hue, ref.hue), wraps_forward(f.hue, ref.hue)};
}

OrderKey make_order_key(const ColorSample& f, const ColorSample& ref, const DistanceConfig& cfg) {
    double dist = 0.0;
    switch (cfg.kind) {
        case DistanceKind::MHYAB: dist = delta_e_mhyab(f.cart, ref.cart); break;
        case DistanceKind::ONE_H: dist = delta_e_1h(f.hcl, ref.hcl, cfg.one_h_weight); break;
        case DistanceKind::POLAR: dist = delta_e_polar(f.hcl, ref.hcl); break;
    }
    return cascade_key(dist, f, ref);
}

OrderKey make_order_key(const HclColor& f, const HclColor& ref, const DistanceConfig& cfg) {
    return make_order_key(ColorSample::from_hcl(f), ColorSample::from_hcl(ref), cfg);
}

bool ranks_ahead_for_supremum(const OrderKey& a, const OrderKey& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.lm != b.lm) return a.lm > b.lm;
    if (a.c != b.c) return a.c > b.c;
    return hue_ranks_ahead(a, b);
}

bool ranks_ahead_for_infimum(const OrderKey& a, const OrderKey& b) {
    if (a.dist != b.dist) return a.dist < b.dist;
    if (a.lm != b.lm) return a.lm < b.lm;
    if (a.c != b.c) return a.c < b.c;
    return hue_ranks_ahead(a, b);
}

std::size_t select_supremum(std::span<const HclColor> colours, const HclColor& ref,
                            const DistanceConfig& cfg) {
    return select_best(colours, ref, cfg, ranks_ahead_for_supremum, "select_supremum");
}

std::size_t select_infimum(std::span<const HclColor> colours, const HclColor& ref_inf,
                           const DistanceConfig& cfg) {
    return select_best(colours, ref_inf, cfg, ranks_ahead_for_infimum, "select_infimum");
}

}  // namespace dles
