#include "dles/colorspace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "dles/errors.hpp"

namespace dles {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kConeTolerance = 1e-12;

// x mod 1 into [0,1). A tiny negative x would otherwise round up to exactly 1.
double wrap_unit(double x) {
    double w = x - std::floor(x);
    return w >= 1.0 ? 0.0 : w;
}

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

HclColor rgb_to_hcl(const RgbColor& p) {
    const double M = std::max({p.r, p.g, p.b});
    const double m = std::min({p.r, p.g, p.b});
    const double C = M - m;

    double H = 0.0;
    if (C > 0.0) {
        // First matching case wins for tied maxima: R, then G, then B.
        if (M == p.r) {
            H = wrap_unit((p.g - p.b) / (6.0 * C));
        } else if (M == p.g) {
            H = wrap_unit((p.b - p.r) / (6.0 * C) + 1.0 / 3.0);
        } else {
            H = wrap_unit((p.r - p.g) / (6.0 * C) + 2.0 / 3.0);
        }
    }
    return {H, C, M + m - 1.0};
}

RgbColor hcl_to_rgb(const HclColor& q) {
    const bool ranges_ok = q.h >= 0.0 && q.h < 1.0 && q.c >= 0.0 && q.c <= 1.0 + kConeTolerance &&
                           std::abs(q.lm) <= 1.0 + kConeTolerance;
    if (!ranges_ok || q.c > 1.0 - std::abs(q.lm) + kConeTolerance) {
        std::ostringstream msg;
        msg << "hcl_to_rgb: (h=" << q.h << ", c=" << q.c << ", lm=" << q.lm
            << ") lies outside the HCL bi-cone";
        throw DomainError(msg.str());
    }

    const double L = 0.5 * (q.lm + 1.0);
    const double m = L - 0.5 * q.c;
    if (q.c == 0.0) {
        const double v = clamp01(L);
        return {v, v, v};
    }
    const double M = L + 0.5 * q.c;
    const double C = q.c;
    const double hp = 6.0 * q.h;

    double r = 0.0;
    double g = 0.0;
    double b = 0.0;
    switch (std::min(static_cast<int>(hp), 5)) {
        case 0: r = M; g = m + C * hp; b = m; break;
        case 1: r = m + C * (2.0 - hp); g = M; b = m; break;
        case 2: r = m; g = M; b = m + C * (hp - 2.0); break;
        case 3: r = m; g = m + C * (4.0 - hp); b = M; break;
        case 4: r = m + C * (hp - 4.0); g = m; b = M; break;
        default: r = M; g = m; b = m + C * (6.0 - hp); break;
    }
    return {clamp01(r), clamp01(g), clamp01(b)};
}

CartesianColor hcl_to_cartesian(const HclColor& q) {
    const double angle = kTwoPi * q.h;
    return {q.c * std::cos(angle), q.c * std::sin(angle), q.lm};
}

HclColor cartesian_to_hcl(const CartesianColor& v) {
    const double c = std::hypot(v.x, v.y);
    double h = 0.0;
    if (c > 0.0) {
        h = std::atan2(v.y, v.x) / kTwoPi;
        if (h < 0.0) h += 1.0;
        if (h >= 1.0) h = 0.0;
    }
    return {h, c, v.z};
}

SymMatrix2 cartesian_to_matrix(const CartesianColor& v) {
    constexpr double s = 1.0 / std::numbers::sqrt2;
    return {s * (v.z - v.y), s * v.x, s * (v.z + v.y)};
}

CartesianColor matrix_to_cartesian(const SymMatrix2& m) {
    constexpr double s = 1.0 / std::numbers::sqrt2;
    return {s * 2.0 * m.b, s * (m.c - m.a), s * (m.c + m.a)};
}

}  // namespace dles
