#pragma once

// Conversions between normalised RGB, the modified HCL bi-cone, its Cartesian
// embedding and the 2x2 symmetric matrix representation of a colour.
//
// HCL here uses the HSL lightness: L = (M + m) / 2 with M, m the channel max
// and min, chroma C = M - m, and the modified luminance lm = 2L - 1. The bi-cone
// has its apexes at black (z = -1) and white (z = +1).

#include <cmath>
#include <numbers>

namespace dles {

struct RgbColor {
    double r = 0.0;
    double g = 0.0;
    double b = 0.0;

    friend bool operator==(const RgbColor&, const RgbColor&) = default;
};

/// Hue as a fraction of a full turn in [0,1), chroma in [0,1], modified luminance in [-1,1].
/// Reference colours derived from a matrix supremum may lie outside the bi-cone;
/// only hcl_to_rgb enforces c <= 1 - |lm|.
struct HclColor {
    double h = 0.0;
    double c = 0.0;
    double lm = 0.0;

    friend bool operator==(const HclColor&, const HclColor&) = default;

    /// Hue angle in radians, [0, 2pi).
    double hue_radians() const { return 2.0 * std::numbers::pi * h; }
};

struct CartesianColor {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend bool operator==(const CartesianColor&, const CartesianColor&) = default;
};

/// The symmetric matrix [[a, b], [b, c]].
struct SymMatrix2 {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    friend bool operator==(const SymMatrix2&, const SymMatrix2&) = default;

    static SymMatrix2 identity(double scale = 1.0) { return {scale, 0.0, scale}; }

    SymMatrix2 operator-() const { return {-a, -b, -c}; }
    SymMatrix2 operator+(const SymMatrix2& o) const { return {a + o.a, b + o.b, c + o.c}; }
    SymMatrix2 operator-(const SymMatrix2& o) const { return {a - o.a, b - o.b, c - o.c}; }
    SymMatrix2 operator*(double s) const { return {a * s, b * s, c * s}; }

    double trace() const { return a + c; }
    double frobenius_norm() const { return std::sqrt(a * a + 2.0 * b * b + c * c); }
};

HclColor rgb_to_hcl(const RgbColor& p);

/// Inverse of rgb_to_hcl. Throws DomainError when q violates the bi-cone constraint
/// (tolerance 1e-12) or its hue/luminance ranges.
RgbColor hcl_to_rgb(const HclColor& q);

CartesianColor hcl_to_cartesian(const HclColor& q);
HclColor cartesian_to_hcl(const CartesianColor& v);

SymMatrix2 cartesian_to_matrix(const CartesianColor& v);
CartesianColor matrix_to_cartesian(const SymMatrix2& m);

inline SymMatrix2 rgb_to_matrix(const RgbColor& p) {
    return cartesian_to_matrix(hcl_to_cartesian(rgb_to_hcl(p)));
}

inline HclColor matrix_to_hcl(const SymMatrix2& m) {
    return cartesian_to_hcl(matrix_to_cartesian(m));
}

}  // namespace dles
