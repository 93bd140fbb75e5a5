#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dles/colorspace.hpp"
#include "dles/errors.hpp"

namespace dles {

/// Row-major W x H grid.
template <typename Pixel>
class Image {
public:
    Image() = default;
    Image(int width, int height, const Pixel& fill = Pixel{})
        : width_(width), height_(height) {
        if (width <= 0 || height <= 0) throw DomainError("Image: dimensions must be positive");
        pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
    }

    int width() const { return width_; }
    int height() const { return height_; }
    std::size_t size() const { return pixels_.size(); }
    bool empty() const { return pixels_.empty(); }

    bool contains(int x, int y) const { return x >= 0 && y >= 0 && x < width_ && y < height_; }
    std::size_t index(int x, int y) const {
        return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(x);
    }

    Pixel& at(int x, int y) { return pixels_[index(x, y)]; }
    const Pixel& at(int x, int y) const { return pixels_[index(x, y)]; }
    Pixel& operator[](std::size_t i) { return pixels_[i]; }
    const Pixel& operator[](std::size_t i) const { return pixels_[i]; }

    std::vector<Pixel>& pixels() { return pixels_; }
    const std::vector<Pixel>& pixels() const { return pixels_; }

    friend bool operator==(const Image&, const Image&) = default;

private:
    int width_ = 0;
    int height_ = 0;
    std::vector<Pixel> pixels_;
};

using ColorImage = Image<RgbColor>;
/// Grey values in [0, 255].
using GrayImage = Image<double>;

struct Offset {
    int dx = 0;
    int dy = 0;

    friend bool operator==(const Offset&, const Offset&) = default;
};

/// Neighbourhood G0 around the origin, with optional additive offsets eta(u) that only
/// the greyscale operators honour.
class StructuringElement {
public:
    explicit StructuringElement(std::vector<Offset> offsets,
                                std::optional<std::vector<double>> gray_offsets = std::nullopt);

    const std::vector<Offset>& offsets() const { return offsets_; }
    const std::optional<std::vector<double>>& gray_offsets() const { return gray_offsets_; }
    std::size_t size() const { return offsets_.size(); }

    /// eta(u) for the i-th member; 0 for flat elements.
    double eta(std::size_t i) const { return gray_offsets_ ? (*gray_offsets_)[i] : 0.0; }
    bool is_flat() const;

private:
    std::vector<Offset> offsets_;
    std::optional<std::vector<double>> gray_offsets_;
};

/// k x k flat square centred at the origin. Throws DomainError unless k is odd and positive.
StructuringElement make_square_se(int k);

}  // namespace dles
