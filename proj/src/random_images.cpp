#include "dles/random_images.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dles/errors.hpp"

namespace dles {
namespace {

std::uint8_t next_byte(std::mt19937_64& rng) { return static_cast<std::uint8_t>(rng() >> 56); }

void check_shape(int count, int size) {
    if (count < 1) throw DomainError("random images: count must be at least 1");
    if (size < 1) throw DomainError("random images: size must be positive");
}

}  // namespace

std::vector<ColorImage> random_images(std::uint64_t seed, int count, int size) {
    check_shape(count, size);
    std::mt19937_64 rng(seed);
    std::vector<ColorImage> images;
    images.reserve(static_cast<std::size_t>(count));
    for (int n = 0; n < count; ++n) {
        ColorImage img(size, size);
        for (auto& p : img.pixels()) {
            const double r = next_byte(rng) / 255.0;
            const double g = next_byte(rng) / 255.0;
            const double b = next_byte(rng) / 255.0;
            p = {r, g, b};
        }
        images.push_back(std::move(img));
    }
    return images;
}

std::vector<ColorImage> random_binary_images(std::uint64_t seed, int count, int size) {
    check_shape(count, size);
    std::mt19937_64 rng(seed);
    std::vector<ColorImage> images;
    for (int n = 0; n < count; ++n) {
        ColorImage img(size, size);
        for (auto& p : img.pixels()) {
            const double v = (next_byte(rng) & 0x80) ? 1.0 : 0.0;
            p = {v, v, v};
        }
        images.push_back(std::move(img));
    }
    return images;
}

std::vector<GrayImage> random_gray_images(std::uint64_t seed, int count, int size) {
    check_shape(count, size);
    std::mt19937_64 rng(seed);
    std::vector<GrayImage> images;
    for (int n = 0; n < count; ++n) {
        GrayImage img(size, size);
        for (auto& v : img.pixels()) v = next_byte(rng);
        images.push_back(std::move(img));
    }
    return images;
}

ColorImage synthetic_scene(std::uint64_t seed, int size) {
    if (size < 8) throw DomainError("synthetic_scene: size must be at least 8");
    std::mt19937_64 rng(seed);
    auto unit = [&rng] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };

    struct Disc {
        double cx, cy, radius;
        RgbColor colour;
    };
    const RgbColor palette[] = {{0.85, 0.1, 0.08}, {0.2, 0.65, 0.15}, {0.95, 0.8, 0.1}, {0.6, 0.05, 0.1}};
    std::vector<Disc> discs;
    for (int i = 0; i < 7; ++i) {
        discs.push_back({unit() * size, unit() * size, (0.12 + 0.15 * unit()) * size, palette[i % 4]});
    }
    const double stem_x = (0.3 + 0.4 * unit()) * size;

    ColorImage img(size, size);
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            const double t = static_cast<double>(x + y) / (2.0 * size);
            RgbColor p{0.25 + 0.5 * t, 0.2 + 0.3 * t, 0.3 - 0.2 * t};
            for (const auto& d : discs) {
                const double r = std::hypot(x - d.cx, y - d.cy);
                if (r < d.radius) {
                    // Highlight towards the disc centre.
                    const double shine = std::max(0.0, 1.0 - r / (0.35 * d.radius));
                    p = {d.colour.r + (1.0 - d.colour.r) * shine * 0.8, d.colour.g + (1.0 - d.colour.g) * shine * 0.8,
                         d.colour.b + (1.0 - d.colour.b) * shine * 0.8};
                }
            }
            if (std::abs(x - stem_x) < 1.0 && y < size / 2) p = {0.1, 0.35, 0.05};
            // Quantise so the scene round-trips through PNG exactly.
            p = {std::round(std::clamp(p.r, 0.0, 1.0) * 255.0) / 255.0, std::round(std::clamp(p.g, 0.0, 1.0) * 255.0) / 255.0,
                 std::round(std::clamp(p.b, 0.0, 1.0) * 255.0) / 255.0};
            img.at(x, y) = p;
        }
    }
    return img;
}

ColorImage grid_image(int size, int spacing, int line_width) {
    if (spacing <= line_width || line_width < 1) throw DomainError("grid_image: need spacing > line_width >= 1");
    ColorImage img(size, size, RgbColor{1.0, 1.0, 1.0});
    for (int y = 0; y < size; ++y) {
        for (int x = 0; x < size; ++x) {
            if (x % spacing < line_width || y % spacing < line_width) img.at(x, y) = {0.0, 0.0, 0.0};
        }
    }
    return img;
}

}  // namespace dles
