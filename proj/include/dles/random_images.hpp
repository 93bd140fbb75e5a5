#pragma once

#include <cstdint>
#include <vector>

#include "dles/image.hpp"

namespace dles {

/// `count` size x size images whose channels are i.i.d. uniform over the 256 byte
/// levels (value = byte / 255). Bytes are the top 8 bits of successive outputs of
/// std::mt19937_64 seeded with `seed`, in pixel-major R, G, B order, so the images are
/// identical on every platform.
std::vector<ColorImage> random_images(std::uint64_t seed, int count, int size);

/// Same generator, each pixel black or white with probability 1/2.
std::vector<ColorImage> random_binary_images(std::uint64_t seed, int count, int size);

/// Integer grey levels 0..255 from the same generator.
std::vector<GrayImage> random_gray_images(std::uint64_t seed, int count, int size);

/// Smooth synthetic colour scene (gradient background with overlapping red, green and
/// yellow discs and a thin dark stem), a stand-in for natural test photographs.
ColorImage synthetic_scene(std::uint64_t seed, int size);

/// White size x size image with black grid lines `line_width` pixels wide every `spacing` pixels.
ColorImage grid_image(int size, int spacing, int line_width);

}  // namespace dles
