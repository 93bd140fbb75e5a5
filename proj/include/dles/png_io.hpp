#pragma once

#include <cstdint>
#include <string>

#include "dles/image.hpp"

namespace dles {

/// Read an 8-bit PNG as RGB in [0,1] (byte b -> b / 255). Greyscale and palette images
/// are expanded to RGB; an alpha channel is dropped with a warning on stderr.
/// Throws IoError on missing/corrupt files and for 16-bit images.
ColorImage load_png(const std::string& path);

/// Write 8-bit RGB, quantising each channel with round-half-up of v * 255, clamped.
void save_png(const ColorImage& image, const std::string& path);

std::uint8_t quantize_channel(double v);

}  // namespace dles
