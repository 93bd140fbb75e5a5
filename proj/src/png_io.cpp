#include "dles/png_io.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>
#include <cstring>
#include <iostream>
#include <vector>

#include "dles/errors.hpp"

namespace dles {

std::uint8_t quantize_channel(double v) {
    const double scaled = std::floor(v * 255.0 + 0.5);
    return static_cast<std::uint8_t>(std::clamp(scaled, 0.0, 255.0));
}

ColorImage load_png(const std::string& path) {
    png_image png;
    std::memset(&png, 0, sizeof(png));
    png.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&png, path.c_str())) {
        throw IoError("cannot read PNG '" + path + "': " + png.message);
    }
    if (png.format & PNG_FORMAT_FLAG_LINEAR) {
        png_image_free(&png);
        throw IoError("unsupported bit depth in '" + path + "': only 8-bit PNGs are accepted");
    }
    if (png.format & PNG_FORMAT_FLAG_ALPHA) {
        std::cerr << "warning: ignoring alpha channel of '" << path << "'\n";
    }
    const bool has_alpha = (png.format & PNG_FORMAT_FLAG_ALPHA) != 0;
    png.format = PNG_FORMAT_RGB;
    std::vector<png_byte> buffer(PNG_IMAGE_SIZE(png));
    // Composite over black if the source had alpha, which leaves opaque pixels untouched.
    png_color black{0, 0, 0};
    if (!png_image_finish_read(&png, has_alpha ? &black : nullptr, buffer.data(), 0, nullptr)) {
        const std::string msg = png.message;
        png_image_free(&png);
        throw IoError("cannot decode PNG '" + path + "': " + msg);
    }

    ColorImage image(static_cast<int>(png.width), static_cast<int>(png.height));
    for (std::size_t i = 0; i < image.size(); ++i) {
        image[i] = {buffer[3 * i] / 255.0, buffer[3 * i + 1] / 255.0, buffer[3 * i + 2] / 255.0};
    }
    return image;
}

void save_png(const ColorImage& image, const std::string& path) {
    if (image.empty()) throw IoError("save_png: empty image");
    std::vector<png_byte> buffer(3 * image.size());
    for (std::size_t i = 0; i < image.size(); ++i) {
        buffer[3 * i] = quantize_channel(image[i].r);
        buffer[3 * i + 1] = quantize_channel(image[i].g);
        buffer[3 * i + 2] = quantize_channel(image[i].b);
    }
    png_image png;
    std::memset(&png, 0, sizeof(png));
    png.version = PNG_IMAGE_VERSION;
    png.width = static_cast<png_uint_32>(image.width());
    png.height = static_cast<png_uint_32>(image.height());
    png.format = PNG_FORMAT_RGB;
    if (!png_image_write_to_file(&png, path.c_str(), 0, buffer.data(), 0, nullptr)) {
        throw IoError("cannot write PNG '" + path + "': " + png.message);
    }
}

}  // namespace dles
