#pragma once

// Image-level operators. All windows are clipped to the image domain: pixels of the
// structuring element that fall outside the image are ignored, never padded.
//
// The DLES operators pick, for every output pixel, one of the input pixels in its
// window: the one nearest to the window's LES (dilation) or LEI (erosion) under the
// chosen colour distance and cascade. The RGB value of that pixel is copied
// verbatim, so no new colours are ever produced.

#include "dles/distance.hpp"
#include "dles/image.hpp"

namespace dles {

GrayImage gray_dilate(const GrayImage& f, const StructuringElement& g);
GrayImage gray_erode(const GrayImage& f, const StructuringElement& g);

/// f_max - f + f_min using the image's own extrema.
GrayImage negate_image(const GrayImage& f);
/// hi - f + lo with caller-supplied extrema, so a result can be negated back with the
/// extrema of the image it came from.
GrayImage negate_image(const GrayImage& f, double lo, double hi);
/// Per-channel negation with per-channel extrema.
ColorImage negate_image(const ColorImage& f);

/// A window that clips to nothing (SEs without the origin, near the border) leaves the
/// pixel unchanged.
///
/// Throw UnsupportedFeature for SEs carrying non-zero offsets.
ColorImage dles_dilate(const ColorImage& f, const StructuringElement& se, const DistanceConfig& cfg);
ColorImage dles_erode(const ColorImage& f, const StructuringElement& se, const DistanceConfig& cfg);
/// Dilation followed by erosion.
ColorImage dles_close(const ColorImage& f, const StructuringElement& se, const DistanceConfig& cfg);
/// Erosion followed by dilation.
ColorImage dles_open(const ColorImage& f, const StructuringElement& se, const DistanceConfig& cfg);

/// Independent per-channel flat max / min filters (false colours possible).
ColorImage channelwise_dilate(const ColorImage& f, const StructuringElement& se);
ColorImage channelwise_erode(const ColorImage& f, const StructuringElement& se);
ColorImage channelwise_close(const ColorImage& f, const StructuringElement& se);

/// Window colour with the smallest RGB L2 distance to white, ties by the
/// luminance/chroma/hue cascade against white, then position.
ColorImage white_reference_dilate(const ColorImage& f, const StructuringElement& se);

/// Greyscale view of one channel scaled to [0, 255] and back.
GrayImage extract_channel(const ColorImage& f, int channel);
void insert_channel(ColorImage& f, int channel, const GrayImage& g);

}  // namespace dles
