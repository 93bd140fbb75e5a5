#include "dles/morphology.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <tuple>
#include <vector>

#include "dles/errors.hpp"
#include "dles/parallel.hpp"
#include "dles/random_images.hpp"
#include "support.hpp"

namespace dles {
namespace {

const RgbColor kWhite{1, 1, 1};
const RgbColor kBlack{0, 0, 0};

const DistanceConfig kAllKinds[] = {DistanceKind::MHYAB, DistanceKind::POLAR, DistanceKind::ONE_H};

std::vector<Offset> negated(const std::vector<Offset>& offsets) {
    std::vector<Offset> out;
    for (const auto& o : offsets) out.push_back({-o.dx, -o.dy});
    return out;
}

GrayImage row(std::vector<double> values) {
    GrayImage g(static_cast<int>(values.size()), 1);
    g.pixels() = std::move(values);
    return g;
}

ColorImage pad_replicate(const ColorImage& f, int r) {
    ColorImage out(f.width() + 2 * r, f.height() + 2 * r);
    for (int y = 0; y < out.height(); ++y) {
        for (int x = 0; x < out.width(); ++x) {
            out.at(x, y) = f.at(std::clamp(x - r, 0, f.width() - 1), std::clamp(y - r, 0, f.height() - 1));
        }
    }
    return out;
}

using Rgb = std::tuple<double, double, double>;
std::set<Rgb> palette(const ColorImage& f) {
    std::set<Rgb> s;
    for (const auto& p : f.pixels()) s.insert({p.r, p.g, p.b});
    return s;
}

TEST(SquareSe, Shapes) {
    EXPECT_EQ(make_square_se(1).offsets(), (std::vector<Offset>{{0, 0}}));
    const auto se3 = make_square_se(3);
    EXPECT_EQ(se3.size(), 9u);
    EXPECT_TRUE(se3.is_flat());
    const auto se9 = make_square_se(9);
    EXPECT_EQ(se9.size(), 81u);
    int lo = 0, hi = 0;
    for (const auto& o : se9.offsets()) {
        lo = std::min({lo, o.dx, o.dy});
        hi = std::max({hi, o.dx, o.dy});
    }
    EXPECT_EQ(lo, -4);
    EXPECT_EQ(hi, 4);
    EXPECT_THROW(make_square_se(2), DomainError);
    EXPECT_THROW(make_square_se(0), DomainError);
    EXPECT_THROW(make_square_se(-3), DomainError);
}

TEST(StructuringElement, RejectsMalformedInput) {
    EXPECT_THROW(StructuringElement({}), DomainError);
    EXPECT_THROW(StructuringElement({{0, 0}}, std::vector<double>{1, 2}), DomainError);
    EXPECT_TRUE(StructuringElement({{0, 0}}, std::vector<double>{0}).is_flat());
    EXPECT_FALSE(StructuringElement({{0, 0}}, std::vector<double>{0.5}).is_flat());
}

TEST(GrayMorphology, FlatExamples) {
    const auto se = make_square_se(3);
    const GrayImage constant(5, 4, 77.0);
    EXPECT_EQ(gray_dilate(constant, se), constant);
    EXPECT_EQ(gray_erode(constant, se), constant);

    GrayImage spot(7, 7, 0.0);
    spot.at(3, 3) = 255.0;
    GrayImage hole(7, 7, 255.0);
    hole.at(3, 3) = 0.0;
    const GrayImage grown = gray_dilate(spot, se);
    const GrayImage dug = gray_erode(hole, se);
    for (int y = 0; y < 7; ++y) {
        for (int x = 0; x < 7; ++x) {
            const bool inside = std::abs(x - 3) <= 1 && std::abs(y - 3) <= 1;
            EXPECT_EQ(grown.at(x, y), inside ? 255.0 : 0.0);
            EXPECT_EQ(dug.at(x, y), inside ? 0.0 : 255.0);
        }
    }
    const StructuringElement origin({{0, 0}}, std::vector<double>{0.0});
    const GrayImage g = random_gray_images(1, 1, 16)[0];
    EXPECT_EQ(gray_dilate(g, origin), g);
    EXPECT_EQ(gray_erode(g, origin), g);
}

TEST(GrayMorphology, AdditiveOffsetsWithClipping) {
    const StructuringElement se({{-1, 0}, {0, 0}, {1, 0}}, std::vector<double>{1, 2, 3});
    const GrayImage f = row({10, 20, 30});
    EXPECT_EQ(gray_dilate(f, se).pixels(), (std::vector<double>{21, 31, 32}));
    EXPECT_EQ(gray_erode(f, se).pixels(), (std::vector<double>{8, 9, 19}));
}

TEST(GrayMorphology, DualityIsExactForFlatSymmetricSe) {
    for (int k : {3, 5}) {
        const auto se = make_square_se(k);
        for (const GrayImage& f : random_gray_images(2, 10, 24)) {
            const auto [lo, hi] = std::minmax_element(f.pixels().begin(), f.pixels().end());
            EXPECT_EQ(gray_erode(f, se), negate_image(gray_dilate(negate_image(f), se), *lo, *hi));
            EXPECT_EQ(gray_dilate(f, se), negate_image(gray_erode(negate_image(f), se), *lo, *hi));
        }
    }
}

TEST(NegateImage, Examples) {
    const GrayImage constant(3, 3, 42.0);
    EXPECT_EQ(negate_image(constant), constant);
    EXPECT_EQ(negate_image(row({0, 255, 255, 0})).pixels(), (std::vector<double>{255, 0, 0, 255}));
    const GrayImage g = random_gray_images(3, 1, 20)[0];
    EXPECT_EQ(negate_image(negate_image(g)), g);

    const ColorImage c = random_images(3, 1, 12)[0];
    const ColorImage back = negate_image(negate_image(c));
    for (std::size_t i = 0; i < c.size(); ++i) {
        EXPECT_NEAR(back[i].r, c[i].r, 1e-15);
        EXPECT_NEAR(back[i].g, c[i].g, 1e-15);
        EXPECT_NEAR(back[i].b, c[i].b, 1e-15);
    }
}

TEST(DlesMorphology, ConstantImageUnchanged) {
    const ColorImage f(9, 7, RgbColor{0.3, 0.6, 0.2});
    const auto se = make_square_se(3);
    for (const auto& cfg : kAllKinds) {
        EXPECT_EQ(dles_dilate(f, se, cfg), f);
        EXPECT_EQ(dles_erode(f, se, cfg), f);
        EXPECT_EQ(dles_close(f, se, cfg), f);
        EXPECT_EQ(dles_open(f, se, cfg), f);
    }
}

TEST(DlesMorphology, BinaryImagesMatchChannelwiseBaseline) {
    const auto se = make_square_se(3);
    for (const ColorImage& f : random_binary_images(4, 6, 20)) {
        const ColorImage grown = channelwise_dilate(f, se);
        const ColorImage shrunk = channelwise_erode(f, se);
        for (const auto& cfg : kAllKinds) {
            EXPECT_EQ(dles_dilate(f, se, cfg), grown);
            EXPECT_EQ(dles_erode(f, se, cfg), shrunk);
        }
        // White pixels stay white under dilation.
        const ColorImage d = dles_dilate(f, se, DistanceKind::POLAR);
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (f[i] == kWhite) EXPECT_EQ(d[i], kWhite);
        }
    }
}

TEST(DlesMorphology, OffWhitePixelSpreadsUnderErosion) {
    for (const RgbColor tint : {RgbColor{0.9, 0.9, 0.9}, RgbColor{0.95, 0.9, 0.92}, RgbColor{1.0, 1.0, 0.8}}) {
        ColorImage f(7, 7, kWhite);
        f.at(3, 3) = tint;
        for (const auto& cfg : kAllKinds) {
            const ColorImage e = dles_erode(f, make_square_se(3), cfg);
            for (int y = 0; y < 7; ++y) {
                for (int x = 0; x < 7; ++x) {
                    const bool inside = std::abs(x - 3) <= 1 && std::abs(y - 3) <= 1;
                    EXPECT_EQ(e.at(x, y), inside ? tint : kWhite) << to_string(cfg.kind) << " at " << x << "," << y;
                }
            }
        }
    }
}

TEST(DlesMorphology, ClosingRemovesThinGrid) {
    const ColorImage grid = grid_image(64, 16, 3);
    const ColorImage white(64, 64, kWhite);
    for (const auto& cfg : kAllKinds) EXPECT_EQ(dles_close(grid, make_square_se(9), cfg), white);
}

TEST(DlesMorphology, CompositionsMatchPrimitives) {
    const ColorImage f = random_images(5, 1, 16)[0];
    const auto se = make_square_se(3);
    for (const auto& cfg : kAllKinds) {
        EXPECT_EQ(dles_close(f, se, cfg), dles_erode(dles_dilate(f, se, cfg), se, cfg));
        EXPECT_EQ(dles_open(f, se, cfg), dles_dilate(dles_erode(f, se, cfg), se, cfg));
    }
}

TEST(DlesMorphology, RejectsNonFlatStructuringElements) {
    const ColorImage f(4, 4, kWhite);
    const StructuringElement bumpy({{0, 0}, {1, 0}}, std::vector<double>{0.0, 1.0});
    EXPECT_THROW(dles_dilate(f, bumpy, DistanceKind::MHYAB), UnsupportedFeature);
    EXPECT_THROW(dles_erode(f, bumpy, DistanceKind::MHYAB), UnsupportedFeature);
    EXPECT_THROW(dles_close(f, bumpy, DistanceKind::POLAR), UnsupportedFeature);
    EXPECT_THROW(dles_open(f, bumpy, DistanceKind::ONE_H), UnsupportedFeature);
}

TEST(DlesMorphology, OutputPixelsComeFromTheirWindow) {
    const auto images = random_images(6, 4, 16);
    for (int k : {3, 5}) {
        const auto se = make_square_se(k);
        const auto dil_steps = negated(se.offsets());
        for (const ColorImage& f : images) {
            std::vector<std::pair<ColorImage, const std::vector<Offset>*>> outputs;
            for (const auto& cfg : kAllKinds) {
                outputs.push_back({dles_dilate(f, se, cfg), &dil_steps});
                outputs.push_back({dles_erode(f, se, cfg), &se.offsets()});
            }
            outputs.push_back({white_reference_dilate(f, se), &dil_steps});
            for (const auto& [out, steps] : outputs) {
                for (int y = 0; y < f.height(); ++y) {
                    for (int x = 0; x < f.width(); ++x) {
                        ASSERT_TRUE(testing::pixel_from_window(f, out, x, y, *steps));
                    }
                }
            }
            const auto colours = palette(f);
            for (const auto& cfg : kAllKinds) {
                for (const auto& p : palette(dles_close(f, se, cfg))) ASSERT_TRUE(colours.count(p));
                for (const auto& p : palette(dles_open(f, se, cfg))) ASSERT_TRUE(colours.count(p));
            }
        }
    }
}

TEST(DlesMorphology, AsymmetricSeUsesReflectedWindowForDilation) {
    // Dilation reads f(x - u), erosion f(x + u).
    const StructuringElement right({{1, 0}});
    ColorImage f(3, 1, kBlack);
    f.at(1, 0) = kWhite;
    const ColorImage d = dles_dilate(f, right, DistanceKind::POLAR);
    EXPECT_EQ(d.at(2, 0), kWhite);
    EXPECT_EQ(d.at(1, 0), kBlack);
    EXPECT_EQ(d.at(0, 0), kBlack);  // window clips to nothing
    const ColorImage e = dles_erode(f, right, DistanceKind::POLAR);
    EXPECT_EQ(e.at(0, 0), kWhite);
    EXPECT_EQ(e.at(1, 0), kBlack);
    EXPECT_EQ(e.at(2, 0), kBlack);
}

TEST(AllOperators, IdentityStructuringElement) {
    const ColorImage f = random_images(7, 1, 16)[0];
    const auto one = make_square_se(1);
    for (const auto& cfg : kAllKinds) {
        EXPECT_EQ(dles_dilate(f, one, cfg), f);
        EXPECT_EQ(dles_erode(f, one, cfg), f);
        EXPECT_EQ(dles_close(f, one, cfg), f);
        EXPECT_EQ(dles_open(f, one, cfg), f);
    }
    EXPECT_EQ(channelwise_dilate(f, one), f);
    EXPECT_EQ(channelwise_erode(f, one), f);
    EXPECT_EQ(white_reference_dilate(f, one), f);
    const GrayImage g = random_gray_images(7, 1, 16)[0];
    EXPECT_EQ(gray_dilate(g, one), g);
    EXPECT_EQ(gray_erode(g, one), g);
}

TEST(AllOperators, InteriorUnaffectedByBorderPolicy) {
    const ColorImage f = random_images(8, 1, 20)[0];
    const int r = 2;
    const auto se = make_square_se(2 * r + 1);
    const ColorImage padded = pad_replicate(f, r);
    auto check = [&](const ColorImage& plain, const ColorImage& wide) {
        for (int y = r; y < f.height() - r; ++y) {
            for (int x = r; x < f.width() - r; ++x) ASSERT_EQ(plain.at(x, y), wide.at(x + r, y + r));
        }
    };
    for (const auto& cfg : kAllKinds) {
        check(dles_dilate(f, se, cfg), dles_dilate(padded, se, cfg));
        check(dles_erode(f, se, cfg), dles_erode(padded, se, cfg));
    }
    check(channelwise_dilate(f, se), channelwise_dilate(padded, se));
    check(white_reference_dilate(f, se), white_reference_dilate(padded, se));
}

TEST(AllOperators, ResultsIndependentOfThreadCount) {
    const ColorImage f = random_images(9, 1, 40)[0];
    const auto se = make_square_se(3);
    std::vector<ColorImage> runs[2];
    for (int t = 0; t < 2; ++t) {
        set_worker_threads(t == 0 ? 1 : 7);
        for (const auto& cfg : kAllKinds) {
            runs[t].push_back(dles_dilate(f, se, cfg));
            runs[t].push_back(dles_erode(f, se, cfg));
        }
        runs[t].push_back(channelwise_close(f, se));
        runs[t].push_back(white_reference_dilate(f, se));
    }
    set_worker_threads(0);
    EXPECT_EQ(runs[0], runs[1]);
}

TEST(ChannelwiseBaseline, Examples) {
    const auto se = make_square_se(3);
    const ColorImage constant(5, 5, RgbColor{0.1, 0.5, 0.9});
    EXPECT_EQ(channelwise_dilate(constant, se), constant);
    EXPECT_EQ(channelwise_erode(constant, se), constant);

    ColorImage f(2, 1);
    f.at(0, 0) = {1, 0, 0};
    f.at(1, 0) = {0, 1, 0};
    const ColorImage d = channelwise_dilate(f, se);
    EXPECT_EQ(d.at(0, 0), (RgbColor{1, 1, 0}));
    EXPECT_EQ(d.at(1, 0), (RgbColor{1, 1, 0}));
}

TEST(ChannelwiseBaseline, EqualsGrayscaleDilationPerChannel) {
    const auto se = make_square_se(5);
    for (const ColorImage& f : random_images(10, 3, 18)) {
        const ColorImage d = channelwise_dilate(f, se);
        const ColorImage e = channelwise_erode(f, se);
        for (int c = 0; c < 3; ++c) {
            EXPECT_EQ(extract_channel(d, c), gray_dilate(extract_channel(f, c), se));
            EXPECT_EQ(extract_channel(e, c), gray_erode(extract_channel(f, c), se));
        }
    }
}

TEST(WhiteReferenceBaseline, Examples) {
    const auto se = make_square_se(3);
    const ColorImage constant(4, 4, RgbColor{0.2, 0.4, 0.6});
    EXPECT_EQ(white_reference_dilate(constant, se), constant);
    ColorImage f(2, 1);
    f.at(0, 0) = kWhite;
    f.at(1, 0) = {0.7, 0.1, 0.3};
    const ColorImage d = white_reference_dilate(f, se);
    EXPECT_EQ(d.at(0, 0), kWhite);
    EXPECT_EQ(d.at(1, 0), kWhite);
}

}  // namespace
}  // namespace dles
