#include "dles/morphology.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "dles/errors.hpp"
#include "dles/ordering.hpp"
#include "dles/parallel.hpp"
#include "dles/spectral.hpp"

namespace dles {
namespace {

std::atomic<unsigned> g_worker_threads{0};

enum class Direction { Dilate, Erode };

// Dilation reads f(x - u), erosion f(x + u).
Offset window_step(const Offset& u, Direction dir) {
    return dir == Direction::Dilate ? Offset{-u.dx, -u.dy} : u;
}

// SE steps in scan-line order, so that window position equals ascending pixel index.
std::vector<Offset> scanline_steps(const StructuringElement& se, Direction dir) {
    std::vector<Offset> steps;
    steps.reserve(se.size());
    for (const auto& u : se.offsets()) steps.push_back(window_step(u, dir));
    std::sort(steps.begin(), steps.end(), [](const Offset& l, const Offset& r) {
        return l.dy != r.dy ? l.dy < r.dy : l.dx < r.dx;
    });
    return steps;
}

void require_flat(const StructuringElement& se, const char* who) {
    if (!se.is_flat()) {
        throw UnsupportedFeature(std::string(who) + ": colour morphology requires a flat structuring element");
    }
}

template <typename Reduce>
GrayImage gray_filter(const GrayImage& f, const StructuringElement& g, Direction dir, Reduce reduce,
                      double init) {
    GrayImage out(f.width(), f.height());
    const auto& offsets = g.offsets();
    parallel_for(static_cast<std::size_t>(f.height()), [&](std::size_t row) {
        const int y = static_cast<int>(row);
        for (int x = 0; x < f.width(); ++x) {
            double acc = init;
            bool hit = false;
            for (std::size_t i = 0; i < offsets.size(); ++i) {
                const Offset s = window_step(offsets[i], dir);
                const int sx = x + s.dx;
                const int sy = y + s.dy;
                if (!f.contains(sx, sy)) continue;
                const double eta = g.eta(i);
                acc = reduce(acc, dir == Direction::Dilate ? f.at(sx, sy) + eta : f.at(sx, sy) - eta);
                hit = true;
            }
            out.at(x, y) = hit ? acc : f.at(x, y);
        }
    });
    return out;
}

// Per-pixel data cached once per image: colour coordinates and the spectra of the
// colour matrix (dilation) or its negation (erosion).
struct PixelCache {
    std::vector<ColorSample> samples;
    std::vector<SpectralPair> spectra;
};

PixelCache build_cache(const ColorImage& f, Direction dir) {
    PixelCache cache;
    cache.samples.resize(f.size());
    cache.spectra.resize(f.size());
    parallel_for(f.size(), [&](std::size_t i) {
        const HclColor hcl = rgb_to_hcl(f[i]);
        cache.samples[i] = ColorSample::from_hcl(hcl);
        const SymMatrix2 m = cartesian_to_matrix(hcl_to_cartesian(hcl));
        cache.spectra[i] = eigendecompose(dir == Direction::Dilate ? m : -m);
    });
    return cache;
}

ColorImage dles_filter(const ColorImage& f, const StructuringElement& se, const DistanceConfig& cfg,
                       Direction dir) {
    require_flat(se, dir == Direction::Dilate ? "dles_dilate" : "dles_erode");
    const PixelCache cache = build_cache(f, dir);
    const std::vector<Offset> steps = scanline_steps(se, dir);
    const auto ranks_ahead = dir == Direction::Dilate ? ranks_ahead_for_supremum : ranks_ahead_for_infimum;

    ColorImage out(f.width(), f.height());
    parallel_for(static_cast<std::size_t>(f.height()), [&](std::size_t row) {
        const int y = static_cast<int>(row);
        std::vector<std::size_t> window;
        std::vector<SpectralPair> spectra;
        window.reserve(steps.size());
        spectra.reserve(steps.size());
        for (int x = 0; x < f.width(); ++x) {
            window.clear();
            spectra.clear();
            for (const auto& s : steps) {
                if (!f.contains(x + s.dx, y + s.dy)) continue;
                const std::size_t idx = f.index(x + s.dx, y + s.dy);
                window.push_back(idx);
                spectra.push_back(cache.spectra[idx]);
            }

            // LEI is -LES of the negated matrices; the cache already holds their spectra.
            if (window.empty()) {
                out.at(x, y) = f.at(x, y);
                continue;
            }
            const SymMatrix2 bound = les_from_spectra(spectra);
            const HclColor ref_hcl = matrix_to_hcl(dir == Direction::Dilate ? bound : -bound);
            const ColorSample ref = ColorSample::from_hcl(ref_hcl);

            std::size_t best = window.front();
            OrderKey best_key = make_order_key(cache.samples[best], ref, cfg);
            for (std::size_t k = 1; k < window.size(); ++k) {
                const OrderKey key = make_order_key(cache.samples[window[k]], ref, cfg);
                if (ranks_ahead(key, best_key)) {
                    best = window[k];
                    best_key = key;
                }
            }
            out.at(x, y) = f[best];
        }
    });
    return out;
}

template <typename Reduce>
ColorImage channel_filter(const ColorImage& f, const StructuringElement& se, Direction dir, Reduce reduce) {
    const std::vector<Offset> steps = scanline_steps(se, dir);
    ColorImage out(f.width(), f.height());
    parallel_for(static_cast<std::size_t>(f.height()), [&](std::size_t row) {
        const int y = static_cast<int>(row);
        for (int x = 0; x < f.width(); ++x) {
            RgbColor acc = f.at(x, y);
            bool hit = false;
            for (const auto& s : steps) {
                if (!f.contains(x + s.dx, y + s.dy)) continue;
                const RgbColor& p = f.at(x + s.dx, y + s.dy);
                acc = hit ? RgbColor{reduce(acc.r, p.r), reduce(acc.g, p.g), reduce(acc.b, p.b)} : p;
                hit = true;
            }
            out.at(x, y) = acc;
        }
    });
    return out;
}

double channel(const RgbColor& p, int c) { return c == 0 ? p.r : (c == 1 ? p.g : p.b); }

}  // namespace

void set_worker_threads(unsigned count) { g_worker_threads = count; }

unsigned worker_threads() {
    const unsigned n = g_worker_threads.load();
    if (n != 0) return n;
    return std::max(1u, std::thread::hardware_concurrency());
}

StructuringElement::StructuringElement(std::vector<Offset> offsets, std::optional<std::vector<double>> gray_offsets)
    : offsets_(std::move(offsets)), gray_offsets_(std::move(gray_offsets)) {
    if (offsets_.empty()) throw DomainError("StructuringElement: offset set must not be empty");
    if (gray_offsets_ && gray_offsets_->size() != offsets_.size()) {
        throw DomainError("StructuringElement: one grey offset per member required");
    }
}

bool StructuringElement::is_flat() const {
    if (!gray_offsets_) return true;
    return std::all_of(gray_offsets_->begin(), gray_offsets_->end(), [](double eta) { return eta == 0.0; });
}

StructuringElement make_square_se(int k) {
    if (k < 1 || k % 2 == 0) throw DomainError("make_square_se: size must be odd and positive");
    const int r = k / 2;
    std::vector<Offset> offsets;
    offsets.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(k));
    for (int dy = -r; dy <= r; ++dy) {
        for (int dx = -r; dx <= r; ++dx) offsets.push_back({dx, dy});
    }
    return StructuringElement(std::move(offsets));
}

GrayImage gray_dilate(const GrayImage& f, const StructuringElement& g) {
    return gray_filter(f, g, Direction::Dilate, [](double a, double b) { return std::max(a, b); },
                       -std::numeric_limits<double>::infinity());
}

GrayImage gray_erode(const GrayImage& f, const StructuringElement& g) {
    return gray_filter(f, g, Direction::Erode, [](double a, double b) { return std::min(a, b); },
                       std::numeric_limits<double>::infinity());
}

GrayImage negate_image(const GrayImage& f, double lo, double hi) {
    GrayImage out = f;
    for (auto& v : out.pixels()) v = hi - v + lo;
    return out;
}

GrayImage negate_image(const GrayImage& f) {
    const auto [lo, hi] = std::minmax_element(f.pixels().begin(), f.pixels().end());
    return negate_image(f, *lo, *hi);
}

ColorImage negate_image(const ColorImage& f) {
    ColorImage out = f;
    for (int c = 0; c < 3; ++c) insert_channel(out, c, negate_image(extract_channel(f, c)));
    return out;
}

ColorImage dles_dilate(const ColorImage& f, const StructuringElement& se, const DistanceConfig& cfg) {
    return dles_filter(f, se, cfg, Direction::Dilate);
}

ColorImage dles_erode(const ColorImage& f, const StructuringElement& se, const DistanceConfig& cfg) {
    return dles_filter(f, se, cfg, Direction::Erode);
}

ColorImage dles_close(const ColorImage& f, const StructuringElement& se, const DistanceConfig& cfg) {
    return dles_erode(dles_dilate(f, se, cfg), se, cfg);
}

ColorImage dles_open(const ColorImage& f, const StructuringElement& se, const DistanceConfig& cfg) {
    return dles_dilate(dles_erode(f, se, cfg), se, cfg);
}

ColorImage channelwise_dilate(const ColorImage& f, const StructuringElement& se) {
    require_flat(se, "channelwise_dilate");
    return channel_filter(f, se, Direction::Dilate, [](double a, double b) { return std::max(a, b); });
}

ColorImage channelwise_erode(const ColorImage& f, const StructuringElement& se) {
    require_flat(se, "channelwise_erode");
    return channel_filter(f, se, Direction::Erode, [](double a, double b) { return std::min(a, b); });
}

ColorImage channelwise_close(const ColorImage& f, const StructuringElement& se) {
    return channelwise_erode(channelwise_dilate(f, se), se);
}

ColorImage white_reference_dilate(const ColorImage& f, const StructuringElement& se) {
    require_flat(se, "white_reference_dilate");
    const std::vector<Offset> steps = scanline_steps(se, Direction::Dilate);
    const ColorSample white = ColorSample::from_hcl(rgb_to_hcl({1.0, 1.0, 1.0}));

    std::vector<ColorSample> samples(f.size());
    std::vector<double> dist(f.size());
    parallel_for(f.size(), [&](std::size_t i) {
        const RgbColor& p = f[i];
        samples[i] = ColorSample::from_hcl(rgb_to_hcl(p));
        const double dr = 1.0 - p.r;
        const double dg = 1.0 - p.g;
        const double db = 1.0 - p.b;
        dist[i] = std::sqrt(dr * dr + dg * dg + db * db);
    });

    ColorImage out(f.width(), f.height());
    parallel_for(static_cast<std::size_t>(f.height()), [&](std::size_t row) {
        const int y = static_cast<int>(row);
        for (int x = 0; x < f.width(); ++x) {
            bool have = false;
            std::size_t best = 0;
            OrderKey best_key;
            for (const auto& s : steps) {
                if (!f.contains(x + s.dx, y + s.dy)) continue;
                const std::size_t idx = f.index(x + s.dx, y + s.dy);
                const OrderKey key = cascade_key(dist[idx], samples[idx], white);
                if (!have || ranks_ahead_for_supremum(key, best_key)) {
                    best = idx;
                    best_key = key;
                    have = true;
                }
            }
            out.at(x, y) = have ? f[best] : f.at(x, y);
        }
    });
    return out;
}

GrayImage extract_channel(const ColorImage& f, int c) {
    GrayImage g(f.width(), f.height());
    for (std::size_t i = 0; i < f.size(); ++i) g[i] = channel(f[i], c) * 255.0;
    return g;
}

void insert_channel(ColorImage& f, int c, const GrayImage& g) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double v = g[i] / 255.0;
        if (c == 0) f[i].r = v;
        else if (c == 1) f[i].g = v;
        else f[i].b = v;
    }
}

}  // namespace dles
