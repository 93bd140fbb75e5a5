#include "dles/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>

#include "dles/errors.hpp"
#include "dles/morphology.hpp"
#include "dles/png_io.hpp"
#include "dles/random_images.hpp"

namespace dles {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string method_name(DistanceKind kind) { return "dles-" + std::string(to_string(kind)); }

ColorImage load_or_synthesize(const ExperimentConfig& cfg) {
    if (cfg.input) return load_png(*cfg.input);
    return synthetic_scene(*cfg.seed, cfg.size);
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
    return out;
}

void write_images(const std::vector<NamedImage>& images, const std::filesystem::path& dir) {
    for (const auto& img : images) save_png(img.image, (dir / (img.name + ".png")).string());
}

double circular_mean_hue(double sum_sin, double sum_cos) {
    if (sum_sin == 0.0 && sum_cos == 0.0) return 0.0;
    double h = std::atan2(sum_sin, sum_cos) / kTwoPi;
    if (h < 0.0) h += 1.0;
    return h >= 1.0 ? 0.0 : h;
}

}  // namespace

std::optional<Method> parse_method(std::string_view name) {
    if (name == "dles-mhyab") return Method::DlesMhyab;
    if (name == "dles-polar") return Method::DlesPolar;
    if (name == "dles-1h") return Method::DlesOneH;
    if (name == "channelwise") return Method::Channelwise;
    if (name == "white-ref") return Method::WhiteRef;
    return std::nullopt;
}

std::string_view to_string(Method method) {
    switch (method) {
        case Method::DlesMhyab: return "dles-mhyab";
        case Method::DlesPolar: return "dles-polar";
        case Method::DlesOneH: return "dles-1h";
        case Method::Channelwise: return "channelwise";
        case Method::WhiteRef: return "white-ref";
    }
    return "?";
}

std::optional<Operation> parse_operation(std::string_view name) {
    if (name == "dilate") return Operation::Dilate;
    if (name == "erode") return Operation::Erode;
    if (name == "open") return Operation::Open;
    if (name == "close") return Operation::Close;
    return std::nullopt;
}

std::optional<ExperimentId> parse_experiment(std::string_view name) {
    if (name == "dilation-cmp") return ExperimentId::DilationComparison;
    if (name == "closing-cmp") return ExperimentId::ClosingComparison;
    if (name == "component-trace") return ExperimentId::ComponentTrace;
    if (name == "idempotence") return ExperimentId::Idempotence;
    return std::nullopt;
}

ColorImage apply_filter(Operation op, Method method, const ColorImage& f, const StructuringElement& se,
                        OneHWeight one_h_weight) {
    auto dles_with = [&](DistanceKind kind) {
        const DistanceConfig cfg{kind, one_h_weight};
        switch (op) {
            case Operation::Dilate: return dles_dilate(f, se, cfg);
            case Operation::Erode: return dles_erode(f, se, cfg);
            case Operation::Open: return dles_open(f, se, cfg);
            case Operation::Close: return dles_close(f, se, cfg);
        }
        return f;
    };
    switch (method) {
        case Method::DlesMhyab: return dles_with(DistanceKind::MHYAB);
        case Method::DlesPolar: return dles_with(DistanceKind::POLAR);
        case Method::DlesOneH: return dles_with(DistanceKind::ONE_H);
        case Method::Channelwise:
            switch (op) {
                case Operation::Dilate: return channelwise_dilate(f, se);
                case Operation::Erode: return channelwise_erode(f, se);
                case Operation::Open: return channelwise_dilate(channelwise_erode(f, se), se);
                case Operation::Close: return channelwise_close(f, se);
            }
            break;
        case Method::WhiteRef:
            if (op != Operation::Dilate) throw DomainError("white-ref is only defined for dilation");
            return white_reference_dilate(f, se);
    }
    return f;
}

void ExperimentConfig::validate() const {
    if (se_size < 1 || se_size % 2 == 0) throw DomainError("SE size must be odd and positive");
    if (count < 1) throw DomainError("image count must be at least 1");
    if (size < 1) throw DomainError("image size must be positive");
    if (kinds.empty()) throw DomainError("at least one distance kind is required");
    const bool generated = id == ExperimentId::ComponentTrace || id == ExperimentId::Idempotence || !input;
    if (generated && !seed) throw DomainError("a seed is required when input images are generated");
}

std::vector<NamedImage> run_dilation_comparison(const ExperimentConfig& cfg, const ColorImage& input) {
    const StructuringElement se = make_square_se(cfg.se_size);
    std::vector<NamedImage> out;
    out.push_back({"original", input});
    out.push_back({"channelwise", channelwise_dilate(input, se)});
    out.push_back({"white-ref", white_reference_dilate(input, se)});
    for (DistanceKind kind : {DistanceKind::MHYAB, DistanceKind::POLAR, DistanceKind::ONE_H}) {
        out.push_back({method_name(kind), dles_dilate(input, se, {kind, cfg.one_h_weight})});
    }
    return out;
}

std::vector<NamedImage> run_dilation_comparison(const ExperimentConfig& cfg) {
    cfg.validate();
    return run_dilation_comparison(cfg, load_or_synthesize(cfg));
}

std::vector<NamedImage> run_closing_comparison(const ExperimentConfig& cfg, const ColorImage& input) {
    const StructuringElement se = make_square_se(cfg.se_size);
    std::vector<NamedImage> out;
    out.push_back({"original", input});
    for (DistanceKind kind : cfg.kinds) {
        out.push_back({"close-" + method_name(kind), dles_close(input, se, {kind, cfg.one_h_weight})});
    }
    return out;
}

std::vector<NamedImage> run_closing_comparison(const ExperimentConfig& cfg) {
    cfg.validate();
    return run_closing_comparison(cfg, load_or_synthesize(cfg));
}

ComponentMeans component_means(const ColorImage& img) {
    double sum_sin = 0.0;
    double sum_cos = 0.0;
    double sum_c = 0.0;
    double sum_lm = 0.0;
    for (const auto& p : img.pixels()) {
        const HclColor q = rgb_to_hcl(p);
        sum_sin += std::sin(q.hue_radians());
        sum_cos += std::cos(q.hue_radians());
        sum_c += q.c;
        sum_lm += q.lm;
    }
    const double n = static_cast<double>(img.size());
    return {circular_mean_hue(sum_sin, sum_cos), sum_c / n, sum_lm / n};
}

ComponentTrace run_component_trace(const ExperimentConfig& cfg, const std::vector<ColorImage>& images) {
    const StructuringElement se = make_square_se(cfg.se_size);
    ComponentTrace trace;
    trace.kinds = cfg.kinds;
    for (DistanceKind kind : cfg.kinds) {
        std::vector<ComponentMeans> rows;
        double sum_sin = 0.0;
        double sum_cos = 0.0;
        double sum_c = 0.0;
        double sum_lm = 0.0;
        for (const auto& img : images) {
            const ComponentMeans m = component_means(dles_close(img, se, {kind, cfg.one_h_weight}));
            rows.push_back(m);
            sum_sin += std::sin(kTwoPi * m.h);
            sum_cos += std::cos(kTwoPi * m.h);
            sum_c += m.c;
            sum_lm += m.lm;
        }
        const double n = static_cast<double>(images.size());
        trace.grand.push_back({circular_mean_hue(sum_sin, sum_cos), sum_c / n, sum_lm / n});
        trace.per_image.push_back(std::move(rows));
    }
    return trace;
}

ComponentTrace run_component_trace(const ExperimentConfig& cfg) {
    cfg.validate();
    return run_component_trace(cfg, random_images(*cfg.seed, cfg.count, cfg.size));
}

void write_component_trace_csv(const ComponentTrace& trace, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << "image,kind,meanH,meanC,meanLm\n";
    for (std::size_t k = 0; k < trace.kinds.size(); ++k) {
        for (std::size_t i = 0; i < trace.per_image[k].size(); ++i) {
            const auto& m = trace.per_image[k][i];
            out << i << ',' << to_string(trace.kinds[k]) << ',' << format_number(m.h) << ','
                << format_number(m.c) << ',' << format_number(m.lm) << '\n';
        }
    }
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

double deviation_percent(const ColorImage& a, const ColorImage& b) {
    if (a.width() != b.width() || a.height() != b.height()) throw DomainError("deviation_percent: size mismatch");
    double total = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int dr = std::abs(quantize_channel(a[i].r) - quantize_channel(b[i].r));
        const int dg = std::abs(quantize_channel(a[i].g) - quantize_channel(b[i].g));
        const int db = std::abs(quantize_channel(a[i].b) - quantize_channel(b[i].b));
        total += (dr + dg + db) / (3.0 * 255.0);
    }
    return 100.0 * total / static_cast<double>(a.size());
}

DeviationReport run_double_closing_deviation(const ExperimentConfig& cfg, const std::vector<ColorImage>& images) {
    const StructuringElement se = make_square_se(cfg.se_size);
    DeviationReport report;
    report.kinds = cfg.kinds;
    const double n = static_cast<double>(images.size());
    for (DistanceKind kind : cfg.kinds) {
        const DistanceConfig dcfg{kind, cfg.one_h_weight};
        std::vector<double> rows;
        double sum = 0.0;
        for (const auto& img : images) {
            const ColorImage once = dles_close(img, se, dcfg);
            const ColorImage twice = dles_close(once, se, dcfg);
            rows.push_back(deviation_percent(once, twice));
            sum += rows.back();
        }
        report.mean.push_back(sum / n);
        report.per_image.push_back(std::move(rows));
    }
    double control_sum = 0.0;
    for (const auto& img : images) {
        const ColorImage once = channelwise_close(img, se);
        report.control_per_image.push_back(deviation_percent(once, channelwise_close(once, se)));
        control_sum += report.control_per_image.back();
    }
    report.control_mean = control_sum / n;
    return report;
}

DeviationReport run_double_closing_deviation(const ExperimentConfig& cfg) {
    cfg.validate();
    return run_double_closing_deviation(cfg, random_images(*cfg.seed, cfg.count, cfg.size));
}

void write_deviation_csv(const DeviationReport& report, const std::filesystem::path& path) {
    std::ofstream out = open_output(path);
    out << "image,kind,deviation_pct\n";
    for (std::size_t k = 0; k < report.kinds.size(); ++k) {
        for (std::size_t i = 0; i < report.per_image[k].size(); ++i) {
            out << i << ',' << to_string(report.kinds[k]) << ',' << format_number(report.per_image[k][i]) << '\n';
        }
    }
    for (std::size_t i = 0; i < report.control_per_image.size(); ++i) {
        out << i << ",channelwise," << format_number(report.control_per_image[i]) << '\n';
    }
    for (std::size_t k = 0; k < report.kinds.size(); ++k) {
        out << "mean," << to_string(report.kinds[k]) << ',' << format_number(report.mean[k]) << '\n';
    }
    out << "mean,channelwise," << format_number(report.control_mean) << '\n';
    out << "metric," << report.metric << ",\n";
    if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void run_experiment(const ExperimentConfig& cfg) {
    cfg.validate();
    if (!cfg.out_dir) throw DomainError("an output directory is required");
    std::error_code ec;
    std::filesystem::create_directories(*cfg.out_dir, ec);
    if (ec) throw IoError("cannot create '" + cfg.out_dir->string() + "': " + ec.message());

    switch (cfg.id) {
        case ExperimentId::DilationComparison:
            write_images(run_dilation_comparison(cfg), *cfg.out_dir);
            break;
        case ExperimentId::ClosingComparison:
            write_images(run_closing_comparison(cfg), *cfg.out_dir);
            break;
        case ExperimentId::ComponentTrace: {
            const ComponentTrace trace = run_component_trace(cfg);
            write_component_trace_csv(trace, *cfg.out_dir / "component_trace.csv");
            for (std::size_t k = 0; k < trace.kinds.size(); ++k) {
                std::cout << to_string(trace.kinds[k]) << ": meanH=" << format_number(trace.grand[k].h)
                          << " meanC=" << format_number(trace.grand[k].c)
                          << " meanLm=" << format_number(trace.grand[k].lm) << '\n';
            }
            break;
        }
        case ExperimentId::Idempotence: {
            const DeviationReport report = run_double_closing_deviation(cfg);
            write_deviation_csv(report, *cfg.out_dir / "double_closing_deviation.csv");
            for (std::size_t k = 0; k < report.kinds.size(); ++k) {
                std::cout << to_string(report.kinds[k]) << ": " << format_number(report.mean[k]) << " %\n";
            }
            std::cout << "channelwise: " << format_number(report.control_mean) << " %\n";
            break;
        }
    }
}

}  // namespace dles
