#pragma once

// Runners for the dilation comparison, closing comparison, component trace and
// double-closing idempotence experiments, plus the filter dispatch used by the CLI.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dles/distance.hpp"
#include "dles/image.hpp"

namespace dles {

enum class Method { DlesMhyab, DlesPolar, DlesOneH, Channelwise, WhiteRef };
enum class Operation { Dilate, Erode, Open, Close };

std::optional<Method> parse_method(std::string_view name);
std::string_view to_string(Method method);
std::optional<Operation> parse_operation(std::string_view name);

/// Apply one operation with one method. The white-reference baseline only defines a
/// dilation; other operations with it throw DomainError.
ColorImage apply_filter(Operation op, Method method, const ColorImage& f, const StructuringElement& se,
                        OneHWeight one_h_weight = OneHWeight::Diff);

inline constexpr std::array<DistanceKind, 3> kAllDistanceKinds{DistanceKind::MHYAB, DistanceKind::POLAR,
                                                              DistanceKind::ONE_H};

enum class ExperimentId { DilationComparison, ClosingComparison, ComponentTrace, Idempotence };

std::optional<ExperimentId> parse_experiment(std::string_view name);

struct ExperimentConfig {
    ExperimentId id = ExperimentId::Idempotence;
    std::optional<std::string> input;      ///< image path; synthetic stand-in when absent
    std::optional<std::uint64_t> seed;
    int count = 100;
    int size = 32;
    int se_size = 3;
    std::vector<DistanceKind> kinds{kAllDistanceKinds.begin(), kAllDistanceKinds.end()};
    std::optional<std::filesystem::path> out_dir;
    OneHWeight one_h_weight = OneHWeight::Diff;

    /// Throws DomainError: even SE size, count < 1, or generated inputs without a seed.
    void validate() const;
};

struct NamedImage {
    std::string name;
    ColorImage image;
};

/// Original, channel-wise, white-reference and the three DLES dilations.
std::vector<NamedImage> run_dilation_comparison(const ExperimentConfig& cfg);
std::vector<NamedImage> run_dilation_comparison(const ExperimentConfig& cfg, const ColorImage& input);

/// Original plus one DLES closing per configured distance.
std::vector<NamedImage> run_closing_comparison(const ExperimentConfig& cfg);
std::vector<NamedImage> run_closing_comparison(const ExperimentConfig& cfg, const ColorImage& input);

struct ComponentMeans {
    double h = 0.0;   ///< circular mean, fraction of a turn in [0,1)
    double c = 0.0;
    double lm = 0.0;
};

/// Mean components of an image; hue is averaged on the circle.
ComponentMeans component_means(const ColorImage& img);

struct ComponentTrace {
    std::vector<DistanceKind> kinds;
    std::vector<std::vector<ComponentMeans>> per_image;  ///< [kind][image]
    std::vector<ComponentMeans> grand;                   ///< [kind]
};

ComponentTrace run_component_trace(const ExperimentConfig& cfg);
ComponentTrace run_component_trace(const ExperimentConfig& cfg, const std::vector<ColorImage>& images);

/// Rows `image,kind,meanH,meanC,meanLm`, 9 significant digits.
void write_component_trace_csv(const ComponentTrace& trace, const std::filesystem::path& path);

inline constexpr std::string_view kDeviationMetric = "mean_abs_byte_diff_per_channel_pct";

/// Mean over pixels of sum_channel |byte_a - byte_b| / (3 * 255), as a percentage.
double deviation_percent(const ColorImage& a, const ColorImage& b);

struct DeviationReport {
    std::string metric{kDeviationMetric};
    std::vector<DistanceKind> kinds;
    std::vector<std::vector<double>> per_image;  ///< [kind][image], percent
    std::vector<double> mean;                    ///< [kind]
    std::vector<double> control_per_image;       ///< channel-wise closing
    double control_mean = 0.0;
};

DeviationReport run_double_closing_deviation(const ExperimentConfig& cfg);
DeviationReport run_double_closing_deviation(const ExperimentConfig& cfg, const std::vector<ColorImage>& images);

/// Rows `image,kind,deviation_pct` plus `mean` rows, and a `metric` line.
void write_deviation_csv(const DeviationReport& report, const std::filesystem::path& path);

/// Run the configured experiment and write its PNG/CSV outputs into cfg.out_dir.
void run_experiment(const ExperimentConfig& cfg);

}  // namespace dles
