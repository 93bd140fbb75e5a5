#include "dles/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "dles/errors.hpp"

namespace dles {
namespace {

constexpr double kPi = std::numbers::pi;

std::vector<SpectralPair> decompose_all(std::span<const SymMatrix2> matrices) {
    std::vector<SpectralPair> spectra;
    spectra.reserve(matrices.size());
    for (const auto& m : matrices) spectra.push_back(eigendecompose(m));
    return spectra;
}

// log(exp(a) + exp(b)) without overflow; -inf acts as the neutral element.
double log_add_exp(double a, double b) {
    if (a == -std::numeric_limits<double>::infinity()) return b;
    if (b == -std::numeric_limits<double>::infinity()) return a;
    const double hi = std::max(a, b);
    return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

}  // namespace

SymMatrix2 SpectralPair::reconstruct() const {
    const double cs = std::cos(phi);
    const double sn = std::sin(phi);
    return {lambda * cs * cs + mu * sn * sn, (lambda - mu) * cs * sn, lambda * sn * sn + mu * cs * cs};
}

SpectralPair eigendecompose(const SymMatrix2& m) {
    const double mid = 0.5 * (m.a + m.c);
    const double half_diff = 0.5 * (m.a - m.c);
    const double radius = std::hypot(half_diff, m.b);
    SpectralPair sp{mid + radius, mid - radius, 0.0};
    if (sp.lambda - sp.mu > kEigenvalueTolerance) {
        // atan2 lands in (-pi, pi], so the halved angle is already in (-pi/2, pi/2].
        sp.phi = 0.5 * std::atan2(m.b, half_diff);
    }
    return sp;
}

double normalize_direction(double angle) {
    double a = angle - kPi * std::round(angle / kPi);
    return std::clamp(a, -0.5 * kPi, 0.5 * kPi);
}

bool directions_collinear(double angle1, double angle2) {
    return std::abs(std::sin(angle1 - angle2)) <= kCollinearTolerance;
}

EigenPool::EigenPool(std::span<const SpectralPair> spectra) {
    entries_.reserve(2 * spectra.size());
    for (std::size_t i = 0; i < spectra.size(); ++i) {
        entries_.push_back({spectra[i].lambda, spectra[i].phi, i});
        entries_.push_back({spectra[i].mu, normalize_direction(spectra[i].phi + 0.5 * kPi), i});
    }
}

void EigenPool::sort_descending() {
    std::stable_sort(entries_.begin(), entries_.end(),
                     [](const EigenEntry& l, const EigenEntry& r) { return l.value > r.value; });
}

SymMatrix2 les_from_spectra(std::span<const SpectralPair> spectra) {
    if (spectra.empty()) throw DomainError("les: empty matrix set");

    // Linear scans over the virtual pool (lambda_0, mu_0, lambda_1, mu_1, ...);
    // strict comparisons pick the same entries a stable descending sort would.
    std::size_t top = 0;
    for (std::size_t i = 1; i < spectra.size(); ++i) {
        if (spectra[i].lambda > spectra[top].lambda) top = i;
    }
    const double lambda1 = spectra[top].lambda;
    const double u1 = spectra[top].phi;

    bool isotropic = false;
    bool found = false;
    double mu_star = -std::numeric_limits<double>::infinity();
    double remaining_max = -std::numeric_limits<double>::infinity();

    auto visit = [&](double value, double angle, bool is_top_entry) {
        if (!is_top_entry) remaining_max = std::max(remaining_max, value);
        if (directions_collinear(angle, u1)) return;
        // A second maximal eigenvector off the u1 axis makes the bound isotropic.
        if (value >= lambda1 - kEigenvalueTolerance) isotropic = true;
        if (!found || value > mu_star) mu_star = value;
        found = true;
    };
    for (std::size_t i = 0; i < spectra.size(); ++i) {
        visit(spectra[i].lambda, spectra[i].phi, i == top);
        visit(spectra[i].mu, spectra[i].phi + 0.5 * kPi, false);
    }

    if (isotropic) return SymMatrix2::identity(lambda1);
    // Every pool direction collinear with u1: complete with the largest remaining value.
    if (!found) mu_star = remaining_max;
    return SpectralPair{lambda1, mu_star, u1}.reconstruct();
}

SymMatrix2 les(std::span<const SymMatrix2> matrices) {
    if (matrices.empty()) throw DomainError("les: empty matrix set");
    const auto spectra = decompose_all(matrices);
    return les_from_spectra(spectra);
}

SymMatrix2 lei(std::span<const SymMatrix2> matrices) {
    if (matrices.empty()) throw DomainError("lei: empty matrix set");
    std::vector<SymMatrix2> negated;
    negated.reserve(matrices.size());
    for (const auto& m : matrices) negated.push_back(-m);
    return -les(negated);
}

SymMatrix2 les_numeric_oracle(std::span<const SymMatrix2> matrices, double m) {
    if (matrices.empty()) throw DomainError("les_numeric_oracle: empty matrix set");
    if (!(m > 0.0) || !std::isfinite(m)) throw DomainError("les_numeric_oracle: m must be positive");

    const auto spectra = decompose_all(matrices);
    double shift = -std::numeric_limits<double>::infinity();
    for (const auto& sp : spectra) shift = std::max(shift, sp.lambda);

    // exp(m (X_i - shift I)) = sum of weighted rank-one projectors.
    struct Term {
        double log_weight;
        double angle;
    };
    std::vector<Term> terms;
    terms.reserve(2 * spectra.size());
    for (const auto& sp : spectra) {
        terms.push_back({m * (sp.lambda - shift), sp.phi});
        terms.push_back({m * (sp.mu - shift), sp.phi + 0.5 * kPi});
    }

    SymMatrix2 sum{};
    for (const auto& t : terms) {
        const double w = std::exp(t.log_weight);
        const double cs = std::cos(t.angle);
        const double sn = std::sin(t.angle);
        sum = sum + SymMatrix2{w * cs * cs, w * cs * sn, w * sn * sn};
    }

    // The small eigenvalue of a nearly rank-one sum cancels catastrophically in
    // tr/2 - radius. Cauchy-Binet gives det = sum_{k<l} w_k w_l sin^2(theta_k - theta_l),
    // a sum of non-negative terms that can be accumulated in the log domain.
    double log_det = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < terms.size(); ++k) {
        for (std::size_t l = k + 1; l < terms.size(); ++l) {
            const double s = std::sin(terms[k].angle - terms[l].angle);
            if (s == 0.0) continue;
            log_det = log_add_exp(log_det, terms[k].log_weight + terms[l].log_weight + std::log(s * s));
        }
    }

    const SpectralPair sum_spectrum = eigendecompose(sum);
    const double log_large = std::log(sum_spectrum.lambda);
    const double log_small = log_det - log_large;
    if (!std::isfinite(log_large) || !std::isfinite(log_small)) {
        throw NumericError("les_numeric_oracle: matrix logarithm is not finite");
    }

    const SymMatrix2 log_sum = SpectralPair{log_large, log_small, sum_spectrum.phi}.reconstruct();
    const SymMatrix2 result = log_sum * (1.0 / m) + SymMatrix2::identity(shift);
    if (!std::isfinite(result.a) || !std::isfinite(result.b) || !std::isfinite(result.c)) {
        throw NumericError("les_numeric_oracle: result is not finite");
    }
    return result;
}

double min_eigenvalue(const SymMatrix2& m) {
    return 0.5 * (m.a + m.c) - std::hypot(0.5 * (m.a - m.c), m.b);
}

}  // namespace dles
