#pragma once

// Closed-form spectral decomposition of 2x2 symmetric matrices and the
// log-exp supremum (LES): the limit m -> inf of (1/m) log sum_i exp(m X_i),
// which is a Loewner upper bound of the X_i.

#include <cstddef>
#include <span>
#include <vector>

#include "dles/colorspace.hpp"

namespace dles {

/// Eigenvalues below this separation are treated as equal.
inline constexpr double kEigenvalueTolerance = 1e-9;
/// Two eigen-directions are collinear iff |sin(angle difference)| <= this.
inline constexpr double kCollinearTolerance = 1e-9;

/// X = lambda u u^T + mu v v^T with u = (cos phi, sin phi), v = (-sin phi, cos phi).
struct SpectralPair {
    double lambda = 0.0;
    double mu = 0.0;
    double phi = 0.0;  ///< in [-pi/2, pi/2]; 0 when lambda == mu

    SymMatrix2 reconstruct() const;
};

/// lambda >= mu; phi = 0 when the two eigenvalues agree within kEigenvalueTolerance.
SpectralPair eigendecompose(const SymMatrix2& m);

/// Map an angle onto the line-direction range [-pi/2, pi/2].
double normalize_direction(double angle);

bool directions_collinear(double angle1, double angle2);

struct EigenEntry {
    double value = 0.0;
    double angle = 0.0;  ///< direction of the eigenvector, [-pi/2, pi/2]
    std::size_t source = 0;
};

/// All 2n eigenpairs of a multiset of n matrices.
class EigenPool {
public:
    explicit EigenPool(std::span<const SpectralPair> spectra);

    const std::vector<EigenEntry>& entries() const { return entries_; }

    /// Stable descending sort by eigenvalue; equal values keep input order.
    void sort_descending();

private:
    std::vector<EigenEntry> entries_;
};

/// Closed-form LES. Throws DomainError on empty input.
SymMatrix2 les(std::span<const SymMatrix2> matrices);

/// LES from already decomposed matrices (the image kernels cache these per pixel).
SymMatrix2 les_from_spectra(std::span<const SpectralPair> spectra);

/// Dual infimum: -les({-X_i}). Throws DomainError on empty input.
SymMatrix2 lei(std::span<const SymMatrix2> matrices);

/// (1/m) log(sum_i exp(m X_i)) evaluated numerically at finite m, shifted by the
/// largest eigenvalue so the exponentials cannot overflow. Throws DomainError for
/// empty input or m <= 0 and NumericError if the result is not finite.
SymMatrix2 les_numeric_oracle(std::span<const SymMatrix2> matrices, double m);

/// Smallest eigenvalue of a symmetric matrix, used for Loewner-order checks.
double min_eigenvalue(const SymMatrix2& m);

}  // namespace dles
