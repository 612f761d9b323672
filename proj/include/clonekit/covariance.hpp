#pragma once

#include <utility>
#include <vector>

#include "clonekit/cloners.hpp"

// Strict and FAPP covariance certification for biorthogonal cloners.
//
// The object under test is always the cloner built in the reference (Z)
// basis from the amplitude matrix a. Strict covariance between basis1 and
// basis2 means the state admits one and the same coefficient matrix in both
// generalized Bell-pair expansions, which is how the covariance theorem is
// applied throughout: the matrix is transported into basis1 first and the
// pair conditions are read off the basis1/basis2 overlap table.

namespace clonekit {

// Structural zero threshold for overlap entries, distinct from the
// amplitude-equality threshold: numerical dust in the table must not create
// phantom constraints.
inline constexpr double kOverlapZeroTol = 1e-10;
inline constexpr double kAmplitudeEqTol = 1e-12;

struct CovarianceVerdict {
    bool strict = false;
    bool fapp = false;
    // Pairs of amplitude labels (m,n),(m',n') linked by a nonzero overlap
    // but carrying unequal coefficients, in reference-basis labels whenever
    // the transport between the bases is label-bijective.
    std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> violated_pairs;
    double max_residual = 0.0;
};

// Coefficient matrix of the Z-built cloner re-expanded in `basis`.
Eigen::Matrix2cd transported_coefficients(const CloningAmplitudes& a,
                                          const QubitBasis& basis);

// Worst componentwise deviation between the Z-built state and its
// reconstructions from the basis1 coefficients in basis1 and in basis2.
// Zero (to rounding) exactly when the cloner is strictly covariant.
double covariance_residual(const CloningAmplitudes& a, const QubitBasis& basis1,
                           const QubitBasis& basis2);

// Theorem route: nonzero entries of bell_overlap_table(basis1, basis2) must
// link equal coefficients of the transported matrix.
CovarianceVerdict strict_covariance_by_theorem(const CloningAmplitudes& a,
                                               const QubitBasis& basis1,
                                               const QubitBasis& basis2);

// Definition route: componentwise state equality of the two expansions,
// within tol (exact equality, not up-to-phase).
bool strict_covariance_direct(const CloningAmplitudes& a, const QubitBasis& basis1,
                              const QubitBasis& basis2, double tol = kNumericTol);

// Diagnostic only: same comparison modulo a global phase.
bool strict_covariance_direct_up_to_phase(const CloningAmplitudes& a,
                                          const QubitBasis& basis1,
                                          const QubitBasis& basis2,
                                          double tol = kNumericTol);

// Checks strict covariance of a against X and every equatorial basis
// phi_k = 2 pi k / phi_samples; returns (all pass, worst residual).
std::pair<bool, double> equator_sweep(const CloningAmplitudes& a, int phi_samples,
                                      double tol = kNumericTol);

// Equal product-basis measurement diagonals of the Z-built state under the
// two detector assignments: each wire reads its named basis, with the
// reference wire A and the mirror wire M reading the conjugate basis. With
// that placement strict covariance implies FAPP covariance.
bool fapp_covariance(const CloningAmplitudes& a, const QubitBasis& basis1,
                     const QubitBasis& basis2, double tol = kNumericTol);

}  // namespace clonekit
