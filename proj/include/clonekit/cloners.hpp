#pragma once

#include <string>

#include "clonekit/bases.hpp"

// Constructors for the cloning machines under study: biorthogonal
// (Bell-pair) states for an arbitrary amplitude matrix, the phase-covariant
// three-qubit family, the ancilla-free two-qubit cloner and its pole-flipped
// twin, and the universal cloner.

namespace clonekit {

// Real nonnegative 2x2 amplitude matrix a_{m,n}, Frobenius-normalized.
// Entries with negative sign or a norm off by more than tol are rejected;
// the stored matrix is renormalized to machine precision.
class CloningAmplitudes {
public:
    explicit CloningAmplitudes(const Eigen::Matrix2d& a, double tol = kNumericTol);
    CloningAmplitudes(double a00, double a01, double a10, double a11,
                      double tol = kNumericTol);

    double operator()(int m, int n) const { return a_(m, n); }
    const Eigen::Matrix2d& matrix() const { return a_; }

private:
    Eigen::Matrix2d a_;
};

// Four-wire cloning state on A,B,E,M.
struct CloningState {
    Eigen::VectorXcd psi;  // dim 16
    std::string source;
};

// Three-wire cloning state on A,B,E (no ancilla).
struct TwoQubitCloneState {
    Eigen::VectorXcd psi;  // dim 8
    double alpha = 0.0;    // gate angle when NG-constructed
};

// sum_{m,n} a_{m,n} |B^{psi}_{m*,n}>_{AB} |B^{psi}_{m,n*}>_{EM}.
CloningState cerf_state(const CloningAmplitudes& a,
                        const QubitBasis& basis = QubitBasis::z());
// Same construction for an arbitrary complex coefficient matrix.
Eigen::VectorXcd cerf_state_from_coefficients(const Eigen::Matrix2cd& c,
                                              const QubitBasis& basis);

// Phase-covariant amplitudes (v, y; x, x). Throws when 2x^2+y^2+v^2 strays
// from 1 by more than tol or any parameter is negative.
CloningAmplitudes fggnp_amplitudes(double v, double y, double x,
                                   double tol = kNumericTol);

// Universal (state-independent) amplitudes (sqrt(1-3x^2), x; x, x).
// Valid for 0 <= x <= 1/sqrt(3); beyond kUniversalSymmetricX Eve's clone
// outperforms Bob's.
CloningAmplitudes universal_amplitudes(double x);
bool universal_eve_dominant(double x);

// x of the symmetric universal cloner (Bob fidelity 5/6 in every basis).
inline const double kUniversalSymmetricX = 1.0 / (2.0 * std::sqrt(3.0));

// Optimal phase-covariant parameters: v = 1/2 + 1/sqrt 8, y = 1/2 - 1/sqrt 8,
// x = 1/sqrt 8, equatorial fidelity 1/2 + 1/sqrt 8 for both clones.
inline const double kOptimalV = 0.5 + 1.0 / std::sqrt(8.0);
inline const double kOptimalY = 0.5 - 1.0 / std::sqrt(8.0);
inline const double kOptimalX = 1.0 / std::sqrt(8.0);
inline const double kOptimalEquatorFidelity = 0.5 + 1.0 / std::sqrt(8.0);

// (1/sqrt 2)(|000> + cos(alpha)|110> + sin(alpha)|101>) on A,B,E.
TwoQubitCloneState ng_state(double alpha);

// Pole-flipped twin: (1/sqrt 2)(|111> + cos(alpha)|001> + sin(alpha)|010>).
TwoQubitCloneState ng_flipped_state(double alpha);

// The two-qubit copying gate U_{BE}: fixes |00>, sends |10> to
// cos(alpha)|10> + sin(alpha)|01>, completed unitarily on the rest.
Eigen::Matrix4cd ng_gate(double alpha);

// U_{BE}(input (x) |0>_E) for a normalized single-qubit input.
Eigen::VectorXcd apply_ng_gate(const Eigen::VectorXcd& input, double alpha);

// Recovers the gate angle of a phase-covariant cloner in the reducible
// family x^2 = vy (equivalently v + y = 1): alpha = atan2(2x, v - y).
// Throws when x^2 differs from vy by more than tol.
double ng_angle_from_fggnp(double v, double y, double x,
                           double tol = kNumericTol);

}  // namespace clonekit
