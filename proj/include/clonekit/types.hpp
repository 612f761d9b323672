#pragma once

#include <Eigen/Dense>
#include <complex>

namespace clonekit {

using cplx = std::complex<double>;

// Default tolerances. Identities that hold by construction are checked at
// kExactTol; quantities that pass through chains of floating-point ops at
// kNumericTol. Every public operation that applies a tolerance also accepts
// it as a parameter.
inline constexpr double kExactTol = 1e-12;
inline constexpr double kNumericTol = 1e-10;

// A projection outcome below this probability is treated as impossible.
inline constexpr double kVanishingProbability = 1e-14;

// Hard cap on register growth (tensor products).
inline constexpr int kMaxWires = 20;

inline constexpr cplx kImag{0.0, 1.0};

}  // namespace clonekit
