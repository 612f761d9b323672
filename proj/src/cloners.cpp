#include "clonekit/cloners.hpp"

#include <cmath>
#include <stdexcept>

namespace clonekit {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

CloningAmplitudes::CloningAmplitudes(const Eigen::Matrix2d& a, double tol) : a_(a) {
    if ((a_.array() < 0.0).any())
        throw std::invalid_argument("cloning amplitudes must be nonnegative");
    const double norm = a_.norm();
    if (std::abs(norm * norm - 1.0) > tol)
        throw std::invalid_argument("cloning amplitudes must be normalized");
    a_ /= norm;
}

CloningAmplitudes::CloningAmplitudes(double a00, double a01, double a10, double a11,
                                     double tol)
    : CloningAmplitudes((Eigen::Matrix2d() << a00, a01, a10, a11).finished(), tol) {}

CloningState cerf_state(const CloningAmplitudes& a, const QubitBasis& basis) {
    return {cerf_state_from_coefficients(a.matrix().cast<cplx>(), basis),
            "cerf(" + basis.label + ")"};
}

Eigen::VectorXcd cerf_state_from_coefficients(const Eigen::Matrix2cd& c,
                                              const QubitBasis& basis) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(16);
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) psi += c(m, n) * bell_pair(m, n, basis);
    return psi;
}

CloningAmplitudes fggnp_amplitudes(double v, double y, double x, double tol) {
    if (v < 0.0 || y < 0.0 || x < 0.0)
        throw std::invalid_argument("phase-covariant parameters must be nonnegative");
    const double norm_sq = 2.0 * x * x + y * y + v * v;
    if (std::abs(norm_sq - 1.0) > tol)
        throw std::invalid_argument("phase-covariant normalization 2x^2+y^2+v^2=1 violated");
    const double s = 1.0 / std::sqrt(norm_sq);
    return {s * v, s * y, s * x, s * x};
}

CloningAmplitudes universal_amplitudes(double x) {
    if (x < 0.0 || 3.0 * x * x > 1.0)
        throw std::invalid_argument("universal parameter must satisfy 0 <= x <= 1/sqrt(3)");
    return {std::sqrt(1.0 - 3.0 * x * x), x, x, x};
}

bool universal_eve_dominant(double x) { return x > kUniversalSymmetricX; }

TwoQubitCloneState ng_state(double alpha) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
    psi(0b000) = kInvSqrt2;
    psi(0b110) = kInvSqrt2 * std::cos(alpha);
    psi(0b101) = kInvSqrt2 * std::sin(alpha);
    return {psi, alpha};
}

TwoQubitCloneState ng_flipped_state(double alpha) {
    Eigen::VectorXcd psi = Eigen::VectorXcd::Zero(8);
    psi(0b111) = kInvSqrt2;
    psi(0b001) = kInvSqrt2 * std::cos(alpha);
    psi(0b010) = kInvSqrt2 * std::sin(alpha);
    return {psi, alpha};
}

Eigen::Matrix4cd ng_gate(double alpha) {
    const double c = std::cos(alpha);
    const double s = std::sin(alpha);
    // Index order |be>: 0=|00>, 1=|01>, 2=|10>, 3=|11>. Only the images of
    // |00> and |10> are prescribed; the completion rotates the {|01>,|10>}
    // plane so the whole map is unitary.
    Eigen::Matrix4cd u = Eigen::Matrix4cd::Zero();
    u(0, 0) = 1.0;
    u(2, 2) = c;
    u(1, 2) = s;
    u(1, 1) = c;
    u(2, 1) = -s;
    u(3, 3) = 1.0;
    return u;
}

Eigen::VectorXcd apply_ng_gate(const Eigen::VectorXcd& input, double alpha) {
    if (input.size() != 2)
        throw std::invalid_argument("gate input must be a single-qubit state");
    if (!is_normalized(input))
        throw std::invalid_argument("gate input must be normalized");
    Eigen::VectorXcd ket0 = Eigen::VectorXcd::Zero(2);
    ket0(0) = 1.0;
    return ng_gate(alpha) * tensor(input, ket0);
}

double ng_angle_from_fggnp(double v, double y, double x, double tol) {
    if (std::abs(x * x - v * y) > tol)
        throw std::domain_error("parameters outside the reducible family x^2 = vy");
    fggnp_amplitudes(v, y, x, tol);  // validates sign and normalization
    return std::atan2(2.0 * x, v - y);
}

}  // namespace clonekit
