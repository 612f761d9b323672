#include "clonekit/covariance.hpp"

#include <array>
#include <cmath>
#include <optional>

namespace clonekit {

namespace {

// Label bijection between the reference-basis Bell pairs and those of
// `basis`, when one exists (it does for X, Y, Z' and any basis whose Bell
// pairs coincide with reference pairs up to phase). sigma[2m+n] is the
// basis-label index carrying the reference label (m,n).
std::optional<std::array<int, 4>> pair_transport(const QubitBasis& basis) {
    const QubitBasis z = QubitBasis::z();
    std::array<int, 4> sigma{};
    for (int l = 0; l < 4; ++l) {
        const Eigen::VectorXcd ref = bell_pair(l >> 1, l & 1, z);
        int hit = -1;
        for (int u = 0; u < 4; ++u) {
            if (std::abs(bell_pair(u >> 1, u & 1, basis).dot(ref)) > 1.0 - 1e-9)
                hit = u;
        }
        if (hit < 0) return std::nullopt;
        sigma[l] = hit;
    }
    return sigma;
}

double rebuild_residual(const Eigen::VectorXcd& psi, const Eigen::Matrix2cd& c,
                        const QubitBasis& basis) {
    return (cerf_state_from_coefficients(c, basis) - psi).cwiseAbs().maxCoeff();
}

}  // namespace

Eigen::Matrix2cd transported_coefficients(const CloningAmplitudes& a,
                                          const QubitBasis& basis) {
    return bell_coefficients(cerf_state(a).psi, basis);
}

double covariance_residual(const CloningAmplitudes& a, const QubitBasis& basis1,
                           const QubitBasis& basis2) {
    const Eigen::VectorXcd psi = cerf_state(a).psi;
    const Eigen::Matrix2cd c1 = bell_coefficients(psi, basis1);
    return std::max(rebuild_residual(psi, c1, basis1),
                    rebuild_residual(psi, c1, basis2));
}

CovarianceVerdict strict_covariance_by_theorem(const CloningAmplitudes& a,
                                               const QubitBasis& basis1,
                                               const QubitBasis& basis2) {
    CovarianceVerdict verdict;
    const Eigen::VectorXcd psi = cerf_state(a).psi;
    const Eigen::Matrix2cd c1 = bell_coefficients(psi, basis1);

    // The theorem speaks about a state that satisfies the ansatz in basis1;
    // if this one does not, it cannot be expanded there at all.
    const double faithful = rebuild_residual(psi, c1, basis1);
    verdict.max_residual = faithful;
    bool ok = faithful <= kNumericTol;

    const auto sigma1 = pair_transport(basis1);
    auto original_label = [&](int u) {
        if (sigma1) {
            for (int l = 0; l < 4; ++l)
                if ((*sigma1)[l] == u) return std::make_pair(l >> 1, l & 1);
        }
        return std::make_pair(u >> 1, u & 1);
    };

    const Eigen::Matrix4cd table = bell_overlap_table(basis1, basis2);
    for (int u = 0; u < 4; ++u)
        for (int w = 0; w < 4; ++w) {
            if (std::abs(table(u, w)) <= kOverlapZeroTol) continue;
            const double gap = std::abs(c1(u >> 1, u & 1) - c1(w >> 1, w & 1));
            verdict.max_residual = std::max(verdict.max_residual, gap);
            if (gap > kAmplitudeEqTol) {
                ok = false;
                verdict.violated_pairs.emplace_back(original_label(u),
                                                    original_label(w));
            }
        }

    verdict.strict = ok;
    verdict.fapp = fapp_covariance(a, basis1, basis2);
    return verdict;
}

bool strict_covariance_direct(const CloningAmplitudes& a, const QubitBasis& basis1,
                              const QubitBasis& basis2, double tol) {
    return covariance_residual(a, basis1, basis2) <= tol;
}

bool strict_covariance_direct_up_to_phase(const CloningAmplitudes& a,
                                          const QubitBasis& basis1,
                                          const QubitBasis& basis2, double tol) {
    const Eigen::VectorXcd psi = cerf_state(a).psi;
    const Eigen::Matrix2cd c1 = bell_coefficients(psi, basis1);
    const Eigen::VectorXcd in1 = cerf_state_from_coefficients(c1, basis1);
    const Eigen::VectorXcd in2 = cerf_state_from_coefficients(c1, basis2);
    if (rebuild_residual(psi, c1, basis1) > tol) return false;
    const double n2 = in2.norm();
    if (std::abs(n2 - 1.0) > tol) return false;
    return equal_up_to_global_phase(in1, in2 / n2, tol);
}

std::pair<bool, double> equator_sweep(const CloningAmplitudes& a, int phi_samples,
                                      double tol) {
    if (phi_samples < 2)
        throw std::invalid_argument("equator sweep needs at least two samples");
    const QubitBasis x = QubitBasis::x();
    bool all_pass = true;
    double worst = 0.0;
    for (int k = 0; k < phi_samples; ++k) {
        const double phi = 2.0 * M_PI * k / phi_samples;
        const double r = covariance_residual(a, x, QubitBasis::equatorial(phi));
        worst = std::max(worst, r);
        all_pass = all_pass && r <= tol;
    }
    return {all_pass, worst};
}

bool fapp_covariance(const CloningAmplitudes& a, const QubitBasis& basis1,
                     const QubitBasis& basis2, double tol) {
    const Eigen::VectorXcd psi = cerf_state(a).psi;
    // Detector assignment: the reference wire A and its mirror M read the
    // conjugate basis, the clones read the basis itself.
    auto detector_bases = [](const QubitBasis& b) {
        const QubitBasis conj = conjugate_basis(b);
        return std::vector<QubitBasis>{conj, b, b, conj};
    };
    const Eigen::VectorXd p1 = product_basis_probabilities(psi, detector_bases(basis1));
    const Eigen::VectorXd p2 = product_basis_probabilities(psi, detector_bases(basis2));
    return (p1 - p2).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace clonekit
