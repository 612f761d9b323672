#include "clonekit/reducibility.hpp"

#include <cmath>
#include <stdexcept>

namespace clonekit {

namespace {

Eigen::VectorXcd ket(int v) {
    Eigen::VectorXcd k = Eigen::VectorXcd::Zero(2);
    k(v) = 1.0;
    return k;
}

// 1_A (x) G_{BE} applied to |B_{0,0}>_{AB} |0>_E.
Eigen::VectorXcd branch_state(const Eigen::Matrix4cd& gate) {
    const int wires[] = {1, 2};
    return apply_on_wires(gate, wires,
                          tensor(bell_state(0, 0), ket(0)));
}

}  // namespace

ReductionConditions check_conditions(const CloningAmplitudes& a, double tol) {
    ReductionConditions c;
    c.i = std::abs(a(0, 0) * a(0, 1) - a(1, 0) * a(1, 1)) <= tol;
    c.ii = std::abs(a(0, 0) * a(1, 0) - a(0, 1) * a(1, 1)) <= tol;
    c.iii = std::abs(a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0)) <= tol;
    return c;
}

ReducibilityReport decompose(const CloningAmplitudes& a, double tol) {
    ReducibilityReport report;
    report.conditions = check_conditions(a, tol);
    report.reducible = report.conditions.any();
    if (!report.reducible) return report;

    const QubitBasis basis = report.conditions.i    ? QubitBasis::z()
                             : report.conditions.ii ? QubitBasis::x()
                                                    : QubitBasis::y();
    const Eigen::VectorXcd psi = cerf_state(a).psi;

    // Resolve the ancilla wire in the theorem's basis. Each branch is an
    // exact component of the state; the condition is precisely what makes
    // the gate columns read off below orthonormal.
    auto [branch_u, p] = project_wire(psi, 3, basis.ket(0));
    auto [branch_v, q] = project_wire(psi, 3, basis.ket(1));

    auto gate_from_branch = [tol](const Eigen::VectorXcd& branch) {
        const double sqrt2 = std::sqrt(2.0);
        std::vector<Eigen::VectorXcd> cols = {sqrt2 * branch.head(4),
                                              sqrt2 * branch.tail(4)};
        // The prescribed images are of |00> and |10>; park them in columns
        // 0 and 2 and let the deterministic completion fill 1 and 3. Their
        // Gram defects are bounded by the condition gap, hence by tol.
        const Eigen::MatrixXcd packed =
            complete_to_unitary(cols, 4, std::max(1e-9, 4.0 * tol));
        Eigen::Matrix4cd gate;
        gate.col(0) = packed.col(0);
        gate.col(2) = packed.col(1);
        gate.col(1) = packed.col(2);
        gate.col(3) = packed.col(3);
        return gate;
    };

    report.ancilla_basis = basis;
    report.p = p;
    report.u = gate_from_branch(branch_u);
    report.v_op = gate_from_branch(branch_v);

    const Eigen::VectorXcd rebuilt = std::sqrt(p) * tensor(branch_u, basis.ket(0)) +
                                     std::sqrt(q) * tensor(branch_v, basis.ket(1));
    report.residual = (rebuilt - psi).cwiseAbs().maxCoeff();
    return report;
}

double verify_decomposition(const CloningAmplitudes& a,
                            const ReducibilityReport& report,
                            double unitary_tol) {
    if (!report.reducible || !report.u || !report.v_op || !report.p ||
        !report.ancilla_basis)
        throw std::invalid_argument("report carries no decomposition");
    if (!is_unitary(*report.u, unitary_tol) || !is_unitary(*report.v_op, unitary_tol))
        throw std::domain_error("report gates are not unitary");

    const double p = *report.p;
    const Eigen::VectorXcd rhs =
        std::sqrt(p) * tensor(branch_state(*report.u), report.ancilla_basis->ket(0)) +
        std::sqrt(1.0 - p) *
            tensor(branch_state(*report.v_op), report.ancilla_basis->ket(1));
    return (rhs - cerf_state(a).psi).cwiseAbs().maxCoeff();
}

AncillaStatistics ancilla_statistics(const Eigen::VectorXcd& state,
                                     const QubitBasis& basis, int alice_outcome) {
    if (state.size() != 16)
        throw std::invalid_argument("ancilla statistics need a 4-wire state");
    if (alice_outcome != 0 && alice_outcome != 1)
        throw std::invalid_argument("Alice's outcome must be a bit");

    const Eigen::VectorXd probs =
        product_basis_probabilities(state, std::vector<QubitBasis>(4, basis));

    AncillaStatistics stats;
    stats.table.setZero();
    for (int idx = 0; idx < 16; ++idx) {
        if (((idx >> 3) & 1) != alice_outcome) continue;
        stats.alice_probability += probs(idx);
        stats.table((idx >> 1) & 1, idx & 1) += probs(idx);
    }
    if (stats.alice_probability < kVanishingProbability)
        throw std::domain_error("Alice's outcome has vanishing probability");
    stats.table /= stats.alice_probability;
    stats.ratio_equal = stats.table(0, 0) / stats.table(0, 1);
    stats.ratio_flipped = stats.table(1, 1) / stats.table(1, 0);
    return stats;
}

bool drop_ancilla_test(const CloningAmplitudes& a, const QubitBasis& basis,
                       double rel_tol) {
    const AncillaStatistics s = ancilla_statistics(cerf_state(a).psi, basis, 0);
    // ratio_equal = ratio_flipped in cross-product form; 0/0 and inf/inf
    // compare equal, finite-vs-infinite does not.
    const double lhs = s.table(0, 0) * s.table(1, 0);
    const double rhs = s.table(1, 1) * s.table(0, 1);
    return std::abs(lhs - rhs) <= rel_tol * std::max(lhs, rhs);
}

double necessity_probe(const CloningAmplitudes& a, int theta_samples,
                       int phi_samples) {
    if (theta_samples < 2 || phi_samples < 1)
        throw std::invalid_argument("probe grid too small");
    const Eigen::VectorXcd psi = cerf_state(a).psi;

    // For a fixed ancilla basis the best unitary-constrained reduction has a
    // closed form: with M_r the 4x2 matrix of A-blocks of branch r, the
    // minimal squared deviation is 2 - sqrt(2) sqrt(N_0^2 + N_1^2) where
    // N_r is the nuclear norm of M_r.
    auto nuclear_norm_sq = [](const Eigen::MatrixXcd& m) {
        const Eigen::Matrix2cd gram = m.adjoint() * m;
        const double tr = gram.real().trace();
        const double det = std::max(0.0, gram.determinant().real());
        return tr + 2.0 * std::sqrt(det);
    };

    double best_sq = std::numeric_limits<double>::infinity();
    for (int j = 0; j < theta_samples; ++j) {
        const double theta = M_PI * j / (theta_samples - 1);
        for (int k = 0; k < phi_samples; ++k) {
            const double phi = 2.0 * M_PI * k / phi_samples;
            const cplx e = std::exp(kImag * phi);
            const cplx c = std::cos(theta / 2.0);
            const cplx s = std::sin(theta / 2.0);
            Eigen::MatrixXcd m0 = Eigen::MatrixXcd::Zero(4, 2);
            Eigen::MatrixXcd m1 = Eigen::MatrixXcd::Zero(4, 2);
            for (int alice = 0; alice < 2; ++alice)
                for (int be = 0; be < 4; ++be) {
                    const cplx amp0 = psi(8 * alice + 2 * be);
                    const cplx amp1 = psi(8 * alice + 2 * be + 1);
                    // <tilde 0|, <tilde 1| acting on the ancilla wire.
                    m0(be, alice) = std::conj(c) * amp0 + std::conj(e * s) * amp1;
                    m1(be, alice) = std::conj(s) * amp0 - std::conj(e * c) * amp1;
                }
            const double val =
                2.0 - std::sqrt(2.0) *
                          std::sqrt(nuclear_norm_sq(m0) + nuclear_norm_sq(m1));
            best_sq = std::min(best_sq, val);
        }
    }
    return std::sqrt(std::max(0.0, best_sq));
}

}  // namespace clonekit
