#include "clonekit/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace clonekit {

namespace {

int clone_wire(Clone clone) { return clone == Clone::bob ? 1 : 2; }

}  // namespace

double clone_fidelity(const Eigen::VectorXcd& state, const QubitBasis& basis,
                      Clone clone) {
    const int wires = wire_count(state.size());
    if (wires != 3 && wires != 4)
        throw std::invalid_argument("clone fidelity expects a 3- or 4-wire state");

    std::vector<QubitBasis> per_wire(wires, basis);
    per_wire[0] = conjugate_basis(basis);
    const Eigen::VectorXd probs = product_basis_probabilities(state, per_wire);

    const int a_bit = wires - 1;
    const int c_bit = wires - 1 - clone_wire(clone);
    double hit = 0.0;
    double alice = 0.0;
    for (int idx = 0; idx < probs.size(); ++idx) {
        alice += probs(idx);
        if (((idx >> a_bit) & 1) == ((idx >> c_bit) & 1)) hit += probs(idx);
    }
    return hit / alice;
}

double clone_fidelity(const CloningState& state, const QubitBasis& basis,
                      Clone clone) {
    return clone_fidelity(state.psi, basis, clone);
}

double clone_fidelity(const TwoQubitCloneState& state, const QubitBasis& basis,
                      Clone clone) {
    return clone_fidelity(state.psi, basis, clone);
}

double prepare_and_send_fidelity(const Eigen::VectorXcd& state,
                                 const QubitBasis& basis, Clone clone) {
    const int wires = wire_count(state.size());
    if (wires != 3 && wires != 4)
        throw std::invalid_argument("clone fidelity expects a 3- or 4-wire state");
    const QubitBasis conj = conjugate_basis(basis);

    double fidelity = 0.0;
    for (int i = 0; i < 2; ++i) {
        const auto [rest, prob] = project_wire(state, 0, conj.ket(i));
        const int keep[] = {clone_wire(clone) - 1};
        const Eigen::MatrixXcd rho = partial_trace(outer(rest), keep, wires - 1);
        const Eigen::Vector2cd target = basis.ket(i);
        fidelity += prob * (target.adjoint() * rho * target)(0).real();
    }
    return fidelity;
}

FidelityReport fidelity_report(const Eigen::VectorXcd& state,
                               const std::vector<QubitBasis>& bases,
                               int equator_samples) {
    FidelityReport report;
    for (const auto& b : bases) {
        FidelityReport::Entry entry;
        entry.basis = b.label;
        entry.f_bob = clone_fidelity(state, b, Clone::bob);
        entry.f_eve = clone_fidelity(state, b, Clone::eve);
        entry.e_bob = 1.0 - entry.f_bob;
        entry.e_eve = 1.0 - entry.f_eve;
        report.per_basis.push_back(entry);
    }

    report.equator_min = std::numeric_limits<double>::infinity();
    report.equator_max = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < equator_samples; ++k) {
        const double phi = 2.0 * M_PI * k / equator_samples;
        const double f =
            clone_fidelity(state, QubitBasis::equatorial(phi), Clone::bob);
        report.equator_min = std::min(report.equator_min, f);
        report.equator_max = std::max(report.equator_max, f);
    }
    return report;
}

PhaseCovariantOptimum optimize_symmetric_phase_covariant(double tolerance) {
    if (tolerance <= 0.0) throw std::invalid_argument("tolerance must be positive");
    constexpr int kIterationCap = 200;
    const QubitBasis x_basis = QubitBasis::x();

    auto f_bob = [&](double alpha) {
        return clone_fidelity(ng_state(alpha).psi, x_basis, Clone::bob);
    };
    auto f_eve = [&](double alpha) {
        return clone_fidelity(ng_state(alpha).psi, x_basis, Clone::eve);
    };

    int iterations = 0;

    // Golden-section maximization of min(F_bob, F_eve) on [0, pi/2]; the
    // objective is unimodal because the two fidelities cross once.
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double lo = 0.0, hi = M_PI / 2.0;
    double m1 = hi - gr * (hi - lo);
    double m2 = lo + gr * (hi - lo);
    auto objective = [&](double alpha) { return std::min(f_bob(alpha), f_eve(alpha)); };
    double v1 = objective(m1);
    double v2 = objective(m2);
    while (hi - lo > tolerance) {
        if (++iterations > kIterationCap)
            throw std::runtime_error("golden-section search did not converge");
        if (v1 < v2) {
            lo = m1;
            m1 = m2;
            v1 = v2;
            m2 = lo + gr * (hi - lo);
            v2 = objective(m2);
        } else {
            hi = m2;
            m2 = m1;
            v2 = v1;
            m1 = hi - gr * (hi - lo);
            v1 = objective(m1);
        }
    }

    // Refine the symmetry point: F_bob - F_eve decreases through zero.
    double blo = 0.0, bhi = M_PI / 2.0;
    while (bhi - blo > tolerance) {
        if (++iterations > kIterationCap)
            throw std::runtime_error("symmetry bisection did not converge");
        const double mid = 0.5 * (blo + bhi);
        if (f_bob(mid) - f_eve(mid) > 0.0)
            blo = mid;
        else
            bhi = mid;
    }
    const double alpha = 0.5 * (blo + bhi);

    PhaseCovariantOptimum opt;
    opt.alpha = alpha;
    opt.v = 0.5 * (1.0 + std::cos(alpha));
    opt.y = 0.5 * (1.0 - std::cos(alpha));
    opt.x = 0.5 * std::sin(alpha);
    opt.fidelity = f_bob(alpha);
    opt.symmetry_residual = std::abs(f_bob(alpha) - f_eve(alpha));
    opt.iterations = iterations;
    return opt;
}

QubitBasis bloch_basis(double theta, double phi) {
    const cplx phase = std::exp(kImag * phi);
    Eigen::Matrix2cd u;
    u << std::cos(theta / 2.0), std::sin(theta / 2.0),
        phase * std::sin(theta / 2.0), -phase * std::cos(theta / 2.0);
    return QubitBasis::custom(u, "bloch(" + std::to_string(theta) + "," +
                                     std::to_string(phi) + ")");
}

AttackReport six_state_mixture_report() {
    const CloningAmplitudes opt = fggnp_amplitudes(kOptimalV, kOptimalY, kOptimalX);
    const std::vector<std::pair<std::string, QubitBasis>> axes = {
        {"z", QubitBasis::z()}, {"x", QubitBasis::x()}, {"y", QubitBasis::y()}};

    std::vector<Eigen::VectorXcd> components;
    AttackReport report;
    for (const auto& [name, basis] : axes) {
        components.push_back(cerf_state(opt, basis).psi);
        report.components.push_back(
            {1.0 / 3.0, "optimal phase-covariant cloner, pole axis " + name});
    }

    auto mixture_fidelity = [&](const QubitBasis& basis) {
        double f = 0.0;
        for (const auto& c : components)
            f += clone_fidelity(c, basis, Clone::bob) / 3.0;
        return f;
    };

    report.fidelity_min = std::numeric_limits<double>::infinity();
    report.fidelity_max = -std::numeric_limits<double>::infinity();
    auto record = [&](double f) {
        report.fidelity_min = std::min(report.fidelity_min, f);
        report.fidelity_max = std::max(report.fidelity_max, f);
    };

    for (const auto& [name, basis] : {std::pair{std::string("x"), QubitBasis::x()},
                                      {std::string("y"), QubitBasis::y()},
                                      {std::string("z"), QubitBasis::z()}}) {
        const double f = mixture_fidelity(basis);
        report.fidelity_by_basis.emplace_back(name, f);
        record(f);
    }

    // Off-axis sample: midpoints between axes, a body diagonal, and a few
    // generic directions.
    const double diag = std::acos(1.0 / std::sqrt(3.0));
    const std::vector<std::pair<double, double>> directions = {
        {M_PI / 2.0, M_PI / 4.0},  // between X and Y
        {M_PI / 4.0, 0.0},         // between Z and X
        {M_PI / 4.0, M_PI / 2.0},  // between Z and Y
        {diag, M_PI / 4.0},        // body diagonal
        {1.0, 0.7},
        {2.1, 3.9},
        {0.3, 5.1},
        {2.7, 1.3},
    };
    for (const auto& [theta, phi] : directions)
        record(mixture_fidelity(bloch_basis(theta, phi)));

    report.bloch_uniform = (report.fidelity_max - report.fidelity_min) <= 1e-9;
    return report;
}

}  // namespace clonekit
