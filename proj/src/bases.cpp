#include "clonekit/bases.hpp"

#include <cmath>
#include <stdexcept>

namespace clonekit {

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

QubitBasis QubitBasis::z() {
    QubitBasis b;
    b.u = Eigen::Matrix2cd::Identity();
    b.label = "z";
    return b;
}

QubitBasis QubitBasis::x() {
    QubitBasis b;
    b.u << kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2;
    b.label = "x";
    return b;
}

QubitBasis QubitBasis::y() {
    QubitBasis b;
    b.u << cplx{kInvSqrt2, 0.0}, cplx{kInvSqrt2, 0.0},
        cplx{0.0, kInvSqrt2}, cplx{0.0, -kInvSqrt2};
    b.label = "y";
    return b;
}

QubitBasis QubitBasis::zprime() {
    QubitBasis b;
    b.u << cplx{1.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 0.0}, cplx{0.0, 1.0};
    b.label = "zprime";
    return b;
}

QubitBasis QubitBasis::equatorial(double phi) {
    QubitBasis b;
    const cplx phase = std::exp(kImag * phi);
    b.u << cplx{kInvSqrt2, 0.0}, cplx{kInvSqrt2, 0.0},
        kInvSqrt2 * phase, -kInvSqrt2 * phase;
    b.label = "phi:" + std::to_string(phi);
    return b;
}

QubitBasis QubitBasis::custom(const Eigen::Matrix2cd& u, std::string label) {
    if (!is_unitary(u, kExactTol))
        throw std::invalid_argument("basis matrix is not unitary");
    QubitBasis b;
    b.u = u;
    b.label = std::move(label);
    return b;
}

QubitBasis conjugate_basis(const QubitBasis& b) {
    QubitBasis c;
    c.u = b.u.conjugate();
    c.label = b.label + "*";
    return c;
}

Eigen::VectorXcd bell_state(int m, int n, const QubitBasis& basis) {
    return generalized_bell({m, n, BellSide::plain}, basis);
}

Eigen::VectorXcd generalized_bell(const BellLabel& label, const QubitBasis& basis) {
    if ((label.m & ~1) || (label.n & ~1))
        throw std::invalid_argument("Bell indices must be bits");
    const Eigen::Matrix2cd conj = basis.u.conjugate();
    const Eigen::Matrix2cd& plain = basis.u;

    const Eigen::Matrix2cd& first =
        label.side == BellSide::conj_first ? conj : plain;
    const Eigen::Matrix2cd& second =
        label.side == BellSide::conj_second ? conj : plain;

    Eigen::VectorXcd state = Eigen::VectorXcd::Zero(4);
    for (int k = 0; k < 2; ++k) {
        const double sign = (k & label.n) ? -1.0 : 1.0;
        state += sign * kInvSqrt2 *
                 tensor(first.col(k), second.col((k + label.m) & 1));
    }
    return state;
}

Eigen::Matrix4cd bell_overlap_table(const QubitBasis& b1, const QubitBasis& b2) {
    Eigen::Matrix4cd table;
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) {
            const Eigen::VectorXcd row = generalized_bell({m, n, BellSide::conj_first}, b1);
            for (int mp = 0; mp < 2; ++mp)
                for (int np = 0; np < 2; ++np) {
                    const Eigen::VectorXcd col =
                        generalized_bell({mp, np, BellSide::conj_first}, b2);
                    table(2 * m + n, 2 * mp + np) = row.dot(col);
                }
        }
    return table;
}

Eigen::VectorXcd bell_pair(int m, int n, const QubitBasis& basis) {
    return tensor(generalized_bell({m, n, BellSide::conj_first}, basis),
                  generalized_bell({m, n, BellSide::conj_second}, basis));
}

Eigen::Matrix2cd bell_coefficients(const Eigen::VectorXcd& state,
                                   const QubitBasis& basis) {
    if (state.size() != 16)
        throw std::invalid_argument("bell_coefficients expects a 4-wire state");
    Eigen::Matrix2cd c;
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) c(m, n) = bell_pair(m, n, basis).dot(state);
    return c;
}

Eigen::VectorXd product_basis_probabilities(const Eigen::VectorXcd& state,
                                            const std::vector<QubitBasis>& bases) {
    std::vector<Eigen::Matrix2cd> mats;
    mats.reserve(bases.size());
    for (const auto& b : bases) mats.push_back(b.u);
    return product_basis_probabilities(state, std::span<const Eigen::Matrix2cd>(mats));
}

Eigen::Matrix2cd pauli_x() {
    Eigen::Matrix2cd s;
    s << 0, 1, 1, 0;
    return s;
}

Eigen::Matrix2cd pauli_y() {
    Eigen::Matrix2cd s;
    s << cplx{0, 0}, cplx{0, -1}, cplx{0, 1}, cplx{0, 0};
    return s;
}

Eigen::Matrix2cd pauli_z() {
    Eigen::Matrix2cd s;
    s << 1, 0, 0, -1;
    return s;
}

}  // namespace clonekit
