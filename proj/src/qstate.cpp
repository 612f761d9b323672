#include "clonekit/qstate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace clonekit {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

}  // namespace

int wire_count(Eigen::Index dim) {
    require(dim >= 1, "register dimension must be positive");
    int n = 0;
    Eigen::Index d = dim;
    while (d > 1) {
        require(d % 2 == 0, "register dimension must be a power of two");
        d /= 2;
        ++n;
    }
    return n;
}

bool is_normalized(const Eigen::VectorXcd& state, double tol) {
    return std::abs(state.squaredNorm() - 1.0) <= tol;
}

Eigen::VectorXcd tensor(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
    const int wires = wire_count(a.size()) + wire_count(b.size());
    if (wires > kMaxWires) throw std::length_error("register too large");
    Eigen::VectorXcd out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a(i) * b;
    return out;
}

Eigen::VectorXcd apply_on_wires(const Eigen::MatrixXcd& op,
                                std::span<const int> wires,
                                const Eigen::VectorXcd& state) {
    const int n = wire_count(state.size());
    const int k = static_cast<int>(wires.size());
    require(op.rows() == op.cols() && op.rows() == (Eigen::Index{1} << k),
            "operator dimension does not match wire count");
    for (int w : wires) require(w >= 0 && w < n, "wire index out of range");

    // Bit of the amplitude index owned by wire w (wire 0 most significant).
    auto bit = [&](int w) { return n - 1 - w; };

    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(state.size());
    const Eigen::Index sub = Eigen::Index{1} << k;
    for (Eigen::Index idx = 0; idx < state.size(); ++idx) {
        // Row of `op` selected by this amplitude's bits on the target wires.
        Eigen::Index row = 0;
        for (int j = 0; j < k; ++j)
            row |= ((idx >> bit(wires[j])) & 1) << (k - 1 - j);
        for (Eigen::Index col = 0; col < sub; ++col) {
            Eigen::Index src = idx;
            for (int j = 0; j < k; ++j) {
                const Eigen::Index b = bit(wires[j]);
                src &= ~(Eigen::Index{1} << b);
                src |= ((col >> (k - 1 - j)) & 1) << b;
            }
            out(idx) += op(row, col) * state(src);
        }
    }
    return out;
}

Eigen::VectorXcd apply_on_wire(const Eigen::Matrix2cd& op, int wire,
                               const Eigen::VectorXcd& state) {
    const int w[] = {wire};
    return apply_on_wires(op, w, state);
}

Eigen::MatrixXcd outer(const Eigen::VectorXcd& state) {
    return state * state.adjoint();
}

Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho,
                               std::span<const int> keep, int total_wires) {
    require(rho.rows() == rho.cols(), "density matrix must be square");
    require(rho.rows() == (Eigen::Index{1} << total_wires),
            "density matrix dimension does not match wire count");
    require(!keep.empty(), "keep set must be nonempty");
    for (int w : keep) require(w >= 0 && w < total_wires, "keep wire out of range");

    const int k = static_cast<int>(keep.size());
    std::vector<int> traced;
    for (int w = 0; w < total_wires; ++w) {
        bool kept = false;
        for (int kw : keep) kept |= (kw == w);
        if (!kept) traced.push_back(w);
    }

    auto bit = [&](int w) { return total_wires - 1 - w; };
    auto embed = [&](Eigen::Index kept_idx, Eigen::Index traced_idx) {
        Eigen::Index idx = 0;
        for (int j = 0; j < k; ++j)
            idx |= ((kept_idx >> (k - 1 - j)) & 1) << bit(keep[j]);
        for (size_t j = 0; j < traced.size(); ++j)
            idx |= ((traced_idx >> (traced.size() - 1 - j)) & 1) << bit(traced[j]);
        return idx;
    };

    const Eigen::Index out_dim = Eigen::Index{1} << k;
    const Eigen::Index env_dim = Eigen::Index{1} << traced.size();
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(out_dim, out_dim);
    for (Eigen::Index r = 0; r < out_dim; ++r)
        for (Eigen::Index c = 0; c < out_dim; ++c)
            for (Eigen::Index e = 0; e < env_dim; ++e)
                out(r, c) += rho(embed(r, e), embed(c, e));
    return out;
}

bool is_density_matrix(const Eigen::MatrixXcd& rho, double tol, double eval_floor) {
    if (rho.rows() != rho.cols()) return false;
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(rho.trace() - cplx{1.0, 0.0}) > tol) return false;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
    return es.eigenvalues().minCoeff() >= -eval_floor;
}

std::pair<Eigen::VectorXcd, double> project_wire(const Eigen::VectorXcd& state,
                                                 int wire,
                                                 const Eigen::VectorXcd& bra) {
    const int n = wire_count(state.size());
    require(bra.size() == 2, "projection bra must be a single-qubit state");
    require(wire >= 0 && wire < n, "wire index out of range");

    const Eigen::Index rest_dim = state.size() / 2;
    const int b = n - 1 - wire;
    Eigen::VectorXcd rest = Eigen::VectorXcd::Zero(rest_dim);
    for (Eigen::Index r = 0; r < rest_dim; ++r) {
        const Eigen::Index low = r & ((Eigen::Index{1} << b) - 1);
        const Eigen::Index high = (r >> b) << (b + 1);
        for (int v = 0; v < 2; ++v)
            rest(r) += std::conj(bra(v)) * state(high | (Eigen::Index{v} << b) | low);
    }
    const double prob = rest.squaredNorm();
    if (prob < kVanishingProbability)
        throw std::domain_error("projection outcome has vanishing probability");
    rest /= std::sqrt(prob);
    return {rest, prob};
}

bool is_unitary(const Eigen::MatrixXcd& op, double tol) {
    require(op.rows() == op.cols(), "unitarity check needs a square matrix");
    const Eigen::MatrixXcd gram = op.adjoint() * op;
    return (gram - Eigen::MatrixXcd::Identity(op.rows(), op.cols()))
               .cwiseAbs()
               .maxCoeff() <= tol;
}

Eigen::MatrixXcd complete_to_unitary(const std::vector<Eigen::VectorXcd>& columns,
                                     int dim, double ortho_tol) {
    require(dim >= 1 && static_cast<int>(columns.size()) <= dim,
            "too many columns for requested dimension");
    for (const auto& c : columns) {
        require(c.size() == dim, "column dimension mismatch");
    }
    for (size_t i = 0; i < columns.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            const cplx g = columns[j].dot(columns[i]);
            const cplx want = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (std::abs(g - want) > ortho_tol)
                throw std::invalid_argument("columns are not orthonormal");
        }

    Eigen::MatrixXcd u(dim, dim);
    int filled = 0;
    for (const auto& c : columns) u.col(filled++) = c;

    // Deterministic completion: sweep canonical basis vectors in index order,
    // re-orthogonalize twice, accept survivors.
    for (int cand = 0; cand < dim && filled < dim; ++cand) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        v(cand) = 1.0;
        for (int pass = 0; pass < 2; ++pass)
            for (int j = 0; j < filled; ++j) v -= u.col(j).dot(v) * u.col(j);
        const double norm = v.norm();
        if (norm > 1e-6) u.col(filled++) = v / norm;
    }
    if (filled < dim) throw std::runtime_error("orthonormal completion failed");
    return u;
}

bool equal_up_to_global_phase(const Eigen::VectorXcd& a,
                              const Eigen::VectorXcd& b, double tol) {
    require(a.size() == b.size(), "dimension mismatch");
    return std::abs(a.dot(b)) >= 1.0 - tol;
}

Eigen::VectorXd product_basis_probabilities(
    const Eigen::VectorXcd& state, std::span<const Eigen::Matrix2cd> wire_bases) {
    const int n = wire_count(state.size());
    require(static_cast<int>(wire_bases.size()) == n,
            "need exactly one basis per wire");
    // <psi_{i_0} ... psi_{i_{n-1}} | state> for all outcomes at once: rotate
    // every wire by the adjoint of its basis.
    Eigen::VectorXcd rotated = state;
    for (int w = 0; w < n; ++w)
        rotated = apply_on_wire(wire_bases[w].adjoint(), w, rotated);
    return rotated.cwiseAbs2();
}

}  // namespace clonekit
