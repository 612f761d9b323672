#pragma once

#include <string>
#include <vector>

#include "clonekit/qstate.hpp"
#include "clonekit/types.hpp"

// Single-qubit bases with fixed phase conventions, ordinary and generalized
// Bell states, and the in-product tables between generalized Bell families.

namespace clonekit {

// A qubit basis: the columns of `u` are the basis kets |psi_0>, |psi_1>.
// The named constructors freeze the phase conventions everything downstream
// depends on:
//   x():          |+->^X = (|0> +- |1>)/sqrt(2)
//   y():          |+->^Y = (|0> +- i|1>)/sqrt(2)
//   zprime():     |0>' = |0>,  |1>' = i|1>
//   equatorial(phi): |+->^phi = (|0> +- e^{i phi}|1>)/sqrt(2)
struct QubitBasis {
    Eigen::Matrix2cd u;
    std::string label;

    static QubitBasis z();
    static QubitBasis x();
    static QubitBasis y();
    static QubitBasis zprime();
    static QubitBasis equatorial(double phi);
    // Any unitary; throws unless unitary within kExactTol.
    static QubitBasis custom(const Eigen::Matrix2cd& u, std::string label = "custom");

    Eigen::Vector2cd ket(int i) const { return u.col(i); }
};

// Which wire of a generalized Bell pair carries the conjugated basis.
enum class BellSide {
    plain,       // no conjugation (ordinary Bell state in the given basis)
    conj_first,  // |B_{m*,n}>: conjugate basis on the first wire (A of A,B)
    conj_second  // |B_{m,n*}>: conjugate basis on the second wire (M of E,M)
};

struct BellLabel {
    int m = 0;
    int n = 0;
    BellSide side = BellSide::plain;
};

// Entrywise complex conjugate of the basis kets: <i|psi*_j> = conj(<i|psi_j>).
QubitBasis conjugate_basis(const QubitBasis& b);

// Ordinary Bell state (1/sqrt 2) sum_k (-1)^{kn} |k>|k+m> built from the kets
// of `basis` on both wires.
Eigen::VectorXcd bell_state(int m, int n, const QubitBasis& basis = QubitBasis::z());

// Generalized Bell state with the requested star placement:
//   conj_first:  (1/sqrt 2) sum_k (-1)^{kn} |psi*_k> (x) |psi_{k+m}>
//   conj_second: (1/sqrt 2) sum_k (-1)^{kn} |psi_k>  (x) |psi*_{k+m}>
//   plain:       ordinary bell_state in `basis`
Eigen::VectorXcd generalized_bell(const BellLabel& label, const QubitBasis& basis);

// 4x4 table of in-products <B^{b1}_{m*,n} | B^{b2}_{m'*,n'}> between the
// first-wire-conjugated families; rows indexed 2m+n, columns 2m'+n'.
// Both families are orthonormal bases of C^4, so the table is unitary.
Eigen::Matrix4cd bell_overlap_table(const QubitBasis& b1, const QubitBasis& b2);

// Coefficients c_{m,n} = <B^{psi}_{m*,n}|_{AB} <B^{psi}_{m,n*}|_{EM} |state>
// of a 4-wire state on A,B,E,M. If the state satisfies the biorthogonal
// ansatz in this basis, sum |c|^2 = 1.
Eigen::Matrix2cd bell_coefficients(const Eigen::VectorXcd& state,
                                   const QubitBasis& basis);

// The 16-dim basis element |B^{psi}_{m*,n}>_{AB} (x) |B^{psi}_{m,n*}>_{EM}.
Eigen::VectorXcd bell_pair(int m, int n, const QubitBasis& basis);

// Convenience overload measuring every wire of `state` in the given bases.
Eigen::VectorXd product_basis_probabilities(const Eigen::VectorXcd& state,
                                            const std::vector<QubitBasis>& bases);

// Pauli matrices in the computational basis.
Eigen::Matrix2cd pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2cd pauli_z();

}  // namespace clonekit
