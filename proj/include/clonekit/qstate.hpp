#pragma once

#include <span>
#include <utility>
#include <vector>

#include "clonekit/types.hpp"

// Exact small-register linear algebra on complex amplitude vectors.
//
// Conventions used throughout:
//   * an n-wire register is an Eigen::VectorXcd of dimension 2^n,
//   * wire 0 is the leftmost ket symbol and owns the most significant bit
//     of the amplitude index (|abem> lives at index 8a + 4b + 2e + m),
//   * all functions are pure; inputs are never mutated.

namespace clonekit {

// Number of wires of a register of dimension `dim`; throws unless dim = 2^n.
int wire_count(Eigen::Index dim);

// True when the squared magnitudes sum to 1 within tol.
bool is_normalized(const Eigen::VectorXcd& state, double tol = kExactTol);

// Kronecker product a (x) b, a's wires becoming the most significant ones.
Eigen::VectorXcd tensor(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b);

// Applies `op` (dimension 2^k) to the listed wires of `state`; the first
// listed wire is the most significant index of `op`.
Eigen::VectorXcd apply_on_wires(const Eigen::MatrixXcd& op,
                                std::span<const int> wires,
                                const Eigen::VectorXcd& state);
Eigen::VectorXcd apply_on_wire(const Eigen::Matrix2cd& op, int wire,
                               const Eigen::VectorXcd& state);

// |state><state|.
Eigen::MatrixXcd outer(const Eigen::VectorXcd& state);

// Traces a density matrix on `total_wires` wires down to the wires in
// `keep` (kept in the order given, first entry most significant).
Eigen::MatrixXcd partial_trace(const Eigen::MatrixXcd& rho,
                               std::span<const int> keep, int total_wires);

// Hermitian within tol, unit trace within tol, eigenvalues >= -eval_floor.
bool is_density_matrix(const Eigen::MatrixXcd& rho, double tol = kExactTol,
                       double eval_floor = 1e-10);

// Projects one wire of a normalized state onto <bra| and renormalizes the
// remaining wires. Returns the post-projection state and the outcome
// probability. Throws when the outcome probability is below
// kVanishingProbability (impossible outcome, post-state undefined).
std::pair<Eigen::VectorXcd, double> project_wire(const Eigen::VectorXcd& state,
                                                 int wire,
                                                 const Eigen::VectorXcd& bra);

// max-norm of (op^dagger op - 1) <= tol.
bool is_unitary(const Eigen::MatrixXcd& op, double tol = kNumericTol);

// Extends mutually orthonormal columns to a full unitary. The completion is
// deterministic: canonical basis vectors are orthogonalized in index order
// and accepted when their residual survives. Throws when the given columns
// are not orthonormal within ortho_tol.
Eigen::MatrixXcd complete_to_unitary(const std::vector<Eigen::VectorXcd>& columns,
                                     int dim, double ortho_tol = kNumericTol);

// |<a|b>| >= 1 - tol for normalized inputs.
bool equal_up_to_global_phase(const Eigen::VectorXcd& a,
                              const Eigen::VectorXcd& b,
                              double tol = kNumericTol);

// Probability table of measuring every wire in its own single-qubit basis
// (columns of wire_bases[w] are that wire's outcome kets). Entry order
// matches amplitude order: outcome (i_0 ... i_{n-1}) sits at index
// sum_w i_w 2^(n-1-w).
Eigen::VectorXd product_basis_probabilities(
    const Eigen::VectorXcd& state, std::span<const Eigen::Matrix2cd> wire_bases);

}  // namespace clonekit
