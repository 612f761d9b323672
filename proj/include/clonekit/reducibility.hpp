#pragma once

#include <optional>

#include "clonekit/cloners.hpp"

// Decides and constructs the reduction of a three-qubit biorthogonal cloner
// to a probabilistic mixture of two ancilla-free two-qubit cloners, plus the
// ancilla-conditioning statistics that motivate dropping the ancilla.

namespace clonekit {

// The three product conditions of the reduction theorem, tested on the
// reference-basis amplitude matrix.
struct ReductionConditions {
    bool i = false;    // a00 a01 = a10 a11  (ancilla basis Z)
    bool ii = false;   // a00 a10 = a01 a11  (ancilla basis X)
    bool iii = false;  // a00 a11 = a01 a10  (ancilla basis Y)

    bool any() const { return i || ii || iii; }
};

ReductionConditions check_conditions(const CloningAmplitudes& a,
                                     double tol = kNumericTol);

struct ReducibilityReport {
    ReductionConditions conditions;
    bool reducible = false;
    // Constructive witness, present iff reducible: the ancilla basis named
    // by the theorem (first satisfied condition in order i, ii, iii), the
    // branch weight, and the two-qubit gates prescribed on |00> and |10>
    // and completed deterministically elsewhere.
    std::optional<QubitBasis> ancilla_basis;
    std::optional<double> p;
    std::optional<Eigen::Matrix4cd> u;
    std::optional<Eigen::Matrix4cd> v_op;
    // Worst componentwise deviation of the reassembled mixture from the
    // cloning state; NaN when not reducible.
    double residual = std::numeric_limits<double>::quiet_NaN();
};

// Builds the reduction when one of the conditions holds. The branch states
// are obtained by projecting the ancilla wire onto the theorem's basis and
// the gate columns are read off them, which reproduces the proof's column
// formulas while sidestepping its r -> infinity limits.
ReducibilityReport decompose(const CloningAmplitudes& a, double tol = kNumericTol);

// Rebuilds both branches from the report's gates and returns the worst
// componentwise deviation of the reassembled state from the cloner.
// Throws when the report's gates are not unitary within unitary_tol.
double verify_decomposition(const CloningAmplitudes& a,
                            const ReducibilityReport& report,
                            double unitary_tol = kNumericTol);

// Eavesdropper statistics: the clone/ancilla outcome table conditioned on
// Alice's result when all four wires are measured in one basis.
struct AncillaStatistics {
    // table(e, m) = P(E = e, M = m | A = alice_outcome); rows are Eve's
    // outcome, columns the ancilla's, index 0 = first basis ket.
    Eigen::Matrix2d table;
    double alice_probability = 0.0;
    double ratio_equal = 0.0;    // P(+,+) / P(+,-)
    double ratio_flipped = 0.0;  // P(-,-) / P(-,+)
};

AncillaStatistics ancilla_statistics(const Eigen::VectorXcd& state,
                                     const QubitBasis& basis, int alice_outcome);

// The ancilla can be dropped without losing information when conditioning
// Eve's outcomes on (in)equality with the ancilla changes nothing:
// ratio_equal = ratio_flipped, compared in cross-product form so infinite
// ratios are handled exactly.
bool drop_ancilla_test(const CloningAmplitudes& a, const QubitBasis& basis,
                       double rel_tol = 1e-8);

// Heuristic evidence for the necessity direction: least-squares search for
// the best unitary-constrained two-branch reduction over an ancilla-basis
// grid. Returns the smallest L2 deviation found; it cannot certify
// non-reducibility, only bound what a reduction could achieve on the grid.
double necessity_probe(const CloningAmplitudes& a, int theta_samples = 64,
                       int phi_samples = 64);

}  // namespace clonekit
