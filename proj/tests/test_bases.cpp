#include <doctest.h>

#include "clonekit/bases.hpp"
#include "clonekit/cloners.hpp"
#include "test_helpers.hpp"

using namespace clonekit;
using namespace clonekit::testing;

namespace {

Eigen::VectorXcd gen_ab(int m, int n, const QubitBasis& b) {
    return generalized_bell({m, n, BellSide::conj_first}, b);
}

Eigen::VectorXcd gen_em(int m, int n, const QubitBasis& b) {
    return generalized_bell({m, n, BellSide::conj_second}, b);
}

}  // namespace

TEST_CASE("basis phase conventions are frozen") {
    const double s = 1.0 / std::sqrt(2.0);
    check_state_eq(QubitBasis::x().ket(0), s * (ket(0) + ket(1)));
    check_state_eq(QubitBasis::x().ket(1), s * (ket(0) - ket(1)));
    check_state_eq(QubitBasis::y().ket(0), s * (ket(0) + kImag * ket(1)));
    check_state_eq(QubitBasis::y().ket(1), s * (ket(0) - kImag * ket(1)));
    check_state_eq(QubitBasis::zprime().ket(0), ket(0));
    check_state_eq(QubitBasis::zprime().ket(1), kImag * ket(1));
    const double phi = 0.37;
    check_state_eq(QubitBasis::equatorial(phi).ket(0),
                   s * (ket(0) + std::exp(kImag * phi) * ket(1)));
    CHECK(max_diff(QubitBasis::equatorial(0.0).u, QubitBasis::x().u) <= 1e-15);
    CHECK(max_diff(QubitBasis::equatorial(M_PI / 2).u, QubitBasis::y().u) <= 1e-15);
}

TEST_CASE("custom bases must be unitary") {
    CHECK_THROWS_AS(QubitBasis::custom(Eigen::Matrix2cd::Ones()),
                    std::invalid_argument);
}

TEST_CASE("conjugate bases") {
    CHECK(max_diff(conjugate_basis(QubitBasis::z()).u, QubitBasis::z().u) == 0.0);
    CHECK(max_diff(conjugate_basis(QubitBasis::x()).u, QubitBasis::x().u) == 0.0);
    // |+*>^Y = |->^Y and vice versa.
    check_state_eq(conjugate_basis(QubitBasis::y()).ket(0), QubitBasis::y().ket(1));
    check_state_eq(conjugate_basis(QubitBasis::y()).ket(1), QubitBasis::y().ket(0));

    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const QubitBasis b = random_unitary_basis(rng);
        CHECK(max_diff(conjugate_basis(conjugate_basis(b)).u, b.u) == 0.0);
        CHECK(is_unitary(conjugate_basis(b).u, 1e-14));
    }
}

TEST_CASE("the four Bell states") {
    const double s = 1.0 / std::sqrt(2.0);
    check_state_eq(bell_state(0, 0),
                   s * (tensor(ket(0), ket(0)) + tensor(ket(1), ket(1))));
    check_state_eq(bell_state(0, 1),
                   s * (tensor(ket(0), ket(0)) - tensor(ket(1), ket(1))));
    check_state_eq(bell_state(1, 0),
                   s * (tensor(ket(0), ket(1)) + tensor(ket(1), ket(0))));
    check_state_eq(bell_state(1, 1),
                   s * (tensor(ket(0), ket(1)) - tensor(ket(1), ket(0))));
}

TEST_CASE("Bell states are generated from B00 by one-sided Paulis") {
    const Eigen::VectorXcd b00 = bell_state(0, 0);
    check_state_eq(apply_on_wire(pauli_x(), 1, b00), bell_state(1, 0));
    check_state_eq(apply_on_wire(pauli_y(), 1, b00), kImag * bell_state(1, 1));
    check_state_eq(apply_on_wire(pauli_z(), 1, b00), bell_state(0, 1));
}

TEST_CASE("spin-flip symmetry of Bell states with explicit signs") {
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n) {
            const Eigen::VectorXcd b = bell_state(m, n);
            const Eigen::VectorXcd zz =
                apply_on_wire(pauli_z(), 0, apply_on_wire(pauli_z(), 1, b));
            const Eigen::VectorXcd xx =
                apply_on_wire(pauli_x(), 0, apply_on_wire(pauli_x(), 1, b));
            check_state_eq(zz, (m ? -1.0 : 1.0) * b);
            check_state_eq(xx, (n ? -1.0 : 1.0) * b);
        }
}

TEST_CASE("ordinary Bell states in the primed basis") {
    const QubitBasis zp = QubitBasis::zprime();
    check_state_eq(bell_state(0, 0, zp), bell_state(0, 1));
    check_state_eq(bell_state(0, 1, zp), bell_state(0, 0));
    check_state_eq(bell_state(1, 0, zp), kImag * bell_state(1, 0));
    check_state_eq(bell_state(1, 1, zp), kImag * bell_state(1, 1));
    // Same identity through the plain-side generalized constructor.
    check_state_eq(generalized_bell({0, 0, BellSide::plain}, zp), bell_state(0, 1));
}

TEST_CASE("generalized Bell states reduce to ordinary ones in real bases") {
    for (const QubitBasis& b : {QubitBasis::z(), QubitBasis::x()})
        for (int m = 0; m < 2; ++m)
            for (int n = 0; n < 2; ++n) {
                check_state_eq(gen_ab(m, n, b), bell_state(m, n, b));
                check_state_eq(gen_em(m, n, b), bell_state(m, n, b));
            }
}

TEST_CASE("the conjugate-pair identity holds in every basis") {
    // (1/sqrt 2) sum_k |psi*_k>|psi_k> is B00 regardless of the basis.
    Rng rng(17);
    std::vector<QubitBasis> bases = {QubitBasis::z(), QubitBasis::x(),
                                     QubitBasis::y(), QubitBasis::zprime(),
                                     QubitBasis::equatorial(0.73)};
    for (int trial = 0; trial < 5; ++trial) bases.push_back(random_unitary_basis(rng));
    for (const auto& b : bases) {
        check_state_eq(gen_ab(0, 0, b), bell_state(0, 0));
        check_state_eq(gen_em(0, 0, b), bell_state(0, 0));
    }
}

TEST_CASE("the sixteen cross-basis Bell identities with their phases") {
    const QubitBasis z = QubitBasis::z();
    const QubitBasis x = QubitBasis::x();
    const QubitBasis y = QubitBasis::y();
    const cplx i = kImag;

    // row 1: B^Z_00 = B^X_00 = B^Y_{0*,0} = B^Y_{0,0*}
    check_state_eq(bell_state(0, 0, z), bell_state(0, 0, x));
    check_state_eq(bell_state(0, 0, z), gen_ab(0, 0, y));
    check_state_eq(bell_state(0, 0, z), gen_em(0, 0, y));
    // row 2: B^Z_01 = B^X_10 = B^Y_{1*,0} = B^Y_{1,0*}
    check_state_eq(bell_state(0, 1, z), bell_state(1, 0, x));
    check_state_eq(bell_state(0, 1, z), gen_ab(1, 0, y));
    check_state_eq(bell_state(0, 1, z), gen_em(1, 0, y));
    // row 3: B^Z_10 = B^X_01 = i B^Y_{1*,1} = -i B^Y_{1,1*}
    check_state_eq(bell_state(1, 0, z), bell_state(0, 1, x));
    check_state_eq(bell_state(1, 0, z), i * gen_ab(1, 1, y));
    check_state_eq(bell_state(1, 0, z), -i * gen_em(1, 1, y));
    // row 4: B^Z_11 = -B^X_11 = -i B^Y_{0*,1} = i B^Y_{0,1*}
    check_state_eq(bell_state(1, 1, z), -bell_state(1, 1, x));
    check_state_eq(bell_state(1, 1, z), -i * gen_ab(0, 1, y));
    check_state_eq(bell_state(1, 1, z), i * gen_em(0, 1, y));
    // and each family member equals itself (the remaining four identities)
    for (int m = 0; m < 2; ++m)
        for (int n = 0; n < 2; ++n)
            check_state_eq(bell_state(m, n, z), gen_ab(m, n, z));
}

TEST_CASE("equatorial decomposition of the Z Bell states") {
    for (const double phi : {0.3, 1.1, 4.0}) {
        const QubitBasis eq = QubitBasis::equatorial(phi);
        const cplx i = kImag;
        check_state_eq(bell_state(0, 0), gen_ab(0, 0, eq));
        check_state_eq(bell_state(0, 0), gen_em(0, 0, eq));
        check_state_eq(bell_state(0, 1), gen_ab(1, 0, eq));
        check_state_eq(bell_state(0, 1), gen_em(1, 0, eq));
        check_state_eq(bell_state(1, 0), std::cos(phi) * gen_ab(0, 1, eq) +
                                             i * std::sin(phi) * gen_ab(1, 1, eq));
        check_state_eq(bell_state(1, 1), -std::cos(phi) * gen_ab(1, 1, eq) -
                                             i * std::sin(phi) * gen_ab(0, 1, eq));
    }
}

TEST_CASE("generalized Bell families are orthonormal") {
    Rng rng(23);
    for (int trial = 0; trial < 12; ++trial) {
        const QubitBasis b =
            trial < 6 ? random_named_basis(rng) : random_unitary_basis(rng);
        for (const BellSide side : {BellSide::conj_first, BellSide::conj_second}) {
            Eigen::Matrix4cd gram;
            for (int u = 0; u < 4; ++u)
                for (int w = 0; w < 4; ++w)
                    gram(u, w) = generalized_bell({u >> 1, u & 1, side}, b)
                                     .dot(generalized_bell({w >> 1, w & 1, side}, b));
            CHECK(max_diff(gram, Eigen::Matrix4cd::Identity()) <= 1e-12);
        }
    }
}

TEST_CASE("overlap tables") {
    const QubitBasis z = QubitBasis::z();
    const QubitBasis x = QubitBasis::x();
    const QubitBasis y = QubitBasis::y();

    CHECK(max_diff(bell_overlap_table(z, z), Eigen::Matrix4cd::Identity()) <= 1e-14);

    SUBCASE("tables are unitary and the (0,0) row is always pinned") {
        Rng rng(29);
        for (int trial = 0; trial < 10; ++trial) {
            const QubitBasis b1 = random_unitary_basis(rng);
            const QubitBasis b2 = random_named_basis(rng);
            const Eigen::Matrix4cd t = bell_overlap_table(b1, b2);
            CHECK(is_unitary(t, 1e-12));
            CHECK(max_diff(bell_overlap_table(b1, b1),
                           Eigen::Matrix4cd::Identity()) <= 1e-12);
            // <B^{b1}_{0*,0}|B^{b2}_{m'*,n'}> = delta_{m'0} delta_{n'0}
            CHECK(std::abs(t(0, 0) - 1.0) <= 1e-12);
            CHECK(t.row(0).tail(3).cwiseAbs().maxCoeff() <= 1e-12);
        }
    }

    SUBCASE("(Z, X) pairs swap the off-diagonal labels") {
        const Eigen::Matrix4cd t = bell_overlap_table(z, x);
        CHECK(std::abs(t(0, 0) - 1.0) <= 1e-14);          // (0,0) <-> (0,0)
        CHECK(std::abs(t(1, 2) - 1.0) <= 1e-14);          // (0,1) <-> (1,0)
        CHECK(std::abs(t(2, 1) - 1.0) <= 1e-14);          // (1,0) <-> (0,1)
        CHECK(std::abs(t(3, 3) + 1.0) <= 1e-14);          // (1,1) <-> -(1,1)
    }

    SUBCASE("(X, Y) links the n=1 sector with +-i phases") {
        // Computed directly from the cross-basis identities:
        // B^X_01 = B^Z_10 = i B^Y_{1*,1} and B^X_11 = -B^Z_11 = i B^Y_{0*,1}.
        const Eigen::Matrix4cd t = bell_overlap_table(x, y);
        CHECK(std::abs(t(0, 0) - 1.0) <= 1e-14);
        CHECK(std::abs(t(2, 2) - 1.0) <= 1e-14);
        CHECK(std::abs(t(1, 3) - cplx{0, -1}) <= 1e-14);
        CHECK(std::abs(t(3, 1) - cplx{0, -1}) <= 1e-14);
        CHECK(std::abs(t(1, 1)) <= 1e-14);
        CHECK(std::abs(t(3, 3)) <= 1e-14);
    }
}

TEST_CASE("Bell coefficients invert the biorthogonal construction") {
    Rng rng(37);
    for (int trial = 0; trial < 25; ++trial) {
        const CloningAmplitudes a = random_amplitudes(rng);
        const QubitBasis b =
            trial % 2 ? random_named_basis(rng) : random_unitary_basis(rng);
        const Eigen::Matrix2cd c = bell_coefficients(cerf_state(a, b).psi, b);
        CHECK(max_diff(c, a.matrix().cast<cplx>()) <= 1e-12);
    }
}

TEST_CASE("the optimal cloner reads back identically on the whole equator") {
    const CloningState psi =
        cerf_state(fggnp_amplitudes(kOptimalV, kOptimalY, kOptimalX));
    // In any equatorial basis the coefficients are (v, x; y, x): the m and n
    // labels trade places relative to the Z expansion and the two x entries
    // ride along unchanged.
    Eigen::Matrix2cd expected;
    expected << kOptimalV, kOptimalX, kOptimalY, kOptimalX;

    const Eigen::Matrix2cd in_x = bell_coefficients(psi.psi, QubitBasis::x());
    CHECK(max_diff(in_x, expected) <= 1e-12);
    CHECK(max_diff(bell_coefficients(psi.psi, QubitBasis::y()), in_x) <= 1e-12);
    for (const double phi : {0.1, 0.9, 2.2, 5.5})
        CHECK(max_diff(bell_coefficients(psi.psi, QubitBasis::equatorial(phi)),
                       in_x) <= 1e-12);
    // The expansion stays complete: sum |c|^2 = 1.
    CHECK(in_x.squaredNorm() == doctest::Approx(1.0).epsilon(1e-12));
}
