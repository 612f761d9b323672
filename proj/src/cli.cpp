#include "clonekit/cli.hpp"

#include <CLI11.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "clonekit/report_json.hpp"

namespace clonekit {

namespace {

using nlohmann::json;

QubitBasis parse_basis(const std::string& name) {
    if (name == "z") return QubitBasis::z();
    if (name == "x") return QubitBasis::x();
    if (name == "y") return QubitBasis::y();
    if (name == "zprime" || name == "z'") return QubitBasis::zprime();
    if (name.rfind("phi:", 0) == 0) {
        size_t used = 0;
        const double phi = std::stod(name.substr(4), &used);
        if (used != name.size() - 4)
            throw std::invalid_argument("malformed equatorial basis: " + name);
        return QubitBasis::equatorial(phi);
    }
    throw std::invalid_argument("unknown basis: " + name);
}

std::vector<QubitBasis> parse_bases(const std::vector<std::string>& names) {
    std::vector<QubitBasis> bases;
    bases.reserve(names.size());
    for (const auto& n : names) bases.push_back(parse_basis(n));
    return bases;
}

// Cloner selection shared by fidelity / covariance / reduce.
struct ClonerOptions {
    std::string family;
    double alpha = M_PI / 4.0;
    double v = kOptimalV;
    double y = kOptimalY;
    double x = kOptimalX;
    std::vector<double> a;

    void attach(CLI::App* cmd, bool allow_ng) {
        auto* fam = cmd->add_option("--family", family,
                                    allow_ng ? "cloner family: fggnp, ng, universal, custom"
                                             : "cloner family: fggnp, universal, custom")
                        ->required();
        std::vector<std::string> allowed = {"fggnp", "universal", "custom"};
        if (allow_ng) allowed.push_back("ng");
        fam->check(CLI::IsMember(allowed));
        cmd->add_option("--alpha", alpha, "NG gate angle in radians");
        cmd->add_option("--v", v, "phase-covariant v = a00");
        cmd->add_option("--y", y, "phase-covariant y = a01");
        cmd->add_option("--x", x, "phase-covariant / universal x");
        cmd->add_option("--a", a, "custom amplitudes a00,a01,a10,a11")
            ->delimiter(',')
            ->expected(4);
    }

    CloningAmplitudes amplitudes(double tol) const {
        if (family == "fggnp") return fggnp_amplitudes(v, y, x, tol);
        if (family == "universal") return universal_amplitudes(x);
        if (family == "custom") {
            if (a.size() != 4)
                throw std::invalid_argument("custom family needs --a with 4 entries");
            return {a[0], a[1], a[2], a[3], tol};
        }
        throw std::invalid_argument("family " + family + " has no amplitude matrix");
    }

    Eigen::VectorXcd state(double tol) const {
        if (family == "ng") return ng_state(alpha).psi;
        return cerf_state(amplitudes(tol)).psi;
    }

    json inputs() const {
        json in = {{"family", family}};
        if (family == "ng") in["alpha"] = alpha;
        if (family == "fggnp") {
            in["v"] = v;
            in["y"] = y;
            in["x"] = x;
        }
        if (family == "universal") {
            in["x"] = x;
            in["eve_dominant"] = universal_eve_dominant(x);
        }
        if (family == "custom") in["a"] = a;
        return in;
    }
};

double unitarity_residual(const Eigen::MatrixXcd& op) {
    return (op.adjoint() * op -
            Eigen::MatrixXcd::Identity(op.rows(), op.cols()))
        .cwiseAbs()
        .maxCoeff();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"clonekit: qubit cloning machines, covariance and reducibility"};
    app.require_subcommand(1);
    // Let global flags (--tol, --json) appear after the subcommand as well.
    app.fallthrough();

    double tol = kNumericTol;
    app.add_option("--tol", tol, "numerical tolerance override")
        ->check(CLI::PositiveNumber);
    bool json_mode = true;
    app.add_flag("--json", json_mode, "emit JSON (the only output mode)");

    // bell
    auto* bell = app.add_subcommand("bell", "emit a (generalized) Bell state");
    int bell_m = 0, bell_n = 0;
    std::string bell_basis = "z", bell_side = "plain";
    bell->add_option("--m", bell_m)->check(CLI::Range(0, 1));
    bell->add_option("--n", bell_n)->check(CLI::Range(0, 1));
    bell->add_option("--basis", bell_basis, "z, x, y, zprime or phi:<radians>");
    bell->add_option("--side", bell_side, "star placement: plain, ab or em")
        ->check(CLI::IsMember({"plain", "ab", "em"}));

    // fidelity
    auto* fid = app.add_subcommand("fidelity", "per-basis clone fidelities");
    ClonerOptions fid_cloner;
    fid_cloner.attach(fid, true);
    std::vector<std::string> fid_bases = {"x", "y", "z"};
    int equator_samples = 64;
    fid->add_option("--bases", fid_bases, "comma list: z,x,y,zprime,phi:<radians>")
        ->delimiter(',');
    fid->add_option("--equator-samples", equator_samples)
        ->check(CLI::PositiveNumber);

    // covariance
    auto* cov = app.add_subcommand("covariance", "strict/FAPP covariance verdict");
    ClonerOptions cov_cloner;
    cov_cloner.family = "custom";
    cov->add_option("--a", cov_cloner.a, "amplitudes a00,a01,a10,a11")
        ->delimiter(',')
        ->expected(4);
    cov->add_option("--family", cov_cloner.family,
                    "cloner family: fggnp, universal, custom");
    cov->add_option("--v", cov_cloner.v);
    cov->add_option("--y", cov_cloner.y);
    cov->add_option("--x", cov_cloner.x);
    std::vector<std::string> cov_bases;
    cov->add_option("--bases", cov_bases, "exactly two bases")
        ->delimiter(',')
        ->required();

    // reduce
    auto* red = app.add_subcommand("reduce", "reduction to two 2-qubit cloners");
    ClonerOptions red_cloner;
    red_cloner.attach(red, false);

    // optimize
    auto* opt =
        app.add_subcommand("optimize", "symmetric phase-covariant optimum");

    // six-state
    auto* six = app.add_subcommand("six-state", "three-cloner mixture attack");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 1;
    }

    try {
        json doc;
        if (bell->parsed()) {
            const BellSide side = bell_side == "plain" ? BellSide::plain
                                  : bell_side == "ab"  ? BellSide::conj_first
                                                       : BellSide::conj_second;
            const QubitBasis basis = parse_basis(bell_basis);
            const Eigen::VectorXcd state =
                generalized_bell({bell_m, bell_n, side}, basis);
            doc = make_document(
                "bell",
                {{"m", bell_m}, {"n", bell_n}, {"side", bell_side}, {"basis", bell_basis}},
                {{"amplitudes", json_vector(state)}, {"basis", basis.label}},
                {{"norm", std::abs(state.norm() - 1.0)}});
        } else if (fid->parsed()) {
            const FidelityReport report = fidelity_report(
                fid_cloner.state(tol), parse_bases(fid_bases), equator_samples);
            json inputs = fid_cloner.inputs();
            inputs["bases"] = fid_bases;
            inputs["equator_samples"] = equator_samples;
            inputs["tol"] = tol;
            doc = make_document(
                "fidelity", inputs, to_json(report),
                {{"equator_spread", report.equator_max - report.equator_min}});
        } else if (cov->parsed()) {
            if (cov_bases.size() != 2)
                throw std::invalid_argument("covariance needs exactly two bases");
            const CloningAmplitudes a = cov_cloner.amplitudes(tol);
            const QubitBasis b1 = parse_basis(cov_bases[0]);
            const QubitBasis b2 = parse_basis(cov_bases[1]);
            CovarianceVerdict verdict = strict_covariance_by_theorem(a, b1, b2);
            const bool direct = strict_covariance_direct(a, b1, b2, tol);
            json inputs = cov_cloner.inputs();
            inputs["bases"] = cov_bases;
            inputs["tol"] = tol;
            json result = to_json(verdict);
            result["direct"] = direct;
            doc = make_document("covariance", inputs, result,
                                {{"max_residual", verdict.max_residual}});
        } else if (red->parsed()) {
            const CloningAmplitudes a = red_cloner.amplitudes(tol);
            const ReducibilityReport report = decompose(a, tol);
            json residuals = json::object();
            if (report.reducible) {
                residuals["reconstruction"] = report.residual;
                residuals["u_unitarity"] = unitarity_residual(*report.u);
                residuals["v_unitarity"] = unitarity_residual(*report.v_op);
                residuals["verified"] = verify_decomposition(a, report, std::max(tol, kNumericTol));
                if (report.residual > tol ||
                    static_cast<double>(residuals["verified"]) > tol)
                    throw std::runtime_error("reduction residual above tolerance");
            }
            json inputs = red_cloner.inputs();
            inputs["tol"] = tol;
            doc = make_document("reduce", inputs, to_json(report), residuals);
        } else if (opt->parsed()) {
            const PhaseCovariantOptimum optimum =
                optimize_symmetric_phase_covariant(tol);
            doc = make_document("optimize", {{"tolerance", tol}}, to_json(optimum),
                                {{"symmetry", optimum.symmetry_residual}});
        } else if (six->parsed()) {
            const AttackReport report = six_state_mixture_report();
            doc = make_document(
                "six-state", json::object(), to_json(report),
                {{"anisotropy", report.fidelity_max - report.fidelity_min}});
        }
        out << doc.dump(2) << "\n";
        return 0;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace clonekit
