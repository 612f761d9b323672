#include "clonekit/report_json.hpp"

#include <cmath>

namespace clonekit {

using nlohmann::json;

json json_complex(const cplx& z) { return json::array({z.real(), z.imag()}); }

json json_vector(const Eigen::VectorXcd& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(json_complex(v(i)));
    return out;
}

json json_matrix(const Eigen::MatrixXcd& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(json_complex(m(r, c)));
        out.push_back(row);
    }
    return out;
}

json json_real_matrix(const Eigen::MatrixXd& m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
        out.push_back(row);
    }
    return out;
}

json to_json(const FidelityReport& report) {
    json per_basis = json::object();
    json error_rates = json::object();
    for (const auto& entry : report.per_basis) {
        per_basis[entry.basis] = {{"f_bob", entry.f_bob}, {"f_eve", entry.f_eve}};
        error_rates[entry.basis] = {{"e_bob", entry.e_bob}, {"e_eve", entry.e_eve}};
    }
    return {{"per_basis", per_basis},
            {"error_rates", error_rates},
            {"equator_min", report.equator_min},
            {"equator_max", report.equator_max}};
}

json to_json(const CovarianceVerdict& verdict) {
    json pairs = json::array();
    for (const auto& [first, second] : verdict.violated_pairs)
        pairs.push_back(json::array(
            {json::array({first.first, first.second}),
             json::array({second.first, second.second})}));
    return {{"strict", verdict.strict},
            {"fapp", verdict.fapp},
            {"violated_pairs", pairs},
            {"max_residual", verdict.max_residual}};
}

json to_json(const ReducibilityReport& report) {
    json out = {{"cond_i", report.conditions.i},
                {"cond_ii", report.conditions.ii},
                {"cond_iii", report.conditions.iii},
                {"reducible", report.reducible}};
    out["ancilla_basis"] =
        report.ancilla_basis ? json(report.ancilla_basis->label) : json(nullptr);
    out["p"] = report.p ? json(*report.p) : json(nullptr);
    out["u"] = report.u ? json_matrix(*report.u) : json(nullptr);
    out["v_op"] = report.v_op ? json_matrix(*report.v_op) : json(nullptr);
    out["residual"] =
        std::isfinite(report.residual) ? json(report.residual) : json(nullptr);
    return out;
}

json to_json(const AncillaStatistics& stats) {
    auto ratio = [](double r) {
        return std::isfinite(r) ? json(r) : json(nullptr);
    };
    return {{"table", json_real_matrix(stats.table)},
            {"alice_probability", stats.alice_probability},
            {"ratio_equal", ratio(stats.ratio_equal)},
            {"ratio_flipped", ratio(stats.ratio_flipped)}};
}

json to_json(const PhaseCovariantOptimum& optimum) {
    return {{"v", optimum.v},
            {"y", optimum.y},
            {"x", optimum.x},
            {"alpha", optimum.alpha},
            {"fidelity", optimum.fidelity},
            {"symmetry_residual", optimum.symmetry_residual},
            {"iterations", optimum.iterations}};
}

json to_json(const AttackReport& report) {
    json components = json::array();
    for (const auto& c : report.components)
        components.push_back({{"weight", c.weight}, {"cloner", c.cloner}});
    json by_basis = json::object();
    for (const auto& [basis, fidelity] : report.fidelity_by_basis)
        by_basis[basis] = fidelity;
    return {{"components", components},
            {"fidelity_by_basis", by_basis},
            {"bloch_uniform", report.bloch_uniform},
            {"fidelity_min", report.fidelity_min},
            {"fidelity_max", report.fidelity_max},
            {"comparison",
             {{"universal_fidelity", kUniversalCloneFidelity},
              {"six_state_threshold", kSixStateThresholdFidelity}}}};
}

json make_document(const std::string& command, json inputs, json result,
                   json residuals) {
    return {{"command", command},
            {"inputs", std::move(inputs)},
            {"result", std::move(result)},
            {"residuals", std::move(residuals)},
            {"version", kVersion}};
}

}  // namespace clonekit
