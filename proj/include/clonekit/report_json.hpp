#pragma once

#include <json.hpp>

#include "clonekit/analysis.hpp"
#include "clonekit/covariance.hpp"
#include "clonekit/reducibility.hpp"

// JSON serialization of report types. Complex numbers serialize as
// two-element arrays [re, im]; nonfinite values as null.

namespace clonekit {

inline constexpr const char* kVersion = "0.1.0";

nlohmann::json json_complex(const cplx& z);
nlohmann::json json_vector(const Eigen::VectorXcd& v);
nlohmann::json json_matrix(const Eigen::MatrixXcd& m);
nlohmann::json json_real_matrix(const Eigen::MatrixXd& m);

nlohmann::json to_json(const FidelityReport& report);
nlohmann::json to_json(const CovarianceVerdict& verdict);
nlohmann::json to_json(const ReducibilityReport& report);
nlohmann::json to_json(const AncillaStatistics& stats);
nlohmann::json to_json(const PhaseCovariantOptimum& optimum);
nlohmann::json to_json(const AttackReport& report);

// Top-level document {command, inputs, result, residuals, version}.
nlohmann::json make_document(const std::string& command,
                             nlohmann::json inputs, nlohmann::json result,
                             nlohmann::json residuals);

}  // namespace clonekit
