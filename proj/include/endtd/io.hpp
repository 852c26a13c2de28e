#pragma once

#include <string>

#include <json.hpp>

#include "endtd/decomposition.hpp"
#include "endtd/verify.hpp"

namespace endtd {

struct ExportOptions {
  bool log = true;
  bool envelopes = false;  ///< full envelope records per step
  bool algorithm = false;  ///< full region-algorithm transcripts per step
};

nlohmann::json to_json(const Truncation& t, const TreeDecomposition& td, const ExportOptions& opt = {});
nlohmann::json to_json(const Truncation& t, const VerificationReport& r);
nlohmann::json to_json(const OracleAudit& a);
nlohmann::json gdelta_json(const GDeltaSpec& s);

/// Reads nodes and bags back; pending parts are recomputed on `t`.
TreeDecomposition tree_from_json(const Truncation& t, const nlohmann::json& j);

std::string to_dot(const Truncation& t, const TreeDecomposition& td);

}  // namespace endtd
