#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "entbounds/audit.hpp"
#include "entbounds/relations.hpp"

namespace entbounds {

/// Shortest-field rendering with 17 significant digits (round-trip exact).
std::string format_g17(double value);

nlohmann::json to_json(const AuditConfig& cfg);
nlohmann::json to_json(const ScalarBoundsAudit& audit);
nlohmann::json to_json(const StateAudit& audit);
nlohmann::json to_json(const BoundReport& report);

/// {command, config, results, violations} envelope shared by all commands.
nlohmann::json make_report_envelope(std::string_view command, const AuditConfig& cfg,
                                    nlohmann::json results, nlohmann::json violations);

std::string scalar_audit_csv(const ScalarBoundsAudit& audit);
std::string state_audit_csv(const StateAudit& audit);
std::string measures_csv(const std::vector<MeasureCheck>& checks);
std::string monogamy_surface_csv(const std::vector<MonogamySurfaceRow>& rows);
std::string polygamy_surface_csv(const std::vector<PolygamySurfaceRow>& rows);

}  // namespace entbounds
