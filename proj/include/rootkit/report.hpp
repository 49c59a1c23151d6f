#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rootkit/classify.hpp"

namespace rootkit::report {

inline constexpr const char* kSchemaVersion = "1";

struct RowRecord {
  std::size_t index = 0;
  /// 1-based Bourbaki label.
  std::size_t label = 0;
  std::vector<std::string> simple_root;
  long m = 0;
  long m_dual = 0;
  bool special = false;
  bool cospecial = false;
  bool quasi_constant = false;
  bool dom_eq_levi_dom = false;
  std::optional<std::vector<std::size_t>> witness;

  friend bool operator==(const RowRecord&, const RowRecord&) = default;
};

/// Serialized classification of one type. Rationals are "p/q" strings.
struct ReportDocument {
  std::string schema_version = kSchemaVersion;
  std::string ctype;
  std::vector<RowRecord> rows;
  std::vector<std::string> highest_root;
  std::vector<std::string> highest_short;
  bool all_equivalent = false;

  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

ReportDocument make_document(const RootSystem& s, const TheoremReport& report);

nlohmann::ordered_json to_json(const ReportDocument& doc);
/// Throws Error(ParseError) on schema mismatch.
ReportDocument from_json(const nlohmann::json& j);

std::string emit_json(const ReportDocument& doc);
ReportDocument parse_json(const std::string& text);
std::string emit_csv(const ReportDocument& doc);
std::string emit_table(const ReportDocument& doc);

}  // namespace rootkit::report
