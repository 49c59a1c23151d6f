#include "rootkit/report.hpp"

#include <iomanip>
#include <sstream>

#include "rootkit/error.hpp"

namespace rootkit::report {

using nlohmann::json;
using nlohmann::ordered_json;

ReportDocument make_document(const RootSystem& s, const TheoremReport& report) {
  ReportDocument doc;
  doc.ctype = report.ctype.to_string();
  doc.highest_root = report.highest_root.to_pq_strings();
  doc.highest_short = report.highest_short.to_pq_strings();
  doc.all_equivalent = report.all_equivalent;
  for (const auto& row : report.rows) {
    RowRecord rec;
    rec.index = row.simple_index;
    rec.label = row.simple_index + 1;
    rec.simple_root = s.simple(row.simple_index).to_pq_strings();
    rec.m = row.m;
    rec.m_dual = row.m_dual;
    rec.special = row.special;
    rec.cospecial = row.cospecial;
    rec.quasi_constant = row.quasi_constant;
    rec.dom_eq_levi_dom = row.dom_eq_levi_dom;
    if (row.witness) rec.witness = row.witness->letters;
    doc.rows.push_back(std::move(rec));
  }
  return doc;
}

ordered_json to_json(const ReportDocument& doc) {
  ordered_json j;
  j["schema_version"] = doc.schema_version;
  j["ctype"] = doc.ctype;
  j["highest_root"] = doc.highest_root;
  j["highest_short"] = doc.highest_short;
  j["all_equivalent"] = doc.all_equivalent;
  j["rows"] = ordered_json::array();
  for (const auto& r : doc.rows) {
    ordered_json row;
    row["index"] = r.index;
    row["label"] = r.label;
    row["simple_root"] = r.simple_root;
    row["m"] = r.m;
    row["m_dual"] = r.m_dual;
    row["special"] = r.special;
    row["cospecial"] = r.cospecial;
    row["quasi_constant"] = r.quasi_constant;
    row["dom_eq_levi_dom"] = r.dom_eq_levi_dom;
    row["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
    j["rows"].push_back(std::move(row));
  }
  return j;
}

namespace {

std::vector<std::string> rational_array(const json& j) {
  auto parts = j.get<std::vector<std::string>>();
  for (const auto& p : parts) {
    if (to_pq(parse_rational(p)) != p) {
      throw Error(ErrorCode::ParseError, "rational '" + p + "' is not in canonical p/q form");
    }
  }
  return parts;
}

}  // namespace

ReportDocument from_json(const json& j) {
  try {
    ReportDocument doc;
    doc.schema_version = j.at("schema_version").get<std::string>();
    if (doc.schema_version != kSchemaVersion) {
      throw Error(ErrorCode::ParseError, "unsupported schema_version " + doc.schema_version);
    }
    doc.ctype = j.at("ctype").get<std::string>();
    doc.highest_root = rational_array(j.at("highest_root"));
    doc.highest_short = rational_array(j.at("highest_short"));
    doc.all_equivalent = j.at("all_equivalent").get<bool>();
    for (const auto& row : j.at("rows")) {
      RowRecord r;
      r.index = row.at("index").get<std::size_t>();
      r.label = row.at("label").get<std::size_t>();
      r.simple_root = rational_array(row.at("simple_root"));
      r.m = row.at("m").get<long>();
      r.m_dual = row.at("m_dual").get<long>();
      r.special = row.at("special").get<bool>();
      r.cospecial = row.at("cospecial").get<bool>();
      r.quasi_constant = row.at("quasi_constant").get<bool>();
      r.dom_eq_levi_dom = row.at("dom_eq_levi_dom").get<bool>();
      if (!row.at("witness").is_null()) {
        r.witness = row.at("witness").get<std::vector<std::size_t>>();
      }
      doc.rows.push_back(std::move(r));
    }
    return doc;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed report: ") + e.what());
  }
}

std::string emit_json(const ReportDocument& doc) { return to_json(doc).dump(2) + "\n"; }

ReportDocument parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

namespace {

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += sep;
    out += parts[k];
  }
  return out;
}

std::string word_text(const std::optional<std::vector<std::size_t>>& w, const char* sep) {
  if (!w) return "";
  std::vector<std::string> parts;
  for (auto l : *w) parts.push_back(std::to_string(l));
  return join(parts, sep);
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string emit_csv(const ReportDocument& doc) {
  std::ostringstream os;
  os << "ctype,index,label,simple_root,m,m_dual,special,cospecial,quasi_constant,"
        "dom_eq_levi_dom,witness\n";
  for (const auto& r : doc.rows) {
    os << doc.ctype << ',' << r.index << ',' << r.label << ',' << join(r.simple_root, ";") << ','
       << r.m << ',' << r.m_dual << ',' << std::boolalpha << r.special << ',' << r.cospecial << ','
       << r.quasi_constant << ',' << r.dom_eq_levi_dom << ',' << word_text(r.witness, " ") << '\n';
  }
  return os.str();
}

std::string emit_table(const ReportDocument& doc) {
  std::ostringstream os;
  os << "type " << doc.ctype << "\n";
  os << "highest root        " << RatVector::from_pq_strings(doc.highest_root) << "\n";
  os << "highest short root  " << RatVector::from_pq_strings(doc.highest_short) << "\n\n";
  std::vector<std::string> roots;
  std::size_t width = 11;
  for (const auto& r : doc.rows) {
    roots.push_back(RatVector::from_pq_strings(r.simple_root).to_string());
    width = std::max(width, roots.back().size());
  }
  os << std::left << std::setw(4) << "idx" << std::setw(6) << "label" << std::setw(width + 2)
     << "simple root" << std::setw(4) << "m" << std::setw(7) << "m_dual" << std::setw(8)
     << "special" << std::setw(10) << "cospecial" << std::setw(8) << "qconst" << std::setw(11)
     << "dom=dom_a"
     << "witness\n";
  for (std::size_t k = 0; k < doc.rows.size(); ++k) {
    const auto& r = doc.rows[k];
    os << std::left << std::setw(4) << r.index << std::setw(6) << r.label << std::setw(width + 2)
       << roots[k] << std::setw(4) << r.m << std::setw(7) << r.m_dual << std::setw(8)
       << yes_no(r.special) << std::setw(10) << yes_no(r.cospecial) << std::setw(8)
       << yes_no(r.quasi_constant) << std::setw(11) << yes_no(r.dom_eq_levi_dom)
       << (r.witness ? "[" + word_text(r.witness, ", ") + "]" : "-") << "\n";
  }
  os << "\nall equivalent: " << yes_no(doc.all_equivalent) << "\n";
  return os.str();
}

}  // namespace rootkit::report
