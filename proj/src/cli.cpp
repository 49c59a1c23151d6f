#include "rootkit/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iomanip>
#include <optional>
#include <sstream>

#include "rootkit/classify.hpp"
#include "rootkit/error.hpp"
#include "rootkit/report.hpp"
#include "rootkit/root_system.hpp"
#include "rootkit/weyl.hpp"
#include "rootkit/witness.hpp"

namespace rootkit::cli {

namespace {

using nlohmann::ordered_json;

std::string coefficient_text(const std::vector<long>& c) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << (c[i] > 0 ? " + " : " - ");
    else if (c[i] < 0) os << "-";
    const long mag = std::abs(c[i]);
    if (mag != 1) os << mag << "*";
    os << "a" << i;
    first = false;
  }
  return first ? "0" : os.str();
}

const char* length_text(const RootSystem& s, const RatVector& r) {
  if (s.is_simply_laced()) return "long/short";
  return length_class(s, r) == LengthClass::Long ? "long" : "short";
}

// ---------------------------------------------------------------------------
// describe

std::string describe_text(const RootSystem& s) {
  const HighestRoots h = highest_roots(s);
  const auto positives = s.positives();
  std::ostringstream os;
  os << "type " << s.name() << " (rank " << s.rank() << ", ambient dimension " << s.dim() << ", "
     << (s.model() == Model::Coordinate ? "coordinate" : "closure") << " model, "
     << (s.is_simply_laced() ? "simply-laced" : "multi-laced") << ")\n";
  os << "roots: " << s.roots().size() << " (positive: " << positives.size() << ")\n\n";
  os << "simple roots:\n";
  for (std::size_t i = 0; i < s.rank(); ++i) {
    os << "  a" << i << " [" << i + 1 << "]  " << s.simple(i) << "  " << length_text(s, s.simple(i))
       << "\n";
  }
  os << "\nhighest root:        " << h.highest << " = "
     << coefficient_text(multiplicities(s, h.highest).on_simples) << "\n";
  os << "highest short root:  " << h.highest_short << " = "
     << coefficient_text(multiplicities(s, h.highest_short).on_simples) << "\n\n";
  os << "form:\n";
  for (std::size_t r = 0; r < s.dim(); ++r) {
    os << "  ";
    for (std::size_t c = 0; c < s.dim(); ++c) os << std::setw(4) << s.form()(r, c).get_str();
    os << "\n";
  }
  os << "\npositive roots:\n";
  for (RootIndex r : positives) {
    os << "  ht " << std::setw(2) << s.abs_height(r) << "  " << s.root(r) << " = "
       << coefficient_text(s.simple_coefficients(r)) << "\n";
  }
  return os.str();
}

std::string describe_json(const RootSystem& s) {
  const HighestRoots h = highest_roots(s);
  ordered_json j;
  j["ctype"] = s.name();
  j["rank"] = s.rank();
  j["dim"] = s.dim();
  j["model"] = s.model() == Model::Coordinate ? "coordinate" : "closure";
  j["simply_laced"] = s.is_simply_laced();
  j["root_count"] = s.roots().size();
  ordered_json simples = ordered_json::array();
  for (const auto& a : s.simples()) simples.push_back(a.to_pq_strings());
  j["simples"] = simples;
  ordered_json roots = ordered_json::array();
  for (std::size_t k = 0; k < s.roots().size(); ++k) {
    const RootIndex r{k};
    ordered_json e;
    e["root"] = s.root(r).to_pq_strings();
    e["positive"] = s.is_positive(r);
    e["coefficients"] = s.simple_coefficients(r);
    if (s.is_positive(r)) e["height"] = s.abs_height(r);
    roots.push_back(std::move(e));
  }
  j["roots"] = roots;
  ordered_json form = ordered_json::array();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < s.dim(); ++c) row.push_back(to_pq(s.form()(r, c)));
    form.push_back(row);
  }
  j["form"] = form;
  j["highest_root"] = h.highest.to_pq_strings();
  j["highest_root_coefficients"] = multiplicities(s, h.highest).on_simples;
  j["highest_short"] = h.highest_short.to_pq_strings();
  j["highest_short_coefficients"] = multiplicities(s, h.highest_short).on_simples;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// classify

std::string classify(const std::string& type_text, const std::string& format) {
  const RootSystem s = build_system(CartanType::parse(type_text));
  const TheoremReport rep = verify_theorem(s);
  for (const auto& row : rep.rows) {
    if (row.witness &&
        apply_word(s, *row.witness, s.simple(row.simple_index)) != rep.highest_root &&
        apply_word(s, *row.witness, s.simple(row.simple_index)) != rep.highest_short) {
      throw std::logic_error("witness for row " + std::to_string(row.simple_index) +
                             " failed replay");
    }
  }
  const report::ReportDocument doc = report::make_document(s, rep);
  if (format == "json") return report::emit_json(doc);
  if (format == "csv") return report::emit_csv(doc);
  return report::emit_table(doc);
}

// ---------------------------------------------------------------------------
// verify

struct TypeCheck {
  std::string name;
  TheoremReport report;
  std::size_t pairing_counterexamples = 0;
  std::size_t positivity_violations = 0;
  std::size_t multiplicity_violations = 0;
  std::size_t witnesses_expected = 0;
  std::size_t witnesses_ok = 0;
  double millis = 0;

  bool passed() const {
    return report.all_equivalent && pairing_counterexamples == 0 && positivity_violations == 0 &&
           multiplicity_violations == 0 && witnesses_ok == witnesses_expected;
  }
};

TypeCheck check_type(const CartanType& ctype) {
  const auto start = std::chrono::steady_clock::now();
  const RootSystem s = build_system(ctype);
  TypeCheck out{ctype.to_string(), verify_theorem(s)};
  out.pairing_counterexamples = unique_pairing_counterexamples(s).size();
  out.positivity_violations = positive_pairing_violations(s).size();
  out.multiplicity_violations = levi_multiplicity_violations(s).size();
  const SimpleSubset full = SimpleSubset::all(s.rank());
  for (const auto& row : out.report.rows) {
    if (!(row.special || row.cospecial)) continue;
    ++out.witnesses_expected;
    const RatVector& alpha = s.simple(row.simple_index);
    const WitnessResult w = dominant_witness(s, row.simple_index);
    if (w.word.avoids(row.simple_index) &&
        apply_word(s, w.word, alpha) == dominant_rep(s, alpha, full).vector) {
      ++out.witnesses_ok;
    }
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
  return out;
}

int verify(const std::vector<CartanType>& types, std::ostream& os) {
  std::vector<std::future<TypeCheck>> jobs;
  jobs.reserve(types.size());
  for (const auto& t : types) jobs.push_back(std::async(std::launch::async, check_type, t));

  std::size_t failures = 0;
  for (auto& job : jobs) {
    const TypeCheck c = job.get();
    if (!c.passed()) ++failures;
    os << std::left << std::setw(4) << c.name << " " << (c.passed() ? "PASS" : "FAIL") << "  rows "
       << c.report.rows.size() << "  equivalent " << (c.report.all_equivalent ? "yes" : "no")
       << "  pairing-counterexamples " << c.pairing_counterexamples << "  positivity-violations "
       << c.positivity_violations << "  levi-multiplicity-violations "
       << c.multiplicity_violations << "  witnesses " << c.witnesses_ok << "/"
       << c.witnesses_expected << "  (" << std::fixed << std::setprecision(1) << c.millis
       << " ms)\n";
    for (const auto& row : c.report.rows) {
      os << "     [" << row.simple_index << "] quasi_constant=" << std::boolalpha
         << row.quasi_constant << " special_or_cospecial=" << (row.special || row.cospecial)
         << " dom_eq_levi_dom=" << row.dom_eq_levi_dom << std::noboolalpha << "\n";
    }
  }
  os << types.size() << " systems checked, " << failures << " failed\n";
  return failures == 0 ? kOk : kVerificationFailed;
}

// ---------------------------------------------------------------------------
// witness

std::string witness(const std::string& type_text, long index) {
  const RootSystem s = build_system(CartanType::parse(type_text));
  if (index < 0 || static_cast<std::size_t>(index) >= s.rank()) {
    throw Error(ErrorCode::BadIndex, "simple index " + std::to_string(index) +
                                         " out of range for " + s.name() + " (rank " +
                                         std::to_string(s.rank()) + ")");
  }
  const auto i = static_cast<std::size_t>(index);
  const WitnessResult w = dominant_witness(s, i);
  const RatVector dom = dominant_rep(s, s.simple(i), SimpleSubset::all(s.rank())).vector;
  const std::vector<RatVector> trace = replay(s, w.word, w.source);
  if (!w.word.avoids(i) || trace.back() != dom || trace.back() != w.target) {
    throw std::logic_error("witness failed replay");
  }

  std::ostringstream os;
  os << "type " << s.name() << ", simple root a" << i << " [" << i + 1 << "] = " << w.source
     << (is_special(s, i) ? " (special)" : " (co-special)") << "\n";
  os << "word " << w.word.to_string() << " avoids index " << i << "\n";
  os << "replay:\n";
  os << "  start        " << trace.front() << "\n";
  for (std::size_t k = 1; k < trace.size(); ++k) {
    const std::size_t letter = w.word.letters[w.word.size() - k];
    os << "  apply s" << letter << std::string(letter < 10 ? 5 : 4, ' ') << trace[k] << "\n";
  }
  os << "dom(a" << i << ") = " << dom << "  reached: yes\n";
  return os.str();
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InadmissibleRank:
    case ErrorCode::BadIndex:
      return kUsage;
    case ErrorCode::NonIntegralSolution:
      return kVerificationFailed;
    default:
      return kPrecondition;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact root system toolkit: orbits, dominance, special roots and quasi-constancy",
               "rootkit"};
  app.require_subcommand(1);
  std::string out_path;

  std::string type_text;
  std::string format;
  auto* describe_cmd = app.add_subcommand("describe", "Print roots, base, highest roots and form");
  describe_cmd->add_option("type", type_text, "Type such as A3, B4, G2")->required();
  describe_cmd->add_option("--format", format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  describe_cmd->add_option("--out", out_path, "Write output to PATH");

  auto* classify_cmd = app.add_subcommand("classify", "One row per simple root");
  classify_cmd->add_option("type", type_text, "Type such as A3, B4, G2")->required();
  classify_cmd->add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  classify_cmd->add_option("--out", out_path, "Write output to PATH");

  int max_rank = 8;
  std::vector<std::string> type_list;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive equivalence check over many types");
  auto* max_rank_opt = verify_cmd->add_option("--max-rank", max_rank,
                                              "Check every admissible type up to this rank");
  verify_cmd->add_option("--types", type_list, "Comma-separated types (overrides --max-rank)")
      ->delimiter(',');
  verify_cmd->add_option("--out", out_path, "Write output to PATH");

  long index = 0;
  auto* witness_cmd = app.add_subcommand("witness", "Levi word mapping a simple root to dom");
  witness_cmd->add_option("type", type_text, "Type such as A3, B4, G2")->required();
  witness_cmd->add_option("index", index, "0-based simple index")->required();
  witness_cmd->add_option("--out", out_path, "Write output to PATH");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream buffer;
  int status = kOk;
  try {
    if (describe_cmd->parsed()) {
      const RootSystem s = build_system(CartanType::parse(type_text));
      buffer << (format == "json" ? describe_json(s) : describe_text(s));
    } else if (classify_cmd->parsed()) {
      buffer << classify(type_text, format.empty() ? "table" : format);
    } else if (verify_cmd->parsed()) {
      std::vector<CartanType> types;
      if (!type_list.empty()) {
        for (const auto& t : type_list) types.push_back(CartanType::parse(t));
      } else {
        if (max_rank_opt->count() == 0) {
          if (const char* env = std::getenv("ROOTKIT_MAX_RANK")) {
            try {
              std::size_t used = 0;
              max_rank = std::stoi(env, &used);
              if (used != std::string(env).size()) throw std::invalid_argument(env);
            } catch (const std::exception&) {
              err << "error: ROOTKIT_MAX_RANK must be an integer, got '" << env << "'\n";
              return kUsage;
            }
          }
        }
        if (max_rank < 1) {
          err << "error: --max-rank must be at least 1\n";
          return kUsage;
        }
        types = admissible_types(max_rank);
      }
      status = verify(types, buffer);
    } else if (witness_cmd->parsed()) {
      buffer << witness(type_text, index);
    }
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kVerificationFailed;
  }

  if (!out_path.empty()) {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << out_path << " for writing\n";
      return kUsage;
    }
    file << buffer.str();
  } else {
    out << buffer.str();
  }
  return status;
}

}  // namespace rootkit::cli
