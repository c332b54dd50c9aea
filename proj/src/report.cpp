#include "picard/report.hpp"

#include <iomanip>
#include <sstream>
#include <utility>

#include "picard/errors.hpp"

namespace picard {

using nlohmann::ordered_json;

namespace {

std::string join(const std::array<u64, 5>& f, char sep) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(f[i]);
  }
  return out;
}

std::string_view origin_name(Origin o) { return o == Origin::Random ? "random" : "injected"; }

std::string trial_label(const CurveRecord& r) {
  return r.origin == Origin::Random ? std::to_string(r.index)
                                    : "injected:" + std::to_string(r.index);
}

ordered_json config_json(const SweepConfig& c) {
  ordered_json sel;
  sel["explicit"] = c.primes.explicit_primes;
  sel["min"] = c.primes.min_p;
  sel["max"] = c.primes.max_p;
  sel["residue_mod_3"] = c.primes.residue_mod_3 ? ordered_json(*c.primes.residue_mod_3)
                                                : ordered_json(nullptr);
  ordered_json injected = ordered_json::array();
  for (const auto& inj : c.injected) {
    injected.push_back(ordered_json{{"p", inj.p}, {"f", inj.f}});
  }
  ordered_json j;
  j["primes"] = c.primes.resolve();
  j["prime_selection"] = std::move(sel);
  j["trials_per_prime"] = c.trials_per_prime;
  j["seed"] = c.seed;
  j["require_nonzero_constant"] = c.require_nonzero_constant;
  j["oracle_check"] = c.oracle_check;
  j["oracle_bound"] = c.oracle_bound;
  j["injected"] = std::move(injected);
  return j;
}

void write_matrix_rows(std::ostream& os, const MatrixFp& m, char sep) {
  for (const auto& row : m.rows()) {
    os << row[0] << sep << row[1] << sep << row[2] << '\n';
  }
}

void write_csv_record(std::ostream& os, const CurveRecord& r) {
  os << r.p << ',' << trial_label(r) << ',' << join(r.f, ',') << ',' << r.p_mod_3 << ','
     << r.rank_h << ',' << r.a_number << ',' << r.p_rank << ',' << r.predicted_a << ','
     << (r.matches_theorem ? "true" : "false") << '\n';
}

void write_text_record(std::ostream& os, const CurveRecord& r) {
  os << "  p=" << r.p << " trial=" << trial_label(r) << " f=" << join(r.f, ',')
     << " rank_H=" << r.rank_h << " a_number=" << r.a_number << " p_rank=" << r.p_rank
     << " predicted_a=" << r.predicted_a
     << " matches_theorem=" << (r.matches_theorem ? "true" : "false") << '\n';
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw UsageError("unknown format '" + std::string(name) + "' (expected text, json or csv)");
}

ResultDocument make_result_document(const PicardCurve& curve, std::string command,
                                    std::optional<Convention> convention) {
  const CurveInvariants inv = compute_invariants(curve);
  ResultDocument doc;
  doc.command = std::move(command);
  doc.p = curve.p();
  doc.f = curve.coefficients();
  doc.p_mod_3 = static_cast<int>(curve.p() % 3);
  if (convention) {
    doc.matrices.push_back(*convention == Convention::HasseWitt ? inv.hasse_witt
                                                                : cartier_matrix(curve));
  }
  doc.rank_h = inv.rank_h;
  doc.a_number = inv.a_number;
  doc.p_rank = inv.p_rank;
  return doc;
}

ordered_json to_json(const MatrixFp& m) {
  ordered_json entries = ordered_json::array();
  for (const auto& row : m.rows()) entries.push_back(row);
  ordered_json basis = ordered_json::array();
  for (const auto label : DifferentialBasis::labels()) basis.push_back(std::string(label));
  ordered_json j;
  j["convention"] = std::string(to_string(m.convention()));
  j["basis"] = std::move(basis);
  j["entries"] = std::move(entries);
  return j;
}

ordered_json to_json(const ResultDocument& doc) {
  ordered_json j;
  j["schema_version"] = std::string(kSchemaVersion);
  j["command"] = doc.command;
  j["input"] = ordered_json{{"p", doc.p}, {"f", doc.f}};
  j["p_mod_3"] = doc.p_mod_3;
  if (!doc.matrices.empty()) {
    ordered_json ms = ordered_json::array();
    for (const auto& m : doc.matrices) ms.push_back(to_json(m));
    j["matrices"] = std::move(ms);
  }
  j["rank_H"] = doc.rank_h;
  j["a_number"] = doc.a_number;
  j["p_rank"] = doc.p_rank;
  return j;
}

ordered_json to_json(const CurveRecord& r) {
  ordered_json j;
  j["p"] = r.p;
  j["origin"] = std::string(origin_name(r.origin));
  j["trial"] = r.index;
  j["f"] = r.f;
  j["p_mod_3"] = r.p_mod_3;
  j["rank_H"] = r.rank_h;
  j["a_number"] = r.a_number;
  j["p_rank"] = r.p_rank;
  j["predicted_a"] = r.predicted_a;
  j["matches_theorem"] = r.matches_theorem;
  j["nonzero_constant"] = r.nonzero_constant;
  j["oracle_checked"] = r.oracle_checked;
  return j;
}

ordered_json to_json(const OracleMismatch& m) {
  ordered_json j;
  j["p"] = m.p;
  j["origin"] = std::string(origin_name(m.origin));
  j["trial"] = m.index;
  j["f"] = m.f;
  j["check"] = m.check;
  j["expected"] = to_json(m.expected);
  j["actual"] = to_json(m.actual);
  return j;
}

ordered_json to_json(const SweepReport& report, bool include_timing) {
  ordered_json tallies = ordered_json::array();
  for (const auto& t : report.tallies) {
    tallies.push_back(ordered_json{{"p", t.p},
                                   {"p_mod_3", t.p_mod_3},
                                   {"trials", t.trials},
                                   {"a_number_counts", t.a_number_counts},
                                   {"theorem_matches", t.theorem_matches}});
  }
  auto records = [](const std::vector<CurveRecord>& rs) {
    ordered_json a = ordered_json::array();
    for (const auto& r : rs) a.push_back(to_json(r));
    return a;
  };
  ordered_json mismatches = ordered_json::array();
  for (const auto& m : report.oracle_mismatches) mismatches.push_back(to_json(m));

  ordered_json j;
  j["schema_version"] = std::string(kSchemaVersion);
  j["command"] = "sweep";
  j["config"] = config_json(report.config);
  j["tallies"] = std::move(tallies);
  j["records"] = records(report.records);
  j["injected"] = records(report.injected);
  j["counterexamples"] = records(report.counterexamples);
  j["oracle_mismatches"] = std::move(mismatches);
  if (include_timing) j["runtime_seconds"] = report.runtime_seconds;
  return j;
}

std::string serialize(const ResultDocument& doc, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      return dump(to_json(doc));
    case Format::Csv:
      if (!doc.matrices.empty()) {
        for (const auto& m : doc.matrices) write_matrix_rows(os, m, ',');
        break;
      }
      os << "p,f0,f1,f2,f3,f4,p_mod_3,rank_H,a_number,p_rank\n"
         << doc.p << ',' << join(doc.f, ',') << ',' << doc.p_mod_3 << ',' << doc.rank_h << ','
         << doc.a_number << ',' << doc.p_rank << '\n';
      break;
    case Format::Text:
      if (!doc.matrices.empty()) {
        for (const auto& m : doc.matrices) write_matrix_rows(os, m, ' ');
        break;
      }
      os << "p=" << doc.p << '\n'
         << "f=" << join(doc.f, ',') << '\n'
         << "p_mod_3=" << doc.p_mod_3 << '\n'
         << "rank_H=" << doc.rank_h << '\n'
         << "a_number=" << doc.a_number << '\n'
         << "p_rank=" << doc.p_rank << '\n';
      break;
  }
  return os.str();
}

std::string serialize(const SweepReport& report, Format format, bool include_timing) {
  std::ostringstream os;
  switch (format) {
    case Format::Json:
      return dump(to_json(report, include_timing));
    case Format::Csv:
      for (std::size_t i = 0; i < kSweepCsvColumns.size(); ++i) {
        os << (i ? "," : "") << kSweepCsvColumns[i];
      }
      os << '\n';
      for (const auto& r : report.records) write_csv_record(os, r);
      for (const auto& r : report.injected) write_csv_record(os, r);
      break;
    case Format::Text: {
      const auto& c = report.config;
      os << "sweep seed=" << c.seed << " trials_per_prime=" << c.trials_per_prime
         << " require_nonzero_constant=" << (c.require_nonzero_constant ? "true" : "false")
         << " oracle_check=" << (c.oracle_check ? "true" : "false") << '\n';
      os << std::setw(6) << "p" << std::setw(8) << "p mod 3" << std::setw(8) << "trials"
         << std::setw(7) << "a=0" << std::setw(7) << "a=1" << std::setw(7) << "a=2"
         << std::setw(7) << "a=3" << std::setw(9) << "matches" << '\n';
      for (const auto& t : report.tallies) {
        os << std::setw(6) << t.p << std::setw(8) << t.p_mod_3 << std::setw(8) << t.trials;
        for (const u64 n : t.a_number_counts) os << std::setw(7) << n;
        os << std::setw(9) << t.theorem_matches << '\n';
      }
      os << "injected: " << report.injected.size() << '\n';
      for (const auto& r : report.injected) write_text_record(os, r);
      os << "counterexamples: " << report.counterexamples.size() << '\n';
      for (const auto& r : report.counterexamples) write_text_record(os, r);
      os << "oracle_mismatches: " << report.oracle_mismatches.size() << '\n';
      for (const auto& m : report.oracle_mismatches) {
        os << "  p=" << m.p << ' ' << origin_name(m.origin) << ':' << m.index
           << " f=" << join(m.f, ',') << " check=" << m.check << '\n';
      }
      if (include_timing) os << "runtime_seconds: " << report.runtime_seconds << '\n';
      break;
    }
  }
  return os.str();
}

std::string serialize_mismatches(const SweepConfig& config,
                                 const std::vector<OracleMismatch>& mismatches, Format format) {
  const u64 checked = config.primes.resolve().size() * config.trials_per_prime +
                      config.injected.size();
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      ordered_json list = ordered_json::array();
      for (const auto& m : mismatches) list.push_back(to_json(m));
      ordered_json j;
      j["schema_version"] = std::string(kSchemaVersion);
      j["command"] = "oracle-check";
      j["config"] = config_json(config);
      j["curves_checked"] = checked;
      j["mismatches"] = std::move(list);
      return dump(j);
    }
    case Format::Csv:
      os << "p,origin,trial,f0,f1,f2,f3,f4,check\n";
      for (const auto& m : mismatches) {
        os << m.p << ',' << origin_name(m.origin) << ',' << m.index << ',' << join(m.f, ',')
           << ',' << m.check << '\n';
      }
      break;
    case Format::Text:
      os << "oracle-check curves_checked=" << checked << " mismatches=" << mismatches.size()
         << '\n';
      for (const auto& m : mismatches) {
        os << "  p=" << m.p << ' ' << origin_name(m.origin) << ':' << m.index
           << " f=" << join(m.f, ',') << " check=" << m.check << '\n';
      }
      break;
  }
  return os.str();
}

}  // namespace picard
