#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "picard/cartier.hpp"
#include "picard/survey.hpp"

namespace picard {

enum class Format { Text, Json, Csv };

// Throws UsageError for anything but "text", "json", "csv".
Format parse_format(std::string_view name);

inline constexpr std::string_view kSchemaVersion = "1";

// Result of a single-curve subcommand.
struct ResultDocument {
  std::string command;
  u64 p = 0;
  std::array<u64, 5> f{};
  int p_mod_3 = 0;
  std::vector<MatrixFp> matrices;
  int rank_h = 0;
  int a_number = 0;
  int p_rank = 0;
};

// Fills every scalar; attaches a matrix in `convention` when given.
ResultDocument make_result_document(const PicardCurve& curve, std::string command,
                                    std::optional<Convention> convention = std::nullopt);

nlohmann::ordered_json to_json(const MatrixFp& m);
nlohmann::ordered_json to_json(const ResultDocument& doc);
nlohmann::ordered_json to_json(const CurveRecord& r);
nlohmann::ordered_json to_json(const OracleMismatch& m);
nlohmann::ordered_json to_json(const SweepReport& report, bool include_timing = false);

// CSV columns for sweep rows, in order.
inline constexpr std::array<std::string_view, 13> kSweepCsvColumns{
    "p",       "trial",  "f0",       "f1",     "f2",          "f3",         "f4",
    "p_mod_3", "rank_H", "a_number", "p_rank", "predicted_a", "matches_theorem"};

// Byte-stable renderings. JSON output ends with a newline.
std::string serialize(const ResultDocument& doc, Format format);
std::string serialize(const SweepReport& report, Format format, bool include_timing = false);
std::string serialize_mismatches(const SweepConfig& config,
                                 const std::vector<OracleMismatch>& mismatches, Format format);

}  // namespace picard
