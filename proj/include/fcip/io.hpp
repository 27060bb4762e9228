#pragma once

// JSON and text renderings of toolkit values, and the survey directory reader.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "fcip/data.hpp"
#include "fcip/fuzzy.hpp"
#include "fcip/mcdm.hpp"
#include "fcip/models.hpp"
#include "fcip/screening.hpp"

namespace fcip::io {

/// Key order is kept as written so documents diff cleanly.
using Json = nlohmann::ordered_json;

Json parse_json(const std::string& text, const std::string& source = "document");
Json load_json(const std::filesystem::path& path);
/// Two-space indented with a trailing newline; the one rendering used for files
/// and HTTP bodies.
std::string dump(const Json& j);
void write_text(const std::filesystem::path& path, const std::string& text);

// Typed field access that throws InputError naming the field.
double require_number(const Json& j, const std::string& field);
std::string require_string(const Json& j, const std::string& field);
const Json& require(const Json& j, const std::string& field);

// ---- core values -------------------------------------------------------------

Json to_json(const Drivers& d);
Json to_json(const DriverBounds& b);
DriverBounds bounds_from_json(const Json& j);

Json to_json(const mcdm::Tfn& t);
mcdm::Tfn tfn_from_json(const Json& j);
Json to_json(const mcdm::FuzzyPairwiseMatrix& m);
mcdm::FuzzyPairwiseMatrix pairwise_from_json(const Json& j);
Json to_json(const mcdm::WeightVector& w);

Json to_json(const screening::SelectionTrace& t);
Json to_json(const screening::AdequacyReport& a, const std::vector<std::string>& names);
Json to_json(const screening::FactorSolution& f, const std::vector<std::string>& names);
Json to_json(const screening::CorrelationMatrix& c);

Json to_json(const models::FittedCostModel& m);
models::FittedCostModel regression_from_json(const Json& j);
Json to_json(const models::MlpModel& m);
models::MlpModel mlp_from_json(const Json& j);
Json to_json(const models::CbrConfig& c);
models::CbrConfig cbr_config_from_json(const Json& j);
Json to_json(const Dataset& ds);
Dataset dataset_from_json(const Json& j, DatasetRole role);
Json to_json(const models::ScenarioSet& s);

Json to_json(const fuzzy::MembershipFunction& mf);
fuzzy::MembershipFunction mf_from_json(const Json& j);
Json to_json(const fuzzy::Partition& p);
fuzzy::Partition partition_from_json(const Json& j);
/// Rules are written with label names rather than indices.
Json to_json(const fuzzy::RuleBase& base);
fuzzy::RuleBase rule_base_from_json(const Json& j);

/// "IF area_ha is v.1_a.5 and ... THEN cost_le is c.3", one rule per line.
std::string rule_listing(const fuzzy::RuleBase& base);

// ---- surveys -----------------------------------------------------------------

/// One expert's document: `{"expert", "likert": {id: score}, "pairwise": {...}}`.
struct Survey {
  std::string expert;
  std::vector<std::pair<std::string, int>> likert;  // document order
  std::optional<mcdm::FuzzyPairwiseMatrix> pairwise;
  std::string source;
};

Survey survey_from_json(const Json& j, const std::string& source);
/// Every *.json file of `dir`, in file-name order.
std::vector<Survey> load_surveys(const std::filesystem::path& dir);

/// Per-parameter score lists across surveys, in first-seen parameter order.
std::vector<mcdm::LikertResponses> likert_responses(const std::vector<Survey>& surveys);
std::vector<mcdm::FuzzyPairwiseMatrix> pairwise_matrices(const std::vector<Survey>& surveys);

// ---- text tables -------------------------------------------------------------

/// Column-aligned plain text. Cells that parse as numbers are right-aligned.
class TextTable {
 public:
  explicit TextTable(std::vector<std::string> header);

  TextTable& row(std::vector<std::string> cells);
  std::string render() const;

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

/// Fixed-point formatting used by the text tables.
std::string fixed(double v, int digits = 4);

}  // namespace fcip::io
