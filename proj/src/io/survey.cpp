#include <algorithm>

#include "fcip/error.hpp"
#include "fcip/io.hpp"

namespace fcip::io {

Survey survey_from_json(const Json& j, const std::string& source) {
  if (!j.is_object()) throw InputError(source + ": survey must be a JSON object");
  Survey s;
  s.source = source;
  s.expert = j.contains("expert") ? require_string(j, "expert") : source;
  try {
    if (j.contains("likert")) {
      const auto& likert = j["likert"];
      if (!likert.is_object()) throw InputError("likert: must be an object");
      for (const auto& [id, score] : likert.items()) {
        if (!score.is_number_integer()) throw InputError("likert." + id + ": must be an integer 1..5");
        const int v = score.get<int>();
        if (v < 1 || v > 5) throw InputError("likert." + id + ": must be an integer 1..5");
        s.likert.emplace_back(id, v);
      }
    }
    if (j.contains("pairwise")) s.pairwise = pairwise_from_json(j["pairwise"]);
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
  if (s.likert.empty() && !s.pairwise) throw InputError(source + ": survey has neither likert nor pairwise data");
  return s;
}

std::vector<Survey> load_surveys(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError("survey directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("no *.json surveys in " + dir.string());
  std::vector<Survey> out;
  for (const auto& f : files) out.push_back(survey_from_json(load_json(f), f.filename().string()));
  return out;
}

std::vector<mcdm::LikertResponses> likert_responses(const std::vector<Survey>& surveys) {
  std::vector<mcdm::LikertResponses> out;
  for (const auto& s : surveys) {
    for (const auto& [id, score] : s.likert) {
      auto it = std::find_if(out.begin(), out.end(), [&](const auto& r) { return r.parameter_id == id; });
      if (it == out.end()) {
        out.push_back({id, {}});
        it = out.end() - 1;
      }
      it->scores.push_back(score);
    }
  }
  return out;
}

std::vector<mcdm::FuzzyPairwiseMatrix> pairwise_matrices(const std::vector<Survey>& surveys) {
  std::vector<mcdm::FuzzyPairwiseMatrix> out;
  for (const auto& s : surveys) {
    if (s.pairwise) out.push_back(*s.pairwise);
  }
  return out;
}

}  // namespace fcip::io
