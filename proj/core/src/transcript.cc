#include "bgnlab/transcript.h"

#include <sstream>

#include "bgnlab/error.h"
#include "json.hpp"

namespace bgnlab {

using nlohmann::json;

std::vector<TranscriptRecord> Transcript::ForParticipant(uint32_t participant) const {
  std::vector<TranscriptRecord> out;
  for (const auto& r : records_) {
    if (r.participant == participant) out.push_back(r);
  }
  return out;
}

std::vector<TranscriptRecord> Transcript::ForPeriod(const std::string& period) const {
  std::vector<TranscriptRecord> out;
  for (const auto& r : records_) {
    if (r.period == period) out.push_back(r);
  }
  return out;
}

std::string Transcript::ToJsonLines() const {
  std::ostringstream out;
  WriteJsonLines(out);
  return out.str();
}

void Transcript::WriteJsonLines(std::ostream& out) const {
  for (const auto& r : records_) {
    json j = {{"scheme", r.scheme},
              {"participant", r.participant},
              {"period", r.period},
              {"body", r.body}};
    out << j.dump() << "\n";
  }
}

Transcript Transcript::ReadJsonLines(std::istream& in) {
  Transcript t;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      json j = json::parse(line);
      TranscriptRecord r;
      r.scheme = j.at("scheme").get<std::string>();
      r.participant = j.at("participant").get<uint32_t>();
      r.period = j.at("period").get<std::string>();
      r.body = j.at("body").get<std::string>();
      t.Append(std::move(r));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::kParse, "transcript line " + std::to_string(lineno) +
                                         ": " + e.what());
    }
  }
  return t;
}

Transcript Transcript::FromJsonLines(const std::string& text) {
  std::istringstream in(text);
  return ReadJsonLines(in);
}

}  // namespace bgnlab
