#ifndef BGNLAB_TRANSCRIPT_H_
#define BGNLAB_TRANSCRIPT_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

namespace bgnlab {

// One submitted ciphertext as seen on the wire: scheme name, participant
// index, period label and the level-tagged body encoding.
struct TranscriptRecord {
  std::string scheme;
  uint32_t participant = 0;
  std::string period;
  std::string body;

  friend bool operator==(const TranscriptRecord&, const TranscriptRecord&) = default;
};

// Append-only record sequence, stored as JSON Lines:
//   {"body":"G 1f 2a","participant":3,"period":"t1","scheme":"fhl14"}
class Transcript {
 public:
  void Append(TranscriptRecord record) { records_.push_back(std::move(record)); }

  const std::vector<TranscriptRecord>& records() const { return records_; }
  size_t size() const { return records_.size(); }

  // Role-scoped views.
  std::vector<TranscriptRecord> ForParticipant(uint32_t participant) const;
  std::vector<TranscriptRecord> ForPeriod(const std::string& period) const;

  std::string ToJsonLines() const;
  void WriteJsonLines(std::ostream& out) const;
  static Transcript ReadJsonLines(std::istream& in);
  static Transcript FromJsonLines(const std::string& text);

 private:
  std::vector<TranscriptRecord> records_;
};

}  // namespace bgnlab

#endif  // BGNLAB_TRANSCRIPT_H_
