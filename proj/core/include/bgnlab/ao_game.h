#ifndef BGNLAB_AO_GAME_H_
#define BGNLAB_AO_GAME_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bgnlab/big_int.h"
#include "bgnlab/group.h"
#include "bgnlab/rng.h"
#include "bgnlab/schemes.h"
#include "bgnlab/transcript.h"

namespace bgnlab {

// Who the adversary may corrupt: the aggregator (index 0, holds s_0), a
// participant i >= 1 (holds s_i), or the recipient (holds the BGN key q).
struct Role {
  enum class Kind { kAggregator, kParticipant, kRecipient };

  Kind kind = Kind::kAggregator;
  uint32_t participant = 0;

  static Role Aggregator() { return {Kind::kAggregator, 0}; }
  static Role Participant(uint32_t i) { return {Kind::kParticipant, i}; }
  static Role Recipient() { return {Kind::kRecipient, 0}; }

  friend bool operator==(const Role&, const Role&) = default;
};

// "0", "<i>", "recipient".
std::string RoleName(const Role& role);
Role ParseRole(std::string_view text);

struct GameConfig {
  Scheme scheme = Scheme::kFixedGt;
  size_t parties = 4;
  uint64_t trials = 400;
  std::string adversary = "null";
  std::vector<Role> compromise_set = {Role::Recipient()};
  // FHL14 deployment: the aggregator holds the decryption key, so
  // compromising either role yields both.
  bool aggregator_is_recipient = false;
  std::string seed = "bgnlab";
  uint64_t message_bound = kDefaultMessageBound;
  // 0 = std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct ChallengeEntry {
  uint32_t participant = 0;
  uint64_t m0 = 0;
  uint64_t m1 = 0;
};

// The challenger's side of one trial, as seen by the adversary. Every query
// that breaks the game's rules throws kQueryDiscipline and the trial is
// aborted as an adversary fault.
class GameOracle {
 public:
  GameOracle(GroupPtr group, const GameConfig& config, PartySecrets secrets,
             int bit, Rng challenger_rng);

  const BilinearGroup& group() const { return scheme_.group(); }
  Scheme scheme() const { return scheme_.scheme(); }
  size_t parties() const { return secrets_.parties(); }
  uint64_t message_bound() const { return scheme_.message_bound(); }

  // Ciphertext of m for user i at period t; each (i, t) at most once,
  // including the challenge slots.
  NoisyCiphertext Encrypt(uint32_t participant, std::string_view period,
                          uint64_t m);

  // Returns s_0, s_i or q. Only roles in the configured compromise set, and
  // never a user named in the challenge.
  BigInt Compromise(const Role& role);

  // Single use. Every entry names a distinct, uncompromised user whose
  // (user, period) slot is unused. Returns ciphertexts of m_b in entry order.
  std::vector<NoisyCiphertext> Challenge(std::string_view period,
                                         std::span<const ChallengeEntry> entries);

  const Transcript& transcript() const { return transcript_; }
  const std::vector<std::string>& audit() const { return audit_; }
  bool challenged() const { return challenged_; }
  const std::string& challenge_period() const { return challenge_period_; }
  const std::vector<ChallengeEntry>& challenge_entries() const {
    return challenge_entries_;
  }
  const std::vector<NoisyCiphertext>& challenge_ciphertexts() const {
    return challenge_cts_;
  }

 private:
  bool MayCompromise(const Role& role) const;
  [[noreturn]] void Fault(const std::string& why);

  NoisyScheme scheme_;
  GameConfig config_;
  PartySecrets secrets_;
  int bit_;
  Rng rng_;
  PeriodLedger ledger_;
  Transcript transcript_;
  std::vector<std::string> audit_;
  std::vector<Role> compromised_;
  bool challenged_ = false;
  std::string challenge_period_;
  std::vector<ChallengeEntry> challenge_entries_;
  std::vector<NoisyCiphertext> challenge_cts_;
};

// A strategy over the oracle interface. Returns its guess for b (0 or 1).
class Adversary {
 public:
  virtual ~Adversary() = default;
  virtual std::string_view name() const = 0;
  virtual int Guess(GameOracle& oracle, Rng& coins) = 0;
};

// null, llwkr-equality, fhl-known-message, shi-on-g, fixed-gt-attempt.
std::vector<std::string> BuiltinAdversaries();
std::unique_ptr<Adversary> MakeAdversary(std::string_view name);

struct TrialRecord {
  uint64_t index = 0;
  int bit = 0;
  std::optional<int> guess;
  bool won = false;
  bool aborted = false;
  std::string fault;
  std::vector<std::string> audit;
  Transcript transcript;
  PartySecrets secrets;
  std::string challenge_period;
  std::vector<ChallengeEntry> challenge_entries;
  std::vector<NoisyCiphertext> challenge_cts;
  std::string digest;
};

// One trial with randomness derived from (config.seed, index).
TrialRecord RunTrial(const GroupPtr& group, const GameConfig& config,
                     uint64_t index);

struct GameResult {
  uint64_t trials = 0;
  uint64_t completed = 0;  // trials minus aborted
  uint64_t aborted = 0;
  uint64_t wins = 0;
  double win_rate = 0.0;   // wins / completed
  double advantage = 0.0;  // |win_rate - 1/2| * 2
  std::vector<std::string> digests;
};

// Runs config.trials independent trials, possibly in parallel. When records
// is non-null it receives every TrialRecord in index order.
GameResult RunGame(const GroupPtr& group, const GameConfig& config,
                   std::vector<TrialRecord>* records = nullptr);

}  // namespace bgnlab

#endif  // BGNLAB_AO_GAME_H_
