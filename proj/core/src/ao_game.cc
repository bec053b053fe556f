#include "bgnlab/ao_game.h"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <utility>

#include "bgnlab/attacks.h"
#include "bgnlab/error.h"
#include "bgnlab/hash.h"

namespace bgnlab {

std::string RoleName(const Role& role) {
  switch (role.kind) {
    case Role::Kind::kAggregator:
      return "0";
    case Role::Kind::kParticipant:
      return std::to_string(role.participant);
    case Role::Kind::kRecipient:
      return "recipient";
  }
  return "?";
}

Role ParseRole(std::string_view text) {
  if (text == "recipient") return Role::Recipient();
  if (text == "aggregator" || text == "0") return Role::Aggregator();
  if (text.empty() || text.size() > 9 ||
      !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw Error(ErrorCode::kInvalidArgument, "unknown role '" + std::string(text) + "'");
  }
  return Role::Participant(static_cast<uint32_t>(std::stoul(std::string(text))));
}

GameOracle::GameOracle(GroupPtr group, const GameConfig& config,
                       PartySecrets secrets, int bit, Rng challenger_rng)
    : scheme_(std::move(group), config.scheme, config.message_bound),
      config_(config),
      secrets_(std::move(secrets)),
      bit_(bit),
      rng_(std::move(challenger_rng)),
      ledger_(secrets_.parties()) {}

void GameOracle::Fault(const std::string& why) {
  audit_.push_back("fault " + why);
  throw Error(ErrorCode::kQueryDiscipline, why);
}

NoisyCiphertext GameOracle::Encrypt(uint32_t participant, std::string_view period,
                                    uint64_t m) {
  audit_.push_back("encrypt user=" + std::to_string(participant) + " period=" +
                   std::string(period));
  if (participant == 0 || participant > parties()) {
    Fault("encryption query for unknown user " + std::to_string(participant));
  }
  if (ledger_.Contains(participant, period)) {
    Fault("slot (" + std::to_string(participant) + ", " + std::string(period) +
          ") already used");
  }
  if (m >= message_bound()) Fault("encryption query message out of range");
  NoisyCiphertext ct =
      scheme_.Encrypt(participant, secrets_.share(participant), period, m, rng_);
  ledger_.Record(participant, period);
  transcript_.Append(ToRecord(ct));
  return ct;
}

bool GameOracle::MayCompromise(const Role& role) const {
  auto allowed = [&](const Role& r) {
    return std::find(config_.compromise_set.begin(), config_.compromise_set.end(), r) !=
           config_.compromise_set.end();
  };
  if (allowed(role)) return true;
  if (config_.aggregator_is_recipient) {
    if (role.kind == Role::Kind::kRecipient) return allowed(Role::Aggregator());
    if (role.kind == Role::Kind::kAggregator) return allowed(Role::Recipient());
  }
  return false;
}

BigInt GameOracle::Compromise(const Role& role) {
  audit_.push_back("compromise " + RoleName(role));
  if (role.kind == Role::Kind::kParticipant &&
      (role.participant == 0 || role.participant > parties())) {
    Fault("compromise of unknown user " + std::to_string(role.participant));
  }
  if (!MayCompromise(role)) Fault("role " + RoleName(role) + " not in the compromise set");
  if (role.kind == Role::Kind::kParticipant) {
    for (const auto& e : challenge_entries_) {
      if (e.participant == role.participant) {
        Fault("compromise of challenged user " + std::to_string(role.participant));
      }
    }
  }
  compromised_.push_back(role);
  switch (role.kind) {
    case Role::Kind::kAggregator:
      return secrets_.share(0);
    case Role::Kind::kParticipant:
      return secrets_.share(role.participant);
    case Role::Kind::kRecipient:
      return secrets_.recipient_sk;
  }
  return 0;
}

std::vector<NoisyCiphertext> GameOracle::Challenge(
    std::string_view period, std::span<const ChallengeEntry> entries) {
  audit_.push_back("challenge period=" + std::string(period) +
                   " users=" + std::to_string(entries.size()));
  if (challenged_) Fault("second challenge query");
  if (entries.empty()) Fault("challenge names no users");
  std::vector<uint32_t> seen;
  for (const auto& e : entries) {
    if (e.participant == 0 || e.participant > parties()) {
      Fault("challenge names unknown user " + std::to_string(e.participant));
    }
    if (std::find(seen.begin(), seen.end(), e.participant) != seen.end()) {
      Fault("challenge names user " + std::to_string(e.participant) + " twice");
    }
    seen.push_back(e.participant);
    if (std::find(compromised_.begin(), compromised_.end(),
                  Role::Participant(e.participant)) != compromised_.end()) {
      Fault("challenge on compromised user " + std::to_string(e.participant));
    }
    if (ledger_.Contains(e.participant, period)) {
      Fault("challenge slot (" + std::to_string(e.participant) + ", " +
            std::string(period) + ") already used by an encryption query");
    }
    if (e.m0 >= message_bound() || e.m1 >= message_bound()) {
      Fault("challenge message out of range");
    }
  }
  challenged_ = true;
  challenge_period_ = std::string(period);
  challenge_entries_.assign(entries.begin(), entries.end());
  std::vector<NoisyCiphertext> out;
  for (const auto& e : entries) {
    uint64_t m = bit_ == 0 ? e.m0 : e.m1;
    NoisyCiphertext ct =
        scheme_.Encrypt(e.participant, secrets_.share(e.participant), period, m, rng_);
    ledger_.Record(e.participant, period);
    transcript_.Append(ToRecord(ct));
    out.push_back(ct);
  }
  challenge_cts_ = out;
  return out;
}

namespace {

// Two distinct plaintexts that every scheme here can tell apart: below the
// message bound and, for the q-power attacks, below p.
std::pair<uint64_t, uint64_t> DistinctMessages(const GameOracle& oracle, Rng& coins) {
  uint64_t limit = oracle.message_bound();
  const BigInt& p = oracle.group().params().p_sub;
  if (FitsU64(p)) limit = std::min(limit, ToU64(p));
  if (limit < 2) throw Error(ErrorCode::kInvalidArgument, "message space too small");
  uint64_t m0 = coins.UniformU64(limit);
  uint64_t m1 = (m0 + 1 + coins.UniformU64(limit - 1)) % limit;
  return {m0, m1};
}

int GuessFrom(const AttackVerdict& v, Rng& coins) {
  if (v.outcome == Outcome::kEqual) return 0;
  if (v.outcome == Outcome::kNotEqual) return 1;
  if (v.heuristic_equal) return *v.heuristic_equal ? 0 : 1;
  return coins.Coin() ? 1 : 0;
}

class NullAdversary : public Adversary {
 public:
  std::string_view name() const override { return "null"; }
  int Guess(GameOracle& oracle, Rng& coins) override {
    auto [m0, m1] = DistinctMessages(oracle, coins);
    const ChallengeEntry entry{1, m0, m1};
    oracle.Challenge("period-1", std::span(&entry, 1));
    return coins.Coin() ? 1 : 0;
  }
};

// Shared shape of the pairing attacks: learn one ciphertext of m0 for user 1
// through an encryption query at period-0, challenge user 1 at period-1 with
// (m0, m1), and decide whether the challenge encrypts m0.
class EqualityAdversary : public Adversary {
 public:
  int Guess(GameOracle& oracle, Rng& coins) override {
    std::optional<BigInt> q;
    if (NeedsRecipientKey()) q = oracle.Compromise(Role::Recipient());
    auto [m0, m1] = DistinctMessages(oracle, coins);
    NoisyCiphertext known = oracle.Encrypt(1, "period-0", m0);
    const ChallengeEntry entry{1, m0, m1};
    NoisyCiphertext probe = oracle.Challenge("period-1", std::span(&entry, 1)).at(0);
    return GuessFrom(Decide(oracle.group(), q, known, m0, probe), coins);
  }

 protected:
  virtual bool NeedsRecipientKey() const { return true; }
  virtual AttackVerdict Decide(const BilinearGroup& group,
                               const std::optional<BigInt>& q,
                               const NoisyCiphertext& known, uint64_t m0,
                               const NoisyCiphertext& probe) const = 0;
};

class LlwkrEqualityAdversary : public EqualityAdversary {
 public:
  std::string_view name() const override { return "llwkr-equality"; }

 protected:
  AttackVerdict Decide(const BilinearGroup& group, const std::optional<BigInt>& q,
                       const NoisyCiphertext& known, uint64_t,
                       const NoisyCiphertext& probe) const override {
    return AttackLlwkrEquality(group, *q, known, probe);
  }
};

class FhlKnownMessageAdversary : public EqualityAdversary {
 public:
  std::string_view name() const override { return "fhl-known-message"; }

 protected:
  AttackVerdict Decide(const BilinearGroup& group, const std::optional<BigInt>& q,
                       const NoisyCiphertext& known, uint64_t m0,
                       const NoisyCiphertext& probe) const override {
    return AttackFhlKnownMessage(group, *q, known, FromU64(m0), probe);
  }
};

class ShiOnGAdversary : public EqualityAdversary {
 public:
  std::string_view name() const override { return "shi-on-g"; }

 protected:
  bool NeedsRecipientKey() const override { return false; }
  AttackVerdict Decide(const BilinearGroup& group, const std::optional<BigInt>&,
                       const NoisyCiphertext& known, uint64_t m0,
                       const NoisyCiphertext& probe) const override {
    return AttackShiOnG(group, known, FromU64(m0), probe);
  }
};

class FixedGtAttemptAdversary : public EqualityAdversary {
 public:
  std::string_view name() const override { return "fixed-gt-attempt"; }

 protected:
  AttackVerdict Decide(const BilinearGroup& group, const std::optional<BigInt>& q,
                       const NoisyCiphertext& known, uint64_t,
                       const NoisyCiphertext& probe) const override {
    return AttackFixedGtAttempt(group, *q, known, probe);
  }
};

std::string TrialDigest(const TrialRecord& r) {
  std::string material = r.transcript.ToJsonLines();
  for (const auto& line : r.audit) material += line + "\n";
  material += "b=" + std::to_string(r.bit) + ";guess=" +
              (r.guess ? std::to_string(*r.guess) : "none") + ";aborted=" +
              (r.aborted ? "1" : "0");
  return HexSha256(material).substr(0, 16);
}

void ValidateConfig(const GameConfig& config) {
  if (config.parties == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one participant");
  if (config.trials == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one trial");
  if (config.message_bound < 2) {
    throw Error(ErrorCode::kInvalidArgument, "message bound must be >= 2");
  }
  MakeAdversary(config.adversary);
  for (const Role& r : config.compromise_set) {
    if (r.kind == Role::Kind::kParticipant &&
        (r.participant == 0 || r.participant > config.parties)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "compromise set names unknown user " + std::to_string(r.participant));
    }
  }
}

}  // namespace

std::vector<std::string> BuiltinAdversaries() {
  return {"null", "llwkr-equality", "fhl-known-message", "shi-on-g",
          "fixed-gt-attempt"};
}

std::unique_ptr<Adversary> MakeAdversary(std::string_view name) {
  if (name == "null") return std::make_unique<NullAdversary>();
  if (name == "llwkr-equality") return std::make_unique<LlwkrEqualityAdversary>();
  if (name == "fhl-known-message") return std::make_unique<FhlKnownMessageAdversary>();
  if (name == "shi-on-g") return std::make_unique<ShiOnGAdversary>();
  if (name == "fixed-gt-attempt") return std::make_unique<FixedGtAttemptAdversary>();
  throw Error(ErrorCode::kInvalidArgument, "unknown adversary '" + std::string(name) + "'");
}

TrialRecord RunTrial(const GroupPtr& group, const GameConfig& config,
                     uint64_t index) {
  Rng trial = Rng(config.seed).Fork("ao-game").Fork(index);
  Rng challenger = trial.Fork("challenger");
  Rng coins = trial.Fork("adversary");

  TrialRecord record;
  record.index = index;
  record.secrets = SetupShares(*group, config.parties, challenger);
  record.bit = challenger.Coin() ? 1 : 0;

  GameOracle oracle(group, config, record.secrets, record.bit, challenger.Fork("oracle"));
  std::unique_ptr<Adversary> adversary = MakeAdversary(config.adversary);
  try {
    int guess = adversary->Guess(oracle, coins);
    if (guess != 0 && guess != 1) {
      throw Error(ErrorCode::kQueryDiscipline, "guess must be 0 or 1");
    }
    if (!oracle.challenged()) {
      throw Error(ErrorCode::kQueryDiscipline, "no challenge query was made");
    }
    record.guess = guess;
    record.won = guess == record.bit;
  } catch (const Error& e) {
    record.aborted = true;
    record.fault = e.what();
  }
  record.audit = oracle.audit();
  record.transcript = oracle.transcript();
  record.challenge_period = oracle.challenge_period();
  record.challenge_entries = oracle.challenge_entries();
  record.challenge_cts = oracle.challenge_ciphertexts();
  record.digest = TrialDigest(record);
  return record;
}

GameResult RunGame(const GroupPtr& group, const GameConfig& config,
                   std::vector<TrialRecord>* records) {
  ValidateConfig(config);
  unsigned threads = config.threads != 0 ? config.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<uint64_t>(threads, config.trials));

  std::vector<TrialRecord> all(config.trials);
  auto work = [&](unsigned tid) {
    for (uint64_t i = tid; i < config.trials; i += threads) {
      all[i] = RunTrial(group, config, i);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }

  GameResult result;
  result.trials = config.trials;
  for (const auto& r : all) {
    if (r.aborted) {
      ++result.aborted;
    } else if (r.won) {
      ++result.wins;
    }
    result.digests.push_back(r.digest);
  }
  result.completed = result.trials - result.aborted;
  if (result.completed > 0) {
    result.win_rate = static_cast<double>(result.wins) / static_cast<double>(result.completed);
    result.advantage = std::abs(result.win_rate - 0.5) * 2.0;
  }
  if (records) *records = std::move(all);
  return result;
}

}  // namespace bgnlab
