#include <gtest/gtest.h>

#include <functional>

#include "bgnlab/ao_game.h"
#include "bgnlab/error.h"
#include "testing.h"

namespace bgnlab {
namespace {

using testing::DefaultGroup;

GameConfig Config(Scheme scheme, std::string adversary, uint64_t trials) {
  GameConfig c;
  c.scheme = scheme;
  c.adversary = std::move(adversary);
  c.trials = trials;
  c.threads = 2;
  return c;
}

// Runs an ad-hoc strategy through the oracle of trial 0.
struct Scripted : Adversary {
  std::function<int(GameOracle&, Rng&)> body;
  std::string_view name() const override { return "scripted"; }
  int Guess(GameOracle& o, Rng& c) override { return body(o, c); }
};

std::pair<bool, std::string> RunScripted(const GameConfig& config,
                                         std::function<int(GameOracle&, Rng&)> body) {
  Rng rng("scripted");
  PartySecrets secrets = SetupShares(*DefaultGroup(), config.parties, rng);
  GameOracle oracle(DefaultGroup(), config, secrets, 0, rng.Fork("oracle"));
  Scripted adv;
  adv.body = std::move(body);
  try {
    adv.Guess(oracle, rng);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kQueryDiscipline);
    return {true, e.what()};
  }
  return {false, ""};
}

ChallengeEntry Entry(uint32_t i) { return {i, 1, 2}; }

TEST(RoleTest, ParseAndName) {
  EXPECT_EQ(ParseRole("0"), Role::Aggregator());
  EXPECT_EQ(ParseRole("recipient"), Role::Recipient());
  EXPECT_EQ(ParseRole("3"), Role::Participant(3));
  EXPECT_EQ(RoleName(Role::Participant(3)), "3");
  EXPECT_THROW(ParseRole("x"), Error);
}

TEST(QueryDisciplineTest, SecondChallengeAborts) {
  GameConfig c = Config(Scheme::kFixedGt, "null", 1);
  auto [aborted, why] = RunScripted(c, [](GameOracle& o, Rng&) {
    ChallengeEntry e = Entry(1);
    o.Challenge("t", std::span(&e, 1));
    o.Challenge("u", std::span(&e, 1));
    return 0;
  });
  EXPECT_TRUE(aborted);
  EXPECT_NE(why.find("second challenge"), std::string::npos);
}

TEST(QueryDisciplineTest, ChallengeOnCompromisedUserAborts) {
  GameConfig c = Config(Scheme::kFixedGt, "null", 1);
  c.compromise_set = {Role::Participant(2)};
  auto [aborted, why] = RunScripted(c, [](GameOracle& o, Rng&) {
    o.Compromise(Role::Participant(2));
    ChallengeEntry e = Entry(2);
    o.Challenge("t", std::span(&e, 1));
    return 0;
  });
  EXPECT_TRUE(aborted);
}

TEST(QueryDisciplineTest, CompromiseAfterChallengeOfSameUserAborts) {
  GameConfig c = Config(Scheme::kFixedGt, "null", 1);
  c.compromise_set = {Role::Participant(2)};
  auto [aborted, why] = RunScripted(c, [](GameOracle& o, Rng&) {
    ChallengeEntry e = Entry(2);
    o.Challenge("t", std::span(&e, 1));
    o.Compromise(Role::Participant(2));
    return 0;
  });
  EXPECT_TRUE(aborted);
}

TEST(QueryDisciplineTest, EncryptionCollidingWithChallengeSlotAborts) {
  GameConfig c = Config(Scheme::kFixedGt, "null", 1);
  auto before = RunScripted(c, [](GameOracle& o, Rng&) {
    o.Encrypt(1, "t", 5);
    ChallengeEntry e = Entry(1);
    o.Challenge("t", std::span(&e, 1));
    return 0;
  });
  EXPECT_TRUE(before.first);
  auto after = RunScripted(c, [](GameOracle& o, Rng&) {
    ChallengeEntry e = Entry(1);
    o.Challenge("t", std::span(&e, 1));
    o.Encrypt(1, "t", 5);
    return 0;
  });
  EXPECT_TRUE(after.first);
  auto twice = RunScripted(c, [](GameOracle& o, Rng&) {
    o.Encrypt(1, "t", 5);
    o.Encrypt(1, "t", 6);
    return 0;
  });
  EXPECT_TRUE(twice.first);
}

TEST(QueryDisciplineTest, CompromiseOutsideSetAborts) {
  GameConfig c = Config(Scheme::kFhl14, "null", 1);
  c.compromise_set = {Role::Participant(3)};
  EXPECT_TRUE(RunScripted(c, [](GameOracle& o, Rng&) {
                o.Compromise(Role::Recipient());
                return 0;
              }).first);
  EXPECT_TRUE(RunScripted(c, [](GameOracle& o, Rng&) {
                o.Compromise(Role::Participant(9));
                return 0;
              }).first);
}

TEST(QueryDisciplineTest, AggregatorIsRecipientWiring) {
  GameConfig c = Config(Scheme::kFhl14, "null", 1);
  c.compromise_set = {Role::Aggregator()};
  EXPECT_TRUE(RunScripted(c, [](GameOracle& o, Rng&) {
                o.Compromise(Role::Recipient());
                return 0;
              }).first);
  c.aggregator_is_recipient = true;
  BigInt q;
  EXPECT_FALSE(RunScripted(c, [&](GameOracle& o, Rng&) {
                 q = o.Compromise(Role::Recipient());
                 return 0;
               }).first);
  EXPECT_EQ(q, DefaultGroup()->params().q_sub);
}

TEST(QueryDisciplineTest, MalformedChallengeAborts) {
  GameConfig c = Config(Scheme::kFixedGt, "null", 1);
  EXPECT_TRUE(RunScripted(c, [](GameOracle& o, Rng&) {
                o.Challenge("t", {});
                return 0;
              }).first);
  EXPECT_TRUE(RunScripted(c, [](GameOracle& o, Rng&) {
                std::vector<ChallengeEntry> e = {Entry(1), Entry(1)};
                o.Challenge("t", e);
                return 0;
              }).first);
  EXPECT_TRUE(RunScripted(c, [](GameOracle& o, Rng&) {
                ChallengeEntry e{1, 0, 1u << 16};
                o.Challenge("t", std::span(&e, 1));
                return 0;
              }).first);
}

class NoChallenge : public Adversary {
 public:
  std::string_view name() const override { return "lazy"; }
  int Guess(GameOracle&, Rng&) override { return 0; }
};

TEST(RunGameTest, RejectsBadConfig) {
  GameConfig c = Config(Scheme::kFixedGt, "nope", 10);
  EXPECT_THROW(RunGame(DefaultGroup(), c), Error);
  c.adversary = "null";
  c.parties = 0;
  EXPECT_THROW(RunGame(DefaultGroup(), c), Error);
  c.parties = 3;
  c.compromise_set = {Role::Participant(4)};
  EXPECT_THROW(RunGame(DefaultGroup(), c), Error);
}

// Test-only unblinding: with every share and q, each challenge ciphertext
// must decrypt to m_b of its entry.
TEST(ChallengerHonestyTest, ChallengeEncryptsChosenBit) {
  for (Scheme scheme : AllSchemes()) {
    GameConfig c = Config(scheme, "null", 30);
    std::vector<TrialRecord> records;
    RunGame(DefaultGroup(), c, &records);
    NoisyScheme ns(DefaultGroup(), scheme, c.message_bound);
    const auto& grp = *DefaultGroup();
    for (const auto& t : records) {
      ASSERT_FALSE(t.aborted);
      ASSERT_EQ(t.challenge_cts.size(), t.challenge_entries.size());
      for (size_t k = 0; k < t.challenge_cts.size(); ++k) {
        const auto& e = t.challenge_entries[k];
        const auto& ct = t.challenge_cts[k];
        uint64_t expect = t.bit == 0 ? e.m0 : e.m1;
        // Strip this user's blinding: base^{-s_i}.
        BigInt neg = Mod(-t.secrets.share(e.participant), grp.order());
        GroupElement stripped = ns.Combine(neg, t.challenge_period, std::span(&ct, 1));
        ASSERT_EQ(ns.TryDecrypt(t.secrets.recipient_sk, stripped, c.message_bound), expect)
            << SchemeName(scheme) << " trial " << t.index;
      }
    }
  }
}

// Every built-in strategy respects the rules: 100 audited trials each.
TEST(AuditTest, BuiltinsFollowQueryDiscipline) {
  EXPECT_GE(BuiltinAdversaries().size(), 5u);
  for (const auto& name : BuiltinAdversaries()) {
    for (Scheme scheme : {Scheme::kFhl14, Scheme::kFixedGt}) {
      GameConfig c = Config(scheme, name, 100);
      std::vector<TrialRecord> records;
      GameResult r = RunGame(DefaultGroup(), c, &records);
      EXPECT_EQ(r.aborted, 0u) << name;
      for (const auto& t : records) {
        int challenges = 0;
        for (const auto& line : t.audit) {
          ASSERT_EQ(line.rfind("fault", 0), std::string::npos) << line;
          if (line.rfind("challenge", 0) == 0) ++challenges;
        }
        ASSERT_EQ(challenges, 1) << name;
        for (const auto& e : t.challenge_entries) {
          for (const auto& rec : t.transcript.records()) {
            if (rec.participant == e.participant && rec.period == t.challenge_period) {
              // Exactly the challenge ciphertext occupies the slot.
              ASSERT_EQ(FromRecord(rec), t.challenge_cts[0]);
            }
          }
        }
      }
    }
  }
}

TEST(RunGameTest, DeterministicReplayAcrossThreadCounts) {
  GameConfig c = Config(Scheme::kFhl14, "fhl-known-message", 40);
  c.threads = 1;
  GameResult a = RunGame(DefaultGroup(), c);
  c.threads = 4;
  GameResult b = RunGame(DefaultGroup(), c);
  EXPECT_EQ(a.digests, b.digests);
  EXPECT_EQ(a.wins, b.wins);
  c.seed = "other";
  EXPECT_NE(RunGame(DefaultGroup(), c).digests, a.digests);
}

TEST(RunGameTest, BrokenSchemesLoseEveryTrial) {
  GameResult llwkr = RunGame(DefaultGroup(), Config(Scheme::kLlwkr19, "llwkr-equality", 60));
  EXPECT_EQ(llwkr.advantage, 1.0);
  GameResult fhl = RunGame(DefaultGroup(), Config(Scheme::kFhl14, "fhl-known-message", 60));
  EXPECT_EQ(fhl.advantage, 1.0);
  GameResult naive = RunGame(DefaultGroup(), Config(Scheme::kShiOnG, "shi-on-g", 60));
  EXPECT_EQ(naive.advantage, 1.0);
}

TEST(RunGameTest, AdvantageWithinChanceBand) {
  for (auto [scheme, adv] : {std::pair{Scheme::kFixedGt, "fixed-gt-attempt"},
                             std::pair{Scheme::kShiBase, "shi-on-g"},
                             std::pair{Scheme::kFixedGt, "fhl-known-message"}}) {
    GameResult r = RunGame(DefaultGroup(), Config(scheme, adv, 400));
    EXPECT_EQ(r.completed, 400u);
    EXPECT_LE(r.advantage, 0.14) << adv << " vs " << SchemeName(scheme);
  }
}

}  // namespace
}  // namespace bgnlab
