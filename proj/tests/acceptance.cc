// Runs every acceptance criterion and prints one PASS/FAIL line per
// criterion. Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "bgnlab/ao_game.h"
#include "bgnlab/attacks.h"
#include "bgnlab/bgn.h"
#include "bgnlab/error.h"
#include "bgnlab/params.h"
#include "bgnlab/schemes.h"
#include "cli.h"

namespace bgnlab {
namespace {

struct Check {
  bool pass = true;
  std::string detail;

  void Require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

GroupPtr Fresh32() {
  ParamOptions o;
  o.seed = "acceptance";
  return MakeGroup(GenerateParams(o));
}

Check PairingAlgebra() {
  Check out;
  auto start = std::chrono::steady_clock::now();
  GroupPtr gp = Fresh32();
  const auto& grp = *gp;
  Rng rng("acceptance/1");
  for (int i = 0; i < 100; ++i) {
    BigInt a = rng.Uniform(grp.order()), b = rng.Uniform(grp.order());
    out.Require(grp.Pair(grp.Mul(a, grp.g()), grp.Mul(b, grp.g())) ==
                    grp.GtPow(grp.gt_generator(), a * b),
                "bilinearity failed at sample " + std::to_string(i));
  }
  const GtElement& egg = grp.gt_generator();
  out.Require(grp.GtPow(egg, grp.order()).is_one(), "e(g,g)^N != 1");
  out.Require(!grp.GtPow(egg, grp.params().p_sub).is_one(), "e(g,g)^p == 1");
  out.Require(!grp.GtPow(egg, grp.params().q_sub).is_one(), "e(g,g)^q == 1");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.Require(secs < 30.0, "took " + std::to_string(secs) + " s");
  if (out.pass) out.detail = "100/100 bilinear, ord e(g,g) = N, " + std::to_string(secs) + " s";
  return out;
}

Check BgnCorrectness() {
  Check out;
  GroupPtr gp = Fresh32();
  BgnKeyPair kp = BgnKeyGen(gp);
  Rng rng("acceptance/2");
  for (int i = 0; i < 100; ++i) {
    uint64_t a = rng.UniformU64(1u << 10), b = rng.UniformU64(1u << 10);
    BgnCiphertext c = BgnAdd(kp.pk, BgnEncrypt(kp.pk, a, rng), BgnEncrypt(kp.pk, b, rng));
    out.Require(BgnDecrypt(kp.pk, kp.sk, c, 1u << 11) == a + b, "additive round-trip");
  }
  for (int i = 0; i < 50; ++i) {
    uint64_t a = rng.UniformU64(1u << 8), b = rng.UniformU64(1u << 8);
    BgnCiphertext c = BgnMultiplyOnce(kp.pk, BgnEncrypt(kp.pk, a, rng), BgnEncrypt(kp.pk, b, rng));
    out.Require(BgnDecrypt(kp.pk, kp.sk, c, 1u << 16) == a * b, "multiplicative round-trip");
  }
  GroupPtr toy = MakeGroup(ToyParams());
  out.Require(toy->params().field_mod == 139, "toy field is not 139");
  BgnKeyPair tk = BgnKeyGen(toy);
  for (unsigned long r = 0; r < 35; ++r) {
    for (uint64_t m = 0; m < 5; ++m) {
      out.Require(BgnDecrypt(tk.pk, tk.sk, BgnEncryptWithNoise(tk.pk, m, r), 5) == m,
                  "toy sweep failed at r=" + std::to_string(r));
    }
  }
  if (out.pass) out.detail = "100 add + 50 mul round-trips, toy sweep r in Z_35";
  return out;
}

bool IsIncomplete(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == ErrorCode::kIncompletePeriod;
  }
  return false;
}

Check AggregationCorrectness() {
  Check out;
  GroupPtr gp = Fresh32();
  constexpr uint32_t kParties = 10;
  constexpr uint64_t kBound = 1u << 10;
  constexpr uint64_t kSumBound = kParties * (kBound - 1) + 1;
  Rng rng("acceptance/3");
  for (Scheme scheme : {Scheme::kShiBase, Scheme::kFhl14, Scheme::kLlwkr19, Scheme::kFixedGt}) {
    std::string name(SchemeName(scheme));
    ProtocolRun run(NoisyScheme(gp, scheme, kBound), SetupShares(*gp, kParties, rng));
    for (int t = 0; t < 5; ++t) {
      std::string period = "period-" + std::to_string(t);
      uint64_t sum = 0;
      for (uint32_t i = 1; i <= kParties; ++i) {
        uint64_t m = rng.UniformU64(kBound);
        sum += m;
        run.Submit(i, period, m, rng);
      }
      out.Require(run.DecryptAggregate(run.AggregatePeriod(period), kSumBound) == sum,
                  name + " sum mismatch at " + period);
    }
    for (uint32_t drop = 1; drop <= kParties; ++drop) {
      std::string period = "drop-" + std::to_string(drop);
      for (uint32_t i = 1; i <= kParties; ++i) {
        if (i != drop) run.Submit(i, period, rng.UniformU64(kBound), rng);
      }
      out.Require(IsIncomplete([&] { run.AggregatePeriod(period); }),
                  name + " accepted a period missing participant " + std::to_string(drop));
    }
  }
  WangRun wang(gp, WangKeyGen(*gp, "esp", rng), kParties, kBound);
  for (int t = 0; t < 5; ++t) {
    std::string period = "period-" + std::to_string(t);
    uint64_t sum = 0;
    for (uint32_t i = 1; i <= kParties; ++i) {
      uint64_t m = rng.UniformU64(kBound);
      sum += m;
      wang.Submit(i, period, m, rng);
    }
    out.Require(wang.DecryptAggregate(wang.AggregatePeriod(period), kSumBound) == sum,
                "wang sum mismatch at " + period);
  }
  for (uint32_t drop = 1; drop <= kParties; ++drop) {
    std::string period = "drop-" + std::to_string(drop);
    for (uint32_t i = 1; i <= kParties; ++i) {
      if (i != drop) wang.Submit(i, period, rng.UniformU64(kBound), rng);
    }
    out.Require(IsIncomplete([&] { wang.AggregatePeriod(period); }),
                "wang accepted a period missing participant " + std::to_string(drop));
  }
  if (out.pass) out.detail = "5 schemes x 5 periods exact; every single drop rejected";
  return out;
}

Check WangBreak() {
  Check out;
  GroupPtr gp = Fresh32();
  Rng rng("acceptance/4");
  WangKeys keys = WangKeyGen(*gp, "esp", rng);
  int recovered = 0;
  for (int i = 0; i < 100; ++i) {
    uint64_t m = rng.UniformU64(1u << 16);
    AttackVerdict v = AttackWangIndividual(
        *gp, keys.decryption_key, WangEncrypt(*gp, keys.encryption_key, m, rng), 1u << 16);
    if (v.outcome == Outcome::kRecovered && v.recovered == m) ++recovered;
  }
  out.Require(recovered == 100, std::to_string(recovered) + "/100 recovered");
  if (out.pass) out.detail = "100/100 individual readings recovered";
  return out;
}

Check AccuracyOne(AttackKind kind, const std::string& seed) {
  Check out;
  GroupPtr gp = Fresh32();
  Rng rng(seed);
  AttackTrialOptions o;
  o.trials = 200;
  AttackReport r = RunAttackTrials(gp, kind, o, rng);
  out.Require(r.trials == 200 && r.successes == 200,
              r.attack + " accuracy " + std::to_string(r.accuracy));
  out.detail = r.attack + " vs " + r.scheme + ": " + std::to_string(r.successes) + "/200";
  return out;
}

Check FhlBreak() {
  Check out = AccuracyOne(AttackKind::kFhlKnownMessage, "acceptance/6");
  GroupPtr gp = Fresh32();
  const BigInt& p = gp->params().p_sub;
  Rng rng("acceptance/6b");
  PartySecrets s = SetupShares(*gp, 1, rng);
  NoisyScheme ns(gp, Scheme::kFhl14);
  auto known = ns.EncryptWithNoise(1, s.share(1), "t", 123, rng.Uniform(gp->order()));
  auto probe = ns.EncryptWithNoise(1, s.share(1), "t'", 123 + p, rng.Uniform(gp->order()));
  AttackVerdict v = AttackFhlKnownMessage(*gp, s.recipient_sk, known, 123, probe);
  out.Require(v.outcome == Outcome::kEqual, "m' = m + p_sub was not reported equal");
  if (out.pass) out.detail += "; m' = m + p_sub -> equal";
  return out;
}

Check GameAdvantage(const std::vector<std::tuple<Scheme, std::string, uint64_t>>& runs,
                    bool broken) {
  Check out;
  GroupPtr gp = Fresh32();
  std::ostringstream detail;
  for (const auto& [scheme, adversary, trials] : runs) {
    GameConfig c;
    c.scheme = scheme;
    c.adversary = adversary;
    c.trials = trials;
    c.seed = "acceptance/game";
    GameResult r = RunGame(gp, c);
    std::string label = adversary + " vs " + std::string(SchemeName(scheme));
    out.Require(r.aborted == 0, label + " aborted trials");
    if (broken) {
      out.Require(r.advantage == 1.0, label + " advantage " + std::to_string(r.advantage));
    } else {
      out.Require(r.advantage <= 0.14, label + " advantage " + std::to_string(r.advantage));
    }
    detail << label << "=" << r.advantage << " ";
  }
  if (out.pass) out.detail = detail.str();
  return out;
}

uint64_t BruteDlog(const BilinearGroup& grp, const CurvePoint& target) {
  for (uint64_t k = 0; k < 35; ++k) {
    if (grp.Mul(k, grp.g()) == target) return k;
  }
  throw Error(ErrorCode::kOutOfRange, "point outside <g>");
}

Check ValidityObservation() {
  Check out;
  GroupPtr toy = MakeGroup(ToyParams());
  BgnKeyPair kp = BgnKeyGen(toy);
  Rng rng("acceptance/10");
  uint64_t k_f = BruteDlog(*toy, toy->f());
  int agree = 0, total = 0;
  for (Scheme scheme : {Scheme::kFhl14, Scheme::kLlwkr19}) {
    NoisyScheme ns(toy, scheme, 5);
    for (uint32_t i = 0; i < 200; ++i) {
      std::string period = "t" + std::to_string(i % 7);
      uint64_t k = scheme == Scheme::kFhl14 ? BruteDlog(*toy, toy->HashToG(period)) : k_f;
      uint64_t s = rng.UniformU64(35), m = rng.UniformU64(5);
      auto ct = ns.EncryptWithNoise(1, s, period, m, rng.Uniform(35));
      uint64_t got = BgnDecrypt(kp.pk, kp.sk, BgnCiphertext(std::get<CurvePoint>(ct.body)), 5);
      agree += got == (m + k * s) % 5;
      ++total;
    }
  }
  out.Require(agree == total, std::to_string(agree) + "/" + std::to_string(total));
  if (out.pass) out.detail = std::to_string(agree) + "/" + std::to_string(total) + " agree";
  return out;
}

std::string RunReport(const std::vector<std::string>& args, int* code) {
  std::ostringstream out, err;
  *code = cli::RunCli(args, out, err);
  return out.str();
}

Check Reproducibility() {
  Check out;
  std::vector<std::vector<std::string>> commands = {
      {"params", "--seed", "repro"},
      {"params", "--preset", "toy"},
      {"simulate", "--seed", "repro", "--parties", "10", "--periods", "5"},
      {"ao-game", "--seed", "repro", "--scheme", "fhl14", "--adversary", "fhl-known-message",
       "--trials", "20"},
      {"ao-game", "--seed", "repro", "--trials", "20", "--threads", "1"},
  };
  for (AttackKind k : AllAttacks()) {
    commands.push_back({"attack", std::string(AttackName(k)), "--seed", "repro", "--trials", "20"});
  }
  for (const auto& args : commands) {
    int c1 = 0, c2 = 0;
    std::string a = RunReport(args, &c1);
    std::string b = RunReport(args, &c2);
    std::string label = args[0] + (args.size() > 1 ? " " + args[1] : "");
    out.Require(c1 == 0 && c2 == 0, label + " exited nonzero");
    if (args[0] == "params") {
      out.Require(a == b, label + " output differs");
    } else {
      out.Require(cli::StripTiming(a) == cli::StripTiming(b), label + " report differs");
    }
  }
  // Thread count does not change the game report.
  int c = 0;
  std::string one = RunReport({"ao-game", "--seed", "repro", "--trials", "30", "--threads", "1"}, &c);
  std::string four = RunReport({"ao-game", "--seed", "repro", "--trials", "30", "--threads", "4"}, &c);
  out.Require(cli::StripTiming(one) == cli::StripTiming(four), "ao-game depends on thread count");

  GroupPtr gp = Fresh32();
  std::string ptext = SerializeParams(gp->params());
  out.Require(SerializeParams(ParseParams(ptext)) == ptext, "params text round-trip");
  out.Require(ParseParams(ptext) == gp->params(), "params value round-trip");

  Rng rng("acceptance/11");
  BgnKeyPair kp = BgnKeyGen(gp);
  BgnCiphertext g1 = BgnEncrypt(kp.pk, 77, rng);
  for (const auto& ct : {g1, BgnMultiplyOnce(kp.pk, g1, g1)}) {
    std::string s = SerializeCiphertext(ct);
    out.Require(SerializeCiphertext(ParseCiphertext(s)) == s && ParseCiphertext(s) == ct,
                "BGN ciphertext round-trip");
  }
  PartySecrets secrets = SetupShares(*gp, 2, rng);
  for (Scheme scheme : AllSchemes()) {
    NoisyScheme ns(gp, scheme);
    NoisyCiphertext ct = ns.Encrypt(1, secrets.share(1), "t", 5, rng);
    Transcript t;
    t.Append(ToRecord(ct));
    std::string text = t.ToJsonLines();
    Transcript back = Transcript::FromJsonLines(text);
    out.Require(back.ToJsonLines() == text && FromRecord(back.records()[0]) == ct,
                std::string(SchemeName(scheme)) + " ciphertext round-trip");
  }
  WangKeys wk = WangKeyGen(*gp, "esp", rng);
  WangCiphertext wc = WangEncrypt(*gp, wk.encryption_key, 9, rng);
  std::string ws = SerializeWangCiphertext(wc);
  out.Require(SerializeWangCiphertext(ParseWangCiphertext(ws)) == ws, "wang ciphertext round-trip");
  if (out.pass) {
    out.detail = std::to_string(commands.size()) + " commands replayed identically; "
                 "params and ciphertexts round-trip";
  }
  return out;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Check()> run;
};

}  // namespace
}  // namespace bgnlab

int main() {
  using namespace bgnlab;
  const std::vector<Criterion> criteria = {
      {1, "pairing algebra", PairingAlgebra},
      {2, "BGN correctness", BgnCorrectness},
      {3, "aggregation correctness", AggregationCorrectness},
      {4, "Wang individual decryption", WangBreak},
      {5, "LLWKR19/ZLC22 equality attack",
       [] { return AccuracyOne(AttackKind::kLlwkrEquality, "acceptance/5"); }},
      {6, "FHL14 known-message attack", FhlBreak},
      {7, "DDH solver on G", [] { return AccuracyOne(AttackKind::kDdhG, "acceptance/7"); }},
      {8, "AO game, broken schemes",
       [] {
         return GameAdvantage({{Scheme::kLlwkr19, "llwkr-equality", 100},
                               {Scheme::kFhl14, "fhl-known-message", 100}},
                              true);
       }},
      {9, "AO game, fixed scheme and null adversary",
       [] {
         std::vector<std::tuple<Scheme, std::string, uint64_t>> runs = {
             {Scheme::kFixedGt, "fixed-gt-attempt", 400}, {Scheme::kShiBase, "shi-on-g", 400}};
         for (Scheme s : AllSchemes()) runs.emplace_back(s, "null", 400);
         return GameAdvantage(runs, false);
       }},
      {10, "noisy ciphertexts are valid BGN ciphertexts", ValidityObservation},
      {11, "reproducibility and serialization", Reproducibility},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Check o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::printf("%s [%d] %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
