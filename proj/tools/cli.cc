#include "cli.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bgnlab/ao_game.h"
#include "bgnlab/attacks.h"
#include "bgnlab/error.h"
#include "bgnlab/params.h"
#include "bgnlab/schemes.h"
#include "bgnlab/transcript.h"
#include "json.hpp"

namespace bgnlab::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct CommonOptions {
  std::string seed = "bgnlab";
  std::string out;
  std::string params_file;
  std::string preset;
  int bits_p = 32;
  int bits_q = 32;
};

struct SimulateOptions {
  std::string scheme = "all";
  size_t parties = 10;
  size_t periods = 5;
  uint64_t message_bound = 1024;
  std::optional<uint32_t> drop;
  std::string transcript;
};

struct AttackOptions {
  std::string attack;
  std::string scheme;
  uint64_t trials = 200;
  uint64_t message_bound = kDefaultMessageBound;
  std::optional<double> expect;
  double tolerance = 0.0;
};

struct GameOptions {
  std::string scheme = "fixed-gt";
  std::string adversary = "null";
  size_t parties = 4;
  uint64_t trials = 400;
  std::vector<std::string> compromise = {"recipient"};
  bool aggregator_is_recipient = false;
  unsigned threads = 0;
  uint64_t message_bound = kDefaultMessageBound;
  std::optional<double> expect;
  double tolerance = 0.0;
  std::string audit_log;
  std::string transcript;
};

// Relative paths land in $BGNLAB_OUTPUT_DIR when it is set.
fs::path ResolveOutput(const std::string& path) {
  fs::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) return fs::path(dir) / p;
  }
  return p;
}

void WriteFile(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  f << text;
}

std::string ReadFile(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::kInvalidArgument, "cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

GroupParams LoadParams(const CommonOptions& c) {
  if (!c.params_file.empty()) return ParseParams(ReadFile(c.params_file));
  if (c.preset == "toy") return ToyParams();
  ParamOptions opts;
  opts.bits_p = c.bits_p;
  opts.bits_q = c.bits_q;
  opts.seed = c.seed;
  return GenerateParams(opts);
}

Json BaseReport(std::string_view command, const CommonOptions& c,
                const GroupParams& params, std::string_view scheme) {
  Json r;
  r["schema"] = kReportSchema;
  r["command"] = command;
  r["seed"] = c.seed;
  r["params_digest"] = ParamsDigest(params);
  r["scheme"] = scheme;
  r["metrics"] = Json::object();
  r["status"] = "ok";
  return r;
}

class Stopwatch {
 public:
  double ElapsedMs() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void Emit(Json& report, const Stopwatch& clock, std::string_view command,
          const CommonOptions& c, std::ostream& out) {
  report["timing"] = {{"wall_ms", std::round(clock.ElapsedMs() * 1000.0) / 1000.0}};
  std::string text = report.dump(2) + "\n";
  out << text;
  if (!c.out.empty()) {
    WriteFile(ResolveOutput(c.out), text);
  } else if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    WriteFile(fs::path(dir) / (std::string(command) + ".json"), text);
  }
}

int CheckExpectation(Json& report, double value, const std::optional<double>& expect,
                     double tolerance, std::ostream& err) {
  if (!expect) return kExitOk;
  bool ok = std::fabs(value - *expect) <= tolerance + 1e-12;
  report["assertion"] = {{"expect", *expect}, {"tolerance", tolerance}, {"value", value},
                         {"passed", ok}};
  if (ok) return kExitOk;
  report["status"] = "assertion-failed";
  err << "assertion failed: " << value << " not within " << tolerance << " of " << *expect
      << "\n";
  return kExitAssertion;
}

// --- params ---------------------------------------------------------------

int CmdParams(const CommonOptions& c, std::ostream& out) {
  Stopwatch clock;
  GroupParams params = LoadParams(c);
  std::string text = SerializeParams(params);
  if (c.out.empty()) {
    out << text;
    return kExitOk;
  }
  WriteFile(ResolveOutput(c.out), text);
  Json r = BaseReport("params", c, params, "none");
  r["metrics"] = {{"bits_p", BitLength(params.p_sub)},
                  {"bits_q", BitLength(params.q_sub)},
                  {"field_bits", BitLength(params.field_mod)},
                  {"p_sub", params.p_sub.get_str()},
                  {"q_sub", params.q_sub.get_str()},
                  {"field_mod", params.field_mod.get_str()},
                  {"cofactor", params.cofactor.get_str()}};
  // --out holds the params file, so the report only goes to stdout.
  r["timing"] = {{"wall_ms", std::round(clock.ElapsedMs() * 1000.0) / 1000.0}};
  out << r.dump(2) << "\n";
  return kExitOk;
}

// --- simulate -------------------------------------------------------------

std::string PeriodLabel(size_t k) { return "period-" + std::to_string(k); }

Json SimulateNoisy(const GroupPtr& group, Scheme scheme, const SimulateOptions& o,
                   Rng& rng, Transcript& transcript, bool& all_ok,
                   bool& incomplete) {
  PartySecrets secrets = SetupShares(*group, o.parties, rng);
  ProtocolRun run(NoisyScheme(group, scheme, o.message_bound), secrets);
  uint64_t sum_bound = o.parties * (o.message_bound - 1) + 1;
  Json periods = Json::array();
  for (size_t k = 0; k < o.periods; ++k) {
    std::string t = PeriodLabel(k);
    uint64_t expected = 0;
    for (uint32_t i = 1; i <= o.parties; ++i) {
      uint64_t m = rng.UniformU64(o.message_bound);
      if (o.drop && *o.drop == i) continue;
      expected += m;
      run.Submit(i, t, m, rng);
    }
    Json row = {{"period", t}, {"expected_sum", expected}};
    try {
      uint64_t got = run.DecryptAggregate(run.AggregatePeriod(t), sum_bound);
      row["decrypted_sum"] = got;
      row["match"] = got == expected;
      all_ok = all_ok && got == expected;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIncompletePeriod) throw;
      row["error"] = e.what();
      row["match"] = false;
      incomplete = true;
    }
    periods.push_back(row);
  }
  Transcript own = run.transcript();
  for (const auto& rec : own.records()) transcript.Append(rec);
  return periods;
}

Json SimulateWang(const GroupPtr& group, const SimulateOptions& o, Rng& rng,
                  Transcript& transcript, bool& all_ok, bool& incomplete) {
  WangRun run(group, WangKeyGen(*group, "esp", rng), o.parties, o.message_bound);
  uint64_t sum_bound = o.parties * (o.message_bound - 1) + 1;
  Json periods = Json::array();
  for (size_t k = 0; k < o.periods; ++k) {
    std::string t = PeriodLabel(k);
    uint64_t expected = 0;
    for (uint32_t i = 1; i <= o.parties; ++i) {
      uint64_t m = rng.UniformU64(o.message_bound);
      if (o.drop && *o.drop == i) continue;
      expected += m;
      WangCiphertext ct = run.Submit(i, t, m, rng);
      transcript.Append({"wang", i, t, SerializeWangCiphertext(ct)});
    }
    Json row = {{"period", t}, {"expected_sum", expected}};
    try {
      uint64_t got = run.DecryptAggregate(run.AggregatePeriod(t), sum_bound);
      row["decrypted_sum"] = got;
      row["match"] = got == expected;
      all_ok = all_ok && got == expected;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kIncompletePeriod) throw;
      row["error"] = e.what();
      row["match"] = false;
      incomplete = true;
    }
    periods.push_back(row);
  }
  return periods;
}

int CmdSimulate(const CommonOptions& c, const SimulateOptions& o, std::ostream& out,
                std::ostream& err) {
  Stopwatch clock;
  if (o.drop && (*o.drop == 0 || *o.drop > o.parties)) {
    throw Error(ErrorCode::kInvalidArgument, "--drop must name a participant in 1..parties");
  }
  GroupParams params = LoadParams(c);
  GroupPtr group = MakeGroup(params);

  std::vector<std::string> names;
  if (o.scheme == "all") {
    names = {"shi-base", "fhl14", "llwkr19", "fixed-gt", "wang"};
  } else {
    names = {o.scheme};
  }

  Json r = BaseReport("simulate", c, params, o.scheme);
  Json runs = Json::array();
  Transcript transcript;
  bool all_ok = true;
  bool incomplete = false;
  for (const std::string& name : names) {
    Rng rng = Rng(c.seed).Fork("simulate").Fork(name);
    Json periods = name == "wang"
                       ? SimulateWang(group, o, rng, transcript, all_ok, incomplete)
                       : SimulateNoisy(group, ParseScheme(name), o, rng, transcript,
                                       all_ok, incomplete);
    runs.push_back({{"scheme", name}, {"periods", periods}});
  }
  r["metrics"] = {{"parties", o.parties},
                  {"periods", o.periods},
                  {"message_bound", o.message_bound},
                  {"dropped", o.drop ? Json(*o.drop) : Json(nullptr)},
                  {"runs", runs},
                  {"all_sums_match", all_ok && !incomplete}};
  if (!o.transcript.empty()) WriteFile(ResolveOutput(o.transcript), transcript.ToJsonLines());

  int code = kExitOk;
  if (incomplete) {
    r["status"] = "incomplete-period";
    err << "incomplete period: a participant's ciphertext is missing\n";
    code = kExitInvariant;
  } else if (!all_ok) {
    r["status"] = "sum-mismatch";
    err << "decrypted sums do not match plaintext sums\n";
    code = kExitInvariant;
  }
  Emit(r, clock, "simulate", c, out);
  return code;
}

// --- attack ---------------------------------------------------------------

int CmdAttack(const CommonOptions& c, const AttackOptions& o, std::ostream& out,
              std::ostream& err) {
  Stopwatch clock;
  AttackKind kind = ParseAttack(o.attack);
  GroupParams params = LoadParams(c);
  GroupPtr group = MakeGroup(params);

  AttackTrialOptions topts;
  topts.trials = o.trials;
  topts.message_bound = o.message_bound;
  if (!o.scheme.empty()) topts.scheme = ParseScheme(o.scheme);
  Rng rng = Rng(c.seed).Fork("attack").Fork(o.attack);
  AttackReport rep = RunAttackTrials(group, kind, topts, rng);

  Json r = BaseReport("attack", c, params, rep.scheme);
  r["metrics"] = {{"attack", rep.attack},
                  {"scheme", rep.scheme},
                  {"trials", rep.trials},
                  {"successes", rep.successes},
                  {"accuracy", rep.accuracy},
                  {"evidence_sample", rep.evidence_sample}};
  int code = CheckExpectation(r, rep.accuracy, o.expect, o.tolerance, err);
  Emit(r, clock, "attack", c, out);
  return code;
}

// --- ao-game --------------------------------------------------------------

Json TrialJson(const TrialRecord& t) {
  return {{"index", t.index},
          {"bit", t.bit},
          {"guess", t.guess ? Json(*t.guess) : Json(nullptr)},
          {"won", t.won},
          {"aborted", t.aborted},
          {"fault", t.fault},
          {"audit", t.audit},
          {"digest", t.digest}};
}

int CmdGame(const CommonOptions& c, const GameOptions& o, std::ostream& out,
            std::ostream& err) {
  Stopwatch clock;
  GameConfig config;
  config.scheme = ParseScheme(o.scheme);
  config.parties = o.parties;
  config.trials = o.trials;
  config.adversary = o.adversary;
  config.compromise_set.clear();
  for (const auto& role : o.compromise) config.compromise_set.push_back(ParseRole(role));
  config.aggregator_is_recipient = o.aggregator_is_recipient;
  config.seed = c.seed;
  config.message_bound = o.message_bound;
  config.threads = o.threads;

  GroupParams params = LoadParams(c);
  GroupPtr group = MakeGroup(params);
  std::vector<TrialRecord> records;
  GameResult res = RunGame(group, config, &records);

  std::string all_digests;
  for (const auto& d : res.digests) all_digests += d;
  std::vector<std::string> roles;
  for (const auto& role : config.compromise_set) roles.push_back(RoleName(role));

  Json r = BaseReport("ao-game", c, params, SchemeName(config.scheme));
  r["metrics"] = {{"adversary", config.adversary},
                  {"parties", config.parties},
                  {"compromise_set", roles},
                  {"aggregator_is_recipient", config.aggregator_is_recipient},
                  {"trials", res.trials},
                  {"completed", res.completed},
                  {"aborted", res.aborted},
                  {"wins", res.wins},
                  {"win_rate", res.win_rate},
                  {"advantage", res.advantage},
                  {"trial_digests", res.digests},
                  {"combined_digest", HexSha256(all_digests)}};

  if (!o.audit_log.empty()) {
    std::string lines;
    for (const auto& t : records) lines += TrialJson(t).dump() + "\n";
    WriteFile(ResolveOutput(o.audit_log), lines);
  }
  if (!o.transcript.empty()) {
    Transcript merged;
    for (const auto& t : records) {
      for (auto rec : t.transcript.records()) {
        rec.period = "trial-" + std::to_string(t.index) + "/" + rec.period;
        merged.Append(std::move(rec));
      }
    }
    WriteFile(ResolveOutput(o.transcript), merged.ToJsonLines());
  }

  int code = CheckExpectation(r, res.advantage, o.expect, o.tolerance, err);
  Emit(r, clock, "ao-game", c, out);
  return code;
}

void AddCommon(CLI::App* app, CommonOptions& c, bool group_source) {
  app->add_option("--seed", c.seed, "Seed for parameters and all randomness")
      ->capture_default_str();
  app->add_option("--out", c.out, "Output path (relative paths go under $" +
                                      std::string(kOutputDirEnv) + ")");
  if (!group_source) return;
  auto* file = app->add_option("--params", c.params_file, "Read group parameters from file")
                   ->check(CLI::ExistingFile);
  auto* preset =
      app->add_option("--preset", c.preset, "Named parameter preset")->check(CLI::IsMember({"toy"}));
  auto* bp = app->add_option("--bits-p", c.bits_p, "Bit length of subgroup prime p")
                 ->check(CLI::Range(kMinSubgroupBits, 512))
                 ->capture_default_str();
  auto* bq = app->add_option("--bits-q", c.bits_q, "Bit length of subgroup prime q")
                 ->check(CLI::Range(kMinSubgroupBits, 512))
                 ->capture_default_str();
  file->excludes(preset)->excludes(bp)->excludes(bq);
  preset->excludes(bp)->excludes(bq);
}

std::vector<std::string> SchemeChoices(bool with_wang, bool with_all) {
  std::vector<std::string> v = {"shi-base", "shi-g", "fhl14", "llwkr19", "zlc22", "fixed-gt"};
  if (with_wang) v.push_back("wang");
  if (with_all) v.push_back("all");
  return v;
}

}  // namespace

std::string StripTiming(const std::string& report_json) {
  Json j = Json::parse(report_json);
  j.erase("timing");
  return j.dump(2);
}

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cryptanalysis lab for BGN-based private aggregation", "bgnlab"};
  app.require_subcommand(1);

  CommonOptions common;
  SimulateOptions sim;
  AttackOptions atk;
  GameOptions game;

  auto* params_cmd = app.add_subcommand("params", "Generate and serialize group parameters");
  AddCommon(params_cmd, common, true);

  auto* sim_cmd = app.add_subcommand("simulate", "Run full aggregation rounds and check the sums");
  AddCommon(sim_cmd, common, true);
  sim_cmd->add_option("--scheme", sim.scheme)
      ->check(CLI::IsMember(SchemeChoices(true, true)))
      ->capture_default_str();
  sim_cmd->add_option("--parties", sim.parties)->check(CLI::Range(1, 100000))->capture_default_str();
  sim_cmd->add_option("--periods", sim.periods)->check(CLI::Range(1, 100000))->capture_default_str();
  sim_cmd->add_option("--message-bound", sim.message_bound, "Messages are drawn from [0, bound)")
      ->check(CLI::Range(uint64_t{1}, uint64_t{1} << 20))
      ->capture_default_str();
  sim_cmd->add_option("--drop", sim.drop, "Participant that never submits");
  sim_cmd->add_option("--transcript", sim.transcript, "Write the run transcript (JSON Lines)");

  std::vector<std::string> attack_names;
  for (auto k : AllAttacks()) attack_names.emplace_back(AttackName(k));
  auto* atk_cmd = app.add_subcommand("attack", "Run labeled trials of one attack");
  AddCommon(atk_cmd, common, true);
  atk_cmd->add_option("name", atk.attack, "Attack name")
      ->required()
      ->check(CLI::IsMember(attack_names));
  atk_cmd->add_option("--scheme", atk.scheme, "Ciphertext scheme (default: the attack's target)")
      ->check(CLI::IsMember(SchemeChoices(false, false)));
  atk_cmd->add_option("--trials", atk.trials)->check(CLI::Range(uint64_t{1}, uint64_t{1} << 24))
      ->capture_default_str();
  atk_cmd->add_option("--message-bound", atk.message_bound)
      ->check(CLI::Range(uint64_t{2}, uint64_t{1} << 24))
      ->capture_default_str();
  atk_cmd->add_option("--expect", atk.expect, "Expected accuracy; exit 4 when outside --tolerance");
  atk_cmd->add_option("--tolerance", atk.tolerance)->check(CLI::NonNegativeNumber);

  auto* game_cmd = app.add_subcommand("ao-game", "Estimate adversary advantage in the AO game");
  AddCommon(game_cmd, common, true);
  game_cmd->add_option("--scheme", game.scheme)
      ->check(CLI::IsMember(SchemeChoices(false, false)))
      ->capture_default_str();
  game_cmd->add_option("--adversary", game.adversary)
      ->check(CLI::IsMember(BuiltinAdversaries()))
      ->capture_default_str();
  game_cmd->add_option("--parties", game.parties)->check(CLI::Range(1, 100000))->capture_default_str();
  game_cmd->add_option("--trials", game.trials)->check(CLI::Range(uint64_t{1}, uint64_t{1} << 24))
      ->capture_default_str();
  game_cmd->add_option("--compromise", game.compromise,
                       "Roles the adversary may corrupt: 0 (aggregator), i, recipient")
      ->delimiter(',')
      ->capture_default_str();
  game_cmd->add_flag("--aggregator-is-recipient", game.aggregator_is_recipient,
                     "The aggregator also holds the decryption key");
  game_cmd->add_option("--threads", game.threads, "Worker threads (0 = hardware)");
  game_cmd->add_option("--message-bound", game.message_bound)
      ->check(CLI::Range(uint64_t{2}, uint64_t{1} << 24))
      ->capture_default_str();
  game_cmd->add_option("--expect", game.expect, "Expected advantage; exit 4 when outside --tolerance");
  game_cmd->add_option("--tolerance", game.tolerance)->check(CLI::NonNegativeNumber);
  game_cmd->add_option("--audit-log", game.audit_log, "Write per-trial audit records (JSON Lines)");
  game_cmd->add_option("--transcript", game.transcript, "Write all trial transcripts (JSON Lines)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (params_cmd->parsed()) return CmdParams(common, out);
    if (sim_cmd->parsed()) return CmdSimulate(common, sim, out, err);
    if (atk_cmd->parsed()) return CmdAttack(common, atk, out, err);
    if (game_cmd->parsed()) return CmdGame(common, game, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::kInvalidArgument:
        return kExitUsage;
      case ErrorCode::kIncompletePeriod:
        return kExitInvariant;
      default:
        return kExitRuntime;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace bgnlab::cli
