#include <benchmark/benchmark.h>

#include <map>
#include <string>

#include "bgnlab/ao_game.h"
#include "bgnlab/bgn.h"
#include "bgnlab/params.h"
#include "bgnlab/schemes.h"

namespace bgnlab {
namespace {

// One group per subgroup size; 32 bits is what the lab runs at by default.
const GroupPtr& Group(int bits) {
  static std::map<int, GroupPtr> cache;
  auto it = cache.find(bits);
  if (it == cache.end()) {
    ParamOptions o;
    o.bits_p = o.bits_q = bits;
    it = cache.emplace(bits, MakeGroup(GenerateParams(o))).first;
  }
  return it->second;
}

void BM_GenerateParams(benchmark::State& state) {
  ParamOptions o;
  o.bits_p = o.bits_q = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(GenerateParams(o));
}
BENCHMARK(BM_GenerateParams)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_ScalarMul(benchmark::State& state) {
  const auto& grp = *Group(static_cast<int>(state.range(0)));
  Rng rng("bench-mul");
  BigInt k = rng.Uniform(grp.order());
  for (auto _ : state) benchmark::DoNotOptimize(grp.Mul(k, grp.g()));
}
BENCHMARK(BM_ScalarMul)->Arg(32)->Arg(64)->Arg(128);

void BM_Pairing(benchmark::State& state) {
  const auto& grp = *Group(static_cast<int>(state.range(0)));
  CurvePoint a = grp.HashToG("a"), b = grp.HashToG("b");
  for (auto _ : state) benchmark::DoNotOptimize(grp.Pair(a, b));
}
BENCHMARK(BM_Pairing)->Arg(32)->Arg(64)->Arg(128);

void BM_GtPow(benchmark::State& state) {
  const auto& grp = *Group(32);
  Rng rng("bench-gtpow");
  BigInt k = rng.Uniform(grp.order());
  for (auto _ : state) benchmark::DoNotOptimize(grp.GtPow(grp.gt_generator(), k));
}
BENCHMARK(BM_GtPow);

// Decryption cost is dominated by the bounded dlog.
void BM_BgnDecrypt(benchmark::State& state) {
  BgnKeyPair keys = BgnKeyGen(Group(32));
  Rng rng("bench-bgn");
  uint64_t bound = static_cast<uint64_t>(state.range(0));
  BgnCiphertext c = BgnEncrypt(keys.pk, bound - 1, rng, bound);
  for (auto _ : state) benchmark::DoNotOptimize(BgnDecrypt(keys.pk, keys.sk, c, bound));
}
BENCHMARK(BM_BgnDecrypt)->RangeMultiplier(16)->Range(1 << 8, 1 << 20);

void BM_NoisyEncrypt(benchmark::State& state) {
  Scheme scheme = AllSchemes().at(static_cast<size_t>(state.range(0)));
  state.SetLabel(std::string(SchemeName(scheme)));
  NoisyScheme ns(Group(32), scheme);
  Rng rng("bench-enc");
  PartySecrets secrets = SetupShares(ns.group(), 1, rng);
  uint64_t t = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ns.Encrypt(1, secrets.share(1), "period-" + std::to_string(t++), 7, rng));
  }
}
BENCHMARK(BM_NoisyEncrypt)->DenseRange(0, static_cast<int>(AllSchemes().size()) - 1);

void BM_AoGameTrial(benchmark::State& state) {
  GameConfig c;
  c.scheme = Scheme::kFixedGt;
  c.adversary = "fixed-gt-attempt";
  uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(RunTrial(Group(32), c, i++));
}
BENCHMARK(BM_AoGameTrial)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace bgnlab

BENCHMARK_MAIN();
