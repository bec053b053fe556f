#include "bgnlab/params.h"

#include <algorithm>
#include <array>
#include <utility>

#include "bgnlab/codec.h"
#include "bgnlab/error.h"
#include "bgnlab/hash.h"
#include "bgnlab/hash_to_curve.h"
#include "bgnlab/pairing.h"
#include "bgnlab/rng.h"

namespace bgnlab {

namespace {

constexpr std::string_view kFormatTag = "bgnlab-params v1";
constexpr int kMaxGeneratorAttempts = 1024;

BigInt RandomPrime(int bits, Rng& rng) {
  BigInt top = BigInt(1) << (bits - 1);
  for (;;) {
    BigInt candidate = top + rng.Uniform(top);
    mpz_setbit(candidate.get_mpz_t(), 0);
    if (IsProbablePrime(candidate)) return candidate;
  }
}

bool HasExactOrder(const SupersingularCurve& curve, const CurvePoint& pt,
                   const BigInt& p, const BigInt& q) {
  return curve.Multiply(p * q, pt).is_identity() &&
         !curve.Multiply(p, pt).is_identity() &&
         !curve.Multiply(q, pt).is_identity();
}

CurvePoint DeriveGenerator(const SupersingularCurve& curve,
                           const BigInt& cofactor, const BigInt& p,
                           const BigInt& q, std::string_view name,
                           const std::string& seed_tag,
                           const std::vector<CurvePoint>& taken = {}) {
  for (int attempt = 0; attempt < kMaxGeneratorAttempts; ++attempt) {
    std::string label = "bgnlab/generator/" + std::string(name) + "/" +
                        seed_tag + "/" + std::to_string(attempt);
    CurvePoint pt = HashToSubgroup(curve, cofactor, label);
    // Tiny groups make collisions with earlier generators likely.
    if (std::find(taken.begin(), taken.end(), pt) != taken.end()) continue;
    if (HasExactOrder(curve, pt, p, q)) return pt;
  }
  throw Error(ErrorCode::kParamGeneration,
              "could not derive an order-N generator for " + std::string(name));
}

}  // namespace

GroupParams GenerateParams(const ParamOptions& options) {
  if (options.bits_p < kMinSubgroupBits || options.bits_q < kMinSubgroupBits) {
    throw Error(ErrorCode::kInvalidArgument,
                "subgroup primes need at least 8 bits");
  }
  Rng rng = Rng(options.seed).Fork("params/primes");
  BigInt p = RandomPrime(options.bits_p, rng);
  BigInt q = RandomPrime(options.bits_q, rng);
  while (q == p) q = RandomPrime(options.bits_q, rng);
  return ParamsFromPrimes(p, q, options.seed, options.max_cofactor_steps);
}

GroupParams ParamsFromPrimes(const BigInt& p_sub, const BigInt& q_sub,
                             std::string_view seed,
                             uint64_t max_cofactor_steps) {
  if (p_sub < 3 || q_sub < 3 || !IsProbablePrime(p_sub) ||
      !IsProbablePrime(q_sub)) {
    throw Error(ErrorCode::kInvalidArgument, "subgroup orders must be odd primes");
  }
  if (p_sub == q_sub) {
    throw Error(ErrorCode::kInvalidArgument,
                "N needs two distinct prime factors (p_sub == q_sub)");
  }
  GroupParams params;
  params.p_sub = p_sub;
  params.q_sub = q_sub;
  params.n_ord = p_sub * q_sub;

  bool found = false;
  for (uint64_t step = 1; step <= max_cofactor_steps; ++step) {
    BigInt cofactor = FromU64(4 * step);
    BigInt g;
    mpz_gcd(g.get_mpz_t(), cofactor.get_mpz_t(), params.n_ord.get_mpz_t());
    if (g != 1) continue;
    BigInt field_mod = cofactor * params.n_ord - 1;
    if (IsProbablePrime(field_mod)) {
      params.cofactor = std::move(cofactor);
      params.field_mod = std::move(field_mod);
      found = true;
      break;
    }
  }
  if (!found) {
    throw Error(ErrorCode::kParamGeneration,
                "no prime field modulus within the cofactor search bound");
  }

  SupersingularCurve curve(params.field_mod);
  const std::string seed_tag = HexSha256(seed).substr(0, 32);
  params.g = DeriveGenerator(curve, params.cofactor, p_sub, q_sub, "g", seed_tag);
  params.u = DeriveGenerator(curve, params.cofactor, p_sub, q_sub, "u", seed_tag,
                             {params.g});
  params.f = DeriveGenerator(curve, params.cofactor, p_sub, q_sub, "f", seed_tag,
                             {params.g, params.u});
  params.h = curve.Multiply(p_sub, params.u);
  return params;
}

GroupParams ToyParams() { return ParamsFromPrimes(5, 7, "toy"); }

std::vector<std::string> ValidateParams(const GroupParams& params) {
  std::vector<std::string> v;
  const BigInt& p = params.p_sub;
  const BigInt& q = params.q_sub;
  if (p < 3 || !IsProbablePrime(p)) v.push_back("p_sub is not an odd prime");
  if (q < 3 || !IsProbablePrime(q)) v.push_back("q_sub is not an odd prime");
  if (p == q) v.push_back("p_sub == q_sub");
  if (params.n_ord != p * q) v.push_back("n_ord != p_sub * q_sub");
  if (!IsProbablePrime(params.field_mod)) v.push_back("field_mod is not prime");
  if (Mod(params.field_mod, 4) != 3) v.push_back("field_mod != 3 (mod 4)");
  if (params.field_mod + 1 != params.cofactor * params.n_ord) {
    v.push_back("field_mod + 1 != cofactor * n_ord");
  }
  BigInt gcd;
  mpz_gcd(gcd.get_mpz_t(), params.cofactor.get_mpz_t(), params.n_ord.get_mpz_t());
  if (gcd != 1) v.push_back("gcd(cofactor, n_ord) != 1");
  if (!v.empty() || params.field_mod < 3) return v;

  SupersingularCurve curve(params.field_mod);
  const std::array<std::pair<const char*, const CurvePoint*>, 4> points = {{
      {"g", &params.g}, {"u", &params.u}, {"h", &params.h}, {"f", &params.f}}};
  for (const auto& [name, pt] : points) {
    if (!curve.Contains(*pt)) v.push_back(std::string(name) + " is off the curve");
  }
  if (!v.empty()) return v;

  for (const auto& [name, pt] : {points[0], points[1], points[3]}) {
    if (!HasExactOrder(curve, *pt, p, q)) {
      v.push_back(std::string(name) + " does not have exact order N");
    }
  }
  if (params.h.is_identity() || !curve.Multiply(q, params.h).is_identity()) {
    v.push_back("h does not have exact order q_sub");
  }
  if (params.h != curve.Multiply(p, params.u)) v.push_back("h != [p_sub]u");
  if (v.empty()) {
    TatePairing pairing(curve, params.n_ord);
    if (pairing.Pair(params.g, params.g).is_one()) {
      v.push_back("pairing(g, g) == 1 (degenerate)");
    }
  }
  return v;
}

void CheckParams(const GroupParams& params) {
  auto violations = ValidateParams(params);
  if (!violations.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "invalid group params: " + violations[0]);
  }
}

std::string SerializeParams(const GroupParams& params) {
  std::string out(kFormatTag);
  out += "\n";
  auto scalar = [&](const char* name, const BigInt& v) {
    out += name;
    out += " " + ToHex(v) + "\n";
  };
  auto point = [&](const char* name, const CurvePoint& pt) {
    out += name;
    out += " " + EncodePoint(pt) + "\n";
  };
  scalar("p_sub", params.p_sub);
  scalar("q_sub", params.q_sub);
  scalar("n_ord", params.n_ord);
  scalar("cofactor", params.cofactor);
  scalar("field_mod", params.field_mod);
  point("g", params.g);
  point("u", params.u);
  point("h", params.h);
  point("f", params.f);
  return out;
}

GroupParams ParseParams(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    size_t nl = text.find('\n');
    if (nl == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "params text must end with a newline");
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  static constexpr std::array<std::string_view, 9> kNames = {
      "p_sub", "q_sub", "n_ord", "cofactor", "field_mod", "g", "u", "h", "f"};
  if (lines.size() != kNames.size() + 1 || lines[0] != kFormatTag) {
    throw Error(ErrorCode::kParse, "expected '" + std::string(kFormatTag) +
                                       "' followed by 9 field lines");
  }
  auto value = [&](size_t i) {
    std::string_view line = lines[i + 1];
    std::string_view name = kNames[i];
    if (!line.starts_with(name) || line.size() <= name.size() ||
        line[name.size()] != ' ') {
      throw Error(ErrorCode::kParse, "expected field '" + std::string(name) + "'");
    }
    return line.substr(name.size() + 1);
  };
  GroupParams params;
  params.p_sub = FromHex(value(0));
  params.q_sub = FromHex(value(1));
  params.n_ord = FromHex(value(2));
  params.cofactor = FromHex(value(3));
  params.field_mod = FromHex(value(4));
  params.g = DecodePoint(value(5));
  params.u = DecodePoint(value(6));
  params.h = DecodePoint(value(7));
  params.f = DecodePoint(value(8));
  CheckParams(params);
  return params;
}

std::string ParamsDigest(const GroupParams& params) {
  return HexSha256(SerializeParams(params));
}

}  // namespace bgnlab
