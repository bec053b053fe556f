#ifndef BGNLAB_PARAMS_H_
#define BGNLAB_PARAMS_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bgnlab/big_int.h"
#include "bgnlab/curve.h"

namespace bgnlab {

// A symmetric bilinear group of composite order N = p q, realized as the
// order-N subgroup of y^2 = x^3 + x over F_r with r + 1 = cofactor * N.
struct GroupParams {
  BigInt p_sub;
  BigInt q_sub;
  BigInt n_ord;
  BigInt cofactor;
  BigInt field_mod;
  CurvePoint g;  // order N
  CurvePoint u;  // order N
  CurvePoint h;  // [p]u, order q
  CurvePoint f;  // order N, independent of g

  friend bool operator==(const GroupParams&, const GroupParams&) = default;
};

struct ParamOptions {
  int bits_p = 32;
  int bits_q = 32;
  std::string seed = "bgnlab";
  // Number of cofactor candidates tried before giving up.
  uint64_t max_cofactor_steps = 1u << 20;
};

inline constexpr int kMinSubgroupBits = 8;

// Samples distinct primes of the requested sizes from the seed, then defers
// to ParamsFromPrimes.
GroupParams GenerateParams(const ParamOptions& options);

// Searches cofactors l = 4, 8, 12, ... with gcd(l, N) = 1 until l*N - 1 is
// prime (it is then automatically 3 mod 4), and derives g, u, f by hashing
// seed-bound labels into the order-N subgroup. Deterministic in its inputs.
GroupParams ParamsFromPrimes(const BigInt& p_sub, const BigInt& q_sub,
                             std::string_view seed,
                             uint64_t max_cofactor_steps = 1u << 20);

// p = 5, q = 7, field 139, cofactor 4.
GroupParams ToyParams();

// Human-readable list of violated invariants; empty when the params are valid.
// Includes the pairing non-degeneracy check.
std::vector<std::string> ValidateParams(const GroupParams& params);

// Throws kInvalidArgument listing the first violation.
void CheckParams(const GroupParams& params);

// Canonical text format "bgnlab-params v1"; one "name hex" line per field,
// points as "name x y" or "name inf". ParseParams validates the result.
std::string SerializeParams(const GroupParams& params);
GroupParams ParseParams(std::string_view text);

// Hex SHA-256 of SerializeParams.
std::string ParamsDigest(const GroupParams& params);

}  // namespace bgnlab

#endif  // BGNLAB_PARAMS_H_
