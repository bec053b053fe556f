#ifndef BGNLAB_ATTACKS_H_
#define BGNLAB_ATTACKS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgnlab/big_int.h"
#include "bgnlab/group.h"
#include "bgnlab/rng.h"
#include "bgnlab/schemes.h"

namespace bgnlab {

enum class Outcome { kEqual, kNotEqual, kRecovered, kInapplicable };

std::string_view OutcomeName(Outcome outcome);

struct AttackVerdict {
  Outcome outcome = Outcome::kInapplicable;
  // Set iff outcome == kRecovered.
  std::optional<uint64_t> recovered;
  // Best-effort equality guess reported alongside kInapplicable when an
  // attack falls back to a heuristic.
  std::optional<bool> heuristic_equal;
  // Group equations that were checked, or why the attack does not apply.
  std::string evidence;
};

// DDH on G via the pairing: g^c == g^{ab} iff e(g, g^c) == e(g^a, g^b).
bool SolveDdhG(const BilinearGroup& group, const CurvePoint& g_a,
               const CurvePoint& g_b, const CurvePoint& candidate);

// The decryptor holding d = H(ID)^x recovers an individual reading:
// A = e(d, X) = W^r, B = Y / A = e(g,g)^m, m = log B. kOutOfRange when B has
// no discrete log below bound.
AttackVerdict AttackWangIndividual(const BilinearGroup& group,
                                   const CurvePoint& d,
                                   const WangCiphertext& ct, uint64_t bound);

// LLWKR19/ZLC22: (CT)^q = (g^q)^m (f^q)^s has no randomness and a fixed
// per-user blinding, so two ciphertexts of one user encrypt the same value iff
// their q-th powers coincide.
AttackVerdict AttackLlwkrEquality(const BilinearGroup& group, const BigInt& q,
                                  const NoisyCiphertext& ct1,
                                  const NoisyCiphertext& ct2);

// FHL14 with one known plaintext m for ct (period t). With ct = CT^q and
// ct' = CT'^q the tuple (H(t), H(t'), ct/g^{qm}, ct'/g^{qm}) is a DDH tuple
// iff m' = m (mod p):
//   e(H(t), ct'/g^{qm}) == e(H(t'), ct/g^{qm}).
AttackVerdict AttackFhlKnownMessage(const BilinearGroup& group, const BigInt& q,
                                    const NoisyCiphertext& known, const BigInt& m,
                                    const NoisyCiphertext& probe);

// The same DDH test against Shi et al. blinding placed directly on the
// pairing group G (no key needed). Ciphertexts in G_T are out of reach:
// there is no pairing on G_T, so the verdict is kInapplicable.
AttackVerdict AttackShiOnG(const BilinearGroup& group,
                           const NoisyCiphertext& known, const BigInt& m,
                           const NoisyCiphertext& probe);

// Tries the FHL strategy on the fixed scheme. After the q-th power each
// ciphertext still carries H_T(t)^{q s}, and deciding the DDH tuple would
// need a pairing on G_T. Reports kInapplicable plus a direct-equality
// heuristic guess whose accuracy the harness measures.
AttackVerdict AttackFixedGtAttempt(const BilinearGroup& group, const BigInt& q,
                                   const NoisyCiphertext& ct1,
                                   const NoisyCiphertext& ct2);

enum class AttackKind {
  kDdhG,
  kWangIndividual,
  kLlwkrEquality,
  kFhlKnownMessage,
  kShiOnG,
  kFixedGtAttempt,
};

std::string_view AttackName(AttackKind kind);
AttackKind ParseAttack(std::string_view name);
std::vector<AttackKind> AllAttacks();
// The scheme each attack targets by default (wang and ddh-g have none).
std::optional<Scheme> DefaultScheme(AttackKind kind);

struct AttackReport {
  std::string attack;
  std::string scheme;
  uint64_t trials = 0;
  uint64_t successes = 0;
  double accuracy = 0.0;
  std::vector<std::string> evidence_sample;
};

struct AttackTrialOptions {
  uint64_t trials = 200;
  // Ciphertext scheme for the equality attacks; DefaultScheme when unset.
  std::optional<Scheme> scheme;
  uint64_t message_bound = kDefaultMessageBound;
  size_t evidence_samples = 3;
};

// Labeled experiment: even trials pair equal messages, odd trials unequal
// ones (for ddh-g: genuine vs perturbed tuples; for wang: random readings).
// A trial succeeds when the verdict (or heuristic guess) matches the label;
// kInapplicable without a heuristic counts as a failure.
AttackReport RunAttackTrials(const GroupPtr& group, AttackKind kind,
                             const AttackTrialOptions& options, Rng& rng);

}  // namespace bgnlab

#endif  // BGNLAB_ATTACKS_H_
