#include "bgnlab/attacks.h"

#include "bgnlab/dlog.h"
#include "bgnlab/error.h"

namespace bgnlab {

namespace {

AttackVerdict Inapplicable(std::string reason) {
  AttackVerdict v;
  v.outcome = Outcome::kInapplicable;
  v.evidence = std::move(reason);
  return v;
}

AttackVerdict Decided(bool equal, std::string evidence) {
  AttackVerdict v;
  v.outcome = equal ? Outcome::kEqual : Outcome::kNotEqual;
  v.evidence = std::move(evidence);
  return v;
}

std::string Short(const std::string& s) {
  return s.size() <= 24 ? s : s.substr(0, 21) + "...";
}

std::string Describe(const GtElement& e) { return Short(EncodeGt(e)); }
std::string Describe(const CurvePoint& p) { return Short(EncodePoint(p)); }

// Shared algebra of the FHL and Shi-on-G tests: with a = known - [k]g and
// b = probe - [k]g, decide whether e(H(t), b) == e(H(t'), a).
AttackVerdict PairingTupleTest(const BilinearGroup& group,
                               const CurvePoint& known, const CurvePoint& probe,
                               const BigInt& k, std::string_view t,
                               std::string_view t_prime, std::string label) {
  CurvePoint gk = group.Mul(k, group.g());
  CurvePoint a = group.Sub(known, gk);
  CurvePoint b = group.Sub(probe, gk);
  GtElement lhs = group.Pair(group.HashToG(t), b);
  GtElement rhs = group.Pair(group.HashToG(t_prime), a);
  bool equal = lhs == rhs;
  return Decided(equal, label + ": e(H(" + std::string(t) + "), ct'/g^k) = " +
                            Describe(lhs) + (equal ? " == " : " != ") +
                            "e(H(" + std::string(t_prime) + "), ct/g^k) = " +
                            Describe(rhs));
}

}  // namespace

std::string_view OutcomeName(Outcome outcome) {
  switch (outcome) {
    case Outcome::kEqual:
      return "equal";
    case Outcome::kNotEqual:
      return "not-equal";
    case Outcome::kRecovered:
      return "recovered";
    case Outcome::kInapplicable:
      return "inapplicable";
  }
  return "unknown";
}

bool SolveDdhG(const BilinearGroup& group, const CurvePoint& g_a,
               const CurvePoint& g_b, const CurvePoint& candidate) {
  return group.Pair(group.g(), candidate) == group.Pair(g_a, g_b);
}

AttackVerdict AttackWangIndividual(const BilinearGroup& group,
                                   const CurvePoint& d,
                                   const WangCiphertext& ct, uint64_t bound) {
  GtElement a = group.Pair(d, ct.x);
  GtElement b = group.GtDiv(ct.y, a);
  std::optional<uint64_t> m = DlogBsgs(group, group.gt_generator(), b, bound);
  if (!m) {
    throw Error(ErrorCode::kOutOfRange,
                "Y / e(d, X) has no discrete log below " + std::to_string(bound));
  }
  AttackVerdict v;
  v.outcome = Outcome::kRecovered;
  v.recovered = *m;
  v.evidence = "A = e(d, X) = " + Describe(a) + "; B = Y/A = " + Describe(b) +
               "; log_gt B = " + std::to_string(*m);
  return v;
}

AttackVerdict AttackLlwkrEquality(const BilinearGroup& group, const BigInt& q,
                                  const NoisyCiphertext& ct1,
                                  const NoisyCiphertext& ct2) {
  if (ct1.participant != ct2.participant) {
    return Inapplicable("ciphertexts come from different participants (" +
                        std::to_string(ct1.participant) + " vs " +
                        std::to_string(ct2.participant) + ")");
  }
  if (IsGt(ct1.body) || IsGt(ct2.body)) {
    return Inapplicable("ciphertexts live in G_T; the q-th power keeps the period factor");
  }
  CurvePoint a = group.Mul(q, std::get<CurvePoint>(ct1.body));
  CurvePoint b = group.Mul(q, std::get<CurvePoint>(ct2.body));
  bool equal = a == b;
  return Decided(equal, "(CT)^q = " + Describe(a) + (equal ? " == " : " != ") +
                            "(CT')^q = " + Describe(b));
}

AttackVerdict AttackFhlKnownMessage(const BilinearGroup& group, const BigInt& q,
                                    const NoisyCiphertext& known, const BigInt& m,
                                    const NoisyCiphertext& probe) {
  if (known.participant != probe.participant) {
    return Inapplicable("ciphertexts come from different participants");
  }
  if (IsGt(known.body) || IsGt(probe.body)) {
    return Inapplicable("ciphertexts live in G_T, where no pairing is available");
  }
  if (sgn(m) < 0 || m >= group.params().p_sub) {
    return Inapplicable("known plaintext outside [0, p): the test only decides m' = m mod p");
  }
  CurvePoint ct = group.Mul(q, std::get<CurvePoint>(known.body));
  CurvePoint ct_probe = group.Mul(q, std::get<CurvePoint>(probe.body));
  return PairingTupleTest(group, ct, ct_probe, Mod(q * m, group.order()),
                          known.period, probe.period, "ct = (CT)^q, k = q*m");
}

AttackVerdict AttackShiOnG(const BilinearGroup& group,
                           const NoisyCiphertext& known, const BigInt& m,
                           const NoisyCiphertext& probe) {
  if (IsGt(known.body) || IsGt(probe.body)) {
    return Inapplicable("Shi blinding instantiated over G_T: no pairing on G_T");
  }
  if (known.participant != probe.participant) {
    return Inapplicable("ciphertexts come from different participants");
  }
  return PairingTupleTest(group, std::get<CurvePoint>(known.body),
                          std::get<CurvePoint>(probe.body), Mod(m, group.order()),
                          known.period, probe.period, "k = m");
}

AttackVerdict AttackFixedGtAttempt(const BilinearGroup& group, const BigInt& q,
                                   const NoisyCiphertext& ct1,
                                   const NoisyCiphertext& ct2) {
  if (ct1.participant != ct2.participant) {
    return Inapplicable("ciphertexts come from different participants");
  }
  if (!IsGt(ct1.body) || !IsGt(ct2.body)) {
    return Inapplicable("expects ciphertexts of the G_T scheme");
  }
  if (ct1.period == ct2.period) {
    return Inapplicable("same-period pair cannot arise under encrypt-once");
  }
  GtElement a = group.GtPow(std::get<GtElement>(ct1.body), q);
  GtElement b = group.GtPow(std::get<GtElement>(ct2.body), q);
  AttackVerdict v = Inapplicable(
      "(CT)^q = ghat^{qm} H_T(" + ct1.period + ")^{qs} and (CT')^q = ghat^{qm'} H_T(" +
      ct2.period +
      ")^{qs}: the period factors differ and testing the DDH tuple needs a "
      "pairing on G_T; heuristic (CT)^q == (CT')^q gives " +
      (a == b ? "equal" : "not-equal"));
  v.heuristic_equal = a == b;
  return v;
}

std::string_view AttackName(AttackKind kind) {
  switch (kind) {
    case AttackKind::kDdhG:
      return "ddh-g";
    case AttackKind::kWangIndividual:
      return "wang-individual";
    case AttackKind::kLlwkrEquality:
      return "llwkr-equality";
    case AttackKind::kFhlKnownMessage:
      return "fhl-known-message";
    case AttackKind::kShiOnG:
      return "shi-on-g";
    case AttackKind::kFixedGtAttempt:
      return "fixed-gt-attempt";
  }
  return "unknown";
}

AttackKind ParseAttack(std::string_view name) {
  for (AttackKind k : AllAttacks()) {
    if (AttackName(k) == name) return k;
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown attack '" + std::string(name) + "'");
}

std::vector<AttackKind> AllAttacks() {
  return {AttackKind::kDdhG,          AttackKind::kWangIndividual,
          AttackKind::kLlwkrEquality, AttackKind::kFhlKnownMessage,
          AttackKind::kShiOnG,        AttackKind::kFixedGtAttempt};
}

std::optional<Scheme> DefaultScheme(AttackKind kind) {
  switch (kind) {
    case AttackKind::kLlwkrEquality:
      return Scheme::kLlwkr19;
    case AttackKind::kFhlKnownMessage:
      return Scheme::kFhl14;
    case AttackKind::kShiOnG:
      return Scheme::kShiOnG;
    case AttackKind::kFixedGtAttempt:
      return Scheme::kFixedGt;
    case AttackKind::kDdhG:
    case AttackKind::kWangIndividual:
      return std::nullopt;
  }
  return std::nullopt;
}

AttackReport RunAttackTrials(const GroupPtr& group, AttackKind kind,
                             const AttackTrialOptions& options, Rng& rng) {
  const BilinearGroup& grp = *group;
  AttackReport report;
  report.attack = std::string(AttackName(kind));
  report.trials = options.trials;
  auto sample = [&](const std::string& evidence) {
    if (report.evidence_sample.size() < options.evidence_samples) {
      report.evidence_sample.push_back(evidence);
    }
  };

  if (kind == AttackKind::kDdhG) {
    report.scheme = "none";
    const BigInt& n = grp.order();
    for (uint64_t i = 0; i < options.trials; ++i) {
      bool genuine = i % 2 == 0;
      BigInt a = rng.Uniform(n - 1) + 1;
      BigInt b = rng.Uniform(n - 1) + 1;
      BigInt c = Mod(a * b + (genuine ? 0 : 1), n);
      bool decided = SolveDdhG(grp, grp.Mul(a, grp.g()), grp.Mul(b, grp.g()),
                               grp.Mul(c, grp.g()));
      if (decided == genuine) ++report.successes;
      sample(std::string(genuine ? "(g^a, g^b, g^ab)" : "(g^a, g^b, g^(ab+1))") +
             " -> " + (decided ? "DDH tuple" : "not a DDH tuple"));
    }
  } else if (kind == AttackKind::kWangIndividual) {
    report.scheme = "wang";
    WangKeys keys = WangKeyGen(grp, "esp@utility", rng);
    for (uint64_t i = 0; i < options.trials; ++i) {
      uint64_t m = rng.UniformU64(options.message_bound);
      WangCiphertext ct = WangEncrypt(grp, keys.encryption_key, m, rng,
                                      options.message_bound);
      try {
        AttackVerdict v = AttackWangIndividual(grp, keys.decryption_key, ct,
                                               options.message_bound);
        if (v.recovered == m) ++report.successes;
        sample(v.evidence);
      } catch (const Error& e) {
        sample(e.what());
      }
    }
  } else {
    if (options.message_bound < 2) {
      throw Error(ErrorCode::kInvalidArgument, "equality attacks need message bound >= 2");
    }
    Scheme scheme = options.scheme.value_or(*DefaultScheme(kind));
    report.scheme = std::string(SchemeName(scheme));
    NoisyScheme ns(group, scheme, options.message_bound);
    const BigInt& q = grp.params().q_sub;
    for (uint64_t i = 0; i < options.trials; ++i) {
      bool same = i % 2 == 0;
      BigInt share = rng.Uniform(grp.order());
      uint64_t m = rng.UniformU64(options.message_bound);
      uint64_t m2 = m;
      if (!same) {
        m2 = (m + 1 + rng.UniformU64(options.message_bound - 1)) %
             options.message_bound;
      }
      std::string base = "trial-" + std::to_string(i);
      NoisyCiphertext ct1 = ns.Encrypt(1, share, base + "/t", m, rng);
      NoisyCiphertext ct2 = ns.Encrypt(1, share, base + "/t'", m2, rng);
      AttackVerdict v;
      switch (kind) {
        case AttackKind::kLlwkrEquality:
          v = AttackLlwkrEquality(grp, q, ct1, ct2);
          break;
        case AttackKind::kFhlKnownMessage:
          v = AttackFhlKnownMessage(grp, q, ct1, FromU64(m), ct2);
          break;
        case AttackKind::kShiOnG:
          v = AttackShiOnG(grp, ct1, FromU64(m), ct2);
          break;
        default:
          v = AttackFixedGtAttempt(grp, q, ct1, ct2);
          break;
      }
      std::optional<bool> guess;
      if (v.outcome == Outcome::kEqual) guess = true;
      if (v.outcome == Outcome::kNotEqual) guess = false;
      if (v.outcome == Outcome::kInapplicable) guess = v.heuristic_equal;
      if (guess && *guess == same) ++report.successes;
      sample(std::string(same ? "[m' = m] " : "[m' != m] ") +
             std::string(OutcomeName(v.outcome)) + ": " + v.evidence);
    }
  }
  report.accuracy = report.trials == 0
                        ? 0.0
                        : static_cast<double>(report.successes) /
                              static_cast<double>(report.trials);
  return report;
}

}  // namespace bgnlab
