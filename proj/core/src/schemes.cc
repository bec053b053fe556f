#include "bgnlab/schemes.h"

#include <algorithm>
#include <utility>

#include "bgnlab/dlog.h"
#include "bgnlab/error.h"

namespace bgnlab {

std::string_view SchemeName(Scheme scheme) {
  switch (scheme) {
    case Scheme::kShiBase:
      return "shi-base";
    case Scheme::kShiOnG:
      return "shi-g";
    case Scheme::kFhl14:
      return "fhl14";
    case Scheme::kLlwkr19:
      return "llwkr19";
    case Scheme::kFixedGt:
      return "fixed-gt";
  }
  return "unknown";
}

Scheme ParseScheme(std::string_view name) {
  for (Scheme s : AllSchemes()) {
    if (SchemeName(s) == name) return s;
  }
  if (name == "zlc22") return Scheme::kLlwkr19;
  throw Error(ErrorCode::kInvalidArgument, "unknown scheme '" + std::string(name) + "'");
}

std::vector<Scheme> AllSchemes() {
  return {Scheme::kShiBase, Scheme::kShiOnG, Scheme::kFhl14, Scheme::kLlwkr19,
          Scheme::kFixedGt};
}

bool CarriedInGt(Scheme scheme) {
  return scheme == Scheme::kShiBase || scheme == Scheme::kFixedGt;
}

bool UsesBgnKey(Scheme scheme) {
  return scheme == Scheme::kFhl14 || scheme == Scheme::kLlwkr19 ||
         scheme == Scheme::kFixedGt;
}

PartySecrets SetupShares(const BilinearGroup& group, size_t n, Rng& rng) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one participant");
  const BigInt& order = group.order();
  PartySecrets secrets;
  secrets.shares.resize(n + 1);
  BigInt sum = 0;
  for (size_t i = 1; i <= n; ++i) {
    secrets.shares[i] = rng.Uniform(order);
    sum += secrets.shares[i];
  }
  secrets.shares[0] = Mod(-sum, order);
  secrets.recipient_sk = group.params().q_sub;
  return secrets;
}

TranscriptRecord ToRecord(const NoisyCiphertext& ct) {
  return {std::string(SchemeName(ct.scheme)), ct.participant, ct.period,
          EncodeElement(ct.body)};
}

NoisyCiphertext FromRecord(const TranscriptRecord& record) {
  NoisyCiphertext ct{ParseScheme(record.scheme), record.participant,
                     record.period, DecodeElement(record.body)};
  if (IsGt(ct.body) != CarriedInGt(ct.scheme)) {
    throw Error(ErrorCode::kParse, "body level does not match scheme " + record.scheme);
  }
  return ct;
}

NoisyScheme::NoisyScheme(GroupPtr group, Scheme scheme, uint64_t message_bound)
    : group_(std::move(group)), scheme_(scheme), message_bound_(message_bound) {
  if (message_bound_ == 0) {
    throw Error(ErrorCode::kInvalidArgument, "message bound must be positive");
  }
}

NoisyCiphertext NoisyScheme::Encrypt(uint32_t participant, const BigInt& share,
                                     std::string_view period, uint64_t m,
                                     Rng& rng) const {
  if (m >= message_bound_) {
    throw Error(ErrorCode::kOutOfRange, "plaintext " + std::to_string(m) +
                                            " outside [0, " +
                                            std::to_string(message_bound_) + ")");
  }
  BigInt r = 0;
  if (scheme_ == Scheme::kFhl14 || scheme_ == Scheme::kLlwkr19 ||
      scheme_ == Scheme::kFixedGt) {
    r = rng.Uniform(group_->order());
  }
  return EncryptWithNoise(participant, share, period, FromU64(m), r);
}

NoisyCiphertext NoisyScheme::EncryptWithNoise(uint32_t participant,
                                              const BigInt& share,
                                              std::string_view period,
                                              const BigInt& m,
                                              const BigInt& r) const {
  if (participant == 0) {
    throw Error(ErrorCode::kInvalidArgument, "participants are numbered from 1");
  }
  const BilinearGroup& grp = *group_;
  NoisyCiphertext ct{scheme_, participant, std::string(period), CurvePoint{}};
  switch (scheme_) {
    case Scheme::kShiBase:
      ct.body = grp.GtMul(grp.GtPow(grp.gt_generator(), m),
                          grp.GtPow(grp.HashToGt(period), share));
      break;
    case Scheme::kShiOnG:
      ct.body = grp.Add(grp.Mul(m, grp.g()), grp.Mul(share, grp.HashToG(period)));
      break;
    case Scheme::kFhl14: {
      CurvePoint blind = grp.Add(grp.HashToG(period), grp.Mul(r, grp.h()));
      ct.body = grp.Add(grp.Mul(m, grp.g()), grp.Mul(share, blind));
      break;
    }
    case Scheme::kLlwkr19:
      ct.body = grp.Add(grp.Add(grp.Mul(m, grp.g()), grp.Mul(r, grp.h())),
                        grp.Mul(share, grp.f()));
      break;
    case Scheme::kFixedGt: {
      GtElement blind = grp.GtMul(grp.HashToGt(period), grp.GtPow(grp.gt_h(), r));
      ct.body = grp.GtMul(grp.GtPow(grp.gt_generator(), m), grp.GtPow(blind, share));
      break;
    }
  }
  return ct;
}

GroupElement NoisyScheme::BlindingBase(std::string_view period) const {
  switch (scheme_) {
    case Scheme::kShiBase:
    case Scheme::kFixedGt:
      return group_->HashToGt(period);
    case Scheme::kShiOnG:
    case Scheme::kFhl14:
      return group_->HashToG(period);
    case Scheme::kLlwkr19:
      return group_->f();
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown scheme");
}

GroupElement NoisyScheme::Combine(const BigInt& s0, std::string_view period,
                                  std::span<const NoisyCiphertext> cts) const {
  const BilinearGroup& grp = *group_;
  for (const auto& ct : cts) {
    if (ct.scheme != scheme_) {
      throw Error(ErrorCode::kInvalidArgument, "ciphertext from scheme " +
                                                   std::string(SchemeName(ct.scheme)));
    }
    if (ct.period != period) {
      throw Error(ErrorCode::kInvalidArgument,
                  "ciphertext for period '" + ct.period + "' in aggregate for '" +
                      std::string(period) + "'");
    }
    if (IsGt(ct.body) != CarriedInGt(scheme_)) {
      throw Error(ErrorCode::kLevelMismatch, "ciphertext body in the wrong group");
    }
  }
  GroupElement base = BlindingBase(period);
  if (CarriedInGt(scheme_)) {
    GtElement v = grp.GtPow(std::get<GtElement>(base), s0);
    for (const auto& ct : cts) v = grp.GtMul(v, std::get<GtElement>(ct.body));
    return v;
  }
  CurvePoint v = grp.Mul(s0, std::get<CurvePoint>(base));
  for (const auto& ct : cts) v = grp.Add(v, std::get<CurvePoint>(ct.body));
  return v;
}

GroupElement NoisyScheme::Aggregate(const BigInt& s0, std::string_view period,
                                    std::span<const NoisyCiphertext> cts,
                                    size_t parties) const {
  std::vector<bool> present(parties + 1, false);
  for (const auto& ct : cts) {
    if (ct.participant == 0 || ct.participant > parties) {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown participant " + std::to_string(ct.participant));
    }
    if (present[ct.participant]) {
      throw Error(ErrorCode::kEncryptOnce, "participant " +
                                               std::to_string(ct.participant) +
                                               " submitted twice");
    }
    present[ct.participant] = true;
  }
  std::string missing;
  for (size_t i = 1; i <= parties; ++i) {
    if (!present[i]) missing += (missing.empty() ? "" : ",") + std::to_string(i);
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kIncompletePeriod, "period '" + std::string(period) +
                                                  "' missing participants " + missing);
  }
  return Combine(s0, period, cts);
}

std::optional<uint64_t> NoisyScheme::TryDecrypt(const BigInt& recipient_sk,
                                                const GroupElement& aggregate,
                                                uint64_t bound) const {
  const BilinearGroup& grp = *group_;
  if (IsGt(aggregate) != CarriedInGt(scheme_)) {
    throw Error(ErrorCode::kLevelMismatch, "aggregate in the wrong group");
  }
  switch (scheme_) {
    case Scheme::kShiBase:
      return DlogBsgs(grp, grp.gt_generator(), std::get<GtElement>(aggregate), bound);
    case Scheme::kShiOnG:
      return DlogBsgs(grp, grp.g(), std::get<CurvePoint>(aggregate), bound);
    case Scheme::kFhl14:
    case Scheme::kLlwkr19:
      return DlogBsgs(grp, grp.Mul(recipient_sk, grp.g()),
                      grp.Mul(recipient_sk, std::get<CurvePoint>(aggregate)), bound);
    case Scheme::kFixedGt:
      return DlogBsgs(grp, grp.GtPow(grp.gt_generator(), recipient_sk),
                      grp.GtPow(std::get<GtElement>(aggregate), recipient_sk), bound);
  }
  return std::nullopt;
}

uint64_t NoisyScheme::Decrypt(const BigInt& recipient_sk,
                              const GroupElement& aggregate, uint64_t bound) const {
  std::optional<uint64_t> m = TryDecrypt(recipient_sk, aggregate, bound);
  if (!m) {
    throw Error(ErrorCode::kOutOfRange,
                "aggregate does not decrypt below " + std::to_string(bound) +
                    " (incomplete aggregate or sum out of range)");
  }
  return *m;
}

void PeriodLedger::Record(uint32_t participant, std::string_view period) {
  if (participant == 0 || participant > parties_) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown participant " + std::to_string(participant));
  }
  std::lock_guard lock(mu_);
  auto it = seen_.find(period);
  if (it == seen_.end()) it = seen_.emplace(std::string(period), std::set<uint32_t>{}).first;
  if (!it->second.insert(participant).second) {
    throw Error(ErrorCode::kEncryptOnce, "participant " + std::to_string(participant) +
                                             " already encrypted for period '" +
                                             std::string(period) + "'");
  }
}

bool PeriodLedger::Contains(uint32_t participant, std::string_view period) const {
  std::lock_guard lock(mu_);
  auto it = seen_.find(period);
  return it != seen_.end() && it->second.contains(participant);
}

void PeriodLedger::RequireComplete(std::string_view period) const {
  std::lock_guard lock(mu_);
  auto it = seen_.find(period);
  std::string missing;
  for (uint32_t i = 1; i <= parties_; ++i) {
    if (it == seen_.end() || !it->second.contains(i)) {
      missing += (missing.empty() ? "" : ",") + std::to_string(i);
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorCode::kIncompletePeriod, "period '" + std::string(period) +
                                                  "' missing participants " + missing);
  }
}

ProtocolRun::ProtocolRun(NoisyScheme scheme, PartySecrets secrets)
    : scheme_(std::move(scheme)),
      secrets_(std::move(secrets)),
      ledger_(secrets_.parties()) {}

NoisyCiphertext ProtocolRun::Submit(uint32_t participant, std::string_view period,
                                    uint64_t m, Rng& rng) {
  if (participant == 0 || participant > secrets_.parties()) {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown participant " + std::to_string(participant));
  }
  if (ledger_.Contains(participant, period)) {
    throw Error(ErrorCode::kEncryptOnce, "participant " + std::to_string(participant) +
                                             " already encrypted for period '" +
                                             std::string(period) + "'");
  }
  NoisyCiphertext ct =
      scheme_.Encrypt(participant, secrets_.share(participant), period, m, rng);
  ledger_.Record(participant, period);
  std::lock_guard lock(mu_);
  transcript_.Append(ToRecord(ct));
  return ct;
}

GroupElement ProtocolRun::AggregatePeriod(std::string_view period) const {
  ledger_.RequireComplete(period);
  std::vector<NoisyCiphertext> cts;
  {
    std::lock_guard lock(mu_);
    for (const auto& r : transcript_.records()) {
      if (r.period == period) cts.push_back(FromRecord(r));
    }
  }
  return scheme_.Aggregate(secrets_.share(0), period, cts, secrets_.parties());
}

uint64_t ProtocolRun::DecryptAggregate(const GroupElement& aggregate,
                                       uint64_t bound) const {
  return scheme_.Decrypt(secrets_.recipient_sk, aggregate, bound);
}

Transcript ProtocolRun::transcript() const {
  std::lock_guard lock(mu_);
  return transcript_;
}

WangKeys WangKeyGen(const BilinearGroup& group, std::string_view identity,
                    Rng& rng) {
  WangKeys keys;
  keys.identity = std::string(identity);
  keys.master_secret = rng.Uniform(group.order() - 1) + 1;
  CurvePoint id_point = group.HashToG(identity);
  keys.encryption_key = group.Pair(id_point, group.Mul(keys.master_secret, group.g()));
  keys.decryption_key = group.Mul(keys.master_secret, id_point);
  return keys;
}

WangCiphertext WangEncrypt(const BilinearGroup& group, const GtElement& w,
                           uint64_t m, Rng& rng, uint64_t message_bound) {
  if (m >= message_bound) {
    throw Error(ErrorCode::kOutOfRange, "plaintext " + std::to_string(m) +
                                            " outside [0, " +
                                            std::to_string(message_bound) + ")");
  }
  return WangEncryptWithNoise(group, w, m, rng.Uniform(group.order()));
}

WangCiphertext WangEncryptWithNoise(const BilinearGroup& group,
                                    const GtElement& w, uint64_t m,
                                    const BigInt& r) {
  return {group.Mul(r, group.g()),
          group.GtMul(group.GtPow(group.gt_generator(), FromU64(m)),
                      group.GtPow(w, r))};
}

WangCiphertext WangAggregate(const BilinearGroup& group,
                             std::span<const WangCiphertext> cts) {
  WangCiphertext agg{CurvePoint::Identity(), GtElement::One()};
  for (const auto& ct : cts) {
    agg.x = group.Add(agg.x, ct.x);
    agg.y = group.GtMul(agg.y, ct.y);
  }
  return agg;
}

uint64_t WangDecryptSum(const BilinearGroup& group, const CurvePoint& d,
                        const WangCiphertext& aggregate, uint64_t bound) {
  GtElement masked = group.GtDiv(aggregate.y, group.Pair(d, aggregate.x));
  std::optional<uint64_t> m = DlogBsgs(group, group.gt_generator(), masked, bound);
  if (!m) {
    throw Error(ErrorCode::kOutOfRange,
                "Wang ciphertext does not decrypt below " + std::to_string(bound));
  }
  return *m;
}

std::string SerializeWangCiphertext(const WangCiphertext& ct) {
  return "X " + EncodePoint(ct.x) + " Y " + EncodeGt(ct.y);
}

WangCiphertext ParseWangCiphertext(std::string_view text) {
  if (!text.starts_with("X ")) throw Error(ErrorCode::kParse, "expected 'X '");
  size_t y = text.find(" Y ");
  if (y == std::string_view::npos) throw Error(ErrorCode::kParse, "expected ' Y '");
  return {DecodePoint(text.substr(2, y - 2)), DecodeGt(text.substr(y + 3))};
}

WangRun::WangRun(GroupPtr group, WangKeys keys, size_t parties,
                 uint64_t message_bound)
    : group_(std::move(group)),
      keys_(std::move(keys)),
      message_bound_(message_bound),
      ledger_(parties) {
  if (parties == 0) throw Error(ErrorCode::kInvalidArgument, "need at least one participant");
}

WangCiphertext WangRun::Submit(uint32_t participant, std::string_view period,
                               uint64_t m, Rng& rng) {
  if (ledger_.Contains(participant, period)) {
    throw Error(ErrorCode::kEncryptOnce, "participant " + std::to_string(participant) +
                                             " already encrypted for period '" +
                                             std::string(period) + "'");
  }
  WangCiphertext ct = WangEncrypt(*group_, keys_.encryption_key, m, rng, message_bound_);
  ledger_.Record(participant, period);
  std::lock_guard lock(mu_);
  auto it = submitted_.find(period);
  if (it == submitted_.end()) {
    it = submitted_.emplace(std::string(period), std::vector<WangCiphertext>{}).first;
  }
  it->second.push_back(ct);
  return ct;
}

WangCiphertext WangRun::AggregatePeriod(std::string_view period) const {
  ledger_.RequireComplete(period);
  std::lock_guard lock(mu_);
  return WangAggregate(*group_, submitted_.find(period)->second);
}

uint64_t WangRun::DecryptAggregate(const WangCiphertext& aggregate,
                                   uint64_t bound) const {
  return WangDecryptSum(*group_, keys_.decryption_key, aggregate, bound);
}

}  // namespace bgnlab
