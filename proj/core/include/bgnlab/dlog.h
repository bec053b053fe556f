#ifndef BGNLAB_DLOG_H_
#define BGNLAB_DLOG_H_

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>

#include "bgnlab/codec.h"
#include "bgnlab/error.h"
#include "bgnlab/group.h"

namespace bgnlab {

// Shanks baby-step/giant-step over any group exposed through Ops:
//   using Element = ...;
//   Element Identity() const;
//   Element Mul(const Element&, const Element&) const;
//   Element Inverse(const Element&) const;
//   std::string Key(const Element&) const;   // injective encoding
// Returns the least m in [0, bound) with base^m == target, or nullopt.
template <typename Ops>
std::optional<uint64_t> BabyStepGiantStep(const Ops& ops,
                                          const typename Ops::Element& base,
                                          const typename Ops::Element& target,
                                          uint64_t bound) {
  if (bound == 0) throw Error(ErrorCode::kInvalidArgument, "dlog bound must be >= 1");
  uint64_t m = static_cast<uint64_t>(std::sqrt(static_cast<double>(bound)));
  while (m * m < bound) ++m;
  while (m > 1 && (m - 1) * (m - 1) >= bound) --m;

  std::unordered_map<std::string, uint64_t> baby;
  baby.reserve(m);
  typename Ops::Element cur = ops.Identity();
  for (uint64_t j = 0; j < m; ++j) {
    baby.emplace(ops.Key(cur), j);  // keeps the smallest j on collisions
    cur = ops.Mul(cur, base);
  }
  const typename Ops::Element giant = ops.Inverse(cur);  // base^-m
  typename Ops::Element gamma = target;
  for (uint64_t i = 0; i * m < bound; ++i) {
    auto it = baby.find(ops.Key(gamma));
    if (it != baby.end()) {
      uint64_t candidate = i * m + it->second;
      if (candidate < bound) return candidate;
      return std::nullopt;
    }
    gamma = ops.Mul(gamma, giant);
  }
  return std::nullopt;
}

struct CurveDlogOps {
  using Element = CurvePoint;
  const BilinearGroup& group;

  Element Identity() const { return CurvePoint::Identity(); }
  Element Mul(const Element& a, const Element& b) const { return group.Add(a, b); }
  Element Inverse(const Element& a) const { return group.Negate(a); }
  std::string Key(const Element& a) const { return EncodePoint(a); }
};

struct GtDlogOps {
  using Element = GtElement;
  const BilinearGroup& group;

  Element Identity() const { return GtElement::One(); }
  Element Mul(const Element& a, const Element& b) const { return group.GtMul(a, b); }
  Element Inverse(const Element& a) const { return group.GtInverse(a); }
  std::string Key(const Element& a) const { return EncodeGt(a); }
};

inline std::optional<uint64_t> DlogBsgs(const BilinearGroup& group,
                                        const CurvePoint& base,
                                        const CurvePoint& target,
                                        uint64_t bound) {
  return BabyStepGiantStep(CurveDlogOps{group}, base, target, bound);
}

inline std::optional<uint64_t> DlogBsgs(const BilinearGroup& group,
                                        const GtElement& base,
                                        const GtElement& target,
                                        uint64_t bound) {
  return BabyStepGiantStep(GtDlogOps{group}, base, target, bound);
}

}  // namespace bgnlab

#endif  // BGNLAB_DLOG_H_
