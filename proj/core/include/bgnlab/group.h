#ifndef BGNLAB_GROUP_H_
#define BGNLAB_GROUP_H_

#include <memory>
#include <string_view>

#include "bgnlab/big_int.h"
#include "bgnlab/codec.h"
#include "bgnlab/curve.h"
#include "bgnlab/pairing.h"
#include "bgnlab/params.h"

namespace bgnlab {

// Validated, immutable view of a composite-order bilinear group: the group law
// on G, the pairing e: G x G -> G_T, the G_T group law, and the hash
// functions H: bytes -> G and H_T: bytes -> G_T. Safe to share across threads.
class BilinearGroup {
 public:
  // Validates params (throws kInvalidArgument on any violated invariant).
  explicit BilinearGroup(GroupParams params);

  const GroupParams& params() const { return params_; }
  const SupersingularCurve& curve() const { return curve_; }
  const BigInt& order() const { return params_.n_ord; }

  const CurvePoint& g() const { return params_.g; }
  const CurvePoint& h() const { return params_.h; }
  const CurvePoint& f() const { return params_.f; }

  // G, written additively. Mul reduces k modulo #E(F_p).
  CurvePoint Add(const CurvePoint& a, const CurvePoint& b) const;
  CurvePoint Sub(const CurvePoint& a, const CurvePoint& b) const;
  CurvePoint Negate(const CurvePoint& a) const;
  CurvePoint Mul(const BigInt& k, const CurvePoint& a) const;
  bool InG(const CurvePoint& a) const;

  GtElement Pair(const CurvePoint& a, const CurvePoint& b) const;

  // G_T, written multiplicatively. GtPow does not reduce the exponent (so
  // x^N is really computed); negative exponents invert first.
  GtElement GtMul(const GtElement& a, const GtElement& b) const;
  GtElement GtInverse(const GtElement& a) const;
  GtElement GtDiv(const GtElement& a, const GtElement& b) const;
  GtElement GtPow(const GtElement& a, const BigInt& k) const;
  bool InGt(const GtElement& a) const;

  // e(g, g) and e(g, h).
  const GtElement& gt_generator() const { return g_hat_; }
  const GtElement& gt_h() const { return h_hat_; }

  CurvePoint HashToG(std::string_view label) const;
  // e(H(label), g). Nobody learns its discrete log to base e(g, g).
  GtElement HashToGt(std::string_view label) const;

  // Membership of either kind of element in its carrier group.
  bool Contains(const GroupElement& e) const;

 private:
  GroupParams params_;
  SupersingularCurve curve_;
  TatePairing pairing_;
  GtElement g_hat_;
  GtElement h_hat_;
};

using GroupPtr = std::shared_ptr<const BilinearGroup>;

inline GroupPtr MakeGroup(GroupParams params) {
  return std::make_shared<const BilinearGroup>(std::move(params));
}

}  // namespace bgnlab

#endif  // BGNLAB_GROUP_H_
