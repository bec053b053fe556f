#include "bgnlab/group.h"

#include <utility>

#include "bgnlab/error.h"
#include "bgnlab/hash_to_curve.h"

namespace bgnlab {

BilinearGroup::BilinearGroup(GroupParams params)
    : params_((CheckParams(params), std::move(params))),
      curve_(params_.field_mod),
      pairing_(curve_, params_.n_ord) {
  g_hat_ = pairing_.Pair(params_.g, params_.g);
  h_hat_ = pairing_.Pair(params_.g, params_.h);
}

CurvePoint BilinearGroup::Add(const CurvePoint& a, const CurvePoint& b) const {
  return curve_.Add(a, b);
}

CurvePoint BilinearGroup::Sub(const CurvePoint& a, const CurvePoint& b) const {
  return curve_.Add(a, curve_.Negate(b));
}

CurvePoint BilinearGroup::Negate(const CurvePoint& a) const {
  curve_.Check(a);
  return curve_.Negate(a);
}

CurvePoint BilinearGroup::Mul(const BigInt& k, const CurvePoint& a) const {
  return curve_.Multiply(k, a);
}

bool BilinearGroup::InG(const CurvePoint& a) const {
  return curve_.Contains(a) && curve_.Multiply(params_.n_ord, a).is_identity();
}

GtElement BilinearGroup::Pair(const CurvePoint& a, const CurvePoint& b) const {
  return pairing_.Pair(a, b);
}

GtElement BilinearGroup::GtMul(const GtElement& a, const GtElement& b) const {
  return {pairing_.extension().Mul(a.v, b.v)};
}

GtElement BilinearGroup::GtInverse(const GtElement& a) const {
  return {pairing_.extension().Inv(a.v)};
}

GtElement BilinearGroup::GtDiv(const GtElement& a, const GtElement& b) const {
  return GtMul(a, GtInverse(b));
}

GtElement BilinearGroup::GtPow(const GtElement& a, const BigInt& k) const {
  if (sgn(k) < 0) return {pairing_.extension().Pow(GtInverse(a).v, -k)};
  return {pairing_.extension().Pow(a.v, k)};
}

bool BilinearGroup::InGt(const GtElement& a) const {
  const BigInt& m = params_.field_mod;
  for (const BigInt* c : {&a.v.re, &a.v.im}) {
    if (sgn(*c) < 0 || *c >= m) return false;
  }
  return GtPow(a, params_.n_ord).is_one();
}

CurvePoint BilinearGroup::HashToG(std::string_view label) const {
  return HashToSubgroup(curve_, params_.cofactor, label);
}

GtElement BilinearGroup::HashToGt(std::string_view label) const {
  return Pair(HashToG(label), params_.g);
}

bool BilinearGroup::Contains(const GroupElement& e) const {
  if (const auto* p = std::get_if<CurvePoint>(&e)) return InG(*p);
  return InGt(std::get<GtElement>(e));
}

}  // namespace bgnlab
