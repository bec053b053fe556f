#ifndef BGNLAB_PAIRING_H_
#define BGNLAB_PAIRING_H_

#include "bgnlab/big_int.h"
#include "bgnlab/curve.h"
#include "bgnlab/field.h"

namespace bgnlab {

// Element of the order-N subgroup of F_p^2*, written re + im*i.
struct GtElement {
  Fp2 v;

  static GtElement One() { return {{1, 0}}; }
  bool is_one() const { return v.re == 1 && sgn(v.im) == 0; }

  friend bool operator==(const GtElement& a, const GtElement& b) {
    return a.v == b.v;
  }
};

// Symmetric pairing e(P, Q) = f_{N,P}(phi(Q))^((p^2 - 1) / N) where
// phi(x, y) = (-x, i*y) is the distortion map of y^2 = x^3 + x. Vertical line
// factors lie in F_p and are erased by the final exponentiation, so the Miller
// loop only accumulates the non-vertical lines.
class TatePairing {
 public:
  // order must divide #E(F_p) = p + 1 and be odd.
  TatePairing(const SupersingularCurve& curve, const BigInt& order);

  const QuadraticExtension& extension() const { return ext_; }
  const BigInt& order() const { return order_; }

  // Identity inputs give 1. Inputs must lie on the curve (kOffCurve
  // otherwise) and in the order-N subgroup (not checked).
  GtElement Pair(const CurvePoint& p, const CurvePoint& q) const;

 private:
  Fp2 MillerLoop(const CurvePoint& p, const CurvePoint& q) const;
  GtElement FinalExponentiation(const Fp2& f) const;

  SupersingularCurve curve_;
  QuadraticExtension ext_;
  BigInt order_;
  BigInt cofactor_;
};

}  // namespace bgnlab

#endif  // BGNLAB_PAIRING_H_
