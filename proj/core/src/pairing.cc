#include "bgnlab/pairing.h"

#include "bgnlab/error.h"

namespace bgnlab {

TatePairing::TatePairing(const SupersingularCurve& curve, const BigInt& order)
    : curve_(curve), ext_(curve.field()), order_(order) {
  if (order_ < 3 || mpz_even_p(order_.get_mpz_t()) ||
      Mod(curve_.order(), order_) != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "pairing order must be odd and divide p + 1");
  }
  cofactor_ = curve_.order() / order_;
}

Fp2 TatePairing::MillerLoop(const CurvePoint& p, const CurvePoint& q) const {
  const PrimeField& f = curve_.field();
  // phi(Q) = (-x_Q, i*y_Q). A non-vertical line y - y_T - lambda (x - x_T)
  // evaluated there is (lambda (x_T + x_Q) - y_T) + y_Q i.
  const BigInt& xq = q.x;
  const BigInt& yq = q.y;
  auto line = [&](const BigInt& lambda, const CurvePoint& t) {
    return Fp2{f.Sub(f.Mul(lambda, f.Add(t.x, xq)), t.y), yq};
  };
  auto tangent_slope = [&](const CurvePoint& t) {
    return f.Mul(f.Add(f.Mul(3, f.Mul(t.x, t.x)), 1), f.Inv(f.Add(t.y, t.y)));
  };

  Fp2 acc = ext_.One();
  CurvePoint t = p;
  for (size_t i = BitLength(order_) - 1; i-- > 0;) {
    acc = ext_.Square(acc);
    if (!t.infinity && sgn(t.y) != 0) {
      acc = ext_.Mul(acc, line(tangent_slope(t), t));
    }
    t = curve_.Double(t);

    if (mpz_tstbit(order_.get_mpz_t(), i)) {
      if (!t.infinity) {
        if (t.x != p.x) {
          BigInt lambda = f.Mul(f.Sub(p.y, t.y), f.Inv(f.Sub(p.x, t.x)));
          acc = ext_.Mul(acc, line(lambda, t));
        } else if (t.y == p.y && sgn(t.y) != 0) {
          acc = ext_.Mul(acc, line(tangent_slope(t), t));
        }
        // Otherwise the chord is vertical.
      }
      t = curve_.Add(t, p);
    }
  }
  return acc;
}

GtElement TatePairing::FinalExponentiation(const Fp2& f) const {
  if (ext_.IsZero(f)) {
    throw Error(ErrorCode::kInvalidArgument,
                "pairing input outside the odd-order subgroup");
  }
  // f^(p-1) = conj(f) / f, since the p-power Frobenius is conjugation.
  Fp2 unitary = ext_.Mul(ext_.Conj(f), ext_.Inv(f));
  return {ext_.Pow(unitary, cofactor_)};
}

GtElement TatePairing::Pair(const CurvePoint& p, const CurvePoint& q) const {
  curve_.Check(p);
  curve_.Check(q);
  if (p.infinity || q.infinity) return GtElement::One();
  return FinalExponentiation(MillerLoop(p, q));
}

}  // namespace bgnlab
