#include "bgnlab/curve.h"

#include "bgnlab/error.h"

namespace bgnlab {

SupersingularCurve::SupersingularCurve(const BigInt& field_modulus)
    : field_(field_modulus), order_(field_modulus + 1) {}

BigInt SupersingularCurve::Rhs(const BigInt& x) const {
  return field_.Add(field_.Mul(field_.Mul(x, x), x), x);
}

bool SupersingularCurve::Contains(const CurvePoint& p) const {
  if (p.infinity) return true;
  const BigInt& m = field_.modulus();
  if (sgn(p.x) < 0 || p.x >= m || sgn(p.y) < 0 || p.y >= m) return false;
  return field_.Mul(p.y, p.y) == Rhs(p.x);
}

void SupersingularCurve::Check(const CurvePoint& p) const {
  if (!Contains(p)) {
    throw Error(ErrorCode::kOffCurve, "point is not on y^2 = x^3 + x");
  }
}

CurvePoint SupersingularCurve::Negate(const CurvePoint& p) const {
  if (p.infinity) return p;
  return CurvePoint::Affine(p.x, field_.Neg(p.y));
}

CurvePoint SupersingularCurve::DoubleUnchecked(const CurvePoint& p) const {
  if (p.infinity || sgn(p.y) == 0) return CurvePoint::Identity();
  const PrimeField& f = field_;
  // lambda = (3x^2 + 1) / 2y
  BigInt lambda =
      f.Mul(f.Add(f.Mul(3, f.Mul(p.x, p.x)), 1), f.Inv(f.Add(p.y, p.y)));
  BigInt x3 = f.Sub(f.Mul(lambda, lambda), f.Add(p.x, p.x));
  BigInt y3 = f.Sub(f.Mul(lambda, f.Sub(p.x, x3)), p.y);
  return CurvePoint::Affine(std::move(x3), std::move(y3));
}

CurvePoint SupersingularCurve::AddUnchecked(const CurvePoint& a,
                                            const CurvePoint& b) const {
  if (a.infinity) return b;
  if (b.infinity) return a;
  const PrimeField& f = field_;
  if (a.x == b.x) {
    if (a.y == b.y) return DoubleUnchecked(a);
    return CurvePoint::Identity();
  }
  BigInt lambda = f.Mul(f.Sub(b.y, a.y), f.Inv(f.Sub(b.x, a.x)));
  BigInt x3 = f.Sub(f.Sub(f.Mul(lambda, lambda), a.x), b.x);
  BigInt y3 = f.Sub(f.Mul(lambda, f.Sub(a.x, x3)), a.y);
  return CurvePoint::Affine(std::move(x3), std::move(y3));
}

CurvePoint SupersingularCurve::Double(const CurvePoint& p) const {
  Check(p);
  return DoubleUnchecked(p);
}

CurvePoint SupersingularCurve::Add(const CurvePoint& a,
                                   const CurvePoint& b) const {
  Check(a);
  Check(b);
  return AddUnchecked(a, b);
}

CurvePoint SupersingularCurve::Multiply(const BigInt& k,
                                        const CurvePoint& p) const {
  Check(p);
  BigInt e = Mod(k, order_);
  CurvePoint acc = CurvePoint::Identity();
  for (size_t i = BitLength(e); i-- > 0;) {
    acc = DoubleUnchecked(acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = AddUnchecked(acc, p);
  }
  return acc;
}

std::optional<CurvePoint> SupersingularCurve::Lift(const BigInt& x) const {
  BigInt xr = field_.Reduce(x);
  BigInt rhs = Rhs(xr);
  if (!field_.IsSquare(rhs)) return std::nullopt;
  return CurvePoint::Affine(xr, field_.Sqrt(rhs));
}

}  // namespace bgnlab
