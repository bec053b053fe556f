#ifndef BGNLAB_CURVE_H_
#define BGNLAB_CURVE_H_

#include <optional>

#include "bgnlab/big_int.h"
#include "bgnlab/field.h"

namespace bgnlab {

// Affine point on E: y^2 = x^3 + x, or the point at infinity.
struct CurvePoint {
  BigInt x;
  BigInt y;
  bool infinity = true;

  static CurvePoint Identity() { return {}; }
  static CurvePoint Affine(BigInt x, BigInt y) {
    return {std::move(x), std::move(y), false};
  }

  bool is_identity() const { return infinity; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

// The supersingular curve y^2 = x^3 + x over F_p with p = 3 (mod 4). Its
// group of F_p-rational points has order p + 1.
class SupersingularCurve {
 public:
  explicit SupersingularCurve(const BigInt& field_modulus);

  const PrimeField& field() const { return field_; }
  // #E(F_p) = p + 1.
  const BigInt& order() const { return order_; }

  bool Contains(const CurvePoint& p) const;
  // Throws kOffCurve unless Contains(p).
  void Check(const CurvePoint& p) const;

  CurvePoint Negate(const CurvePoint& p) const;
  CurvePoint Double(const CurvePoint& p) const;
  CurvePoint Add(const CurvePoint& a, const CurvePoint& b) const;
  // [k]P with k taken modulo #E(F_p); negative k allowed.
  CurvePoint Multiply(const BigInt& k, const CurvePoint& p) const;

  // x^3 + x
  BigInt Rhs(const BigInt& x) const;
  // Point with abscissa x and the principal square root as ordinate, if any.
  std::optional<CurvePoint> Lift(const BigInt& x) const;

 private:
  CurvePoint AddUnchecked(const CurvePoint& a, const CurvePoint& b) const;
  CurvePoint DoubleUnchecked(const CurvePoint& p) const;

  PrimeField field_;
  BigInt order_;
};

}  // namespace bgnlab

#endif  // BGNLAB_CURVE_H_
