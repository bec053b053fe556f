#include "bgnlab/field.h"

#include <utility>

#include "bgnlab/error.h"

namespace bgnlab {

PrimeField::PrimeField(BigInt modulus) : modulus_(std::move(modulus)) {
  if (modulus_ < 3 || Mod(modulus_, 4) != 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "field modulus must be an odd prime = 3 (mod 4)");
  }
  sqrt_exp_ = (modulus_ + 1) / 4;
}

BigInt PrimeField::Add(const BigInt& a, const BigInt& b) const {
  BigInt r = a + b;
  if (r >= modulus_) r -= modulus_;
  return r;
}

BigInt PrimeField::Sub(const BigInt& a, const BigInt& b) const {
  BigInt r = a - b;
  if (sgn(r) < 0) r += modulus_;
  return r;
}

BigInt PrimeField::Mul(const BigInt& a, const BigInt& b) const {
  return Mod(a * b, modulus_);
}

BigInt PrimeField::Neg(const BigInt& a) const {
  return sgn(a) == 0 ? BigInt(0) : BigInt(modulus_ - a);
}

BigInt PrimeField::Inv(const BigInt& a) const { return InvMod(a, modulus_); }

BigInt PrimeField::Pow(const BigInt& a, const BigInt& e) const {
  return PowMod(a, e, modulus_);
}

bool PrimeField::IsSquare(const BigInt& a) const {
  return mpz_legendre(a.get_mpz_t(), modulus_.get_mpz_t()) >= 0;
}

BigInt PrimeField::Sqrt(const BigInt& a) const { return Pow(a, sqrt_exp_); }

Fp2 QuadraticExtension::Mul(const Fp2& x, const Fp2& y) const {
  const BigInt& p = base_.modulus();
  // Karatsuba: (a+bi)(c+di) = (ac - bd) + ((a+b)(c+d) - ac - bd) i
  BigInt ac = x.re * y.re;
  BigInt bd = x.im * y.im;
  BigInt mid = (x.re + x.im) * (y.re + y.im);
  return {Mod(ac - bd, p), Mod(mid - ac - bd, p)};
}

Fp2 QuadraticExtension::Square(const Fp2& x) const {
  const BigInt& p = base_.modulus();
  // (a+bi)^2 = (a+b)(a-b) + 2ab i
  return {Mod((x.re + x.im) * (x.re - x.im), p), Mod(2 * x.re * x.im, p)};
}

Fp2 QuadraticExtension::Conj(const Fp2& x) const {
  return {x.re, base_.Neg(x.im)};
}

Fp2 QuadraticExtension::Inv(const Fp2& x) const {
  if (IsZero(x)) throw Error(ErrorCode::kInvalidArgument, "inverse of zero in F_p^2");
  const BigInt& p = base_.modulus();
  BigInt norm_inv = base_.Inv(Mod(x.re * x.re + x.im * x.im, p));
  return {base_.Mul(x.re, norm_inv), base_.Mul(base_.Neg(x.im), norm_inv)};
}

Fp2 QuadraticExtension::Pow(const Fp2& x, const BigInt& e) const {
  if (sgn(e) < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
  Fp2 acc = One();
  const size_t bits = BitLength(e);
  for (size_t i = bits; i-- > 0;) {
    acc = Square(acc);
    if (mpz_tstbit(e.get_mpz_t(), i)) acc = Mul(acc, x);
  }
  return acc;
}

}  // namespace bgnlab
