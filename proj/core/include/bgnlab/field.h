#ifndef BGNLAB_FIELD_H_
#define BGNLAB_FIELD_H_

#include <optional>

#include "bgnlab/big_int.h"

namespace bgnlab {

// Arithmetic in F_p for a prime p = 3 (mod 4). Elements are canonical
// residues in [0, p).
class PrimeField {
 public:
  explicit PrimeField(BigInt modulus);

  const BigInt& modulus() const { return modulus_; }

  BigInt Reduce(const BigInt& a) const { return Mod(a, modulus_); }
  BigInt Add(const BigInt& a, const BigInt& b) const;
  BigInt Sub(const BigInt& a, const BigInt& b) const;
  BigInt Mul(const BigInt& a, const BigInt& b) const;
  BigInt Neg(const BigInt& a) const;
  BigInt Inv(const BigInt& a) const;
  BigInt Pow(const BigInt& a, const BigInt& e) const;

  bool IsSquare(const BigInt& a) const;
  // a^((p+1)/4); the caller checks IsSquare first.
  BigInt Sqrt(const BigInt& a) const;

 private:
  BigInt modulus_;
  BigInt sqrt_exp_;
};

// a + b*i in F_p[i]/(i^2 + 1).
struct Fp2 {
  BigInt re;
  BigInt im;

  friend bool operator==(const Fp2& x, const Fp2& y) {
    return x.re == y.re && x.im == y.im;
  }
};

class QuadraticExtension {
 public:
  explicit QuadraticExtension(const PrimeField& base) : base_(base) {}

  const PrimeField& base() const { return base_; }

  Fp2 One() const { return {1, 0}; }
  bool IsZero(const Fp2& x) const { return sgn(x.re) == 0 && sgn(x.im) == 0; }

  Fp2 Mul(const Fp2& x, const Fp2& y) const;
  Fp2 Square(const Fp2& x) const;
  Fp2 Conj(const Fp2& x) const;
  Fp2 Inv(const Fp2& x) const;
  // e >= 0, no reduction of the exponent.
  Fp2 Pow(const Fp2& x, const BigInt& e) const;

 private:
  PrimeField base_;
};

}  // namespace bgnlab

#endif  // BGNLAB_FIELD_H_
