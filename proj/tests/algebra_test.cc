#include <gtest/gtest.h>

#include <map>
#include <set>

#include "bgnlab/big_int.h"
#include "bgnlab/codec.h"
#include "bgnlab/curve.h"
#include "bgnlab/dlog.h"
#include "bgnlab/error.h"
#include "bgnlab/field.h"
#include "bgnlab/hash.h"
#include "bgnlab/hash_to_curve.h"
#include "bgnlab/pairing.h"
#include "bgnlab/params.h"
#include "bgnlab/rng.h"
#include "testing.h"

namespace bgnlab {
namespace {

using testing::DefaultGroup;
using testing::ToyGroup;
namespace oracle = testing::oracle;

GtElement Gt(const char* const (&v)[2]) { return {{FromHex(v[0]), FromHex(v[1])}}; }
CurvePoint Pt(const char* const (&v)[2]) { return CurvePoint::Affine(FromHex(v[0]), FromHex(v[1])); }

TEST(BigIntTest, HexIsStrictAndCanonical) {
  EXPECT_EQ(ToHex(BigInt(0)), "0");
  EXPECT_EQ(ToHex(BigInt(255)), "ff");
  EXPECT_EQ(FromHex("8b"), 139);
  EXPECT_THROW(FromHex("8B"), Error);
  EXPECT_THROW(FromHex("08b"), Error);
  EXPECT_THROW(FromHex(""), Error);
  EXPECT_THROW(ToHex(BigInt(-1)), Error);
}

TEST(BigIntTest, ModularHelpers) {
  EXPECT_EQ(Mod(BigInt(-3), BigInt(7)), 4);
  EXPECT_EQ(PowMod(3, 4, 7), 4);
  EXPECT_EQ(InvMod(3, 7), 5);
  EXPECT_THROW(InvMod(7, 21), Error);
  EXPECT_TRUE(IsProbablePrime(139));
  EXPECT_FALSE(IsProbablePrime(141));
}

TEST(HashTest, Sha256KnownAnswer) {
  EXPECT_EQ(HexSha256("abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(RngTest, DeterministicAndForked) {
  Rng a("seed"), b("seed");
  for (int i = 0; i < 8; ++i) EXPECT_EQ(a.NextU64(), b.NextU64());
  Rng base("seed");
  EXPECT_NE(base.Fork("x").NextU64(), base.Fork("y").NextU64());
  EXPECT_EQ(base.Fork(3).NextU64(), Rng("seed").Fork(3).NextU64());
  EXPECT_NE(base.Fork(3).NextU64(), base.Fork(4).NextU64());
}

TEST(RngTest, UniformStaysInRange) {
  Rng rng("range");
  BigInt bound = FromHex("7d288539e1aac51d");
  std::set<uint64_t> small;
  for (int i = 0; i < 2000; ++i) {
    BigInt v = rng.Uniform(bound);
    ASSERT_GE(v, 0);
    ASSERT_LT(v, bound);
    small.insert(rng.UniformU64(5));
  }
  EXPECT_EQ(small.size(), 5u);
}

TEST(FieldTest, ArithmeticMatchesIntegers) {
  PrimeField f(139);
  EXPECT_EQ(f.Add(100, 50), 11);
  EXPECT_EQ(f.Sub(3, 5), 137);
  EXPECT_EQ(f.Mul(f.Inv(17), 17), 1);
  for (int a = 1; a < 139; ++a) {
    BigInt sq = f.Mul(a, a);
    ASSERT_TRUE(f.IsSquare(sq));
    BigInt r = f.Sqrt(sq);
    ASSERT_EQ(f.Mul(r, r), sq);
  }
  EXPECT_THROW(PrimeField(13), Error);  // 13 = 1 mod 4
}

TEST(FieldTest, ExtensionInverseAndConjugate) {
  PrimeField f(139);
  QuadraticExtension ext(f);
  Fp2 x{5, 77};
  EXPECT_EQ(ext.Mul(x, ext.Inv(x)), ext.One());
  // x^p is the conjugate (Frobenius).
  EXPECT_EQ(ext.Pow(x, 139), ext.Conj(x));
  EXPECT_EQ(ext.Square(x), ext.Mul(x, x));
}

// Enumeration oracle: count solutions of y^2 = x^3 + x over F_139 directly.
TEST(CurveTest, ToyCurveHasExpectedOrder) {
  SupersingularCurve curve(139);
  std::map<int, int> roots;
  for (int y = 0; y < 139; ++y) roots[y * y % 139]++;
  int count = 1;
  std::vector<CurvePoint> points;
  for (int x = 0; x < 139; ++x) {
    int rhs = (x * x * x + x) % 139;
    count += roots[rhs];
    for (int y = 0; y < 139; ++y) {
      if (y * y % 139 == rhs) points.push_back(CurvePoint::Affine(x, y));
    }
  }
  EXPECT_EQ(count, oracle::kToyPointCount);
  EXPECT_EQ(curve.order(), oracle::kToyPointCount);
  for (const auto& p : points) {
    ASSERT_TRUE(curve.Contains(p));
    ASSERT_TRUE(curve.Multiply(140, p).is_identity());
  }
}

TEST(CurveTest, GroupLaw) {
  const auto& grp = *DefaultGroup();
  const auto& curve = grp.curve();
  CurvePoint g = grp.g();
  CurvePoint a = curve.Multiply(1234567, g);
  CurvePoint b = curve.Multiply(7654321, g);
  EXPECT_EQ(curve.Add(a, b), curve.Multiply(1234567 + 7654321, g));
  EXPECT_EQ(curve.Add(a, curve.Negate(a)), CurvePoint::Identity());
  EXPECT_EQ(curve.Double(a), curve.Add(a, a));
  EXPECT_EQ(curve.Multiply(-5, g), curve.Negate(curve.Multiply(5, g)));
  EXPECT_EQ(curve.Multiply(grp.order(), g), CurvePoint::Identity());
  EXPECT_EQ(curve.Multiply(12345, g), Pt(oracle::kDefaultMul12345g));
  EXPECT_EQ(ToyGroup()->curve().Multiply(12345, ToyGroup()->g()), Pt(oracle::kToyMul12345g));
  EXPECT_THROW(curve.Check(CurvePoint::Affine(1, 1)), Error);
}

TEST(PairingTest, MatchesIndependentOracle) {
  const auto& toy = *ToyGroup();
  EXPECT_EQ(toy.Pair(toy.g(), toy.g()), Gt(oracle::kToyEgg));
  EXPECT_EQ(toy.Pair(toy.g(), toy.h()), Gt(oracle::kToyEgh));
  EXPECT_EQ(toy.Pair(toy.g(), toy.f()), Gt(oracle::kToyEgf));
  EXPECT_EQ(toy.Pair(toy.Mul(3, toy.g()), toy.Mul(5, toy.g())), Gt(oracle::kToyE3g5g));

  const auto& grp = *DefaultGroup();
  EXPECT_EQ(grp.Pair(grp.g(), grp.g()), Gt(oracle::kDefaultEgg));
  EXPECT_EQ(grp.Pair(grp.g(), grp.h()), Gt(oracle::kDefaultEgh));
  EXPECT_EQ(grp.Pair(grp.g(), grp.f()), Gt(oracle::kDefaultEgf));
  EXPECT_EQ(grp.Pair(grp.Mul(3, grp.g()), grp.Mul(5, grp.g())), Gt(oracle::kDefaultE3g5g));
}

TEST(PairingTest, ToyBilinearityExhaustive) {
  const auto& toy = *ToyGroup();
  const GtElement& egg = toy.gt_generator();
  for (int a = 0; a < 35; ++a) {
    for (int b = 0; b < 35; ++b) {
      ASSERT_EQ(toy.Pair(toy.Mul(a, toy.g()), toy.Mul(b, toy.g())), toy.GtPow(egg, a * b))
          << a << " " << b;
    }
  }
}

TEST(PairingTest, ExactOrderAndNonDegeneracy) {
  for (const auto* grp : {ToyGroup().get(), DefaultGroup().get()}) {
    const GtElement& egg = grp->gt_generator();
    const auto& p = grp->params().p_sub;
    const auto& q = grp->params().q_sub;
    EXPECT_TRUE(grp->GtPow(egg, grp->order()).is_one());
    EXPECT_FALSE(grp->GtPow(egg, p).is_one());
    EXPECT_FALSE(grp->GtPow(egg, q).is_one());
    // e(g, h) has order q: the q-th power kills BGN noise.
    EXPECT_TRUE(grp->GtPow(grp->gt_h(), q).is_one());
    EXPECT_FALSE(grp->gt_h().is_one());
    EXPECT_TRUE(grp->Pair(CurvePoint::Identity(), grp->g()).is_one());
  }
}

TEST(PairingTest, RandomBilinearity) {
  const auto& grp = *DefaultGroup();
  Rng rng("bilinear");
  for (int i = 0; i < 20; ++i) {
    BigInt a = rng.Uniform(grp.order()), b = rng.Uniform(grp.order());
    EXPECT_EQ(grp.Pair(grp.Mul(a, grp.g()), grp.Mul(b, grp.g())),
              grp.GtPow(grp.gt_generator(), a * b));
  }
}

TEST(HashToCurveTest, LandsInSubgroupDeterministically) {
  const auto& grp = *DefaultGroup();
  CurvePoint a = grp.HashToG("period-1");
  EXPECT_EQ(a, grp.HashToG("period-1"));
  EXPECT_NE(a, grp.HashToG("period-2"));
  EXPECT_TRUE(grp.InG(a));
  EXPECT_TRUE(grp.Mul(grp.order(), a).is_identity());
  EXPECT_EQ(grp.HashToGt("period-1"), grp.Pair(a, grp.g()));
  EXPECT_TRUE(grp.InGt(grp.HashToGt("period-1")));
}

// BSGS against a plain modular-multiplication group and a linear-scan oracle.
struct ModOps {
  using Element = uint64_t;
  uint64_t mod;
  Element Identity() const { return 1; }
  Element Mul(Element a, Element b) const { return a * b % mod; }
  Element Inverse(Element a) const { return ToU64(InvMod(FromU64(a), FromU64(mod))); }
  std::string Key(Element a) const { return std::to_string(a); }
};

std::optional<uint64_t> LinearScan(const ModOps& ops, uint64_t base, uint64_t target,
                                   uint64_t bound) {
  uint64_t cur = 1;
  for (uint64_t m = 0; m < bound; ++m) {
    if (cur == target) return m;
    cur = ops.Mul(cur, base);
  }
  return std::nullopt;
}

TEST(DlogTest, BsgsAgreesWithLinearScan) {
  ModOps ops{1019};
  for (uint64_t base : {2u, 3u, 5u}) {
    for (uint64_t target = 1; target < 1019; target += 7) {
      for (uint64_t bound : {1u, 2u, 17u, 100u, 1018u}) {
        ASSERT_EQ(BabyStepGiantStep(ops, base, target, bound),
                  LinearScan(ops, base, target, bound))
            << base << " " << target << " " << bound;
      }
    }
  }
  EXPECT_THROW(BabyStepGiantStep(ops, uint64_t{2}, uint64_t{1}, 0), Error);
}

TEST(DlogTest, GroupDlogs) {
  const auto& grp = *DefaultGroup();
  for (uint64_t m : {0u, 1u, 2u, 999u, 65535u}) {
    EXPECT_EQ(DlogBsgs(grp, grp.g(), grp.Mul(m, grp.g()), 1u << 16), m);
    EXPECT_EQ(DlogBsgs(grp, grp.gt_generator(), grp.GtPow(grp.gt_generator(), m), 1u << 16), m);
  }
  EXPECT_EQ(DlogBsgs(grp, grp.g(), grp.Mul(70000, grp.g()), 1u << 16), std::nullopt);
}

TEST(ParamsTest, ToyPreset) {
  GroupParams toy = ToyParams();
  EXPECT_EQ(toy.p_sub, 5);
  EXPECT_EQ(toy.q_sub, 7);
  EXPECT_EQ(toy.n_ord, 35);
  EXPECT_EQ(toy.field_mod, 139);
  EXPECT_EQ(toy.cofactor, 4);
  EXPECT_NE(toy.f, toy.g);
  EXPECT_TRUE(ValidateParams(toy).empty());
}

TEST(ParamsTest, DefaultParamsAreFrozen) {
  EXPECT_EQ(SerializeParams(GenerateParams(ParamOptions{})), oracle::kDefaultParams);
  EXPECT_EQ(SerializeParams(ParseParams(oracle::kDefaultParams)), oracle::kDefaultParams);
  EXPECT_EQ(ParamsDigest(ParseParams(oracle::kDefaultParams)), HexSha256(oracle::kDefaultParams));
}

TEST(ParamsTest, RoundTripAcrossSeedsAndSizes) {
  for (int bits : {8, 16, 40}) {
    ParamOptions o;
    o.bits_p = bits;
    o.bits_q = bits + 3;
    o.seed = "rt-" + std::to_string(bits);
    GroupParams p = GenerateParams(o);
    EXPECT_EQ(BitLength(p.p_sub), bits);
    EXPECT_EQ(BitLength(p.q_sub), bits + 3);
    std::string text = SerializeParams(p);
    EXPECT_EQ(ParseParams(text), p);
    EXPECT_EQ(SerializeParams(ParseParams(text)), text);
  }
}

TEST(ParamsTest, RejectsBadInput) {
  ParamOptions o;
  o.bits_p = 7;
  EXPECT_THROW(GenerateParams(o), Error);
  EXPECT_THROW(ParamsFromPrimes(5, 5, "x"), Error);
  EXPECT_THROW(ParamsFromPrimes(9, 7, "x"), Error);

  std::string text = oracle::kDefaultParams;
  EXPECT_THROW(ParseParams(text.substr(0, text.size() - 1)), Error);  // missing newline
  EXPECT_THROW(ParseParams("bgnlab-params v2\n" + text.substr(17)), Error);
  std::string bad_g = text;
  bad_g.replace(bad_g.find("g 2b6"), 5, "g 2b7");
  EXPECT_THROW(ParseParams(bad_g), Error);

  GroupParams p = ParseParams(text);
  p.h = p.g;  // order N, not q
  EXPECT_FALSE(ValidateParams(p).empty());
}

TEST(CodecTest, ElementRoundTrip) {
  const auto& grp = *DefaultGroup();
  std::vector<GroupElement> elems = {grp.g(), CurvePoint::Identity(), grp.gt_generator(),
                                     GtElement::One()};
  for (const auto& e : elems) {
    std::string s = EncodeElement(e);
    EXPECT_EQ(DecodeElement(s), e);
    EXPECT_EQ(EncodeElement(DecodeElement(s)), s);
  }
  EXPECT_EQ(EncodeElement(CurvePoint::Identity()), "G inf");
  EXPECT_THROW(DecodeElement("G  1 2"), Error);
  EXPECT_THROW(DecodeElement("X 1 2"), Error);
  EXPECT_THROW(DecodeElement("GT 1"), Error);
}

}  // namespace
}  // namespace bgnlab
