#include "bgnlab/hash_to_curve.h"

#include <string>
#include <vector>

#include "bgnlab/error.h"
#include "bgnlab/hash.h"

namespace bgnlab {

namespace {

void AppendU32(std::string& out, uint32_t v) {
  for (int i = 3; i >= 0; --i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

}  // namespace

BigInt HashToField(const PrimeField& field, std::string_view label,
                   uint32_t counter) {
  const size_t want = (BitLength(field.modulus()) + 128 + 7) / 8;
  std::vector<uint8_t> bytes;
  bytes.reserve(want + 32);
  for (uint32_t block = 0; bytes.size() < want; ++block) {
    std::string msg = "bgnlab.h2c.v1|";
    AppendU32(msg, static_cast<uint32_t>(label.size()));
    msg.append(label);
    AppendU32(msg, counter);
    AppendU32(msg, block);
    Digest d = Sha256(msg);
    bytes.insert(bytes.end(), d.begin(), d.end());
  }
  bytes.resize(want);
  return field.Reduce(FromBytes(bytes));
}

CurvePoint HashToSubgroup(const SupersingularCurve& curve,
                          const BigInt& cofactor, std::string_view label) {
  for (uint32_t j = 0; j < kMaxHashToCurveAttempts; ++j) {
    std::optional<CurvePoint> lifted =
        curve.Lift(HashToField(curve.field(), label, j));
    if (!lifted) continue;
    CurvePoint cleared = curve.Multiply(cofactor, *lifted);
    if (!cleared.is_identity()) return cleared;
  }
  throw Error(ErrorCode::kHashExhausted,
              "no subgroup point found for label '" + std::string(label) + "'");
}

}  // namespace bgnlab
