#ifndef BGNLAB_CODEC_H_
#define BGNLAB_CODEC_H_

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bgnlab/curve.h"
#include "bgnlab/pairing.h"

namespace bgnlab {

// A value that lives either in G (curve subgroup) or in G_T.
using GroupElement = std::variant<CurvePoint, GtElement>;

inline bool IsGt(const GroupElement& e) {
  return std::holds_alternative<GtElement>(e);
}

// "inf" or "<x-hex> <y-hex>".
std::string EncodePoint(const CurvePoint& p);
CurvePoint DecodePoint(std::string_view text);

// "<re-hex> <im-hex>".
std::string EncodeGt(const GtElement& e);
GtElement DecodeGt(std::string_view text);

// Level-tagged: "G inf", "G <x> <y>" or "GT <re> <im>". Syntax only; callers
// check group membership.
std::string EncodeElement(const GroupElement& e);
GroupElement DecodeElement(std::string_view text);

// Splits on single spaces; empty fields are a parse error.
std::vector<std::string_view> SplitFields(std::string_view text);

}  // namespace bgnlab

#endif  // BGNLAB_CODEC_H_
