#include "bgnlab/codec.h"

#include "bgnlab/error.h"

namespace bgnlab {

std::vector<std::string_view> SplitFields(std::string_view text) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (;;) {
    size_t end = text.find(' ', start);
    std::string_view field = text.substr(start, end - start);
    if (field.empty()) {
      throw Error(ErrorCode::kParse, "empty field in '" + std::string(text) + "'");
    }
    out.push_back(field);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

std::string EncodePoint(const CurvePoint& p) {
  if (p.infinity) return "inf";
  return ToHex(p.x) + " " + ToHex(p.y);
}

CurvePoint DecodePoint(std::string_view text) {
  if (text == "inf") return CurvePoint::Identity();
  auto fields = SplitFields(text);
  if (fields.size() != 2) {
    throw Error(ErrorCode::kParse, "point needs two coordinates or 'inf'");
  }
  return CurvePoint::Affine(FromHex(fields[0]), FromHex(fields[1]));
}

std::string EncodeGt(const GtElement& e) {
  return ToHex(e.v.re) + " " + ToHex(e.v.im);
}

GtElement DecodeGt(std::string_view text) {
  auto fields = SplitFields(text);
  if (fields.size() != 2) {
    throw Error(ErrorCode::kParse, "G_T element needs two coordinates");
  }
  return {{FromHex(fields[0]), FromHex(fields[1])}};
}

std::string EncodeElement(const GroupElement& e) {
  if (const auto* p = std::get_if<CurvePoint>(&e)) return "G " + EncodePoint(*p);
  return "GT " + EncodeGt(std::get<GtElement>(e));
}

GroupElement DecodeElement(std::string_view text) {
  if (text.starts_with("G ")) return DecodePoint(text.substr(2));
  if (text.starts_with("GT ")) return DecodeGt(text.substr(3));
  throw Error(ErrorCode::kParse, "element must start with 'G ' or 'GT '");
}

}  // namespace bgnlab
