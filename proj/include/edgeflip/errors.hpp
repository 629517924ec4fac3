#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace edgeflip {

// Base error carrying a stable machine-readable kind tag (used by the CLI
// to emit {"error": kind, ...} lines).
struct Error : std::runtime_error {
  Error(std::string k, const std::string& detail)
      : std::runtime_error(detail.empty() ? k : k + ": " + detail),
        kind(std::move(k)) {}
  std::string kind;
};

#define EDGEFLIP_DEFINE_ERROR(Name)                    \
  struct Name : Error {                                \
    explicit Name(const std::string& detail = "")      \
        : Error(#Name, detail) {}                      \
  }

EDGEFLIP_DEFINE_ERROR(NotSimple);
EDGEFLIP_DEFINE_ERROR(NotConnected);
EDGEFLIP_DEFINE_ERROR(EmptyVertexSet);
EDGEFLIP_DEFINE_ERROR(SizeLimit);
EDGEFLIP_DEFINE_ERROR(DimensionMismatch);
EDGEFLIP_DEFINE_ERROR(VertexOutOfRange);
EDGEFLIP_DEFINE_ERROR(EdgeOutOfRange);
EDGEFLIP_DEFINE_ERROR(NotInBond);
EDGEFLIP_DEFINE_ERROR(DegreeTooSmall);
EDGEFLIP_DEFINE_ERROR(NotAVertexCutImage);
EDGEFLIP_DEFINE_ERROR(SameVertex);
EDGEFLIP_DEFINE_ERROR(CapExceeded);
EDGEFLIP_DEFINE_ERROR(InvalidDescriptor);
EDGEFLIP_DEFINE_ERROR(InvalidSpec);
EDGEFLIP_DEFINE_ERROR(ParseError);

#undef EDGEFLIP_DEFINE_ERROR

}  // namespace edgeflip
