#include "depth2/extremal_kind.hpp"

#include "depth2/errors.hpp"

namespace depth2 {

std::string to_string(ExtremalKind kind) {
  switch (kind) {
    case ExtremalKind::ii: return "ii";
    case ExtremalKind::iu: return "iu";
    case ExtremalKind::ui: return "ui";
    case ExtremalKind::uu: return "uu";
  }
  return "?";
}

ExtremalKind parse_extremal_kind(const std::string& name) {
  for (const ExtremalKind k : kExtremalKinds) {
    if (to_string(k) == name) return k;
  }
  throw LookupError("unknown extremal kind '" + name + "'");
}

}  // namespace depth2
