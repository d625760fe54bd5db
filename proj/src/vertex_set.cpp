#include "superflats/vertex_set.hpp"

namespace superflats {

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (int v : *this) {
    if (!first_item) out += ',';
    out += std::to_string(v);
    first_item = false;
  }
  out += '}';
  return out;
}

}  // namespace superflats
