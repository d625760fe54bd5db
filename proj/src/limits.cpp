#include "superflats/limits.hpp"

#include <charconv>
#include <string>

#include "superflats/errors.hpp"

namespace superflats {

namespace {
Limits g_limits;

template <typename T>
void assign(T& field, std::string_view key, std::string_view value) {
  long long parsed = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
  if (ec != std::errc{} || ptr != value.data() + value.size() || parsed <= 0) {
    throw ParseError("bad value for limit '" + std::string(key) + "': '" +
                     std::string(value) + "'");
  }
  field = static_cast<T>(parsed);
}
}  // namespace

const Limits& limits() { return g_limits; }
void set_limits(const Limits& l) { g_limits = l; }

Limits parse_limits(std::string_view spec, Limits base) {
  while (!spec.empty()) {
    auto comma = spec.find(',');
    auto item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("limit entry without '=': '" + std::string(item) + "'");
    }
    auto key = item.substr(0, eq);
    auto value = item.substr(eq + 1);
    if (key == "permanent") assign(base.permanent_side, key, value);
    else if (key == "rank") assign(base.rank_side, key, value);
    else if (key == "flats") assign(base.flats_elements, key, value);
    else if (key == "lattice_iso") assign(base.lattice_iso_elements, key, value);
    else if (key == "chains") assign(base.maximal_chains, key, value);
    else if (key == "chromatic") assign(base.chromatic_vertices, key, value);
    else if (key == "minor") assign(base.minor_vertices, key, value);
    else if (key == "cmrank") assign(base.cm_rank_vertices, key, value);
    else if (key == "wildcard") assign(base.wildcard_side, key, value);
    else if (key == "canonical") assign(base.canonical_vertices, key, value);
    else if (key == "independents") assign(base.independents_vertices, key, value);
    else throw ParseError("unknown limit '" + std::string(key) + "'");
  }
  return base;
}

}  // namespace superflats
