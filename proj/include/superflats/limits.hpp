#pragma once

#include <cstddef>
#include <string_view>

namespace superflats {

// Search ceilings. Every exhaustive routine checks its input against one
// of these and throws SizeLimitError when it is exceeded.
struct Limits {
  int permanent_side = 10;
  int rank_side = 20;
  std::size_t flats_elements = 4096;
  std::size_t lattice_iso_elements = 256;
  std::size_t maximal_chains = 1'000'000;
  int chromatic_vertices = 16;
  int minor_vertices = 10;
  int cm_rank_vertices = 9;
  int wildcard_side = 12;
  int canonical_vertices = 64;
  int independents_vertices = 20;
};

// Process-wide limits. Set once at startup (the CLI does this from
// SUPERFLATS_LIMITS); reads afterwards are unsynchronized.
const Limits& limits();
void set_limits(const Limits& l);

// Parses "key=value,key=value" on top of `base`. Unknown keys throw
// ParseError.
Limits parse_limits(std::string_view spec, Limits base = {});

}  // namespace superflats
