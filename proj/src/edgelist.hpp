#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace ordeg {

// Canonical text form: one "u v" line per edge with u < v, lines sorted,
// trailing newline. A "# order N" first line appears only when N is not
// simply 1 + max endpoint (isolated tail vertices, edgeless graphs).
std::string emit_edge_list(const Graph& g);

// Accepts the emitted form plus comment lines ('#'), blank lines, and
// arbitrary whitespace between the two ids. Order comes from explicit_order
// when given, else a "# order N" directive, else 1 + max endpoint.
Graph parse_edge_list(std::string_view text, std::optional<std::uint64_t> explicit_order = std::nullopt);

}  // namespace ordeg
