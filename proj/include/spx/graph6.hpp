#pragma once

#include <string>
#include <string_view>

#include "spx/graph.hpp"

namespace spx {

/// McKay graph6 encoding: order header, then the upper triangle column by
/// column (x(0,1), x(0,2), x(1,2), x(0,3), ...) packed into 6-bit groups,
/// each offset by 63, zero padded. Orders above 62 use the '~' long header.
std::string to_graph6(const Graph& g);

/// Throws ParseError carrying the byte offset of the first bad byte.
Graph from_graph6(std::string_view text);

}  // namespace spx
