#pragma once

#include <string>

#include "arq/ar_quiver.hpp"

namespace arq {

// Levels as rows, columns p as text columns, as in hand-drawn AR quivers.
// Connector rows between consecutive levels hold '\' for (i,p) -> (i+1,p+1)
// and '/' for (i+1,p) -> (i,p+1). Since n-1 and n are never adjacent, the
// connectors between rows n-1 and n stand for arrows between n-2 and n.
std::string render_ascii(const ARQuiver& ar);

// Plain digraph, nodes "<a,b> @(i,p)" grouped into one rank per column.
std::string render_dot(const ARQuiver& ar);

// {type, rank, quiver, vertices: [{level, p, coeffs, eps}], arrows, m, xi};
// vertices are sorted by (p, level) and arrows index into that list.
std::string render_json(const ARQuiver& ar);

// Inverse of render_json: rebuilds the quiver from its recorded placement and
// arrows without recomputing either.
ARQuiver parse_ar_json(const std::string& text);

}  // namespace arq
