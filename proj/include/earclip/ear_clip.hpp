#pragma once

#include "earclip/polygon.hpp"
#include "earclip/triangulation.hpp"

namespace earclip {

enum class Execution { Serial, Parallel };

/// Ear test on the current ring: `v` is convex and no reflex node other than
/// its two neighbours lies in the closed triangle (prev, v, next). Reflex
/// status is read live from the ring, so the result reflects the current
/// polygon rather than the input.
bool is_ear(const VertexRing& ring, NodeId v);

/// Recomputes angle, convexity and ear status of the two nodes adjacent to a
/// cut. No other node is touched.
void update_after_cut(VertexRing& ring, NodeId left, NodeId right);

/// After `flipped` turned from reflex to convex, re-tests every convex
/// non-ear node whose triangle contained it. Cutting only shrinks the reflex
/// set, so this is the only way a node away from the cut changes status.
/// Returns the number of nodes that became ears.
std::size_t refresh_unblocked(VertexRing& ring, NodeId flipped);

/// Always clips the ear with the smallest interior angle (ties: smallest
/// vertex index, then earliest position from the ring head). Emits n - 2
/// triangles or throws EarSearchFailed.
Triangulation triangulate_basic(VertexRing ring, Execution exec = Execution::Serial);

/// Sequential ear clipping: scanning resumes at the successor of the last
/// clipped ear and the first ear found is cut.
Triangulation triangulate_traditional(VertexRing ring, Execution exec = Execution::Serial);

}  // namespace earclip
