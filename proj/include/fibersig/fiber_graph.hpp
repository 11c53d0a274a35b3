#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fibersig/kinds.hpp"
#include "fibersig/text_io.hpp"

namespace fibersig {

using VertexId = int;

struct SingularVertex {
    VertexId id = 0;
    SingularPointKind kind = SingularPointKind::indefinite_fold;
};

struct ArcEnd {
    VertexId vertex = 0;
    int branch = 0;  // only meaningful at kinds with labeled branches
    auto operator<=>(const ArcEnd&) const = default;
};

// An arc of the regular part, oriented by the fiber orientation (tail -> head).
struct Arc {
    ArcEnd tail;
    ArcEnd head;
    auto operator<=>(const Arc&) const = default;
};

struct FiberGraph {
    DimensionPair dimension_pair = DimensionPair::d4_3;
    std::vector<SingularVertex> vertices;
    std::vector<Arc> arcs;
    int regular_circles = 0;

    const SingularVertex* find_vertex(VertexId id) const;
    bool has_singular_points() const { return !vertices.empty(); }
};

std::vector<std::string> fiber_violations(const FiberGraph& fiber);
void validate_fiber(const FiberGraph& fiber);  // throws ValidationError

// Sum of local codimensions; validates first.
int codimension(const FiberGraph& fiber);

// Connected components that contain singular points, in order of their first vertex.
// Regular circles are dropped.
std::vector<FiberGraph> singular_components(const FiberGraph& fiber);

// Ids of the second graph are shifted past the first graph's largest id.
FiberGraph disjoint_union(const FiberGraph& a, const FiberGraph& b);

// Every arc direction flipped (the fiber with the opposite orientation).
FiberGraph reversed(const FiberGraph& fiber);

// Perturbs a fold point off its sheet. For an indefinite fold, side 0 joins the
// i-th incoming arc to the i-th outgoing arc (arc-list order) and side 1 crosses
// them; closed loops become regular circles. A definite fold vanishes on side 0
// and becomes a regular circle on side 1.
FiberGraph resolve_fold(const FiberGraph& fiber, VertexId vertex, int side);
// Several fold points at once, each side read against the original arc list so the
// choices do not depend on one another.
FiberGraph resolve_folds(const FiberGraph& fiber, const std::vector<std::pair<VertexId, int>>& choices);

// Text format: `dim 4 3`, `v <id> <kind-tag>`, `e <end> <end>` with end = <id>[.<branch>],
// `circles <n>`. A missing dim line means (4,3).
FiberGraph parse_fiber(std::string_view text);
// Applies one fiber line; returns false if the keyword is not a fiber keyword.
bool apply_fiber_line(FiberGraph& fiber, const TextLine& line);
std::string format_fiber(const FiberGraph& fiber);

}  // namespace fibersig
