#pragma once

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "fibersig/fiber_graph.hpp"

namespace fibersig {

// Lexicographically least relabeling of a fiber graph: vertices are numbered in kind
// order, each arc is (tail position, tail branch, head position, head branch).
// Minimised over kind-preserving vertex permutations, branch permutations at
// multi-branch points and reversal of all arc directions. These are exactly the
// local symmetries of the singular points at the level of branches.
struct CanonicalForm {
    std::vector<SingularPointKind> kinds;
    std::vector<std::array<int, 4>> arcs;

    auto operator<=>(const CanonicalForm&) const = default;

    std::string to_string() const;
    FiberGraph to_graph(DimensionPair dim) const;  // ids 1..n
};

// Intended for connected graphs (reversal is applied to the whole graph at once);
// regular circles are ignored.
CanonicalForm canonical_form(const FiberGraph& fiber);

// Isomorphism modulo regular fibers: equal multisets of component canonical forms.
bool equivalent_modulo_regular(const FiberGraph& a, const FiberGraph& b);

}  // namespace fibersig
