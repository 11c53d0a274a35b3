#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace fibersig {

struct InteriorVertex {
    int id = 0;
    std::string vertex_class;  // a codim-4 (5,4) class name
};

struct BoundaryVertex {
    int id = 0;
    int side = 0;  // 0: source end of the bordism, 1: target end
    int sign = 1;  // declared sign, must match the arc direction
};

struct LocusArc {
    int from = 0;
    int to = 0;
};

// Closure of the III^8 locus in a generic bordism: a directed graph whose
// interior vertices are codim-4 points and whose boundary vertices are the III^8
// points of the two ends.
struct LocusGraph {
    std::vector<InteriorVertex> interior;
    std::vector<BoundaryVertex> boundary;
    std::vector<LocusArc> arcs;
};

enum class InteriorRole {
    pass_through,  // one arc in, one arc out
    degree_eight,  // four in, four out
    isolated,      // chiral class off the locus: no arcs
    balanced       // achiral class: as many arcs in as out
};

// Throws DomainError for a name that is not a codim-4 (5,4) class.
InteriorRole interior_role(std::string_view vertex_class);

std::vector<std::string> locus_violations(const LocusGraph& graph);
void validate_locus(const LocusGraph& graph);  // throws ValidationError

// Side 0: +1 for an outgoing arc; side 1: +1 for an incoming arc.
int boundary_sum(const LocusGraph& graph, int side);            // validates first
int boundary_sum_unchecked(const LocusGraph& graph, int side);  // for corrupted controls
bool check_invariance(const LocusGraph& graph);                  // does not validate

LocusGraph disjoint_union(const LocusGraph& a, const LocusGraph& b);
LocusGraph copies(const LocusGraph& graph, int m);
// Opposite orientation: boundary signs negated and every arc reversed.
LocusGraph reversed_orientation(const LocusGraph& graph);

struct RandomLocusOptions {
    int max_interior = 6;
    int max_extra_boundary = 6;
    int max_balanced_degree = 2;
};

// Built from legal vertex templates, then joined by a random matching of arc ends.
LocusGraph random_locus_graph(std::mt19937_64& rng, const RandomLocusOptions& options = {});

LocusGraph parse_locus_graph(std::string_view text);
std::string format_locus_graph(const LocusGraph& graph);

}  // namespace fibersig
