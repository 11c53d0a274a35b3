#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "fibersig/catalog.hpp"

namespace fibersig {

// A point of {-1,+1}^3: the side of each of the three coordinate sheets.
using Octant = std::array<int, 3>;

int octant_index(const Octant& w);  // bit i set iff w[i] == -1
Octant octant_at(int index);
std::array<Octant, 8> all_octants();

// Number of regular-fiber components over each octant (1 or 2), by octant_index.
using OctantLabeling = std::array<int, 8>;

// label(w) = 1 iff w1*w2*w3 == parity.
OctantLabeling parity_labeling(int parity);

struct TriplePointModel {
    OctantLabeling labels{};
    // sheet_of_point[j] is the sheet (1..3) containing the image of q_{j+1}.
    std::array<int, 3> sheet_of_point{1, 2, 3};
    // Points (1..3) in the cyclic order induced by the fiber orientation.
    std::array<int, 3> cyclic_order{1, 2, 3};
};

// Every adjacent octant pair with equal labels, and every label outside {1,2}.
std::vector<std::string> octant_violations(const OctantLabeling& labels);
void validate_octants(const OctantLabeling& labels);  // throws ValidationError
void validate_model(const TriplePointModel& model);   // labels, bijection, order

std::vector<Octant> one_octants(const TriplePointModel& model);

// Sign of det[w_{s(a)}, w_{s(b)}, w_{s(c)}] with w_i = omega_i e_i for a 1-octant omega
// and (a,b,c) the cyclic order. iii8_sign uses the first 1-octant in index order.
int iii8_sign_at(const TriplePointModel& model, const Octant& one_octant);
int iii8_sign(const TriplePointModel& model);

// Labels of a III^8 fiber obtained by resolving its fold points: sheet i is the fold
// point sheets[i]; side +1 of a sheet is resolution side 0. The count is the number of
// regular circles after resolving all three points.
OctantLabeling octant_labels_from_fiber(const FiberGraph& fiber, const std::array<VertexId, 3>& sheets);

bool is_chiral(const FiberClass& cls);  // throws DomainError for a class not in the built-in catalog
bool is_chiral(std::string_view name, DimensionPair dim);

// Octant file: 8 lines `<+-1> <+-1> <+-1> <1|2>`, each octant once.
OctantLabeling parse_octant_labels(std::string_view text);
// "q1,q3,q2" or "1,3,2".
std::array<int, 3> parse_point_order(std::string_view text);

}  // namespace fibersig
