#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace fibersig {

enum class DimensionPair : std::uint8_t { d4_3, d5_4 };

std::string to_string(DimensionPair dim);               // "4 3"
std::string_view compact_name(DimensionPair dim);       // "4,3"
std::optional<DimensionPair> parse_dimension_pair(std::string_view text);  // "4,3" | "4 3" | "(4,3)"

enum class Decoration : std::uint8_t {
    isolated_dot,
    crossing,
    cusp_23,
    isolated_square,
    tangency,
    cusp_25,
    arc_with_dot,
    triple_star
};

// Declaration order is the canonical vertex order used by canonical forms.
enum class SingularPointKind : std::uint8_t {
    definite_fold,
    indefinite_fold,
    cusp,
    definite_swallowtail,
    indefinite_swallowtail,
    butterfly,
    definite_d4,
    indefinite_d4
};

inline constexpr std::array<SingularPointKind, 8> all_kinds = {
    SingularPointKind::definite_fold,          SingularPointKind::indefinite_fold,
    SingularPointKind::cusp,                   SingularPointKind::definite_swallowtail,
    SingularPointKind::indefinite_swallowtail, SingularPointKind::butterfly,
    SingularPointKind::definite_d4,            SingularPointKind::indefinite_d4};

struct KindTraits {
    std::string_view tag;
    int local_codimension;
    int required_degree;
    // Branches that must be named on arc ends. A fold has two transverse branches,
    // but one carries both incoming ends and the other both outgoing ends, so the
    // branch is implied by the arc direction and is never named.
    int labeled_branches;
    Decoration decoration;
    bool legal_in_4_3;
    // Dimension of the normal block the kind occupies in the target; a block swap
    // between two points of the same kind changes the target orientation by
    // (-1)^block_dimension.
    int block_dimension;
};

const KindTraits& traits(SingularPointKind kind);
std::optional<SingularPointKind> kind_from_tag(std::string_view tag);
std::string_view tag(SingularPointKind kind);
std::string_view decoration_name(Decoration decoration);
bool legal_in(SingularPointKind kind, DimensionPair dim);

// Ends of one direction (incoming or outgoing) on each branch.
int ends_per_branch_direction(SingularPointKind kind);

}  // namespace fibersig
