#include "fibersig/kinds.hpp"

#include <cctype>
#include <string>

namespace fibersig {

namespace {

constexpr std::array<KindTraits, 8> kTraits = {{
    {"definite-fold", 1, 0, 1, Decoration::isolated_dot, true, 1},
    {"indefinite-fold", 1, 4, 1, Decoration::crossing, true, 1},
    {"cusp", 2, 2, 1, Decoration::cusp_23, true, 2},
    {"definite-swallowtail", 3, 0, 1, Decoration::isolated_square, true, 3},
    {"indefinite-swallowtail", 3, 4, 2, Decoration::tangency, true, 3},
    {"butterfly", 4, 2, 1, Decoration::cusp_25, false, 4},
    {"definite-D4", 4, 2, 1, Decoration::arc_with_dot, false, 4},
    {"indefinite-D4", 4, 6, 3, Decoration::triple_star, false, 4},
}};

}  // namespace

std::string to_string(DimensionPair dim) { return dim == DimensionPair::d4_3 ? "4 3" : "5 4"; }

std::string_view compact_name(DimensionPair dim) { return dim == DimensionPair::d4_3 ? "4,3" : "5,4"; }

std::optional<DimensionPair> parse_dimension_pair(std::string_view text) {
    std::string digits;
    for (char c : text) {
        if (std::isdigit(static_cast<unsigned char>(c))) digits.push_back(c);
        else if (c != ',' && c != ' ' && c != '(' && c != ')') return std::nullopt;
    }
    if (digits == "43") return DimensionPair::d4_3;
    if (digits == "54") return DimensionPair::d5_4;
    return std::nullopt;
}

const KindTraits& traits(SingularPointKind kind) { return kTraits[static_cast<std::size_t>(kind)]; }

std::string_view tag(SingularPointKind kind) { return traits(kind).tag; }

std::optional<SingularPointKind> kind_from_tag(std::string_view t) {
    for (auto kind : all_kinds)
        if (traits(kind).tag == t) return kind;
    return std::nullopt;
}

std::string_view decoration_name(Decoration decoration) {
    switch (decoration) {
        case Decoration::isolated_dot: return "isolated-dot";
        case Decoration::crossing: return "crossing";
        case Decoration::cusp_23: return "cusp-23";
        case Decoration::isolated_square: return "isolated-square";
        case Decoration::tangency: return "tangency";
        case Decoration::cusp_25: return "cusp-25";
        case Decoration::arc_with_dot: return "arc-with-dot";
        case Decoration::triple_star: return "triple-star";
    }
    return "?";
}

bool legal_in(SingularPointKind kind, DimensionPair dim) {
    return dim == DimensionPair::d5_4 || traits(kind).legal_in_4_3;
}

int ends_per_branch_direction(SingularPointKind kind) {
    const auto& t = traits(kind);
    return t.required_degree / (2 * t.labeled_branches);
}

}  // namespace fibersig
