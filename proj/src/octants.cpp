#include "fibersig/octants.hpp"

#include <algorithm>
#include <set>

#include "fibersig/errors.hpp"

namespace fibersig {

namespace {

std::string octant_string(const Octant& w) {
    std::string s = "(";
    for (int i = 0; i < 3; ++i) s += std::string(i ? "," : "") + (w[i] > 0 ? "+" : "-");
    return s + ")";
}

bool is_permutation_of_123(const std::array<int, 3>& a) {
    auto s = a;
    std::sort(s.begin(), s.end());
    return s == std::array<int, 3>{1, 2, 3};
}

int det3(const std::array<std::array<int, 3>, 3>& c) {
    // columns c[0], c[1], c[2]
    return c[0][0] * (c[1][1] * c[2][2] - c[2][1] * c[1][2]) - c[1][0] * (c[0][1] * c[2][2] - c[2][1] * c[0][2]) +
           c[2][0] * (c[0][1] * c[1][2] - c[1][1] * c[0][2]);
}

const std::set<std::string> kChiral54 = {
    "III^5",    "III^7",    "III^8",    "IV^{0,5}", "IV^{0,7}", "IV^{0,8}", "IV^{1,5}", "IV^{1,7}", "IV^{1,8}",
    "IV^{10}",  "IV^{11}",  "IV^{12}",  "IV^{13}",  "IV^{18}",  "IV^g",     "IV^h",     "IV^k"};

}  // namespace

int octant_index(const Octant& w) { return (w[0] < 0 ? 1 : 0) | (w[1] < 0 ? 2 : 0) | (w[2] < 0 ? 4 : 0); }

Octant octant_at(int index) {
    return {index & 1 ? -1 : 1, index & 2 ? -1 : 1, index & 4 ? -1 : 1};
}

std::array<Octant, 8> all_octants() {
    std::array<Octant, 8> out{};
    for (int i = 0; i < 8; ++i) out[i] = octant_at(i);
    return out;
}

OctantLabeling parity_labeling(int parity) {
    OctantLabeling labels{};
    for (int i = 0; i < 8; ++i) {
        auto w = octant_at(i);
        labels[i] = w[0] * w[1] * w[2] == parity ? 1 : 2;
    }
    return labels;
}

std::vector<std::string> octant_violations(const OctantLabeling& labels) {
    std::vector<std::string> out;
    for (int i = 0; i < 8; ++i)
        if (labels[i] != 1 && labels[i] != 2)
            out.push_back("octant " + octant_string(octant_at(i)) + " has label " + std::to_string(labels[i]));
    for (int i = 0; i < 8; ++i)
        for (int bit = 1; bit < 8; bit <<= 1) {
            int j = i | bit;
            if (j == i) continue;
            if (labels[i] == labels[j])
                out.push_back("adjacent octants " + octant_string(octant_at(i)) + " and " +
                              octant_string(octant_at(j)) + " share label " + std::to_string(labels[i]));
        }
    return out;
}

void validate_octants(const OctantLabeling& labels) {
    auto v = octant_violations(labels);
    if (!v.empty()) throw ValidationError("octant labeling", std::move(v));
}

void validate_model(const TriplePointModel& model) {
    auto v = octant_violations(model.labels);
    if (!is_permutation_of_123(model.sheet_of_point)) v.push_back("sheet-of-point is not a bijection onto sheets 1..3");
    if (!is_permutation_of_123(model.cyclic_order)) v.push_back("cyclic order is not an ordering of q1, q2, q3");
    if (!v.empty()) throw ValidationError("triple point model", std::move(v));
}

std::vector<Octant> one_octants(const TriplePointModel& model) {
    validate_octants(model.labels);
    std::vector<Octant> out;
    for (int i = 0; i < 8; ++i)
        if (model.labels[i] == 1) out.push_back(octant_at(i));
    return out;
}

int iii8_sign_at(const TriplePointModel& model, const Octant& w) {
    validate_model(model);
    if (model.labels[octant_index(w)] != 1) throw DomainError("octant " + octant_string(w) + " is not a 1-octant");
    std::array<std::array<int, 3>, 3> columns{};
    for (int k = 0; k < 3; ++k) {
        int sheet = model.sheet_of_point[model.cyclic_order[k] - 1] - 1;
        columns[k] = {0, 0, 0};
        columns[k][sheet] = w[sheet];
    }
    return det3(columns) > 0 ? 1 : -1;
}

int iii8_sign(const TriplePointModel& model) { return iii8_sign_at(model, one_octants(model).front()); }

OctantLabeling octant_labels_from_fiber(const FiberGraph& fiber, const std::array<VertexId, 3>& sheets) {
    OctantLabeling labels{};
    for (int i = 0; i < 8; ++i) {
        auto w = octant_at(i);
        std::vector<std::pair<VertexId, int>> choices;
        for (int s = 0; s < 3; ++s) choices.push_back({sheets[s], w[s] > 0 ? 0 : 1});
        FiberGraph g = resolve_folds(fiber, choices);
        if (g.has_singular_points()) throw DomainError("octant_labels_from_fiber: fiber has other singular points");
        labels[i] = g.regular_circles;
    }
    return labels;
}

bool is_chiral(std::string_view name, DimensionPair dim) {
    const auto& cls = Catalog::builtin(dim).at(name);
    if (cls.is_regular()) return false;
    if (dim == DimensionPair::d5_4) return kChiral54.count(cls.name) != 0;
    return std::any_of(cls.tokens.begin(), cls.tokens.end(),
                       [](const std::string& t) { return t == "5" || t == "7" || t == "8"; });
}

bool is_chiral(const FiberClass& cls) { return is_chiral(cls.name, cls.dimension_pair); }

OctantLabeling parse_octant_labels(std::string_view text) {
    OctantLabeling labels{};
    std::array<bool, 8> seen{};
    int count = 0;
    for (const auto& line : tokenize_lines(text)) {
        if (line.words.size() != 4) throw ParseError(line.number, "expected `<+-1> <+-1> <+-1> <1|2>`");
        Octant w{};
        for (int k = 0; k < 3; ++k) {
            auto s = parse_integer(line.words[k], line.number);
            if (s != 1 && s != -1) throw ParseError(line.number, "octant coordinates must be +1 or -1");
            w[k] = static_cast<int>(s);
        }
        auto label = parse_integer(line.words[3], line.number);
        if (label != 1 && label != 2) throw ParseError(line.number, "label must be 1 or 2");
        int idx = octant_index(w);
        if (seen[idx]) throw ParseError(line.number, "octant " + octant_string(w) + " listed twice");
        seen[idx] = true;
        labels[idx] = static_cast<int>(label);
        ++count;
    }
    if (count != 8) throw ParseError(0, "octant file lists " + std::to_string(count) + " octants, expected 8");
    return labels;
}

std::array<int, 3> parse_point_order(std::string_view text) {
    std::array<int, 3> out{};
    int k = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) comma = text.size();
        auto item = text.substr(pos, comma - pos);
        if (!item.empty() && (item.front() == 'q' || item.front() == 'Q')) item.remove_prefix(1);
        if (k == 3 || item.size() != 1 || item[0] < '1' || item[0] > '3')
            throw ParseError(0, "malformed point order '" + std::string(text) + "', expected e.g. q1,q2,q3");
        out[k++] = item[0] - '0';
        pos = comma + 1;
    }
    if (k != 3 || !is_permutation_of_123(out))
        throw ParseError(0, "point order '" + std::string(text) + "' must list q1, q2, q3 once each");
    return out;
}

}  // namespace fibersig
