#include "fibersig/canonical_form.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace fibersig {

std::string CanonicalForm::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < kinds.size(); ++i) out << (i ? " " : "") << tag(kinds[i]);
    out << ']';
    for (const auto& a : arcs) {
        out << ' ' << a[0] + 1;
        if (traits(kinds[a[0]]).labeled_branches > 1) out << '.' << a[1];
        out << "->" << a[2] + 1;
        if (traits(kinds[a[2]]).labeled_branches > 1) out << '.' << a[3];
    }
    return out.str();
}

FiberGraph CanonicalForm::to_graph(DimensionPair dim) const {
    FiberGraph g;
    g.dimension_pair = dim;
    for (std::size_t i = 0; i < kinds.size(); ++i) g.vertices.push_back({static_cast<VertexId>(i + 1), kinds[i]});
    for (const auto& a : arcs) g.arcs.push_back({{a[0] + 1, a[1]}, {a[2] + 1, a[3]}});
    return g;
}

CanonicalForm canonical_form(const FiberGraph& fiber) {
    const int n = static_cast<int>(fiber.vertices.size());
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return fiber.vertices[a].kind < fiber.vertices[b].kind; });

    CanonicalForm best;
    for (int i : order) best.kinds.push_back(fiber.vertices[i].kind);

    std::map<VertexId, int> index;
    for (int i = 0; i < n; ++i) index[fiber.vertices[i].id] = i;
    struct LocalArc {
        int t, tb, h, hb;
    };
    std::vector<LocalArc> arcs;
    for (const auto& a : fiber.arcs)
        arcs.push_back({index.at(a.tail.vertex), a.tail.branch, index.at(a.head.vertex), a.head.branch});

    // Kind groups occupy consecutive positions; `slot` is the current permutation.
    std::vector<int> slot = order;
    std::vector<std::pair<int, int>> groups;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && best.kinds[j] == best.kinds[i]) ++j;
        groups.push_back({i, j});
        i = j;
    }
    std::vector<int> multi;  // vertices with labeled branches
    for (int i = 0; i < n; ++i)
        if (traits(fiber.vertices[i].kind).labeled_branches > 1) multi.push_back(i);
    std::vector<std::vector<int>> branch_map(n, std::vector<int>{0});
    for (int v : multi) {
        branch_map[v].resize(traits(fiber.vertices[v].kind).labeled_branches);
        std::iota(branch_map[v].begin(), branch_map[v].end(), 0);
    }

    bool have_best = false;
    std::vector<int> position(n);
    std::vector<std::array<int, 4>> candidate(arcs.size());

    auto evaluate = [&]() {
        for (int p = 0; p < n; ++p) position[slot[p]] = p;
        for (int rev = 0; rev < 2; ++rev) {
            for (std::size_t k = 0; k < arcs.size(); ++k) {
                const auto& a = arcs[k];
                std::array<int, 4> c{position[a.t], branch_map[a.t][a.tb], position[a.h], branch_map[a.h][a.hb]};
                if (rev) c = {c[2], c[3], c[0], c[1]};
                candidate[k] = c;
            }
            std::sort(candidate.begin(), candidate.end());
            if (!have_best || candidate < best.arcs) {
                best.arcs = candidate;
                have_best = true;
            }
        }
    };

    std::function<void(std::size_t)> branches = [&](std::size_t m) {
        if (m == multi.size()) {
            evaluate();
            return;
        }
        auto& bm = branch_map[multi[m]];
        std::sort(bm.begin(), bm.end());
        do branches(m + 1);
        while (std::next_permutation(bm.begin(), bm.end()));
    };
    std::function<void(std::size_t)> permute = [&](std::size_t g) {
        if (g == groups.size()) {
            branches(0);
            return;
        }
        auto first = slot.begin() + groups[g].first, last = slot.begin() + groups[g].second;
        std::sort(first, last);
        do permute(g + 1);
        while (std::next_permutation(first, last));
    };
    permute(0);
    return best;
}

bool equivalent_modulo_regular(const FiberGraph& a, const FiberGraph& b) {
    auto forms = [](const FiberGraph& g) {
        std::vector<CanonicalForm> out;
        for (const auto& c : singular_components(g)) out.push_back(canonical_form(c));
        std::sort(out.begin(), out.end());
        return out;
    };
    return a.dimension_pair == b.dimension_pair && forms(a) == forms(b);
}

}  // namespace fibersig
