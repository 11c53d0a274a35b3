#pragma once

// Test-only chirality oracle at the level of arc-end ports, written independently
// of the library's canonical form.
//
// A fiber is achiral iff some kind-preserving vertex bijection together with a
// local symmetry at every vertex maps the graph onto itself (rev = false) or onto
// its reverse (rev = true), with rev holding exactly when the induced map of the
// target preserves orientation. The target sign is the product of the local signs
// and the sign of the permutation of odd-dimensional normal blocks.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "fibersig/fiber_graph.hpp"

namespace oracle {

using fibersig::FiberGraph;
using fibersig::SingularPointKind;

struct LocalSymmetry {
    std::vector<int> port_map;  // local port -> local port
    bool rev;
    int target_sign;
};

// Local ports: in/out status per port.
inline std::vector<bool> port_is_in(SingularPointKind k) {
    switch (k) {
        case SingularPointKind::indefinite_fold: return {true, true, false, false};  // i0 i1 o0 o1
        case SingularPointKind::indefinite_swallowtail: return {true, false, true, false};  // i0 o0 i1 o1
        case SingularPointKind::cusp:
        case SingularPointKind::butterfly:
        case SingularPointKind::definite_d4: return {true, false};  // i o
        default: return {};
    }
}

inline std::vector<LocalSymmetry> local_symmetries(SingularPointKind k) {
    switch (k) {
        case SingularPointKind::indefinite_fold: {
            std::vector<LocalSymmetry> out;
            for (int s = 0; s < 2; ++s)
                for (int t = 0; t < 2; ++t) {
                    // no reversal: ins among ins (swap s), outs among outs (swap t)
                    out.push_back({{s, 1 - s, 2 + t, 3 - t}, false, s == t ? 1 : -1});
                    // reversal: i_k -> o_{k^s}, o_k -> i_{k^t}
                    out.push_back({{2 + s, 3 - s, t, 1 - t}, true, s == t ? 1 : -1});
                }
            return out;
        }
        case SingularPointKind::cusp:
        case SingularPointKind::butterfly: return {{{0, 1}, false, 1}, {{1, 0}, true, 1}};
        case SingularPointKind::definite_d4:
            return {{{0, 1}, false, 1}, {{0, 1}, false, -1}, {{1, 0}, true, -1}, {{1, 0}, true, 1}};
        case SingularPointKind::indefinite_swallowtail:
            // ports i0 o0 i1 o1
            return {{{0, 1, 2, 3}, false, 1},
                    {{3, 2, 1, 0}, true, 1},
                    {{1, 0, 3, 2}, true, -1},
                    {{2, 3, 0, 1}, false, -1}};
        case SingularPointKind::definite_fold: return {{{}, false, 1}, {{}, true, 1}};
        case SingularPointKind::definite_swallowtail:
            return {{{}, false, 1}, {{}, false, -1}, {{}, true, 1}, {{}, true, -1}};
        default: return {};
    }
}

inline int block_parity_dimension(SingularPointKind k) {
    switch (k) {
        case SingularPointKind::definite_fold:
        case SingularPointKind::indefinite_fold: return 1;
        case SingularPointKind::cusp: return 2;
        case SingularPointKind::definite_swallowtail:
        case SingularPointKind::indefinite_swallowtail: return 3;
        default: return 4;
    }
}

inline int permutation_sign(const std::vector<int>& p) {
    int sign = 1;
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(p[j])) seen[j] = true, ++len;
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

// nullopt when the graph contains a kind the oracle does not model (indefinite D4).
inline std::optional<bool> is_chiral(const FiberGraph& g) {
    const int n = static_cast<int>(g.vertices.size());
    for (const auto& v : g.vertices)
        if (v.kind == SingularPointKind::indefinite_d4) return std::nullopt;

    std::map<int, int> index;
    for (int i = 0; i < n; ++i) index[g.vertices[i].id] = i;
    // Assign global ports: fold ins/outs in arc order; swallowtail by branch.
    std::vector<int> base(n + 1, 0);
    for (int i = 0; i < n; ++i) base[i + 1] = base[i] + static_cast<int>(port_is_in(g.vertices[i].kind).size());
    std::vector<int> next_in(n, 0), next_out(n, 0);
    auto port_of = [&](const fibersig::ArcEnd& e, bool in) {
        int v = index.at(e.vertex);
        switch (g.vertices[v].kind) {
            case SingularPointKind::indefinite_fold: return base[v] + (in ? next_in[v]++ : 2 + next_out[v]++);
            case SingularPointKind::indefinite_swallowtail: return base[v] + 2 * e.branch + (in ? 0 : 1);
            default: return base[v] + (in ? 0 : 1);
        }
    };
    std::vector<std::pair<int, int>> arcs;  // (out port, in port)
    for (const auto& a : g.arcs) {
        int o = port_of(a.tail, false);
        int i = port_of(a.head, true);
        arcs.emplace_back(o, i);
    }
    auto sorted_arcs = arcs;
    std::sort(sorted_arcs.begin(), sorted_arcs.end());
    std::vector<int> owner(base[n]);
    for (int v = 0; v < n; ++v)
        for (int p = base[v]; p < base[v + 1]; ++p) owner[p] = v;

    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::vector<std::vector<LocalSymmetry>> syms(n);
    for (int i = 0; i < n; ++i) syms[i] = local_symmetries(g.vertices[i].kind);

    bool achiral = false;
    std::vector<int> chosen(n, 0);
    std::function<void(int, bool, int)> choose = [&](int v, bool rev, int sign) {
        if (achiral) return;
        if (v == n) {
            if (rev != (sign == 1)) return;
            std::vector<int> image(base[n]);
            for (int u = 0; u < n; ++u) {
                const auto& s = syms[u][chosen[u]];
                for (int p = base[u]; p < base[u + 1]; ++p) image[p] = base[perm[u]] + s.port_map[p - base[u]];
            }
            std::vector<std::pair<int, int>> mapped;
            for (auto [o, i] : arcs) mapped.push_back(rev ? std::make_pair(image[i], image[o]) : std::make_pair(image[o], image[i]));
            std::sort(mapped.begin(), mapped.end());
            if (mapped == sorted_arcs) achiral = true;
            return;
        }
        for (std::size_t k = 0; k < syms[v].size(); ++k) {
            if (syms[v][k].rev != rev) continue;
            chosen[v] = static_cast<int>(k);
            choose(v + 1, rev, sign * syms[v][k].target_sign);
        }
    };
    // Enumerate kind-preserving permutations.
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = g.vertices[i].kind == g.vertices[perm[i]].kind;
        if (!ok) continue;
        int block_sign = 1;
        for (auto k : fibersig::all_kinds) {
            if (block_parity_dimension(k) % 2 == 0) continue;
            std::vector<int> local_index(n, -1), sub;
            int c = 0;
            for (int i = 0; i < n; ++i)
                if (g.vertices[i].kind == k) local_index[i] = c++;
            for (int i = 0; i < n; ++i)
                if (g.vertices[i].kind == k) sub.push_back(local_index[perm[i]]);
            block_sign *= permutation_sign(sub);
        }
        for (bool rev : {false, true}) choose(0, rev, block_sign);
        if (achiral) return false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return true;
}

}  // namespace oracle
