#include "fibersig/fiber_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fibersig/errors.hpp"

namespace fibersig {

const SingularVertex* FiberGraph::find_vertex(VertexId id) const {
    for (const auto& v : vertices)
        if (v.id == id) return &v;
    return nullptr;
}

std::vector<std::string> fiber_violations(const FiberGraph& fiber) {
    std::vector<std::string> out;
    if (fiber.regular_circles < 0) out.push_back("regular circle count is negative");

    std::map<VertexId, SingularPointKind> kinds;
    for (const auto& v : fiber.vertices) {
        if (!kinds.emplace(v.id, v.kind).second)
            out.push_back("vertex id " + std::to_string(v.id) + " is declared twice");
        if (!legal_in(v.kind, fiber.dimension_pair))
            out.push_back("vertex " + std::to_string(v.id) + ": kind " + std::string(tag(v.kind)) +
                          " is not legal in dimension pair (" +
                          std::string(compact_name(fiber.dimension_pair)) + ")");
    }

    // (vertex, branch) -> [incoming, outgoing]
    std::map<std::pair<VertexId, int>, std::array<int, 2>> ends;
    auto check_end = [&](const ArcEnd& e, int dir) {
        auto it = kinds.find(e.vertex);
        if (it == kinds.end()) {
            out.push_back("arc end refers to undeclared vertex " + std::to_string(e.vertex));
            return;
        }
        int branches = traits(it->second).labeled_branches;
        if (e.branch < 0 || e.branch >= branches) {
            out.push_back("vertex " + std::to_string(e.vertex) + " (" + std::string(tag(it->second)) +
                          "): branch " + std::to_string(e.branch) + " out of range");
            return;
        }
        ends[{e.vertex, e.branch}][dir]++;
    };
    for (const auto& a : fiber.arcs) {
        check_end(a.head, 0);
        check_end(a.tail, 1);
    }

    for (const auto& [id, kind] : kinds) {
        const auto& t = traits(kind);
        int expected = ends_per_branch_direction(kind);
        for (int b = 0; b < t.labeled_branches; ++b) {
            auto it = ends.find({id, b});
            std::array<int, 2> got = it == ends.end() ? std::array<int, 2>{0, 0} : it->second;
            for (int dir = 0; dir < 2; ++dir) {
                if (got[dir] == expected) continue;
                std::string where = "vertex " + std::to_string(id) + " (" + std::string(t.tag) + ")";
                if (t.labeled_branches > 1) where += " branch " + std::to_string(b);
                out.push_back(where + ": " + std::to_string(got[dir]) +
                              (dir == 0 ? " incoming" : " outgoing") + " arc ends, expected " +
                              std::to_string(expected));
            }
        }
    }
    return out;
}

void validate_fiber(const FiberGraph& fiber) {
    auto v = fiber_violations(fiber);
    if (!v.empty()) throw ValidationError("invalid fiber graph", std::move(v));
}

int codimension(const FiberGraph& fiber) {
    validate_fiber(fiber);
    int sum = 0;
    for (const auto& v : fiber.vertices) sum += traits(v.kind).local_codimension;
    return sum;
}

std::vector<FiberGraph> singular_components(const FiberGraph& fiber) {
    const auto n = fiber.vertices.size();
    std::map<VertexId, std::size_t> index;
    for (std::size_t i = 0; i < n; ++i) index[fiber.vertices[i].id] = i;
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& a : fiber.arcs) {
        auto x = find(index.at(a.tail.vertex)), y = find(index.at(a.head.vertex));
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    std::map<std::size_t, FiberGraph> comps;
    for (std::size_t i = 0; i < n; ++i) {
        auto& c = comps[find(i)];
        c.dimension_pair = fiber.dimension_pair;
        c.vertices.push_back(fiber.vertices[i]);
    }
    for (const auto& a : fiber.arcs) comps[find(index.at(a.tail.vertex))].arcs.push_back(a);
    std::vector<FiberGraph> out;
    for (auto& [root, c] : comps) out.push_back(std::move(c));
    return out;
}

FiberGraph disjoint_union(const FiberGraph& a, const FiberGraph& b) {
    FiberGraph out = a;
    VertexId shift = 0;
    for (const auto& v : a.vertices) shift = std::max(shift, v.id);
    VertexId low = 0;
    for (const auto& v : b.vertices) low = std::min(low, v.id);
    shift = shift + 1 - low;
    for (auto v : b.vertices) {
        v.id += shift;
        out.vertices.push_back(v);
    }
    for (auto arc : b.arcs) {
        arc.tail.vertex += shift;
        arc.head.vertex += shift;
        out.arcs.push_back(arc);
    }
    out.regular_circles += b.regular_circles;
    return out;
}

FiberGraph reversed(const FiberGraph& fiber) {
    FiberGraph out = fiber;
    for (auto& a : out.arcs) std::swap(a.tail, a.head);
    return out;
}

FiberGraph resolve_folds(const FiberGraph& fiber, const std::vector<std::pair<VertexId, int>>& choices) {
    validate_fiber(fiber);
    std::set<VertexId> chosen;
    std::map<std::size_t, std::size_t> next;  // arc continuing arc i through a resolved point
    int extra_circles = 0;
    for (auto [vertex, side] : choices) {
        const auto* v = fiber.find_vertex(vertex);
        if (v == nullptr) throw DomainError("resolve_fold: no vertex " + std::to_string(vertex));
        if (side != 0 && side != 1) throw DomainError("resolve_fold: side must be 0 or 1");
        if (!chosen.insert(vertex).second) throw DomainError("resolve_fold: vertex " + std::to_string(vertex) + " given twice");
        if (v->kind == SingularPointKind::definite_fold) {
            extra_circles += side;
            continue;
        }
        if (v->kind != SingularPointKind::indefinite_fold)
            throw DomainError("resolve_fold: vertex " + std::to_string(vertex) + " is not a fold point");
        std::vector<std::size_t> incoming, outgoing;
        for (std::size_t i = 0; i < fiber.arcs.size(); ++i) {
            if (fiber.arcs[i].head.vertex == vertex) incoming.push_back(i);
            if (fiber.arcs[i].tail.vertex == vertex) outgoing.push_back(i);
        }
        next[incoming[0]] = outgoing[side == 0 ? 0 : 1];
        next[incoming[1]] = outgoing[side == 0 ? 1 : 0];
    }

    FiberGraph out;
    out.dimension_pair = fiber.dimension_pair;
    out.regular_circles = fiber.regular_circles + extra_circles;
    for (const auto& w : fiber.vertices)
        if (!chosen.count(w.id)) out.vertices.push_back(w);

    std::set<std::size_t> used;
    for (std::size_t i = 0; i < fiber.arcs.size(); ++i) {
        if (chosen.count(fiber.arcs[i].tail.vertex)) continue;
        std::size_t cur = i;
        used.insert(cur);
        while (chosen.count(fiber.arcs[cur].head.vertex)) {
            cur = next.at(cur);
            used.insert(cur);
        }
        out.arcs.push_back({fiber.arcs[i].tail, fiber.arcs[cur].head});
    }
    for (std::size_t i = 0; i < fiber.arcs.size(); ++i) {
        if (used.count(i)) continue;
        std::size_t cur = i;
        do {
            used.insert(cur);
            cur = next.at(cur);
        } while (cur != i);
        ++out.regular_circles;
    }
    return out;
}

FiberGraph resolve_fold(const FiberGraph& fiber, VertexId vertex, int side) {
    return resolve_folds(fiber, {{vertex, side}});
}

namespace {

ArcEnd parse_end(const std::string& word, int line) {
    auto dot = word.find('.');
    ArcEnd end;
    end.vertex = static_cast<VertexId>(parse_integer(word.substr(0, dot), line));
    if (dot != std::string::npos) end.branch = static_cast<int>(parse_integer(word.substr(dot + 1), line));
    return end;
}

void expect_words(const TextLine& line, std::size_t n) {
    if (line.words.size() != n)
        throw ParseError(line.number, "'" + line.words[0] + "' expects " + std::to_string(n - 1) + " argument(s)");
}

}  // namespace

bool apply_fiber_line(FiberGraph& fiber, const TextLine& line) {
    const auto& key = line.words[0];
    if (key == "dim") {
        expect_words(line, 3);
        auto dim = parse_dimension_pair(line.words[1] + "," + line.words[2]);
        if (!dim) throw ParseError(line.number, "unsupported dimension pair");
        fiber.dimension_pair = *dim;
    } else if (key == "v") {
        expect_words(line, 3);
        auto kind = kind_from_tag(line.words[2]);
        if (!kind) throw ParseError(line.number, "unknown kind tag '" + line.words[2] + "'");
        fiber.vertices.push_back({static_cast<VertexId>(parse_integer(line.words[1], line.number)), *kind});
    } else if (key == "e") {
        expect_words(line, 3);
        fiber.arcs.push_back({parse_end(line.words[1], line.number), parse_end(line.words[2], line.number)});
    } else if (key == "circles") {
        expect_words(line, 2);
        auto n = parse_integer(line.words[1], line.number);
        if (n < 0) throw ParseError(line.number, "circle count must be non-negative");
        fiber.regular_circles = static_cast<int>(n);
    } else {
        return false;
    }
    return true;
}

FiberGraph parse_fiber(std::string_view text) {
    FiberGraph fiber;
    for (const auto& line : tokenize_lines(text))
        if (!apply_fiber_line(fiber, line))
            throw ParseError(line.number, "unknown keyword '" + line.words[0] + "'");
    return fiber;
}

std::string format_fiber(const FiberGraph& fiber) {
    std::ostringstream out;
    out << "dim " << to_string(fiber.dimension_pair) << '\n';
    std::map<VertexId, SingularPointKind> kinds;
    for (const auto& v : fiber.vertices) {
        out << "v " << v.id << ' ' << tag(v.kind) << '\n';
        kinds[v.id] = v.kind;
    }
    auto end = [&](const ArcEnd& e) {
        auto it = kinds.find(e.vertex);
        bool labeled = it != kinds.end() && traits(it->second).labeled_branches > 1;
        return std::to_string(e.vertex) + (labeled ? "." + std::to_string(e.branch) : "");
    };
    for (const auto& a : fiber.arcs) out << "e " << end(a.tail) << ' ' << end(a.head) << '\n';
    if (fiber.regular_circles != 0) out << "circles " << fiber.regular_circles << '\n';
    return out.str();
}

}  // namespace fibersig
