#include "fibersig/bordism.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fibersig/catalog.hpp"
#include "fibersig/errors.hpp"
#include "fibersig/octants.hpp"
#include "fibersig/text_io.hpp"

namespace fibersig {

namespace {

struct Degrees {
    int in = 0;
    int out = 0;
};

std::map<int, Degrees> degrees(const LocusGraph& g) {
    std::map<int, Degrees> d;
    for (const auto& a : g.arcs) {
        d[a.from].out++;
        d[a.to].in++;
    }
    return d;
}

int sum_side(const LocusGraph& g, int side) {
    auto d = degrees(g);
    int sum = 0;
    for (const auto& b : g.boundary) {
        if (b.side != side) continue;
        const auto& deg = d[b.id];
        int outward = side == 0 ? deg.out - deg.in : deg.in - deg.out;
        sum += outward;
    }
    return sum;
}

}  // namespace

InteriorRole interior_role(std::string_view vertex_class) {
    const auto& cls = Catalog::builtin(DimensionPair::d5_4).at(vertex_class);
    if (cls.codimension != 4) throw DomainError("class " + cls.name + " is not of codimension 4");
    if (cls.name == "IV^{0,8}" || cls.name == "IV^{1,8}" || cls.name == "IV^{18}") return InteriorRole::pass_through;
    if (cls.name == "IV^{22}") return InteriorRole::degree_eight;
    return is_chiral(cls) ? InteriorRole::isolated : InteriorRole::balanced;
}

std::vector<std::string> locus_violations(const LocusGraph& g) {
    std::vector<std::string> out;
    std::set<int> ids;
    for (const auto& v : g.interior)
        if (!ids.insert(v.id).second) out.push_back("vertex id " + std::to_string(v.id) + " is used twice");
    for (const auto& b : g.boundary)
        if (!ids.insert(b.id).second) out.push_back("vertex id " + std::to_string(b.id) + " is used twice");
    for (const auto& a : g.arcs)
        for (int end : {a.from, a.to})
            if (!ids.count(end)) out.push_back("arc " + std::to_string(a.from) + " -> " + std::to_string(a.to) +
                                               " refers to undeclared vertex " + std::to_string(end));
    auto d = degrees(g);
    for (const auto& b : g.boundary) {
        std::string where = "boundary vertex " + std::to_string(b.id);
        const auto& deg = d[b.id];
        if (b.side != 0 && b.side != 1) out.push_back(where + ": side must be 0 or 1");
        if (b.sign != 1 && b.sign != -1) out.push_back(where + ": sign must be +1 or -1");
        if (deg.in + deg.out != 1) {
            out.push_back(where + ": degree " + std::to_string(deg.in + deg.out) + ", expected 1");
            continue;
        }
        bool outgoing = deg.out == 1;
        int derived = (b.side == 0) == outgoing ? 1 : -1;
        if (b.sign != derived)
            out.push_back(where + ": declared sign " + signed_string(b.sign) + " but its arc is " +
                          (outgoing ? "outgoing" : "incoming") + " (sign " + signed_string(derived) + ")");
    }
    for (const auto& v : g.interior) {
        std::string where = "interior vertex " + std::to_string(v.id) + " (" + v.vertex_class + ")";
        InteriorRole role;
        try {
            role = interior_role(v.vertex_class);
        } catch (const DomainError& e) {
            out.push_back(where + ": " + e.what());
            continue;
        }
        const auto& deg = d[v.id];
        auto degree_text = std::to_string(deg.in) + " in, " + std::to_string(deg.out) + " out";
        switch (role) {
            case InteriorRole::pass_through:
                if (deg.in != 1 || deg.out != 1) out.push_back(where + ": " + degree_text + ", expected 1 in, 1 out");
                break;
            case InteriorRole::degree_eight:
                if (deg.in != 4 || deg.out != 4) out.push_back(where + ": " + degree_text + ", expected 4 in, 4 out");
                break;
            case InteriorRole::isolated:
                if (deg.in + deg.out != 0) out.push_back(where + ": " + degree_text + ", a chiral class off the locus has no arcs");
                break;
            case InteriorRole::balanced:
                if (deg.in != deg.out) out.push_back(where + ": " + degree_text + ", expected as many in as out");
                break;
        }
    }
    return out;
}

void validate_locus(const LocusGraph& g) {
    auto v = locus_violations(g);
    if (!v.empty()) throw ValidationError("invalid locus graph", std::move(v));
}

int boundary_sum(const LocusGraph& g, int side) {
    validate_locus(g);
    return boundary_sum_unchecked(g, side);
}

int boundary_sum_unchecked(const LocusGraph& g, int side) {
    if (side != 0 && side != 1) throw DomainError("side must be 0 or 1");
    return sum_side(g, side);
}

bool check_invariance(const LocusGraph& g) { return sum_side(g, 0) == sum_side(g, 1); }

LocusGraph disjoint_union(const LocusGraph& a, const LocusGraph& b) {
    int shift = 0;
    for (const auto& v : a.interior) shift = std::max(shift, v.id);
    for (const auto& v : a.boundary) shift = std::max(shift, v.id);
    int low = 0;
    for (const auto& v : b.interior) low = std::min(low, v.id);
    for (const auto& v : b.boundary) low = std::min(low, v.id);
    shift = shift + 1 - low;
    LocusGraph out = a;
    for (auto v : b.interior) out.interior.push_back({v.id + shift, v.vertex_class});
    for (auto v : b.boundary) out.boundary.push_back({v.id + shift, v.side, v.sign});
    for (auto e : b.arcs) out.arcs.push_back({e.from + shift, e.to + shift});
    return out;
}

LocusGraph copies(const LocusGraph& g, int m) {
    LocusGraph out;
    for (int i = 0; i < m; ++i) out = disjoint_union(out, g);
    return out;
}

LocusGraph reversed_orientation(const LocusGraph& g) {
    LocusGraph out = g;
    for (auto& b : out.boundary) b.sign = -b.sign;
    for (auto& a : out.arcs) std::swap(a.from, a.to);
    return out;
}

LocusGraph random_locus_graph(std::mt19937_64& rng, const RandomLocusOptions& options) {
    static const std::vector<std::string> pass = {"IV^{0,8}", "IV^{1,8}", "IV^{18}"};
    static const std::vector<std::string> achiral = [] {
        std::vector<std::string> names;
        for (const auto* c : Catalog::builtin(DimensionPair::d5_4).entries_of_codimension(4))
            if (!is_chiral(*c) && c->name != "IV^{22}") names.push_back(c->name);
        return names;
    }();
    static const std::vector<std::string> off_locus = [] {
        std::vector<std::string> names;
        for (const auto* c : Catalog::builtin(DimensionPair::d5_4).entries_of_codimension(4))
            if (interior_role(c->name) == InteriorRole::isolated) names.push_back(c->name);
        return names;
    }();
    auto pick = [&](const std::vector<std::string>& v) {
        return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
    };
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };

    LocusGraph g;
    std::vector<int> outs, ins;  // arc-end stubs by vertex id
    int next_id = 1;
    int n_interior = uniform(0, options.max_interior);
    for (int i = 0; i < n_interior; ++i) {
        int id = next_id++;
        int k = 0;
        switch (uniform(0, 3)) {
            case 0: g.interior.push_back({id, pick(pass)}); k = 1; break;
            case 1: g.interior.push_back({id, "IV^{22}"}); k = 4; break;
            case 2: g.interior.push_back({id, pick(off_locus)}); k = 0; break;
            default: g.interior.push_back({id, pick(achiral)}); k = uniform(0, options.max_balanced_degree); break;
        }
        for (int j = 0; j < k; ++j) {
            outs.push_back(id);
            ins.push_back(id);
        }
    }
    // Boundary stubs: (side 0, out), (side 0, in), (side 1, in), (side 1, out).
    auto add_boundary = [&](int side, bool outgoing) {
        int id = next_id++;
        g.boundary.push_back({id, side, (side == 0) == outgoing ? 1 : -1});
        (outgoing ? outs : ins).push_back(id);
    };
    int n_extra = uniform(0, options.max_extra_boundary);
    for (int i = 0; i < n_extra; ++i) add_boundary(uniform(0, 1), uniform(0, 1) == 1);
    while (outs.size() < ins.size()) add_boundary(uniform(0, 1), true);
    while (ins.size() < outs.size()) add_boundary(uniform(0, 1), false);

    std::shuffle(ins.begin(), ins.end(), rng);
    for (std::size_t i = 0; i < outs.size(); ++i) g.arcs.push_back({outs[i], ins[i]});
    std::shuffle(g.arcs.begin(), g.arcs.end(), rng);
    return g;
}

LocusGraph parse_locus_graph(std::string_view text) {
    LocusGraph g;
    for (const auto& line : tokenize_lines(text)) {
        const auto& key = line.words[0];
        auto expect = [&](std::size_t n) {
            if (line.words.size() != n)
                throw ParseError(line.number, "'" + key + "' expects " + std::to_string(n - 1) + " argument(s)");
        };
        auto integer = [&](std::size_t k) { return static_cast<int>(parse_integer(line.words[k], line.number)); };
        if (key == "iv") {
            expect(3);
            auto name = normalize_name(line.words[2]);
            if (!name) throw ParseError(line.number, "malformed class name '" + line.words[2] + "'");
            g.interior.push_back({integer(1), *name});
        } else if (key == "bd") {
            expect(4);
            int side = integer(2), sign = integer(3);
            if (side != 0 && side != 1) throw ParseError(line.number, "boundary side must be 0 or 1");
            if (sign != 1 && sign != -1) throw ParseError(line.number, "boundary sign must be +1 or -1");
            g.boundary.push_back({integer(1), side, sign});
        } else if (key == "arc") {
            expect(3);
            g.arcs.push_back({integer(1), integer(2)});
        } else {
            throw ParseError(line.number, "unknown keyword '" + key + "'");
        }
    }
    return g;
}

std::string format_locus_graph(const LocusGraph& g) {
    std::ostringstream out;
    for (const auto& v : g.interior) out << "iv " << v.id << ' ' << v.vertex_class << '\n';
    for (const auto& b : g.boundary) out << "bd " << b.id << ' ' << b.side << ' ' << signed_string(b.sign) << '\n';
    for (const auto& a : g.arcs) out << "arc " << a.from << ' ' << a.to << '\n';
    return out.str();
}

}  // namespace fibersig
