#include "fibersig/catalog.hpp"

#include <algorithm>

#include "fibersig/builtin_data.hpp"
#include "fibersig/errors.hpp"

namespace fibersig {

namespace {

struct ClassBlock {
    int line = 0;
    DimensionPair dim = DimensionPair::d4_3;
    std::string name;
    int kappa = 0;
    bool chiral = false;
    FiberGraph graph;
};

std::vector<ClassBlock> parse_class_blocks(std::string_view text) {
    std::vector<ClassBlock> blocks;
    DimensionPair dim = DimensionPair::d4_3;
    for (const auto& line : tokenize_lines(text)) {
        const auto& key = line.words[0];
        if (key == "class") {
            if (line.words.size() != 4) throw ParseError(line.number, "'class' expects <name> <kappa> <chiral:0|1>");
            auto name = normalize_name(line.words[1]);
            if (!name) throw ParseError(line.number, "malformed class name '" + line.words[1] + "'");
            auto chiral = parse_integer(line.words[3], line.number);
            if (chiral != 0 && chiral != 1) throw ParseError(line.number, "chiral flag must be 0 or 1");
            ClassBlock b;
            b.line = line.number;
            b.dim = dim;
            b.name = *name;
            b.kappa = static_cast<int>(parse_integer(line.words[2], line.number));
            b.chiral = chiral == 1;
            b.graph.dimension_pair = dim;
            blocks.push_back(std::move(b));
        } else if (key == "dim") {
            FiberGraph probe;
            apply_fiber_line(probe, line);
            dim = probe.dimension_pair;
        } else {
            if (blocks.empty()) throw ParseError(line.number, "fiber line before any 'class' header");
            if (!apply_fiber_line(blocks.back().graph, line))
                throw ParseError(line.number, "unknown keyword '" + key + "'");
        }
    }
    return blocks;
}

std::vector<SingularPointKind> kind_multiset(const FiberGraph& g) {
    std::vector<SingularPointKind> kinds;
    for (const auto& v : g.vertices) kinds.push_back(v.kind);
    std::sort(kinds.begin(), kinds.end());
    return kinds;
}

}  // namespace

void Catalog::add(FiberClass cls) {
    if (by_name_.count(cls.name)) throw ValidationError("catalog", {"duplicate class name " + cls.name});
    by_name_[cls.name] = entries_.size();
    entries_.push_back(std::move(cls));
}

void Catalog::sort_entries() {
    std::stable_sort(entries_.begin(), entries_.end(), [](const FiberClass& a, const FiberClass& b) {
        if (a.codimension != b.codimension) return a.codimension < b.codimension;
        return std::lexicographical_compare(a.tokens.begin(), a.tokens.end(), b.tokens.begin(), b.tokens.end(),
                                            token_less);
    });
    by_name_.clear();
    by_form_.clear();
    by_token_.clear();
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        const auto& e = entries_[i];
        by_name_[e.name] = i;
        if (e.connected) {
            by_form_[canonical_form(*e.canonical_graph)] = i;
            by_token_[e.tokens.front()] = i;
        }
    }
}

Catalog Catalog::from_connected_data(std::string_view text, DimensionPair dim) {
    Catalog cat;
    cat.dim_ = dim;
    cat.regular_.name = "regular";
    cat.regular_.dimension_pair = dim;

    std::vector<std::string> problems;
    std::map<CanonicalForm, std::string> seen;
    for (auto& block : parse_class_blocks(text)) {
        if (block.dim == DimensionPair::d5_4 && dim == DimensionPair::d4_3) continue;
        std::string where = "class " + block.name + " (line " + std::to_string(block.line) + ")";
        block.graph.dimension_pair = dim;
        auto violations = fiber_violations(block.graph);
        for (auto& v : violations) problems.push_back(where + ": " + v);
        if (!violations.empty()) continue;
        auto parsed = parse_name(block.name);
        if (parsed->tokens.size() != 1) {
            problems.push_back(where + ": a connected class needs a single superscript token");
            continue;
        }
        if (parsed->kappa != block.kappa)
            problems.push_back(where + ": prefix does not match kappa " + std::to_string(block.kappa));
        if (codimension(block.graph) != block.kappa)
            problems.push_back(where + ": graph has codimension " + std::to_string(codimension(block.graph)));
        if (singular_components(block.graph).size() != 1) problems.push_back(where + ": graph is not connected");
        if (block.graph.regular_circles != 0) problems.push_back(where + ": catalog graphs carry no regular circles");
        auto form = canonical_form(block.graph);
        if (auto it = seen.find(form); it != seen.end())
            problems.push_back(where + ": graph is equivalent to " + it->second);
        seen[form] = block.name;

        FiberClass cls;
        cls.name = block.name;
        cls.dimension_pair = dim;
        cls.codimension = block.kappa;
        cls.connected = true;
        cls.kinds = kind_multiset(block.graph);
        cls.chiral = block.chiral;
        cls.tokens = parsed->tokens;
        cls.canonical_graph = block.graph;
        cat.tokens_.add(cls.tokens.front(), cls.codimension);
        try {
            cat.add(std::move(cls));
        } catch (const ValidationError& e) {
            problems.insert(problems.end(), e.violations().begin(), e.violations().end());
        }
    }
    if (!problems.empty()) throw ValidationError("catalog data", problems);
    cat.sort_entries();

    int max_kappa = dim == DimensionPair::d4_3 ? 3 : 4;
    for (int kappa = 2; kappa <= max_kappa; ++kappa) {
        for (const auto& tokens : disconnected_token_multisets(cat.tokens_, kappa)) {
            FiberClass cls;
            cls.name = make_name(tokens, kappa, cat.tokens_);
            cls.dimension_pair = dim;
            cls.codimension = kappa;
            cls.tokens = tokens;
            for (const auto& t : tokens) {
                const auto& part = cat.connected_class_of_token(t);
                cls.kinds.insert(cls.kinds.end(), part.kinds.begin(), part.kinds.end());
                cls.chiral = cls.chiral || part.chiral;
            }
            std::sort(cls.kinds.begin(), cls.kinds.end());
            cat.add(std::move(cls));
        }
    }
    cat.sort_entries();
    return cat;
}

const Catalog& Catalog::builtin(DimensionPair dim) {
    static const Catalog c43 = from_connected_data(builtin_connected_fibers(), DimensionPair::d4_3);
    static const Catalog c54 = from_connected_data(builtin_connected_fibers(), DimensionPair::d5_4);
    return dim == DimensionPair::d4_3 ? c43 : c54;
}

const TokenTable& builtin_tokens(DimensionPair dim) { return Catalog::builtin(dim).tokens(); }

std::vector<const FiberClass*> Catalog::entries_of_codimension(int kappa) const {
    std::vector<const FiberClass*> out;
    for (const auto& e : entries_)
        if (e.codimension == kappa) out.push_back(&e);
    return out;
}

const FiberClass* Catalog::find(std::string_view name) const {
    auto norm = normalize_name(name);
    if (!norm) return nullptr;
    if (*norm == "regular") return &regular_;
    auto it = by_name_.find(*norm);
    return it == by_name_.end() ? nullptr : &entries_[it->second];
}

const FiberClass& Catalog::at(std::string_view name) const {
    if (const auto* c = find(name)) return *c;
    throw DomainError("no class named '" + std::string(name) + "' in the (" + std::string(compact_name(dim_)) +
                      ") catalog");
}

const FiberClass* Catalog::find_connected(const CanonicalForm& form) const {
    auto it = by_form_.find(form);
    return it == by_form_.end() ? nullptr : &entries_[it->second];
}

const FiberClass& Catalog::connected_class_of_token(const std::string& token) const {
    auto it = by_token_.find(token);
    if (it == by_token_.end()) throw DomainError("token '" + token + "' names no connected catalog class");
    return entries_[it->second];
}

FiberGraph Catalog::representative(const FiberClass& cls) const {
    FiberGraph g;
    g.dimension_pair = dim_;
    if (cls.connected) {
        g = *cls.canonical_graph;
        g.dimension_pair = dim_;
        return g;
    }
    for (const auto& t : cls.tokens) g = disjoint_union(g, *connected_class_of_token(t).canonical_graph);
    g.dimension_pair = dim_;
    return g;
}

const FiberClass& classify(const FiberGraph& fiber, const Catalog& catalog) {
    if (fiber.dimension_pair != catalog.dimension_pair())
        throw DomainError("fiber is in dimension pair (" + std::string(compact_name(fiber.dimension_pair)) +
                          ") but the catalog is (" + std::string(compact_name(catalog.dimension_pair())) + ")");
    validate_fiber(fiber);
    std::vector<std::string> tokens;
    int kappa = 0;
    for (const auto& component : singular_components(fiber)) {
        auto form = canonical_form(component);
        const auto* cls = catalog.find_connected(form);
        if (cls == nullptr) throw UnknownFiber(form.to_string());
        tokens.push_back(cls->tokens.front());
        kappa += cls->codimension;
    }
    if (tokens.empty()) return catalog.regular();
    if (tokens.size() == 1) return catalog.connected_class_of_token(tokens.front());
    if (kappa > 4) throw DomainError("fiber has codimension " + std::to_string(kappa) + ", beyond the catalog");
    return catalog.at(make_name(tokens, kappa, catalog.tokens()));
}

const FiberClass& suspend(const FiberClass& cls, const Catalog& target) {
    if (cls.dimension_pair != DimensionPair::d4_3) throw DomainError("suspend: class " + cls.name + " is already (5,4)");
    if (target.dimension_pair() != DimensionPair::d5_4) throw DomainError("suspend: target catalog must be (5,4)");
    return cls.is_regular() ? target.regular() : target.at(cls.name);
}

const FiberClass& suspend(const FiberClass& cls) { return suspend(cls, Catalog::builtin(DimensionPair::d5_4)); }

}  // namespace fibersig
