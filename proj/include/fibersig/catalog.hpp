#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fibersig/canonical_form.hpp"
#include "fibersig/fiber_graph.hpp"
#include "fibersig/naming.hpp"

namespace fibersig {

struct FiberClass {
    std::string name;  // "regular" for the kappa = 0 class
    DimensionPair dimension_pair = DimensionPair::d4_3;
    int codimension = 0;
    bool connected = false;
    std::vector<SingularPointKind> kinds;  // sorted multiset
    bool chiral = false;
    std::vector<std::string> tokens;       // superscript tokens, sorted; empty for regular
    std::optional<FiberGraph> canonical_graph;  // connected classes only

    bool is_regular() const { return codimension == 0; }
};

class Catalog {
public:
    // Connected classes come from a data file of `class` blocks; (4,3) blocks are
    // suspended into a (5,4) catalog, disconnected classes are generated by enumeration.
    static Catalog from_connected_data(std::string_view text, DimensionPair dim);
    static const Catalog& builtin(DimensionPair dim);

    DimensionPair dimension_pair() const { return dim_; }
    // All classes except the regular one, ordered by codimension then token sequence.
    const std::vector<FiberClass>& entries() const { return entries_; }
    std::vector<const FiberClass*> entries_of_codimension(int kappa) const;
    const FiberClass& regular() const { return regular_; }
    const FiberClass* find(std::string_view name) const;
    const FiberClass& at(std::string_view name) const;  // throws DomainError
    const TokenTable& tokens() const { return tokens_; }
    const FiberClass* find_connected(const CanonicalForm& form) const;
    const FiberClass& connected_class_of_token(const std::string& token) const;
    // Connected classes: the catalog graph; disconnected: disjoint union of component graphs.
    FiberGraph representative(const FiberClass& cls) const;

private:
    void add(FiberClass cls);
    void sort_entries();

    DimensionPair dim_ = DimensionPair::d4_3;
    FiberClass regular_;
    std::vector<FiberClass> entries_;
    std::map<std::string, std::size_t> by_name_;
    std::map<CanonicalForm, std::size_t> by_form_;
    std::map<std::string, std::size_t> by_token_;
    TokenTable tokens_;
};

// Drops regular circles, splits into connected singular components, identifies each
// by canonical form and assembles the union name. Throws ValidationError for an
// invalid fiber, UnknownFiber for an unrecognised component.
const FiberClass& classify(const FiberGraph& fiber, const Catalog& catalog);

// The (5,4) class of the same name. Throws DomainError for a (5,4) input.
const FiberClass& suspend(const FiberClass& cls, const Catalog& target);
const FiberClass& suspend(const FiberClass& cls);

}  // namespace fibersig
