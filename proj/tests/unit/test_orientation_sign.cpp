#include <algorithm>
#include <set>

#include "doctest.h"
#include "fibersig/errors.hpp"
#include "fibersig/octants.hpp"
#include "oracles/adjacency.hpp"
#include "oracles/chirality_oracle.hpp"

using namespace fibersig;

namespace {

const Catalog& c43() { return Catalog::builtin(DimensionPair::d4_3); }
const Catalog& c54() { return Catalog::builtin(DimensionPair::d5_4); }

TriplePointModel model(int parity, std::array<int, 3> order = {1, 2, 3}, std::array<int, 3> sheets = {1, 2, 3}) {
    return {parity_labeling(parity), sheets, order};
}

int perm_sign(std::array<int, 3> p) {
    int inv = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) inv += p[i] > p[j];
    return inv % 2 ? -1 : 1;
}

std::set<Octant> as_set(const std::vector<Octant>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("octant validation") {
    CHECK(octant_violations(parity_labeling(1)).empty());
    CHECK(octant_violations(parity_labeling(-1)).empty());
    OctantLabeling ones;
    ones.fill(1);
    CHECK(octant_violations(ones).size() == 12);
    CHECK_THROWS_AS(validate_octants(ones), ValidationError);
    OctantLabeling bad = parity_labeling(1);
    bad[0] = 3;
    CHECK_FALSE(octant_violations(bad).empty());
}

TEST_CASE("exactly two of 256 labelings alternate") {
    int valid = 0;
    for (int mask = 0; mask < 256; ++mask) {
        OctantLabeling l;
        for (int i = 0; i < 8; ++i) l[i] = (mask >> i & 1) ? 2 : 1;
        // Independent adjacency check: indices differing in one bit.
        bool ok = true;
        for (int i = 0; i < 8; ++i)
            for (int b = 0; b < 3; ++b) ok = ok && l[i] != l[i ^ (1 << b)];
        CHECK(ok == octant_violations(l).empty());
        valid += ok;
    }
    CHECK(valid == 2);
}

TEST_CASE("octant indexing") {
    for (int i = 0; i < 8; ++i) CHECK(octant_index(octant_at(i)) == i);
    CHECK(octant_at(0) == Octant{1, 1, 1});
    CHECK(octant_at(7) == Octant{-1, -1, -1});
}

TEST_CASE("one_octants") {
    std::set<Octant> plus = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
    CHECK(as_set(one_octants(model(1))) == plus);
    std::set<Octant> minus;
    for (auto w : all_octants())
        if (!plus.count(w)) minus.insert(w);
    CHECK(as_set(one_octants(model(-1))) == minus);
    TriplePointModel bad = model(1);
    bad.labels.fill(2);
    CHECK_THROWS_AS(one_octants(bad), ValidationError);
}

TEST_CASE("iii8_sign examples") {
    CHECK(iii8_sign(model(1)) == 1);
    CHECK(iii8_sign(model(1, {1, 3, 2})) == -1);
    CHECK(iii8_sign(model(1, {2, 3, 1})) == 1);
    TriplePointModel bad = model(1);
    bad.sheet_of_point = {1, 1, 2};
    CHECK_THROWS_AS(iii8_sign(bad), ValidationError);
    bad = model(1, {1, 1, 2});
    CHECK_THROWS_AS(iii8_sign(bad), ValidationError);
}

TEST_CASE("sign properties, exhaustive over labelings, orders and sheet bijections") {
    std::array<int, 3> perm = {1, 2, 3};
    std::vector<std::array<int, 3>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    for (int parity : {1, -1})
        for (auto order : perms)
            for (auto sheets : perms) {
                auto m = model(parity, order, sheets);
                // Determinant oracle: every 1-octant has w1*w2*w3 = parity; the columns are
                // the sheets of the points in cyclic order.
                std::array<int, 3> cols = {sheets[order[0] - 1], sheets[order[1] - 1], sheets[order[2] - 1]};
                int expected = parity * perm_sign(cols);
                for (auto w : one_octants(m)) CHECK(iii8_sign_at(m, w) == expected);
                CHECK(iii8_sign(m) == expected);
                std::array<int, 3> rev = {order[0], order[2], order[1]};
                int reversed = iii8_sign(model(parity, rev, sheets));
                int swapped = iii8_sign(model(-parity, order, sheets));
                int both = iii8_sign(model(-parity, rev, sheets));
                CHECK(reversed == -expected);
                CHECK(swapped == -expected);
                CHECK(both == expected);
                std::array<int, 3> rot = {order[1], order[2], order[0]};
                CHECK(iii8_sign(model(parity, rot, sheets)) == expected);
            }
}

TEST_CASE("octant data of a III^8 fiber") {
    auto g = c43().representative(c43().at("III^8"));
    std::array<VertexId, 3> sheets = {g.vertices[0].id, g.vertices[1].id, g.vertices[2].id};
    auto labels = octant_labels_from_fiber(g, sheets);
    CHECK(octant_violations(labels).empty());
    // Permuting the sheets keeps the labeling valid.
    std::swap(sheets[0], sheets[1]);
    CHECK(octant_violations(octant_labels_from_fiber(g, sheets)).empty());
    // III^6 has three folds but is not a triple point of this type.
    auto h = c43().representative(c43().at("III^6"));
    std::array<VertexId, 3> hs = {h.vertices[0].id, h.vertices[1].id, h.vertices[2].id};
    CHECK_FALSE(octant_violations(octant_labels_from_fiber(h, hs)).empty());
}

TEST_CASE("octant and order parsing") {
    std::string text;
    auto l = parity_labeling(-1);
    for (auto w : all_octants())
        text += std::to_string(w[0]) + " " + std::to_string(w[1]) + " " + std::to_string(w[2]) + " " +
                std::to_string(l[octant_index(w)]) + "\n";
    CHECK(parse_octant_labels(text) == l);
    CHECK_THROWS_AS(parse_octant_labels("1 1 1 1\n"), ParseError);
    CHECK(parse_point_order("q1,q3,q2") == std::array<int, 3>{1, 3, 2});
    CHECK(parse_point_order("2,3,1") == std::array<int, 3>{2, 3, 1});
    CHECK_THROWS(parse_point_order("q1,q1,q2"));
}

TEST_CASE("is_chiral examples and counts") {
    CHECK(is_chiral("III^8", DimensionPair::d4_3));
    CHECK_FALSE(is_chiral("II^2", DimensionPair::d4_3));
    CHECK_FALSE(is_chiral("IV^o", DimensionPair::d5_4));
    CHECK(is_chiral("IV^{1,8}", DimensionPair::d5_4));
    CHECK(is_chiral("IV^18", DimensionPair::d5_4));
    CHECK_THROWS_AS(is_chiral("IV^{99}", DimensionPair::d5_4), DomainError);

    std::set<std::string> chiral43;
    for (const auto& c : c43().entries()) {
        bool token_rule = std::any_of(c.tokens.begin(), c.tokens.end(),
                                      [](const std::string& t) { return t == "5" || t == "7" || t == "8"; });
        CHECK(is_chiral(c) == token_rule);
        CHECK(c.chiral == token_rule);
        if (token_rule) chiral43.insert(c.name);
    }
    CHECK(chiral43 == std::set<std::string>{"III^5", "III^7", "III^8"});

    int total = 0, codim4 = 0;
    for (const auto& c : c54().entries()) {
        CHECK(c.chiral == is_chiral(c));
        if (c.chiral) {
            ++total;
            codim4 += c.codimension == 4;
        }
    }
    CHECK(total == 17);
    CHECK(codim4 == 14);
}

TEST_CASE("port-level chirality oracle agrees with the catalog") {
    int checked = 0;
    for (const auto* cat : {&c43(), &c54()})
        for (const auto& c : cat->entries()) {
            if (!c.connected || c.is_regular()) continue;
            auto verdict = oracle::is_chiral(*c.canonical_graph);
            if (!verdict) continue;  // indefinite D4: catalog data is authoritative
            CAPTURE(c.name);
            CHECK(*verdict == c.chiral);
            ++checked;
        }
    CHECK(checked >= 36);
}

TEST_CASE("fold resolutions near chiral codim-4 fibers") {
    auto counts = [](const char* name) {
        return oracle::fold_resolution_counts(c54().representative(c54().at(name)), c54());
    };
    CHECK(counts("IV^{0,8}")["III^8"] == 2);
    CHECK(counts("IV^{1,8}")["III^8"] == 2);
    CHECK(counts("IV^18")["III^8"] == 2);
    CHECK(counts("IV^22")["III^8"] == 8);
    CHECK(counts("IV^11")["III^5"] == 3);
    CHECK(counts("IV^11")["III^7"] == 0);
    CHECK(counts("IV^10")["III^7"] == 3);
    CHECK(counts("IV^10")["III^5"] == 0);
    for (const char* name : {"IV^{0,5}", "IV^{0,7}", "IV^{1,5}", "IV^{1,7}", "IV^10", "IV^11", "IV^12", "IV^13",
                             "IV^g", "IV^h", "IV^k"})
        CHECK_MESSAGE(counts(name)["III^8"] == 0, name);
}
