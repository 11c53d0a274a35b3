#include <algorithm>
#include <functional>
#include <set>

#include "doctest.h"
#include "fibersig/catalog.hpp"
#include "fibersig/errors.hpp"

using namespace fibersig;

namespace {

// Independent multiset generator: all ordered sequences, sorted and deduplicated.
std::set<std::vector<std::string>> brute_multisets(const TokenTable& table, int kappa) {
    std::set<std::vector<std::string>> out;
    auto tokens = table.tokens();
    std::vector<std::string> seq;
    std::function<void(int)> grow = [&](int sum) {
        if (sum == kappa && seq.size() >= 2) {
            auto s = seq;
            sort_tokens(s);
            out.insert(s);
        }
        if (sum >= kappa) return;
        for (const auto& t : tokens) {
            seq.push_back(t);
            grow(sum + table.codimension(t));
            seq.pop_back();
        }
    };
    grow(0);
    return out;
}

const std::vector<std::string> kCodim4Disconnected = {
    "IV^{0,0,0,0}", "IV^{0,0,0,1}", "IV^{0,0,1,1}", "IV^{0,1,1,1}", "IV^{1,1,1,1}", "IV^{0,0,2}", "IV^{0,1,2}",
    "IV^{1,1,2}",   "IV^{0,0,3}",   "IV^{0,1,3}",   "IV^{1,1,3}",   "IV^{0,4}",     "IV^{0,5}",   "IV^{0,6}",
    "IV^{0,7}",     "IV^{0,8}",     "IV^{1,4}",     "IV^{1,5}",     "IV^{1,6}",     "IV^{1,7}",   "IV^{1,8}",
    "IV^{2,2}",     "IV^{2,3}",     "IV^{3,3}",     "IV^{0,0,a}",   "IV^{0,1,a}",   "IV^{1,1,a}", "IV^{0,b}",
    "IV^{1,b}",     "IV^{2,a}",     "IV^{3,a}",     "IV^{a,a}",     "IV^{0,c}",     "IV^{0,d}",   "IV^{0,e}",
    "IV^{1,c}",     "IV^{1,d}",     "IV^{1,e}"};

}  // namespace

TEST_CASE("make_name examples") {
    CHECK(make_name({"0", "1"}, 2, DimensionPair::d4_3) == "II^{0,1}");
    CHECK(make_name({"8"}, 3, DimensionPair::d4_3) == "III^8");
    CHECK(make_name({"a", "0", "0"}, 4, DimensionPair::d5_4) == "IV^{0,0,a}");
    CHECK(make_name({"18"}, 4, DimensionPair::d5_4) == "IV^{18}");
    CHECK_THROWS_AS(make_name({"0"}, 5, DimensionPair::d5_4), DomainError);
    CHECK_THROWS_AS(make_name({"0"}, 0, DimensionPair::d4_3), DomainError);
    CHECK_THROWS_AS(make_name({"z"}, 3, DimensionPair::d4_3), DomainError);
    CHECK_THROWS_AS(make_name({}, 2, DimensionPair::d4_3), DomainError);
    CHECK_THROWS_AS(make_name({"0", "0"}, 3, DimensionPair::d4_3), DomainError);  // sums to 2
    // Codim-4 connected tokens do not exist for (4,3).
    CHECK_THROWS_AS(make_name({"9"}, 4, DimensionPair::d4_3), DomainError);
}

TEST_CASE("token order and name parsing") {
    std::vector<std::string> t = {"a", "10", "2", "0", "e", "9"};
    sort_tokens(t);
    CHECK(t == std::vector<std::string>{"0", "2", "9", "10", "a", "e"});
    CHECK(normalize_name("IV^18") == "IV^{18}");
    CHECK(normalize_name("IV^{a,0,0}") == "IV^{0,0,a}");
    CHECK(normalize_name("III^{8}") == "III^8");
    CHECK(normalize_name("regular") == "regular");
    CHECK_FALSE(normalize_name("V^1").has_value());
    CHECK_FALSE(normalize_name("III8").has_value());
    CHECK_FALSE(normalize_name("II^{0,}").has_value());
}

TEST_CASE("enumerate_disconnected examples") {
    CHECK(enumerate_disconnected(DimensionPair::d4_3, 2) == std::vector<std::string>{"II^{0,0}", "II^{0,1}", "II^{1,1}"});
    CHECK(enumerate_disconnected(DimensionPair::d4_3, 3) ==
          std::vector<std::string>{"III^{0,0,0}", "III^{0,0,1}", "III^{0,1,1}", "III^{0,2}", "III^{0,3}", "III^{0,a}",
                                   "III^{1,1,1}", "III^{1,2}", "III^{1,3}", "III^{1,a}"});
    auto got = enumerate_disconnected(DimensionPair::d5_4, 4);
    CHECK(got.size() == 38);
    std::set<std::string> a(got.begin(), got.end()), b(kCodim4Disconnected.begin(), kCodim4Disconnected.end());
    CHECK(a == b);
    CHECK_THROWS_AS(enumerate_disconnected(DimensionPair::d5_4, 1), DomainError);
    CHECK_THROWS_AS(enumerate_disconnected(DimensionPair::d5_4, 5), DomainError);
}

TEST_CASE("partition completeness against a brute-force multiset generator") {
    for (auto dim : {DimensionPair::d4_3, DimensionPair::d5_4}) {
        for (int kappa = 2; kappa <= (dim == DimensionPair::d4_3 ? 3 : 4); ++kappa) {
            const auto& table = builtin_tokens(dim);
            auto fast = disconnected_token_multisets(table, kappa);
            auto brute = brute_multisets(table, kappa);
            CHECK(fast.size() == brute.size());
            CHECK(std::set<std::vector<std::string>>(fast.begin(), fast.end()) == brute);
            for (const auto& m : fast) {
                int sum = 0;
                for (const auto& t : m) sum += table.codimension(t);
                CHECK(sum == kappa);
                CHECK(m.size() >= 2);
            }
            CHECK(std::is_sorted(fast.begin(), fast.end(), [](const auto& x, const auto& y) {
                return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), token_less);
            }));
        }
    }
}

TEST_CASE("token codimensions") {
    const auto& t = builtin_tokens(DimensionPair::d4_3);
    for (const char* s : {"0", "1"}) CHECK(t.codimension(s) == 1);
    for (const char* s : {"2", "3", "a"}) CHECK(t.codimension(s) == 2);
    for (const char* s : {"4", "5", "6", "7", "8", "b", "c", "d", "e"}) CHECK(t.codimension(s) == 3);
    CHECK(t.tokens().size() == 14);
    CHECK(builtin_tokens(DimensionPair::d5_4).tokens().size() == 40);
}

TEST_CASE("enumeration equals the catalog's disconnected entries") {
    for (auto dim : {DimensionPair::d4_3, DimensionPair::d5_4}) {
        const auto& cat = Catalog::builtin(dim);
        for (int kappa = 2; kappa <= (dim == DimensionPair::d4_3 ? 3 : 4); ++kappa) {
            std::set<std::string> from_catalog;
            for (const auto* c : cat.entries_of_codimension(kappa))
                if (!c->connected) from_catalog.insert(c->name);
            auto names = enumerate_disconnected(dim, kappa);
            CHECK(std::set<std::string>(names.begin(), names.end()) == from_catalog);
        }
    }
}
