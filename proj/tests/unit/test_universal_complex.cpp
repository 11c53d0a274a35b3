#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "fibersig/errors.hpp"
#include "fibersig/universal_complex.hpp"

using namespace fibersig;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
    return m;
}

// A 14x3 matrix with a planted integer dependency between its columns.
IntMatrix planted_matrix(std::mt19937_64& rng) {
    IntMatrix m = random_matrix(rng, 14, 3, 3);
    std::uniform_int_distribution<int> coef(-2, 2);
    int a = coef(rng), b = coef(rng);
    if (rng() % 3 == 0) {
        for (std::size_t r = 0; r < 14; ++r) m(r, 2) = 0;  // a zero column
    } else {
        for (std::size_t r = 0; r < 14; ++r) m(r, 2) = a * m(r, 0) + b * m(r, 1);
    }
    if (rng() % 4 == 0)
        for (std::size_t r = 0; r < 14; ++r) m(r, 1) = 2 * m(r, 0);
    return m;
}

// Brute-force kernel oracle: every box vector with M v = 0 must lie in the lattice
// of the returned basis, and every box vector in that lattice must be in the kernel.
void check_kernel_against_box(const IntMatrix& m) {
    auto basis = integer_kernel(m);
    CHECK(basis.size() == m.cols() - matrix_rank(m));
    for (const auto& v : basis) CHECK(std::all_of(m.apply(v).begin(), m.apply(v).end(), [](Integer x) { return x == 0; }));
    CHECK(row_hermite_basis(basis, m.cols()) == basis);
    for (int x = -5; x <= 5; ++x)
        for (int y = -5; y <= 5; ++y)
            for (int z = -5; z <= 5; ++z) {
                IntVector v = {x, y, z};
                auto mv = m.apply(v);
                bool zero = std::all_of(mv.begin(), mv.end(), [](Integer e) { return e == 0; });
                if (zero != in_lattice(basis, v)) {
                    FAIL_CHECK("kernel mismatch at " << x << "," << y << "," << z);
                    return;
                }
            }
}

IncidenceTable random_constraint_table(std::mt19937_64& rng) {
    IncidenceTable t = zero_incidence_table();
    std::uniform_int_distribution<int> d(-9, 9), nz(1, 9), sign(0, 1);
    auto col = [&](const char* name) {
        return static_cast<std::size_t>(std::find(t.column_names.begin(), t.column_names.end(), name) -
                                        t.column_names.begin());
    };
    for (std::size_t r = 0; r < t.row_names.size(); ++r) {
        if (t.row_names[r] == "III^8") continue;
        for (auto& e : t.entries[r]) e = d(rng);
        bool is5 = t.row_names[r] == "III^5";
        t.entries[r][col(is5 ? "IV^{11}" : "IV^{10}")] = nz(rng) * (sign(rng) ? 1 : -1);
        t.entries[r][col(is5 ? "IV^{10}" : "IV^{11}")] = 0;
    }
    return t;
}

}  // namespace

TEST_CASE("chiral bases") {
    auto c3 = chiral_basis(3);
    CHECK(std::set<std::string>(c3.begin(), c3.end()) == std::set<std::string>{"III^5", "III^7", "III^8"});
    auto c4 = chiral_basis(4);
    CHECK(c4.size() == 14);
    std::set<std::string> expected = {"IV^{0,5}", "IV^{0,7}", "IV^{0,8}", "IV^{1,5}", "IV^{1,7}",
                                      "IV^{1,8}", "IV^{10}",  "IV^{11}",  "IV^{12}",  "IV^{13}",
                                      "IV^{18}",  "IV^g",     "IV^h",     "IV^k"};
    CHECK(std::set<std::string>(c4.begin(), c4.end()) == expected);
}

TEST_CASE("integer_kernel examples") {
    auto zero = integer_kernel(IntMatrix(14, 3));
    CHECK(zero == std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(integer_kernel(IntMatrix::identity(3)).empty());
    IntMatrix m(14, 3);
    m(0, 0) = 1;
    m(1, 1) = 1;
    CHECK(integer_kernel(m) == std::vector<IntVector>{{0, 0, 1}});
    check_kernel_against_box(m);
    // Non-unit dependency: 2x - 3y = 0 gives the primitive vector (3, 2, .).
    IntMatrix n = IntMatrix::from_rows({{2, -3, 0}, {0, 0, 1}}, 3);
    CHECK(integer_kernel(n) == std::vector<IntVector>{{3, 2, 0}});
}

TEST_CASE("integer_kernel against a brute-force box search") {
    std::mt19937_64 rng(20261014);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m = i % 2 ? planted_matrix(rng) : random_matrix(rng, 14, 3, 2);
        check_kernel_against_box(m);
    }
}

TEST_CASE("Smith invariants and overflow") {
    IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 4}}, 2);
    CHECK(smith_invariants(m) == IntVector{2, 4});
    IntMatrix k = IntMatrix::from_rows({{2, 4}, {6, 8}}, 2);
    CHECK(smith_invariants(k) == IntVector{2, 4});
    CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), std::overflow_error);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), std::overflow_error);
}

TEST_CASE("build_complex examples") {
    auto cx = build_complex(minimal_incidence_table(), true);
    CHECK(cx.delta3.rows() == 14);
    CHECK(cx.delta3.cols() == 3);
    auto g = h3(cx);
    CHECK(g.free_rank == 1);
    CHECK(g.torsion.empty());
    CHECK(combination_string(g.generators.at(0), cx.c3_basis) == "III^8");
    CHECK(g.describe(cx.c3_basis).find("III^8") != std::string::npos);

    auto bad = minimal_incidence_table();
    auto r8 = std::find(bad.row_names.begin(), bad.row_names.end(), "III^8") - bad.row_names.begin();
    bad.entries[r8][0] = 1;
    try {
        build_complex(bad, true);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.what()).find("III^8") != std::string::npos);
    }
    CHECK_NOTHROW(build_complex(bad, false));

    auto zero = build_complex(zero_incidence_table(), false);
    CHECK(zero.delta3.is_zero());
    CHECK(h3(zero).free_rank == 3);
    CHECK_THROWS_AS(build_complex(zero_incidence_table(), true), ValidationError);
    auto h = h4(zero);
    CHECK(h.free_rank == 14);
    CHECK(h.table_dependent);
}

TEST_CASE("malformed tables") {
    auto t = minimal_incidence_table();
    t.column_names[0] = "IV^9";
    CHECK_FALSE(incidence_shape_violations(t).empty());
    CHECK_THROWS_AS(build_complex(t, false), ValidationError);
    CHECK_THROWS_AS(build_complex(parse_incidence_table("IV^{10}\nIII^5 1\n"), false), ValidationError);
}

TEST_CASE("incidence file round trip with permuted columns") {
    auto t = minimal_incidence_table();
    std::string text;
    std::vector<std::size_t> order(t.column_names.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = order.size() - 1 - i;
    for (auto i : order) text += t.column_names[i] + " ";
    text += "\n";
    for (std::size_t r = 0; r < 3; ++r) {
        text += t.row_names[r];
        for (auto i : order) text += " " + std::to_string(t.entries[r][i]);
        text += "\n";
    }
    auto p = parse_incidence_table(text);
    CHECK(p.entry("III^5", "IV^{11}") == 1);
    CHECK(p.entry("III^7", "IV^{10}") == 1);
    CHECK(p.entry("III^8", "IV^{18}") == 0);
    auto g = h3(build_complex(p, true));
    CHECK(g.free_rank == 1);
    CHECK(combination_string(g.generators.at(0), build_complex(p, true).c3_basis) == "III^8");
}

TEST_CASE("H^3 is generated by III^8 for random constraint tables") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        auto t = random_constraint_table(rng);
        auto v = incidence_constraint_violations(t);
        CAPTURE(v.size());
        if (!v.empty()) MESSAGE(v[0]);
        REQUIRE(v.empty());
        auto cx = build_complex(t, true);
        auto g = h3(cx);
        CHECK(g.free_rank == 1);
        CHECK(g.torsion.empty());
        auto s = combination_string(g.generators.at(0), cx.c3_basis);
        CHECK((s == "III^8" || s == "-III^8"));
    }
}

TEST_CASE("combination_string") {
    CHECK(combination_string({2, -1, 0}, {"III^5", "III^7", "III^8"}) == "2 III^5 - III^7");
    CHECK(combination_string({0, 0, 0}, {"a", "b", "c"}) == "0");
    CHECK(combination_string({-1, 0, 0}, {"a", "b", "c"}) == "-a");
}
