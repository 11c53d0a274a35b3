#include "fibersig/universal_complex.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fibersig/builtin_data.hpp"
#include "fibersig/catalog.hpp"
#include "fibersig/errors.hpp"
#include "fibersig/octants.hpp"
#include "fibersig/text_io.hpp"

namespace fibersig {

namespace {

std::ptrdiff_t index_of(const std::vector<std::string>& names, std::string_view name) {
    auto norm = normalize_name(name);
    if (!norm) return -1;
    auto it = std::find(names.begin(), names.end(), *norm);
    return it == names.end() ? -1 : it - names.begin();
}

}  // namespace

Integer IncidenceTable::entry(std::string_view row, std::string_view column) const {
    auto r = index_of(row_names, row), c = index_of(column_names, column);
    if (r < 0 || c < 0) throw DomainError("incidence table has no entry [" + std::string(row) + ":" + std::string(column) + "]");
    return entries[r][c];
}

std::vector<std::string> chiral_basis(int kappa) {
    std::vector<std::string> out;
    for (const auto* cls : Catalog::builtin(DimensionPair::d5_4).entries_of_codimension(kappa))
        if (is_chiral(*cls)) out.push_back(cls->name);
    return out;
}

IncidenceTable parse_incidence_table(std::string_view text) {
    IncidenceTable t;
    bool header = false;
    for (const auto& line : tokenize_lines(text)) {
        if (!header) {
            for (const auto& w : line.words) {
                auto norm = normalize_name(w);
                if (!norm) throw ParseError(line.number, "malformed class name '" + w + "' in header");
                t.column_names.push_back(*norm);
            }
            header = true;
            continue;
        }
        auto name = normalize_name(line.words[0]);
        if (!name) throw ParseError(line.number, "malformed row name '" + line.words[0] + "'");
        if (line.words.size() != t.column_names.size() + 1)
            throw ParseError(line.number, "row " + *name + " has " + std::to_string(line.words.size() - 1) +
                                              " entries, header has " + std::to_string(t.column_names.size()));
        IntVector row;
        for (std::size_t k = 1; k < line.words.size(); ++k) row.push_back(parse_integer(line.words[k], line.number));
        t.row_names.push_back(*name);
        t.entries.push_back(std::move(row));
    }
    if (!header) throw ParseError(0, "incidence table is empty");
    return t;
}

IncidenceTable minimal_incidence_table() { return parse_incidence_table(builtin_incidence_table()); }

IncidenceTable zero_incidence_table() {
    IncidenceTable t;
    t.row_names = chiral_basis(3);
    t.column_names = chiral_basis(4);
    t.entries.assign(t.row_names.size(), IntVector(t.column_names.size(), 0));
    return t;
}

std::vector<std::string> incidence_shape_violations(const IncidenceTable& table) {
    std::vector<std::string> out;
    auto check = [&](const std::vector<std::string>& got, const std::vector<std::string>& want, const char* what) {
        std::set<std::string> seen;
        for (const auto& n : got) {
            if (!seen.insert(n).second) out.push_back(std::string(what) + " " + n + " appears twice");
            if (std::find(want.begin(), want.end(), n) == want.end())
                out.push_back(std::string(what) + " " + n + " is not a chiral class of that codimension");
        }
        for (const auto& n : want)
            if (!seen.count(n)) out.push_back(std::string(what) + " " + n + " is missing");
    };
    check(table.row_names, chiral_basis(3), "row");
    check(table.column_names, chiral_basis(4), "column");
    return out;
}

std::vector<std::string> incidence_constraint_violations(const IncidenceTable& t) {
    std::vector<std::string> out;
    auto r8 = index_of(t.row_names, "III^8");
    for (std::size_t c = 0; c < t.column_names.size(); ++c)
        if (t.entries[r8][c] != 0)
            out.push_back("[III^8:" + t.column_names[c] + "] = " + std::to_string(t.entries[r8][c]) +
                          ", but the III^8 locus has equally many incoming and outgoing arcs at every codim-4 point");
    auto need = [&](const char* g, const char* f, bool nonzero) {
        Integer e = t.entry(g, f);
        if ((e != 0) != nonzero)
            out.push_back(std::string("[") + g + ":" + f + "] = " + std::to_string(e) + ", must be " +
                          (nonzero ? "nonzero" : "zero") + " (III^5 and III^7 are not cocycles)");
    };
    need("III^5", "IV^11", true);
    need("III^5", "IV^10", false);
    need("III^7", "IV^11", false);
    need("III^7", "IV^10", true);
    return out;
}

ChiralComplex build_complex(const IncidenceTable& table, bool validate) {
    auto shape = incidence_shape_violations(table);
    if (!shape.empty()) throw ValidationError("incidence table shape", shape);
    if (validate) {
        auto v = incidence_constraint_violations(table);
        if (!v.empty()) throw ValidationError("incidence table constraint", v);
    }
    ChiralComplex cx;
    cx.c3_basis = chiral_basis(3);
    cx.c4_basis = chiral_basis(4);
    cx.delta3 = IntMatrix(cx.c4_basis.size(), cx.c3_basis.size());
    for (std::size_t g = 0; g < cx.c3_basis.size(); ++g)
        for (std::size_t f = 0; f < cx.c4_basis.size(); ++f) cx.delta3(f, g) = table.entry(cx.c3_basis[g], cx.c4_basis[f]);
    return cx;
}

CohomologyGroup h3(const ChiralComplex& cx) {
    CohomologyGroup h;
    h.degree = 3;
    h.generators = integer_kernel(cx.delta3);
    // The incoming coboundary is the zero map from C^2 = 0: it contributes no torsion.
    IntMatrix delta2(cx.c3_basis.size(), 0);
    for (auto d : smith_invariants(delta2))
        if (d > 1) h.torsion.push_back(d);
    h.free_rank = h.generators.size() - matrix_rank(delta2);
    return h;
}

CohomologyGroup h4(const ChiralComplex& cx) {
    CohomologyGroup h;
    h.degree = 4;
    h.table_dependent = true;
    auto inv = smith_invariants(cx.delta3);
    h.free_rank = cx.c4_basis.size() - inv.size();
    for (auto d : inv)
        if (d > 1) h.torsion.push_back(d);
    return h;
}

std::string combination_string(const IntVector& coefficients, const std::vector<std::string>& names) {
    std::string out;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        Integer c = coefficients[i];
        if (c == 0) continue;
        Integer a = c < 0 ? -c : c;
        if (out.empty()) out += c < 0 ? "-" : "";
        else out += c < 0 ? " - " : " + ";
        if (a != 1) out += std::to_string(a) + " ";
        out += names[i];
    }
    return out.empty() ? "0" : out;
}

std::string CohomologyGroup::describe(const std::vector<std::string>& basis) const {
    std::ostringstream out;
    out << "H^" << degree << " = ";
    if (free_rank == 0 && torsion.empty()) out << "0";
    bool first = true;
    if (free_rank > 0) {
        out << (free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
        first = false;
    }
    for (auto d : torsion) {
        out << (first ? "" : " + ") << "Z/" << d;
        first = false;
    }
    out << " (rank " << free_rank << ", torsion " << (torsion.empty() ? "none" : std::to_string(torsion.size()) + " factor(s)") << ")";
    if (!generators.empty()) {
        out << "; generators:";
        for (const auto& g : generators) out << " [" << combination_string(g, basis) << "]";
    }
    if (table_dependent) out << "; depends on the unpinned incidence coefficients";
    return out.str();
}

}  // namespace fibersig
