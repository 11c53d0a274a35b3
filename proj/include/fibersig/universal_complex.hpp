#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fibersig/integer_matrix.hpp"

namespace fibersig {

// Incidence coefficients [G:F] of the codim-3 chiral classes G (rows) at the codim-4
// chiral classes F (columns), in the order they were read.
struct IncidenceTable {
    std::vector<std::string> row_names;
    std::vector<std::string> column_names;
    std::vector<IntVector> entries;  // entries[row][column]

    Integer entry(std::string_view row, std::string_view column) const;  // throws DomainError
};

// Chiral (5,4) classes of codimension 3 and 4, in catalog order.
std::vector<std::string> chiral_basis(int kappa);

IncidenceTable parse_incidence_table(std::string_view text);
IncidenceTable minimal_incidence_table();
// Table with the canonical row/column order and every entry zero.
IncidenceTable zero_incidence_table();

// Row/column sets must be exactly the chiral bases (any order).
std::vector<std::string> incidence_shape_violations(const IncidenceTable& table);
// The cocycle constraints on the coefficients.
std::vector<std::string> incidence_constraint_violations(const IncidenceTable& table);

struct ChiralComplex {
    std::vector<std::string> c3_basis;  // 3 names
    std::vector<std::string> c4_basis;  // 14 names
    IntMatrix delta3;                   // 14 x 3, column per C^3 generator
};

// Throws ValidationError for a malformed table, or (validate only) a constraint violation.
ChiralComplex build_complex(const IncidenceTable& table, bool validate);

struct CohomologyGroup {
    int degree = 0;
    std::size_t free_rank = 0;
    IntVector torsion;                    // invariant factors > 1
    std::vector<IntVector> generators;    // free generators in the C^k basis (when computed)
    bool table_dependent = false;

    std::string describe(const std::vector<std::string>& basis) const;
};

// H^3 = ker delta3 (C^2 = 0); H^4 = coker delta3 (C^5 = 0), flagged table-dependent.
CohomologyGroup h3(const ChiralComplex& complex);
CohomologyGroup h4(const ChiralComplex& complex);

// "III^8", "2 III^5 - III^7", "0".
std::string combination_string(const IntVector& coefficients, const std::vector<std::string>& names);

}  // namespace fibersig
