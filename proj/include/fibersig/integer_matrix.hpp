#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fibersig {

using Integer = std::int64_t;
using IntVector = std::vector<Integer>;

// Dense row-major integer matrix. Arithmetic is exact: every operation is
// overflow-checked and throws std::overflow_error rather than wrapping.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Integer operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;
    IntVector apply(const IntVector& v) const;  // M v
    bool is_zero() const;
    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Integer> data_;
};

Integer checked_add(Integer a, Integer b);
Integer checked_mul(Integer a, Integer b);

// Row Hermite normal form of the lattice spanned by the rows: zero rows dropped,
// pivots positive and strictly increasing in column, entries above a pivot reduced
// into [0, pivot). Unique for the lattice.
std::vector<IntVector> row_hermite_basis(std::vector<IntVector> rows, std::size_t cols);

// Basis of {v in Z^n : M v = 0}, each vector of length n, in row Hermite normal form.
std::vector<IntVector> integer_kernel(const IntMatrix& m);

// Nonzero Smith invariant factors d1 | d2 | ... (all positive).
IntVector smith_invariants(const IntMatrix& m);
std::size_t matrix_rank(const IntMatrix& m);

// Membership in the lattice spanned by a row Hermite basis.
bool in_lattice(const std::vector<IntVector>& hermite_basis, const IntVector& v);

}  // namespace fibersig
