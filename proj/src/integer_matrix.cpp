#include "fibersig/integer_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <tuple>

namespace fibersig {

Integer checked_add(Integer a, Integer b) {
    Integer r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Integer checked_mul(Integer a, Integer b) {
    Integer r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

namespace {

Integer lin(Integer x, Integer a, Integer y, Integer b) { return checked_add(checked_mul(x, a), checked_mul(y, b)); }

// g = gcd(a, b) >= 0 with x a + y b = g.
std::tuple<Integer, Integer, Integer> extended_gcd(Integer a, Integer b) {
    Integer old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        Integer q = old_r / r;
        std::tie(old_r, r) = std::make_tuple(r, checked_add(old_r, -checked_mul(q, r)));
        std::tie(old_s, s) = std::make_tuple(s, checked_add(old_s, -checked_mul(q, s)));
        std::tie(old_t, t) = std::make_tuple(t, checked_add(old_t, -checked_mul(q, t)));
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

Integer floor_div(Integer a, Integer b) {
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const { return IntVector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::apply(const IntVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
    IntVector out(rows_, 0);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r] = checked_add(out[r], checked_mul((*this)(r, c), v[c]));
    return out;
}

bool IntMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Integer x) { return x == 0; });
}

std::vector<IntVector> row_hermite_basis(std::vector<IntVector> rows, std::size_t cols) {
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows.size(); ++c) {
        for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            auto [g, x, y] = extended_gcd(rows[pivot_row][c], rows[r][c]);
            Integer a = rows[pivot_row][c] / g, b = rows[r][c] / g;
            for (std::size_t k = 0; k < cols; ++k) {
                Integer p = rows[pivot_row][k], q = rows[r][k];
                rows[pivot_row][k] = lin(x, p, y, q);
                rows[r][k] = lin(-b, p, a, q);
            }
        }
        if (rows[pivot_row][c] == 0) continue;
        if (rows[pivot_row][c] < 0)
            for (auto& e : rows[pivot_row]) e = -e;
        for (std::size_t r = 0; r < pivot_row; ++r) {
            Integer q = floor_div(rows[r][c], rows[pivot_row][c]);
            if (q == 0) continue;
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] = checked_add(rows[r][k], -checked_mul(q, rows[pivot_row][k]));
        }
        ++pivot_row;
    }
    rows.resize(pivot_row);
    return rows;
}

std::vector<IntVector> integer_kernel(const IntMatrix& m) {
    const std::size_t n = m.cols();
    IntMatrix a = m;
    IntMatrix u = IntMatrix::identity(n);
    auto combine = [&](std::size_t p, std::size_t c, Integer x, Integer y, Integer s, Integer t) {
        // col p <- x col p + y col c ; col c <- s col p + t col c  (x t - y s = 1)
        for (std::size_t r = 0; r < a.rows(); ++r) {
            Integer ap = a(r, p), ac = a(r, c);
            a(r, p) = lin(x, ap, y, ac);
            a(r, c) = lin(s, ap, t, ac);
        }
        for (std::size_t r = 0; r < n; ++r) {
            Integer up = u(r, p), uc = u(r, c);
            u(r, p) = lin(x, up, y, uc);
            u(r, c) = lin(s, up, t, uc);
        }
    };
    std::size_t pivot = 0;
    for (std::size_t r = 0; r < a.rows() && pivot < n; ++r) {
        for (std::size_t c = pivot + 1; c < n; ++c) {
            if (a(r, c) == 0) continue;
            auto [g, x, y] = extended_gcd(a(r, pivot), a(r, c));
            combine(pivot, c, x, y, -a(r, c) / g, a(r, pivot) / g);
        }
        if (a(r, pivot) != 0) ++pivot;
    }
    std::vector<IntVector> basis;
    for (std::size_t c = pivot; c < n; ++c) basis.push_back(u.column(c));
    return row_hermite_basis(std::move(basis), n);
}

IntVector smith_invariants(const IntMatrix& m) {
    IntMatrix a = m;
    const std::size_t rows = a.rows(), cols = a.cols();
    IntVector out;
    for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            std::size_t br = rows, bc = cols;
            for (std::size_t r = t; r < rows; ++r)
                for (std::size_t c = t; c < cols; ++c)
                    if (a(r, c) != 0 && (br == rows || std::llabs(a(r, c)) < std::llabs(a(br, bc)))) br = r, bc = c;
            if (br == rows) return out;
            for (std::size_t c = 0; c < cols; ++c) std::swap(a(t, c), a(br, c));
            for (std::size_t r = 0; r < rows; ++r) std::swap(a(r, t), a(r, bc));
            bool clean = true;
            Integer p = a(t, t);
            for (std::size_t r = t + 1; r < rows; ++r) {
                Integer q = a(r, t) / p;
                for (std::size_t c = t; c < cols; ++c) a(r, c) = checked_add(a(r, c), -checked_mul(q, a(t, c)));
                clean = clean && a(r, t) == 0;
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                Integer q = a(t, c) / p;
                for (std::size_t r = t; r < rows; ++r) a(r, c) = checked_add(a(r, c), -checked_mul(q, a(r, t)));
                clean = clean && a(t, c) == 0;
            }
            if (!clean) continue;
            // Divisibility: fold a row with a non-multiple into row t and retry.
            std::size_t bad = rows;
            for (std::size_t r = t + 1; r < rows && bad == rows; ++r)
                for (std::size_t c = t + 1; c < cols; ++c)
                    if (a(r, c) % p != 0) {
                        bad = r;
                        break;
                    }
            if (bad == rows) break;
            for (std::size_t c = t; c < cols; ++c) a(t, c) = checked_add(a(t, c), a(bad, c));
        }
        out.push_back(std::llabs(a(t, t)));
    }
    return out;
}

std::size_t matrix_rank(const IntMatrix& m) { return smith_invariants(m).size(); }

bool in_lattice(const std::vector<IntVector>& basis, const IntVector& v) {
    IntVector rest = v;
    for (const auto& b : basis) {
        auto p = std::find_if(b.begin(), b.end(), [](Integer x) { return x != 0; });
        if (p == b.end()) continue;
        auto c = static_cast<std::size_t>(p - b.begin());
        if (rest[c] % *p != 0) return false;
        Integer q = rest[c] / *p;
        for (std::size_t k = 0; k < rest.size(); ++k) rest[k] = checked_add(rest[k], -checked_mul(q, b[k]));
    }
    return std::all_of(rest.begin(), rest.end(), [](Integer x) { return x == 0; });
}

}  // namespace fibersig
