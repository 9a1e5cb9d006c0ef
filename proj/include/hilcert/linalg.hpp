#ifndef HILCERT_LINALG_HPP
#define HILCERT_LINALG_HPP

#include <optional>
#include <vector>

#include "scalar.hpp"

namespace hilcert {

// Dense exact matrix over the coefficient field.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

private:
    std::size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;
};

// Exact rank by Gaussian elimination over the field.
inline std::size_t rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = c; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j)
                m.at(i, j) -= factor * m.at(r, j);
        }
        ++r;
    }
    return r;
}

namespace detail {

// Fraction-free (Bareiss) forward elimination on an integer matrix with
// column pivoting; fills `pivot_cols` and returns the echelonized matrix.
// Intermediate entries stay divisors-exact, controlling coefficient growth.
inline std::vector<std::vector<mpz_class>>
bareiss_echelon(std::vector<std::vector<mpz_class>> a, std::vector<std::size_t>& pivot_cols) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(a[pivot], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    return a;
}

} // namespace detail

// Solve A x = b exactly; returns any solution (free variables set to 0), or
// nullopt when inconsistent. Over Q the elimination is fraction-free
// (Bareiss) on a denominator-cleared integer matrix; over F_p it is ordinary
// modular elimination.
inline std::optional<std::vector<Scalar>> solve_linear(const Matrix& a,
                                                       const std::vector<Scalar>& b) {
    const std::size_t rows = a.rows(), cols = a.cols();
    const Field& f = a.field();

    if (!f.is_prime_field()) {
        // clear denominators row by row, then Bareiss
        std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols + 1));
        for (std::size_t i = 0; i < rows; ++i) {
            mpz_class lcm = 1;
            for (std::size_t j = 0; j < cols; ++j)
                mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a.at(i, j).rational_value().get_den_mpz_t());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b[i].rational_value().get_den_mpz_t());
            for (std::size_t j = 0; j < cols; ++j) {
                mpq_class q = a.at(i, j).rational_value() * lcm;
                m[i][j] = q.get_num();
            }
            mpq_class q = b[i].rational_value() * lcm;
            m[i][cols] = q.get_num();
        }
        std::vector<std::size_t> pivot_cols;
        auto e = detail::bareiss_echelon(std::move(m), pivot_cols);

        // consistency: any row 0 = nonzero?
        for (std::size_t i = pivot_cols.size(); i < rows; ++i)
            if (e[i][cols] != 0) return std::nullopt;
        // pivot in the RHS column means inconsistency too
        if (!pivot_cols.empty() && pivot_cols.back() == cols) return std::nullopt;

        std::vector<mpq_class> x(cols, 0);
        for (std::size_t k = pivot_cols.size(); k-- > 0;) {
            std::size_t c = pivot_cols[k];
            mpq_class rhs = e[k][cols];
            for (std::size_t j = c + 1; j < cols; ++j)
                if (x[j] != 0) rhs -= mpq_class(e[k][j]) * x[j];
            x[c] = rhs / mpq_class(e[k][c]);
        }
        std::vector<Scalar> out;
        out.reserve(cols);
        for (auto& q : x) out.push_back(Scalar::rational(q));
        return out;
    }

    // modular elimination
    Matrix m(rows, cols + 1, f);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = a.at(i, j);
        m.at(i, cols) = b[i];
    }
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m.at(pivot, c).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r)
            for (std::size_t j = c; j <= cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        Scalar inv = m.at(r, c).inverse();
        for (std::size_t j = c; j <= cols; ++j) m.at(r, j) *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar factor = m.at(i, c);
            for (std::size_t j = c; j <= cols; ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        pivot_cols.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (!m.at(i, cols).is_zero()) return std::nullopt;
    std::vector<Scalar> x(cols, Scalar::zero(f));
    for (std::size_t k = 0; k < pivot_cols.size(); ++k) x[pivot_cols[k]] = m.at(k, cols);
    return x;
}

} // namespace hilcert

#endif
