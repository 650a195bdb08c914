#ifndef KUMMER_MODF2_F2_HPP
#define KUMMER_MODF2_F2_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kummer/errors.hpp"

// Linear algebra over F_2 with vectors packed into 64-bit words (bit i = coordinate i).

namespace kummer::modf2 {

using F2Vec = std::uint64_t;

inline constexpr int kMaxDim = 64;

inline int parity(F2Vec v) { return std::popcount(v) & 1; }
inline F2Vec unit_vector(int i) { return F2Vec{1} << i; }
inline F2Vec low_mask(int d) { return d >= 64 ? ~F2Vec{0} : (F2Vec{1} << d) - 1; }

/// rows x cols matrix over F_2; row i is a bitmask over the columns.
struct F2Mat {
    int rows = 0;
    int cols = 0;
    std::vector<F2Vec> r;

    F2Mat() = default;
    F2Mat(int rows_, int cols_) : rows(rows_), cols(cols_), r(static_cast<std::size_t>(rows_), 0) {
        if (rows_ > kMaxDim || cols_ > kMaxDim) throw ResourceError("F2 matrices are limited to 64 rows and columns");
    }

    static F2Mat identity(int d) {
        F2Mat m(d, d);
        for (int i = 0; i < d; ++i) m.r[static_cast<std::size_t>(i)] = unit_vector(i);
        return m;
    }

    /// Matrix with the given columns.
    static F2Mat from_columns(int rows, const std::vector<F2Vec>& columns) {
        F2Mat m(rows, static_cast<int>(columns.size()));
        for (std::size_t j = 0; j < columns.size(); ++j)
            for (int i = 0; i < rows; ++i)
                if ((columns[j] >> i) & 1u) m.r[static_cast<std::size_t>(i)] |= unit_vector(static_cast<int>(j));
        return m;
    }

    bool get(int i, int j) const { return (r[static_cast<std::size_t>(i)] >> j) & 1u; }
    void set(int i, int j, bool v) {
        if (v)
            r[static_cast<std::size_t>(i)] |= unit_vector(j);
        else
            r[static_cast<std::size_t>(i)] &= ~unit_vector(j);
    }

    F2Vec column(int j) const {
        F2Vec c = 0;
        for (int i = 0; i < rows; ++i)
            if (get(i, j)) c |= unit_vector(i);
        return c;
    }

    F2Vec apply(F2Vec v) const {
        F2Vec out = 0;
        for (int i = 0; i < rows; ++i)
            if (parity(r[static_cast<std::size_t>(i)] & v)) out |= unit_vector(i);
        return out;
    }

    friend F2Mat operator*(const F2Mat& a, const F2Mat& b) {
        if (a.cols != b.rows) throw InputError("F2 matrix dimension mismatch");
        F2Mat c(a.rows, b.cols);
        for (int i = 0; i < a.rows; ++i) {
            F2Vec acc = 0;
            F2Vec row = a.r[static_cast<std::size_t>(i)];
            while (row) {
                int k = std::countr_zero(row);
                acc ^= b.r[static_cast<std::size_t>(k)];
                row &= row - 1;
            }
            c.r[static_cast<std::size_t>(i)] = acc;
        }
        return c;
    }

    friend F2Mat operator+(const F2Mat& a, const F2Mat& b) {
        F2Mat c = a;
        for (int i = 0; i < a.rows; ++i) c.r[static_cast<std::size_t>(i)] ^= b.r[static_cast<std::size_t>(i)];
        return c;
    }

    friend bool operator==(const F2Mat& a, const F2Mat& b) { return a.rows == b.rows && a.cols == b.cols && a.r == b.r; }

    F2Mat transpose() const {
        F2Mat t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                if (get(i, j)) t.set(j, i, true);
        return t;
    }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows; ++i) {
            for (int j = 0; j < cols; ++j) s += get(i, j) ? '1' : '0';
            if (i + 1 < rows) s += '\n';
        }
        return s;
    }
};

/// Incrementally maintained row-echelon basis of a subspace of F_2^n.
class EchelonBasis {
public:
    /// Reduces v against the basis; the result is zero iff v lies in the span.
    F2Vec reduce(F2Vec v) const {
        for (std::size_t k = 0; k < rows_.size(); ++k)
            if ((v >> pivots_[k]) & 1u) v ^= rows_[k];
        return v;
    }

    /// Adds v; returns false if it was already in the span.
    bool insert(F2Vec v) {
        v = reduce(v);
        if (!v) return false;
        int piv = 63 - std::countl_zero(v);
        for (auto& row : rows_)
            if ((row >> piv) & 1u) row ^= v;
        rows_.push_back(v);
        pivots_.push_back(piv);
        return true;
    }

    bool contains(F2Vec v) const { return reduce(v) == 0; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<F2Vec>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

private:
    std::vector<F2Vec> rows_;
    std::vector<int> pivots_;
};

inline int rank(const F2Mat& m) {
    EchelonBasis b;
    for (auto row : m.r) b.insert(row);
    return b.rank();
}

/// Basis of the solution space {x in F_2^n : row . x = 0 for every row}.
inline std::vector<F2Vec> nullspace(const std::vector<F2Vec>& rows, int n) {
    EchelonBasis b;
    for (auto row : rows) b.insert(row & low_mask(n));
    // Fully reduced rows: each pivot column appears only in its own row.
    std::vector<char> is_pivot(static_cast<std::size_t>(n), 0);
    for (int p : b.pivots()) is_pivot[static_cast<std::size_t>(p)] = 1;
    std::vector<F2Vec> basis;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        F2Vec x = unit_vector(f);
        for (std::size_t k = 0; k < b.rows().size(); ++k)
            if ((b.rows()[k] >> f) & 1u) x |= unit_vector(b.pivots()[k]);
        basis.push_back(x);
    }
    return basis;
}

inline std::vector<F2Vec> kernel(const F2Mat& m) { return nullspace(m.r, m.cols); }

/// Solves eqs[i] . x = bit i of rhs (at most 63 unknowns); nullopt when inconsistent.
inline std::optional<F2Vec> solve_rows(const std::vector<F2Vec>& eqs, F2Vec rhs) {
    // Unknowns shifted up one bit, right-hand side in bit 0, so pivots never land on it
    // unless the row reads 0 = 1.
    if (eqs.size() > 64) throw ResourceError("solve limited to 64 equations");
    EchelonBasis b;
    for (std::size_t i = 0; i < eqs.size(); ++i) {
        if (eqs[i] >> 63) throw ResourceError("solve limited to 63 unknowns");
        b.insert((eqs[i] << 1) | ((rhs >> i) & 1u));
    }
    F2Vec x = 0;
    for (std::size_t k = 0; k < b.rows().size(); ++k) {
        if (b.pivots()[k] == 0) return std::nullopt;
        if (b.rows()[k] & 1u) x |= unit_vector(b.pivots()[k] - 1);
    }
    return x;
}

/// Solves m x = rhs; nullopt when inconsistent.
inline std::optional<F2Vec> solve(const F2Mat& m, F2Vec rhs) {
    if (m.cols >= 64) throw ResourceError("solve limited to 63 unknowns");
    std::vector<F2Vec> eqs;
    for (int i = 0; i < m.rows; ++i) eqs.push_back(m.r[static_cast<std::size_t>(i)]);
    return solve_rows(eqs, rhs);
}

/// Column space of m as an echelon basis.
inline EchelonBasis image(const F2Mat& m) {
    EchelonBasis b;
    for (int j = 0; j < m.cols; ++j) b.insert(m.column(j));
    return b;
}

}  // namespace kummer::modf2

#endif
