#pragma once

#include <utility>
#include <vector>

#include "designlattice/bigint.hpp"
#include "designlattice/errors.hpp"

namespace designlattice {

/// Dense matrix of exact integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
        data_.resize(static_cast<std::size_t>(rows) * cols);
    }
    IntMatrix(int rows, int cols, std::vector<Int> entries) : rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != static_cast<std::size_t>(rows) * cols)
            throw DimensionMismatch("entry count does not match dimensions");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix filled(int rows, int cols, const Int& value) {
        IntMatrix m(rows, cols);
        for (auto& e : m.data_) e = value;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Int& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

    bool operator==(const IntMatrix& other) const = default;

    std::vector<Int> row(int r) const {
        std::vector<Int> out(cols_);
        for (int c = 0; c < cols_; ++c) out[c] = (*this)(r, c);
        return out;
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (int r = 0; r < rows_; ++r)
            for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    IntMatrix operator*(const IntMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product dimension mismatch");
        IntMatrix out(rows_, rhs.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const Int& a = (*this)(i, k);
                if (a == 0) continue;
                for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
            }
        return out;
    }

    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
    }

    /// row[dst] += f * row[src]
    void add_row_multiple(int dst, int src, const Int& f) {
        for (int c = 0; c < cols_; ++c) (*this)(dst, c) += f * (*this)(src, c);
    }

    /// col[dst] += f * col[src]
    void add_col_multiple(int dst, int src, const Int& f) {
        for (int r = 0; r < rows_; ++r) (*this)(r, dst) += f * (*this)(r, src);
    }

    void negate_row(int r) {
        for (int c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    Int determinant() const {
        if (rows_ != cols_) throw DimensionMismatch("determinant of a non-square matrix");
        const int n = rows_;
        if (n == 0) return 1;
        IntMatrix a = *this;
        Int sign = 1, prev = 1;
        for (int c = 0; c + 1 < n; ++c) {
            int piv = -1;
            for (int r = c; r < n; ++r)
                if (a(r, c) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            if (piv != c) {
                a.swap_rows(piv, c);
                sign = -sign;
            }
            for (int i = c + 1; i < n; ++i)
                for (int j = c + 1; j < n; ++j) a(i, j) = (a(i, j) * a(c, c) - a(i, c) * a(c, j)) / prev;
            prev = a(c, c);
        }
        return sign * a(n - 1, n - 1);
    }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> data_;
};

/// Row vector times matrix.
inline std::vector<Int> operator*(const std::vector<Int>& v, const IntMatrix& m) {
    if (static_cast<int>(v.size()) != m.rows()) throw DimensionMismatch("vector-matrix dimension mismatch");
    std::vector<Int> out(m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        if (v[r] == 0) continue;
        for (int c = 0; c < m.cols(); ++c) out[c] += v[r] * m(r, c);
    }
    return out;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product dimension mismatch");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Matrix JSON: {"rows":r,"cols":c,"entries":[[...],...]} with decimal strings
// for entries beyond 64-bit range.
inline void to_json(nlohmann::json& j, const IntMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(json_int(m(r, c)));
        entries.push_back(std::move(row));
    }
    j = nlohmann::json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
        throw std::invalid_argument("matrix JSON requires rows, cols, entries");
    const int rows = j.at("rows").get<int>();
    const int cols = j.at("cols").get<int>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
        throw std::invalid_argument("matrix JSON row count mismatch");
    IntMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        const auto& row = entries[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("matrix JSON column count mismatch");
        for (int c = 0; c < cols; ++c) m(r, c) = int_from_json(row[c]);
    }
    return m;
}

}  // namespace designlattice
