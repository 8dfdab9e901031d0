#pragma once

#include <optional>
#include <vector>

#include "designlattice/intmatrix.hpp"

namespace designlattice {

/// Row-style Hermite normal form H = U*M with U unimodular: pivots positive,
/// entries above each pivot reduced into [0, pivot), zero rows last.
struct HermiteForm {
    IntMatrix h;
    IntMatrix u;
    std::vector<int> pivot_cols;  // column of the pivot in row i, for i < rank
    int rank() const { return static_cast<int>(pivot_cols.size()); }
};

inline HermiteForm hermite_normal_form(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        // Knock the column below row r down to a single entry. Pivot choice:
        // smallest nonzero absolute value, lowest row on ties.
        for (;;) {
            int best = -1;
            for (int i = r; i < m.rows(); ++i)
                if (h(i, c) != 0 && (best < 0 || abs(h(i, c)) < abs(h(best, c)))) best = i;
            if (best < 0) break;
            if (best != r) {
                h.swap_rows(r, best);
                u.swap_rows(r, best);
            }
            bool clean = true;
            for (int i = r + 1; i < m.rows(); ++i) {
                if (h(i, c) == 0) continue;
                Int q = h(i, c) / h(r, c);
                if (q != 0) {
                    h.add_row_multiple(i, r, -q);
                    u.add_row_multiple(i, r, -q);
                }
                if (h(i, c) != 0) clean = false;
            }
            if (clean) break;
        }
        if (h(r, c) != 0) {
            if (h(r, c) < 0) {
                h.negate_row(r);
                u.negate_row(r);
            }
            for (int i = 0; i < r; ++i) {
                Int q = floor_div(h(i, c), h(r, c));
                if (q != 0) {
                    h.add_row_multiple(i, r, -q);
                    u.add_row_multiple(i, r, -q);
                }
            }
            pivots.push_back(c);
            ++r;
        }
    }
    return {std::move(h), std::move(u), std::move(pivots)};
}

/// Smith normal form S = U*M*V with U, V unimodular, S diagonal,
/// diag nonnegative with d_i | d_{i+1} and trailing zeros.
struct SmithDecomposition {
    IntMatrix s;
    IntMatrix u;
    IntMatrix v;
    std::vector<Int> diag;
};

inline SmithDecomposition smith_normal_form(const IntMatrix& m) {
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    IntMatrix v = IntMatrix::identity(m.cols());
    const int nmin = std::min(m.rows(), m.cols());
    for (int i = 0; i < nmin; ++i) {
        bool exhausted = false;
        for (;;) {
            // Smallest nonzero absolute value in the trailing submatrix,
            // lowest row then column on ties, to damp coefficient growth.
            int pr = -1, pc = -1;
            for (int r = i; r < m.rows(); ++r)
                for (int c = i; c < m.cols(); ++c)
                    if (s(r, c) != 0 && (pr < 0 || abs(s(r, c)) < abs(s(pr, pc)))) {
                        pr = r;
                        pc = c;
                    }
            if (pr < 0) {
                exhausted = true;
                break;
            }
            if (pr != i) {
                s.swap_rows(i, pr);
                u.swap_rows(i, pr);
            }
            if (pc != i) {
                s.swap_cols(i, pc);
                v.swap_cols(i, pc);
            }
            bool lone = true;
            for (int r = i + 1; r < m.rows(); ++r) {
                if (s(r, i) == 0) continue;
                Int q = s(r, i) / s(i, i);
                if (q != 0) {
                    s.add_row_multiple(r, i, -q);
                    u.add_row_multiple(r, i, -q);
                }
                if (s(r, i) != 0) lone = false;
            }
            for (int c = i + 1; c < m.cols(); ++c) {
                if (s(i, c) == 0) continue;
                Int q = s(i, c) / s(i, i);
                if (q != 0) {
                    s.add_col_multiple(c, i, -q);
                    v.add_col_multiple(c, i, -q);
                }
                if (s(i, c) != 0) lone = false;
            }
            if (!lone) continue;
            // Repair the divisibility chain: fold in a row holding an entry
            // the pivot does not divide, then keep reducing.
            int br = -1;
            for (int r = i + 1; r < m.rows() && br < 0; ++r)
                for (int c = i + 1; c < m.cols(); ++c)
                    if (s(r, c) % s(i, i) != 0) {
                        br = r;
                        break;
                    }
            if (br < 0) break;
            s.add_row_multiple(i, br, 1);
            u.add_row_multiple(i, br, 1);
        }
        if (exhausted) break;
        if (s(i, i) < 0) {
            s.negate_row(i);
            u.negate_row(i);
        }
    }
    std::vector<Int> diag(nmin);
    for (int i = 0; i < nmin; ++i) diag[i] = s(i, i);
    return {std::move(s), std::move(u), std::move(v), std::move(diag)};
}

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

/// Rank of M reduced mod p, by exact elimination over GF(p).
inline int rank_over_gf(const IntMatrix& m, long long p) {
    if (!is_prime(p)) throw NotPrime("modulus " + std::to_string(p) + " is not prime");
    std::vector<std::vector<long long>> a(m.rows(), std::vector<long long>(m.cols()));
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c) a[r][c] = mod_floor(m(r, c), p).convert_to<long long>();
    int rank = 0;
    for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
        int piv = -1;
        for (int r = rank; r < m.rows(); ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[piv], a[rank]);
        // normalize pivot to 1 via Fermat inverse
        long long inv = 1, base = a[rank][c] % p, e = p - 2;
        while (e > 0) {
            if (e & 1) inv = static_cast<long long>(static_cast<__int128>(inv) * base % p);
            base = static_cast<long long>(static_cast<__int128>(base) * base % p);
            e >>= 1;
        }
        for (int j = c; j < m.cols(); ++j)
            a[rank][j] = static_cast<long long>(static_cast<__int128>(a[rank][j]) * inv % p);
        for (int r = 0; r < m.rows(); ++r) {
            if (r == rank || a[r][c] == 0) continue;
            long long f = a[r][c];
            for (int j = c; j < m.cols(); ++j) {
                a[r][j] = (a[r][j] - static_cast<long long>(static_cast<__int128>(f) * a[rank][j] % p)) % p;
                if (a[r][j] < 0) a[r][j] += p;
            }
        }
        ++rank;
    }
    return rank;
}

/// Rank over Q (= number of nonzero Hermite rows).
inline int rank_over_q(const IntMatrix& m) { return hermite_normal_form(m).rank(); }

namespace detail {

// Pivot positions (row, col) of a matrix already in row-echelon form.
inline std::vector<std::pair<int, int>> echelon_pivots(const IntMatrix& h) {
    std::vector<std::pair<int, int>> pivots;
    int last_col = -1;
    for (int r = 0; r < h.rows(); ++r) {
        int c = 0;
        while (c < h.cols() && h(r, c) == 0) ++c;
        if (c == h.cols()) break;  // zero rows last
        if (c <= last_col) throw std::invalid_argument("matrix is not in echelon form");
        pivots.emplace_back(r, c);
        last_col = c;
    }
    return pivots;
}

// Back-substitute target against the echelon rows of h. Returns the row
// coefficients (length h.rows()) when target lies in the row lattice.
inline std::optional<std::vector<Int>> echelon_solve(const IntMatrix& h, const std::vector<Int>& x) {
    if (static_cast<int>(x.size()) != h.cols())
        throw DimensionMismatch("vector length does not match lattice dimension");
    auto pivots = echelon_pivots(h);
    std::vector<Int> residual = x;
    std::vector<Int> y(h.rows());
    std::size_t next = 0;
    for (int c = 0; c < h.cols(); ++c) {
        if (next < pivots.size() && pivots[next].second == c) {
            const int r = pivots[next].first;
            if (residual[c] % h(r, c) != 0) return std::nullopt;
            Int q = residual[c] / h(r, c);
            if (q != 0)
                for (int j = c; j < h.cols(); ++j) residual[j] -= q * h(r, j);
            y[r] = q;
            ++next;
        } else if (residual[c] != 0) {
            return std::nullopt;
        }
    }
    return y;
}

}  // namespace detail

/// Membership of x in the integer row span of a Hermite form H.
inline bool lattice_contains(const IntMatrix& h, const std::vector<Int>& x) {
    return detail::echelon_solve(h, x).has_value();
}

/// Integer coefficients over the ORIGINAL rows of the matrix hf was computed
/// from, such that coeffs * M = target; nullopt when target is outside the
/// row lattice.
inline std::optional<std::vector<Int>> express_in_row_lattice(const HermiteForm& hf,
                                                              const std::vector<Int>& target) {
    auto y = detail::echelon_solve(hf.h, target);
    if (!y) return std::nullopt;
    return *y * hf.u;  // y*H = y*U*M
}

}  // namespace designlattice
