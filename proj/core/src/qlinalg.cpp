#include "cellres/qlinalg.hpp"

#include <algorithm>

namespace cellres {

namespace {

std::size_t rank_rational(std::vector<std::vector<Rational>> m) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

int64_t inv_mod(int64_t a, int64_t p) {
    int64_t r = 1, b = a % p, e = p - 2;
    if (b < 0) b += p;
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % p;
        b = (__int128)b * b % p;
        e >>= 1;
    }
    return r;
}

std::size_t rank_mod_p(std::vector<std::vector<int64_t>> m, int64_t p) {
    if (m.empty()) return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        int64_t inv = inv_mod(m[rank][c], p);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            int64_t f = (__int128)m[r][c] * inv % p;
            for (std::size_t k = c; k < cols; ++k) {
                m[r][k] = (m[r][k] - (__int128)f * m[rank][k]) % p;
                if (m[r][k] < 0) m[r][k] += p;
            }
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::size_t QMatrix::rank(const FieldSpec& field) const {
    if (rows_ == 0 || cols_ == 0) return 0;
    if (field.is_rationals()) {
        std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) m[r][c] = at(r, c);
        return rank_rational(std::move(m));
    }
    std::vector<std::vector<int64_t>> m(rows_, std::vector<int64_t>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) m[r][c] = reduce_mod_p(at(r, c), field.p);
    return rank_mod_p(std::move(m), field.p);
}

std::optional<std::vector<Rational>> solve_min_support(
    const std::vector<std::map<std::size_t, Rational>>& rows,
    const std::vector<Rational>& rhs, std::size_t nvars, const FieldSpec& field) {
    std::size_t nrows = rows.size();
    if (rhs.size() != nrows) throw std::invalid_argument("rhs size mismatch");

    if (!field.is_rationals()) {
        // Reduce the whole system mod p and solve there.
        std::vector<std::map<std::size_t, Rational>> red(nrows);
        std::vector<Rational> rred(nrows);
        for (std::size_t r = 0; r < nrows; ++r) {
            for (const auto& [c, v] : rows[r]) {
                int64_t rv = reduce_mod_p(v, field.p);
                if (rv != 0) red[r][c] = rational_of(rv);
            }
            rred[r] = rational_of(reduce_mod_p(rhs[r], field.p));
        }
        // Rational elimination on reduced integer data stays exact; reduce
        // the final representatives.
        auto sol = solve_min_support(red, rred, nvars, FieldSpec::rationals());
        if (!sol) return std::nullopt;
        for (auto& v : *sol) v = rational_of(reduce_mod_p(v, field.p));
        return sol;
    }

    std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(nvars + 1, Rational(0)));
    for (std::size_t r = 0; r < nrows; ++r) {
        for (const auto& [c, v] : rows[r]) {
            if (c >= nvars) throw std::invalid_argument("variable index out of range");
            m[r][c] = v;
        }
        m[r][nvars] = rhs[r];
    }

    std::vector<int> pivot_col_of_row(nrows, -1);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < nvars && rank < nrows; ++c) {
        std::size_t pivot = rank;
        while (pivot < nrows && m[pivot][c] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[rank], m[pivot]);
        Rational inv = 1 / m[rank][c];
        for (std::size_t k = c; k <= nvars; ++k) m[rank][k] *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            Rational f = m[r][c];
            for (std::size_t k = c; k <= nvars; ++k) m[r][k] -= f * m[rank][k];
        }
        pivot_col_of_row[rank] = static_cast<int>(c);
        ++rank;
    }
    for (std::size_t r = rank; r < nrows; ++r)
        if (m[r][nvars] != 0) return std::nullopt;

    std::vector<Rational> sol(nvars, Rational(0));
    for (std::size_t r = 0; r < rank; ++r)
        sol[static_cast<std::size_t>(pivot_col_of_row[r])] = m[r][nvars];
    return sol;
}

}  // namespace cellres
