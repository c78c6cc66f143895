#include "toricoh/exact_linalg.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

namespace toricoh {

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, std::size_t cols_if_empty) {
    const std::size_t cols = rows.empty() ? cols_if_empty : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw InvalidInput("ragged matrix rows");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows_if_empty) {
    const std::size_t rows = cols.empty() ? rows_if_empty : cols.front().size();
    IntMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw InvalidInput("ragged matrix columns");
        for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
    }
    return m;
}

IntVector IntMatrix::row(std::size_t r) const {
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const {
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const {
    IntMatrix out(idx.size(), cols_);
    for (std::size_t k = 0; k < idx.size(); ++k)
        for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(idx[k], c);
    return out;
}

std::vector<std::vector<long>> IntMatrix::to_long_rows() const {
    std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) {
            const auto& v = (*this)(r, c);
            if (!v.fits_slong_p()) throw InvalidInput("matrix entry exceeds machine integer range");
            out[r][c] = v.get_si();
        }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw InvalidInput("matrix product shape mismatch");
    IntMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& x) {
    if (a.cols_ != x.size()) throw InvalidInput("matrix-vector shape mismatch");
    IntVector out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * x[k];
    return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
    if (sgn(factor) == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const mpz_class& factor) {
    if (sgn(factor) == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = -(*this)(r, c);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
        os << ']';
    }
    return os << ']';
}

// ---------------------------------------------------------------------------
// Smith normal form

IntVector SnfResult::invariant_factors() const {
    IntVector d;
    for (std::size_t k = 0; k < rank; ++k) d.push_back(S(k, k));
    return d;
}

namespace {

// Smallest |entry| among nonzero entries of the trailing block starting at (t, t);
// ties go to the lowest row, then the lowest column.
bool find_block_pivot(const IntMatrix& s, std::size_t t, std::size_t& pr, std::size_t& pc) {
    bool found = false;
    mpz_class best;
    for (std::size_t r = t; r < s.rows(); ++r)
        for (std::size_t c = t; c < s.cols(); ++c) {
            if (sgn(s(r, c)) == 0) continue;
            mpz_class v = abs(s(r, c));
            if (!found || v < best) {
                best = v;
                pr = r;
                pc = c;
                found = true;
            }
        }
    return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SnfResult res{IntMatrix::identity(m), a, IntMatrix::identity(n), 0};
    IntMatrix& S = res.S;
    IntMatrix& U = res.U;
    IntMatrix& V = res.V;

    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        std::size_t pr = 0;
        std::size_t pc = 0;
        if (!find_block_pivot(S, t, pr, pc)) break;
        S.swap_rows(t, pr);
        U.swap_rows(t, pr);
        S.swap_cols(t, pc);
        V.swap_cols(t, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(S(i, t)) == 0) continue;
                mpz_class q = S(i, t) / S(t, t);
                S.add_row_multiple(i, t, -q);
                U.add_row_multiple(i, t, -q);
                if (sgn(S(i, t)) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(S(t, j)) == 0) continue;
                mpz_class q = S(t, j) / S(t, t);
                S.add_col_multiple(j, t, -q);
                V.add_col_multiple(j, t, -q);
                if (sgn(S(t, j)) != 0) clean = false;
            }
            if (!clean) {
                // A remainder smaller than the pivot survived; move it to (t, t).
                bool found = false;
                mpz_class best;
                std::size_t br = t;
                std::size_t bc = t;
                for (std::size_t i = t + 1; i < m; ++i)
                    if (sgn(S(i, t)) != 0 && (!found || abs(S(i, t)) < best)) {
                        best = abs(S(i, t));
                        br = i;
                        bc = t;
                        found = true;
                    }
                for (std::size_t j = t + 1; j < n; ++j)
                    if (sgn(S(t, j)) != 0 && (!found || abs(S(t, j)) < best)) {
                        best = abs(S(t, j));
                        br = t;
                        bc = j;
                        found = true;
                    }
                S.swap_rows(t, br);
                U.swap_rows(t, br);
                S.swap_cols(t, bc);
                V.swap_cols(t, bc);
                continue;
            }
            // Enforce the divisibility chain.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (sgn(S(i, j)) != 0 && !mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
                        S.add_row_multiple(t, i, 1);
                        U.add_row_multiple(t, i, 1);
                        fixed = true;
                        break;
                    }
            if (!fixed) break;
        }
        if (sgn(S(t, t)) < 0) {
            S.negate_row(t);
            U.negate_row(t);
        }
    }
    res.rank = t;
    return res;
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
    SnfResult snf = smith_normal_form(a);
    std::vector<IntVector> basis;
    for (std::size_t k = snf.rank; k < a.cols(); ++k) basis.push_back(snf.V.column(k));
    return basis;
}

std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
    if (b.size() != a.rows()) throw InvalidInput("solve_integer: right-hand side has wrong length");
    SnfResult snf = smith_normal_form(a);
    IntVector c = snf.U * b;
    IntVector y(a.cols());
    for (std::size_t k = 0; k < a.rows(); ++k) {
        if (k < snf.rank) {
            const mpz_class& s = snf.S(k, k);
            if (!mpz_divisible_p(c[k].get_mpz_t(), s.get_mpz_t())) return std::nullopt;
            y[k] = c[k] / s;
        } else if (sgn(c[k]) != 0) {
            return std::nullopt;
        }
    }
    return snf.V * y;
}

IntMatrix hermite_rows(const IntMatrix& a) {
    IntMatrix h = a;
    const std::size_t m = h.rows();
    std::size_t r = 0;
    for (std::size_t c = 0; c < h.cols() && r < m; ++c) {
        for (;;) {
            std::size_t best = m;
            for (std::size_t i = r; i < m; ++i)
                if (sgn(h(i, c)) != 0 && (best == m || abs(h(i, c)) < abs(h(best, c)))) best = i;
            if (best == m) break;
            h.swap_rows(r, best);
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (sgn(h(i, c)) == 0) continue;
                mpz_class q = h(i, c) / h(r, c);
                h.add_row_multiple(i, r, -q);
                if (sgn(h(i, c)) != 0) clean = false;
            }
            if (clean) break;
        }
        if (sgn(h(r, c)) == 0) continue;
        if (sgn(h(r, c)) < 0) h.negate_row(r);
        for (std::size_t i = 0; i < r; ++i) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), h(i, c).get_mpz_t(), h(r, c).get_mpz_t());
            h.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    std::vector<std::size_t> keep(r);
    std::iota(keep.begin(), keep.end(), 0);
    return h.select_rows(keep);
}

IntMatrix image_basis(const IntMatrix& a) {
    IntMatrix h = hermite_rows(a.transpose());
    IntMatrix out = h.transpose();
    if (h.rows() == 0) return IntMatrix(a.rows(), 0);
    return out;
}

mpz_class determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw InvalidInput("determinant of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    IntMatrix m = a;
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && sgn(m(swap, k)) == 0) ++swap;
            if (swap == n) return 0;
            m.swap_rows(k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m(i, j) = v;
            }
        prev = m(k, k);
    }
    return sign * m(n - 1, n - 1);
}

// ---------------------------------------------------------------------------
// Ranks over a field

namespace {

struct PrimeField {
    using value_type = std::uint64_t;
    std::uint64_t p;

    value_type reduce(const mpz_class& v) const {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
        return r.get_ui();
    }
    value_type reduce(long v) const {
        long r = v % static_cast<long>(p);
        return static_cast<value_type>(r < 0 ? r + static_cast<long>(p) : r);
    }
    bool is_zero(value_type v) const { return v == 0; }
    value_type mul(value_type a, value_type b) const { return a * b % p; }
    value_type sub(value_type a, value_type b) const { return a >= b ? a - b : a + p - b; }
    value_type inverse(value_type a) const {
        value_type result = 1;
        value_type base = a;
        for (std::uint64_t e = p - 2; e != 0; e >>= 1) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
        }
        return result;
    }
};

struct RationalField {
    using value_type = mpq_class;

    value_type reduce(const mpz_class& v) const { return mpq_class(v); }
    value_type reduce(long v) const { return mpq_class(v); }
    bool is_zero(const value_type& v) const { return sgn(v) == 0; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type inverse(const value_type& a) const { return 1 / a; }
};

// Incremental row echelon: each incoming row is reduced against the stored
// pivot rows (one per leading column) until it is zero or opens a new pivot.
template <typename Field>
std::size_t echelon_rank(std::vector<std::vector<std::pair<std::uint32_t, typename Field::value_type>>> rows,
                         std::size_t cols, const Field& field) {
    using V = typename Field::value_type;
    using Row = std::vector<std::pair<std::uint32_t, V>>;
    std::vector<Row> pivots;
    std::vector<std::int64_t> pivot_of(cols, -1);
    Row scratch;
    for (auto& row : rows) {
        while (!row.empty()) {
            const std::uint32_t lead = row.front().first;
            const std::int64_t k = pivot_of[lead];
            if (k < 0) {
                V inv = field.inverse(row.front().second);
                for (auto& [c, v] : row) v = field.mul(v, inv);
                pivot_of[lead] = static_cast<std::int64_t>(pivots.size());
                pivots.push_back(std::move(row));
                break;
            }
            const Row& piv = pivots[static_cast<std::size_t>(k)];
            const V factor = row.front().second;
            scratch.clear();
            std::size_t a = 0;
            std::size_t b = 0;
            while (a < row.size() || b < piv.size()) {
                if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
                    scratch.push_back(std::move(row[a++]));
                } else if (a == row.size() || piv[b].first < row[a].first) {
                    scratch.emplace_back(piv[b].first, field.sub(V(0), field.mul(factor, piv[b].second)));
                    ++b;
                } else {
                    V v = field.sub(row[a].second, field.mul(factor, piv[b].second));
                    if (!field.is_zero(v)) scratch.emplace_back(row[a].first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            row.swap(scratch);
        }
    }
    return pivots.size();
}

// Fraction-free elimination over Z in 64-bit words. Scaling a row by a
// nonzero integer does not change the rank over Q, so the result is exact;
// nullopt means some intermediate overflowed.
std::optional<std::size_t> word_rank(std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows,
                                     std::size_t cols) {
    using Row = std::vector<std::pair<std::uint32_t, std::int64_t>>;
    std::vector<Row> pivots;
    std::vector<std::int64_t> pivot_of(cols, -1);
    Row scratch;
    auto axpy = [](std::int64_t x, std::int64_t a, std::int64_t y, std::int64_t b, std::int64_t& out) {
        std::int64_t u = 0;
        std::int64_t v = 0;
        return !__builtin_mul_overflow(x, a, &u) && !__builtin_mul_overflow(y, b, &v) && !__builtin_sub_overflow(u, v, &out);
    };
    for (auto& row : rows) {
        while (!row.empty()) {
            const std::int64_t k = pivot_of[row.front().first];
            if (k < 0) {
                std::int64_t g = 0;
                for (const auto& e : row) g = std::gcd(g, e.second);
                if (row.front().second < 0) g = -g;
                for (auto& e : row) e.second /= g;
                pivot_of[row.front().first] = static_cast<std::int64_t>(pivots.size());
                pivots.push_back(std::move(row));
                break;
            }
            const Row& piv = pivots[static_cast<std::size_t>(k)];
            const std::int64_t g = std::gcd(row.front().second, piv.front().second);
            const std::int64_t sr = piv.front().second / g;  // scales the row
            const std::int64_t sp = row.front().second / g;  // scales the pivot
            scratch.clear();
            std::size_t a = 0;
            std::size_t b = 0;
            std::int64_t v = 0;
            while (a < row.size() || b < piv.size()) {
                if (b == piv.size() || (a < row.size() && row[a].first < piv[b].first)) {
                    if (!axpy(row[a].second, sr, 0, 0, v)) return std::nullopt;
                    scratch.emplace_back(row[a++].first, v);
                } else if (a == row.size() || piv[b].first < row[a].first) {
                    if (!axpy(0, 0, piv[b].second, sp, v)) return std::nullopt;
                    scratch.emplace_back(piv[b++].first, v);
                } else {
                    if (!axpy(row[a].second, sr, piv[b].second, sp, v)) return std::nullopt;
                    if (v != 0) scratch.emplace_back(row[a].first, v);
                    ++a;
                    ++b;
                }
            }
            std::int64_t content = 0;
            for (const auto& e : scratch) content = std::gcd(content, e.second);
            if (content > 1)
                for (auto& e : scratch) e.second /= content;
            row.swap(scratch);
        }
    }
    return pivots.size();
}

template <typename Field>
std::size_t dense_rank(const IntMatrix& a, const Field& field) {
    using V = typename Field::value_type;
    std::vector<std::vector<std::pair<std::uint32_t, V>>> rows(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c) {
            V v = field.reduce(a(r, c));
            if (!field.is_zero(v)) rows[r].emplace_back(static_cast<std::uint32_t>(c), std::move(v));
        }
    return echelon_rank(std::move(rows), a.cols(), field);
}

template <typename Field>
std::size_t sparse_rank(const SparseMatrix& a, const Field& field) {
    using V = typename Field::value_type;
    std::vector<std::vector<std::pair<std::uint32_t, V>>> rows(a.rows);
    for (std::size_t r = 0; r < a.rows; ++r) {
        rows[r].reserve(a.entries[r].size());
        for (const auto& [c, v] : a.entries[r]) {
            V x = field.reduce(static_cast<long>(v));
            if (!field.is_zero(x)) rows[r].emplace_back(c, std::move(x));
        }
    }
    // Short rows first keeps fill-in down.
    std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    return echelon_rank(std::move(rows), a.cols, field);
}

}  // namespace

std::size_t rank_over_field(const IntMatrix& a, Characteristic ch) {
    if (ch.is_zero()) return dense_rank(a, RationalField{});
    return dense_rank(a, PrimeField{ch.value()});
}

std::size_t rank_over_field(const SparseMatrix& a, Characteristic ch) {
    if (ch.is_zero()) {
        std::vector<std::vector<std::pair<std::uint32_t, std::int64_t>>> rows(a.rows);
        for (std::size_t r = 0; r < a.rows; ++r)
            for (const auto& [c, v] : a.entries[r])
                if (v != 0) rows[r].emplace_back(c, v);
        std::stable_sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
        if (auto r = word_rank(std::move(rows), a.cols)) return *r;
        return sparse_rank(a, RationalField{});
    }
    return sparse_rank(a, PrimeField{ch.value()});
}

// ---------------------------------------------------------------------------
// Minors

namespace {

void for_each_combination(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n) return;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        fn(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

mpz_class submatrix_det(const IntMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    IntMatrix sub(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = a(rows[i], cols[j]);
    return determinant(sub);
}

}  // namespace

MinorStats minor_stats(const IntMatrix& a, std::size_t d) {
    if (rank_over_field(a, Characteristic{}) != d || d > std::min(a.rows(), a.cols()))
        throw InvalidInput("minor_stats: matrix does not have rank " + std::to_string(d));
    MinorStats stats;
    stats.max_abs_minor.assign(d + 1, 0);
    stats.max_abs_minor[0] = 1;
    for (std::size_t j = 1; j <= d; ++j) {
        mpz_class best = 0;
        mpz_class smallest = 0;
        for_each_combination(a.rows(), j, [&](const std::vector<std::size_t>& rows) {
            for_each_combination(a.cols(), j, [&](const std::vector<std::size_t>& cols) {
                mpz_class v = abs(submatrix_det(a, rows, cols));
                if (v > best) best = v;
                if (j == d && sgn(v) != 0 && (sgn(smallest) == 0 || v < smallest)) smallest = v;
            });
        });
        stats.max_abs_minor[j] = best;
        if (j == d) stats.min_nonzero_top = smallest;
    }
    if (d == 0) stats.min_nonzero_top = 1;
    return stats;
}

}  // namespace toricoh
