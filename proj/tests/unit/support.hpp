// Independent oracles shared by the unit and acceptance tests. Nothing here
// calls into the library's linear algebra or complexes.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Vec = std::vector<long>;
using Mat = std::vector<std::vector<long>>;

// Dense Gaussian elimination over Q.
inline std::size_t rank_q(const Mat& m) {
    if (m.empty()) return 0;
    std::vector<std::vector<mpq_class>> a;
    for (const auto& r : m) a.emplace_back(r.begin(), r.end());
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const mpq_class f = a[r][c] / a[rank][c];
            for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Gaussian elimination over F_p.
inline std::size_t rank_mod(const Mat& m, long p) {
    if (m.empty()) return 0;
    Mat a = m;
    for (auto& r : a)
        for (auto& x : r) x = ((x % p) + p) % p;
    const std::size_t rows = a.size();
    const std::size_t cols = a[0].size();
    auto inv = [p](long x) {
        long r = 1, b = x, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rank;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        const long iv = inv(a[rank][c]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const long f = a[r][c] * iv % p;
            for (std::size_t k = c; k < cols; ++k) a[r][k] = ((a[r][k] - f * a[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

inline std::size_t rank_char(const Mat& m, long ch) { return ch == 0 ? rank_q(m) : rank_mod(m, ch); }

// Cohomology of the cochain complex with basis a family of subsets of
// {0..r-1} (bitmasks), degree = popcount, differential J -> J + {j} with
// sign (-1)^{#{x in J : x < j}}. Entry k is H^k.
inline std::vector<std::size_t> subset_complex_cohomology(unsigned r, const std::vector<std::uint32_t>& family, long ch = 0) {
    std::vector<std::vector<std::uint32_t>> by(r + 1);
    for (auto J : family) by[static_cast<unsigned>(__builtin_popcount(J))].push_back(J);
    std::vector<std::size_t> rk(r + 2, 0);  // rk[k] = rank of d^k : C^k -> C^{k+1}
    for (unsigned k = 0; k < r; ++k) {
        if (by[k].empty() || by[k + 1].empty()) continue;
        Mat m(by[k + 1].size(), Vec(by[k].size(), 0));
        for (std::size_t a = 0; a < by[k + 1].size(); ++a)
            for (std::size_t b = 0; b < by[k].size(); ++b) {
                const std::uint32_t big = by[k + 1][a], small = by[k][b];
                if ((big & small) != small) continue;
                const std::uint32_t j = big ^ small;
                const int below = __builtin_popcount(small & (j - 1));
                m[a][b] = below % 2 ? -1 : 1;
            }
        rk[k] = rank_char(m, ch);
    }
    std::vector<std::size_t> h(r + 1);
    for (unsigned k = 0; k <= r; ++k) h[k] = by[k].size() - rk[k] - (k == 0 ? 0 : rk[k - 1]);
    return h;
}

// Degree-p strand of the Cech complex of S (or S/J) on the generators of B.
// The summand for a subset T of generators is k exactly when x^p survives in
// (S/J)[1/m_T].
inline std::vector<std::size_t> cech_strand(const Mat& b_gens, const Vec& p, const Mat& j_gens = {}, long ch = 0) {
    const unsigned r = static_cast<unsigned>(b_gens.size());
    const std::size_t n = p.size();
    std::vector<std::uint32_t> family;
    for (std::uint32_t T = 0; T < (1u << r); ++T) {
        std::vector<bool> inverted(n, false);
        for (unsigned t = 0; t < r; ++t)
            if (T >> t & 1)
                for (std::size_t i = 0; i < n; ++i)
                    if (b_gens[t][i] > 0) inverted[i] = true;
        bool ok = true;
        for (std::size_t i = 0; i < n; ++i)
            if (p[i] < 0 && !inverted[i]) ok = false;
        for (const auto& g : j_gens) {
            bool divides = true;
            for (std::size_t i = 0; i < n; ++i)
                if (!inverted[i] && p[i] < g[i]) divides = false;
            if (divides) ok = false;
        }
        if (ok) family.push_back(T);
    }
    return subset_complex_cohomology(r, family, ch);
}

// Degree-p strand of Hom(Taylor resolution of S/B^[ell], S/J): entry i is
// dim Ext^i(S/B^[ell], S/J)_p.
inline std::vector<std::size_t> taylor_ext_strand(const Mat& b_gens, long ell, const Vec& p, const Mat& j_gens = {},
                                                  long ch = 0) {
    const unsigned r = static_cast<unsigned>(b_gens.size());
    const std::size_t n = p.size();
    std::vector<std::uint32_t> family;
    for (std::uint32_t T = 0; T < (1u << r); ++T) {
        Vec q = p;
        for (std::size_t i = 0; i < n; ++i) {
            long m = 0;
            for (unsigned t = 0; t < r; ++t)
                if (T >> t & 1) m = std::max(m, ell * b_gens[t][i]);
            q[i] += m;
        }
        bool ok = std::all_of(q.begin(), q.end(), [](long x) { return x >= 0; });
        for (const auto& g : j_gens) {
            bool in = true;
            for (std::size_t i = 0; i < n; ++i)
                if (q[i] < g[i]) in = false;
            if (in) ok = false;
        }
        if (ok) family.push_back(T);
    }
    return subset_complex_cohomology(r, family, ch);
}

// Fine degrees p0 + (<m, v_i>)_i for m in the box [-K, K]^d.
inline void for_fiber(const Mat& rays, const Vec& p0, long K, const std::function<void(const Vec&)>& visit) {
    const std::size_t d = rays.empty() ? 0 : rays[0].size();
    Vec m(d, -K);
    for (;;) {
        Vec p = p0;
        for (std::size_t i = 0; i < rays.size(); ++i)
            for (std::size_t k = 0; k < d; ++k) p[i] += m[k] * rays[i][k];
        visit(p);
        std::size_t k = 0;
        while (k < d && m[k] == K) m[k++] = -K;
        if (k == d) return;
        ++m[k];
    }
}

inline std::size_t binom(long n, long k) {
    if (k < 0 || n < k) return 0;
    std::size_t r = 1;
    for (long i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
    return r;
}

// Square-free generators as 0/1 rows.
inline Mat random_squarefree(std::mt19937& rng, std::size_t n, std::size_t max_gens) {
    std::uniform_int_distribution<std::size_t> count(1, max_gens);
    std::uniform_int_distribution<std::uint32_t> mask(1, (1u << n) - 1);
    Mat gens;
    const std::size_t k = count(rng);
    for (std::size_t t = 0; t < k; ++t) {
        const std::uint32_t s = mask(rng);
        Vec g(n, 0);
        for (std::size_t i = 0; i < n; ++i) g[i] = s >> i & 1;
        gens.push_back(g);
    }
    return gens;
}

// Standard fans used across the tests: rays and 1-based maximal cones.
struct FanFixture {
    const char* name;
    long dim;
    Mat rays;
    Mat cones;
    Mat phi;  // empty: let the library choose coordinates
};

inline FanFixture p2() { return {"P2", 2, {{1, 0}, {0, 1}, {-1, -1}}, {{1, 2}, {2, 3}, {1, 3}}, {{1, 1, 1}}}; }
inline FanFixture scroll(long e) {
    return {"scroll", 2, {{1, 0}, {0, 1}, {-1, e}, {0, -1}}, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, {{0, 1, 0, 1}, {1, 0, 1, e}}};
}
inline FanFixture p1xp1() { return {"P1xP1", 2, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}}, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}, {{1, 1, 0, 0}, {0, 0, 1, 1}}}; }
inline FanFixture noncomplete() { return {"noncomplete", 2, {{1, 0}, {0, 1}, {-1, 0}}, {{1, 2}, {2, 3}}, {}}; }
inline FanFixture surface5() {
    return {"surface5", 2, {{0, 1}, {1, 0}, {-1, 0}, {1, -1}, {1, 1}}, {{2, 5}, {1, 5}, {1, 3}, {3, 4}, {2, 4}}, {}};
}

// Irrelevant ideal generators: complements of the maximal cones.
inline Mat irrelevant(const FanFixture& f) {
    Mat gens;
    for (const auto& c : f.cones) {
        Vec g(f.rays.size(), 1);
        for (long i : c) g[static_cast<std::size_t>(i - 1)] = 0;
        gens.push_back(g);
    }
    return gens;
}

}  // namespace oracle
