#include "toricoh/cones.hpp"

#include <algorithm>
#include <cstdlib>

namespace toricoh {

using Sense = LinearConstraint::Sense;

// ---------------------------------------------------------------------------
// Regions

OrthantRegion OrthantRegion::closed_orthant(IndexSet I, std::size_t n) {
    OrthantRegion r{std::vector<std::optional<long>>(n), std::vector<std::optional<long>>(n)};
    for (std::size_t i = 0; i < n; ++i) {
        if (I.contains(i)) r.upper[i] = 0;
        else r.lower[i] = 0;
    }
    return r;
}

OrthantRegion OrthantRegion::strict_orthant(IndexSet I, std::size_t n) {
    OrthantRegion r = closed_orthant(I, n);
    for (auto i : I.elements()) r.upper[i] = -1;
    return r;
}

OrthantRegion OrthantRegion::shifted_orthant(IndexSet I, std::size_t n, std::size_t j, long ell) {
    OrthantRegion r = strict_orthant(I, n);
    if (r.upper[j]) *r.upper[j] -= ell;
    else if (r.lower[j]) *r.lower[j] -= ell;
    return r;
}

OrthantRegion OrthantRegion::floored(long ell) const {
    OrthantRegion r = *this;
    for (auto& lo : r.lower) lo = lo ? std::max(*lo, -ell) : -ell;
    return r;
}

bool OrthantRegion::contains(const FineDegree& x) const {
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (lower[i] && x[i] < *lower[i]) return false;
        if (upper[i] && x[i] > *upper[i]) return false;
    }
    return true;
}

namespace {

long floor_q(const mpq_class& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!r.fits_slong_p()) throw UnboundedRegion("lattice point search left the machine integer range");
    return r.get_si();
}

long ceil_q(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    if (!r.fits_slong_p()) throw UnboundedRegion("lattice point search left the machine integer range");
    return r.get_si();
}

// Points x = base + M t, searched one t-coordinate at a time. The range of
// t_k given a fixed prefix t_0..t_{k-1} comes from two exact LPs over the
// remaining coordinates.
class LatticeSearch {
public:
    LatticeSearch(const Grading& g, const FineDegree& base, const OrthantRegion& region)
        : n_(g.n()), m_(g.lattice_rank()), base_(base), region_(region) {
        if (base.size() != n_ || region.size() != n_) throw InvalidInput("lattice search: dimension mismatch");
        const IntMatrix& M = g.lattice();
        basis_.assign(n_, QVector(m_));
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < m_; ++k) basis_[i][k] = M(i, k);
    }

    std::size_t rank() const { return m_; }

    // Constraints on t_k..t_{m-1}; nullopt if a constraint with no free
    // variables already fails.
    std::optional<std::vector<LinearConstraint>> constraints(const std::vector<long>& prefix) const {
        const std::size_t k = prefix.size();
        std::vector<LinearConstraint> out;
        for (std::size_t i = 0; i < n_; ++i) {
            mpq_class fixed = base_[i];
            for (std::size_t l = 0; l < k; ++l) fixed += basis_[i][l] * prefix[l];
            QVector a(basis_[i].begin() + static_cast<std::ptrdiff_t>(k), basis_[i].end());
            const bool zero = std::all_of(a.begin(), a.end(), [](const mpq_class& v) { return sgn(v) == 0; });
            if (region_.lower[i]) {
                const mpq_class rhs = *region_.lower[i] - fixed;
                if (zero) {
                    if (sgn(rhs) > 0) return std::nullopt;
                } else {
                    out.push_back({a, Sense::GreaterEq, rhs});
                }
            }
            if (region_.upper[i]) {
                const mpq_class rhs = *region_.upper[i] - fixed;
                if (zero) {
                    if (sgn(rhs) < 0) return std::nullopt;
                } else {
                    out.push_back({a, Sense::LessEq, rhs});
                }
            }
        }
        return out;
    }

    // Integer range of t_k for the given prefix; nullopt if empty.
    std::optional<std::pair<long, long>> range(const std::vector<long>& prefix) const {
        auto cons = constraints(prefix);
        if (!cons) return std::nullopt;
        const std::size_t vars = m_ - prefix.size();
        mpq_class lo;
        mpq_class hi;
        if (vars == 1) {
            bool has_lo = false;
            bool has_hi = false;
            for (const auto& c : *cons) {
                const mpq_class bound = c.b / c.a[0];
                const bool gives_upper = (c.sense == Sense::LessEq) == (sgn(c.a[0]) > 0);
                if (gives_upper) {
                    if (!has_hi || bound < hi) hi = bound;
                    has_hi = true;
                } else {
                    if (!has_lo || bound > lo) lo = bound;
                    has_lo = true;
                }
            }
            if (!has_lo || !has_hi) throw UnboundedRegion("lattice point region is unbounded");
            if (lo > hi) return std::nullopt;
        } else {
            QVector c(vars, 0);
            c[0] = 1;
            LpResult low = lp_minimize(c, *cons);
            if (low.status == LpStatus::Infeasible) return std::nullopt;
            LpResult high = lp_maximize(c, *cons);
            if (low.status == LpStatus::Unbounded || high.status == LpStatus::Unbounded)
                throw UnboundedRegion("lattice point region is unbounded");
            lo = low.value;
            hi = high.value;
        }
        const long a = ceil_q(lo);
        const long b = floor_q(hi);
        if (a > b) return std::nullopt;
        return std::make_pair(a, b);
    }

    FineDegree point(const std::vector<long>& t) const {
        FineDegree x = base_;
        for (std::size_t i = 0; i < n_; ++i) {
            mpq_class v = base_[i];
            for (std::size_t k = 0; k < m_; ++k) v += basis_[i][k] * t[k];
            x[i] = v.get_num().get_si();
        }
        return x;
    }

    // LP lower bound for x_j given the prefix; nullopt if infeasible.
    std::optional<mpq_class> coordinate_lower_bound(const std::vector<long>& prefix, std::size_t j) const {
        auto cons = constraints(prefix);
        if (!cons) return std::nullopt;
        const std::size_t k = prefix.size();
        mpq_class fixed = base_[j];
        for (std::size_t l = 0; l < k; ++l) fixed += basis_[j][l] * prefix[l];
        if (k == m_) return fixed;
        QVector c(basis_[j].begin() + static_cast<std::ptrdiff_t>(k), basis_[j].end());
        LpResult r = lp_minimize(c, *cons);
        if (r.status == LpStatus::Infeasible) return std::nullopt;
        if (r.status == LpStatus::Unbounded) throw UnboundedRegion("lattice point region is unbounded");
        return fixed + r.value;
    }

    void walk(std::vector<long>& prefix, const std::function<void(const FineDegree&)>& visit) const {
        if (prefix.size() == m_) {
            FineDegree x = point(prefix);
            if (region_.contains(x)) visit(x);
            return;
        }
        auto r = range(prefix);
        if (!r) return;
        for (long v = r->first; v <= r->second; ++v) {
            prefix.push_back(v);
            walk(prefix, visit);
            prefix.pop_back();
        }
    }

    void minimize(std::vector<long>& prefix, std::size_t j, std::optional<long>& best) const {
        auto lb = coordinate_lower_bound(prefix, j);
        if (!lb) return;
        if (best && ceil_q(*lb) >= *best) return;
        if (prefix.size() == m_) {
            FineDegree x = point(prefix);
            if (region_.contains(x) && (!best || x[j] < *best)) best = x[j];
            return;
        }
        auto r = range(prefix);
        if (!r) return;
        for (long v = r->first; v <= r->second; ++v) {
            prefix.push_back(v);
            minimize(prefix, j, best);
            prefix.pop_back();
        }
    }

private:
    std::size_t n_;
    std::size_t m_;
    FineDegree base_;
    OrthantRegion region_;
    std::vector<QVector> basis_;
};

std::vector<long> integerize(const QVector& q) {
    mpz_class den = 1;
    for (const auto& v : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> z;
    mpz_class g = 0;
    for (const auto& v : q) {
        mpz_class x = v.get_num() * (den / v.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        z.push_back(x);
    }
    std::vector<long> out;
    for (auto& x : z) {
        if (sgn(g) != 0) x /= g;
        if (!x.fits_slong_p()) throw Error("certificate exceeds machine integer range");
        out.push_back(x.get_si());
    }
    return out;
}

}  // namespace

void for_each_point(const Grading& g, const FineDegree& base, const OrthantRegion& region,
                    const std::function<void(const FineDegree&)>& visit) {
    LatticeSearch search(g, base, region);
    std::vector<long> prefix;
    search.walk(prefix, visit);
}

std::vector<FineDegree> enumerate_points(const Grading& g, const FineDegree& base, const OrthantRegion& region) {
    std::vector<FineDegree> out;
    for_each_point(g, base, region, [&](const FineDegree& x) { out.push_back(x); });
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t count_points(const Grading& g, const FineDegree& base, const OrthantRegion& region) {
    std::size_t count = 0;
    for_each_point(g, base, region, [&](const FineDegree&) { ++count; });
    return count;
}

std::optional<long> min_coordinate(const Grading& g, const FineDegree& base, const OrthantRegion& region, std::size_t j) {
    LatticeSearch search(g, base, region);
    std::optional<long> best;
    std::vector<long> prefix;
    search.minimize(prefix, j, best);
    return best;
}

std::vector<FineDegree> enumerate_fiber_orthant(const Grading& g, const CoarseDegree& delta, IndexSet I) {
    auto p = g.fiber_representative(delta);
    if (!p) throw InvalidInput("degree is not in the grading group");
    return enumerate_points(g, *p, OrthantRegion::strict_orthant(I, g.n()));
}

FinitenessResult finiteness_check(const Grading& g, IndexSet I) {
    const std::size_t n = g.n();
    const std::size_t m = g.lattice_rank();
    if (m == 0) return {};
    const IntMatrix& M = g.lattice();
    std::vector<LinearConstraint> cons;
    QVector total(m, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int sigma = I.contains(i) ? -1 : 1;
        QVector a(m);
        for (std::size_t k = 0; k < m; ++k) {
            a[k] = sigma * mpq_class(M(i, k));
            total[k] += a[k];
        }
        cons.push_back({a, Sense::GreaterEq, 0});
    }
    cons.push_back({total, Sense::GreaterEq, 1});
    LpResult r = lp_feasible_point(m, cons);
    if (r.status != LpStatus::Optimal) return {};
    const auto t = integerize(r.x);
    FineDegree x(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_class v = 0;
        for (std::size_t k = 0; k < m; ++k) v += M(i, k) * t[k];
        x[i] = v.get_si();
    }
    return {false, x};
}

std::optional<std::vector<long>> separating_hyperplane(const IntMatrix& rays, IndexSet I) {
    const std::size_t n = rays.rows();
    const std::size_t d = rays.cols();
    std::vector<LinearConstraint> cons;
    QVector total(d, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const int sigma = I.contains(i) ? 1 : -1;
        QVector a(d);
        for (std::size_t k = 0; k < d; ++k) {
            a[k] = sigma * mpq_class(rays(i, k));
            total[k] += a[k];
        }
        cons.push_back({a, Sense::GreaterEq, 0});
    }
    cons.push_back({total, Sense::GreaterEq, 1});
    LpResult r = lp_feasible_point(d, cons);
    if (r.status != LpStatus::Optimal) return std::nullopt;
    return integerize(r.x);
}

std::optional<QVector> pointedness_witness(const Grading& g, IndexSet I) {
    const std::size_t r = g.free_rank();
    std::vector<LinearConstraint> cons;
    for (std::size_t i = 0; i < g.n(); ++i) {
        const int sigma = I.contains(i) ? -1 : 1;
        QVector a(r);
        bool zero = true;
        for (std::size_t k = 0; k < r; ++k) {
            a[k] = sigma * mpq_class(g.phi_free()(k, i));
            if (sgn(a[k]) != 0) zero = false;
        }
        if (!zero) cons.push_back({a, Sense::GreaterEq, 1});
    }
    LpResult res = lp_feasible_point(r, cons);
    if (res.status != LpStatus::Optimal) return std::nullopt;
    return res.x;
}

long f_bound(const Grading& g, IndexSet I, std::size_t j, const CoarseDegree& delta) {
    if (!I.contains(j)) throw InvalidInput("f_bound: coordinate j must lie in I");
    auto p = g.fiber_representative(delta);
    if (!p) throw InvalidInput("degree is not in the grading group");
    auto lowest = min_coordinate(g, *p, OrthantRegion::strict_orthant(I, g.n()), j);
    if (!lowest) return 0;
    return std::max(0L, -*lowest);
}

std::vector<QVector> image_cone_facets(const Grading& g, IndexSet I) {
    if (!g.saturated()) throw InvalidInput("facet description needs a torsion-free grading group");
    const std::size_t r = g.free_rank();
    const std::size_t n = g.n();
    // Variables (y, lambda): y = sum_i lambda_i g_i with lambda >= 0.
    std::vector<Halfspace> sys;
    for (std::size_t i = 0; i < n; ++i) {
        QVector a(r + n, 0);
        a[r + i] = -1;
        sys.push_back({a, 0});
    }
    for (std::size_t k = 0; k < r; ++k) {
        QVector a(r + n, 0);
        a[k] = 1;
        for (std::size_t i = 0; i < n; ++i) a[r + i] = -(I.contains(i) ? -1 : 1) * mpq_class(g.phi_free()(k, i));
        QVector neg(a.size());
        for (std::size_t c = 0; c < a.size(); ++c) neg[c] = -a[c];
        sys.push_back({a, 0});
        sys.push_back({neg, 0});
    }
    for (std::size_t i = 0; i < n; ++i) sys = fm_eliminate(sys, r + i);
    std::vector<QVector> facets;
    for (const auto& h : sys) {
        QVector a(h.a.begin(), h.a.begin() + static_cast<std::ptrdiff_t>(r));
        if (std::all_of(a.begin(), a.end(), [](const mpq_class& v) { return sgn(v) == 0; })) continue;
        facets.push_back(std::move(a));
    }
    return facets;
}

long f_bound_facets(const Grading& g, const std::vector<QVector>& facets, IndexSet I, std::size_t j,
                    const CoarseDegree& delta) {
    if (!I.contains(j)) throw InvalidInput("f_bound_facets: coordinate j must lie in I");
    const std::size_t r = g.free_rank();
    // y0 = delta - phi(p_I) = delta + sum_{i in I} phi(e_i); moving by -m e_j adds m phi(e_j).
    QVector y0(r);
    QVector step(r);
    for (std::size_t k = 0; k < r; ++k) {
        y0[k] = delta.free.at(k);
        for (auto i : I.elements()) y0[k] += g.phi_free()(k, i);
        step[k] = g.phi_free()(k, j);
    }
    std::optional<long> first_outside;
    for (const auto& h : facets) {
        mpq_class c = 0;
        mpq_class s = 0;
        for (std::size_t k = 0; k < r; ++k) {
            c += h[k] * y0[k];
            s += h[k] * step[k];
        }
        if (sgn(c) > 0) return 0;
        if (sgn(s) > 0) {
            const long m = floor_q(-c / s) + 1;
            if (!first_outside || m < *first_outside) first_outside = m;
        }
    }
    if (!first_outside) throw UnboundedRegion("image cone contains the whole ray; finiteness fails");
    return *first_outside;
}

long crude_bound(const Grading& g, const FineDegree& p) {
    const IntMatrix& rho = g.rho() ? *g.rho() : g.lattice();
    const std::size_t d = rho.cols();
    if (d == 0) return 0;
    const MinorStats stats = minor_stats(rho, d);
    long biggest = 0;
    for (long v : p) biggest = std::max(biggest, std::labs(v));
    mpz_class num = mpz_class(static_cast<unsigned long>(d * d)) * biggest * stats.max_abs_minor[1] * stats.max_abs_minor[d - 1];
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), stats.min_nonzero_top.get_mpz_t());
    if (!q.fits_slong_p()) throw Error("crude bound exceeds machine integer range");
    return q.get_si();
}

}  // namespace toricoh
