#include "toricoh/lp.hpp"

#include <algorithm>
#include <set>

#include "toricoh/common.hpp"

namespace toricoh {

namespace {

// Dense tableau: rows hold the constraint equations, last column the rhs.
struct Tableau {
    std::vector<QVector> rows;
    std::vector<std::size_t> basis;
    std::size_t cols = 0;

    void pivot(std::size_t r, std::size_t c) {
        const mpq_class inv = 1 / rows[r][c];
        for (auto& v : rows[r]) v *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || sgn(rows[i][c]) == 0) continue;
            const mpq_class f = rows[i][c];
            for (std::size_t j = 0; j <= cols; ++j)
                if (sgn(rows[r][j]) != 0) rows[i][j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    mpq_class objective(const QVector& cost) const {
        mpq_class v = 0;
        for (std::size_t i = 0; i < rows.size(); ++i) v += cost[basis[i]] * rows[i][cols];
        return v;
    }

    // Bland's rule; returns false if the objective is unbounded below.
    bool optimize(const QVector& cost, const std::vector<bool>& allowed) {
        for (;;) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols && enter == cols; ++j) {
                if (!allowed[j]) continue;
                mpq_class reduced = cost[j];
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (sgn(rows[i][j]) != 0) reduced -= cost[basis[i]] * rows[i][j];
                if (sgn(reduced) < 0) enter = j;
            }
            if (enter == cols) return true;
            std::size_t leave = rows.size();
            mpq_class best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (sgn(rows[i][enter]) <= 0) continue;
                mpq_class ratio = rows[i][cols] / rows[i][enter];
                if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == rows.size()) return false;
            pivot(leave, enter);
        }
    }
};

using Sense = LinearConstraint::Sense;

}  // namespace

LpResult lp_minimize(const QVector& c, const std::vector<LinearConstraint>& constraints) {
    const std::size_t n = c.size();
    for (const auto& con : constraints)
        if (con.a.size() != n) throw InvalidInput("lp: constraint has the wrong number of coefficients");

    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    std::vector<Sense> senses;
    std::vector<bool> flipped;
    for (const auto& con : constraints) {
        Sense s = con.sense;
        const bool flip = sgn(con.b) < 0;
        if (flip && s != Sense::Equal) s = (s == Sense::LessEq) ? Sense::GreaterEq : Sense::LessEq;
        senses.push_back(s);
        flipped.push_back(flip);
        if (s != Sense::Equal) ++slack_count;
        if (s != Sense::LessEq) ++artificial_count;
    }

    Tableau t;
    t.cols = 2 * n + slack_count + artificial_count;
    const std::size_t slack0 = 2 * n;
    const std::size_t art0 = slack0 + slack_count;
    std::size_t next_slack = slack0;
    std::size_t next_art = art0;
    for (std::size_t i = 0; i < constraints.size(); ++i) {
        QVector row(t.cols + 1);
        const mpq_class sign = flipped[i] ? -1 : 1;
        for (std::size_t k = 0; k < n; ++k) {
            row[k] = sign * constraints[i].a[k];
            row[n + k] = -row[k];
        }
        row[t.cols] = sign * constraints[i].b;
        std::size_t basic = 0;
        if (senses[i] == Sense::LessEq) {
            row[next_slack] = 1;
            basic = next_slack++;
        } else {
            if (senses[i] == Sense::GreaterEq) row[next_slack++] = -1;
            row[next_art] = 1;
            basic = next_art++;
        }
        t.rows.push_back(std::move(row));
        t.basis.push_back(basic);
    }

    std::vector<bool> allowed(t.cols, true);
    if (artificial_count > 0) {
        QVector phase1(t.cols, 0);
        for (std::size_t j = art0; j < t.cols; ++j) phase1[j] = 1;
        t.optimize(phase1, allowed);
        if (sgn(t.objective(phase1)) > 0) return LpResult{LpStatus::Infeasible, 0, {}};
        // Pivot remaining artificials out of the basis; drop redundant rows.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < art0) {
                ++i;
                continue;
            }
            std::size_t col = art0;
            for (std::size_t j = 0; j < art0; ++j)
                if (sgn(t.rows[i][j]) != 0) {
                    col = j;
                    break;
                }
            if (col == art0) {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            t.pivot(i, col);
            ++i;
        }
        for (std::size_t j = art0; j < t.cols; ++j) allowed[j] = false;
    }

    QVector cost(t.cols, 0);
    for (std::size_t k = 0; k < n; ++k) {
        cost[k] = c[k];
        cost[n + k] = -c[k];
    }
    if (!t.optimize(cost, allowed)) return LpResult{LpStatus::Unbounded, 0, {}};

    LpResult res;
    res.status = LpStatus::Optimal;
    res.x.assign(n, 0);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const std::size_t b = t.basis[i];
        if (b < n) res.x[b] += t.rows[i][t.cols];
        else if (b < 2 * n) res.x[b - n] -= t.rows[i][t.cols];
    }
    res.value = 0;
    for (std::size_t k = 0; k < n; ++k) res.value += c[k] * res.x[k];
    return res;
}

LpResult lp_maximize(const QVector& c, const std::vector<LinearConstraint>& constraints) {
    QVector neg(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) neg[k] = -c[k];
    LpResult r = lp_minimize(neg, constraints);
    if (r.status == LpStatus::Optimal) r.value = -r.value;
    return r;
}

LpResult lp_feasible_point(std::size_t vars, const std::vector<LinearConstraint>& constraints) {
    return lp_minimize(QVector(vars, 0), constraints);
}

// ---------------------------------------------------------------------------
// Fourier-Motzkin

namespace {

// Scale so the first nonzero coefficient is +-1; makes duplicates comparable.
Halfspace normalized(Halfspace h) {
    for (const auto& v : h.a)
        if (sgn(v) != 0) {
            const mpq_class s = abs(v);
            for (auto& x : h.a) x /= s;
            h.b /= s;
            break;
        }
    return h;
}

bool halfspace_less(const Halfspace& x, const Halfspace& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.b < y.b;
}

}  // namespace

std::vector<Halfspace> fm_eliminate(const std::vector<Halfspace>& system, std::size_t k) {
    std::vector<Halfspace> pos;
    std::vector<Halfspace> neg;
    std::vector<Halfspace> out;
    for (const auto& h : system) {
        const int s = sgn(h.a.at(k));
        if (s > 0) pos.push_back(h);
        else if (s < 0) neg.push_back(h);
        else out.push_back(h);
    }
    for (const auto& p : pos)
        for (const auto& q : neg) {
            // p.a[k] > 0 > q.a[k]: combine to cancel x_k.
            const mpq_class wp = -q.a[k];
            const mpq_class wq = p.a[k];
            Halfspace h;
            h.a.resize(p.a.size());
            for (std::size_t j = 0; j < p.a.size(); ++j) h.a[j] = wp * p.a[j] + wq * q.a[j];
            h.a[k] = 0;
            h.b = wp * p.b + wq * q.b;
            out.push_back(std::move(h));
        }
    for (auto& h : out) h = normalized(std::move(h));
    std::sort(out.begin(), out.end(), halfspace_less);
    // Among parallel halfspaces only the tightest matters.
    std::vector<Halfspace> kept;
    for (auto& h : out) {
        if (!kept.empty() && kept.back().a == h.a) continue;
        kept.push_back(std::move(h));
    }
    return kept;
}

bool fm_feasible(const std::vector<Halfspace>& system) {
    if (system.empty()) return true;
    std::vector<Halfspace> cur = system;
    const std::size_t n = cur.front().a.size();
    for (std::size_t k = 0; k < n; ++k) cur = fm_eliminate(cur, k);
    return std::all_of(cur.begin(), cur.end(), [](const Halfspace& h) { return sgn(h.b) >= 0; });
}

std::vector<Halfspace> to_halfspaces(const std::vector<LinearConstraint>& constraints) {
    std::vector<Halfspace> out;
    for (const auto& c : constraints) {
        QVector neg(c.a.size());
        for (std::size_t k = 0; k < c.a.size(); ++k) neg[k] = -c.a[k];
        if (c.sense != LinearConstraint::Sense::GreaterEq) out.push_back({c.a, c.b});
        if (c.sense != LinearConstraint::Sense::LessEq) out.push_back({neg, -c.b});
    }
    return out;
}

}  // namespace toricoh
