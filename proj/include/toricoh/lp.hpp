#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace toricoh {

using QVector = std::vector<mpq_class>;

/// a . x  (sense)  b
struct LinearConstraint {
    enum class Sense { LessEq, GreaterEq, Equal };
    QVector a;
    Sense sense = Sense::LessEq;
    mpq_class b;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    mpq_class value;
    QVector x;
};

/// Minimizes c . x over free variables x subject to the constraints. Exact
/// two-phase simplex with Bland's rule, so it always terminates.
LpResult lp_minimize(const QVector& c, const std::vector<LinearConstraint>& constraints);

LpResult lp_maximize(const QVector& c, const std::vector<LinearConstraint>& constraints);

/// Some feasible point, or Infeasible.
LpResult lp_feasible_point(std::size_t vars, const std::vector<LinearConstraint>& constraints);

/// a . x <= b, the inequality form used by Fourier-Motzkin elimination.
struct Halfspace {
    QVector a;
    mpq_class b;
};

/// Projects out variable k (the returned halfspaces have a[k] = 0).
std::vector<Halfspace> fm_eliminate(const std::vector<Halfspace>& system, std::size_t k);

/// Feasibility of a . x <= b by eliminating every variable.
bool fm_feasible(const std::vector<Halfspace>& system);

/// Rewrites constraints as a list of a . x <= b halfspaces.
std::vector<Halfspace> to_halfspaces(const std::vector<LinearConstraint>& constraints);

}  // namespace toricoh
