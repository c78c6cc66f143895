#include "doctest.h"

#include <optional>
#include <random>

#include "toricoh/lp.hpp"

using namespace toricoh;

namespace {

using C = LinearConstraint;

// Minimum of c.x over a bounded 2-D polygon by checking every pairwise
// intersection of constraint lines (the vertices).
std::optional<mpq_class> brute_min_2d(const QVector& c, const std::vector<C>& cons) {
    std::optional<mpq_class> best;
    auto feasible = [&](const QVector& x) {
        for (const auto& k : cons) {
            const mpq_class v = k.a[0] * x[0] + k.a[1] * x[1];
            if (k.sense == C::Sense::LessEq && v > k.b) return false;
            if (k.sense == C::Sense::GreaterEq && v < k.b) return false;
            if (k.sense == C::Sense::Equal && v != k.b) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < cons.size(); ++i)
        for (std::size_t j = i + 1; j < cons.size(); ++j) {
            const auto& a = cons[i];
            const auto& b = cons[j];
            const mpq_class det = a.a[0] * b.a[1] - a.a[1] * b.a[0];
            if (det == 0) continue;
            const QVector x = {(a.b * b.a[1] - a.a[1] * b.b) / det, (a.a[0] * b.b - a.b * b.a[0]) / det};
            if (!feasible(x)) continue;
            const mpq_class v = c[0] * x[0] + c[1] * x[1];
            if (!best || v < *best) best = v;
        }
    return best;
}

}  // namespace

TEST_SUITE("lp") {

TEST_CASE("textbook problem") {
    // max 3x + 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18, x, y >= 0  -> 36 at (2, 6)
    const std::vector<C> cons = {{{1, 0}, C::Sense::LessEq, 4},  {{0, 2}, C::Sense::LessEq, 12},
                                 {{3, 2}, C::Sense::LessEq, 18}, {{1, 0}, C::Sense::GreaterEq, 0},
                                 {{0, 1}, C::Sense::GreaterEq, 0}};
    const LpResult r = lp_maximize({3, 5}, cons);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 36);
    CHECK(r.x == QVector{2, 6});
}

TEST_CASE("infeasible, unbounded, free variables, equalities") {
    CHECK(lp_minimize({1}, {{{1}, C::Sense::GreaterEq, 2}, {{1}, C::Sense::LessEq, 1}}).status == LpStatus::Infeasible);
    CHECK(lp_minimize({1}, {{{1}, C::Sense::LessEq, 1}}).status == LpStatus::Unbounded);
    // free variable reaching a negative optimum
    const LpResult r = lp_minimize({1, 0}, {{{1, 1}, C::Sense::Equal, -3}, {{0, 1}, C::Sense::LessEq, mpq_class(1, 2)},
                                           {{0, 1}, C::Sense::GreaterEq, -10}});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == mpq_class(-7, 2));
    CHECK(lp_feasible_point(2, {{{1, 1}, C::Sense::Equal, 1}, {{1, -1}, C::Sense::Equal, 0}}).x == QVector{mpq_class(1, 2), mpq_class(1, 2)});
}

TEST_CASE("random bounded polygons agree with vertex enumeration") {
    std::mt19937 rng(51);
    std::uniform_int_distribution<long> coef(-6, 6);
    for (int t = 0; t < 150; ++t) {
        std::vector<C> cons = {{{1, 0}, C::Sense::LessEq, 20},
                               {{1, 0}, C::Sense::GreaterEq, -20},
                               {{0, 1}, C::Sense::LessEq, 20},
                               {{0, 1}, C::Sense::GreaterEq, -20}};
        for (int k = 0; k < 4; ++k) cons.push_back({{coef(rng), coef(rng)}, C::Sense::LessEq, coef(rng) * 2});
        const QVector c = {coef(rng), coef(rng)};
        const LpResult r = lp_minimize(c, cons);
        const auto brute = brute_min_2d(c, cons);
        if (!brute) {
            CHECK(r.status == LpStatus::Infeasible);
        } else {
            REQUIRE(r.status == LpStatus::Optimal);
            CHECK(r.value == *brute);
        }
        CHECK(fm_feasible(to_halfspaces(cons)) == (r.status != LpStatus::Infeasible));
    }
}

TEST_CASE("Fourier-Motzkin projection") {
    // x + y <= 2, -x <= 0, -y <= 0: eliminating y leaves 0 <= x <= 2
    const std::vector<Halfspace> sys = {{{1, 1}, 2}, {{-1, 0}, 0}, {{0, -1}, 0}};
    const auto proj = fm_eliminate(sys, 1);
    for (const auto& h : proj) CHECK(h.a[1] == 0);
    auto holds = [&](mpq_class x) {
        for (const auto& h : proj)
            if (h.a[0] * x > h.b) return false;
        return true;
    };
    CHECK(holds(0));
    CHECK(holds(2));
    CHECK_FALSE(holds(mpq_class(5, 2)));
    CHECK_FALSE(holds(-1));
}

}
