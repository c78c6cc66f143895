#include "doctest.h"

#include <random>

#include "support.hpp"
#include "toricoh/grading.hpp"

using namespace toricoh;

namespace {

// Every column of the lattice basis maps to 0, and the lattice has rank n - r.
void check_exact(const Grading& g) {
    for (std::size_t c = 0; c < g.lattice().cols(); ++c) {
        FineDegree m;
        for (const auto& x : g.lattice().column(c)) m.push_back(x.get_si());
        const CoarseDegree d = g.degree(m);
        for (long x : d.free) CHECK(x == 0);
        for (long x : d.torsion) CHECK(x == 0);
    }
    CHECK(g.lattice_rank() + g.free_rank() == g.n());
}

}  // namespace

TEST_SUITE("grading") {

TEST_CASE("projective plane from rays") {
    const Grading g = Grading::from_rho(IntMatrix::from_rows({{1, 0}, {0, 1}, {-1, -1}}));
    CHECK(g.free_rank() == 1);
    CHECK(g.torsion().empty());
    CHECK(g.saturated());
    const auto phi = g.phi_free().to_long_rows();
    CHECK(std::abs(phi[0][0]) == 1);
    CHECK(phi[0][0] == phi[0][1]);
    CHECK(phi[0][1] == phi[0][2]);
    check_exact(g);
}

TEST_CASE("torsion in the class group") {
    // coker of (2,2)^T is Z + Z/2
    const Grading g = Grading::from_rho(IntMatrix::from_rows({{2}, {2}}));
    CHECK(g.free_rank() == 1);
    CHECK(g.torsion() == std::vector<long>{2});
    CHECK_FALSE(g.saturated());
    CHECK(g.degree({2, 2}) == CoarseDegree{{0}, {0}});
    CHECK(g.degree({1, 1}).torsion == std::vector<long>{1});
    check_exact(g);
    // weighted projective line P(1,2): rays 2 and -1 on Z
    const Grading w = Grading::from_rho(IntMatrix::from_rows({{2}, {-1}}));
    CHECK(w.free_rank() == 1);
    CHECK(w.torsion().empty());
    const auto phi = w.phi_free().to_long_rows();
    CHECK(std::abs(phi[0][0]) == 1);
    CHECK(std::abs(phi[0][1]) == 2);
}

TEST_CASE("fiber representative round trip") {
    std::mt19937 rng(41);
    const std::vector<oracle::Mat> rhos = {{{1, 0}, {0, 1}, {-1, 2}, {0, -1}},
                                           {{2, 0}, {0, 3}, {-1, -1}},
                                           {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}, {1, 1, 0}}};
    for (const auto& rho : rhos) {
        const Grading g = Grading::from_rho(IntMatrix::from_rows(rho));
        check_exact(g);
        for (int t = 0; t < 50; ++t) {
            FineDegree p(g.n());
            for (auto& x : p) x = static_cast<long>(rng() % 21) - 10;
            const CoarseDegree d = g.degree(p);
            CHECK(g.is_valid(d));
            const auto rep = g.fiber_representative(d);
            REQUIRE(rep.has_value());
            CHECK(g.degree(*rep) == d);
            // p - rep lies in M = span(rho)
            IntVector diff;
            for (std::size_t i = 0; i < p.size(); ++i) diff.push_back(p[i] - (*rep)[i]);
            CHECK(solve_integer(IntMatrix::from_rows(rho), diff).has_value());
        }
    }
}

TEST_CASE("user coordinates") {
    // scroll coordinates (a, b) with p = (b, a, 0, 0)
    for (long e : {0L, 1L, 2L}) {
        const IntMatrix rho = IntMatrix::from_rows({{1, 0}, {0, 1}, {-1, e}, {0, -1}});
        const Grading g = Grading::from_phi(IntMatrix::from_rows({{0, 1, 0, 1}, {1, 0, 1, e}}), IntMatrix(0, 4), {}, rho);
        CHECK(g.degree({5, 3, 0, 0}) == CoarseDegree{{3, 5}, {}});
        check_exact(g);
    }
    // phi not onto
    CHECK_THROWS_AS(Grading::from_phi(IntMatrix::from_rows({{2, 2, 2}}), IntMatrix(0, 3), {}), InvalidInput);
    // kernel differs from rho
    CHECK_THROWS_AS(Grading::from_phi(IntMatrix::from_rows({{1, 1, 1}}), IntMatrix(0, 3), {},
                                      IntMatrix::from_rows({{1, 0}, {0, 1}, {1, 1}})),
                    InvalidInput);
    // torsion rows read modulo their orders
    const Grading t = Grading::from_phi(IntMatrix::from_rows({{1, 1}}), IntMatrix::from_rows({{3, 0}}), {2});
    CHECK(t.degree({1, 0}) == CoarseDegree{{1}, {1}});
    CHECK(t.degree({0, 1}) == CoarseDegree{{1}, {0}});
    CHECK(t.degree({1, -1}) == CoarseDegree{{0}, {1}});
    CHECK(t.degree({2, -2}) == CoarseDegree{{0}, {0}});
    check_exact(t);
}

TEST_CASE("degree parsing and validation") {
    const Grading g = Grading::from_rho(IntMatrix::from_rows({{2}, {2}}));
    CHECK(g.make_degree({3, 1}) == CoarseDegree{{3}, {1}});
    CHECK(g.make_degree({3, 5}) == CoarseDegree{{3}, {1}});
    CHECK_THROWS_AS(g.make_degree({3}), InvalidInput);
    CHECK_FALSE(g.is_valid(CoarseDegree{{3}, {2}}));
    CHECK(g.normalize(CoarseDegree{{3}, {-1}}) == CoarseDegree{{3}, {1}});
    CHECK_THROWS_AS(Grading::from_rho(IntMatrix::from_rows({{1, 1}, {2, 2}})), InvalidInput);
}

}
