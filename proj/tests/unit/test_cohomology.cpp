#include "doctest.h"

#include "fixtures.hpp"
#include "toricoh/cohomology.hpp"

using namespace toricoh;

namespace {

struct Oracle {
    oracle::FanFixture fan;
    oracle::Mat b;
    long K = 25;

    // dim H^i_B(S/J)_delta summed over the fiber
    std::vector<std::size_t> local(const FineDegree& p0, const oracle::Mat& j = {}) const {
        std::vector<std::size_t> total(b.size() + 1, 0);
        oracle::for_fiber(fan.rays, p0, K, [&](const oracle::Vec& p) {
            const auto h = oracle::cech_strand(b, p, j);
            for (std::size_t i = 0; i < h.size(); ++i) total[i] += h[i];
        });
        return total;
    }
    // dim Ext^i(S/B^[ell], S/J)_delta summed over the fiber
    std::vector<std::size_t> ext(const FineDegree& p0, long ell, const oracle::Mat& j = {}) const {
        std::vector<std::size_t> total(b.size() + 1, 0);
        oracle::for_fiber(fan.rays, p0, K, [&](const oracle::Vec& p) {
            const auto h = oracle::taylor_ext_strand(b, ell, p, j);
            for (std::size_t i = 0; i < h.size(); ++i) total[i] += h[i];
        });
        return total;
    }
    std::size_t monomials(const FineDegree& p0) const {
        std::size_t c = 0;
        oracle::for_fiber(fan.rays, p0, K, [&](const oracle::Vec& p) {
            if (std::all_of(p.begin(), p.end(), [](long v) { return v >= 0; })) ++c;
        });
        return c;
    }
};

// Every free degree in the box [lo, hi]^r.
std::vector<CoarseDegree> grid(const Grading& g, long lo, long hi) {
    std::vector<CoarseDegree> out;
    std::vector<long> a(g.free_rank(), lo);
    for (;;) {
        out.push_back({a, {}});
        std::size_t k = 0;
        while (k < a.size() && a[k] == hi) a[k++] = lo;
        if (k == a.size()) return out;
        ++a[k];
    }
}

std::size_t p1(long a, int i) {
    if (i == 0) return a >= 0 ? static_cast<std::size_t>(a + 1) : 0;
    return a <= -2 ? static_cast<std::size_t>(-a - 1) : 0;
}

}  // namespace

TEST_SUITE("cohomology") {

TEST_CASE("line bundles on the projective plane") {
    const CohomologyEngine e(fixtures::make_toric(oracle::p2()));
    for (long d = -8; d <= 8; ++d) {
        const CoarseDegree delta{{d}, {}};
        CHECK(sheaf_dim(e, 0, delta) == oracle::binom(d + 2, 2));
        CHECK(sheaf_dim(e, 1, delta) == 0);
        CHECK(sheaf_dim(e, 2, delta) == oracle::binom(-d - 1, 2));
    }
}

TEST_CASE("Kunneth on P1 x P1") {
    const CohomologyEngine e(fixtures::make_toric(oracle::p1xp1()));
    for (long a = -5; a <= 5; ++a)
        for (long b = -5; b <= 5; ++b) {
            const CoarseDegree delta{{a, b}, {}};
            for (int i = 0; i <= 2; ++i) {
                std::size_t want = 0;
                for (int k = 0; k <= i; ++k)
                    if (k <= 1 && i - k <= 1) want += p1(a, k) * p1(b, i - k);
                CHECK(sheaf_dim(e, i, delta) == want);
            }
        }
}

TEST_CASE("local and sheaf dims against the fiberwise Cech oracle") {
    for (const auto& f : {oracle::scroll(1), oracle::scroll(2), oracle::surface5()}) {
        const auto x = fixtures::make_toric(f);
        const CohomologyEngine e(x);
        const bool big = x.grading.free_rank() == 3;
        const Oracle o{f, oracle::irrelevant(f), big ? 12 : 20};
        for (const auto& delta : grid(x.grading, big ? -2 : -3, big ? 2 : 3)) {
            const FineDegree p0 = *x.grading.fiber_representative(delta);
            const auto local = o.local(p0);
            for (int i = 0; i < static_cast<int>(local.size()); ++i) CHECK(hB_dim(e, i, delta) == local[i]);
            CHECK(sheaf_dim(e, 0, delta) == o.monomials(p0) - local[0] + local[1]);
            for (int i = 1; i + 1 < static_cast<int>(local.size()); ++i) CHECK(sheaf_dim(e, i, delta) == local[i + 1]);
        }
    }
}

TEST_CASE("truncated dims against the Taylor resolution") {
    for (const auto& f : {oracle::p2(), oracle::scroll(1)}) {
        const auto x = fixtures::make_toric(f);
        const CohomologyEngine e(x);
        const Oracle o{f, oracle::irrelevant(f), 20};
        for (const auto& delta : grid(x.grading, -4, 2)) {
            const FineDegree p0 = *x.grading.fiber_representative(delta);
            for (long ell = 0; ell <= 3; ++ell) {
                const auto ext = o.ext(p0, ell);
                for (int i = 0; i < static_cast<int>(ext.size()); ++i) CHECK(ext_truncated_dim(e, i, delta, ell) == ext[i]);
                // Hom(B^[l], S) = S - Ext^0 + Ext^1
                CHECK(e.truncated_dim(Indexing::Sheaf, 0, delta, ell) == o.monomials(p0) - ext[0] + ext[1]);
                CHECK(e.truncated_dim(Indexing::Sheaf, 1, delta, ell) == ext[2]);
            }
        }
    }
}

TEST_CASE("bound is the exact stabilization point") {
    for (const auto& f : {oracle::p2(), oracle::scroll(0), oracle::scroll(1), oracle::surface5()}) {
        const auto x = fixtures::make_toric(f);
        const CohomologyEngine e(x);
        const bool big = x.grading.free_rank() == 3;
        for (const auto& delta : grid(x.grading, big ? -3 : -5, big ? 3 : 4)) {
            for (Indexing ix : {Indexing::Local, Indexing::Sheaf})
                for (int i = 0; i <= 3; ++i) {
                    const long b = bound_S(e, ix, i, delta);
                    const std::size_t full = e.dim(ix, i, delta);
                    for (long ell = 0; ell <= b + 2; ++ell)
                        CHECK((e.truncated_dim(ix, i, delta, ell) == full) == (ell >= b));
                }
        }
    }
}

TEST_CASE("finiteness violations carry the offending set") {
    const auto x = fixtures::make_toric(oracle::noncomplete());
    const CohomologyEngine e(x);
    try {
        (void)sheaf_dim(e, 1, CoarseDegree{{0}, {}});
        FAIL("expected a finiteness violation");
    } catch (const FinitenessViolation& v) {
        // a nonzero vector of M inside C_I
        CHECK(OrthantRegion::closed_orthant(v.set(), 3).contains(v.certificate()));
        CHECK(std::any_of(v.certificate().begin(), v.certificate().end(), [](long c) { return c != 0; }));
        CHECK(x.grading.degree(v.certificate()) == CoarseDegree{{0}, {}});
    }
}

TEST_CASE("free modules: bound is the max over shifts") {
    const auto x = fixtures::make_toric(oracle::scroll(1));
    const CohomologyEngine e(x);
    const std::vector<CoarseDegree> shifts = {{{0, 0}, {}}, {{1, -2}, {}}, {{-1, 3}, {}}};
    for (const auto& delta : grid(x.grading, -3, 3))
        for (int i = 0; i <= 2; ++i) {
            long want = 0;
            for (const auto& a : shifts) want = std::max(want, bound_S(e, Indexing::Sheaf, i, delta - a));
            CHECK(e.bound_module(Indexing::Sheaf, i, delta, ModuleSpec::free_module(shifts)).value == want);
            CHECK(e.bound_free(Indexing::Sheaf, i, delta, shifts) == want);
        }
}

TEST_CASE("monomial quotients: the module bound is sufficient") {
    // P = S/J; truncation at the bound already computes H^i_B(P).
    for (const auto& f : {oracle::p2(), oracle::scroll(1)}) {
        const auto x = fixtures::make_toric(f);
        const CohomologyEngine e(x);
        const Oracle o{f, oracle::irrelevant(f), 16};
        const std::size_t n = f.rays.size();
        const std::vector<oracle::Mat> quotients = n == 3 ? std::vector<oracle::Mat>{{{1, 0, 0}}, {{1, 1, 0}}, {{1, 1, 0}, {0, 1, 1}}}
                                                          : std::vector<oracle::Mat>{{{1, 0, 0, 0}}, {{1, 1, 0, 0}}, {{0, 1, 0, 1}}, {{1, 0, 1, 0}, {0, 1, 1, 0}}};
        for (const auto& jg : quotients) {
            const ModuleSpec spec = ModuleSpec::monomial_quotient(MonomialIdeal(n, jg), {});
            const BettiTable minimal = e.betti_table(spec);
            const BettiTable taylor = e.betti_table(spec, true);
            std::size_t total = 0;
            for (const auto& b : taylor) total += b.mult;
            CHECK(total == (std::size_t{1} << MonomialIdeal(n, jg).num_gens()));
            for (const auto& delta : grid(x.grading, -3, 2)) {
                const FineDegree p0 = *x.grading.fiber_representative(delta);
                const auto h = o.local(p0, jg);
                for (int i = 0; i <= static_cast<int>(n); ++i) {
                    const long ell = e.bound_module(Indexing::Local, i, delta, minimal).value;
                    CHECK(ell <= e.bound_module(Indexing::Local, i, delta, taylor).value);
                    for (long k = ell; k <= ell + 1; ++k) CHECK(o.ext(p0, k, jg)[static_cast<std::size_t>(i)] == h[static_cast<std::size_t>(i)]);
                }
            }
        }
    }
}

TEST_CASE("user Betti tables are validated") {
    const auto x = fixtures::make_toric(oracle::p2());
    const CohomologyEngine e(x);
    CHECK_THROWS_AS(e.betti_table(ModuleSpec::user_betti({{-1, {{0}, {}}, 1}})), InvalidInput);
    CHECK_THROWS_AS(e.betti_table(ModuleSpec::user_betti({{0, {{0, 1}, {}}, 1}})), InvalidInput);
    const BettiTable t = e.betti_table(ModuleSpec::user_betti({{1, {{2}, {}}, 1}, {0, {{0}, {}}, 1}, {1, {{2}, {}}, 2}}));
    REQUIRE(t.size() == 2);
    CHECK(t[0].j == 0);
    CHECK(t[1].mult == 3);
}

}
