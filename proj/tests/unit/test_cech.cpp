#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "toricoh/cech.hpp"
#include "toricoh/cohomology.hpp"

using namespace toricoh;

namespace {

oracle::Mat gens_of(const MonomialIdeal& b) { return b.gens(); }

}  // namespace

TEST_SUITE("cech") {

TEST_CASE("restricted Cech dims match the fine-degree oracle and depend only on neg(p)") {
    std::mt19937 rng(71);
    for (long ch : {0L, 2L}) {
        for (int t = 0; t < 30; ++t) {
            const std::size_t n = 3 + rng() % 3;
            const MonomialIdeal b(n, oracle::random_squarefree(rng, n, 5));
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
                const IndexSet I(bits);
                const auto dims = restricted_cech_dims(b, I, Characteristic(ch));
                if (I.empty()) {
                    for (auto d : dims) CHECK(d == 0);
                    continue;
                }
                CHECK(dims == oracle::cech_strand(gens_of(b), orthant_apex(I, n), {}, ch));
                // a random p with the same negative support
                FineDegree p(n);
                for (std::size_t i = 0; i < n; ++i) p[i] = I.contains(i) ? -1 - static_cast<long>(rng() % 4) : static_cast<long>(rng() % 4);
                CHECK(cech_dims_at(b.gens(), p, Characteristic(ch)) == oracle::cech_strand(gens_of(b), p, {}, ch));
                CHECK(cech_dims_at(b.gens(), p, Characteristic(ch)) == dims);
            }
        }
    }
}

TEST_CASE("maximal ideal: only the top local cohomology, in negative degrees") {
    for (std::size_t n = 1; n <= 5; ++n) {
        std::vector<Exponent> vars;
        for (std::size_t i = 0; i < n; ++i) {
            Exponent e(n, 0);
            e[i] = 1;
            vars.push_back(e);
        }
        const MonomialIdeal m(n, vars);
        const SigmaTable t = sigma_direct(m);
        REQUIRE(t.rows.size() == 1);
        CHECK(t.rows.begin()->first == static_cast<int>(n));
        CHECK(t.contains(static_cast<int>(n), IndexSet::full(n)));
        CHECK(sigma_dual(m).same_entries(t));
    }
}

TEST_CASE("ideal (x1, x2) has Sigma_2 = {{1,2}}") {
    const MonomialIdeal b(2, {{1, 0}, {0, 1}});
    const SigmaTable t = sigma_dual(b);
    CHECK(t.rows.size() == 1);
    CHECK(t.sets(2) == std::vector<IndexSet>{IndexSet{0, 1}});
}

TEST_CASE("dual and direct Sigma tables agree") {
    std::mt19937 rng(72);
    for (long ch : {0L, 2L, 3L}) {
        for (int t = 0; t < 25; ++t) {
            const std::size_t n = 2 + rng() % 5;
            const MonomialIdeal b(n, oracle::random_squarefree(rng, n, 5));
            if (b.is_unit()) continue;
            CHECK(sigma_dual(b, Characteristic(ch)).same_entries(sigma_direct(b, Characteristic(ch))));
        }
    }
}

TEST_CASE("Frobenius powers have the same restricted Cech dims") {
    std::mt19937 rng(73);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 3 + rng() % 3;
        const MonomialIdeal b(n, oracle::random_squarefree(rng, n, 5));
        for (long ell : {2L, 3L})
            for (std::uint32_t bits = 0; bits < (1u << n); ++bits)
                CHECK(restricted_cech_dims(frobenius_power(b, ell), IndexSet(bits)) == restricted_cech_dims(b, IndexSet(bits)));
    }
}

TEST_CASE("shifted Cech dims drop the empty face") {
    std::mt19937 rng(74);
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 3 + rng() % 3;
        const MonomialIdeal b(n, oracle::random_squarefree(rng, n, 4));
        const unsigned r = static_cast<unsigned>(b.num_gens());
        const auto supports = b.supports();
        for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
            std::vector<std::uint32_t> family;
            for (std::uint32_t T = 1; T < (1u << r); ++T) {
                std::uint32_t u = 0;
                for (unsigned k = 0; k < r; ++k)
                    if (T >> k & 1) u |= supports[k].bits();
                if ((bits & u) == bits) family.push_back(T);
            }
            const auto raw = oracle::subset_complex_cohomology(r, family);
            const auto got = shifted_cech_dims(b.gens(), IndexSet(bits));
            REQUIRE(got.size() == r);
            for (unsigned i = 0; i < r; ++i) CHECK(got[i] == raw[i + 1]);
        }
    }
}

TEST_CASE("sheaf dims from local dims") {
    const auto x = fixtures::make_toric(oracle::p2());
    const LocalCohomology lc(x.irrelevant);
    // O(d) on P^2 at fine degrees: I = {} gives sections, I = {1,2,3} gives H^2
    CHECK(lc.sheaf_dims(IndexSet{})[0] == 1);
    CHECK(lc.sheaf_dims(IndexSet{0, 1, 2})[2] == 1);
    for (std::uint32_t bits = 0; bits < 8; ++bits) {
        const auto h = lc.sheaf_dims(IndexSet(bits));
        const auto local = lc.dims(IndexSet(bits));
        for (std::size_t i = 1; i + 1 < local.size(); ++i) CHECK(h[i] == local[i + 1]);
    }
}

TEST_CASE("Sigma table bookkeeping") {
    SigmaTable t;
    t.n = 3;
    t.insert(2, IndexSet{0, 2}, 1);
    t.insert(2, IndexSet{0, 1}, 1);
    t.insert(3, IndexSet{0, 1, 2}, 2);
    CHECK(t.sets(2) == std::vector<IndexSet>{IndexSet{0, 1}, IndexSet{0, 2}});
    CHECK(t.contains(3, IndexSet{0, 1, 2}));
    CHECK_FALSE(t.contains(2, IndexSet{1, 2}));
    SigmaTable u = t;
    CHECK(u.same_entries(t));
    u.insert(3, IndexSet{0, 1, 2}, 1);
    CHECK_FALSE(u.same_entries(t));
    CHECK(t.all_sets().size() == 3);
}

}
