#include "toricoh/monomial_ideal.hpp"

#include <algorithm>
#include <set>

#include "toricoh/parallel.hpp"
#include "toricoh/simplicial.hpp"

namespace toricoh {

namespace {

bool divides(const Exponent& a, const Exponent& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

}  // namespace

std::vector<Exponent> minimalize(std::vector<Exponent> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens)
            if (h != g && divides(h, g)) {
                redundant = true;
                break;
            }
        if (!redundant) out.push_back(g);
    }
    return out;
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Exponent> gens) : n_(n) {
    if (n > IndexSet::kMaxSize) throw InvalidInput("monomial ideal: at most 32 variables are supported");
    for (const auto& g : gens) {
        if (g.size() != n) throw InvalidInput("monomial ideal: generator has the wrong number of exponents");
        for (long e : g)
            if (e < 0) throw InvalidInput("monomial ideal: negative exponent");
    }
    gens_ = minimalize(std::move(gens));
    for (const auto& g : gens_)
        for (long e : g)
            if (e > 1) squarefree_ = false;
}

MonomialIdeal MonomialIdeal::from_supports(std::size_t n, const std::vector<IndexSet>& supports) {
    std::vector<Exponent> gens;
    for (IndexSet s : supports) {
        if (!s.is_subset_of(IndexSet::full(n))) throw InvalidInput("monomial ideal: variable index out of range");
        Exponent g(n, 0);
        for (auto i : s.elements()) g[i] = 1;
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
    return std::any_of(gens_.begin(), gens_.end(),
                       [](const Exponent& g) { return std::all_of(g.begin(), g.end(), [](long e) { return e == 0; }); });
}

std::vector<IndexSet> MonomialIdeal::supports() const {
    std::vector<IndexSet> out;
    for (const auto& g : gens_) {
        IndexSet s;
        for (std::size_t i = 0; i < n_; ++i)
            if (g[i] > 0) s.insert(i);
        out.push_back(s);
    }
    return out;
}

bool MonomialIdeal::contains(const Exponent& a) const {
    if (std::any_of(a.begin(), a.end(), [](long e) { return e < 0; })) return false;
    return std::any_of(gens_.begin(), gens_.end(), [&](const Exponent& g) { return divides(g, a); });
}

MonomialIdeal frobenius_power(const MonomialIdeal& b, long ell) {
    if (ell <= 0) throw InvalidInput("frobenius_power: exponent must be positive");
    std::vector<Exponent> gens = b.gens();
    for (auto& g : gens)
        for (auto& e : g) e *= ell;
    return MonomialIdeal(b.num_vars(), std::move(gens));
}

Exponent lcm_of(const MonomialIdeal& ideal, IndexSet chosen) {
    Exponent out(ideal.num_vars(), 0);
    for (auto t : chosen.elements()) {
        const auto& g = ideal.gens().at(t);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], g[i]);
    }
    return out;
}

std::vector<IndexSet> minimal_vertex_covers(const MonomialIdeal& b) {
    const auto supports = b.supports();
    std::set<std::uint32_t> found;
    // Branch on the variables of the first generator not yet met.
    auto search = [&](auto&& self, IndexSet cover) -> void {
        for (IndexSet s : supports)
            if ((s & cover).empty()) {
                for (auto i : s.elements()) {
                    IndexSet next = cover;
                    next.insert(i);
                    self(self, next);
                }
                return;
            }
        found.insert(cover.bits());
    };
    search(search, IndexSet{});
    std::vector<IndexSet> covers;
    for (auto bits : found) covers.emplace_back(bits);
    std::vector<IndexSet> minimal;
    for (IndexSet c : covers)
        if (std::none_of(covers.begin(), covers.end(), [c](IndexSet d) { return d != c && d.is_subset_of(c); }))
            minimal.push_back(c);
    std::sort(minimal.begin(), minimal.end(), lex_less);
    return minimal;
}

MonomialIdeal alexander_dual(const MonomialIdeal& b) {
    if (!b.is_squarefree()) throw InvalidInput("alexander_dual: ideal is not square-free");
    return MonomialIdeal::from_supports(b.num_vars(), minimal_vertex_covers(b));
}

std::vector<std::size_t> tor_dims(const MonomialIdeal& ideal, const Exponent& p, Characteristic ch) {
    const std::size_t n = ideal.num_vars();
    if (p.size() != n) throw InvalidInput("tor_dims: degree has the wrong length");
    if (std::any_of(p.begin(), p.end(), [](long e) { return e < 0; })) return std::vector<std::size_t>(n + 1, 0);
    IndexSet support;
    for (std::size_t i = 0; i < n; ++i)
        if (p[i] > 0) support.insert(i);
    std::vector<IndexSet> family;
    const std::uint32_t full = support.bits();
    std::uint32_t s = full;
    for (;;) {
        Exponent q = p;
        for (auto i : IndexSet(s).elements()) --q[i];
        if (!ideal.contains(q)) family.emplace_back(s);
        if (s == 0) break;
        s = (s - 1) & full;
    }
    // The Koszul boundary drops one index; over a field its homology dims equal
    // those of the transposed (coboundary) complex on the same labels.
    return LabeledComplex(n, std::move(family)).cohomology_dims(ch);
}

BettiSupport betti_support(const MonomialIdeal& ideal, Characteristic ch) {
    const std::size_t n = ideal.num_vars();
    std::vector<Exponent> candidates;
    if (ideal.is_squarefree()) {
        if (n > 24) throw InvalidInput("betti_support: too many variables for the square-free scan");
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
            Exponent p(n, 0);
            for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<long>((bits >> i) & 1U);
            candidates.push_back(std::move(p));
        }
    } else {
        const std::size_t r = ideal.num_gens();
        if (r > 24) throw InvalidInput("betti_support: too many generators for the lcm lattice");
        std::set<Exponent> lcms;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r); ++bits)
            lcms.insert(lcm_of(ideal, IndexSet(static_cast<std::uint32_t>(bits))));
        candidates.assign(lcms.begin(), lcms.end());
    }
    std::vector<std::vector<std::size_t>> dims(candidates.size());
    parallel_for(candidates.size(), [&](std::size_t k) { dims[k] = tor_dims(ideal, candidates[k], ch); });
    BettiSupport out;
    for (std::size_t k = 0; k < candidates.size(); ++k)
        if (std::any_of(dims[k].begin(), dims[k].end(), [](std::size_t v) { return v != 0; }))
            out.emplace(candidates[k], dims[k]);
    return out;
}

}  // namespace toricoh
