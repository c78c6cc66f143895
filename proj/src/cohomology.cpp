#include "toricoh/cohomology.hpp"

#include <algorithm>
#include <map>

namespace toricoh {

namespace {

std::string describe(IndexSet I) {
    std::string s = "{";
    for (auto i : I.one_based()) s += (s.size() > 1 ? "," : "") + std::to_string(i);
    return s + "}";
}

std::string describe(const FineDegree& x) {
    std::string s = "(";
    for (std::size_t k = 0; k < x.size(); ++k) s += (k ? "," : "") + std::to_string(x[k]);
    return s + ")";
}

BettiTable merged(const BettiTable& raw) {
    std::map<std::pair<int, CoarseDegree>, std::size_t> acc;
    for (const auto& e : raw) acc[{e.j, e.alpha}] += e.mult;
    BettiTable out;
    for (const auto& [key, mult] : acc) out.push_back(BettiEntry{key.first, key.second, mult});
    return out;
}

}  // namespace

FinitenessViolation::FinitenessViolation(IndexSet I, FineDegree certificate)
    : Error("finiteness fails for I = " + describe(I) + ": M meets C_I in " + describe(certificate)),
      I_(I),
      certificate_(std::move(certificate)) {}

SigmaTable sigma_dual(const LocalCohomology& lc) {
    const MonomialIdeal& b = lc.ideal();
    if (!b.is_squarefree()) throw InvalidInput("sigma_dual: the ideal must be square-free");
    if (b.is_zero() || b.is_unit()) throw InvalidInput("sigma_dual: the ideal must be proper and nonzero");
    const MonomialIdeal dual = alexander_dual(b);
    SigmaTable t;
    t.source = SigmaTable::Source::Dual;
    t.n = b.num_vars();
    for (const auto& [p, tor] : betti_support(dual, lc.characteristic())) {
        IndexSet I;
        long size = 0;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] != 0) {
                I.insert(k);
                size += p[k];
            }
        if (I.empty()) continue;  // Tor_0 at degree 0 is the unit class of S/B*.
        for (std::size_t i = 1; i < tor.size(); ++i) {
            if (tor[i] == 0) continue;
            const int index = static_cast<int>(size) - static_cast<int>(i) + 1;
            const std::size_t dim = lc.h(index, I);
            if (dim == 0)
                throw CrossCheckFailure("sigma_dual: Tor of the dual is nonzero at " + describe(I) +
                                        " but the Cech complex is exact in degree " + std::to_string(index));
            t.insert(index, I, dim);
        }
    }
    return t;
}

SigmaTable sigma_dual(const MonomialIdeal& b, Characteristic ch) {
    return sigma_dual(LocalCohomology(b, ch));
}

ModuleSpec ModuleSpec::free_module(std::vector<CoarseDegree> shifts) {
    ModuleSpec m;
    m.kind = Kind::Free;
    m.shifts = std::move(shifts);
    return m;
}

ModuleSpec ModuleSpec::monomial_quotient(MonomialIdeal j, std::vector<CoarseDegree> shifts) {
    ModuleSpec m;
    m.kind = Kind::MonomialQuotient;
    m.quotient = std::move(j);
    m.shifts = std::move(shifts);
    return m;
}

ModuleSpec ModuleSpec::user_betti(BettiTable table) {
    ModuleSpec m;
    m.kind = Kind::UserBetti;
    m.betti = std::move(table);
    return m;
}

// ---------------------------------------------------------------------------

CohomologyEngine::CohomologyEngine(Grading g, MonomialIdeal b, Characteristic ch) : grading_(std::move(g)) {
    if (b.num_vars() != grading_.n()) throw InvalidInput("ideal and grading use different numbers of variables");
    if (b.is_zero()) throw InvalidInput("the ideal B must be nonzero");
    local_ = std::make_unique<LocalCohomology>(std::move(b), ch);
}

CohomologyEngine::CohomologyEngine(const ToricData& x, Characteristic ch) : CohomologyEngine(x.grading, x.irrelevant, ch) {}

const SigmaTable& CohomologyEngine::sigma_local() const {
    std::call_once(local_once_, [this] {
        if (ideal().is_unit()) {
            sigma_local_ = std::make_unique<SigmaTable>();
            sigma_local_->source = SigmaTable::Source::Dual;
            sigma_local_->n = grading_.n();
        } else {
            sigma_local_ = std::make_unique<SigmaTable>(sigma_dual(*local_));
        }
    });
    return *sigma_local_;
}

const SigmaTable& CohomologyEngine::sigma_sheaf() const {
    std::call_once(sheaf_once_, [this] { sigma_sheaf_ = std::make_unique<SigmaTable>(toricoh::sigma_sheaf(*local_)); });
    return *sigma_sheaf_;
}

const FinitenessResult& CohomologyEngine::finiteness(IndexSet I) const {
    std::lock_guard lock(finiteness_mutex_);
    auto it = finiteness_.find(I.bits());
    if (it == finiteness_.end()) it = finiteness_.emplace(I.bits(), finiteness_check(grading_, I)).first;
    return it->second;
}

void CohomologyEngine::require_finite(Indexing ix, int i) const {
    for (IndexSet I : sigma(ix).sets(i)) {
        const auto& f = finiteness(I);
        if (!f.finite) throw FinitenessViolation(I, *f.certificate);
    }
}

FineDegree CohomologyEngine::representative(const CoarseDegree& delta) const {
    auto p = grading_.fiber_representative(delta);
    if (!p) throw InvalidInput("degree does not belong to the grading group");
    return *p;
}

std::size_t CohomologyEngine::dim(Indexing ix, int i, const CoarseDegree& delta) const {
    require_finite(ix, i);
    const FineDegree p = representative(delta);
    std::size_t total = 0;
    auto it = sigma(ix).rows.find(i);
    if (it == sigma(ix).rows.end()) return 0;
    for (const auto& e : it->second)
        total += e.dim * count_points(grading_, p, OrthantRegion::strict_orthant(e.I, grading_.n()));
    return total;
}

std::size_t CohomologyEngine::local_truncated(int i, const CoarseDegree& delta, std::optional<long> ell) const {
    require_finite(Indexing::Local, i);
    const FineDegree p = representative(delta);
    std::size_t total = 0;
    auto it = sigma_local().rows.find(i);
    if (it == sigma_local().rows.end()) return 0;
    for (const auto& e : it->second) {
        OrthantRegion region = OrthantRegion::strict_orthant(e.I, grading_.n());
        if (ell) region = region.floored(*ell);
        total += e.dim * count_points(grading_, p, region);
    }
    return total;
}

std::size_t CohomologyEngine::truncated_dim(Indexing ix, int i, const CoarseDegree& delta, long ell) const {
    if (ell < 0) throw InvalidInput("truncation exponent must be nonnegative");
    if (ix == Indexing::Local) return local_truncated(i, delta, ell);
    if (i >= 1) return local_truncated(i + 1, delta, ell);
    if (i < 0) return 0;
    // 0 -> Hom(S/B^[l], S) -> S -> Hom(B^[l], S) -> Ext^1(S/B^[l], S) -> 0
    const auto& f = finiteness(IndexSet{});
    if (!f.finite) throw FinitenessViolation(IndexSet{}, *f.certificate);
    const std::size_t monomials = count_points(grading_, representative(delta), OrthantRegion::strict_orthant(IndexSet{}, grading_.n()));
    return monomials + local_truncated(1, delta, ell) - local_truncated(0, delta, ell);
}

BoundResult CohomologyEngine::bound(Indexing ix, int i, const CoarseDegree& delta) const {
    if (ix == Indexing::Sheaf) {
        if (i >= 1) return bound(Indexing::Local, i + 1, delta);
        // Hom(B^[l], S) stabilizes once both Ext^0 and Ext^1 have.
        BoundResult a = bound(Indexing::Local, 0, delta);
        BoundResult b = bound(Indexing::Local, 1, delta);
        a.value = std::max(a.value, b.value);
        a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
        return a;
    }
    BoundResult out;
    if (i < 0) return out;
    require_finite(Indexing::Local, i);
    auto it = sigma_local().rows.find(i);
    if (it == sigma_local().rows.end()) return out;
    const FineDegree p = representative(delta);
    for (const auto& e : it->second) {
        const OrthantRegion region = OrthantRegion::strict_orthant(e.I, grading_.n());
        for (auto j : e.I.elements()) {
            auto lowest = min_coordinate(grading_, p, region, j);
            const long f = lowest ? std::max(0L, -*lowest) : 0;
            out.terms.push_back({e.I, j, f});
            out.value = std::max(out.value, f);
        }
    }
    return out;
}

long CohomologyEngine::bound_free(Indexing ix, int i, const CoarseDegree& delta, const std::vector<CoarseDegree>& shifts) const {
    long best = 0;
    for (const auto& alpha : shifts) best = std::max(best, bound(ix, i, grading_.normalize(delta - alpha)).value);
    return best;
}

BettiTable CohomologyEngine::betti_table(const ModuleSpec& p, bool taylor) const {
    BettiTable raw;
    const CoarseDegree zero = grading_.make_degree(std::vector<long>(grading_.free_rank() + grading_.torsion().size(), 0));
    switch (p.kind) {
        case ModuleSpec::Kind::Free:
            for (const auto& a : p.shifts) raw.push_back({0, grading_.normalize(a), 1});
            break;
        case ModuleSpec::Kind::MonomialQuotient: {
            if (!p.quotient) throw InvalidInput("monomial quotient module without an ideal");
            const MonomialIdeal& J = *p.quotient;
            if (J.num_vars() != grading_.n()) throw InvalidInput("quotient ideal has the wrong number of variables");
            const std::vector<CoarseDegree> shifts = p.shifts.empty() ? std::vector<CoarseDegree>{zero} : p.shifts;
            std::vector<std::pair<int, FineDegree>> fine;
            if (taylor) {
                if (J.num_gens() > 20) throw InvalidInput("Taylor complex: too many generators");
                for (std::uint32_t K = 0; K < (std::uint32_t{1} << J.num_gens()); ++K)
                    fine.emplace_back(std::popcount(K), lcm_of(J, IndexSet(K)));
            } else {
                for (const auto& [deg, dims] : betti_support(J, characteristic()))
                    for (std::size_t j = 0; j < dims.size(); ++j)
                        for (std::size_t c = 0; c < dims[j]; ++c) fine.emplace_back(static_cast<int>(j), deg);
            }
            for (const auto& s : shifts)
                for (const auto& [j, deg] : fine) raw.push_back({j, grading_.normalize(grading_.degree(deg) + s), 1});
            break;
        }
        case ModuleSpec::Kind::UserBetti:
            for (const auto& e : p.betti) {
                if (e.j < 0 || e.mult == 0) throw InvalidInput("Betti entries need j >= 0 and positive multiplicity");
                if (static_cast<std::size_t>(e.j) > grading_.n())
                    throw InvalidInput("Betti entry beyond the length of a minimal resolution");
                if (e.alpha.free.size() != grading_.free_rank() || e.alpha.torsion.size() != grading_.torsion().size())
                    throw InvalidInput("Betti degree has the wrong shape");
                raw.push_back({e.j, grading_.normalize(e.alpha), e.mult});
            }
            break;
    }
    return merged(raw);
}

ModuleBound CohomologyEngine::bound_module(Indexing ix, int i, const CoarseDegree& delta, const BettiTable& betti) const {
    ModuleBound out;
    out.betti = betti;
    for (const auto& e : betti) {
        const CoarseDegree shifted = grading_.normalize(delta - e.alpha);
        long v = 0;
        if (e.j == 0) {
            v = bound(ix, i, shifted).value;
        } else {
            v = std::max(bound(ix, i + e.j, shifted).value, bound(ix, i + e.j - 1, shifted).value);
        }
        out.terms.push_back({e.j, e.alpha, v});
        out.value = std::max(out.value, v);
    }
    return out;
}

ModuleBound CohomologyEngine::bound_module(Indexing ix, int i, const CoarseDegree& delta, const ModuleSpec& p) const {
    return bound_module(ix, i, delta, betti_table(p));
}

long CohomologyEngine::crude_bound(const CoarseDegree& delta) const {
    return toricoh::crude_bound(grading_, representative(delta));
}

std::size_t hB_dim(const CohomologyEngine& e, int i, const CoarseDegree& delta) { return e.dim(Indexing::Local, i, delta); }

std::size_t sheaf_dim(const CohomologyEngine& e, int i, const CoarseDegree& delta) { return e.dim(Indexing::Sheaf, i, delta); }

std::size_t ext_truncated_dim(const CohomologyEngine& e, int i, const CoarseDegree& delta, long ell) {
    return e.truncated_dim(Indexing::Local, i, delta, ell);
}

long bound_S(const CohomologyEngine& e, Indexing ix, int i, const CoarseDegree& delta) { return e.bound(ix, i, delta).value; }

}  // namespace toricoh
