#include "toricoh/cech.hpp"

#include <algorithm>
#include <mutex>

#include "toricoh/parallel.hpp"
#include "toricoh/simplicial.hpp"

namespace toricoh {

namespace {

constexpr std::size_t kMaxGenerators = 24;

void check_generator_count(std::size_t r) {
    if (r > kMaxGenerators) throw InvalidInput("Cech complex: more than 24 generators");
}

std::vector<IndexSet> supports_of(const std::vector<Exponent>& gens) {
    std::vector<IndexSet> out;
    for (const auto& g : gens) {
        IndexSet s;
        for (std::size_t i = 0; i < g.size(); ++i)
            if (g[i] > 0) s.insert(i);
        out.push_back(s);
    }
    return out;
}

// {J : I subset supp(m_J)}, optionally without J = emptyset.
std::vector<IndexSet> restricted_family(const std::vector<IndexSet>& supports, IndexSet I, bool drop_empty) {
    const std::size_t r = supports.size();
    const std::uint32_t count = std::uint32_t{1} << r;
    std::vector<std::uint32_t> unions(count, 0);
    std::vector<IndexSet> family;
    for (std::uint32_t J = 0; J < count; ++J) {
        if (J != 0) {
            const unsigned low = static_cast<unsigned>(std::countr_zero(J));
            unions[J] = unions[J & (J - 1)] | supports[low].bits();
        }
        if (drop_empty && J == 0) continue;
        if (I.is_subset_of(IndexSet(unions[J]))) family.emplace_back(J);
    }
    return family;
}

}  // namespace

std::vector<std::size_t> restricted_cech_dims(const std::vector<Exponent>& gens, IndexSet I, Characteristic ch) {
    check_generator_count(gens.size());
    return LabeledComplex(gens.size(), restricted_family(supports_of(gens), I, false)).cohomology_dims(ch);
}

std::vector<std::size_t> restricted_cech_dims(const MonomialIdeal& b, IndexSet I, Characteristic ch) {
    return restricted_cech_dims(b.gens(), I, ch);
}

std::vector<std::size_t> cech_dims_at(const std::vector<Exponent>& gens, const FineDegree& p, Characteristic ch) {
    const std::size_t r = gens.size();
    check_generator_count(r);
    std::vector<IndexSet> family;
    for (std::uint32_t J = 0; J < (std::uint32_t{1} << r); ++J) {
        // x^p lies in S_{m_J} iff every negative exponent of p is on a variable m_J inverts.
        Exponent m(p.size(), 0);
        for (auto t : IndexSet(J).elements())
            for (std::size_t i = 0; i < p.size(); ++i) m[i] = std::max(m[i], gens[t].at(i));
        bool survives = true;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (p[i] < 0 && m[i] == 0) survives = false;
        if (survives) family.emplace_back(J);
    }
    return LabeledComplex(r, std::move(family)).cohomology_dims(ch);
}

std::vector<std::size_t> shifted_cech_dims(const std::vector<Exponent>& gens, IndexSet I, Characteristic ch) {
    const std::size_t r = gens.size();
    check_generator_count(r);
    if (r == 0) return {};
    auto raw = LabeledComplex(r, restricted_family(supports_of(gens), I, true)).cohomology_dims(ch);
    return std::vector<std::size_t>(raw.begin() + 1, raw.end());
}

// ---------------------------------------------------------------------------

void SigmaTable::insert(int i, IndexSet I, std::size_t dim) {
    auto& row = rows[i];
    auto it = std::lower_bound(row.begin(), row.end(), I, [](const SigmaEntry& e, IndexSet s) { return lex_less(e.I, s); });
    if (it != row.end() && it->I == I) {
        it->dim = dim;
        return;
    }
    row.insert(it, SigmaEntry{I, dim});
}

bool SigmaTable::contains(int i, IndexSet I) const {
    auto it = rows.find(i);
    if (it == rows.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [I](const SigmaEntry& e) { return e.I == I; });
}

std::vector<IndexSet> SigmaTable::sets(int i) const {
    std::vector<IndexSet> out;
    auto it = rows.find(i);
    if (it == rows.end()) return out;
    for (const auto& e : it->second) out.push_back(e.I);
    return out;
}

bool SigmaTable::same_entries(const SigmaTable& other) const {
    return n == other.n && rows == other.rows;
}

std::vector<IndexSet> SigmaTable::all_sets() const {
    std::vector<IndexSet> out;
    for (const auto& [i, row] : rows)
        for (const auto& e : row) out.push_back(e.I);
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(SigmaTable::Source s) {
    switch (s) {
        case SigmaTable::Source::Dual: return "dual";
        case SigmaTable::Source::Direct: return "direct";
        case SigmaTable::Source::Sheaf: return "sheaf";
        case SigmaTable::Source::Nerve: return "nerve";
        case SigmaTable::Source::Surface: return "surface";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------

LocalCohomology::LocalCohomology(MonomialIdeal b, Characteristic ch) : b_(std::move(b)), ch_(ch) {
    check_generator_count(b_.num_gens());
}

const std::vector<std::size_t>& LocalCohomology::dims(IndexSet I) const {
    {
        std::shared_lock lock(mutex_);
        auto it = memo_.find(I.bits());
        if (it != memo_.end()) return it->second;
    }
    auto computed = restricted_cech_dims(b_, I, ch_);
    std::unique_lock lock(mutex_);
    return memo_.try_emplace(I.bits(), std::move(computed)).first->second;
}

std::size_t LocalCohomology::h(int i, IndexSet I) const {
    if (i < 0) return 0;
    const auto& d = dims(I);
    return static_cast<std::size_t>(i) < d.size() ? d[static_cast<std::size_t>(i)] : 0;
}

std::vector<std::size_t> LocalCohomology::sheaf_dims(IndexSet I) const {
    const std::size_t r = num_gens();
    std::vector<std::size_t> out(r + 1, 0);
    // 0 -> H^0_B -> S -> H^0_* -> H^1_B -> 0, read off at one fine degree.
    const long h0 = static_cast<long>(sections(I)) - static_cast<long>(h(0, I)) + static_cast<long>(h(1, I));
    if (h0 < 0) throw CrossCheckFailure("negative global section count");
    out[0] = static_cast<std::size_t>(h0);
    for (std::size_t i = 1; i <= r; ++i) out[i] = h(static_cast<int>(i) + 1, I);
    return out;
}

SigmaTable sigma_direct(const LocalCohomology& lc) {
    const std::size_t n = lc.ideal().num_vars();
    const std::size_t count = std::size_t{1} << n;
    parallel_for(count, [&](std::size_t k) { lc.dims(IndexSet(static_cast<std::uint32_t>(k))); });
    SigmaTable t;
    t.source = SigmaTable::Source::Direct;
    t.n = n;
    for (std::size_t k = 0; k < count; ++k) {
        const IndexSet I(static_cast<std::uint32_t>(k));
        const auto& d = lc.dims(I);
        for (std::size_t i = 0; i < d.size(); ++i)
            if (d[i] != 0) t.insert(static_cast<int>(i), I, d[i]);
    }
    return t;
}

SigmaTable sigma_direct(const MonomialIdeal& b, Characteristic ch) {
    if (b.is_zero()) throw InvalidInput("sigma_direct: the ideal must be nonzero");
    return sigma_direct(LocalCohomology(b, ch));
}

SigmaTable sigma_sheaf(const LocalCohomology& lc) {
    const std::size_t n = lc.ideal().num_vars();
    const std::size_t count = std::size_t{1} << n;
    std::vector<std::vector<std::size_t>> dims(count);
    parallel_for(count, [&](std::size_t k) { dims[k] = lc.sheaf_dims(IndexSet(static_cast<std::uint32_t>(k))); });
    SigmaTable t;
    t.source = SigmaTable::Source::Sheaf;
    t.n = n;
    for (std::size_t k = 0; k < count; ++k)
        for (std::size_t i = 0; i < dims[k].size(); ++i)
            if (dims[k][i] != 0) t.insert(static_cast<int>(i), IndexSet(static_cast<std::uint32_t>(k)), dims[k][i]);
    return t;
}

}  // namespace toricoh
