#pragma once

#include <cstddef>
#include <map>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "toricoh/common.hpp"
#include "toricoh/monomial_ideal.hpp"

namespace toricoh {

/// h_i(I) = dim H^i_B(S)_p for every p with neg(p) = I, from the Cech complex
/// on the generators restricted to {J : I subset supp(m_J)}. Entry i is
/// cohomological degree i, for i = 0..r.
///
/// At I = emptyset the full augmented complex is exact, so every entry is 0;
/// the copy of S_p living there is reported separately as "sections".
std::vector<std::size_t> restricted_cech_dims(const MonomialIdeal& b, IndexSet I, Characteristic ch = Characteristic{});

/// Same, for an explicit (possibly redundant or non-square-free) generator list.
std::vector<std::size_t> restricted_cech_dims(const std::vector<Exponent>& gens, IndexSet I,
                                              Characteristic ch = Characteristic{});

/// Evaluates the Cech complex at one fine degree p, deciding for each J whether
/// x^p survives in the localization S_{m_J}. Used to check that the answer
/// depends on neg(p) alone.
std::vector<std::size_t> cech_dims_at(const std::vector<Exponent>& gens, const FineDegree& p,
                                      Characteristic ch = Characteristic{});

/// Cohomology of the complex with the J = emptyset term removed; entry i is
/// H^i of that complex, whose degree-i basis is {J : |J| = i + 1}.
std::vector<std::size_t> shifted_cech_dims(const std::vector<Exponent>& gens, IndexSet I,
                                           Characteristic ch = Characteristic{});

struct SigmaEntry {
    IndexSet I;
    std::size_t dim = 0;
    friend bool operator==(const SigmaEntry&, const SigmaEntry&) = default;
};

/// The sets I with nonzero cohomology at p_I, by cohomological index.
struct SigmaTable {
    enum class Source { Dual, Direct, Sheaf, Nerve, Surface };

    Source source = Source::Direct;
    std::size_t n = 0;
    /// Only nonempty rows are stored; entries sorted lexicographically by I.
    std::map<int, std::vector<SigmaEntry>> rows;

    void insert(int i, IndexSet I, std::size_t dim);
    bool contains(int i, IndexSet I) const;
    std::vector<IndexSet> sets(int i) const;
    /// Indices and sets agree; dimensions are compared when both are recorded.
    bool same_entries(const SigmaTable& other) const;
    /// Every I that appears in some row.
    std::vector<IndexSet> all_sets() const;
};

std::string to_string(SigmaTable::Source s);

/// Memoized h_i(I) for a fixed ideal and field; safe to query from many threads.
class LocalCohomology {
public:
    LocalCohomology(MonomialIdeal b, Characteristic ch = Characteristic{});

    const MonomialIdeal& ideal() const { return b_; }
    Characteristic characteristic() const { return ch_; }
    std::size_t num_gens() const { return b_.num_gens(); }

    /// h_0(I)..h_r(I).
    const std::vector<std::size_t>& dims(IndexSet I) const;
    std::size_t h(int i, IndexSet I) const;

    /// dim S_p for neg(p) = I: 1 at I = emptyset, else 0.
    static std::size_t sections(IndexSet I) { return I.empty() ? 1 : 0; }

    /// Sheaf cohomology per fine degree, entries i = 0..r:
    /// h^i = h_{i+1}(I) for i >= 1 and h^0 = sections - h_0 + h_1.
    std::vector<std::size_t> sheaf_dims(IndexSet I) const;

private:
    MonomialIdeal b_;
    Characteristic ch_;
    mutable std::shared_mutex mutex_;
    mutable std::unordered_map<std::uint32_t, std::vector<std::size_t>> memo_;
};

/// Sigma_i for every i by running the restricted complex on all 2^n sets.
SigmaTable sigma_direct(const LocalCohomology& lc);
SigmaTable sigma_direct(const MonomialIdeal& b, Characteristic ch = Characteristic{});

/// Sigma^[1]_i from the sheaf dimensions (entry I = emptyset included in row 0).
SigmaTable sigma_sheaf(const LocalCohomology& lc);

}  // namespace toricoh
