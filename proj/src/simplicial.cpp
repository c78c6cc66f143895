#include "toricoh/simplicial.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace toricoh {

int coboundary_sign(IndexSet J, std::size_t j) {
    const std::uint32_t below = J.bits() & ((std::uint32_t{1} << j) - 1);
    return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

LabeledComplex::LabeledComplex(std::size_t ground_size, std::vector<IndexSet> family)
    : ground_size_(ground_size), family_(std::move(family)), by_degree_(ground_size + 1) {
    if (ground_size_ > IndexSet::kMaxSize) throw InvalidInput("labeled complex: ground set too large");
    const IndexSet ground = IndexSet::full(ground_size_);
    std::sort(family_.begin(), family_.end(), [](IndexSet a, IndexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : lex_less(a, b);
    });
    family_.erase(std::unique(family_.begin(), family_.end()), family_.end());
    std::unordered_set<std::uint32_t> members;
    for (std::size_t k = 0; k < family_.size(); ++k) {
        if (!family_[k].is_subset_of(ground)) throw InvalidInput("labeled complex: label outside the ground set");
        by_degree_[static_cast<std::size_t>(family_[k].size())].push_back(k);
        members.insert(family_[k].bits());
    }
    // d o d vanishes iff no square J < J+a, J+b < J+a+b has exactly one middle term.
    for (IndexSet J : family_) {
        const auto outside = J.complement(ground_size_).elements();
        for (std::size_t x = 0; x < outside.size(); ++x)
            for (std::size_t y = x + 1; y < outside.size(); ++y) {
                IndexSet top = J;
                top.insert(outside[x]);
                top.insert(outside[y]);
                if (!members.count(top.bits())) continue;
                IndexSet left = J;
                left.insert(outside[x]);
                IndexSet right = J;
                right.insert(outside[y]);
                if (members.count(left.bits()) != members.count(right.bits()))
                    throw InvalidInput("labeled complex: family is not convex, differential does not square to zero");
            }
    }
}

std::vector<std::size_t> LabeledComplex::chain_dims() const {
    std::vector<std::size_t> dims(ground_size_ + 1);
    for (std::size_t k = 0; k <= ground_size_; ++k) dims[k] = by_degree_[k].size();
    return dims;
}

SparseMatrix LabeledComplex::coboundary(std::size_t k) const {
    SparseMatrix m;
    if (k >= ground_size_) {
        m.rows = 0;
        m.cols = k <= ground_size_ ? by_degree_[k].size() : 0;
        return m;
    }
    const auto& sources = by_degree_[k];
    const auto& targets = by_degree_[k + 1];
    m.rows = targets.size();
    m.cols = sources.size();
    m.entries.resize(targets.size());
    std::unordered_map<std::uint32_t, std::uint32_t> column_of;
    column_of.reserve(sources.size());
    for (std::size_t c = 0; c < sources.size(); ++c) column_of.emplace(family_[sources[c]].bits(), static_cast<std::uint32_t>(c));
    for (std::size_t r = 0; r < targets.size(); ++r) {
        const IndexSet K = family_[targets[r]];
        auto& row = m.entries[r];
        for (auto j : K.elements()) {
            IndexSet J = K;
            J.erase(j);
            auto it = column_of.find(J.bits());
            if (it != column_of.end()) row.emplace_back(it->second, coboundary_sign(J, j));
        }
        std::sort(row.begin(), row.end());
    }
    return m;
}

std::vector<std::size_t> LabeledComplex::cohomology_dims(Characteristic ch) const {
    std::vector<std::size_t> rank(ground_size_ + 1, 0);
    for (std::size_t k = 0; k < ground_size_; ++k) {
        if (by_degree_[k].empty() || by_degree_[k + 1].empty()) continue;
        rank[k] = rank_over_field(coboundary(k), ch);
    }
    std::vector<std::size_t> dims(ground_size_ + 1);
    for (std::size_t k = 0; k <= ground_size_; ++k) {
        const std::size_t incoming = k == 0 ? 0 : rank[k - 1];
        dims[k] = by_degree_[k].size() - rank[k] - incoming;
    }
    return dims;
}

bool LabeledComplex::verify_square_zero() const {
    for (std::size_t k = 0; k + 1 < ground_size_; ++k) {
        const SparseMatrix first = coboundary(k);
        const SparseMatrix second = coboundary(k + 1);
        for (const auto& row : second.entries) {
            std::map<std::uint32_t, long> acc;
            for (const auto& [mid, v] : row)
                for (const auto& [c, w] : first.entries[mid]) acc[c] += static_cast<long>(v) * w;
            for (const auto& [c, v] : acc)
                if (v != 0) return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<IndexSet> facets, bool) : n_(n), facets_(std::move(facets)) {}

SimplicialComplex SimplicialComplex::from_facets(std::size_t n, std::vector<IndexSet> facets) {
    const IndexSet ground = IndexSet::full(n);
    for (IndexSet f : facets)
        if (!f.is_subset_of(ground)) throw InvalidInput("simplicial complex: vertex outside the vertex set");
    std::sort(facets.begin(), facets.end(), lex_less);
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    std::vector<IndexSet> maximal;
    for (IndexSet f : facets) {
        bool dominated = false;
        for (IndexSet g : facets)
            if (g != f && f.is_subset_of(g)) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(f);
    }
    return SimplicialComplex(n, std::move(maximal), true);
}

bool SimplicialComplex::contains(IndexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [face](IndexSet f) { return face.is_subset_of(f); });
}

std::vector<IndexSet> SimplicialComplex::faces() const {
    std::unordered_set<std::uint32_t> seen;
    for (IndexSet f : facets_) {
        // Walk all submasks of f.
        const std::uint32_t full = f.bits();
        std::uint32_t s = full;
        for (;;) {
            seen.insert(s);
            if (s == 0) break;
            s = (s - 1) & full;
        }
    }
    std::vector<IndexSet> out;
    out.reserve(seen.size());
    for (auto b : seen) out.emplace_back(b);
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<std::size_t> SimplicialComplex::reduced_cohomology_dims(Characteristic ch) const {
    if (is_void()) return std::vector<std::size_t>(n_ + 1, 0);
    return LabeledComplex(n_, faces()).cohomology_dims(ch);
}

}  // namespace toricoh
