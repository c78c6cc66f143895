#pragma once

#include <cstddef>
#include <vector>

#include "toricoh/common.hpp"
#include "toricoh/exact_linalg.hpp"

namespace toricoh {

/// A cochain complex whose basis in degree k is a family of k-element subsets
/// J of {0..m-1}. The differential sends J to every J u {j} that is also in the
/// family, with sign (-1)^(e-1), e the 1-based position of j in J u {j}.
///
/// Any family that is convex under inclusion gives a complex; the constructor
/// rejects families for which d o d would not vanish.
class LabeledComplex {
public:
    LabeledComplex(std::size_t ground_size, std::vector<IndexSet> family);

    std::size_t ground_size() const { return ground_size_; }
    const std::vector<IndexSet>& family() const { return family_; }

    /// Basis sizes by degree, length ground_size + 1.
    std::vector<std::size_t> chain_dims() const;

    /// Matrix of d^k : C^k -> C^{k+1}; rows are the degree-(k+1) members.
    SparseMatrix coboundary(std::size_t k) const;

    /// dim H^k for k = 0..ground_size.
    std::vector<std::size_t> cohomology_dims(Characteristic ch = Characteristic{}) const;

    /// Multiplies d^{k+1} d^k out explicitly; true iff every product vanishes.
    bool verify_square_zero() const;

private:
    std::size_t ground_size_;
    std::vector<IndexSet> family_;
    std::vector<std::vector<std::size_t>> by_degree_;
};

/// Sign of the face map J -> J u {j}.
int coboundary_sign(IndexSet J, std::size_t j);

/// Finite simplicial complex on vertices {0..n-1}, stored by its facets.
/// The void complex has no faces at all; {emptyset} is the irrelevant complex.
class SimplicialComplex {
public:
    static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n, {}, true); }
    static SimplicialComplex from_facets(std::size_t n, std::vector<IndexSet> facets);

    std::size_t vertex_count() const { return n_; }
    bool is_void() const { return facets_.empty(); }
    const std::vector<IndexSet>& facets() const { return facets_; }
    bool contains(IndexSet face) const;

    /// Every face including the empty face, in lexicographic order.
    std::vector<IndexSet> faces() const;

    /// Entry k is dim H~^{k-1}; length n + 1, so entry 0 is H~^{-1}.
    std::vector<std::size_t> reduced_cohomology_dims(Characteristic ch = Characteristic{}) const;

private:
    SimplicialComplex(std::size_t n, std::vector<IndexSet> facets, bool);

    std::size_t n_;
    std::vector<IndexSet> facets_;
};

}  // namespace toricoh
