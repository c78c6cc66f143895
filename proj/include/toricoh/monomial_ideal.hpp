#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "toricoh/common.hpp"

namespace toricoh {

using Exponent = std::vector<long>;

/// Monomial ideal in k[x_1..x_n] given by exponent vectors. Generators are
/// kept divisibility-minimal and sorted lexicographically.
class MonomialIdeal {
public:
    /// Minimalizes gens. An empty list is the zero ideal.
    MonomialIdeal(std::size_t n, std::vector<Exponent> gens);

    static MonomialIdeal from_supports(std::size_t n, const std::vector<IndexSet>& supports);
    static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {Exponent(n, 0)}); }

    std::size_t num_vars() const { return n_; }
    const std::vector<Exponent>& gens() const { return gens_; }
    std::size_t num_gens() const { return gens_.size(); }

    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_squarefree() const { return squarefree_; }

    std::vector<IndexSet> supports() const;

    /// x^a in the ideal; false for exponents with a negative entry.
    bool contains(const Exponent& a) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
    std::size_t n_;
    std::vector<Exponent> gens_;
    bool squarefree_ = true;
};

/// Divisibility-minimal generators, sorted lexicographically.
std::vector<Exponent> minimalize(std::vector<Exponent> gens);

/// B^[l]: the ideal generated by the l-th powers of the generators.
MonomialIdeal frobenius_power(const MonomialIdeal& b, long ell);

/// Componentwise maximum of the exponents of the chosen generators.
Exponent lcm_of(const MonomialIdeal& ideal, IndexSet chosen);

/// Minimal vertex covers of the hypergraph of generator supports.
std::vector<IndexSet> minimal_vertex_covers(const MonomialIdeal& b);

/// Alexander dual of a square-free ideal, generated by x^F over minimal covers F.
MonomialIdeal alexander_dual(const MonomialIdeal& b);

/// dim Tor_j(S/I, k)_p for j = 0..n via the degree-p Koszul strand.
std::vector<std::size_t> tor_dims(const MonomialIdeal& ideal, const Exponent& p, Characteristic ch = Characteristic{});

/// Nonzero multigraded Betti numbers of S/I: degree -> dims by homological index.
using BettiSupport = std::map<Exponent, std::vector<std::size_t>>;

/// Square-free ideals are scanned over {0,1}^n; other ideals over the lcm lattice.
BettiSupport betti_support(const MonomialIdeal& ideal, Characteristic ch = Characteristic{});

}  // namespace toricoh
