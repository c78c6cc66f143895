#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricoh/common.hpp"
#include "toricoh/exact_linalg.hpp"

namespace toricoh {

/// An element of D = Z^r + Z/t_1 + ... + Z/t_s.
struct CoarseDegree {
    std::vector<long> free;
    std::vector<long> torsion;  ///< residues in [0, t_k)

    friend bool operator==(const CoarseDegree&, const CoarseDegree&) = default;
    friend auto operator<=>(const CoarseDegree&, const CoarseDegree&) = default;
};

/// Componentwise; torsion residues are left unreduced (see Grading::normalize).
CoarseDegree operator+(const CoarseDegree& a, const CoarseDegree& b);
CoarseDegree operator-(const CoarseDegree& a, const CoarseDegree& b);

/// The exact sequence 0 -> M -> Z^n -> D -> 0.
///
/// M is always the full kernel of phi. When phi comes from a matrix rho whose
/// column span is not saturated, D picks up torsion and saturated() is false.
class Grading {
public:
    /// D = coker(rho) for an n x d matrix of rank d, in Smith coordinates.
    static Grading from_rho(const IntMatrix& rho);

    /// User-chosen coordinates. phi_free is r x n; each torsion_rows[k] is read
    /// modulo torsion[k]. If rho is given, ker(phi) must equal its column span.
    static Grading from_phi(const IntMatrix& phi_free, const IntMatrix& phi_torsion, const std::vector<long>& torsion,
                            const std::optional<IntMatrix>& rho = std::nullopt);

    std::size_t n() const { return n_; }
    std::size_t free_rank() const { return phi_free_.rows(); }
    std::size_t lattice_rank() const { return lattice_.cols(); }
    const std::vector<long>& torsion() const { return torsion_; }
    bool saturated() const { return torsion_.empty(); }

    const IntMatrix& phi_free() const { return phi_free_; }
    const IntMatrix& phi_torsion() const { return phi_torsion_; }
    const std::optional<IntMatrix>& rho() const { return rho_; }

    /// Basis of M as the columns of an n x m matrix.
    const IntMatrix& lattice() const { return lattice_; }

    CoarseDegree degree(const FineDegree& p) const;

    /// The Smith-form solution of phi(x) = delta; nullopt if delta is not a
    /// valid element of D.
    std::optional<FineDegree> fiber_representative(const CoarseDegree& delta) const;

    /// Whether delta has the right shape and reduced residues.
    bool is_valid(const CoarseDegree& delta) const;

    /// Reduces torsion residues into [0, t_k).
    CoarseDegree normalize(CoarseDegree delta) const;

    /// Parses a flat list: free coordinates followed by torsion residues.
    CoarseDegree make_degree(const std::vector<long>& flat) const;

private:
    Grading() = default;
    void finish();
    IntMatrix extended_phi() const;

    std::size_t n_ = 0;
    IntMatrix phi_free_;
    IntMatrix phi_torsion_;
    std::vector<long> torsion_;
    std::optional<IntMatrix> rho_;
    IntMatrix lattice_;
};

}  // namespace toricoh
