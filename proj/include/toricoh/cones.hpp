#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "toricoh/common.hpp"
#include "toricoh/grading.hpp"
#include "toricoh/lp.hpp"

namespace toricoh {

/// The region being enumerated was not bounded.
class UnboundedRegion : public Error {
public:
    using Error::Error;
};

/// A product of (half-)intervals: lower[i] <= x_i <= upper[i], either side optional.
struct OrthantRegion {
    std::vector<std::optional<long>> lower;
    std::vector<std::optional<long>> upper;

    /// C_I: x_i <= 0 on I, x_i >= 0 elsewhere.
    static OrthantRegion closed_orthant(IndexSet I, std::size_t n);
    /// L_I = p_I + C_I: x_i <= -1 on I, x_i >= 0 elsewhere.
    static OrthantRegion strict_orthant(IndexSet I, std::size_t n);
    /// -l e_j + L_I.
    static OrthantRegion shifted_orthant(IndexSet I, std::size_t n, std::size_t j, long ell);

    /// Adds x_i >= -ell on every coordinate.
    OrthantRegion floored(long ell) const;

    std::size_t size() const { return lower.size(); }
    bool contains(const FineDegree& x) const;
};

/// Lattice points of (base + M) inside a region, with M from the grading.
/// Throws UnboundedRegion if the intersection is not bounded.
std::vector<FineDegree> enumerate_points(const Grading& g, const FineDegree& base, const OrthantRegion& region);
std::size_t count_points(const Grading& g, const FineDegree& base, const OrthantRegion& region);
void for_each_point(const Grading& g, const FineDegree& base, const OrthantRegion& region,
                    const std::function<void(const FineDegree&)>& visit);

/// Exact integer minimum of x_j over the lattice points; nullopt if there are none.
std::optional<long> min_coordinate(const Grading& g, const FineDegree& base, const OrthantRegion& region, std::size_t j);

/// (p + M) intersected with L_I (or -l e_j + L_I), for p representing delta.
std::vector<FineDegree> enumerate_fiber_orthant(const Grading& g, const CoarseDegree& delta, IndexSet I);

struct FinitenessResult {
    bool finite = true;
    /// A nonzero point of M in C_I when finiteness fails.
    std::optional<FineDegree> certificate;
};

/// Decides M n C_I = 0 by exact LP.
FinitenessResult finiteness_check(const Grading& g, IndexSet I);

/// Some nonzero primitive h with <h, v_i> >= 0 for i in I and <= 0 otherwise,
/// where v_i are the rows of rays (n x d).
std::optional<std::vector<long>> separating_hyperplane(const IntMatrix& rays, IndexSet I);

/// A rational functional y with y . g >= 1 on every nonzero generator g of
/// phi(C_I) (free part); its existence certifies the cone is pointed.
std::optional<QVector> pointedness_witness(const Grading& g, IndexSet I);

/// f_{I,j}(delta) = max(0, -min x_j) over (p + M) n L_I; 0 if the fiber misses L_I.
long f_bound(const Grading& g, IndexSet I, std::size_t j, const CoarseDegree& delta);

/// Inequalities h . y <= 0 cutting out the real cone phi(C_I) in D (x) R.
std::vector<QVector> image_cone_facets(const Grading& g, IndexSet I);

/// The least m >= 0 with delta outside the real cone phi(p_I - m e_j + C_I).
/// Never below f_bound; equal to it whenever the cone's lattice points all
/// come from C_I. Requires a torsion-free D.
long f_bound_facets(const Grading& g, const std::vector<QVector>& facets, IndexSet I, std::size_t j,
                    const CoarseDegree& delta);

/// ceil(d^2 max|p_i| Q_1 Q_{d-1} / q_d), minors taken from rho (or from the
/// lattice basis when the grading was given by phi alone).
long crude_bound(const Grading& g, const FineDegree& p);

}  // namespace toricoh
