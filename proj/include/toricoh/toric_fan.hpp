#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toricoh/cech.hpp"
#include "toricoh/common.hpp"
#include "toricoh/grading.hpp"
#include "toricoh/monomial_ideal.hpp"
#include "toricoh/simplicial.hpp"

namespace toricoh {

/// Rays (primitive vectors in Z^d) and maximal cones (0-based ray indices).
/// Construction validates the rays and checks that each one lies in some
/// maximal cone; the fan axioms themselves are trusted.
class Fan {
public:
    Fan(std::size_t dim, std::vector<std::vector<long>> rays, std::vector<IndexSet> max_cones);

    std::size_t dim() const { return dim_; }
    std::size_t num_rays() const { return rays_.size(); }
    const std::vector<std::vector<long>>& rays() const { return rays_; }
    const std::vector<IndexSet>& max_cones() const { return max_cones_; }

    /// n x d matrix whose rows are the rays.
    IntMatrix ray_matrix() const;

    /// Pairwise check that two maximal cones meet in a common face, for d <= 3
    /// and simplicial cones; returns a description of the first violation.
    std::optional<std::string> check_cone_intersections() const;

private:
    std::size_t dim_;
    std::vector<std::vector<long>> rays_;
    std::vector<IndexSet> max_cones_;
};

/// Cox data: the grading from the ray matrix and the irrelevant ideal.
struct ToricData {
    Fan fan;
    Grading grading;
    MonomialIdeal irrelevant;
    /// irrelevant.gens()[t] corresponds to max_cones()[cone_of_generator[t]].
    std::vector<std::size_t> cone_of_generator;
};

/// With phi given, its kernel must be the span of the rays.
ToricData cox_data(const Fan& fan, const std::optional<IntMatrix>& phi = std::nullopt);

/// T_I on the maximal cones: J is a face iff some ray of I lies in every cone of J.
/// The void complex for I = emptyset.
SimplicialComplex nerve_complex(const ToricData& x, IndexSet I);

/// h^0..h^r with h^i = dim H~^{i-1}(T_I) for i >= 1 and h^0 = [I = emptyset].
std::vector<std::size_t> nerve_cohomology_dims(const ToricData& x, IndexSet I, Characteristic ch = Characteristic{});

/// Sigma^[1]_i from the nerve (same shape as sigma_sheaf).
SigmaTable sigma_nerve(const ToricData& x, Characteristic ch = Characteristic{});

bool is_complete_surface(const Fan& fan);

/// Sigma^[1] of a surface from the combinatorics of the fan alone.
SigmaTable surface_sigma(const Fan& fan);

/// Condition (e) for a fan: a nonzero h >= 0 on the rays of I and <= 0 on the others.
std::optional<std::vector<long>> separating_hyperplane(const Fan& fan, IndexSet I);

}  // namespace toricoh
