#include "toricoh/toric_fan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "toricoh/cones.hpp"
#include "toricoh/lp.hpp"

namespace toricoh {

Fan::Fan(std::size_t dim, std::vector<std::vector<long>> rays, std::vector<IndexSet> max_cones)
    : dim_(dim), rays_(std::move(rays)), max_cones_(std::move(max_cones)) {
    if (dim_ == 0) throw InvalidInput("fan: dimension must be positive");
    if (rays_.empty()) throw InvalidInput("fan: no rays");
    if (rays_.size() > IndexSet::kMaxSize) throw InvalidInput("fan: at most 32 rays are supported");
    for (std::size_t i = 0; i < rays_.size(); ++i) {
        const auto& v = rays_[i];
        if (v.size() != dim_) throw InvalidInput("fan: ray " + std::to_string(i + 1) + " has the wrong length");
        long g = 0;
        for (long x : v) g = std::gcd(g, x);
        if (g != 1) throw InvalidInput("fan: ray " + std::to_string(i + 1) + " is not primitive");
        for (std::size_t k = 0; k < i; ++k)
            if (rays_[k] == v) throw InvalidInput("fan: rays " + std::to_string(k + 1) + " and " + std::to_string(i + 1) + " coincide");
    }
    if (rank_over_field(ray_matrix(), Characteristic{}) != dim_)
        throw InvalidInput("fan: rays do not span the ambient space");
    if (max_cones_.empty()) throw InvalidInput("fan: no maximal cones");
    IndexSet covered;
    for (IndexSet c : max_cones_) {
        if (c.empty()) throw InvalidInput("fan: empty maximal cone");
        if (!c.is_subset_of(IndexSet::full(rays_.size()))) throw InvalidInput("fan: cone uses an unknown ray");
        covered = covered | c;
    }
    if (covered != IndexSet::full(rays_.size())) throw InvalidInput("fan: some ray lies in no maximal cone");
    for (std::size_t a = 0; a < max_cones_.size(); ++a)
        for (std::size_t b = 0; b < max_cones_.size(); ++b)
            if (a != b && max_cones_[a].is_subset_of(max_cones_[b]))
                throw InvalidInput("fan: listed cone " + std::to_string(a + 1) + " is not maximal");
}

IntMatrix Fan::ray_matrix() const { return IntMatrix::from_rows(rays_, dim_); }

std::optional<std::string> Fan::check_cone_intersections() const {
    const IntMatrix rays = ray_matrix();
    auto simplicial = [&](IndexSet c) {
        std::vector<std::size_t> idx = c.elements();
        return rank_over_field(rays.select_rows(idx), Characteristic{}) == idx.size();
    };
    for (std::size_t a = 0; a < max_cones_.size(); ++a)
        for (std::size_t b = a + 1; b < max_cones_.size(); ++b) {
            const IndexSet s = max_cones_[a];
            const IndexSet t = max_cones_[b];
            if (!simplicial(s) || !simplicial(t)) continue;
            // Look for x in both cones that uses a ray outside the common face.
            const auto es = s.elements();
            const auto et = t.elements();
            const std::size_t vars = es.size() + et.size();
            std::vector<LinearConstraint> cons;
            for (std::size_t k = 0; k < dim_; ++k) {
                QVector a(vars, 0);
                for (std::size_t u = 0; u < es.size(); ++u) a[u] = rays_[es[u]][k];
                for (std::size_t u = 0; u < et.size(); ++u) a[es.size() + u] = -rays_[et[u]][k];
                cons.push_back({a, LinearConstraint::Sense::Equal, 0});
            }
            QVector extra(vars, 0);
            for (std::size_t u = 0; u < vars; ++u) {
                QVector a(vars, 0);
                a[u] = 1;
                cons.push_back({a, LinearConstraint::Sense::GreaterEq, 0});
                const std::size_t ray = u < es.size() ? es[u] : et[u - es.size()];
                if (!(s.contains(ray) && t.contains(ray))) extra[u] = 1;
            }
            cons.push_back({extra, LinearConstraint::Sense::GreaterEq, 1});
            if (lp_feasible_point(vars, cons).status == LpStatus::Optimal)
                return "cones " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " overlap beyond a common face";
        }
    return std::nullopt;
}

ToricData cox_data(const Fan& fan, const std::optional<IntMatrix>& phi) {
    const IntMatrix rho = fan.ray_matrix();
    Grading g = phi ? Grading::from_phi(*phi, IntMatrix(0, rho.rows()), {}, rho) : Grading::from_rho(rho);
    const std::size_t n = fan.num_rays();
    std::vector<IndexSet> complements;
    for (IndexSet c : fan.max_cones()) complements.push_back(c.complement(n));
    MonomialIdeal b = MonomialIdeal::from_supports(n, complements);
    if (b.num_gens() != complements.size())
        throw InvalidInput("fan: maximal cones do not match the minimal generators of the irrelevant ideal");
    std::vector<std::size_t> cone_of(b.num_gens());
    const auto supports = b.supports();
    for (std::size_t t = 0; t < supports.size(); ++t)
        cone_of[t] = static_cast<std::size_t>(std::find(complements.begin(), complements.end(), supports[t]) - complements.begin());
    return ToricData{fan, std::move(g), std::move(b), std::move(cone_of)};
}

SimplicialComplex nerve_complex(const ToricData& x, IndexSet I) {
    const auto& cones = x.fan.max_cones();
    if (I.empty()) return SimplicialComplex::void_complex(cones.size());
    std::vector<IndexSet> facets;
    for (auto i : I.elements()) {
        IndexSet containing;
        for (std::size_t c = 0; c < cones.size(); ++c)
            if (cones[c].contains(i)) containing.insert(c);
        facets.push_back(containing);
    }
    return SimplicialComplex::from_facets(cones.size(), std::move(facets));
}

std::vector<std::size_t> nerve_cohomology_dims(const ToricData& x, IndexSet I, Characteristic ch) {
    auto dims = nerve_complex(x, I).reduced_cohomology_dims(ch);
    dims[0] = I.empty() ? 1 : 0;
    return dims;
}

SigmaTable sigma_nerve(const ToricData& x, Characteristic ch) {
    SigmaTable t;
    t.source = SigmaTable::Source::Nerve;
    t.n = x.fan.num_rays();
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << t.n); ++bits) {
        const auto dims = nerve_cohomology_dims(x, IndexSet(bits), ch);
        for (std::size_t i = 0; i < dims.size(); ++i)
            if (dims[i] != 0) t.insert(static_cast<int>(i), IndexSet(bits), dims[i]);
    }
    return t;
}

namespace {

void require_surface(const Fan& fan) {
    if (fan.dim() != 2) throw InvalidInput("operation needs a two-dimensional fan");
}

// Upper half (angle in [0, pi)) first, then by cross product.
bool angle_less(const std::vector<long>& a, const std::vector<long>& b) {
    auto upper = [](const std::vector<long>& v) { return v[1] > 0 || (v[1] == 0 && v[0] > 0); };
    const bool ua = upper(a);
    const bool ub = upper(b);
    if (ua != ub) return ua;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

}  // namespace

bool is_complete_surface(const Fan& fan) {
    require_surface(fan);
    const std::size_t n = fan.num_rays();
    if (n < 3) return false;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return angle_less(fan.rays()[a], fan.rays()[b]); });
    std::set<std::uint32_t> expected;
    for (std::size_t k = 0; k < n; ++k) {
        const auto& u = fan.rays()[order[k]];
        const auto& v = fan.rays()[order[(k + 1) % n]];
        if (u[0] * v[1] - u[1] * v[0] <= 0) return false;
        expected.insert(IndexSet{order[k], order[(k + 1) % n]}.bits());
    }
    std::set<std::uint32_t> actual;
    for (IndexSet c : fan.max_cones()) actual.insert(c.bits());
    return actual == expected;
}

SigmaTable surface_sigma(const Fan& fan) {
    require_surface(fan);
    const std::size_t n = fan.num_rays();
    SigmaTable t;
    t.source = SigmaTable::Source::Surface;
    t.n = n;
    t.insert(0, IndexSet{}, 1);
    if (is_complete_surface(fan)) t.insert(2, IndexSet::full(n), 1);
    for (std::uint32_t bits = 1; bits < (std::uint32_t{1} << n); ++bits) {
        const IndexSet I(bits);
        // Components of the rays of I, joined when a maximal cone holds both.
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        for (IndexSet c : fan.max_cones()) {
            const auto inside = (c & I).elements();
            for (std::size_t k = 1; k < inside.size(); ++k) parent[find(inside[k])] = find(inside[0]);
        }
        std::size_t components = 0;
        for (auto i : I.elements())
            if (find(i) == i) ++components;
        if (components >= 2) t.insert(1, I, components - 1);
    }
    return t;
}

std::optional<std::vector<long>> separating_hyperplane(const Fan& fan, IndexSet I) {
    return separating_hyperplane(fan.ray_matrix(), I);
}

}  // namespace toricoh
