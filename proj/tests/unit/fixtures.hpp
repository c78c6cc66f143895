// Library objects for the oracle fan fixtures.
#pragma once

#include "support.hpp"
#include "toricoh/cohomology.hpp"
#include "toricoh/toric_fan.hpp"

namespace fixtures {

inline toricoh::Fan make_fan(const oracle::FanFixture& f) {
    std::vector<toricoh::IndexSet> cones;
    for (const auto& c : f.cones) {
        toricoh::IndexSet s;
        for (long i : c) s.insert(static_cast<std::size_t>(i - 1));
        cones.push_back(s);
    }
    return toricoh::Fan(static_cast<std::size_t>(f.dim), f.rays, cones);
}

inline toricoh::ToricData make_toric(const oracle::FanFixture& f) {
    std::optional<toricoh::IntMatrix> phi;
    if (!f.phi.empty()) phi = toricoh::IntMatrix::from_rows(f.phi);
    return toricoh::cox_data(make_fan(f), phi);
}

}  // namespace fixtures
