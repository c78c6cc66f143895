#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "toricoh/cech.hpp"
#include "toricoh/cones.hpp"
#include "toricoh/grading.hpp"
#include "toricoh/monomial_ideal.hpp"
#include "toricoh/toric_fan.hpp"

namespace toricoh {

/// Some I in a Sigma table has M n C_I != 0, so the region L_I meets fibers
/// in infinitely many points.
class FinitenessViolation : public Error {
public:
    FinitenessViolation(IndexSet I, FineDegree certificate);
    IndexSet set() const { return I_; }
    const FineDegree& certificate() const { return certificate_; }

private:
    IndexSet I_;
    FineDegree certificate_;
};

/// Sigma via Alexander duality: Tor_i(S/B*)_p != 0 at square-free p puts
/// supp(p) into Sigma_{|p|-i+1}. The unit class Tor_0 at p = 0 is skipped.
SigmaTable sigma_dual(const LocalCohomology& lc);
SigmaTable sigma_dual(const MonomialIdeal& b, Characteristic ch = Characteristic{});

/// Which cohomology a degree index refers to: H^i_B(S) or H^i_*(O_X).
enum class Indexing { Local, Sheaf };

struct BettiEntry {
    int j = 0;
    CoarseDegree alpha;
    std::size_t mult = 1;
    friend bool operator==(const BettiEntry&, const BettiEntry&) = default;
};

/// Graded Betti numbers, sorted by (j, alpha).
using BettiTable = std::vector<BettiEntry>;

/// A finitely generated graded module, known through its Betti degrees.
struct ModuleSpec {
    enum class Kind { Free, MonomialQuotient, UserBetti };

    Kind kind = Kind::Free;
    /// Free: summands S(-alpha). MonomialQuotient: twists of S/J (default {0}).
    std::vector<CoarseDegree> shifts;
    std::optional<MonomialIdeal> quotient;
    BettiTable betti;

    static ModuleSpec free_module(std::vector<CoarseDegree> shifts);
    static ModuleSpec monomial_quotient(MonomialIdeal j, std::vector<CoarseDegree> shifts);
    static ModuleSpec user_betti(BettiTable table);
};

struct BoundTerm {
    IndexSet I;
    std::size_t j = 0;
    long f = 0;
};

struct BoundResult {
    long value = 0;
    std::vector<BoundTerm> terms;
};

struct ModuleBoundTerm {
    int j = 0;
    CoarseDegree alpha;
    long value = 0;
};

struct ModuleBound {
    long value = 0;
    BettiTable betti;
    std::vector<ModuleBoundTerm> terms;
};

/// A graded ideal over a field, with the Sigma tables and the finiteness
/// verdicts cached. All queries are const and thread-safe.
class CohomologyEngine {
public:
    CohomologyEngine(Grading g, MonomialIdeal b, Characteristic ch = Characteristic{});
    explicit CohomologyEngine(const ToricData& x, Characteristic ch = Characteristic{});

    const Grading& grading() const { return grading_; }
    const MonomialIdeal& ideal() const { return local_->ideal(); }
    const LocalCohomology& local() const { return *local_; }
    Characteristic characteristic() const { return local_->characteristic(); }

    /// Sigma_i from the dual path, cached.
    const SigmaTable& sigma_local() const;
    /// Sigma^[1]_i, cached.
    const SigmaTable& sigma_sheaf() const;
    const SigmaTable& sigma(Indexing ix) const { return ix == Indexing::Local ? sigma_local() : sigma_sheaf(); }

    const FinitenessResult& finiteness(IndexSet I) const;
    /// Throws FinitenessViolation for the first I in row i that fails.
    void require_finite(Indexing ix, int i) const;

    /// dim H^i_B(S)_delta or dim H^i(O_X(delta)).
    std::size_t dim(Indexing ix, int i, const CoarseDegree& delta) const;

    /// Local: dim Ext^i(S/B^[l], S)_delta. Sheaf: the same degree of the
    /// truncation that converges to H^i_*(O_X), i.e. Ext^{i+1} for i >= 1 and
    /// Hom(B^[l], S) for i = 0.
    std::size_t truncated_dim(Indexing ix, int i, const CoarseDegree& delta, long ell) const;

    /// Least l with truncated_dim == dim, with the (I, j) breakdown.
    BoundResult bound(Indexing ix, int i, const CoarseDegree& delta) const;

    /// max over shifts alpha of bound(i, delta - alpha).
    long bound_free(Indexing ix, int i, const CoarseDegree& delta, const std::vector<CoarseDegree>& shifts) const;

    /// Coarse Betti table of a module; with taylor = true a monomial quotient
    /// uses its Taylor complex (not minimal) instead of the minimal Betti numbers.
    BettiTable betti_table(const ModuleSpec& p, bool taylor = false) const;

    /// Bound from a free resolution: f_i(delta - alpha) for j = 0 and
    /// max(f_{i+j}, f_{i+j-1})(delta - alpha) for j >= 1.
    ModuleBound bound_module(Indexing ix, int i, const CoarseDegree& delta, const BettiTable& betti) const;
    ModuleBound bound_module(Indexing ix, int i, const CoarseDegree& delta, const ModuleSpec& p) const;

    /// ceil(d^2 max|p_i| Q_1 Q_{d-1} / q_d) at the canonical representative of delta.
    long crude_bound(const CoarseDegree& delta) const;

private:
    FineDegree representative(const CoarseDegree& delta) const;
    std::size_t local_truncated(int i, const CoarseDegree& delta, std::optional<long> ell) const;

    Grading grading_;
    std::unique_ptr<LocalCohomology> local_;
    mutable std::once_flag local_once_;
    mutable std::once_flag sheaf_once_;
    mutable std::unique_ptr<SigmaTable> sigma_local_;
    mutable std::unique_ptr<SigmaTable> sigma_sheaf_;
    mutable std::mutex finiteness_mutex_;
    mutable std::unordered_map<std::uint32_t, FinitenessResult> finiteness_;
};

/// Free-standing forms of the engine queries on local cohomology.
std::size_t hB_dim(const CohomologyEngine& e, int i, const CoarseDegree& delta);
std::size_t sheaf_dim(const CohomologyEngine& e, int i, const CoarseDegree& delta);
std::size_t ext_truncated_dim(const CohomologyEngine& e, int i, const CoarseDegree& delta, long ell);
long bound_S(const CohomologyEngine& e, Indexing ix, int i, const CoarseDegree& delta);

}  // namespace toricoh
