#include "toricoh/grading.hpp"

namespace toricoh {

namespace {

long to_long(const mpz_class& v) {
    if (!v.fits_slong_p()) throw InvalidInput("coarse degree exceeds machine integer range");
    return v.get_si();
}

long reduce_mod(long v, long t) {
    long r = v % t;
    return r < 0 ? r + t : r;
}

IntMatrix columns_matrix(const std::vector<IntVector>& cols, std::size_t rows) {
    return IntMatrix::from_columns(cols, rows);
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
    return hermite_rows(a.transpose()) == hermite_rows(b.transpose());
}

CoarseDegree combine(const CoarseDegree& a, const CoarseDegree& b, long sign) {
    if (a.free.size() != b.free.size() || a.torsion.size() != b.torsion.size())
        throw InvalidInput("coarse degrees of different shapes");
    CoarseDegree out = a;
    for (std::size_t k = 0; k < a.free.size(); ++k) out.free[k] += sign * b.free[k];
    for (std::size_t k = 0; k < a.torsion.size(); ++k) out.torsion[k] += sign * b.torsion[k];
    return out;
}

}  // namespace

CoarseDegree operator+(const CoarseDegree& a, const CoarseDegree& b) { return combine(a, b, 1); }
CoarseDegree operator-(const CoarseDegree& a, const CoarseDegree& b) { return combine(a, b, -1); }

CoarseDegree Grading::normalize(CoarseDegree delta) const {
    if (delta.torsion.size() != torsion_.size()) throw InvalidInput("coarse degree has the wrong number of residues");
    for (std::size_t k = 0; k < torsion_.size(); ++k) delta.torsion[k] = reduce_mod(delta.torsion[k], torsion_[k]);
    return delta;
}

IntMatrix Grading::extended_phi() const {
    const std::size_t r = phi_free_.rows();
    const std::size_t s = torsion_.size();
    IntMatrix ext(r + s, n_ + s);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t c = 0; c < n_; ++c) ext(i, c) = phi_free_(i, c);
    for (std::size_t k = 0; k < s; ++k) {
        for (std::size_t c = 0; c < n_; ++c) ext(r + k, c) = phi_torsion_(k, c);
        ext(r + k, n_ + k) = torsion_[k];
    }
    return ext;
}

void Grading::finish() {
    for (long t : torsion_)
        if (t < 2) throw InvalidInput("torsion orders must be at least 2");
    if (phi_free_.cols() != n_ || phi_torsion_.cols() != n_ || phi_torsion_.rows() != torsion_.size())
        throw InvalidInput("grading matrices have inconsistent shapes");
    for (std::size_t k = 0; k < torsion_.size(); ++k)
        for (std::size_t c = 0; c < n_; ++c) {
            mpz_class r;
            mpz_fdiv_r_ui(r.get_mpz_t(), phi_torsion_(k, c).get_mpz_t(), static_cast<unsigned long>(torsion_[k]));
            phi_torsion_(k, c) = r;
        }
    const IntMatrix ext = extended_phi();
    SnfResult snf = smith_normal_form(ext);
    bool onto = snf.rank == ext.rows();
    for (std::size_t k = 0; onto && k < snf.rank; ++k) onto = snf.S(k, k) == 1;
    if (!onto) throw InvalidInput("grading map phi is not surjective onto D");

    std::vector<IntVector> kernel;
    for (auto& v : kernel_basis(ext)) {
        v.resize(n_);
        kernel.push_back(std::move(v));
    }
    lattice_ = image_basis(columns_matrix(kernel, n_));
}

Grading Grading::from_rho(const IntMatrix& rho) {
    const std::size_t n = rho.rows();
    const std::size_t d = rho.cols();
    SnfResult snf = smith_normal_form(rho);
    if (snf.rank != d) throw InvalidInput("rho must have full column rank (the fan spans the lattice)");

    Grading g;
    g.n_ = n;
    std::vector<std::size_t> free_rows;
    for (std::size_t k = d; k < n; ++k) free_rows.push_back(k);
    g.phi_free_ = free_rows.empty() ? IntMatrix(0, n) : hermite_rows(snf.U.select_rows(free_rows));
    std::vector<std::size_t> torsion_rows;
    for (std::size_t k = 0; k < d; ++k)
        if (snf.S(k, k) > 1) {
            torsion_rows.push_back(k);
            g.torsion_.push_back(to_long(snf.S(k, k)));
        }
    g.phi_torsion_ = torsion_rows.empty() ? IntMatrix(0, n) : snf.U.select_rows(torsion_rows);
    g.rho_ = rho;
    g.finish();
    if (!same_lattice(g.lattice_, rho)) throw CrossCheckFailure("grading: ker(phi) differs from the span of rho");
    return g;
}

Grading Grading::from_phi(const IntMatrix& phi_free, const IntMatrix& phi_torsion, const std::vector<long>& torsion,
                          const std::optional<IntMatrix>& rho) {
    Grading g;
    g.n_ = phi_free.cols();
    g.phi_free_ = phi_free;
    g.phi_torsion_ = phi_torsion.rows() == 0 ? IntMatrix(0, g.n_) : phi_torsion;
    g.torsion_ = torsion;
    g.rho_ = rho;
    g.finish();
    if (rho) {
        if (rho->rows() != g.n_) throw InvalidInput("rho and phi disagree on the number of variables");
        if (!same_lattice(g.lattice_, *rho))
            throw InvalidInput("the kernel of phi is not the lattice spanned by the columns of rho");
    }
    return g;
}

CoarseDegree Grading::degree(const FineDegree& p) const {
    if (p.size() != n_) throw InvalidInput("fine degree has the wrong length");
    IntVector x(p.begin(), p.end());
    CoarseDegree out;
    for (const auto& v : phi_free_ * x) out.free.push_back(to_long(v));
    const IntVector tv = phi_torsion_ * x;
    for (std::size_t k = 0; k < torsion_.size(); ++k) {
        mpz_class r;
        mpz_fdiv_r_ui(r.get_mpz_t(), tv[k].get_mpz_t(), static_cast<unsigned long>(torsion_[k]));
        out.torsion.push_back(r.get_si());
    }
    return out;
}

bool Grading::is_valid(const CoarseDegree& delta) const {
    if (delta.free.size() != free_rank() || delta.torsion.size() != torsion_.size()) return false;
    for (std::size_t k = 0; k < torsion_.size(); ++k)
        if (delta.torsion[k] < 0 || delta.torsion[k] >= torsion_[k]) return false;
    return true;
}

CoarseDegree Grading::make_degree(const std::vector<long>& flat) const {
    if (flat.size() != free_rank() + torsion_.size())
        throw InvalidInput("degree needs " + std::to_string(free_rank()) + " free coordinates and " +
                           std::to_string(torsion_.size()) + " torsion residues");
    CoarseDegree out;
    out.free.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(free_rank()));
    for (std::size_t k = 0; k < torsion_.size(); ++k) out.torsion.push_back(reduce_mod(flat[free_rank() + k], torsion_[k]));
    return out;
}

std::optional<FineDegree> Grading::fiber_representative(const CoarseDegree& delta) const {
    CoarseDegree d = delta;
    if (d.free.size() != free_rank() || d.torsion.size() != torsion_.size()) return std::nullopt;
    for (std::size_t k = 0; k < torsion_.size(); ++k) d.torsion[k] = reduce_mod(d.torsion[k], torsion_[k]);
    IntVector rhs;
    for (long v : d.free) rhs.emplace_back(v);
    for (long v : d.torsion) rhs.emplace_back(v);
    auto sol = solve_integer(extended_phi(), rhs);
    if (!sol) return std::nullopt;
    FineDegree p;
    for (std::size_t i = 0; i < n_; ++i) p.push_back(to_long((*sol)[i]));
    return p;
}

}  // namespace toricoh
