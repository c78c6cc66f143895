#include "toricoh/formats.hpp"

#include <gmp.h>

#include <algorithm>
#include <set>

#include "toricoh/simplicial.hpp"

#ifndef TORICOH_VERSION
#define TORICOH_VERSION "dev"
#endif

namespace toricoh {

namespace {

using Rows = std::vector<std::vector<long>>;

void only_keys(const Json& j, const std::set<std::string>& allowed, const std::string& where) {
    if (!j.is_object()) throw InvalidInput(where + " must be an object");
    for (const auto& [key, value] : j.items())
        if (!allowed.count(key)) throw InvalidInput("unknown key '" + key + "' in " + where);
}

long as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) throw InvalidInput(where + " must be an integer");
    return j.get<long>();
}

std::vector<long> as_ints(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InvalidInput(where + " must be an array of integers");
    std::vector<long> out;
    for (const auto& v : j) out.push_back(as_int(v, where));
    return out;
}

Rows as_rows(const Json& j, const std::string& where) {
    if (!j.is_array()) throw InvalidInput(where + " must be an array of arrays");
    Rows out;
    for (const auto& r : j) out.push_back(as_ints(r, where));
    return out;
}

const Json& required(const Json& j, const std::string& key, const std::string& where) {
    auto it = j.find(key);
    if (it == j.end()) throw InvalidInput(where + " needs '" + key + "'");
    return *it;
}

Json one_based(IndexSet I) {
    Json a = Json::array();
    for (auto i : I.one_based()) a.push_back(i);
    return a;
}

IndexSet from_one_based(const std::vector<long>& v, std::size_t n, const std::string& where) {
    IndexSet s;
    for (long x : v) {
        if (x < 1 || static_cast<std::size_t>(x) > n) throw InvalidInput(where + ": index " + std::to_string(x) + " out of range");
        s.insert(static_cast<std::size_t>(x - 1));
    }
    return s;
}

std::vector<long> flat(const CoarseDegree& d) {
    std::vector<long> out = d.free;
    out.insert(out.end(), d.torsion.begin(), d.torsion.end());
    return out;
}

std::vector<Exponent> square_free_gens(const Rows& gens, std::size_t n, const std::string& where) {
    for (const auto& g : gens) {
        if (g.size() != n) throw InvalidInput(where + ": generator has the wrong number of exponents");
        for (long e : g)
            if (e != 0 && e != 1) throw InvalidInput(where + ": generators must be square-free 0/1 exponent vectors");
    }
    return gens;
}

IntMatrix matrix_of(const Rows& rows, std::size_t cols) { return IntMatrix::from_rows(rows, cols); }

}  // namespace

// ---------------------------------------------------------------------------
// Documents

ModuleDoc parse_module(const Json& j) {
    only_keys(j, {"shifts", "quotient", "betti"}, "module");
    ModuleDoc m;
    if (j.contains("shifts")) m.shifts = as_rows(j["shifts"], "module.shifts");
    if (j.contains("quotient")) m.quotient = as_rows(j["quotient"], "module.quotient");
    if (j.contains("betti")) {
        if (!j["betti"].is_array()) throw InvalidInput("module.betti must be an array");
        std::vector<BettiDoc> entries;
        for (const auto& e : j["betti"]) {
            only_keys(e, {"j", "alpha", "mult"}, "module.betti entry");
            BettiDoc b;
            b.j = as_int(required(e, "j", "module.betti entry"), "module.betti.j");
            b.alpha = as_ints(required(e, "alpha", "module.betti entry"), "module.betti.alpha");
            if (e.contains("mult")) b.mult = as_int(e["mult"], "module.betti.mult");
            entries.push_back(std::move(b));
        }
        m.betti = std::move(entries);
    }
    const int kinds = (m.quotient ? 1 : 0) + (m.betti ? 1 : 0) + ((m.shifts && !m.quotient) ? 1 : 0);
    if (kinds != 1) throw InvalidInput("module needs exactly one of 'shifts', 'quotient' or 'betti'");
    if (m.betti && m.shifts) throw InvalidInput("module: 'betti' cannot be combined with 'shifts'");
    return m;
}

Json to_json(const ModuleDoc& doc) {
    Json j = Json::object();
    if (doc.shifts) j["shifts"] = *doc.shifts;
    if (doc.quotient) j["quotient"] = *doc.quotient;
    if (doc.betti) {
        Json a = Json::array();
        for (const auto& b : *doc.betti) a.push_back({{"j", b.j}, {"alpha", b.alpha}, {"mult", b.mult}});
        j["betti"] = a;
    }
    return j;
}

InputDocument parse_input(const Json& j) {
    only_keys(j, {"fan", "ring", "ideal", "module", "char"}, "input document");
    InputDocument doc;
    if (j.contains("fan") == j.contains("ring")) throw InvalidInput("input needs exactly one of 'fan' or 'ring'");
    if (j.contains("fan")) {
        if (j.contains("ideal")) throw InvalidInput("a fan input derives its ideal; remove 'ideal'");
        const Json& f = j["fan"];
        only_keys(f, {"dim", "rays", "max_cones", "phi"}, "fan");
        FanDoc fd;
        fd.dim = as_int(required(f, "dim", "fan"), "fan.dim");
        fd.rays = as_rows(required(f, "rays", "fan"), "fan.rays");
        fd.max_cones = as_rows(required(f, "max_cones", "fan"), "fan.max_cones");
        if (f.contains("phi")) fd.phi = as_rows(f["phi"], "fan.phi");
        doc.fan = std::move(fd);
    } else {
        const Json& r = j["ring"];
        only_keys(r, {"n", "rho", "phi", "torsion"}, "ring");
        RingDoc rd;
        rd.n = as_int(required(r, "n", "ring"), "ring.n");
        if (rd.n < 1) throw InvalidInput("ring.n must be positive");
        if (r.contains("rho") == r.contains("phi")) throw InvalidInput("ring needs exactly one of 'rho' or 'phi'");
        if (r.contains("rho")) rd.rho = as_rows(r["rho"], "ring.rho");
        if (r.contains("phi")) rd.phi = as_rows(r["phi"], "ring.phi");
        if (r.contains("torsion")) rd.torsion = as_ints(r["torsion"], "ring.torsion");
        const Json& ideal = required(j, "ideal", "a ring input");
        only_keys(ideal, {"gens"}, "ideal");
        rd.gens = as_rows(required(ideal, "gens", "ideal"), "ideal.gens");
        square_free_gens(rd.gens, static_cast<std::size_t>(rd.n), "ideal.gens");
        doc.ring = std::move(rd);
    }
    if (j.contains("module")) doc.module = parse_module(j["module"]);
    if (j.contains("char")) doc.characteristic = as_int(j["char"], "char");
    return doc;
}

Json to_json(const InputDocument& doc) {
    Json j = Json::object();
    if (doc.fan) {
        Json f = {{"dim", doc.fan->dim}, {"rays", doc.fan->rays}, {"max_cones", doc.fan->max_cones}};
        if (doc.fan->phi) f["phi"] = *doc.fan->phi;
        j["fan"] = f;
    }
    if (doc.ring) {
        Json r = {{"n", doc.ring->n}};
        if (doc.ring->rho) r["rho"] = *doc.ring->rho;
        if (doc.ring->phi) r["phi"] = *doc.ring->phi;
        if (!doc.ring->torsion.empty()) r["torsion"] = doc.ring->torsion;
        j["ring"] = r;
        j["ideal"] = {{"gens", doc.ring->gens}};
    }
    if (doc.module) j["module"] = to_json(*doc.module);
    if (doc.characteristic) j["char"] = *doc.characteristic;
    return j;
}

// ---------------------------------------------------------------------------
// Building the problem

Problem build_problem(const InputDocument& doc, Characteristic ch) {
    Problem p;
    if (doc.fan) {
        const FanDoc& f = *doc.fan;
        if (f.dim < 1) throw InvalidInput("fan.dim must be positive");
        std::vector<IndexSet> cones;
        for (const auto& c : f.max_cones) cones.push_back(from_one_based(c, f.rays.size(), "fan.max_cones"));
        Fan fan(static_cast<std::size_t>(f.dim), f.rays, cones);
        std::optional<IntMatrix> phi;
        if (f.phi) phi = matrix_of(*f.phi, f.rays.size());
        p.toric = cox_data(fan, phi);
        p.engine = std::make_unique<CohomologyEngine>(*p.toric, ch);
        p.indexing = Indexing::Sheaf;
        return p;
    }
    const RingDoc& r = *doc.ring;
    const auto n = static_cast<std::size_t>(r.n);
    MonomialIdeal b(n, square_free_gens(r.gens, n, "ideal.gens"));
    std::optional<Grading> g;
    if (r.rho) {
        if (!r.torsion.empty()) throw InvalidInput("ring: torsion is derived from rho; remove 'torsion'");
        const IntMatrix rho = matrix_of(*r.rho, 0);
        if (rho.rows() != n) throw InvalidInput("ring.rho must have n rows");
        g = Grading::from_rho(rho);
    } else {
        const Rows& rows = *r.phi;
        if (rows.size() < r.torsion.size()) throw InvalidInput("ring.phi needs one row per torsion order");
        const std::size_t free_rows = rows.size() - r.torsion.size();
        Rows fr(rows.begin(), rows.begin() + static_cast<std::ptrdiff_t>(free_rows));
        Rows tr(rows.begin() + static_cast<std::ptrdiff_t>(free_rows), rows.end());
        for (const auto& row : rows)
            if (row.size() != n) throw InvalidInput("ring.phi rows must have n entries");
        g = Grading::from_phi(matrix_of(fr, n), matrix_of(tr, n), r.torsion);
    }
    p.engine = std::make_unique<CohomologyEngine>(std::move(*g), std::move(b), ch);
    p.indexing = Indexing::Local;
    return p;
}

ModuleSpec build_module(const ModuleDoc& doc, const Grading& g) {
    auto degrees = [&](const Rows& rows) {
        std::vector<CoarseDegree> out;
        for (const auto& r : rows) out.push_back(g.make_degree(r));
        return out;
    };
    if (doc.betti) {
        BettiTable t;
        for (const auto& e : *doc.betti) {
            if (e.mult < 1) throw InvalidInput("module.betti: multiplicity must be positive");
            t.push_back({static_cast<int>(e.j), g.make_degree(e.alpha), static_cast<std::size_t>(e.mult)});
        }
        return ModuleSpec::user_betti(std::move(t));
    }
    if (doc.quotient) {
        MonomialIdeal j(g.n(), square_free_gens(*doc.quotient, g.n(), "module.quotient"));
        return ModuleSpec::monomial_quotient(std::move(j), doc.shifts ? degrees(*doc.shifts) : std::vector<CoarseDegree>{});
    }
    return ModuleSpec::free_module(degrees(*doc.shifts));
}

// ---------------------------------------------------------------------------
// Reports

Json sigma_to_json(const SigmaTable& t) {
    Json rows = Json::array();
    for (const auto& [i, entries] : t.rows) {
        Json sets = Json::array();
        for (const auto& e : entries) sets.push_back({{"I", one_based(e.I)}, {"dim", e.dim}});
        rows.push_back({{"i", i}, {"sets", sets}});
    }
    return rows;
}

Json grading_to_json(const Grading& g) {
    Json j;
    j["n"] = g.n();
    j["free_rank"] = g.free_rank();
    j["torsion"] = g.torsion();
    j["phi"] = g.phi_free().to_long_rows();
    j["phi_torsion"] = g.phi_torsion().to_long_rows();
    j["lattice_basis"] = g.lattice().transpose().to_long_rows();
    j["saturated"] = g.saturated();
    if (g.rho()) j["rho"] = g.rho()->to_long_rows();
    return j;
}

std::string library_version() { return TORICOH_VERSION; }

namespace {

Json versions() {
    return {{"toricoh", TORICOH_VERSION},
            {"gmp", gmp_version},
            {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) +
                                  "." + std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
}

const char* indexing_name(Indexing ix) { return ix == Indexing::Local ? "local" : "sheaf"; }

struct Context {
    Problem problem;
    Indexing indexing;
    const CohomologyEngine& engine() const { return *problem.engine; }
    const Grading& grading() const { return problem.engine->grading(); }
};

int require_i(const CommandOptions& o) {
    if (!o.i) throw InvalidInput("this operation needs --i");
    if (*o.i < 0) throw InvalidInput("--i must be nonnegative");
    return *o.i;
}

CoarseDegree require_delta(const CommandOptions& o, const Grading& g) {
    if (!o.delta) throw InvalidInput("this operation needs --delta");
    return g.make_degree(*o.delta);
}

Json bound_terms(const BoundResult& b) {
    Json terms = Json::array();
    for (const auto& t : b.terms) terms.push_back({{"I", one_based(t.I)}, {"j", t.j + 1}, {"f", t.f}});
    return terms;
}

Json betti_json(const BettiTable& t) {
    Json a = Json::array();
    for (const auto& e : t) a.push_back({{"j", e.j}, {"alpha", flat(e.alpha)}, {"mult", e.mult}});
    return a;
}

Json cmd_sigma(const Context& c, const CommandOptions& o) {
    Json r;
    SigmaTable local = c.engine().sigma_local();
    r["local"] = sigma_to_json(local);
    r["source"] = to_string(local.source);
    r["sections"] = {{"I", Json::array()}, {"dim", 1}};
    if (c.problem.toric) r["sheaf"] = sigma_to_json(c.engine().sigma_sheaf());
    if (o.verify) {
        if (o.inject_fault) {
            if (local.rows.empty()) local.insert(0, IndexSet{}, 1);
            else local.rows.begin()->second.front().dim += 1;
        }
        const SigmaTable direct = c.engine().ideal().is_unit() ? local : sigma_direct(c.engine().local());
        if (!local.same_entries(direct)) throw CrossCheckFailure("sigma: the dual and direct Sigma tables disagree");
        if (c.problem.toric) {
            const SigmaTable nerve = sigma_nerve(*c.problem.toric, c.engine().characteristic());
            if (!nerve.same_entries(c.engine().sigma_sheaf()))
                throw CrossCheckFailure("sigma: the sheaf and nerve Sigma tables disagree");
        }
        r["verified"] = true;
    }
    return r;
}

Json cmd_cohom(const Context& c, const CommandOptions& o) {
    const int i = require_i(o);
    const CoarseDegree delta = require_delta(o, c.grading());
    Json r;
    r["i"] = i;
    r["delta"] = flat(delta);
    r["representative"] = *c.grading().fiber_representative(delta);
    const std::size_t dim = c.engine().dim(c.indexing, i, delta);
    r["dimension"] = dim;
    if (o.ell) r["truncated"] = {{"ell", *o.ell}, {"dimension", c.engine().truncated_dim(c.indexing, i, delta, *o.ell)}};
    if (o.profile) {
        const long b = c.engine().bound(c.indexing, i, delta).value;
        Json prof = Json::array();
        for (long ell = 0; ell <= b; ++ell)
            prof.push_back({{"ell", ell}, {"dimension", c.engine().truncated_dim(c.indexing, i, delta, ell)}});
        r["profile"] = prof;
        r["bound"] = b;
    }
    return r;
}

Json cmd_bound(const Context& c, const CommandOptions& o, const std::optional<ModuleDoc>& module) {
    const int i = require_i(o);
    const CoarseDegree delta = require_delta(o, c.grading());
    Json r;
    r["i"] = i;
    r["delta"] = flat(delta);
    const BoundResult b = c.engine().bound(c.indexing, i, delta);
    r["bound_S"] = b.value;
    r["terms"] = bound_terms(b);
    if (b.terms.empty()) r["note"] = "Sigma row is empty, so every truncation already agrees";
    r["crude_bound"] = c.engine().crude_bound(delta);
    long answer = b.value;
    if (module) {
        const ModuleSpec spec = build_module(*module, c.grading());
        const ModuleBound mb = c.engine().bound_module(c.indexing, i, delta, spec);
        Json terms = Json::array();
        for (const auto& t : mb.terms) terms.push_back({{"j", t.j}, {"alpha", flat(t.alpha)}, {"value", t.value}});
        r["module"] = {{"bound", mb.value}, {"betti", betti_json(mb.betti)}, {"terms", terms}};
        answer = mb.value;
    }
    r["bound"] = answer;
    return r;
}

Json finiteness_entry(const Context& c, IndexSet I) {
    const auto& f = c.engine().finiteness(I);
    Json e = {{"I", one_based(I)}, {"finite", f.finite}};
    if (f.certificate) e["certificate"] = *f.certificate;
    if (c.problem.toric) {
        auto h = separating_hyperplane(c.problem.toric->fan, I);
        e["hyperplane"] = h ? Json(*h) : Json(nullptr);
    }
    return e;
}

Json cmd_finiteness(const Context& c) {
    Json r;
    std::vector<std::pair<std::string, const SigmaTable*>> tables = {{"local", &c.engine().sigma_local()}};
    if (c.problem.toric) tables.emplace_back("sheaf", &c.engine().sigma_sheaf());
    std::map<std::uint32_t, std::vector<std::string>> membership;
    for (const auto& [name, t] : tables)
        for (const auto& [i, entries] : t->rows)
            for (const auto& e : entries) membership[e.I.bits()].push_back(name + ":" + std::to_string(i));
    std::vector<IndexSet> sets;
    for (const auto& [bits, where] : membership) sets.emplace_back(bits);
    std::sort(sets.begin(), sets.end(), lex_less);
    Json verdicts = Json::array();
    bool all_finite = true;
    for (IndexSet I : sets) {
        Json e = finiteness_entry(c, I);
        e["tables"] = membership[I.bits()];
        all_finite = all_finite && e["finite"].get<bool>();
        verdicts.push_back(e);
    }
    r["sets"] = verdicts;
    r["all_finite"] = all_finite;
    const std::size_t n = c.grading().n();
    if (n <= 12) {
        Json every = Json::array();
        std::vector<IndexSet> all;
        for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) all.emplace_back(bits);
        std::sort(all.begin(), all.end(), lex_less);
        for (IndexSet I : all) every.push_back(finiteness_entry(c, I));
        r["all_subsets"] = every;
    }
    return r;
}

Json check(const std::string& name, bool passed, const std::string& detail = "") {
    Json j = {{"name", name}, {"passed", passed}};
    if (!detail.empty()) j["detail"] = detail;
    return j;
}

Json cmd_oracle_check(const Context& c, const CommandOptions& o) {
    Json checks = Json::array();
    const auto& e = c.engine();
    const std::size_t n = c.grading().n();
    const Characteristic ch = e.characteristic();

    if (!e.ideal().is_unit()) {
        SigmaTable dual = e.sigma_local();
        if (o.inject_fault) dual.insert(0, IndexSet{}, 7);
        checks.push_back(check("sigma_dual_equals_direct", dual.same_entries(sigma_direct(e.local()))));
    }
    if (c.problem.toric) {
        checks.push_back(check("sheaf_equals_nerve", sigma_nerve(*c.problem.toric, ch).same_entries(e.sigma_sheaf())));
        if (c.problem.toric->fan.dim() == 2)
            checks.push_back(check("sheaf_equals_surface_rule", surface_sigma(c.problem.toric->fan).same_entries(e.sigma_sheaf())));
    }

    // Complexes: d o d = 0 and Euler characteristic, for every I.
    bool square_zero = true;
    bool euler = true;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
        const IndexSet I(bits);
        std::vector<IndexSet> family;
        const auto supports = e.ideal().supports();
        for (std::uint32_t J = 0; J < (std::uint32_t{1} << supports.size()); ++J) {
            IndexSet u;
            for (auto t : IndexSet(J).elements()) u = u | supports[t];
            if (I.is_subset_of(u)) family.emplace_back(J);
        }
        LabeledComplex cx(supports.size(), family);
        square_zero = square_zero && cx.verify_square_zero();
        long chain = 0;
        long homology = 0;
        const auto cd = cx.chain_dims();
        const auto hd = e.local().dims(I);
        for (std::size_t k = 0; k < cd.size(); ++k) {
            const long sign = k % 2 == 0 ? 1 : -1;
            chain += sign * static_cast<long>(cd[k]);
            homology += sign * static_cast<long>(hd[k]);
        }
        euler = euler && chain == homology;
    }
    checks.push_back(check("differential_squares_to_zero", square_zero));
    checks.push_back(check("euler_characteristic", euler));

    // (b) <=> (b') and, for fans, (b) <=> not (e).
    bool complement = true;
    bool hyperplane = true;
    for (std::uint32_t bits = 0; bits < (std::uint32_t{1} << n); ++bits) {
        const IndexSet I(bits);
        const bool fin = e.finiteness(I).finite;
        complement = complement && fin == e.finiteness(I.complement(n)).finite;
        if (c.problem.toric) hyperplane = hyperplane && fin == !separating_hyperplane(c.problem.toric->fan, I).has_value();
    }
    checks.push_back(check("finiteness_complement_symmetric", complement));
    if (c.problem.toric) checks.push_back(check("finiteness_iff_no_separating_hyperplane", hyperplane));

    if (c.grading().saturated()) {
        bool pointed = true;
        for (IndexSet I : e.sigma_local().all_sets())
            if (e.finiteness(I).finite) pointed = pointed && pointedness_witness(c.grading(), I).has_value();
        checks.push_back(check("image_cones_pointed", pointed));
    }

    if (o.i && o.delta) {
        const int i = *o.i;
        const CoarseDegree delta = c.grading().make_degree(*o.delta);
        const BoundResult b = e.bound(c.indexing, i, delta);
        const std::size_t full = e.dim(c.indexing, i, delta);
        bool sharp = true;
        for (long ell = 0; ell <= b.value + 2; ++ell) {
            const bool equal = e.truncated_dim(c.indexing, i, delta, ell) == full;
            sharp = sharp && (equal == (ell >= b.value));
        }
        checks.push_back(check("truncation_stabilizes_exactly_at_bound", sharp));
        checks.push_back(check("crude_bound_dominates", e.crude_bound(delta) >= b.value));
        if (c.grading().saturated()) {
            bool agree = true;
            const int local_i = c.indexing == Indexing::Sheaf ? i + 1 : i;
            if (c.indexing == Indexing::Local || i >= 1) {
                auto row = e.sigma_local().rows.find(local_i);
                if (row != e.sigma_local().rows.end())
                    for (const auto& entry : row->second) {
                        const auto facets = image_cone_facets(c.grading(), entry.I);
                        for (auto j : entry.I.elements())
                            agree = agree && f_bound_facets(c.grading(), facets, entry.I, j, delta) >=
                                                 f_bound(c.grading(), entry.I, j, delta);
                    }
            }
            checks.push_back(check("facet_bound_dominates_enumeration", agree));
        }
    }

    bool all = true;
    for (const auto& ck : checks) all = all && ck["passed"].get<bool>();
    return {{"checks", checks}, {"all_passed", all}};
}

}  // namespace

Json run_command(const std::string& operation, const InputDocument& doc, const CommandOptions& opts) {
    static const std::set<std::string> known = {"sigma", "cohom", "bound", "finiteness", "oracle-check"};
    if (!known.count(operation)) throw InvalidInput("unknown operation '" + operation + "'");
    const long chv = opts.characteristic ? *opts.characteristic : doc.characteristic.value_or(0);
    const Characteristic ch(chv);
    Context c{build_problem(doc, ch), Indexing::Local};
    c.indexing = opts.force_local ? Indexing::Local : c.problem.indexing;

    Json report;
    report["operation"] = operation;
    report["characteristic"] = chv;
    report["versions"] = versions();
    report["grading"] = grading_to_json(c.grading());
    report["indexing"] = indexing_name(c.indexing);
    report["ideal"] = {{"gens", c.engine().ideal().gens()}};

    const std::optional<ModuleDoc> module = opts.module ? opts.module : doc.module;
    if (operation == "sigma") report["results"] = cmd_sigma(c, opts);
    else if (operation == "cohom") report["results"] = cmd_cohom(c, opts);
    else if (operation == "bound") report["results"] = cmd_bound(c, opts, module);
    else if (operation == "finiteness") report["results"] = cmd_finiteness(c);
    else report["results"] = cmd_oracle_check(c, opts);
    return report;
}

std::string dump_report(const Json& report) { return report.dump(2) + "\n"; }

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const InvalidInput*>(&e)) return 2;
    if (dynamic_cast<const FinitenessViolation*>(&e)) return 3;
    if (dynamic_cast<const UnboundedRegion*>(&e)) return 3;
    if (dynamic_cast<const CrossCheckFailure*>(&e)) return 4;
    if (dynamic_cast<const Json::exception*>(&e)) return 2;
    return 1;
}

}  // namespace toricoh
