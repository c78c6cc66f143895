#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "toricoh/formats.hpp"
#include "toricoh/monomial_ideal.hpp"

namespace py = pybind11;
using namespace toricoh;

namespace {

py::dict sigma_dict(const SigmaTable& t) {
    py::dict out;
    for (const auto& [i, entries] : t.rows) {
        py::list row;
        for (const auto& e : entries) row.append(py::make_tuple(e.I.one_based(), e.dim));
        out[py::int_(i)] = row;
    }
    return out;
}

MonomialIdeal ideal_of(std::size_t n, const std::vector<Exponent>& gens) { return MonomialIdeal(n, gens); }

IndexSet set_of(const std::vector<std::size_t>& one_based) {
    IndexSet s;
    for (auto i : one_based) {
        if (i == 0) throw InvalidInput("indices are 1-based");
        s.insert(i - 1);
    }
    return s;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Local cohomology with monomial supports and toric sheaf cohomology";
    m.attr("__version__") = library_version();

    py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
    py::register_exception<CrossCheckFailure>(m, "CrossCheckFailure", PyExc_RuntimeError);
    py::register_exception<FinitenessViolation>(m, "FinitenessViolation", PyExc_ArithmeticError);

    m.def(
        "run",
        [](const std::string& operation, const std::string& document, std::optional<int> i,
           std::optional<std::vector<long>> delta, std::optional<long> ell, std::optional<long> characteristic,
           bool verify, bool profile, bool local) {
            CommandOptions o;
            o.i = i;
            o.delta = std::move(delta);
            o.ell = ell;
            o.characteristic = characteristic;
            o.verify = verify;
            o.profile = profile;
            o.force_local = local;
            const InputDocument doc = parse_input(Json::parse(document));
            py::gil_scoped_release release;
            return dump_report(run_command(operation, doc, o));
        },
        py::arg("operation"), py::arg("document"), py::arg("i") = py::none(), py::arg("delta") = py::none(),
        py::arg("ell") = py::none(), py::arg("char") = py::none(), py::arg("verify") = false, py::arg("profile") = false,
        py::arg("local") = false, "Run a command on a JSON document; returns the report text without a digest.");

    m.def(
        "sigma_dual",
        [](std::size_t n, const std::vector<Exponent>& gens, long ch) { return sigma_dict(sigma_dual(ideal_of(n, gens), Characteristic(ch))); },
        py::arg("n"), py::arg("gens"), py::arg("char") = 0);
    m.def(
        "sigma_direct",
        [](std::size_t n, const std::vector<Exponent>& gens, long ch) { return sigma_dict(sigma_direct(ideal_of(n, gens), Characteristic(ch))); },
        py::arg("n"), py::arg("gens"), py::arg("char") = 0);
    m.def(
        "restricted_cech_dims",
        [](const std::vector<Exponent>& gens, const std::vector<std::size_t>& I, long ch) {
            return restricted_cech_dims(gens, set_of(I), Characteristic(ch));
        },
        py::arg("gens"), py::arg("I"), py::arg("char") = 0);
    m.def(
        "alexander_dual", [](std::size_t n, const std::vector<Exponent>& gens) { return alexander_dual(ideal_of(n, gens)).gens(); },
        py::arg("n"), py::arg("gens"));
    m.def(
        "betti_support",
        [](std::size_t n, const std::vector<Exponent>& gens, long ch) {
            py::list out;
            for (const auto& [p, dims] : betti_support(ideal_of(n, gens), Characteristic(ch))) out.append(py::make_tuple(p, dims));
            return out;
        },
        py::arg("n"), py::arg("gens"), py::arg("char") = 0);
    m.def(
        "smith_normal_form",
        [](const std::vector<std::vector<long>>& rows, std::size_t cols) {
            const SnfResult r = smith_normal_form(IntMatrix::from_rows(rows, cols));
            return py::make_tuple(r.U.to_long_rows(), r.S.to_long_rows(), r.V.to_long_rows());
        },
        py::arg("rows"), py::arg("cols") = 0, "Returns (U, S, V) with U A V = S.");
}
