#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "foxjump/cli.hpp"
#include "foxjump/covers.hpp"
#include "foxjump/fixtures.hpp"
#include "foxjump/fox.hpp"
#include "foxjump/invariants.hpp"
#include "foxjump/strata.hpp"

namespace py = pybind11;
using namespace foxjump;

namespace {

// Every entry point returns JSON text; the Python package decodes it.

struct Group {
    Presentation presentation;
    AbelianizationMap map;
};

Group load(const std::optional<std::string>& text) {
    if (!text) return {cartwright_steger(), cartwright_steger_assignment()};
    auto p = parse_presentation(*text);
    auto map = monomial_assignment(p);
    return {std::move(p), std::move(map)};
}

std::string fox_matrix(const std::optional<std::string>& text) {
    const auto g = load(text);
    const auto a = alexander_matrix(g.presentation, g.map);
    const auto& names = g.presentation.generator_names();
    auto entries = nlohmann::json::array();
    for (std::size_t i = 0; i < a.generators(); ++i)
        for (std::size_t j = 0; j < a.relations(); ++j)
            entries.push_back({{"generator", names[i]},
                               {"relation", j + 1},
                               {"terms", terms_to_json(a(i, j))},
                               {"text", a(i, j).to_string()}});
    nlohmann::json images = nlohmann::json::object();
    for (std::size_t i = 0; i < names.size(); ++i) images[names[i]] = g.map.image(i).exps;
    return nlohmann::json{{"variables", g.map.context->names()}, {"images", images}, {"entries", entries}}.dump();
}

std::string abelianization_of(const std::optional<std::string>& text) {
    const auto ab = abelianization(load(text).presentation);
    return nlohmann::json{{"free_rank", ab.free_rank}, {"torsion", ab.torsion}}.dump();
}

std::string certify(std::int64_t modulus_bound, std::size_t samples, std::uint64_t seed, const std::string& matrix) {
    const auto map = cartwright_steger_assignment();
    if (matrix != "tables" && matrix != "computed") throw py::value_error("matrix must be 'computed' or 'tables'");
    const auto a = matrix == "tables" ? cartwright_steger_tables(map.context)
                                      : alexander_matrix(cartwright_steger(), map).entries;
    CertifyOptions options;
    options.modulus_bound = modulus_bound;
    options.samples = samples;
    options.seed = seed;
    return to_json(certify_cs_strata(a, options)).dump();
}

std::string census(const std::optional<std::string>& text, std::int64_t n_max) {
    const auto g = load(text);
    auto rows = nlohmann::json::array();
    const auto summary = betti_census(g.presentation, g.map, n_max, [&](const CensusRow& r) { rows.push_back(to_json(r)); });
    return nlohmann::json{{"rows", rows}, {"summary", to_json(summary)}}.dump();
}

std::string count(std::int64_t n, std::size_t dim) {
    auto list = nlohmann::json::array();
    for (const auto& l : sublattices(n, dim)) list.push_back(l.upper_triangle());
    return list.dump();
}

py::tuple cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int status = run_cli(args, out, err);
    return py::make_tuple(status, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Fox calculus, Alexander strata and abelian cover Betti numbers";
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<BoundViolation>(m, "BoundViolation", PyExc_ValueError);

    m.def("fox_matrix", &fox_matrix, py::arg("presentation") = py::none());
    m.def("abelianization", &abelianization_of, py::arg("presentation") = py::none());
    m.def("certify_strata", &certify, py::arg("modulus_bound") = 12, py::arg("samples") = 200,
          py::arg("seed") = 20170601, py::arg("matrix") = "computed");
    m.def("census", &census, py::arg("presentation") = py::none(), py::arg("n_max") = 12);
    m.def("sublattices", &count, py::arg("n"), py::arg("dim") = 2);
    m.def("divisor_sum", &divisor_sum, py::arg("n"));
    m.def("surface_invariants",
          [](std::int64_t q, std::int64_t pg, std::int64_t c2) { return to_json(surface_invariants(q, pg, c2)).dump(); },
          py::arg("q"), py::arg("p_g"), py::arg("c2"));
    m.def("cover_invariants", [](std::int64_t n) { return to_json(cover_invariants(n)).dump(); }, py::arg("n"));
    m.def("builtin_presentation", [] { return serialize(cartwright_steger()); });
    m.def("run_cli", &cli, py::arg("args"));
}
