#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "khl/harness.hpp"
#include "khl/lambda_ring.hpp"
#include "khl/simplicial.hpp"

namespace py = pybind11;
using namespace khl;

namespace {

ConormalData ideal_of(const std::string& ring_json, const std::vector<std::string>& gens) {
    RingSpec spec;
    auto j = Json::parse(ring_json);
    spec.kind = j.value("kind", "integers");
    spec.base = j.value("base", "Q");
    if (j.contains("vars")) spec.vars = j["vars"].get<std::vector<std::string>>();
    return conormal_data(spec.build(), gens);
}

std::optional<int> graded_window(const ConormalData& ideal, std::optional<int> window) {
    return ideal.ring.is_graded() ? window : std::nullopt;
}

std::string degrees_json(const HomologyDescriptor& h, int top) {
    Json out = Json::array();
    for (int k = 0; k <= top; ++k) out.push_back(to_json(h.at(k)));
    return out.dump();
}

std::string run_scenario(const std::string& text, int jobs, bool timings, const std::string& format) {
    auto cfg = parse_scenario_text(text, "<python>");
    validate_scenario(cfg);
    return emit_report(run_suite(cfg, {.jobs = jobs, .timings = timings}), format);
}

std::string koszul_homology(const std::string& ring, const std::vector<std::string>& gens, int rank, int n,
                            std::optional<int> window, bool dual) {
    auto ideal = ideal_of(ring, gens);
    auto w = graded_window(ideal, window);
    auto res = resolution_for(ideal, rank);
    auto c = dual ? dual_koszul_complex(res.map(), n) : koszul_complex(res.map(), n);
    return degrees_json(homology(c, w), n);
}

std::string predicted_homology(const std::string& ring, const std::vector<std::string>& gens, int rank, int n,
                               std::optional<int> window, bool dual) {
    auto ideal = ideal_of(ring, gens);
    auto w = graded_window(ideal, window);
    Json out = Json::array();
    for (int k = 0; k <= n; ++k) out.push_back(to_json(predicted_koszul_homology(ideal, rank, n, k, w, dual)));
    return out.dump();
}

std::string nfg_homology(const std::string& ring, const std::vector<std::string>& gens, int rank,
                         const std::string& functor, std::optional<int> window) {
    auto ideal = ideal_of(ring, gens);
    auto w = graded_window(ideal, window);
    auto c = nfg(resolution_for(ideal, rank).complex, FunctorTag::parse(functor));
    return degrees_json(homology(c, w), c.length());
}

py::dict verify(const std::string& name, const std::map<std::string, int>& params) {
    IdentityParams p;
    auto get = [&](const char* key, int& slot) {
        if (auto it = params.find(key); it != params.end()) slot = it->second;
    };
    get("d", p.d);
    get("n", p.n);
    get("N", p.N);
    get("M", p.M);
    get("a", p.a);
    get("b", p.b);
    get("kind_a", p.kind_a);
    get("kind_b", p.kind_b);
    auto r = verify_identity(name, p);
    py::dict out;
    out["name"] = r.name;
    out["params"] = r.params;
    out["pass"] = r.pass;
    out["detail"] = r.detail;
    return out;
}

}  // namespace

PYBIND11_MODULE(_khl, m) {
    m.doc() = "Exact Koszul homology and λ-ring verification core";

    auto base = py::register_exception<Error>(m, "KhlError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<IoError>(m, "IoError", base.ptr());

    m.def("version", &harness_version);
    m.def("suite_names", &suite_names);
    m.def("identity_names", &identity_names);
    m.def("run_scenario", &run_scenario, py::arg("text"), py::arg("jobs") = 1, py::arg("timings") = true,
          py::arg("format") = "json", py::call_guard<py::gil_scoped_release>());
    m.def("koszul_homology", &koszul_homology, py::arg("ring"), py::arg("ideal"), py::arg("rank"), py::arg("n"),
          py::arg("window") = py::none(), py::arg("dual") = false, py::call_guard<py::gil_scoped_release>());
    m.def("predicted_homology", &predicted_homology, py::arg("ring"), py::arg("ideal"), py::arg("rank"), py::arg("n"),
          py::arg("window") = py::none(), py::arg("dual") = false);
    m.def("nfg_homology", &nfg_homology, py::arg("ring"), py::arg("ideal"), py::arg("rank"), py::arg("functor"),
          py::arg("window") = py::none(), py::call_guard<py::gil_scoped_release>());
    m.def("verify_identity", &verify, py::arg("name"), py::arg("params"));
}
