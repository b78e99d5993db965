#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "addix/additive_index.hpp"
#include "addix/error.hpp"
#include "addix/harness.hpp"
#include "addix/json_io.hpp"
#include "addix/maps.hpp"
#include "addix/residues.hpp"

namespace py = pybind11;
using addix::Json;

// Structured results cross the boundary as JSON text; the Python package
// decodes them into dicts.

namespace {

addix::PartialMap make_map(const addix::FieldPtr& ctx, const std::string& kind, std::optional<std::uint64_t> T,
                           const std::optional<std::vector<std::uint64_t>>& table) {
    if (kind == "table") {
        if (!table) throw addix::Error(addix::ErrorKind::InvalidArgument, "map 'table' needs table=[...]");
        std::vector<addix::Elem> values;
        for (std::uint64_t x : *table) values.push_back(ctx->element_of_index(x));
        return addix::table_map(ctx, values);
    }
    const auto G = addix::subgroup(*ctx, T.value_or(ctx->q() - 1));
    if (kind == "dh") return addix::dh_map(ctx, G);
    if (kind == "disclog") return addix::disclog_map(ctx, G);
    throw addix::Error(addix::ErrorKind::InvalidArgument, "map must be dh, disclog or table");
}

std::string find_field(std::uint32_t p, unsigned n) { return addix::field_json(*addix::build_field(p, n)).dump(); }

std::string additive_index(std::uint32_t p, unsigned n, const std::string& map, std::optional<std::uint64_t> T,
                           const std::optional<std::vector<std::uint64_t>>& table, std::uint64_t m, std::uint64_t seed,
                           std::optional<unsigned> k_max, bool outliers, unsigned threads) {
    const auto ctx = addix::build_field(p, n);
    addix::PartialMap F = make_map(ctx, map, T, table);
    addix::SearchOptions opts = addix::default_search_options();
    opts.threads = threads;
    opts.k_max = k_max;
    py::gil_scoped_release release;
    addix::IndexResult res;
    if (m > 0 && outliers) {
        res = addix::least_codimension_with_outliers(F, m, opts);
    } else {
        if (m > 0) F = addix::perturb(F, m, seed);
        res = addix::least_codimension(F, opts);
    }
    return addix::index_result_json(*ctx, res).dump();
}

bool verify_witness(std::uint32_t p, unsigned n, const std::string& map, std::optional<std::uint64_t> T,
                    const std::optional<std::vector<std::uint64_t>>& table, const std::string& witness) {
    const auto ctx = addix::build_field(p, n);
    return addix::verify_witness(make_map(ctx, map, T, table), addix::witness_from_json(*ctx, Json::parse(witness)));
}

std::string count(const std::string& what, std::uint64_t T, std::optional<std::uint64_t> s,
                  std::optional<std::uint64_t> a) {
    const addix::CountReport c = addix::count_report(what, T, s, a);
    Json j{{"what", c.what}, {"T", c.T}};
    j["s"] = c.s ? Json(*c.s) : Json(nullptr);
    j["a"] = c.a ? Json(*c.a) : Json(nullptr);
    j["formula_value"] = c.formula_value;
    j["oracle_value"] = c.oracle_value ? Json(*c.oracle_value) : Json(nullptr);
    j["agreed"] = c.agreed;
    return j.dump();
}

std::string run_check(const std::string& check_id, const std::string& params, unsigned threads) {
    addix::CheckSpec spec;
    spec.check_id = check_id;
    spec.params = addix::params_from_json(Json::parse(params));
    spec.params.threads = threads;
    py::gil_scoped_release release;
    return addix::report_json(addix::run_check(spec)).dump();
}

std::string run_suite(const std::string& id, unsigned threads, bool with_elapsed) {
    py::gil_scoped_release release;
    return addix::suite_json(addix::run_suite(id, threads), with_elapsed).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Additive index of maps on small finite fields.";

    static py::exception<addix::Error> error(m, "AddixError", PyExc_ValueError);
    static py::exception<addix::Error> budget(m, "BudgetExceeded", error.ptr());
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const addix::Error& e) {
            py::object cls = e.kind() == addix::ErrorKind::BudgetExceeded ? budget : error;
            py::object exc = cls(e.what());
            exc.attr("kind") = std::string(addix::to_string(e.kind()));
            PyErr_SetObject(cls.ptr(), exc.ptr());
        } catch (const nlohmann::json::exception& e) {
            PyErr_SetString(error.ptr(), e.what());
        }
    });

    m.def("find_field", &find_field, py::arg("p"), py::arg("n"));
    m.def("additive_index", &additive_index, py::arg("p"), py::arg("n"), py::arg("map") = "dh",
          py::arg("T") = py::none(), py::arg("table") = py::none(), py::arg("m") = 0, py::arg("seed") = 0,
          py::arg("k_max") = py::none(), py::arg("outliers") = false, py::arg("threads") = 1);
    m.def("verify_witness", &verify_witness, py::arg("p"), py::arg("n"), py::arg("map"), py::arg("T"),
          py::arg("table"), py::arg("witness"));
    m.def("count", &count, py::arg("what"), py::arg("T"), py::arg("s") = py::none(), py::arg("a") = py::none());
    m.def("count_squares", &addix::count_squares, py::arg("T"));
    m.def("run_check", &run_check, py::arg("check_id"), py::arg("params"), py::arg("threads") = 1);
    m.def("run_suite", &run_suite, py::arg("id"), py::arg("threads") = 1, py::arg("with_elapsed") = true);
    m.def("check_ids", &addix::check_ids);
    m.def("suite_ids", &addix::suite_ids);
    m.attr("schema_version") = addix::kSchemaVersion;
}
