#include "clusterwp/toolkit.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace clusterwp;

namespace {

Seed seed_from_text(const std::string& text) {
    Seed s = parse_seed(text, "<python>");
    if (auto key = catalog_match(s)) return s.with_naming(catalog(*key).seed.naming());
    return s;
}

std::vector<std::vector<long>> rows(const Seed& s) {
    std::vector<std::vector<long>> out(s.mutable_count());
    for (std::size_t i = 0; i < s.mutable_count(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) out[i].push_back(s.matrix()(i, j));
    return out;
}

std::map<std::string, std::string> expansions(const Seed& s) {
    std::map<std::string, std::string> out;
    for (std::size_t k = 0; k < s.size(); ++k) out[s.names()[k]] = s.expansions()[k].str();
    return out;
}

Point to_point(const std::map<std::string, std::string>& values) {
    Point p;
    for (const auto& [name, v] : values) p.emplace(name, GaussianRational::parse(v));
    return p;
}

std::map<std::string, std::string> from_point(const Point& p) {
    std::map<std::string, std::string> out;
    for (const auto& [name, v] : p) out[name] = v.str();
    return out;
}

ChartForm chart_of(const Seed& s, const std::string& form_text) {
    return form_text == "@wp" ? wp_form(s) : reduce_to_chart(parse_form(form_text, s, "<python>"), s);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact cluster algebra seeds and Weil-Petersson forms";

    py::register_exception<SeedError>(m, "SeedError", PyExc_ValueError);
    py::register_exception<FileError>(m, "FileError", PyExc_ValueError);

    py::class_<Seed>(m, "Seed")
        .def_static("from_catalog", [](const std::string& key) { return catalog(key).seed; })
        .def_static("from_text", &seed_from_text)
        .def_property_readonly("names", &Seed::names)
        .def_property_readonly("mutable_count", &Seed::mutable_count)
        .def_property_readonly("matrix", &rows)
        .def_property_readonly("expansions", &expansions)
        .def("mutate", [](const Seed& s, std::size_t k) { return mutate_seed(s, k); }, py::arg("k"))
        .def("text", &emit_seed)
        .def("__eq__", [](const Seed& a, const Seed& b) { return a == b; })
        .def("__repr__", [](const Seed& s) {
            std::string names;
            for (const auto& n : s.names()) names += (names.empty() ? "" : " ") + n;
            return "<Seed " + names + ">";
        });

    m.def("catalog_keys", &catalog_keys);
    m.def("catalog_point", [](const std::string& key, const std::string& name) {
        return from_point(catalog(key).point(name));
    });

    m.def("wp_form", [](const Seed& s) { return wp_form(s).str(); });
    m.def("reduce", [](const Seed& s, const std::string& form) { return chart_of(s, form).str(); },
          "Chart expression of a form file body, or of omega for '@wp'.");
    m.def("forms_equal", [](const Seed& s, const std::string& a, const std::string& b) {
        return forms_equal(chart_of(s, a), chart_of(s, b));
    });
    m.def("difference", [](const Seed& s, const std::string& a, const std::string& b) {
        return difference(chart_of(s, a), chart_of(s, b)).str();
    });
    m.def("form_degree", [](const Seed& s, const std::optional<std::vector<long>>& w) {
        Weights weights;
        for (std::size_t k = 0; k < s.size(); ++k) weights[s.names()[k]] = w ? w->at(k) : 1;
        return form_degree(wp_form(s), weights);
    }, py::arg("seed"), py::arg("weights") = py::none());

    m.def("explore", [](const Seed& s, std::size_t max_seeds, std::size_t max_depth) {
        Exploration e = explore(s, max_seeds, max_depth);
        std::vector<std::vector<std::string>> clusters;
        for (const auto& t : e.seeds) clusters.push_back(t.names());
        std::map<std::string, std::string> variables;
        for (const auto& [name, p] : e.variables) variables[name] = p.str();
        py::dict out;
        out["clusters"] = clusters;
        out["variables"] = variables;
        out["truncated"] = e.truncated;
        return out;
    }, py::arg("seed"), py::arg("max_seeds") = 100, py::arg("max_depth") = 64);

    m.def("check_invariance", [](const Seed& s, std::size_t depth) { return check_invariance(s, depth).all_pass(); });
    m.def("is_acyclic", [](const Seed& s) { return is_acyclic(s.matrix()).acyclic; });
    m.def("presentation", [](const Seed& s) {
        std::vector<std::string> out;
        for (const auto& r : acyclic_presentation(s).relations) out.push_back(r.str());
        return out;
    });
    m.def("tangent_dimension", [](const Seed& s, const std::map<std::string, std::string>& point) {
        return tangent_dimension(acyclic_presentation(s), to_point(point));
    });
    m.def("regularize", [](const Seed& s, const std::vector<std::size_t>& vanishing) -> std::optional<std::string> {
        auto r = regularize_at(s, VanishingPattern(vanishing.begin(), vanishing.end()));
        if (auto* f = std::get_if<SymbolicForm>(&r)) return f->str();
        return std::nullopt;
    }, "Regularized form text, or None when two vanishing variables are adjacent.");

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
