#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gkm/cell.hpp"
#include "gkm/chromatic.hpp"
#include "gkm/decomposition.hpp"
#include "gkm/verify.hpp"

namespace py = pybind11;
using namespace gkm;

namespace {

// rationals cross the boundary as strings; fractions.Fraction parses them
using StrMap = std::map<std::string, std::string>;

Hess hess_of(const std::string& h, int n) { return Hess::parse(h, n); }

StrMap class_map(const EquivariantClass& c) {
    StrMap m;
    for (auto& v : c.support()) m[v.str()] = c(v).str();
    return m;
}

std::vector<std::vector<std::string>> matrix(const QMat& a) {
    std::vector<std::vector<std::string>> r;
    for (auto& row : a) {
        r.emplace_back();
        for (auto& x : row) r.back().push_back(x.get_str());
    }
    return r;
}

std::vector<std::string> strs(const std::vector<Perm>& v) {
    std::vector<std::string> r;
    for (auto& p : v) r.push_back(p.str());
    return r;
}

}  // namespace

PYBIND11_MODULE(gkm_hess, m) {
    m.doc() = "GKM computations for regular semisimple Hessenberg varieties";
    py::register_exception<std::domain_error>(m, "DomainError", PyExc_ArithmeticError);

    m.def("poincare", [](int n, const std::string& h) { return poincare_polynomial(hess_of(h, n)); },
          py::arg("n"), py::arg("h"));
    m.def(
        "gkm_edges",
        [](int n, const std::string& h, const std::string& w) {
            std::vector<py::dict> out;
            for (auto& e : gkm_edges(Perm::parse(w, n), hess_of(h, n))) {
                py::dict d;
                d["to"] = e.dst.str();
                d["label"] = e.label_str();
                d["oriented_down"] = e.down;
                out.push_back(d);
            }
            return out;
        },
        py::arg("n"), py::arg("h"), py::arg("w"));
    m.def("support", [](int n, const std::string& h, const std::string& w) {
        return strs(support_A(Perm::parse(w, n), hess_of(h, n)));
    }, py::arg("n"), py::arg("h"), py::arg("w"));
    m.def("basis_class", [](int n, const std::string& h, const std::string& w) {
        BasisProvider b(hess_of(h, n));
        return class_map(b(Perm::parse(w, n)));
    }, py::arg("n"), py::arg("h"), py::arg("w"));
    m.def("dot", [](int n, const std::string& h, const std::string& w, const std::string& u) {
        BasisProvider b(hess_of(h, n));
        return class_map(dot(Perm::parse(u, n), b(Perm::parse(w, n))));
    }, py::arg("n"), py::arg("h"), py::arg("w"), py::arg("u"));
    m.def("expand", [](int n, const std::string& h, const std::string& w, const std::string& u) {
        BasisProvider b(hess_of(h, n));
        StrMap r;
        for (auto& [p, c] : expand_in_basis(dot(Perm::parse(u, n), b(Perm::parse(w, n))), b))
            if (!c.is_zero()) r[p.str()] = c.str();
        return r;
    }, py::arg("n"), py::arg("h"), py::arg("w"), py::arg("u"));
    m.def("action_matrix", [](int n, const std::string& h, int k, const std::string& u) {
        Hess hh = hess_of(h, n);
        PermSiAction act(n, false);
        BasisProvider b(hh);
        py::dict d;
        d["basis"] = strs(degree_basis(hh, k));
        d["matrix"] = matrix(action_matrix(Perm::parse(u, n), k, hh, &act, &b));
        return d;
    }, py::arg("n"), py::arg("h"), py::arg("k"), py::arg("u"));
    m.def("g_set", [](int n, int k) { return strs(g_set(n, k)); }, py::arg("n"), py::arg("k"));
    m.def("eulerian", &eulerian, py::arg("n"), py::arg("k"));
    m.def(
        "decompose",
        [](int n, int k) {
            auto rep = verify_decomposition(n, k);
            std::vector<py::dict> gens;
            for (auto& mod : rep.modules) {
                py::dict g;
                g["w"] = mod.gen.w.str();
                g["module_type"] = mod.gen.a_hat.parts;
                g["dim"] = mod.dim;
                g["expected_dim"] = mod.expected_dim;
                gens.push_back(g);
            }
            py::dict d;
            d["generators"] = gens;
            d["total_rank"] = rep.total_rank;
            d["ok"] = rep.ok();
            return d;
        },
        py::arg("n"), py::arg("k"));
    m.def(
        "chromatic",
        [](int n, const std::string& h, const std::string& basis) {
            Basis b = parse_basis(basis);
            std::vector<std::string> r;
            for (auto& f : chromatic_qsym(hess_of(h, n)).X) r.push_back(convert(f, b).str());
            return r;
        },
        py::arg("n"), py::arg("h"), py::arg("basis") = "h");
    m.def("frobenius", [](int n, const std::string& h, int k) {
        return frobenius_of_degree(hess_of(h, n), k).str();
    }, py::arg("n"), py::arg("h"), py::arg("k"));
    m.def("suite_names", &suite_names);
    m.def(
        "verify",
        [](const std::string& suite, int n, std::uint64_t seed) {
            SuiteResult r;
            {
                py::gil_scoped_release rel;
                r = run_suite(suite, n, seed);
            }
            py::dict d;
            d["suite"] = r.suite;
            d["module"] = r.module;
            d["statement"] = r.statement;
            d["ok"] = r.ok();
            std::vector<py::dict> checks;
            for (auto& c : r.checks) {
                py::dict x;
                x["name"] = c.name;
                x["ok"] = c.ok;
                x["cases"] = c.cases;
                x["skipped"] = c.skipped;
                x["counterexample"] = c.counterexample;
                checks.push_back(x);
            }
            d["checks"] = checks;
            return d;
        },
        py::arg("suite"), py::arg("n"), py::arg("seed") = 1);
}
