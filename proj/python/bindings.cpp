#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "logcsm/parser.hpp"
#include "logcsm/proj_bundle.hpp"
#include "logcsm/verifier.hpp"

namespace py = pybind11;
using namespace logcsm;

namespace {

std::vector<Polynomial> parse_list(const std::string& text,
                                   std::vector<std::string>& vars) {
    if (vars.empty()) vars = detect_variables(text);
    std::vector<Polynomial> out;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) out.push_back(parse_polynomial(piece, vars));
    return out;
}

Arrangement make_arrangement(int n, const std::vector<std::vector<std::string>>& rows) {
    Arrangement A;
    A.n = n;
    for (auto& row : rows) {
        std::vector<Rational> h;
        for (auto& s : row) h.push_back(parse_rational(s));
        A.hyperplanes.push_back(std::move(h));
    }
    validate(A);
    return A;
}

py::dict json_to_py(const nlohmann::json& j);

py::object json_value(const nlohmann::json& j) {
    if (j.is_object()) return json_to_py(j);
    if (j.is_array()) {
        py::list l;
        for (auto& e : j) l.append(json_value(e));
        return l;
    }
    if (j.is_boolean()) return py::bool_(j.get<bool>());
    if (j.is_number_integer()) return py::int_(j.get<long long>());
    if (j.is_number_float()) return py::float_(j.get<double>());
    if (j.is_string()) return py::str(j.get<std::string>());
    return py::none();
}

py::dict json_to_py(const nlohmann::json& j) {
    py::dict d;
    for (auto& [k, v] : j.items()) d[py::str(k)] = json_value(v);
    return d;
}

}  // namespace

PYBIND11_MODULE(_logcsm, m) {
    m.doc() = "Chern classes of logarithmic derivation sheaves vs CSM classes "
              "of arrangement complements";

    m.def("groebner_basis",
          [](const std::string& gens, std::vector<std::string> vars) {
              auto polys = parse_list(gens, vars);
              GroebnerBasis gb = buchberger(Ideal{polys, MonomialOrder::grevlex()});
              std::vector<std::string> out;
              for (auto& g : gb.elements) out.push_back(g.to_string(vars));
              return out;
          },
          py::arg("generators"), py::arg("variables") = std::vector<std::string>{},
          "reduced Groebner basis (grevlex) of a comma-separated generator list");

    m.def("ideal_membership",
          [](const std::string& p, const std::string& gens, std::vector<std::string> vars) {
              auto polys = parse_list(gens, vars);
              return ideal_membership(parse_polynomial(p, vars),
                                      Ideal{polys, MonomialOrder::grevlex()});
          },
          py::arg("polynomial"), py::arg("generators"),
          py::arg("variables") = std::vector<std::string>{});

    m.def("is_linear_type",
          [](const std::string& gens, std::vector<std::string> vars, bool jacobian) {
              auto polys = parse_list(gens, vars);
              if (jacobian) polys = jacobian_ideal(polys.at(0)).generators;
              LinearTypeResult r = is_linear_type(polys);
              py::dict d;
              d["linear_type"] = r.linear_type;
              if (r.witness) {
                  std::vector<std::string> names = vars;
                  for (int i = 1; i <= r.witness->nvars() - (int)vars.size(); ++i)
                      names.push_back("T" + std::to_string(i));
                  d["witness"] = r.witness->to_string(names);
              }
              return d;
          },
          py::arg("generators"), py::arg("variables") = std::vector<std::string>{},
          py::arg("jacobian") = false);

    m.def("freeness",
          [](const std::string& h, std::vector<std::string> vars, int degree_bound) {
              auto polys = parse_list(h, vars);
              FreeBasisResult r = find_free_basis(polys.at(0), degree_bound);
              py::dict d;
              d["verdict"] = r.verdict == FreenessVerdict::Free
                                 ? "free"
                                 : (r.verdict == FreenessVerdict::CertifiedNonFree
                                        ? "certified-non-free"
                                        : "inconclusive");
              d["exponents"] = r.exponents;
              if (r.certificate)
                  d["determinant"] = r.certificate->determinant.to_string(vars);
              return d;
          },
          py::arg("h"), py::arg("variables") = std::vector<std::string>{},
          py::arg("degree_bound") = -1);

    m.def("characteristic_polynomial",
          [](int n, const std::vector<std::vector<std::string>>& hyperplanes) {
              CharPoly chi = characteristic_polynomial(make_arrangement(n, hyperplanes));
              return py::make_tuple(chi.coeffs, chi.to_string());
          },
          py::arg("n"), py::arg("hyperplanes"));

    m.def("csm_complement",
          [](int n, const std::vector<std::vector<std::string>>& hyperplanes) {
              return csm_complement(make_arrangement(n, hyperplanes)).coeffs;
          },
          py::arg("n"), py::arg("hyperplanes"));

    m.def("verify",
          [](int n, const std::vector<std::vector<std::string>>& hyperplanes) {
              return json_to_py(verify_formula(make_arrangement(n, hyperplanes)).to_json());
          },
          py::arg("n"), py::arg("hyperplanes"),
          "verify the log-derivation Chern class identity for an arrangement");

    m.def("proof_chain_check",
          [](int n) {
              ProofChainResult r = proof_chain_check(n);
              py::list steps;
              for (auto& s : r.steps)
                  steps.append(py::make_tuple(s.label, s.rendered, s.ok));
              return py::make_tuple(r.ok, steps);
          },
          py::arg("n"));
}
