// Python extension module _rankdec. Structured results cross the boundary as JSON text;
// the rankdec package decodes them.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rankdec/analysis.hpp"
#include "rankdec/errors.hpp"
#include "rankdec/reproduce.hpp"
#include "rankdec/serialize.hpp"
#include "rankdec/verify.hpp"

namespace py = pybind11;
using namespace rankdec;

namespace {

std::vector<std::uint64_t> codes(const Vector& v) {
  std::vector<std::uint64_t> out;
  for (auto x : v) out.push_back(x.code);
  return out;
}

Vector elements(const FieldContext& F, const std::vector<std::uint64_t>& v) {
  Vector out;
  for (auto c : v) out.push_back(F.from_int(c));
  return out;
}

EnumOptions options(std::optional<std::uint64_t> cap, unsigned threads) {
  EnumOptions o;
  if (cap) o.cap = *cap;
  o.threads = threads;
  return o;
}

std::vector<Vector> block_list(const FieldContext& F, const std::vector<std::vector<std::uint64_t>>& blocks) {
  std::vector<Vector> out;
  for (const auto& b : blocks) out.push_back(elements(F, b));
  return out;
}

}  // namespace

PYBIND11_MODULE(_rankdec, m) {
  m.doc() = "Completely decomposable rank-metric codes";

  // translators registered later are tried first, so the base class goes first
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ContextMismatch>(m, "ContextMismatch", base.ptr());
  py::register_exception<DomainError>(m, "DomainError", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());
  py::register_exception<FalsificationAlarm>(m, "FalsificationAlarm", base.ptr());
  py::register_exception<ParseError>(m, "ParseError", base.ptr());

  py::class_<FieldContext, std::shared_ptr<FieldContext>>(m, "Field")
      .def(py::init([](std::uint32_t p, unsigned a, unsigned mm, std::optional<std::vector<std::uint32_t>> modulus) {
             return std::const_pointer_cast<FieldContext>(FieldContext::create(p, a, mm, modulus));
           }),
           py::arg("p"), py::arg("a"), py::arg("m"), py::arg("modulus") = py::none())
      .def_property_readonly("p", &FieldContext::p)
      .def_property_readonly("a", &FieldContext::a)
      .def_property_readonly("m", &FieldContext::m)
      .def_property_readonly("q", &FieldContext::q)
      .def_property_readonly("order", &FieldContext::order)
      .def_property_readonly("modulus", &FieldContext::modulus)
      .def("add", [](const FieldContext& F, std::uint64_t x, std::uint64_t y) { return F.add(F.from_int(x), F.from_int(y)).code; })
      .def("mul", [](const FieldContext& F, std::uint64_t x, std::uint64_t y) { return F.mul(F.from_int(x), F.from_int(y)).code; })
      .def("inv", [](const FieldContext& F, std::uint64_t x) { return F.inv(F.from_int(x)).code; })
      .def("pow", [](const FieldContext& F, std::uint64_t x, std::uint64_t n) { return F.pow(F.from_int(x), n).code; })
      .def("trace", [](const FieldContext& F, std::uint64_t x, unsigned e) { return F.trace_rel(F.from_int(x), e).code; },
           py::arg("x"), py::arg("e") = 1)
      .def("norm", [](const FieldContext& F, std::uint64_t x, unsigned e) { return F.norm_rel(F.from_int(x), e).code; },
           py::arg("x"), py::arg("e") = 1)
      .def("degree_over_q", [](const FieldContext& F, std::uint64_t x) { return F.degree_over_q(F.from_int(x)); })
      .def("minimal_polynomial",
           [](const FieldContext& F, std::uint64_t x) { return codes(F.minimal_polynomial(F.from_int(x))); })
      .def("elements_of_degree", [](const FieldContext& F, unsigned e) { return codes(F.elements_of_degree(e)); })
      .def("find_element_of_degree",
           [](const FieldContext& F, unsigned e, std::uint64_t seed) { return F.find_element_of_degree(e, seed).code; },
           py::arg("e"), py::arg("seed") = 0)
      .def("rank_weight", [](const FieldContext& F, const std::vector<std::uint64_t>& v) { return rank_weight(F, elements(F, v)); })
      .def("to_json", [](const FieldContext& F) { return to_json(F).dump(); });

  py::class_<RankCode>(m, "Code")
      .def_property_readonly("n", &RankCode::n)
      .def_property_readonly("k", &RankCode::k)
      .def_property_readonly("field", [](const RankCode& C) { return std::const_pointer_cast<FieldContext>(C.context()); })
      .def_property_readonly("generator",
                             [](const RankCode& C) {
                               std::vector<std::vector<std::uint64_t>> rows;
                               for (std::size_t i = 0; i < C.k(); ++i) rows.push_back(codes(C.generator().row(i)));
                               return rows;
                             })
      .def_property_readonly("has_decomposition", [](const RankCode& C) { return C.decomposition().has_value(); })
      .def("encode", [](const RankCode& C, const std::vector<std::uint64_t>& x) {
        return codes(C.encode(elements(*C.context(), x)));
      })
      .def("type", [](const RankCode& C, std::optional<std::uint64_t> cap) { return type_of(C, options(cap, 0)); },
           py::arg("cap") = py::none())
      .def("weight_distribution",
           [](const RankCode& C, std::optional<std::uint64_t> cap, unsigned threads) {
             return weight_distribution(C, options(cap, threads)).counts;
           },
           py::arg("cap") = py::none(), py::arg("threads") = 0)
      .def("min_distance", [](const RankCode& C, std::optional<std::uint64_t> cap) { return min_distance(C, options(cap, 0)); },
           py::arg("cap") = py::none())
      .def("is_mrd", [](const RankCode& C, std::optional<std::uint64_t> cap) { return is_mrd(C, options(cap, 0)); },
           py::arg("cap") = py::none())
      .def("min_weight_report", [](const RankCode& C) { return to_json(min_weight_count_formula(C)).dump(); })
      .def("check_nonprime", [](const RankCode& C) { return to_json(check_char_nonprime(C)).dump(); })
      .def("check_prime", [](const RankCode& C) { return to_json(check_char_prime(C)).dump(); })
      .def("geometric_dual", [](const RankCode& C) { return geometric_dual(C); })
      .def("with_decomposition", [](const RankCode& C) { return with_decomposition(C); })
      .def("scramble",
           [](const RankCode& C, std::uint64_t seed) {
             const FieldContext& F = *C.context();
             return apply_equivalence(change_basis(C, random_gl_qm(F, C.k(), seed)), random_gl(F, C.n(), seed + 1));
           },
           py::arg("seed") = 0)
      .def("to_json", [](const RankCode& C) { return to_json(C).dump(); });

  m.def("build_completely_decomposable",
        [](std::shared_ptr<FieldContext> F, const std::vector<std::vector<std::uint64_t>>& blocks) {
          return build_completely_decomposable(F, block_list(*F, blocks));
        });
  m.def("code_from_json", [](const std::string& text, std::uint64_t seed) { return code_from_json(parse_json(text), seed); },
        py::arg("text"), py::arg("seed") = 0);
  m.def("construct_subfield_extremal", [](std::shared_ptr<FieldContext> F, unsigned e, std::size_t k, std::uint64_t xi) {
    return construct_subfield_extremal(F, e, k, F->from_int(xi));
  });
  m.def("construct_lambda_code",
        [](std::shared_ptr<FieldContext> F, std::uint64_t lambda, unsigned e, const std::vector<std::size_t>& t) {
          return construct_lambda_code(F, F->from_int(lambda), e, t);
        });
  m.def("construct_lower_attaining", [](std::shared_ptr<FieldContext> F, unsigned e, std::uint64_t xi,
                                        const std::vector<std::uint64_t>& mu, std::uint64_t lambda) {
    return construct_lower_attaining(F, e, F->from_int(xi), elements(*F, mu), F->from_int(lambda));
  });
  m.def("bounds_nonprime", [](std::uint64_t q, unsigned mm, std::size_t nk, std::size_t ell) {
    const Bounds b = bounds_nonprime(q, mm, nk, ell);
    return std::make_pair(b.lower, b.upper);
  });
  m.def("bound_prime", &bound_prime);
  m.def("reproduce", [](const std::string& example) {
    const ReproduceReport r = reproduce(example);
    Json j;
    j["example"] = r.example;
    j["passed"] = r.passed();
    Json rows = Json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"label", row.label},
                      {"lambda", row.lambda ? Json(row.lambda->code) : Json(nullptr)},
                      {"minimal_polynomial", codes(row.minimal_polynomial)},
                      {"expected", row.expected},
                      {"computed", row.computed},
                      {"matched", row.matched}});
    j["rows"] = rows;
    return j.dump();
  });
  m.def("verify", [](const std::string& suite, std::uint64_t seed, std::size_t trials) {
    VerifyOptions opt;
    opt.seed = seed;
    opt.trials = trials;
    Json all = Json::array();
    for (const auto& r : run_suites(suite, opt)) {
      Json checks = Json::array();
      for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"instances", c.instances}, {"failures", c.failures}, {"detail", c.detail}});
      all.push_back({{"suite", r.suite}, {"passed", r.passed()}, {"checks", checks}});
    }
    return all.dump();
  }, py::arg("suite"), py::arg("seed") = 1, py::arg("trials") = 20);
}
