#include "rankdec/serialize.hpp"

#include <fstream>
#include <sstream>

#include "rankdec/errors.hpp"

namespace rankdec {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw ParseError(where + ": " + what); }

const Json& field(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, "missing field \"" + key + "\"");
  return *it;
}

std::uint64_t as_uint(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0))
    bad(where, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

const Json& as_array(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  return j;
}

Element element_from(const FieldContext& F, const Json& j, const std::string& where) {
  const std::uint64_t c = as_uint(j, where);
  if (c >= F.order()) bad(where, "element " + std::to_string(c) + " is not below p^(a*m) = " + std::to_string(F.order()));
  return Element{c};
}

// Library precondition failures while assembling an object from a file are input errors.
template <class F>
auto guarded(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const DomainError& e) {
    bad(where, e.what());
  } catch (const ContextMismatch& e) {
    bad(where, e.what());
  }
}

Json elements_json(const std::vector<Element>& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x.code);
  return a;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(source + ": " + e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

Json to_json(const FieldContext& F) {
  Json j;
  j["p"] = F.p();
  j["a"] = F.a();
  j["m"] = F.m();
  j["modulus"] = F.modulus();
  bool power = true;
  Element y = F.one();
  for (auto g : F.fq_basis()) {
    power = power && g == y;
    y = F.mul(y, F.root());
  }
  if (!power) j["fq_basis"] = elements_json(F.fq_basis());
  return j;
}

ContextPtr context_from_json(const Json& j) {
  const std::string where = "field";
  const auto p = as_uint(field(j, "p", where), where + ".p");
  const auto a = as_uint(field(j, "a", where), where + ".a");
  const auto m = as_uint(field(j, "m", where), where + ".m");
  if (p > UINT32_MAX || a > 64 || m > 64) bad(where, "parameters out of range");
  std::optional<std::vector<std::uint32_t>> modulus;
  if (j.contains("modulus")) {
    std::vector<std::uint32_t> f;
    std::size_t i = 0;
    for (const auto& c : as_array(j["modulus"], where + ".modulus")) {
      const auto v = as_uint(c, where + ".modulus[" + std::to_string(i++) + "]");
      if (v > UINT32_MAX) bad(where + ".modulus", "coefficient out of range");
      f.push_back(static_cast<std::uint32_t>(v));
    }
    modulus = std::move(f);
  }
  ContextPtr F = guarded(where, [&] {
    return FieldContext::create(static_cast<std::uint32_t>(p), static_cast<unsigned>(a), static_cast<unsigned>(m),
                                modulus);
  });
  if (j.contains("fq_basis")) {
    const Vector gamma = vector_from_json(*F, j["fq_basis"], where + ".fq_basis");
    F = guarded(where + ".fq_basis", [&] { return F->with_fq_basis(gamma); });
  }
  return F;
}

Json to_json(const Vector& v) { return elements_json(v); }

Vector vector_from_json(const FieldContext& F, const Json& j, const std::string& where) {
  Vector v;
  std::size_t i = 0;
  for (const auto& x : as_array(j, where)) v.push_back(element_from(F, x, where + "[" + std::to_string(i++) + "]"));
  return v;
}

Json to_json(const Matrix& M) {
  Json a = Json::array();
  for (std::size_t i = 0; i < M.rows(); ++i) a.push_back(to_json(M.row(i)));
  return a;
}

Matrix matrix_from_json(const FieldContext& F, const Json& j, const std::string& where) {
  std::vector<Vector> rows;
  std::size_t i = 0;
  for (const auto& r : as_array(j, where)) {
    rows.push_back(vector_from_json(F, r, where + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) bad(where + "[" + std::to_string(i) + "]", "ragged matrix");
    ++i;
  }
  if (rows.empty()) bad(where, "empty matrix");
  return Matrix::from_rows(rows);
}

Json to_json(const Subspace& U) {
  Json j;
  j["base_e"] = U.base_e();
  j["dim"] = U.dim();
  j["basis"] = to_json(U.basis());
  return j;
}

Subspace subspace_from_json(const ContextPtr& ctx, const Json& j) {
  const std::string where = "subspace";
  const auto e = j.contains("base_e") ? as_uint(j["base_e"], where + ".base_e") : 1;
  const Vector basis = vector_from_json(*ctx, field(j, "basis", where), where + ".basis");
  Subspace U = guarded(where, [&] { return Subspace::span(ctx, basis, static_cast<unsigned>(e)); });
  if (j.contains("dim") && as_uint(j["dim"], where + ".dim") != U.dim()) bad(where + ".dim", "does not match the basis");
  return U;
}

Json to_json(const System& U) {
  Json j;
  j["k"] = U.k();
  j["dim"] = U.dim();
  Json rows = Json::array();
  for (const auto& v : U.basis()) rows.push_back(to_json(v));
  j["basis"] = rows;
  return j;
}

System system_from_json(const ContextPtr& ctx, const Json& j) {
  const std::string where = "system";
  const auto k = as_uint(field(j, "k", where), where + ".k");
  std::vector<Vector> rows;
  std::size_t i = 0;
  for (const auto& r : as_array(field(j, "basis", where), where + ".basis")) {
    rows.push_back(vector_from_json(*ctx, r, where + ".basis[" + std::to_string(i++) + "]"));
    if (rows.back().size() != k) bad(where + ".basis", "row length differs from k");
  }
  System U = guarded(where, [&] { return System::span(ctx, k, rows); });
  if (j.contains("dim") && as_uint(j["dim"], where + ".dim") != U.dim()) bad(where + ".dim", "does not match the basis");
  return U;
}

RankCode code_from_spec(const Json& spec, std::uint64_t seed) {
  const ContextPtr ctx = context_from_json(field(spec, "field", "spec"));
  const FieldContext& F = *ctx;
  std::vector<Vector> blocks;
  std::size_t i = 0;
  for (const auto& b : as_array(field(spec, "blocks", "spec"), "spec.blocks")) {
    const std::string where = "spec.blocks[" + std::to_string(i++) + "]";
    if (!b.is_object()) bad(where, "expected an object");
    if (b.contains("entries") == b.contains("geometric")) bad(where, "give exactly one of \"entries\" or \"geometric\"");
    if (b.contains("entries")) {
      blocks.push_back(vector_from_json(F, b["entries"], where + ".entries"));
      continue;
    }
    const Json& g = b["geometric"];
    const std::string gw = where + ".geometric";
    const auto e = as_uint(field(g, "lambda_degree", gw), gw + ".lambda_degree");
    const auto t = as_uint(field(g, "t", gw), gw + ".t");
    Element lambda;
    if (g.contains("lambda")) {
      lambda = element_from(F, g["lambda"], gw + ".lambda");
      if (F.degree_over_q(lambda) != e)
        bad(gw + ".lambda", "has degree " + std::to_string(F.degree_over_q(lambda)) + " over F_q, not " +
                                std::to_string(e));
    } else {
      lambda = guarded(gw, [&] { return F.find_element_of_degree(static_cast<unsigned>(e), seed); });
    }
    if (t < 1 || t > e) bad(gw + ".t", "must lie in [1, lambda_degree]");
    Vector u{F.one()};
    while (u.size() < t) u.push_back(F.mul(u.back(), lambda));
    blocks.push_back(std::move(u));
  }
  if (blocks.empty()) bad("spec.blocks", "no blocks");
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::string where = "spec.blocks[" + std::to_string(b) + "]";
    if (blocks[b].empty()) bad(where, "empty block");
    if (blocks[b].size() >= F.m())
      bad(where, "block length " + std::to_string(blocks[b].size()) + " must be below m = " + std::to_string(F.m()));
    const std::size_t w = rank_weight(F, blocks[b]);
    if (w < blocks[b].size())
      bad(where, "entries are F_q-dependent (rank weight " + std::to_string(w) + " < length " +
                     std::to_string(blocks[b].size()) + "), so the block does not generate a nondegenerate MRD code");
  }
  return guarded("spec", [&] { return build_completely_decomposable(ctx, blocks); });
}

Json to_json(const RankCode& C) {
  Json j;
  j["format"] = "rankdec-code";
  j["field"] = to_json(*C.context());
  j["n"] = C.n();
  j["k"] = C.k();
  j["generator"] = to_json(C.generator());
  if (C.decomposition()) {
    const Decomposition& d = *C.decomposition();
    Json r;
    r["type"] = d.type;
    Json blocks = Json::array();
    for (const auto& u : d.blocks) blocks.push_back(to_json(u));
    r["blocks"] = blocks;
    r["B"] = to_json(d.B);
    r["A"] = to_json(d.A);
    r["sort_map"] = to_json(d.sort_map.A);
    j["decomposition"] = r;
  }
  return j;
}

RankCode code_from_json(const Json& j, std::uint64_t seed) {
  if (j.is_object() && j.contains("blocks") && !j.contains("generator")) return code_from_spec(j, seed);
  const ContextPtr ctx = context_from_json(field(j, "field", "code"));
  const FieldContext& F = *ctx;
  const Matrix G = matrix_from_json(F, field(j, "generator", "code"), "code.generator");
  if (j.contains("n") && as_uint(j["n"], "code.n") != G.cols()) bad("code.n", "does not match the generator");
  if (j.contains("k") && as_uint(j["k"], "code.k") != G.rows()) bad("code.k", "does not match the generator");
  std::optional<Decomposition> dec;
  if (j.contains("decomposition")) {
    const Json& r = j["decomposition"];
    const std::string w = "code.decomposition";
    Decomposition d;
    std::size_t i = 0;
    for (const auto& t : as_array(field(r, "type", w), w + ".type"))
      d.type.push_back(as_uint(t, w + ".type[" + std::to_string(i++) + "]"));
    i = 0;
    for (const auto& u : as_array(field(r, "blocks", w), w + ".blocks"))
      d.blocks.push_back(vector_from_json(F, u, w + ".blocks[" + std::to_string(i++) + "]"));
    d.B = matrix_from_json(F, field(r, "B", w), w + ".B");
    d.A = matrix_from_json(F, field(r, "A", w), w + ".A");
    d.sort_map = {r.contains("sort_map") ? matrix_from_json(F, r["sort_map"], w + ".sort_map") : Matrix::identity(G.cols())};
    dec = std::move(d);
  }
  return guarded("code", [&] { return RankCode(ctx, G, dec); });
}

Json to_json(const WeightDistribution& d) {
  Json j;
  j["counts"] = d.counts;
  j["min_distance"] = d.min_distance();
  j["messages"] = d.total();
  return j;
}

std::string to_csv(const WeightDistribution& d) {
  std::string out = "weight,count\n";
  for (std::size_t w = 0; w < d.counts.size(); ++w) out += std::to_string(w) + "," + std::to_string(d.counts[w]) + "\n";
  return out;
}

Json to_json(const MinWeightReport& r) {
  Json j;
  j["type"] = r.type;
  j["ell"] = r.ell;
  Json jm = Json::array();
  for (const auto& [ih, v] : r.j_matrix) jm.push_back({{"i", ih.first}, {"h", ih.second}, {"j", v}});
  j["j_matrix"] = jm;
  j["formula_count"] = r.formula_count;
  j["enumerated_count"] = r.enumerated_count ? Json(*r.enumerated_count) : Json(nullptr);
  j["lower_bound"] = r.lower_bound;
  j["upper_bound"] = r.upper_bound;
  j["prime_upper_bound"] = r.prime_upper_bound ? Json(*r.prime_upper_bound) : Json(nullptr);
  return j;
}

Json to_json(const NonprimeVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["reason"] = v.reason;
  Json w = Json::object();
  if (v.witness) {
    w["e"] = v.witness->e;
    w["r"] = v.witness->r;
    w["H"] = to_json(v.witness->H);
    w["scalars"] = to_json(v.witness->scalars);
  }
  j["witnesses"] = w;
  j["report"] = to_json(v.report);
  return j;
}

Json to_json(const PrimeVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  j["reason"] = v.reason;
  Json w = Json::object();
  if (v.witness) {
    w["U"] = to_json(v.witness->U);
    w["scalars"] = to_json(v.witness->scalars);
    w["product_dim"] = v.witness->product_dim;
  }
  j["witnesses"] = w;
  j["report"] = to_json(v.report);
  return j;
}

}  // namespace rankdec
