#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "rankdec/errors.hpp"
#include "rankdec/geometry.hpp"

using namespace rankdec;
using testing_helpers::random_decomposable;
using testing_helpers::scramble;

namespace {

System random_system(const ContextPtr& F, std::size_t k, std::size_t dim, std::mt19937_64& rng) {
  std::vector<Vector> gens;
  for (;;) {
    Vector v(k);
    for (auto& x : v) x = random_element(*F, rng);
    gens.push_back(v);
    const System U = System::span(F, k, gens);
    if (U.dim() == dim) return U;
    if (U.dim() < gens.size()) gens.pop_back();
  }
}

std::vector<Vector> random_vectors(const FieldContext& F, std::size_t k, std::size_t count, std::mt19937_64& rng) {
  std::vector<Vector> out(count, Vector(k));
  for (auto& v : out)
    for (auto& x : v) x = random_element(F, rng);
  return out;
}

std::vector<ContextPtr> small_fields() {
  return {FieldContext::create(2, 1, 4), FieldContext::create(3, 1, 3), FieldContext::create(2, 2, 3)};
}

}  // namespace

TEST_CASE("systems of codes") {
  auto F = FieldContext::create(2, 1, 5);
  const System I = system_from_code(RankCode(F, Matrix::identity(3)));
  CHECK(I.dim() == 3);
  CHECK(I.spans_ambient());
  CHECK(I == product_system({Subspace::span(F, {F->one()}), Subspace::span(F, {F->one()}),
                             Subspace::span(F, {F->one()})}));

  std::mt19937_64 rng(1);
  const RankCode C = random_decomposable(F, {3, 2, 2}, rng);
  std::vector<Subspace> parts;
  for (const auto& u : C.require_decomposition().blocks) parts.push_back(Subspace::span(F, u));
  const System U = system_from_code(C);
  CHECK(U.dim() == 7);
  CHECK(U == product_system(parts));
  // basis change B maps the system to U B^T's transpose action: columns of B G are B times columns of G
  const Matrix B = random_gl_qm(*F, 3, 7);
  CHECK(system_from_code(change_basis(C, B)) == apply_gl_k(U, transpose(B)));
  // F_q-equivalence does not move the system
  CHECK(system_from_code(apply_equivalence(C, random_gl(*F, 7, 8))) == U);
  // round trip through the associated code
  CHECK(system_from_code(code_from_system(U)) == U);

  Matrix Z(2, 3);
  Z(0, 0) = F->one();
  Z(1, 1) = F->one();
  CHECK_THROWS_AS(system_from_code(RankCode(F, Z)), DomainError);
  CHECK_THROWS_AS(code_from_system(System::span(F, 2, {{F->one(), F->zero()}})), DomainError);
  CHECK_THROWS_AS(product_system({Subspace::zero(F)}), DomainError);
  CHECK_THROWS_AS(product_system({Subspace::whole(F)}), DomainError);
}

TEST_CASE("weights through hyperplane sections agree with rank weights") {
  std::mt19937_64 rng(2);
  for (auto F : small_fields()) {
    for (int t = 0; t < 2; ++t) {
      const System U = random_system(F, 2, 2 + t, rng);
      if (!U.spans_ambient()) continue;
      const RankCode C = code_from_system(U);
      for_each_message(*F, 2, [&](const Vector& x) {
        if (x[0].is_zero() && x[1].is_zero()) return;
        const std::size_t w = rank_weight(*F, C.encode(x));
        CHECK(weight_via_system(U, x) == w);
        CHECK(point_weight(perp_prime(U), x) == F->m() - w);
      });
      const std::size_t d = min_distance(C);
      CHECK(U.dim() - max_hyperplane_intersection(U) == d);
    }
  }
  auto F = FieldContext::create(2, 1, 4);
  const System U = system_from_code(random_decomposable(F, {3, 2, 1}, rng));
  for (std::size_t i = 0; i < 3; ++i) {
    Vector e(3, F->zero());
    e[i] = F->one();
    CHECK(weight_via_system(U, e) == std::vector<std::size_t>{3, 2, 1}[i]);
  }
  CHECK(max_hyperplane_intersection(U) == 5);
  CHECK(max_hyperplane_intersection(system_from_code(RankCode(F, Matrix::identity(3)))) == 2);
  CHECK(max_hyperplane_intersection(system_from_code(RankCode(F, Matrix::from_rows({{F->one(), F->root()}})))) == 0);
  CHECK_THROWS_AS(weight_via_system(U, Vector(3, F->zero())), DomainError);
  CHECK_THROWS_AS(max_hyperplane_intersection(U, 10), CapExceeded);
}

TEST_CASE("the trace-product dual") {
  std::mt19937_64 rng(3);
  for (auto F : small_fields()) {
    const std::size_t k = 2, km = k * F->m();
    for (int t = 0; t < 6; ++t) {
      const System U = random_system(F, k, 1 + t % (km - 1), rng);
      const System P = perp_prime(U);
      CHECK(P.dim() == km - U.dim());
      CHECK(perp_prime(P) == U);
      const System V = U.sum(random_system(F, k, 1, rng));
      CHECK(perp_prime(V).contains(perp_prime(V)));
      CHECK(P.contains(perp_prime(V)));
      // Tr(u·v) vanishes on U × P
      for (const auto& u : U.basis())
        for (const auto& v : P.basis()) {
          Element s = F->zero();
          for (std::size_t i = 0; i < k; ++i) s = F->add(s, F->mul(u[i], v[i]));
          CHECK(F->trace_abs(s) == 0);
        }
    }
    // identity system: product of trace kernels
    const System I = system_from_code(RankCode(F, Matrix::identity(2)));
    const Subspace K = trace_kernel(F, 1);
    CHECK(perp_prime(I) == product_system({K, K}));
    CHECK(perp_prime(I).dim() == 2 * (F->m() - 1));
  }
}

TEST_CASE("dual of a product system is the product of trace duals") {
  std::mt19937_64 rng(4);
  for (auto F : small_fields())
    for (int t = 0; t < 4; ++t) {
      const RankCode C = random_decomposable(F, testing_helpers::random_type(F->m(), 3, rng), rng);
      std::vector<Subspace> parts, duals;
      for (const auto& u : C.require_decomposition().blocks) {
        parts.push_back(Subspace::span(F, u));
        duals.push_back(trace_dual(parts.back()));
      }
      CHECK(perp_prime(product_system(parts)) == product_system(duals));
    }
}

TEST_CASE("dimension identity for F_{q^m}-subspaces") {
  std::mt19937_64 rng(5);
  for (auto F : small_fields()) {
    const std::size_t k = 3, km = k * F->m();
    for (int t = 0; t < 8; ++t) {
      const System U = random_system(F, k, 1 + t % 6, rng);
      const auto gens = random_vectors(*F, k, 1 + t % 2, rng);
      const System W = fqm_span(F, k, gens);
      const System Wp = standard_perp(F, k, gens);
      CHECK(W.dim() % F->m() == 0);
      CHECK(perp_prime(W) == Wp);
      CHECK(perp_prime(U).intersect(Wp).dim() + U.dim() + W.dim() == U.intersect(W).dim() + km);
    }
  }
}

TEST_CASE("change of basis on systems") {
  std::mt19937_64 rng(6);
  auto F = FieldContext::create(3, 1, 3);
  const RankCode C = random_decomposable(F, {2, 2, 1}, rng);
  std::vector<Subspace> parts;
  for (const auto& u : C.require_decomposition().blocks) parts.push_back(Subspace::span(F, u));
  const System U = product_system(parts);
  CHECK(apply_gl_k(U, Matrix::identity(3)) == U);
  Matrix D(3, 3);
  std::vector<Subspace> scaled;
  for (std::size_t i = 0; i < 3; ++i) {
    D(i, i) = Element{2 + i};
    scaled.push_back(scale(D(i, i), parts[i]));
  }
  CHECK(apply_gl_k(U, D) == product_system(scaled));
  const Matrix B = random_gl_qm(*F, 3, 9);
  CHECK(apply_gl_k(apply_gl_k(U, B), *inverse(*F, B)) == U);
  CHECK_THROWS_AS(apply_gl_k(U, Matrix(3, 3)), DomainError);
}

TEST_CASE("points of product systems have weight below m") {
  std::mt19937_64 rng(7);
  for (auto F : {FieldContext::create(2, 1, 3), FieldContext::create(3, 1, 2)}) {
    const RankCode C = random_decomposable(F, std::vector<std::size_t>(3, F->m() - 1), rng);
    const System U = system_from_code(scramble(C, rng));
    for_each_projective_message(*F, 3, [&](const Vector& x) { CHECK(point_weight(U, x) < F->m()); });
  }
}

TEST_CASE("geometric duals") {
  std::mt19937_64 rng(8);
  auto F = FieldContext::create(2, 1, 6);
  const Element l = F->elements_of_degree(6).front();
  const RankCode C = build_completely_decomposable(F, {{F->one(), l}, {F->one(), l}, {F->one(), l}});
  const RankCode D = geometric_dual(C);
  CHECK(D.n() == 12);
  CHECK(type_of(D) == std::vector<std::size_t>{4, 4, 4});
  CHECK(type_of(geometric_dual(D)) == std::vector<std::size_t>{2, 2, 2});
  const RankCode Db = geometric_dual_blockwise(C);
  CHECK(system_from_code(Db) == system_from_code(D));

  auto G = FieldContext::create(2, 1, 4);
  for (int t = 0; t < 4; ++t) {
    const RankCode E = scramble(random_decomposable(G, {3, 2, 1}, rng), rng);
    const RankCode bare(G, E.generator());
    CHECK(type_of(geometric_dual(bare)) == std::vector<std::size_t>{3, 2, 1});
    CHECK(type_of(geometric_dual(geometric_dual(bare))) == std::vector<std::size_t>{3, 2, 1});
    CHECK(type_of(geometric_dual_blockwise(E)) == std::vector<std::size_t>{3, 2, 1});
  }
  // a system that contains a whole F_{q^m}-line has no geometric dual
  Matrix H(2, 5);
  for (unsigned j = 0; j < 4; ++j) H(0, j) = G->fq_basis()[j];
  H(1, 4) = G->one();
  CHECK_THROWS_AS(geometric_dual(RankCode(G, H)), DomainError);
}
