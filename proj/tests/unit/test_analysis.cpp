#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "rankdec/analysis.hpp"
#include "rankdec/enumerate.hpp"
#include "rankdec/errors.hpp"

using namespace rankdec;
using testing_helpers::random_block;
using testing_helpers::random_decomposable;
using testing_helpers::scramble;

namespace {

std::uint64_t count_at(const RankCode& C, std::size_t w) {
  const auto d = weight_distribution(C);
  return w < d.counts.size() ? d.counts[w] : 0;
}

std::set<Element> as_set(const Subspace& U) {
  const auto e = U.elements();
  return {e.begin(), e.end()};
}

// Words of weight n_t among β-multiples of rows t..k of the block matrix times A with a nonzero coefficient on row t.
std::vector<Vector> weight_nt_words(const RankCode& C, std::size_t t) {
  const FieldContext& F = *C.context();
  const Decomposition& d = C.require_decomposition();
  const Matrix DA = mul(F, d.block_matrix(), d.A);
  const std::size_t k = C.k(), tail = k - t + 1;
  std::vector<Vector> out;
  for_each_message(F, tail, [&](const Vector& x) {
    if (x[0].is_zero()) return;
    Vector full(k, F.zero());
    std::copy(x.begin(), x.end(), full.begin() + static_cast<std::ptrdiff_t>(t - 1));
    const Vector w = vec_mul(F, full, DA);
    if (oracle::rank_weight(F, w) == d.type[t - 1]) out.push_back(w);
  });
  std::sort(out.begin(), out.end());
  return out;
}

Vector pair_block(const ContextPtr& F, Element lambda) { return {F->one(), lambda}; }

}  // namespace

TEST_CASE("trailing ell") {
  CHECK(trailing_ell({3}) == 0);
  CHECK(trailing_ell({3, 2}) == 0);
  CHECK(trailing_ell({2, 2}) == 1);
  CHECK(trailing_ell({4, 2, 2, 2}) == 2);
  CHECK(trailing_ell({2, 2, 2}) == 2);
  CHECK_THROWS_AS(trailing_ell({}), DomainError);
}

TEST_CASE("j values against the element-set oracle") {
  std::mt19937_64 rng(11);
  for (auto F : {FieldContext::create(2, 1, 5), FieldContext::create(3, 1, 3), FieldContext::create(2, 2, 3)}) {
    const auto fq = oracle::subfield(*F, 1);
    for (int rep = 0; rep < 6; ++rep) {
      std::uniform_int_distribution<std::size_t> dn(1, F->m() - 1);
      const Subspace Ui = Subspace::span(F, random_block(*F, dn(rng), rng));
      const Subspace Uh = Subspace::span(F, random_block(*F, dn(rng), rng));
      const auto prod = oracle::product(*F, oracle::trace_dual(*F, as_set(Ui), 1), as_set(Uh), fq);
      CHECK(j_value(Ui, Uh) == F->m() - oracle::log_q(prod.size(), F->q()));
    }
  }
}

TEST_CASE("minimum-weight formula matches enumeration") {
  std::mt19937_64 rng(5);
  struct Case {
    ContextPtr F;
    std::vector<std::size_t> type;
  };
  const std::vector<Case> cases = {
      {FieldContext::create(2, 1, 4), {2, 2}},       {FieldContext::create(2, 1, 4), {3, 2, 2}},
      {FieldContext::create(2, 1, 4), {1, 1, 1}},    {FieldContext::create(2, 1, 4), {3, 3, 1}},
      {FieldContext::create(2, 1, 5), {3, 3}},       {FieldContext::create(2, 1, 5), {2, 2, 2}},
      {FieldContext::create(3, 1, 3), {2, 2}},       {FieldContext::create(3, 1, 3), {2, 1, 1}},
      {FieldContext::create(2, 2, 2), {1, 1, 1}},    {FieldContext::create(2, 1, 6), {4, 4}},
      {FieldContext::create(5, 1, 2), {1, 1}},       {FieldContext::create(2, 1, 3), {2, 2, 2, 2}},
  };
  for (const auto& c : cases)
    for (int rep = 0; rep < 3; ++rep) {
      const RankCode C = random_decomposable(c.F, c.type, rng);
      const MinWeightReport r = min_weight_count_formula(C);
      CHECK(r.type == c.type);
      CHECK(r.formula_count == count_at(C, c.type.back()));
      CHECK(r.lower_bound <= r.formula_count);
      CHECK(r.formula_count <= r.upper_bound);
      if (r.prime_upper_bound) CHECK(r.formula_count <= *r.prime_upper_bound);
      CHECK(r.j_matrix.size() == r.ell * (r.ell + 1) / 2);
      // a scrambled copy carries no record and goes through detection
      const MinWeightReport s = min_weight_count_formula(scramble(C, rng));
      CHECK(s.formula_count == r.formula_count);
      CHECK(s.type == r.type);
    }
}

TEST_CASE("sandwich bounds") {
  const Bounds b = bounds_nonprime(2, 6, 2, 2);
  CHECK(b.lower == 189);
  CHECK(b.upper == 17199);
  CHECK(bound_prime(2, 7, 2) == std::optional<std::uint64_t>(889));
  CHECK_FALSE(bound_prime(2, 6, 2).has_value());
  CHECK(bound_prime(3, 5, 0) == std::optional<std::uint64_t>(242));
  // ℓ = 0 collapses both sides to q^m - 1
  CHECK(bounds_nonprime(3, 4, 1, 0).lower == 80);
  CHECK(bounds_nonprime(3, 4, 1, 0).upper == 80);
  CHECK_THROWS_AS(bounds_nonprime(2, 4, 4, 1), DomainError);
  CHECK_THROWS_AS(bounds_nonprime(2, 31, 1, 40), DomainError);
}

TEST_CASE("family W_t equals the weight-n_t words of its layer") {
  std::mt19937_64 rng(9);
  auto F16 = FieldContext::create(2, 1, 4);
  auto F27 = FieldContext::create(3, 1, 3);
  for (const auto& [F, type] : std::vector<std::pair<ContextPtr, std::vector<std::size_t>>>{
           {F16, {2, 2, 2}}, {F16, {3, 2, 2}}, {F16, {3, 1, 2}}, {F27, {2, 2}}, {F27, {2, 1, 1}}}) {
    const RankCode C = random_decomposable(F, type, rng);
    std::uint64_t sum = 0;
    for (std::size_t t = 1; t <= C.k(); ++t) {
      const LayerFamily W = layer_family(C, t);
      const auto words = materialize(C, W);
      CHECK(words.size() == W.size);
      CHECK(words == weight_nt_words(C, t));
      if (t >= C.k() - trailing_ell(C.require_decomposition().type)) sum += W.size;
    }
    CHECK(sum == min_weight_count_formula(C).formula_count);
  }
  const RankCode C = random_decomposable(F16, {2, 2}, rng);
  CHECK_THROWS_AS(layer_family(C, 0), DomainError);
  CHECK_THROWS_AS(layer_family(C, 3), DomainError);
  CHECK_THROWS_AS(materialize(C, layer_family(C, 1), 10), CapExceeded);
}

TEST_CASE("(1, λ) blocks over F_64 depend only on the degree of λ") {
  auto F = FieldContext::create(2, 1, 6);
  for (unsigned e : {3u, 6u})
    for (auto lambda : F->elements_of_degree(e)) {
      const RankCode C = build_completely_decomposable(F, std::vector<Vector>(3, pair_block(F, lambda)));
      const auto r = min_weight_count_formula(C);
      CHECK(r.formula_count == 441);
      CHECK(layer_family(C, 1).size == 252);
      CHECK(layer_family(C, 2).size == 126);
      CHECK(layer_family(C, 3).size == 63);
    }
  const Element l3 = F->elements_of_degree(3).front();
  CHECK(count_at(build_completely_decomposable(F, std::vector<Vector>(3, pair_block(F, l3))), 2) == 441);
  // λ of degree 2 spans F_4, which is closed under multiplication
  for (auto lambda : F->elements_of_degree(2)) {
    const RankCode C = build_completely_decomposable(F, std::vector<Vector>(3, pair_block(F, lambda)));
    CHECK(min_weight_count_formula(C).formula_count == 1323);
    CHECK(count_at(C, 2) == 1323);
  }
}

TEST_CASE("subfield extremal codes") {
  auto F16 = FieldContext::create(2, 1, 4);
  const Element xi = F16->elements_of_degree(4).front();
  const RankCode C = construct_subfield_extremal(F16, 2, 2, xi);
  const auto d = weight_distribution(C);
  CHECK(d.counts == std::vector<std::uint64_t>{1, 0, 75, 0, 180});
  CHECK(min_weight_count_formula(C).formula_count == 75);
  CHECK(min_weight_count_formula(C).upper_bound == 75);

  auto F64 = FieldContext::create(2, 1, 6);
  for (auto [e, k] : std::vector<std::pair<unsigned, std::size_t>>{{2, 2}, {3, 3}, {2, 3}}) {
    const Element x = F64->elements_of_degree(6).at(3);
    const RankCode D = construct_subfield_extremal(F64, e, k, x);
    const auto r = min_weight_count_formula(D);
    CHECK(r.formula_count == r.upper_bound);
    const auto dist = weight_distribution(D);
    for (std::size_t w = 1; w < dist.counts.size(); ++w)
      if (w != 6 - e && w != 6 && w <= 6) CHECK(dist.counts[w] == 0);
    CHECK(dist.counts[6 - e] == r.formula_count);
  }
  CHECK_THROWS_AS(construct_subfield_extremal(F64, 4, 2, xi), DomainError);
  CHECK_THROWS_AS(construct_subfield_extremal(F64, 6, 2, xi), DomainError);
  // ξ ∈ F_8 does not generate F_64 over F_8, while ξ ∈ F_4 does
  CHECK_THROWS_AS(construct_subfield_extremal(F64, 3, 2, F64->elements_of_degree(3).front()), DomainError);
  CHECK_NOTHROW(construct_subfield_extremal(F64, 3, 2, F64->elements_of_degree(2).front()));
}

TEST_CASE("lower-bound attaining construction") {
  auto F = FieldContext::create(3, 1, 4);
  const auto F9 = oracle::subfield(*F, 2);
  const Element lambda = F->elements_of_degree(2).front();
  std::optional<RankCode> found;
  for (auto xi : F->elements_of_degree(4)) {
    for (auto a : F9)
      for (auto b : F9) {
        if (a.is_zero() || b.is_zero() || found) continue;
        try {
          found = construct_lower_attaining(F, 2, xi, {a, b}, lambda);
        } catch (const DomainError&) {
        }
      }
    if (found) break;
  }
  REQUIRE(found.has_value());
  const auto r = min_weight_count_formula(*found);
  CHECK(r.type == std::vector<std::size_t>{2, 2});
  CHECK(r.formula_count == 160);
  CHECK(r.lower_bound == 160);
  CHECK(count_at(*found, 2) == 160);

  const Element xi = F->elements_of_degree(4).front();
  const Element mu = F->elements_of_degree(2).front();
  CHECK_THROWS_AS(construct_lower_attaining(F, 2, xi, {mu, mu}, lambda), DomainError);
  CHECK_THROWS_AS(construct_lower_attaining(F, 2, lambda, {mu}, lambda), DomainError);
  CHECK_THROWS_AS(construct_lower_attaining(F, 2, xi, {mu, F->one(), F->from_prime(2)}, lambda), DomainError);
  CHECK_THROWS_AS(construct_lower_attaining(F, 2, xi, {mu}, F->one()), DomainError);
}

TEST_CASE("λ codes") {
  auto F = FieldContext::create(2, 1, 6);
  const Element l = F->elements_of_degree(3).front();
  const RankCode C = construct_lambda_code(F, l, 3, {3, 2, 1});
  CHECK(type_of(C) == std::vector<std::size_t>{3, 2, 1});
  CHECK_THROWS_AS(construct_lambda_code(F, l, 3, {4}), DomainError);
  CHECK_THROWS_AS(construct_lambda_code(F, l, 6, {2}), DomainError);
}

TEST_CASE("scalar relating two subspaces") {
  std::mt19937_64 rng(3);
  auto F = FieldContext::create(2, 1, 5);
  for (int rep = 0; rep < 10; ++rep) {
    const Subspace U = Subspace::span(F, random_block(*F, 3, rng));
    Element c = random_element(*F, rng);
    if (c.is_zero()) c = F->one();
    const auto d = scalar_relating(U, scale(c, U));
    REQUIRE(d.has_value());
    CHECK(scale(*d, U) == scale(c, U));
  }
  const Subspace U = Subspace::span(F, {F->one(), F->root()});
  const Subspace V = Subspace::span(F, {F->one(), F->pow(F->root(), 3)});
  const auto d = scalar_relating(U, V);
  if (d) CHECK(scale(*d, U) == V);
  CHECK_FALSE(scalar_relating(U, Subspace::span(F, {F->one()})).has_value());
}

TEST_CASE("nonprime characterization") {
  std::mt19937_64 rng(21);
  auto F16 = FieldContext::create(2, 1, 4);
  auto F64 = FieldContext::create(2, 1, 6);
  {
    const RankCode C = construct_subfield_extremal(F16, 2, 3, F16->elements_of_degree(4).front());
    for (const RankCode& D : {C, scramble(C, rng)}) {
      const auto v = check_char_nonprime(D);
      CHECK(v.status == VerdictStatus::verified);
      REQUIRE(v.witness.has_value());
      CHECK(v.witness->e == 2);
      CHECK(v.witness->r == 2);
      CHECK(v.witness->scalars.size() == 3);
      CHECK(is_subfield_linear(v.witness->H, 2));
      CHECK(v.witness->H.contains(F16->one()));
    }
  }
  {
    const RankCode C = construct_subfield_extremal(F64, 2, 2, F64->elements_of_degree(6).front());
    const auto v = check_char_nonprime(scramble(C, rng));
    CHECK(v.status == VerdictStatus::verified);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->e == 2);
    CHECK(v.witness->r == 3);
  }
  CHECK(check_char_nonprime(random_decomposable(F16, {3, 2}, rng)).status == VerdictStatus::not_applicable);
  // random codes never raise the alarm
  for (int rep = 0; rep < 20; ++rep) {
    const auto& F = rep % 2 ? F16 : F64;
    std::uniform_int_distribution<std::size_t> dn(1, F->m() - 1);
    const std::size_t n = dn(rng);
    const auto v = check_char_nonprime(random_decomposable(F, {F->m() - 1, n, n}, rng));
    CHECK(v.status != VerdictStatus::falsification_alarm);
    if (v.status == VerdictStatus::verified) CHECK(v.report.formula_count == v.report.upper_bound);
  }
}

TEST_CASE("prime characterization") {
  std::mt19937_64 rng(4);
  auto F128 = FieldContext::create(2, 1, 7);
  const Element l = F128->elements_of_degree(7).front();
  for (const RankCode& C : {construct_lambda_code(F128, l, 7, {3, 3, 3}),
                            build_completely_decomposable(F128, power_blocks(F128, {0, 1, 3}, 3)(l))}) {
    const auto v = check_char_prime(C);
    CHECK(v.status == VerdictStatus::verified);
    CHECK(v.report.formula_count == 889);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->product_dim == 6);
    CHECK(v.witness->scalars.size() == 3);
  }
  auto F32 = FieldContext::create(2, 1, 5);
  CHECK(check_char_prime(random_decomposable(F32, {3, 2}, rng)).status == VerdictStatus::not_applicable);
  for (int rep = 0; rep < 20; ++rep) {
    std::uniform_int_distribution<std::size_t> dn(1, 4);
    const std::size_t n = dn(rng);
    const RankCode C = rep % 3 ? random_decomposable(F32, {n, n}, rng)
                               : build_completely_decomposable(F32, std::vector<Vector>(2, random_block(*F32, n, rng)));
    const auto v = check_char_prime(scramble(C, rng));
    CHECK(v.status != VerdictStatus::falsification_alarm);
    CHECK((v.status == VerdictStatus::verified) == (v.report.formula_count == *v.report.prime_upper_bound));
  }
  CHECK_THROWS_AS(check_char_prime(random_decomposable(FieldContext::create(2, 1, 4), {2, 2}, rng)), DomainError);
}

TEST_CASE("searching λ by weight distribution") {
  auto F = FieldContext::create(2, 1, 4);
  const BlockMaker mk = power_blocks(F, {0, 1}, 2);
  const Element l = F->elements_of_degree(4).front();
  const auto target = weight_distribution(build_completely_decomposable(F, mk(l))).counts;
  const auto found = find_lambda_with_distribution(F, 4, mk, target);
  REQUIRE(found.has_value());
  CHECK(weight_distribution(build_completely_decomposable(F, mk(*found))).counts == target);
  CHECK_FALSE(find_lambda_with_distribution(F, 4, mk, {1, 2, 3}).has_value());
}
