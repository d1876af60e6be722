#include <set>

#include "doctest.h"
#include "rankdec/errors.hpp"
#include "rankdec/field.hpp"

using namespace rankdec;

namespace {

// Schoolbook product mod the context modulus, independent of the library kernels.
Element oracle_mul(const FieldContext& F, Element x, Element y) {
  const auto p = F.p();
  const unsigned n = F.degree();
  const auto dx = F.digits(x), dy = F.digits(y);
  std::vector<std::uint64_t> prod(2 * n, 0);
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{dx[i]} * dy[j]) % p;
  const auto& f = F.modulus();
  for (unsigned i = 2 * n; i-- > n;)
    for (unsigned j = 0; j < n; ++j) prod[i - n + j] = (prod[i - n + j] + (p - prod[i]) * f[j]) % p;
  std::vector<std::uint32_t> d(prod.begin(), prod.begin() + n);
  return F.from_digits(d);
}

Element oracle_pow_q(const FieldContext& F, Element x, unsigned times) {
  for (unsigned t = 0; t < times; ++t) x = F.pow(x, F.q());
  return x;
}

}  // namespace

TEST_CASE("F_4 arithmetic") {
  auto F = FieldContext::create(2, 1, 2);
  CHECK(F->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  const Element w = F->root();
  CHECK(w.code == 2);
  CHECK(F->add(w, F->mul(w, w)) == F->one());
  CHECK(F->mul(w, w) == F->add(w, F->one()));
  CHECK(F->frobenius(w, 1) == F->mul(w, w));
  CHECK(F->trace_rel(w, 1) == F->one());
  CHECK(F->norm_rel(w, 1) == F->one());
  CHECK(F->degree_over_q(w) == 2);
  CHECK(F->degree_over_q(F->zero()) == 1);
  const auto f = F->minimal_polynomial(w);
  CHECK(f == Polynomial{F->one(), F->one(), F->one()});
  CHECK(F->derivative_at(f, w) == F->one());
  CHECK(F->add(w, w) == F->zero());
}

TEST_CASE("multiplication agrees with the schoolbook oracle") {
  for (auto [p, a, m] : {std::tuple{2u, 1u, 6u}, {3u, 1u, 4u}, {2u, 2u, 3u}, {5u, 1u, 3u}, {3u, 2u, 2u}}) {
    auto F = FieldContext::create(p, a, m);
    const std::uint64_t step = F->order() / 97 + 1;
    for (std::uint64_t x = 0; x < F->order(); x += step)
      for (std::uint64_t y = 1; y < F->order(); y += step) {
        const Element ex{x}, ey{y};
        CHECK(F->mul(ex, ey) == oracle_mul(*F, ex, ey));
        CHECK(F->mul(ex, F->inv(ey)) == oracle_mul(*F, ex, F->pow(ey, F->order() - 2)));
      }
  }
}

TEST_CASE("field axioms on every element of small fields") {
  for (auto [p, a, m] : {std::tuple{2u, 1u, 4u}, {3u, 1u, 3u}, {2u, 2u, 2u}}) {
    auto F = FieldContext::create(p, a, m);
    for (std::uint64_t x = 1; x < F->order(); ++x) {
      const Element e{x};
      CHECK(F->mul(e, F->inv(e)) == F->one());
      CHECK(F->pow(e, F->order() - 1) == F->one());
      CHECK(F->add(e, F->neg(e)) == F->zero());
      CHECK(F->frobenius(e, m) == e);
    }
    CHECK_THROWS_AS(F->inv(F->zero()), DomainError);
  }
}

TEST_CASE("frobenius matches repeated q-th powers") {
  auto F = FieldContext::create(3, 2, 3);
  for (std::uint64_t x = 0; x < F->order(); x += 37)
    for (unsigned e = 0; e <= 4; ++e) CHECK(F->frobenius(Element{x}, e) == oracle_pow_q(*F, Element{x}, e));
}

TEST_CASE("frobenius fixes exactly q^e elements") {
  auto F = FieldContext::create(2, 1, 6);
  for (unsigned e : {1u, 2u, 3u, 6u}) {
    std::uint64_t fixed = 0;
    for (std::uint64_t x = 0; x < F->order(); ++x) fixed += F->in_subfield(Element{x}, e);
    CHECK(fixed == F->q_pow(e));
  }
  auto G = FieldContext::create(2, 2, 3);
  std::uint64_t fixed = 0;
  for (std::uint64_t x = 0; x < G->order(); ++x) fixed += G->in_fq(Element{x});
  CHECK(fixed == 4);
}

TEST_CASE("trace transitivity and relative trace image") {
  for (auto [p, a, m] : {std::tuple{2u, 1u, 6u}, {3u, 1u, 4u}, {2u, 2u, 4u}}) {
    auto F = FieldContext::create(p, a, m);
    for (std::uint64_t x = 0; x < F->order(); x += 7) {
      const Element ex{x};
      const Element full = F->trace_rel(ex, 1);
      CHECK(F->in_fq(full));
      for (unsigned e : F->divisors_of_m()) {
        const Element t = F->trace_rel(ex, e);
        CHECK(F->in_subfield(t, e));
        Element inner = F->zero(), y = t;
        for (unsigned i = 0; i < e; ++i) {
          inner = F->add(inner, y);
          y = oracle_pow_q(*F, y, 1);
        }
        CHECK(inner == full);
        CHECK(F->in_subfield(F->norm_rel(ex, e), e));
      }
    }
  }
}

TEST_CASE("relative trace form is nondegenerate") {
  auto F = FieldContext::create(2, 1, 6);
  for (unsigned e : {1u, 2u, 3u}) {
    for (std::uint64_t x = 1; x < F->order(); ++x) {
      bool found = false;
      for (std::uint64_t y = 1; y < F->order() && !found; ++y)
        found = !F->trace_rel(F->mul(Element{x}, Element{y}), e).is_zero();
      CHECK(found);
    }
  }
}

TEST_CASE("norm is multiplicative") {
  auto F = FieldContext::create(3, 1, 4);
  for (std::uint64_t x = 1; x < F->order(); x += 5)
    for (std::uint64_t y = 1; y < F->order(); y += 11)
      CHECK(F->norm_rel(F->mul(Element{x}, Element{y}), 2) ==
            F->mul(F->norm_rel(Element{x}, 2), F->norm_rel(Element{y}, 2)));
}

TEST_CASE("minimal polynomials") {
  auto F = FieldContext::create(3, 1, 4);
  for (std::uint64_t x = 0; x < F->order(); ++x) {
    const Element e{x};
    const auto f = F->minimal_polynomial(e);
    CHECK(f.size() == F->degree_over_q(e) + 1);
    CHECK(f.back() == F->one());
    CHECK(F->evaluate(f, e).is_zero());
    for (auto c : f) CHECK(F->in_fq(c));
    CHECK_FALSE(F->derivative_at(f, e).is_zero());
  }
  const auto lin = F->minimal_polynomial(F->from_int(2));
  CHECK(lin == Polynomial{F->from_int(1), F->one()});
}

TEST_CASE("elements of a given degree") {
  auto F = FieldContext::create(2, 1, 6);
  CHECK(F->elements_of_degree(1).size() == 2);
  CHECK(F->elements_of_degree(2).size() == 2);
  CHECK(F->elements_of_degree(3).size() == 6);
  CHECK(F->elements_of_degree(6).size() == 54);
  for (unsigned e : {1u, 2u, 3u, 6u})
    for (std::uint64_t seed : {0ull, 1ull, 99ull}) {
      const Element x = F->find_element_of_degree(e, seed);
      CHECK(F->degree_over_q(x) == e);
      CHECK(x == F->find_element_of_degree(e, seed));
    }
  // a root of an irreducible cubic over F_2 has degree 3
  const Element lambda = F->elements_of_degree(3).front();
  CHECK(F->minimal_polynomial(lambda).size() == 4);
  CHECK_THROWS_AS(F->find_element_of_degree(4, 0), DomainError);
}

TEST_CASE("F_q coordinates and subfield bases") {
  auto F = FieldContext::create(2, 2, 3);
  CHECK(F->fq_elements().size() == 4);
  std::set<Element> fq(F->fq_elements().begin(), F->fq_elements().end());
  for (auto s : fq) CHECK(F->in_fq(s));
  for (std::uint64_t x = 0; x < F->order(); ++x) {
    const auto c = F->fq_coordinates(Element{x});
    Element back = F->zero();
    for (unsigned j = 0; j < 3; ++j) {
      CHECK(fq.count(c[j]) == 1);
      back = F->add(back, F->mul(c[j], F->fq_basis()[j]));
    }
    CHECK(back == Element{x});
  }
  for (unsigned e : F->divisors_of_m()) CHECK(F->subfield_fp_basis(e).size() == 2 * e);
  CHECK(F->degree_over_q(F->subfield_generator(3)) == 3);

  auto G = F->with_fq_basis({F->from_int(5), F->from_int(17), F->from_int(40)});
  CHECK(G->compatible(*F));
  const auto c = G->fq_coordinates(F->from_int(33));
  Element back = F->zero();
  for (unsigned j = 0; j < 3; ++j) back = F->add(back, F->mul(c[j], G->fq_basis()[j]));
  CHECK(back == F->from_int(33));
  CHECK_THROWS_AS(F->with_fq_basis({F->one(), F->one(), F->root()}), DomainError);
}

TEST_CASE("context validation") {
  CHECK_THROWS_AS(FieldContext::create(4, 1, 2), DomainError);
  CHECK_THROWS_AS(FieldContext::create(2, 1, 33), DomainError);
  CHECK_THROWS_AS(FieldContext::create(2, 1, 2, std::vector<std::uint32_t>{1, 0, 1}), DomainError);
  auto F = FieldContext::create(2, 1, 2, std::vector<std::uint32_t>{1, 1, 1});
  auto G = FieldContext::create(3, 1, 2);
  CHECK_FALSE(F->compatible(*G));
  CHECK_THROWS_AS(F->from_int(4), DomainError);
  auto one = FieldContext::create(5, 1, 1);
  CHECK(one->degree_over_q(one->from_int(3)) == 1);
  CHECK(one->mul(one->from_int(3), one->from_int(4)) == one->from_int(2));
  auto big = FieldContext::create(2, 1, 32);
  const Element g = big->from_int(0x12345678);
  CHECK(big->mul(g, big->inv(g)) == big->one());
}
