#pragma once
// Brute-force reference computations used only by tests. They avoid the echelon machinery
// of the library and work directly on element sets.

#include <set>
#include <vector>

#include "rankdec/field.hpp"

namespace oracle {

using rankdec::Element;
using rankdec::FieldContext;

/// All elements of the subfield F_{q^e}, by scanning the whole field.
inline std::vector<Element> subfield(const FieldContext& F, unsigned e) {
  std::vector<Element> out;
  for (std::uint64_t x = 0; x < F.order(); ++x) {
    Element y{x};
    if (F.pow(y, F.q_pow(e)) == y) out.push_back(y);
  }
  return out;
}

/// Closure of gens under addition and multiplication by scalars.
inline std::set<Element> span(const FieldContext& F, const std::vector<Element>& gens,
                              const std::vector<Element>& scalars) {
  std::set<Element> s{F.zero()};
  for (auto g : gens) {
    std::set<Element> next;
    for (auto x : s)
      for (auto c : scalars) next.insert(F.add(x, F.mul(c, g)));
    s = std::move(next);
  }
  return s;
}

inline std::uint32_t abs_trace(const FieldContext& F, Element x) {
  Element s = F.zero(), y = x;
  for (unsigned i = 0; i < F.degree(); ++i) {
    s = F.add(s, y);
    y = F.pow(y, F.p());
  }
  return static_cast<std::uint32_t>(s.code);
}

/// {b : Tr_{q^m/q^e}(ab) = 0 for all a in U}, by exhaustion.
inline std::set<Element> trace_dual(const FieldContext& F, const std::set<Element>& U, unsigned e) {
  std::set<Element> out;
  for (std::uint64_t b = 0; b < F.order(); ++b) {
    bool ok = true;
    for (auto a : U) {
      Element s = F.zero(), y = F.mul(a, Element{b});
      for (unsigned i = 0; i < F.m() / e; ++i) {
        s = F.add(s, y);
        y = F.pow(y, F.q_pow(e));
      }
      if (!s.is_zero()) {
        ok = false;
        break;
      }
    }
    if (ok) out.insert(Element{b});
  }
  return out;
}

inline std::set<Element> product(const FieldContext& F, const std::set<Element>& U1, const std::set<Element>& U2,
                                 const std::vector<Element>& fq) {
  std::vector<Element> gens;
  for (auto a : U1)
    for (auto b : U2) gens.push_back(F.mul(a, b));
  // spanning set is large; add one generator at a time and skip those already inside
  std::set<Element> s{F.zero()};
  for (auto g : gens) {
    if (s.count(g)) continue;
    std::set<Element> next;
    for (auto x : s)
      for (auto c : fq) next.insert(F.add(x, F.mul(c, g)));
    s = std::move(next);
  }
  return s;
}

inline std::set<Element> scaled(const FieldContext& F, Element c, const std::set<Element>& U) {
  std::set<Element> out;
  for (auto u : U) out.insert(F.mul(c, u));
  return out;
}

inline unsigned log_q(std::uint64_t size, std::uint64_t q) {
  unsigned d = 0;
  while (size > 1) {
    size /= q;
    ++d;
  }
  return d;
}

/// Rank weight as log_q of the size of the F_q-span of the entries.
inline unsigned rank_weight(const FieldContext& F, const std::vector<Element>& v) {
  return log_q(span(F, v, subfield(F, 1)).size(), F.q());
}

}  // namespace oracle
