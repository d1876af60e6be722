#include "rankdec/reproduce.hpp"

#include <algorithm>

#include "rankdec/errors.hpp"

namespace rankdec {

namespace {

using Counts = std::vector<std::uint64_t>;

ReproduceRow search_row(const ContextPtr& F, const std::string& label, unsigned e, const BlockMaker& blocks,
                        const Counts& expected, const EnumOptions& opt) {
  ReproduceRow row;
  row.label = label;
  row.expected = expected;
  row.lambda = find_lambda_with_distribution(F, e, blocks, expected, opt);
  if (row.lambda) {
    row.minimal_polynomial = F->minimal_polynomial(*row.lambda);
    row.computed = expected;
    row.matched = true;
  } else {
    // show what the first candidate gives instead
    const Element l = F->elements_of_degree(e).front();
    row.computed = weight_distribution(build_completely_decomposable(F, blocks(l)), opt).counts;
  }
  return row;
}

std::string counts_string(const Counts& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

// The minimum-weight count over every λ of the given degrees, via the closed form.
std::pair<std::string, bool> count_for_all(const ContextPtr& F, const std::vector<unsigned>& degrees,
                                           const std::vector<unsigned>& exponents, std::size_t copies,
                                           std::uint64_t expected) {
  std::size_t n = 0;
  bool ok = true;
  const BlockMaker mk = power_blocks(F, exponents, copies);
  for (unsigned e : degrees)
    for (auto l : F->elements_of_degree(e)) {
      ++n;
      ok = ok && min_weight_count_formula(build_completely_decomposable(F, mk(l))).formula_count == expected;
    }
  return {"minimum-weight count " + std::to_string(expected) + " for all " + std::to_string(n) + " candidate λ", ok};
}

ReproduceReport reproduce_m6(const EnumOptions& opt) {
  const ContextPtr F = FieldContext::create(2, 1, 6);
  ReproduceReport r{"m6", "GF(2^6)", {}, {}};
  const BlockMaker mk = power_blocks(F, {0, 1}, 3);
  r.rows.push_back(search_row(F, "(1,λ)^3, λ of degree 6", 6, mk, {1, 0, 441, 2646, 35280, 127008, 96768}, opt));
  r.rows.push_back(search_row(F, "(1,λ)^3, λ of degree 3", 3, mk, {1, 0, 441, 4158, 24696, 148176, 84672}, opt));
  r.notes.push_back(count_for_all(F, {3, 6}, {0, 1}, 3, 441));
  r.notes.push_back({"the two distributions differ", r.rows[0].expected != r.rows[1].expected});
  return r;
}

ReproduceReport reproduce_m7(const EnumOptions& opt) {
  const ContextPtr F = FieldContext::create(2, 1, 7);
  ReproduceReport r{"m7", "GF(2^7)", {}, {}};
  r.rows.push_back(search_row(F, "(1,λ,λ^2)^3", 7, power_blocks(F, {0, 1, 2}, 3),
                              {1, 0, 0, 889, 5334, 42672, 341376, 1706880, 0, 0}, opt));
  r.rows.push_back(search_row(F, "(1,λ,λ^3)^3", 7, power_blocks(F, {0, 1, 3}, 3),
                              {1, 0, 0, 889, 0, 37338, 394716, 1664208, 0, 0}, opt));
  r.notes.push_back(count_for_all(F, {7}, {0, 1, 2}, 3, 889));
  r.notes.push_back({"both rows have A_3 = 889 and the distributions differ",
                     r.rows[0].computed.size() > 3 && r.rows[1].computed.size() > 3 && r.rows[0].computed[3] == 889 &&
                         r.rows[1].computed[3] == 889 && r.rows[0].computed != r.rows[1].computed});
  if (r.rows[0].lambda) {
    const auto v = check_char_prime(build_completely_decomposable(F, power_blocks(F, {0, 1, 2}, 3)(*r.rows[0].lambda)), opt);
    r.notes.push_back({"prime-case characterization: " + to_string(v.status), v.status == VerdictStatus::verified});
  }
  return r;
}

ReproduceReport reproduce_extremal(const EnumOptions& opt) {
  const ContextPtr F = FieldContext::create(2, 1, 4);
  ReproduceReport r{"extremal", "GF(2^4), e=2, r=2, k=2", {}, {}};
  const Element xi = F->elements_of_degree(4).front();
  const RankCode C = construct_subfield_extremal(F, 2, 2, xi);
  ReproduceRow row;
  row.label = "F_2-basis of F_4, twice";
  row.symbol = "ξ";
  row.lambda = xi;
  row.minimal_polynomial = F->minimal_polynomial(xi);
  row.expected = {1, 0, 75, 0, 180};
  row.computed = weight_distribution(C, opt).counts;
  row.matched = row.computed == row.expected;
  r.rows.push_back(row);
  bool spectrum = true;
  for (std::size_t w = 1; w < row.computed.size(); ++w) spectrum = spectrum && (row.computed[w] == 0 || w == 2 || w == 4);
  r.notes.push_back({"nonzero weights lie in {2, 4}", spectrum});
  const auto v = check_char_nonprime(C, opt);
  r.notes.push_back({"count 75 equals the upper bound " + std::to_string(v.report.upper_bound), v.report.upper_bound == 75});
  r.notes.push_back({"subfield characterization: " + to_string(v.status), v.status == VerdictStatus::verified});
  return r;
}

ReproduceReport reproduce_lowerbound(const EnumOptions& opt) {
  const ContextPtr F = FieldContext::create(3, 1, 4);
  ReproduceReport r{"lowerbound", "GF(3^4), e=2, k=2", {}, {}};
  const Element lambda = F->elements_of_degree(2).front();
  std::vector<Element> sub;
  for (std::uint64_t x = 1; x < F->order(); ++x)
    if (F->in_subfield(Element{x}, 2)) sub.push_back(Element{x});
  ReproduceRow row;
  row.label = "A_2 of (λ^j + ξ μ_i λ^{jq})_j, i = 1, 2";
  row.expected = {160};
  row.symbol = "ξ";
  for (auto xi : F->elements_of_degree(4)) {
    for (auto a : sub)
      for (auto b : sub) {
        if (row.lambda) break;
        try {
          const RankCode C = construct_lower_attaining(F, 2, xi, {a, b}, lambda);
          row.lambda = xi;
          row.minimal_polynomial = F->minimal_polynomial(xi);
          const auto d = weight_distribution(C, opt);
          row.computed = {d.counts.at(2)};
          r.notes.push_back({"μ = (" + std::to_string(a.code) + ", " + std::to_string(b.code) + "), λ = " +
                                 std::to_string(lambda.code) + ", full distribution " + counts_string(d.counts),
                             true});
          r.notes.push_back({"lower bound " + std::to_string(min_weight_count_formula(C).lower_bound) + " attained",
                             min_weight_count_formula(C).lower_bound == d.counts.at(2)});
        } catch (const DomainError&) {
        }
      }
    if (row.lambda) break;
  }
  row.matched = row.computed == row.expected;
  r.rows.push_back(row);
  return r;
}

}  // namespace

bool ReproduceReport::passed() const {
  return std::all_of(rows.begin(), rows.end(), [](const ReproduceRow& r) { return r.matched; }) &&
         std::all_of(notes.begin(), notes.end(), [](const auto& n) { return n.second; });
}

std::vector<std::string> example_names() { return {"m6", "m7", "extremal", "lowerbound"}; }

ReproduceReport reproduce(const std::string& example, const EnumOptions& opt) {
  if (example == "m6") return reproduce_m6(opt);
  if (example == "m7") return reproduce_m7(opt);
  if (example == "extremal") return reproduce_extremal(opt);
  if (example == "lowerbound") return reproduce_lowerbound(opt);
  throw DomainError("unknown example " + example);
}

std::string polynomial_string(const Polynomial& f) {
  std::string s;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    const bool unit = f[i].code == 1;
    if (!unit || i == 0) s += std::to_string(f[i].code);
    if (i > 0) {
      s += (unit ? "" : "*");
      s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace rankdec
