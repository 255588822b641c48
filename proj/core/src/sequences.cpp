#include "chainperm/sequences.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "chainperm/errors.hpp"
#include "chainperm/rational_gf.hpp"

namespace chainperm {

namespace {

std::string text_of(const Permutation& p) { return to_string(p); }

void require_length3(const Permutation& tau) {
  if (tau.size() != 3) throw InvalidArgument("expected a pattern of length 3, got " + text_of(tau));
}

void require_range(std::size_t n, std::size_t min_n, const std::string& what) {
  if (n < min_n) {
    throw OutOfStatedRange(what + " is only claimed for n >= " + std::to_string(min_n) +
                           " (got n = " + std::to_string(n) + ")");
  }
}

BigInt pow2(std::size_t e) { return BigInt(1) << e; }

BigInt gf_term(const RationalGF& gf, std::size_t n) { return gf_coefficients(gf, n)[n]; }

BigInt fib(std::size_t n) { return special_sequence(SpecialKind::fibonacci, n); }
BigInt trib(std::size_t n) { return special_sequence(SpecialKind::tribonacci, n); }
BigInt tetra(std::size_t n) { return special_sequence(SpecialKind::tetranacci, n); }

using I = std::int64_t;

BigInt row_132_k2(std::size_t n) {
  BigInt s = 0;
  for (I m = 0; m <= static_cast<I>(n) - 1; ++m) {
    for (I i = 0; i <= m / 2; ++i) s += binomial(m - i, i);
  }
  return s;
}

BigInt row_132_k3(std::size_t n) {
  BigInt s = 0;
  for (I m = 0; m <= static_cast<I>(n) - 1; ++m) {
    for (I i = 0; i <= m / 3; ++i) s += binomial(m - 2 * i, i);
  }
  return s;
}

BigInt row_132_k4(std::size_t n) {
  BigInt s = 0;
  for (I m = 0; m <= static_cast<I>(n) - 1; ++m) {
    for (I i = 0; i <= m / 4; ++i) {
      for (I j = 0; j <= (m - 4 * i) / 2; ++j) {
        s += binomial(m - 3 * i - j, i) * binomial(m - 4 * i - j, j);
      }
    }
  }
  return s;
}

// The printed sum uses both n and m; m = n makes it the multinomial count of
// compositions of n into i fives, j fours, r twos and ones.
BigInt row_312_k4(std::size_t n_) {
  const I n = static_cast<I>(n_);
  const I m = n;
  BigInt s = 0;
  for (I i = 0; i <= n / 5; ++i) {
    for (I j = 0; j <= (m - 5 * i) / 4; ++j) {
      for (I r = 0; r <= (m - 5 * i - 4 * j) / 2; ++r) {
        s += binomial(n - 4 * i - 3 * j - r, i) * binomial(m - 5 * i - 3 * j - r, j) *
             binomial(m - 5 * i - 4 * j - r, r);
      }
    }
  }
  return s;
}

BigInt row_mixed_3_4(std::size_t n_) {
  const I n = static_cast<I>(n_);
  const I upper = (2 * n + 2) / 3;  // ceil(2n/3)
  BigInt s = 0;
  for (I k = 0; k <= upper; ++k) s += binomial(n - k, k / 2);
  return s;
}

struct RowDef {
  LayeredTableRow row;
  std::function<BigInt(std::size_t)> closed_form;
  // (pattern, power) pairs; power 2 is the first slot after (231,321).
  std::vector<std::pair<const char*, unsigned>> constraints;
};

const std::vector<RowDef>& row_defs() {
  static const std::vector<RowDef> defs = [] {
    std::vector<RowDef> d;
    auto add = [&](std::string id, std::string form, std::string oeis,
                   std::function<BigInt(std::size_t)> f,
                   std::vector<std::pair<const char*, unsigned>> cons) {
      std::string chain = "(231,321";
      std::string rest = id;
      std::size_t start = 0;
      for (int slot = 0; slot < 3; ++slot) {
        const std::size_t colon = rest.find(':', start);
        chain += " : " + rest.substr(start, colon == std::string::npos ? std::string::npos
                                                                         : colon - start);
        start = colon + 1;
      }
      chain += ")";
      d.push_back({{std::move(id), std::move(form), std::move(oeis), std::move(chain)},
                   std::move(f),
                   std::move(cons)});
    };
    add("132:_:_", "F_{n+2} - 1 = sum_{m=0}^{n-1} sum_{i=0}^{floor(m/2)} C(m-i, i)", "A000071",
        row_132_k2, {{"132", 2}});
    add("_:132:_", "sum_{m=0}^{n-1} sum_{i=0}^{floor(m/3)} C(m-2i, i)", "A077868", row_132_k3,
        {{"132", 3}});
    add("_:_:132",
        "sum_{m=0}^{n-1} sum_{i=0}^{floor(m/4)} sum_{j=0}^{floor((m-4i)/2)} C(m-3i-j, i) C(m-4i-j, j)",
        "A368299", row_132_k4, {{"132", 4}});
    add("231:_:_", "F_{n+1}", "A000045", [](std::size_t n) -> BigInt { return fib(n + 1); }, {{"231", 2}});
    add("_:231:_", "T_{n+2}", "A000073", [](std::size_t n) -> BigInt { return trib(n + 2); }, {{"231", 3}});
    add("_:_:231", "Q_{n+3}", "A000078", [](std::size_t n) -> BigInt { return tetra(n + 3); }, {{"231", 4}});
    add("312:_:_", "T_{n+2}", "A000073", [](std::size_t n) -> BigInt { return trib(n + 2); }, {{"312", 2}});
    add("_:312:_", "Q_{n+3}", "A000078", [](std::size_t n) -> BigInt { return tetra(n + 3); }, {{"312", 3}});
    add("_:_:312",
        "sum_{i,j,r} C(n-4i-3j-r, i) C(m-5i-3j-r, j) C(m-5i-4j-r, r), m = n", "A079976",
        row_312_k4, {{"312", 4}});
    add("132:231:_", "2F_n", "A006355", [](std::size_t n) -> BigInt { return 2 * fib(n); },
        {{"132", 2}, {"231", 3}});
    add("132:_:231", "2F_{n+1} - F_n", "A000032",
        [](std::size_t n) -> BigInt { return 2 * fib(n + 1) - fib(n); }, {{"132", 2}, {"231", 4}});
    add("_:132:231", "sum_{k=0}^{ceil(2n/3)} C(n-k, floor(k/2))", "A097333", row_mixed_3_4,
        {{"132", 3}, {"231", 4}});
    return d;
  }();
  return defs;
}

const RowDef& row_def(std::string_view id) {
  for (const RowDef& d : row_defs()) {
    if (d.row.id == id) return d;
  }
  throw UnknownRow("unknown table row '" + std::string(id) + "'");
}

Permutation p3(const char* text) { return parse_permutation(text); }

}  // namespace

BigInt special_sequence(SpecialKind kind, std::size_t n) {
  std::vector<BigInt> init;
  switch (kind) {
    case SpecialKind::fibonacci: init = {0, 1}; break;
    case SpecialKind::lucas: init = {2, 1}; break;
    case SpecialKind::tribonacci: init = {0, 0, 1}; break;
    case SpecialKind::tetranacci: init = {0, 0, 0, 1}; break;
  }
  const std::size_t order = init.size();
  if (n < order) return init[n];
  std::vector<BigInt> window = init;
  for (std::size_t i = order; i <= n; ++i) {
    BigInt next = 0;
    for (const BigInt& v : window) next += v;
    window.erase(window.begin());
    window.push_back(next);
  }
  return window.back();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::size_t unimodal_square_min_n(const Permutation& tau) {
  require_length3(tau);
  const std::string t = text_of(tau);
  if (t == "123") return 8;
  if (t == "132" || t == "321") return 3;
  return 1;
}

BigInt unimodal_square_formula(const Permutation& tau, std::size_t n_) {
  require_length3(tau);
  const std::string t = text_of(tau);
  const BigInt n = n_;
  if (t == "123") return n / 2;
  if (t == "132") return n + 1;
  if (t == "213" || t == "231") return (n * (n + 1) + 2) / 3;
  if (t == "312") return n * n / 4 + 1;
  return (n + 3) * (n + 3) / 4 - 5;  // 321
}

BigInt table1_value(const Permutation& tau, std::size_t n) {
  require_range(n, unimodal_square_min_n(tau), "c_n(213,312 : " + text_of(tau) + ")");
  return unimodal_square_formula(tau, n);
}

std::size_t lower_bound_312_min_n(const Permutation& tau) {
  require_length3(tau);
  const std::string t = text_of(tau);
  if (t == "123") return 8;
  if (t == "132") return 3;
  if (t == "213") return 5;
  if (t == "231" || t == "321") return 1;
  throw InvalidArgument("no lower bound is stated for (312 : 312)");
}

BigInt ten_sevenths_bound(std::size_t n) {
  if (n == 0) throw InvalidArgument("bound requires n >= 1");
  return 10 * pow2(n - 1) / 7;
}

BigInt lower_bound_312_formula(const Permutation& tau, std::size_t n) {
  require_length3(tau);
  const std::string t = text_of(tau);
  if (t == "123") return BigInt(n / 2);
  if (t == "132") return n == 0 ? BigInt(0) : pow2(n - 1);
  if (t == "213") return ten_sevenths_bound(n);
  if (t == "231") return gf_term(strong_312_gf(), n);
  if (t == "321") return gf_term(bound_312_321_gf(), n);
  throw InvalidArgument("no lower bound is stated for (312 : 312)");
}

BigInt lower_bound_312(const Permutation& tau, std::size_t n) {
  require_range(n, lower_bound_312_min_n(tau), "lower bound for c_n(312 : " + text_of(tau) + ")");
  return lower_bound_312_formula(tau, n);
}

PartConstraint layered_power_constraint(const Permutation& tau, unsigned k) {
  require_length3(tau);
  if (k < 2) throw InvalidArgument("power k must be at least 2");
  const std::string t = text_of(tau);
  // pi^k is the direct sum of eps_{d_i}^k = iota_a (-) iota_{d-a}, a = k mod d.
  if (t == "132" || t == "213") {
    // 132: blocks after the first must be increasing (d | k). For 213 it is
    // the blocks before the last; reversing the composition gives the same count.
    return {PartSet::all(), PartSet::divisors_of(k)};
  }
  if (t == "231") {
    const PartSet s = PartSet::divisors_of(k).unite(PartSet::divisors_of(k - 1));
    return {s, s};
  }
  if (t == "312") {
    const PartSet s = PartSet::divisors_of(k).unite(PartSet::divisors_of(k + 1));
    return {s, s};
  }
  if (t == "321") return {PartSet::all(), PartSet::all()};
  throw InvalidArgument("no composition description for tau = " + t);
}

BigInt ck_value(const Permutation& tau, unsigned k, std::size_t n) {
  const PartConstraint pc = layered_power_constraint(tau, k);
  const std::string t = text_of(tau);
  if (n == 0 && (t == "132" || t == "213")) return 0;
  return count_compositions(n, pc);
}

const std::vector<LayeredTableRow>& layered_table_rows() {
  static const std::vector<LayeredTableRow> rows = [] {
    std::vector<LayeredTableRow> r;
    for (const RowDef& d : row_defs()) r.push_back(d.row);
    return r;
  }();
  return rows;
}

const LayeredTableRow& layered_table_row(std::string_view id) { return row_def(id).row; }

BigInt table3_value(std::string_view row_id, std::size_t n) {
  const RowDef& d = row_def(row_id);
  if (n == 0) throw OutOfStatedRange("table rows are defined for n >= 1");
  return d.closed_form(n);
}

BigInt table3_composition_count(std::string_view row_id, std::size_t n) {
  const RowDef& d = row_def(row_id);
  PartConstraint pc;
  for (const auto& [tau, k] : d.constraints) {
    const PartConstraint c = layered_power_constraint(p3(tau), k);
    pc.first_allowed = pc.first_allowed.intersect(c.first_allowed);
    pc.rest_allowed = pc.rest_allowed.intersect(c.rest_allowed);
  }
  return count_compositions(n, pc);
}

BigInt lucas_conjecture_value(std::size_t n) {
  return special_sequence(SpecialKind::lucas, n + 1) - BigInt((n + 1) / 2) - 1;
}

BigInt consecutive_conjecture_value(std::size_t n) {
  if (n < 2) throw OutOfStatedRange("2^(n-2) + n - 1 requires n >= 2");
  return pow2(n - 2) + n - 1;
}

BigInt catalan(std::size_t n) {
  const auto m = static_cast<std::int64_t>(n);
  return binomial(2 * m, m) / (m + 1);
}

namespace {

struct Evaluator {
  SequenceInfo info;
  std::function<std::size_t(const SequenceSpec&)> min_n;
  std::function<BigInt(const SequenceSpec&, std::size_t)> eval;
};

const std::vector<Evaluator>& evaluators() {
  static const std::vector<Evaluator> list = [] {
    std::vector<Evaluator> e;
    auto fixed = [](std::size_t m) { return [m](const SequenceSpec&) { return m; }; };
    for (const char* tau : {"123", "132", "213", "231", "312", "321"}) {
      static const std::map<std::string, std::string> oeis = {
          {"123", "A004526"}, {"132", "A000027"}, {"213", "A007980"},
          {"231", "A007980"}, {"312", "A033638"}, {"321", "A002620-5"}};
      const Permutation t = p3(tau);
      e.push_back({{std::string("uni-") + tau,
                    std::string("c_n(213,312 : ") + tau + "), unimodal permutations whose square avoids " + tau,
                    oeis.at(tau)},
                   fixed(unimodal_square_min_n(t)),
                   [t](const SequenceSpec&, std::size_t n) -> BigInt { return table1_value(t, n); }});
    }
    for (const char* tau : {"123", "132", "213", "231", "321"}) {
      const Permutation t = p3(tau);
      e.push_back({{std::string("lb-312-") + tau,
                    std::string("lower bound on c_n(312 : ") + tau + ")", std::nullopt},
                   fixed(lower_bound_312_min_n(t)),
                   [t](const SequenceSpec&, std::size_t n) -> BigInt { return lower_bound_312(t, n); }});
    }
    e.push_back({{"lb-312-132-improved", "floor(10/7 * 2^(n-1)), improved bound on c_n(312 : 132)",
                  std::nullopt},
                 fixed(5),
                 [](const SequenceSpec&, std::size_t n) -> BigInt {
                   require_range(n, 5, "improved bound");
                   return ten_sevenths_bound(n);
                 }});
    e.push_back({{"gf-b", "coefficients of (1-x-x^2+x^3)/(1-2x-x^2+2x^3-x^4)", std::nullopt},
                 fixed(0),
                 [](const SequenceSpec&, std::size_t n) -> BigInt { return gf_term(strong_312_gf(), n); }});
    e.push_back({{"gf-d", "coefficients of (1-x-x^2+x^3)/(1-2x-x^2+x^3)", std::nullopt},
                 fixed(0),
                 [](const SequenceSpec&, std::size_t n) -> BigInt { return gf_term(bound_312_321_gf(), n); }});
    for (const char* tau : {"132", "213", "231", "312", "321"}) {
      const Permutation t = p3(tau);
      e.push_back({{std::string("ck-") + tau,
                    std::string("c_n(231,321 : _^(k-2) : ") + tau + "), parameter --k", std::nullopt},
                   fixed(0),
                   [t](const SequenceSpec& s, std::size_t n) -> BigInt { return ck_value(t, s.k, n); }});
    }
    e.push_back({{"table3", "closed form of a (231,321 : t1 : t2 : t3) row, parameter --row",
                  std::nullopt},
                 fixed(1),
                 [](const SequenceSpec& s, std::size_t n) -> BigInt { return table3_value(s.row, n); }});
    e.push_back({{"table3-compositions",
                  "composition count of a (231,321 : t1 : t2 : t3) row, parameter --row",
                  std::nullopt},
                 fixed(0),
                 [](const SequenceSpec& s, std::size_t n) -> BigInt {
                   return table3_composition_count(s.row, n);
                 }});
    const std::pair<const char*, SpecialKind> specials[] = {
        {"fibonacci", SpecialKind::fibonacci},
        {"lucas", SpecialKind::lucas},
        {"tribonacci", SpecialKind::tribonacci},
        {"tetranacci", SpecialKind::tetranacci}};
    const char* special_oeis[] = {"A000045", "A000032", "A000073", "A000078"};
    for (std::size_t i = 0; i < 4; ++i) {
      const SpecialKind kind = specials[i].second;
      e.push_back({{specials[i].first, specials[i].first, special_oeis[i]},
                   fixed(0),
                   [kind](const SequenceSpec&, std::size_t n) -> BigInt { return special_sequence(kind, n); }});
    }
    e.push_back({{"conj-lucas", "L_{n+1} - ceil(n/2) - 1", std::nullopt}, fixed(1),
                 [](const SequenceSpec&, std::size_t n) -> BigInt { return lucas_conjecture_value(n); }});
    e.push_back({{"conj-consecutive", "2^(n-2) + n - 1", std::nullopt}, fixed(2),
                 [](const SequenceSpec&, std::size_t n) -> BigInt { return consecutive_conjecture_value(n); }});
    e.push_back({{"catalan", "Catalan numbers", "A000108"}, fixed(0),
                 [](const SequenceSpec&, std::size_t n) -> BigInt { return catalan(n); }});
    e.push_back({{"pow2", "2^(n-1)", "A000079"}, fixed(1),
                 [](const SequenceSpec&, std::size_t n) -> BigInt { return pow2(n - 1); }});
    e.push_back({{"zero", "the zero sequence", std::nullopt}, fixed(0),
                 [](const SequenceSpec&, std::size_t) -> BigInt { return BigInt(0); }});
    return e;
  }();
  return list;
}

const Evaluator& evaluator(const std::string& id) {
  for (const Evaluator& e : evaluators()) {
    if (e.info.id == id) return e;
  }
  throw UnknownSequence("unknown sequence '" + id + "'");
}

}  // namespace

const std::vector<SequenceInfo>& sequence_catalog() {
  static const std::vector<SequenceInfo> catalog = [] {
    std::vector<SequenceInfo> c;
    for (const Evaluator& e : evaluators()) c.push_back(e.info);
    return c;
  }();
  return catalog;
}

std::size_t sequence_min_n(const SequenceSpec& spec) { return evaluator(spec.id).min_n(spec); }

BigInt evaluate_sequence(const SequenceSpec& spec, std::size_t n) {
  const Evaluator& e = evaluator(spec.id);
  require_range(n, e.min_n(spec), describe(spec));
  return e.eval(spec, n);
}

std::string describe(const SequenceSpec& spec) {
  if (spec.id.starts_with("ck-")) return spec.id + "(k=" + std::to_string(spec.k) + ")";
  if (spec.id.starts_with("table3")) return spec.id + "(" + spec.row + ")";
  return spec.id;
}

}  // namespace chainperm
