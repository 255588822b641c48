#include "chainperm/errors.hpp"
#include "chainperm/verify.hpp"

namespace chainperm {

namespace {

BigInt brute(std::size_t n, const Chain& chain, const VerifyOptions& options) {
  CountOptions opts;
  opts.jobs = options.jobs;
  opts.max_full_n = options.max_full_n;
  return count_chain(n, chain, opts).count;
}

template <typename Formula>
TableRow make_row(std::string label, const std::string& chain_text, std::string formula, std::string oeis,
                  const std::vector<std::size_t>& columns, const VerifyOptions& options,
                  Formula&& formula_at) {
  TableRow row;
  row.label = std::move(label);
  row.chain = chain_text;
  row.formula = std::move(formula);
  row.oeis = std::move(oeis);
  const Chain chain = parse_chain(chain_text);
  for (std::size_t n : columns) {
    row.brute.emplace_back(brute(n, chain, options));
    row.formula_values.push_back(formula_at(n));
  }
  return row;
}

Table table1(std::size_t n_max, const VerifyOptions& options) {
  Table t;
  t.which = 1;
  t.title = "unimodal permutations whose square avoids tau: c_n(213,312 : tau)";
  t.formula_heading = "closed form";
  for (std::size_t n = 1; n <= n_max; ++n) t.columns.push_back(n);
  const char* forms[][3] = {
      {"123", "floor(n/2) (n >= 8)", "A004526"},
      {"132", "n + 1 (n >= 3)", "A000027"},
      {"213", "ceil(n(n+1)/3)", "A007980"},
      {"231", "ceil(n(n+1)/3)", "A007980"},
      {"312", "floor(n^2/4) + 1", "A033638"},
      {"321", "floor((n+3)^2/4) - 5 (n >= 3)", "A002620-5"}};
  for (const auto& f : forms) {
    const Permutation tau = parse_permutation(f[0]);
    t.rows.push_back(make_row(f[0], std::string("(213,312 : ") + f[0] + ")", f[1], f[2], t.columns,
                              options, [&](std::size_t n) -> std::optional<BigInt> {
                                if (n < unimodal_square_min_n(tau)) return std::nullopt;
                                return table1_value(tau, n);
                              }));
  }
  return t;
}

Table table2(std::size_t n_max, const VerifyOptions& options) {
  Table t;
  t.which = 2;
  t.title = "c_n(312 : tau) with lower bounds";
  t.formula_heading = "lower bound";
  for (std::size_t n = 3; n <= n_max; ++n) t.columns.push_back(n);
  const char* forms[][2] = {{"132", "2^(n-1)"},
                            {"213", "floor(10/7 * 2^(n-1))"},
                            {"231", "b_n"},
                            {"321", "d_n"}};
  for (const auto& f : forms) {
    const Permutation tau = parse_permutation(f[0]);
    t.rows.push_back(make_row(f[0], std::string("(312 : ") + f[0] + ")", f[1], "", t.columns, options,
                              [&](std::size_t n) -> std::optional<BigInt> {
                                return lower_bound_312_formula(tau, n);
                              }));
  }
  return t;
}

Table table3(std::size_t n_max, const VerifyOptions& options) {
  Table t;
  t.which = 3;
  t.title = "layered permutations satisfying (231,321 : t1 : t2 : t3)";
  t.formula_heading = "closed form";
  for (std::size_t n = 1; n <= n_max; ++n) t.columns.push_back(n);
  for (const LayeredTableRow& r : layered_table_rows()) {
    const std::string id = r.id;
    t.rows.push_back(make_row(id, r.chain, r.closed_form, r.oeis, t.columns, options,
                              [&](std::size_t n) -> std::optional<BigInt> {
                                return table3_value(id, n);
                              }));
  }
  return t;
}

}  // namespace

Table build_table(int which, std::size_t n_max, const VerifyOptions& options) {
  switch (which) {
    case 1: return table1(n_max, options);
    case 2: return table2(n_max, options);
    case 3: return table3(n_max, options);
    default: break;
  }
  throw InvalidArgument("table must be 1, 2 or 3");
}

}  // namespace chainperm
