#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <nlohmann/json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "chainperm/chain.hpp"
#include "chainperm/enumerate.hpp"
#include "chainperm/errors.hpp"
#include "chainperm/rational_gf.hpp"
#include "chainperm/sequences.hpp"
#include "chainperm/verify.hpp"

namespace chainperm::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxTableN = 14;

enum class Format { text, csv, json };

struct Globals {
  Format format = Format::text;
  std::size_t max_n = kDefaultFullCap;
  std::size_t jobs = 1;
};

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += csv_field(fields[i]);
  }
  return line;
}

std::string opt_text(const std::optional<BigInt>& v, const char* missing = "-") {
  return v ? to_string(*v) : std::string(missing);
}

Json opt_json(const std::optional<BigInt>& v) { return v ? Json(to_string(*v)) : Json(nullptr); }

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(raw, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != std::strlen(raw)) throw InvalidArgument(std::string(name) + " is not a natural number");
  return static_cast<std::size_t>(value);
}

Polynomial parse_coefficients(const std::string& text) {
  Polynomial p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InvalidArgument("empty coefficient in '" + text + "'");
    const std::string token = item.substr(b, e - b + 1);
    const std::size_t digits = token[0] == '-' || token[0] == '+' ? 1 : 0;
    if (digits == token.size() ||
        !std::all_of(token.begin() + static_cast<std::ptrdiff_t>(digits), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; })) {
      throw InvalidArgument("bad coefficient '" + token + "'");
    }
    p.emplace_back(token[0] == '+' ? token.substr(1) : token);
  }
  if (p.empty()) throw InvalidArgument("empty polynomial");
  return p;
}

// count ----------------------------------------------------------------------

struct CountArgs {
  std::string chain;
  std::size_t n = 0;
  bool ending_in_one = false;
  std::string source = "automatic";
};

CountOptions count_options(const Globals& g, const std::string& source) {
  CountOptions o;
  o.jobs = g.jobs;
  o.max_full_n = g.max_n;
  if (source == "structured") o.source = CountSource::structured;
  if (source == "full") o.source = CountSource::full;
  return o;
}

int cmd_count(const Globals& g, const CountArgs& a, std::ostream& out) {
  const Chain chain = parse_chain(a.chain);
  CountOptions o = count_options(g, a.source);
  const BigInt c = count_chain(a.n, chain, o).count;
  std::optional<BigInt> ending;
  if (a.ending_in_one) {
    o.ending_in_one = true;
    ending = count_chain(a.n, chain, o).count;
  }
  switch (g.format) {
    case Format::text:
      if (ending) {
        out << "c_n " << to_string(c) << "\na_n " << to_string(*ending) << '\n';
      } else {
        out << to_string(c) << '\n';
      }
      break;
    case Format::csv: {
      std::vector<std::string> head = {"chain", "n", "count"};
      std::vector<std::string> row = {format_chain(chain), std::to_string(a.n), to_string(c)};
      if (ending) {
        head.push_back("ending_in_one");
        row.push_back(to_string(*ending));
      }
      out << csv_line(head) << '\n' << csv_line(row) << '\n';
      break;
    }
    case Format::json: {
      Json j;
      j["chain"] = format_chain(chain);
      j["n"] = std::to_string(a.n);
      j["count"] = to_string(c);
      if (ending) j["ending_in_one"] = to_string(*ending);
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// list -------------------------------------------------------------------------

int cmd_list(const Globals& g, const CountArgs& a, std::ostream& out) {
  const Chain chain = parse_chain(a.chain);
  std::vector<Permutation> members;
  for_each_chain_avoider(a.n, chain, [&](const Permutation& p) { members.push_back(p); },
                         count_options(g, a.source));
  std::sort(members.begin(), members.end());
  switch (g.format) {
    case Format::text:
      for (const Permutation& p : members) out << to_string(p) << '\n';
      break;
    case Format::csv:
      out << "permutation\n";
      for (const Permutation& p : members) out << csv_field(to_string(p)) << '\n';
      break;
    case Format::json: {
      Json j = Json::array();
      for (const Permutation& p : members) j.push_back(to_string(p));
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// table --------------------------------------------------------------------------

int cmd_table(const Globals& g, int which, std::size_t n_max, std::ostream& out) {
  if (n_max > kMaxTableN) {
    throw CapExceeded("table n_max " + std::to_string(n_max) + " exceeds the cap " +
                      std::to_string(kMaxTableN));
  }
  VerifyOptions vo;
  vo.jobs = g.jobs;
  vo.max_full_n = g.max_n;
  const Table t = build_table(which, n_max, vo);

  switch (g.format) {
    case Format::text: {
      out << "Table " << t.which << ": " << t.title << '\n';
      std::ostringstream cols;
      for (std::size_t i = 0; i < t.columns.size(); ++i) cols << (i ? "," : "") << t.columns[i];
      out << "n: " << cols.str() << '\n';
      for (const TableRow& r : t.rows) {
        out << '\n' << r.label << "  " << r.chain;
        if (!r.oeis.empty()) out << "  [" << r.oeis << ']';
        out << "\n  brute force: ";
        for (std::size_t i = 0; i < r.brute.size(); ++i) out << (i ? "," : "") << opt_text(r.brute[i]);
        out << "\n  " << t.formula_heading << " " << r.formula << ": ";
        for (std::size_t i = 0; i < r.formula_values.size(); ++i) {
          out << (i ? "," : "") << opt_text(r.formula_values[i]);
        }
        out << '\n';
      }
      break;
    }
    case Format::csv: {
      std::vector<std::string> head = {"row", "chain", "formula", "oeis"};
      for (std::size_t n : t.columns) head.push_back("c_" + std::to_string(n));
      for (std::size_t n : t.columns) head.push_back("f_" + std::to_string(n));
      out << csv_line(head) << '\n';
      for (const TableRow& r : t.rows) {
        std::vector<std::string> row = {r.label, r.chain, r.formula, r.oeis};
        for (const auto& v : r.brute) row.push_back(opt_text(v, ""));
        for (const auto& v : r.formula_values) row.push_back(opt_text(v, ""));
        out << csv_line(row) << '\n';
      }
      break;
    }
    case Format::json: {
      Json j;
      j["table"] = std::to_string(t.which);
      j["title"] = t.title;
      j["formula_heading"] = t.formula_heading;
      Json cols = Json::array();
      for (std::size_t n : t.columns) cols.push_back(std::to_string(n));
      j["columns"] = cols;
      Json rows = Json::array();
      for (const TableRow& r : t.rows) {
        Json row;
        row["row"] = r.label;
        row["chain"] = r.chain;
        row["formula"] = r.formula;
        row["oeis"] = r.oeis;
        Json brute = Json::array();
        for (const auto& v : r.brute) brute.push_back(opt_json(v));
        Json formula = Json::array();
        for (const auto& v : r.formula_values) formula.push_back(opt_json(v));
        row["brute"] = brute;
        row["formula_values"] = formula;
        rows.push_back(row);
      }
      j["rows"] = rows;
      out << j.dump(2) << '\n';
      break;
    }
  }
  return kExitOk;
}

// verify -----------------------------------------------------------------------------

struct VerifyArgs {
  std::vector<std::string> claims;
  std::string filter;
  std::optional<std::size_t> n_lo;
  std::optional<std::size_t> n_hi;
  bool list = false;
  bool growth = false;
};

void print_claim_list(const Globals& g, std::ostream& out) {
  const auto& reg = claim_registry();
  switch (g.format) {
    case Format::text:
      for (const Claim& c : reg) {
        out << c.id << "  [" << to_string(c.status) << ", " << to_string(c.kind) << "]  " << c.chain
            << "  n=" << c.n_lo << ".." << c.n_hi << " (stated from " << c.stated_min_n << ")\n    "
            << c.description << '\n';
      }
      break;
    case Format::csv:
      out << "claim,status,kind,chain,n_lo,n_hi,stated_min_n,description\n";
      for (const Claim& c : reg) {
        out << csv_line({c.id, to_string(c.status), to_string(c.kind), c.chain, std::to_string(c.n_lo),
                         std::to_string(c.n_hi), std::to_string(c.stated_min_n), c.description})
            << '\n';
      }
      break;
    case Format::json: {
      Json arr = Json::array();
      for (const Claim& c : reg) {
        Json j;
        j["claim"] = c.id;
        j["status"] = to_string(c.status);
        j["kind"] = to_string(c.kind);
        j["chain"] = c.chain;
        j["n_lo"] = std::to_string(c.n_lo);
        j["n_hi"] = std::to_string(c.n_hi);
        j["stated_min_n"] = std::to_string(c.stated_min_n);
        j["description"] = c.description;
        arr.push_back(j);
      }
      out << arr.dump(2) << '\n';
      break;
    }
  }
}

void print_report_text(const Report& r, std::ostream& out) {
  out << "claim " << r.claim_id << " [" << to_string(r.status) << "]: " << to_string(r.verdict) << " ("
      << std::fixed << std::setprecision(3) << r.wall_seconds << " s)\n";
  out.unsetf(std::ios::floatfield);
  out << "  " << std::setw(4) << "n" << ' ' << std::setw(14) << "brute" << ' ' << std::setw(14) << "formula"
      << ' ' << std::setw(14) << "printed" << "  verdict\n";
  for (const NRecord& rec : r.records) {
    out << "  " << std::setw(4) << rec.n << ' ' << std::setw(14) << to_string(rec.brute) << ' '
        << std::setw(14) << opt_text(rec.formula) << ' ' << std::setw(14) << opt_text(rec.printed) << "  "
        << to_string(rec.verdict) << '\n';
  }
  for (const std::string& note : r.notes) out << "  note: " << note << '\n';
}

Json report_json(const Report& r) {
  Json j;
  j["claim"] = r.claim_id;
  j["status"] = to_string(r.status);
  j["verdict"] = to_string(r.verdict);
  std::ostringstream secs;
  secs << std::fixed << std::setprecision(6) << r.wall_seconds;
  j["wall_seconds"] = secs.str();
  Json recs = Json::array();
  for (const NRecord& rec : r.records) {
    Json x;
    x["n"] = std::to_string(rec.n);
    x["brute"] = to_string(rec.brute);
    x["formula"] = opt_json(rec.formula);
    x["printed"] = opt_json(rec.printed);
    x["in_range"] = rec.in_range;
    x["verdict"] = to_string(rec.verdict);
    recs.push_back(x);
  }
  j["records"] = recs;
  j["notes"] = r.notes;
  return j;
}

void print_reports(const Globals& g, const std::vector<Report>& reports,
                   const std::vector<GrowthRateCheck>& growth, std::ostream& out) {
  switch (g.format) {
    case Format::text:
      for (const Report& r : reports) print_report_text(r, out);
      for (const GrowthRateCheck& c : growth) {
        out << "growth rate " << c.name << ": computed " << std::setprecision(8) << c.computed
            << ", reported " << c.reported << (c.agrees ? " (agrees)" : " (DISCREPANCY)") << '\n';
      }
      break;
    case Format::csv:
      out << "claim,status,n,brute,formula,printed,in_range,verdict\n";
      for (const Report& r : reports) {
        for (const NRecord& rec : r.records) {
          out << csv_line({r.claim_id, to_string(r.status), std::to_string(rec.n), to_string(rec.brute),
                           opt_text(rec.formula, ""), opt_text(rec.printed, ""),
                           rec.in_range ? "true" : "false", to_string(rec.verdict)})
              << '\n';
        }
      }
      break;
    case Format::json: {
      Json j;
      Json arr = Json::array();
      for (const Report& r : reports) arr.push_back(report_json(r));
      j["reports"] = arr;
      if (!growth.empty()) {
        Json gr = Json::array();
        for (const GrowthRateCheck& c : growth) {
          std::ostringstream a, b;
          a << std::setprecision(10) << c.computed;
          b << std::setprecision(10) << c.reported;
          gr.push_back({{"name", c.name}, {"computed", a.str()}, {"reported", b.str()}, {"agrees", c.agrees}});
        }
        j["growth_rates"] = gr;
      }
      out << j.dump(2) << '\n';
      break;
    }
  }
}

int cmd_verify(const Globals& g, const VerifyArgs& a, std::ostream& out) {
  if (a.list) {
    print_claim_list(g, out);
    return kExitOk;
  }
  std::vector<const Claim*> selected;
  if (!a.claims.empty()) {
    for (const std::string& id : a.claims) selected.push_back(&find_claim(id));
  } else if (!a.growth || !a.filter.empty()) {
    for (const Claim& c : claim_registry()) {
      if (c.id.find(a.filter) != std::string::npos) selected.push_back(&c);
    }
    if (selected.empty()) throw UnknownClaim("no claim matches '" + a.filter + "'");
  }
  VerifyOptions vo;
  vo.jobs = g.jobs;
  vo.max_full_n = g.max_n;
  std::vector<Report> reports;
  for (const Claim* c : selected) {
    std::optional<NRange> range;
    if (a.n_lo || a.n_hi) range = NRange{a.n_lo.value_or(c->n_lo), a.n_hi.value_or(c->n_hi)};
    reports.push_back(verify_claim(*c, range, vo));
  }
  std::vector<GrowthRateCheck> growth;
  if (a.growth) growth = growth_rate_checks();
  print_reports(g, reports, growth, out);
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const Report& r) { return is_failure(r); });
  return failed ? kExitRefuted : kExitOk;
}

// seq / gf ------------------------------------------------------------------------------

struct SeqArgs {
  std::string id;
  unsigned k = 2;
  std::string row;
  std::optional<std::size_t> from;
  std::size_t to = 10;
  bool list = false;
};

void print_values(const Globals& g, const std::string& name, std::size_t first,
                  const std::vector<BigInt>& values, std::ostream& out) {
  switch (g.format) {
    case Format::text:
      for (std::size_t i = 0; i < values.size(); ++i) out << (i ? " " : "") << to_string(values[i]);
      out << '\n';
      break;
    case Format::csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i) out << first + i << ',' << to_string(values[i]) << '\n';
      break;
    case Format::json: {
      Json j;
      j["sequence"] = name;
      Json arr = Json::array();
      for (std::size_t i = 0; i < values.size(); ++i) {
        arr.push_back({{"n", std::to_string(first + i)}, {"value", to_string(values[i])}});
      }
      j["values"] = arr;
      out << j.dump(2) << '\n';
      break;
    }
  }
}

int cmd_seq(const Globals& g, const SeqArgs& a, std::ostream& out) {
  if (a.list) {
    for (const SequenceInfo& info : sequence_catalog()) {
      out << info.id << "  " << info.description;
      if (info.oeis) out << "  [" << *info.oeis << ']';
      out << '\n';
    }
    return kExitOk;
  }
  const SequenceSpec spec{a.id, a.k, a.row};
  const std::size_t first = a.from.value_or(sequence_min_n(spec));
  if (first > a.to) throw InvalidArgument("empty n range");
  std::vector<BigInt> values;
  for (std::size_t n = first; n <= a.to; ++n) values.push_back(evaluate_sequence(spec, n));
  print_values(g, describe(spec), first, values, out);
  return kExitOk;
}

struct GfArgs {
  std::string numerator;
  std::string denominator;
  std::size_t upto = 0;
  bool growth = false;
};

int cmd_gf(const Globals& g, const GfArgs& a, std::ostream& out) {
  const RationalGF gf(parse_coefficients(a.numerator), parse_coefficients(a.denominator));
  const std::vector<BigInt> values = gf_coefficients(gf, a.upto);
  print_values(g, a.numerator + " / " + a.denominator, 0, values, out);
  if (a.growth) {
    const double rate = growth_rate(gf);
    if (g.format == Format::json) {
      std::ostringstream s;
      s << std::setprecision(10) << rate;
      out << Json{{"growth_rate", s.str()}}.dump(2) << '\n';
    } else {
      out << "growth rate " << std::setprecision(10) << rate << '\n';
    }
  }
  return kExitOk;
}

// b-files ----------------------------------------------------------------------------------

struct BfileArgs {
  std::string id;
  std::string path;
  unsigned k = 2;
  std::string row;
  std::optional<std::size_t> from;
  std::size_t to = 30;
  std::optional<std::int64_t> offset;
  std::optional<std::int64_t> shift;
};

int cmd_bfile_export(const BfileArgs& a, std::ostream& out) {
  const SequenceSpec spec{a.id, a.k, a.row};
  const std::size_t first = a.from.value_or(sequence_min_n(spec));
  export_bfile(spec, first, a.to, a.path);
  out << "wrote " << (a.to >= first ? a.to - first + 1 : 0) << " terms of " << describe(spec) << " to "
      << a.path << '\n';
  return kExitOk;
}

int cmd_bfile_compare(const Globals& g, const BfileArgs& a, std::ostream& out) {
  const SequenceSpec spec{a.id, a.k, a.row};
  BfileAlignment al = oeis_alignment(spec).value_or(BfileAlignment{});
  if (a.offset) al.index_offset = *a.offset;
  if (a.shift) al.value_shift = *a.shift;
  const Report r = compare_bfile(spec, a.path, al);
  if (g.format == Format::json) {
    Json j = report_json(r);
    j["oeis"] = al.oeis;
    j["index_offset"] = std::to_string(al.index_offset);
    j["value_shift"] = to_string(al.value_shift);
    out << j.dump(2) << '\n';
  } else if (g.format == Format::csv) {
    print_reports(g, {r}, {}, out);
  } else {
    out << "alignment: sequence(n) = bfile(n + " << al.index_offset << ") + " << to_string(al.value_shift);
    if (!al.oeis.empty()) out << "  [" << al.oeis << ']';
    out << '\n';
    if (r.verdict == Verdict::confirmed) {
      out << "agreement over n = " << r.records.front().n << ".." << r.records.back().n << " ("
          << r.records.size() << " terms)\n";
    } else if (r.verdict == Verdict::refuted) {
      const NRecord& bad = r.records.back();
      out << "first mismatch at n = " << bad.n << ": sequence " << opt_text(bad.formula) << ", b-file "
          << to_string(bad.brute) << '\n';
    } else {
      out << "no overlap\n";
    }
  }
  return r.verdict == Verdict::refuted ? kExitRefuted : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  try {
    g.max_n = env_size("CHAINPERM_MAX_N", g.max_n);
    g.jobs = env_size("CHAINPERM_JOBS", g.jobs);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  CLI::App app{"Chain avoidance in permutations: counting, tables and claim verification", "chainperm"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--max-n", g.max_n, "Largest n for full S_n enumeration (env CHAINPERM_MAX_N)");
  app.add_option("--jobs", g.jobs, "Worker threads for counting (env CHAINPERM_JOBS)")
      ->check(CLI::PositiveNumber);

  const std::vector<std::string> sources = {"automatic", "structured", "full"};

  CountArgs count_args;
  CLI::App* count = app.add_subcommand("count", "Print c_n(chain)");
  count->add_option("chain", count_args.chain, "Chain, e.g. \"(213,312 : 321)\"")->required();
  count->add_option("n", count_args.n, "Length")->required();
  count->add_flag("--ending-in-one", count_args.ending_in_one, "Also print a_n (members ending in 1)");
  count->add_option("--source", count_args.source, "Enumeration source")->check(CLI::IsMember(sources));

  CountArgs list_args;
  CLI::App* list = app.add_subcommand("list", "List the avoiders of a chain, lexicographically");
  list->add_option("chain", list_args.chain, "Chain")->required();
  list->add_option("n", list_args.n, "Length")->required();
  list->add_option("--source", list_args.source, "Enumeration source")->check(CLI::IsMember(sources));

  int table_which = 1;
  std::size_t table_nmax = kDefaultTableNMax;
  CLI::App* table = app.add_subcommand("table", "Reproduce table 1, 2 or 3");
  table->add_option("which", table_which, "Table number")->required()->check(CLI::IsMember({1, 2, 3}));
  table->add_option("--nmax", table_nmax, "Largest n");

  VerifyArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Verify registered claims against brute force");
  verify->add_option("--claim", verify_args.claims, "Claim id (repeatable)");
  verify->add_option("--filter", verify_args.filter, "Run claims whose id contains this text");
  verify->add_option("--n-lo", verify_args.n_lo, "Override the first n");
  verify->add_option("--n-hi", verify_args.n_hi, "Override the last n");
  verify->add_flag("--list", verify_args.list, "List registered claims");
  verify->add_flag("--growth", verify_args.growth, "Check the reported growth rates");

  SeqArgs seq_args;
  CLI::App* seq = app.add_subcommand("seq", "Evaluate a named sequence");
  seq->add_option("id", seq_args.id, "Sequence id (see --list)");
  seq->add_option("--k", seq_args.k, "Power k for ck-* sequences")->check(CLI::Range(2u, 64u));
  seq->add_option("--row", seq_args.row, "Row id for table3 sequences, e.g. 132:_:_");
  seq->add_option("--from", seq_args.from, "First n (default: smallest stated n)");
  seq->add_option("--n,--to", seq_args.to, "Last n");
  seq->add_flag("--list", seq_args.list, "List sequences");

  GfArgs gf_args;
  CLI::App* gf = app.add_subcommand("gf", "Coefficients of a rational generating function");
  gf->add_option("numerator", gf_args.numerator, "Ascending coefficients, e.g. 1,-1,-1,1")->required();
  gf->add_option("denominator", gf_args.denominator, "Ascending coefficients, constant term +-1")->required();
  gf->add_option("upto", gf_args.upto, "Last coefficient index")->required();
  gf->add_flag("--growth-rate", gf_args.growth, "Also print the growth rate");

  BfileArgs export_args;
  CLI::App* bexport = app.add_subcommand("bfile-export", "Write a sequence as an OEIS b-file");
  bexport->add_option("id", export_args.id, "Sequence id")->required();
  bexport->add_option("path", export_args.path, "Output file")->required();
  bexport->add_option("--k", export_args.k, "Power k for ck-* sequences")->check(CLI::Range(2u, 64u));
  bexport->add_option("--row", export_args.row, "Row id for table3 sequences");
  bexport->add_option("--from", export_args.from, "First n");
  bexport->add_option("--to", export_args.to, "Last n");

  BfileArgs compare_args;
  CLI::App* bcompare = app.add_subcommand("bfile-compare", "Compare a sequence with an OEIS b-file");
  bcompare->add_option("id", compare_args.id, "Sequence id")->required();
  bcompare->add_option("path", compare_args.path, "b-file")->required();
  bcompare->add_option("--k", compare_args.k, "Power k for ck-* sequences")->check(CLI::Range(2u, 64u));
  bcompare->add_option("--row", compare_args.row, "Row id for table3 sequences");
  bcompare->add_option("--offset", compare_args.offset, "b-file index of sequence term n is n + offset");
  bcompare->add_option("--shift", compare_args.shift, "Added to b-file values before comparing");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (format == "csv") g.format = Format::csv;
  if (format == "json") g.format = Format::json;

  try {
    if (*count) return cmd_count(g, count_args, out);
    if (*list) return cmd_list(g, list_args, out);
    if (*table) return cmd_table(g, table_which, table_nmax, out);
    if (*verify) return cmd_verify(g, verify_args, out);
    if (*seq) {
      if (!seq_args.list && seq_args.id.empty()) throw InvalidArgument("seq needs a sequence id or --list");
      return cmd_seq(g, seq_args, out);
    }
    if (*gf) return cmd_gf(g, gf_args, out);
    if (*bexport) return cmd_bfile_export(export_args, out);
    if (*bcompare) return cmd_bfile_compare(g, compare_args, out);
  } catch (const SyntaxError& e) {
    err << "SyntaxError: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace chainperm::cli
