#include <chrono>
#include <fstream>
#include <map>
#include <sstream>

#include "chainperm/errors.hpp"
#include "chainperm/verify.hpp"

namespace chainperm {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

bool is_integer(std::string_view s) {
  if (!s.empty() && s.front() == '-') s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::optional<BfileAlignment> oeis_alignment(const SequenceSpec& spec) {
  static const std::map<std::string, BfileAlignment> known = {
      {"uni-123", {"A004526", 0, 0}},
      {"uni-132", {"A000027", 1, 0}},
      {"uni-312", {"A033638", 0, 0}},
      {"uni-321", {"A002620", 3, -5}},
      {"fibonacci", {"A000045", 0, 0}},
      {"lucas", {"A000032", 0, 0}},
      {"tribonacci", {"A000073", 0, 0}},
      {"tetranacci", {"A000078", 0, 0}},
      {"catalan", {"A000108", 0, 0}},
      {"pow2", {"A000079", -1, 0}},
  };
  const auto it = known.find(spec.id);
  if (it == known.end()) return std::nullopt;
  return it->second;
}

std::vector<BfileEntry> parse_bfile(std::string_view text) {
  std::vector<BfileEntry> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t gap = line.find_first_of(" \t");
    if (gap == std::string_view::npos) {
      throw ParseError(line_no, "expected \"index value\"");
    }
    const std::string_view index = line.substr(0, gap);
    const std::string_view value = trim(line.substr(gap));
    if (!is_integer(index) || !is_integer(value)) {
      throw ParseError(line_no, "expected two integers, got \"" + std::string(line) + "\"");
    }
    BfileEntry e;
    e.index = std::stoll(std::string(index));
    e.value = BigInt(std::string(value));
    entries.push_back(std::move(e));
  }
  return entries;
}

std::vector<BfileEntry> read_bfile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("cannot read '" + path + "'");
  return parse_bfile(buffer.str());
}

void export_bfile(const SequenceSpec& spec, std::size_t lo, std::size_t hi, const std::string& path) {
  if (lo > hi) throw InvalidArgument("empty n range");
  std::ostringstream body;
  body << "# " << describe(spec) << '\n';
  for (std::size_t n = lo; n <= hi; ++n) body << n << ' ' << to_string(evaluate_sequence(spec, n)) << '\n';
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << body.str();
  out.flush();
  if (!out) throw IoError("cannot write '" + path + "'");
}

Report compare_bfile(const SequenceSpec& spec, const std::string& path, const BfileAlignment& alignment) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<BfileEntry> entries = read_bfile(path);
  const std::int64_t min_n = static_cast<std::int64_t>(sequence_min_n(spec));

  Report report;
  report.claim_id = "bfile:" + describe(spec);
  report.status = ClaimStatus::theorem;
  report.verdict = Verdict::confirmed;

  std::map<std::int64_t, const BfileEntry*> by_n;
  for (const BfileEntry& e : entries) {
    const std::int64_t n = e.index - alignment.index_offset;
    if (n >= min_n) by_n.emplace(n, &e);
  }
  for (const auto& [n, entry] : by_n) {
    NRecord rec;
    rec.n = static_cast<std::size_t>(n);
    rec.brute = entry->value + alignment.value_shift;
    rec.formula = evaluate_sequence(spec, rec.n);
    const bool holds = rec.brute == *rec.formula;
    rec.verdict = holds ? RecordVerdict::holds : RecordVerdict::fails;
    report.records.push_back(std::move(rec));
    if (!holds) {
      report.verdict = Verdict::refuted;
      report.notes.push_back("first mismatch at n = " + std::to_string(n) + " (b-file index " +
                             std::to_string(entry->index) + ")");
      break;
    }
  }
  if (report.records.empty()) {
    report.verdict = Verdict::partial;
    report.notes.push_back("no overlap between the b-file and the sequence's range");
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace chainperm
