#include "chainperm/pattern.hpp"

#include <algorithm>

#include "chainperm/errors.hpp"

namespace chainperm {

// Backtracking matcher. Pattern entries are placed left to right; entry j
// must land strictly between the values already matched for its nearest
// smaller and nearest larger predecessors (below_[j], above_[j]). That window
// test is both necessary and sufficient for order-isomorphism.
class Matcher {
 public:
  Matcher(std::span<const std::uint8_t> seq, const Pattern& p)
      : seq_(seq), pat_(p), m_(p.size()) {}

  bool classical() { return seq_.size() >= m_ && place(0, 0); }

  bool classical_ending_at_last() {
    const std::size_t n = seq_.size();
    if (n < m_) return false;
    fixed_last_ = true;
    last_value_ = seq_[n - 1];
    return place(0, 0);
  }

  bool consecutive() {
    const std::size_t n = seq_.size();
    if (n < m_) return false;
    for (std::size_t start = 0; start + m_ <= n; ++start) {
      bool ok = true;
      for (std::size_t j = 0; j < m_ && ok; ++j) {
        chosen_[j] = seq_[start + j];
        ok = fits(j, chosen_[j]);
      }
      if (ok) return true;
    }
    return false;
  }

 private:
  bool fits(std::size_t j, unsigned v) const {
    const int lo = pat_.below_[j];
    const int hi = pat_.above_[j];
    if (lo >= 0 && v <= chosen_[lo]) return false;
    if (hi >= 0 && v >= chosen_[hi]) return false;
    return true;
  }

  bool place(std::size_t j, std::size_t from) {
    if (j == m_) return true;
    const std::size_t n = seq_.size();
    if (fixed_last_ && j + 1 == m_) {
      if (from > n - 1 || !fits(j, last_value_)) return false;
      chosen_[j] = last_value_;
      return true;
    }
    // Leave room for the remaining m - j - 1 entries.
    const std::size_t limit = n - (m_ - j) + 1;
    const bool below_last =
        fixed_last_ && pat_.perm().values()[j] < pat_.perm().values()[m_ - 1];
    for (std::size_t pos = from; pos < limit; ++pos) {
      const unsigned v = seq_[pos];
      if (fixed_last_ && ((v < last_value_) != below_last)) continue;
      if (!fits(j, v)) continue;
      chosen_[j] = v;
      if (place(j + 1, pos + 1)) return true;
    }
    return false;
  }

  std::span<const std::uint8_t> seq_;
  const Pattern& pat_;
  std::size_t m_;
  std::array<unsigned, Pattern::kMaxLength> chosen_{};
  bool fixed_last_ = false;
  unsigned last_value_ = 0;
};

Pattern::Pattern(Permutation perm, PatternKind kind) : perm_(perm), kind_(kind) {
  if (perm_.empty()) throw BadPattern("pattern must be nonempty");
  if (perm_.size() > kMaxLength) {
    throw BadPattern("pattern length " + std::to_string(perm_.size()) + " exceeds " +
                     std::to_string(kMaxLength));
  }
  const auto v = perm_.values();
  for (std::size_t j = 0; j < v.size(); ++j) {
    below_[j] = -1;
    above_[j] = -1;
    for (std::size_t k = 0; k < j; ++k) {
      if (v[k] < v[j] && (below_[j] < 0 || v[k] > v[below_[j]])) below_[j] = static_cast<std::int8_t>(k);
      if (v[k] > v[j] && (above_[j] < 0 || v[k] < v[above_[j]])) above_[j] = static_cast<std::int8_t>(k);
    }
  }
}

Pattern parse_pattern(std::string_view text) {
  PatternKind kind = PatternKind::classical;
  if (!text.empty() && text.front() == '~') {
    kind = PatternKind::consecutive;
    text.remove_prefix(1);
  }
  if (text.empty()) throw BadPattern("empty pattern");
  if (text.size() > Pattern::kMaxLength) {
    throw BadPattern("pattern '" + std::string(text) + "' longer than " +
                     std::to_string(Pattern::kMaxLength));
  }
  std::vector<unsigned> values;
  for (char c : text) {
    if (c < '0' || c > '9') throw BadPattern("pattern '" + std::string(text) + "' is not digits");
    values.push_back(static_cast<unsigned>(c - '0'));
  }
  try {
    return Pattern(Permutation::from_one_line(values), kind);
  } catch (const NotABijection& e) {
    throw BadPattern("pattern '" + std::string(text) + "' is not a permutation: " + e.what());
  }
}

std::string to_string(const Pattern& p) {
  std::string s = p.kind() == PatternKind::consecutive ? "~" : "";
  for (std::uint8_t v : p.perm().values()) s += static_cast<char>('0' + v);
  return s;
}

bool pattern_less(const Pattern& a, const Pattern& b) { return to_string(a) < to_string(b); }

bool contains(std::span<const std::uint8_t> seq, const Pattern& p) {
  Matcher m(seq, p);
  return p.kind() == PatternKind::classical ? m.classical() : m.consecutive();
}

bool contains(const Permutation& pi, const Pattern& p) { return contains(pi.values(), p); }

bool contains_ending_at_last(std::span<const std::uint8_t> seq, const Pattern& p) {
  if (p.kind() != PatternKind::classical) {
    throw InvalidArgument("prefix containment is only defined for classical patterns");
  }
  return Matcher(seq, p).classical_ending_at_last();
}

bool avoids_all(const Permutation& pi, std::span<const Pattern> ps) {
  return std::none_of(ps.begin(), ps.end(), [&](const Pattern& p) { return contains(pi, p); });
}

bool is_unimodal(const Permutation& pi) {
  const auto v = pi.values();
  std::size_t i = 1;
  while (i < v.size() && v[i - 1] < v[i]) ++i;
  while (i < v.size() && v[i - 1] > v[i]) ++i;
  return i >= v.size();
}

bool is_layered_eps(const Permutation& pi) {
  const auto v = pi.values();
  std::size_t i = 0;
  while (i < v.size()) {
    const std::size_t offset = i;
    if (v[i] <= offset) return false;
    const std::size_t d = v[i] - offset;
    if (i + d > v.size()) return false;
    for (std::size_t j = 1; j < d; ++j) {
      if (v[i + j] != offset + j) return false;
    }
    i += d;
  }
  return true;
}

bool avoids_312(const Permutation& pi) {
  // pi avoids 312 iff rc(pi) avoids 231 iff rc(pi) is stack-sortable.
  const Permutation r = reverse_complement(pi);
  std::vector<std::uint8_t> stack;
  unsigned next_out = 1;
  for (std::uint8_t x : r.values()) {
    while (!stack.empty() && stack.back() < x) {
      if (stack.back() != next_out) return false;
      stack.pop_back();
      ++next_out;
    }
    stack.push_back(x);
  }
  while (!stack.empty()) {
    if (stack.back() != next_out) return false;
    stack.pop_back();
    ++next_out;
  }
  return true;
}

}  // namespace chainperm
