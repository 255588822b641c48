#include "chainperm/chain.hpp"

#include <algorithm>

#include "chainperm/errors.hpp"

namespace chainperm {

namespace {

PatternSet canonical(PatternSet set) {
  std::sort(set.begin(), set.end(), pattern_less);
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

bool set_is_classical(const PatternSet& set) {
  return std::all_of(set.begin(), set.end(), [](const Pattern& p) { return p.is_classical(); });
}

class ChainParser {
 public:
  explicit ChainParser(std::string_view text) : text_(text) {}

  Chain parse() {
    skip_ws();
    expect('(', "expected '('");
    std::vector<PatternSet> slots;
    std::optional<PatternSet> tail;
    while (true) {
      PatternSet slot = parse_slot();
      skip_ws();
      if (eat_infinity()) {
        tail = std::move(slot);
        skip_ws();
        if (peek() != ')') fail("'^inf' may only follow the last slot");
        break;
      }
      slots.push_back(std::move(slot));
      if (peek() == ':') {
        ++pos_;
        continue;
      }
      break;
    }
    skip_ws();
    expect(')', "expected ':' or ')'");
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return Chain(std::move(slots), std::move(tail));
  }

 private:
  static constexpr std::string_view kEmptySet = "\xE2\x88\x85";  // U+2205
  static constexpr std::string_view kInfinity = "\xE2\x88\x9E";  // U+221E

  PatternSet parse_slot() {
    skip_ws();
    if (peek() == '_') {
      ++pos_;
      return {};
    }
    if (text_.substr(pos_).starts_with(kEmptySet)) {
      pos_ += kEmptySet.size();
      return {};
    }
    PatternSet slot;
    while (true) {
      skip_ws();
      slot.push_back(parse_pattern_token());
      skip_ws();
      if (peek() != ',') break;
      ++pos_;
    }
    return slot;
  }

  Pattern parse_pattern_token() {
    const std::size_t start = pos_;
    if (peek() == '~') ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == digits) {
      if (pos_ >= text_.size()) fail("unexpected end of input, expected a pattern");
      fail(std::string("expected a pattern, found '") + text_[pos_] + "'");
    }
    return parse_pattern(text_.substr(start, pos_ - start));
  }

  bool eat_infinity() {
    if (peek() != '^') return false;
    ++pos_;
    skip_ws();
    const std::string_view rest = text_.substr(pos_);
    if (rest.starts_with("inf")) {
      pos_ += 3;
      return true;
    }
    if (rest.starts_with(kInfinity)) {
      pos_ += kInfinity.size();
      return true;
    }
    fail("expected 'inf' after '^'");
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_ws() {
    while (pos_ < text_.size() &&
           (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }

  void expect(char c, const char* message) {
    if (peek() != c) fail(message);
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(pos_, message); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string format_set(const PatternSet& set) {
  if (set.empty()) return "_";
  std::string out;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i > 0) out += ',';
    out += to_string(set[i]);
  }
  return out;
}

PatternSet transform_set(const PatternSet& set) {
  PatternSet out;
  out.reserve(set.size());
  for (const Pattern& p : set) out.emplace_back(inverse(reverse_complement(p.perm())), p.kind());
  return out;
}

}  // namespace

Chain::Chain(std::vector<PatternSet> slots, std::optional<PatternSet> tail)
    : slots_(std::move(slots)), tail_(std::move(tail)) {
  if (slots_.empty() && !tail_) throw InvalidArgument("a chain needs at least one slot or a tail");
  for (auto& s : slots_) s = canonical(std::move(s));
  if (tail_) tail_ = canonical(std::move(*tail_));
}

bool Chain::is_classical() const {
  return std::all_of(slots_.begin(), slots_.end(), set_is_classical) &&
         (!tail_ || set_is_classical(*tail_));
}

Chain parse_chain(std::string_view text) { return ChainParser(text).parse(); }

std::string format_chain(const Chain& chain) {
  std::string out = "(";
  for (std::size_t i = 0; i < chain.slots().size(); ++i) {
    if (i > 0) out += " : ";
    out += format_set(chain.slots()[i]);
  }
  if (chain.tail()) {
    if (!chain.slots().empty()) out += " : ";
    out += format_set(*chain.tail()) + "^inf";
  }
  return out + ")";
}

bool avoids_chain(const Permutation& pi, const Chain& chain) {
  Permutation current = pi;
  for (const PatternSet& slot : chain.slots()) {
    if (!avoids_all(current, slot)) return false;
    current = compose(pi, current);
  }
  if (!chain.tail() || chain.tail()->empty()) return true;
  // current == pi^(k+1); walk one full period of the cyclic group <pi>.
  const Permutation start = current;
  do {
    if (!avoids_all(current, *chain.tail())) return false;
    current = compose(pi, current);
  } while (current != start);
  return true;
}

Chain rc_inverse_transform(const Chain& chain) {
  std::vector<PatternSet> slots;
  slots.reserve(chain.slots().size());
  for (const PatternSet& s : chain.slots()) slots.push_back(transform_set(s));
  std::optional<PatternSet> tail;
  if (chain.tail()) tail = transform_set(*chain.tail());
  return Chain(std::move(slots), std::move(tail));
}

bool transform_preserves_counts(const Chain& chain) { return chain.is_classical(); }

}  // namespace chainperm
