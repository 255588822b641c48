#include "chainperm/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <exception>
#include <numeric>
#include <thread>

#include "chainperm/errors.hpp"
#include "permutation_builder.hpp"

namespace chainperm {

namespace {

void check_full_cap(std::size_t n, std::size_t max_n) {
  if (n > max_n) {
    throw CapExceeded("enumerating all of S_" + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(max_n) + " (raise --max-n)");
  }
}

void check_length(std::size_t n) {
  if (n > Permutation::kMaxSize) {
    throw InvalidArgument("n = " + std::to_string(n) + " exceeds the maximum permutation length");
  }
}

// Visits permutations of S_n in lexicographic order; when first != 0 only
// those starting with first.
void visit_full(std::size_t n, unsigned first, const PermutationVisitor& visit) {
  std::array<std::uint8_t, Permutation::kMaxSize> buf{};
  for (std::size_t i = 0; i < n; ++i) buf[i] = static_cast<std::uint8_t>(i + 1);
  std::size_t offset = 0;
  if (first != 0) {
    std::rotate(buf.begin(), buf.begin() + (first - 1), buf.begin() + first);
    offset = 1;
  }
  do {
    visit(PermutationBuilder::unchecked({buf.data(), n}));
  } while (std::next_permutation(buf.begin() + static_cast<std::ptrdiff_t>(offset),
                                 buf.begin() + static_cast<std::ptrdiff_t>(n)));
}

class AvoiderSearch {
 public:
  AvoiderSearch(std::size_t n, std::span<const Pattern> patterns, const PermutationVisitor& visit)
      : n_(n), patterns_(patterns), visit_(visit) {
    for (const Pattern& p : patterns_) {
      if (!p.is_classical()) {
        throw InvalidArgument("pruned generation requires classical patterns, got " + to_string(p));
      }
    }
  }

  void run() { extend(0); }

  void run_with_first(unsigned first) {
    if (first < 1 || first > n_) return;
    if (!place(0, first)) return;
    extend(1);
    used_ &= ~bit(first);
  }

 private:
  static std::uint64_t bit(unsigned v) { return std::uint64_t{1} << (v - 1); }

  // Puts v at position depth; false (and nothing placed) if the prefix then
  // contains a pattern.
  bool place(std::size_t depth, unsigned v) {
    prefix_[depth] = static_cast<std::uint8_t>(v);
    const std::span<const std::uint8_t> seq(prefix_.data(), depth + 1);
    for (const Pattern& p : patterns_) {
      if (contains_ending_at_last(seq, p)) return false;
    }
    used_ |= bit(v);
    return true;
  }

  void extend(std::size_t depth) {
    if (depth == n_) {
      visit_(PermutationBuilder::unchecked({prefix_.data(), n_}));
      return;
    }
    for (unsigned v = 1; v <= n_; ++v) {
      if (used_ & bit(v)) continue;
      if (!place(depth, v)) continue;
      extend(depth + 1);
      used_ &= ~bit(v);
    }
  }

  std::size_t n_;
  std::span<const Pattern> patterns_;
  const PermutationVisitor& visit_;
  std::array<std::uint8_t, Permutation::kMaxSize> prefix_{};
  std::uint64_t used_ = 0;
};

void unimodal_rec(std::array<std::uint8_t, Permutation::kMaxSize>& buf, std::size_t lo,
                  std::size_t hi, unsigned value, std::size_t n, const PermutationVisitor& visit) {
  // Values below `value` already sit at the ends; buf[lo..hi] is still free.
  if (value == n) {
    buf[lo] = static_cast<std::uint8_t>(n);
    visit(PermutationBuilder::unchecked({buf.data(), n}));
    return;
  }
  buf[lo] = static_cast<std::uint8_t>(value);
  unimodal_rec(buf, lo + 1, hi, value + 1, n, visit);
  buf[hi] = static_cast<std::uint8_t>(value);
  unimodal_rec(buf, lo, hi - 1, value + 1, n, visit);
}

void composition_rec(std::vector<unsigned>& parts, std::size_t remaining,
                     const CompositionVisitor& visit) {
  if (remaining == 0) {
    visit(Composition(parts));
    return;
  }
  for (unsigned d = 1; d <= remaining; ++d) {
    parts.push_back(d);
    composition_rec(parts, remaining - d, visit);
    parts.pop_back();
  }
}

bool slot_is(const PatternSet& slot, std::initializer_list<const char*> texts) {
  if (slot.size() != texts.size()) return false;
  PatternSet want;
  for (const char* t : texts) want.push_back(parse_pattern(t));
  std::sort(want.begin(), want.end(), pattern_less);
  return slot == want;
}

enum class Generator { full, avoiders, unimodal, layered };

struct Plan {
  Generator generator = Generator::full;
  std::vector<Pattern> prune;  // classical patterns of slot 1
};

Plan plan_for(const Chain& chain, const CountOptions& options) {
  Plan plan;
  if (options.source == CountSource::full || chain.slots().empty()) return plan;
  const PatternSet& first = chain.slots().front();
  if (options.source == CountSource::structured) {
    if (slot_is(first, {"213", "312"})) {
      plan.generator = Generator::unimodal;
      return plan;
    }
    if (slot_is(first, {"231", "321"})) {
      plan.generator = Generator::layered;
      return plan;
    }
  }
  for (const Pattern& p : first) {
    if (p.is_classical()) plan.prune.push_back(p);
  }
  if (!plan.prune.empty()) plan.generator = Generator::avoiders;
  return plan;
}

// Runs the plan's generator over the subtree selected by `first` (0 = all).
void generate(std::size_t n, const Plan& plan, unsigned first, const PermutationVisitor& visit) {
  switch (plan.generator) {
    case Generator::full:
      visit_full(n, first, visit);
      break;
    case Generator::avoiders: {
      AvoiderSearch search(n, plan.prune, visit);
      if (first == 0) {
        search.run();
      } else {
        search.run_with_first(first);
      }
      break;
    }
    case Generator::unimodal:
      for_each_unimodal(n, visit);
      break;
    case Generator::layered:
      for_each_layered(n, visit);
      break;
  }
}

void checked_increment(std::uint64_t& counter) {
  if (__builtin_add_overflow(counter, std::uint64_t{1}, &counter)) {
    throw Overflow("64-bit subtree counter overflowed");
  }
}

}  // namespace

void for_each_permutation(std::size_t n, const PermutationVisitor& visit, std::size_t max_n) {
  check_full_cap(n, max_n);
  check_length(n);
  visit_full(n, 0, visit);
}

void for_each_avoider(std::size_t n, std::span<const Pattern> patterns,
                      const PermutationVisitor& visit) {
  check_length(n);
  AvoiderSearch(n, patterns, visit).run();
}

void for_each_avoider_with_first(std::size_t n, std::span<const Pattern> patterns,
                                 unsigned first_value, const PermutationVisitor& visit) {
  check_length(n);
  AvoiderSearch(n, patterns, visit).run_with_first(first_value);
}

void for_each_unimodal(std::size_t n, const PermutationVisitor& visit) {
  check_length(n);
  if (n == 0) throw InvalidArgument("unimodal permutations require n >= 1");
  std::array<std::uint8_t, Permutation::kMaxSize> buf{};
  unimodal_rec(buf, 0, n - 1, 1, n, visit);
}

void for_each_layered(std::size_t n, const PermutationVisitor& visit) {
  check_length(n);
  if (n == 0) throw InvalidArgument("layered permutations require n >= 1");
  for_each_composition(n, [&](const Composition& c) { visit(layered_eps(c)); });
}

void for_each_composition(std::size_t n, const CompositionVisitor& visit) {
  if (n == 0) throw InvalidArgument("compositions require n >= 1");
  std::vector<unsigned> parts;
  composition_rec(parts, n, visit);
}

std::vector<Permutation> collect_avoiders(std::size_t n, std::span<const Pattern> patterns) {
  std::vector<Permutation> out;
  for_each_avoider(n, patterns, [&](const Permutation& p) { out.push_back(p); });
  return out;
}

void for_each_chain_avoider(std::size_t n, const Chain& chain, const PermutationVisitor& visit,
                            const CountOptions& options) {
  check_length(n);
  const Plan plan = plan_for(chain, options);
  if (plan.generator == Generator::full) check_full_cap(n, options.max_full_n);
  if (n == 0 && (plan.generator == Generator::unimodal || plan.generator == Generator::layered)) {
    // The structured generators start at n = 1; the empty permutation is
    // handled by the generic path.
    for_each_chain_avoider(n, chain, visit, {options.ending_in_one, 1, options.max_full_n,
                                             CountSource::automatic});
    return;
  }
  generate(n, plan, 0, [&](const Permutation& pi) {
    if (options.ending_in_one && (n == 0 || pi(n) != 1)) return;
    if (avoids_chain(pi, chain)) visit(pi);
  });
}

CountResult count_chain(std::size_t n, const Chain& chain, const CountOptions& options) {
  check_length(n);
  const Plan plan = plan_for(chain, options);
  if (plan.generator == Generator::full) check_full_cap(n, options.max_full_n);

  CountResult result{n, chain, 0, options.ending_in_one};

  const bool partitioned =
      n > 0 && (plan.generator == Generator::full || plan.generator == Generator::avoiders);
  if (!partitioned) {
    std::uint64_t count = 0;
    for_each_chain_avoider(n, chain, [&](const Permutation&) { checked_increment(count); },
                           options);
    result.count = count;
    return result;
  }

  // One task per value of pi(1); tasks are independent subtrees.
  const std::size_t tasks = n;
  std::vector<std::uint64_t> partial(tasks, 0);
  std::vector<std::exception_ptr> errors(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks; t = next++) {
      try {
        std::uint64_t count = 0;
        generate(n, plan, static_cast<unsigned>(t + 1), [&](const Permutation& pi) {
          if (options.ending_in_one && pi(n) != 1) return;
          if (avoids_chain(pi, chain)) checked_increment(count);
        });
        partial[t] = count;
      } catch (...) {
        errors[t] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(options.jobs, 1, tasks);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (std::uint64_t c : partial) result.count += c;
  return result;
}

PartSet PartSet::of(std::vector<unsigned> parts) {
  std::sort(parts.begin(), parts.end());
  parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
  if (!parts.empty() && parts.front() == 0) throw InvalidArgument("part sizes must be positive");
  return PartSet(std::move(parts));
}

PartSet PartSet::divisors_of(unsigned k) {
  if (k == 0) throw InvalidArgument("divisors_of requires k >= 1");
  std::vector<unsigned> divs;
  for (unsigned d = 1; d <= k; ++d) {
    if (k % d == 0) divs.push_back(d);
  }
  return PartSet(std::move(divs));
}

bool PartSet::contains(unsigned d) const {
  if (d == 0) return false;
  if (!parts_) return true;
  return std::binary_search(parts_->begin(), parts_->end(), d);
}

std::span<const unsigned> PartSet::parts() const noexcept {
  if (!parts_) return {};
  return *parts_;
}

PartSet PartSet::intersect(const PartSet& other) const {
  if (!parts_) return other;
  if (!other.parts_) return *this;
  std::vector<unsigned> out;
  std::set_intersection(parts_->begin(), parts_->end(), other.parts_->begin(),
                        other.parts_->end(), std::back_inserter(out));
  return PartSet(std::move(out));
}

PartSet PartSet::unite(const PartSet& other) const {
  if (!parts_ || !other.parts_) return all();
  std::vector<unsigned> out;
  std::set_union(parts_->begin(), parts_->end(), other.parts_->begin(), other.parts_->end(),
                 std::back_inserter(out));
  return PartSet(std::move(out));
}

BigInt count_compositions(std::size_t n, const PartConstraint& pc) {
  if (n == 0) return 1;
  // tails[s]: compositions of s using only rest_allowed parts (tails[0] = 1).
  std::vector<BigInt> tails(n + 1, 0);
  tails[0] = 1;
  for (std::size_t s = 1; s <= n; ++s) {
    if (pc.rest_allowed.is_all()) {
      for (std::size_t d = 1; d <= s; ++d) tails[s] += tails[s - d];
    } else {
      for (unsigned d : pc.rest_allowed.parts()) {
        if (d > s) break;
        tails[s] += tails[s - d];
      }
    }
  }
  BigInt total = 0;
  if (pc.first_allowed.is_all()) {
    for (std::size_t d = 1; d <= n; ++d) total += tails[n - d];
  } else {
    for (unsigned d : pc.first_allowed.parts()) {
      if (d > n) break;
      total += tails[n - d];
    }
  }
  return total;
}

}  // namespace chainperm
