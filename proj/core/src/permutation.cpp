#include "chainperm/permutation.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "chainperm/errors.hpp"
#include "permutation_builder.hpp"

namespace chainperm {

namespace {

void check_size(std::size_t n) {
  if (n > Permutation::kMaxSize) {
    throw InvalidArgument("permutation length " + std::to_string(n) + " exceeds maximum " +
                          std::to_string(Permutation::kMaxSize));
  }
}

Permutation with_size(std::size_t n) {
  check_size(n);
  Permutation p;
  PermutationBuilder::set_size(p, n);
  return p;
}

}  // namespace

Permutation Permutation::from_one_line(std::span<const unsigned> values) {
  const std::size_t n = values.size();
  if (n > kMaxSize) {
    throw NotABijection("permutation length " + std::to_string(n) + " exceeds maximum " +
                        std::to_string(kMaxSize));
  }
  std::array<bool, kMaxSize + 1> seen{};
  Permutation p = with_size(n);
  std::uint8_t* out = PermutationBuilder::data(p);
  for (std::size_t i = 0; i < n; ++i) {
    const unsigned v = values[i];
    if (v < 1 || v > n) {
      throw NotABijection("value " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    }
    if (seen[v]) throw NotABijection("value " + std::to_string(v) + " repeated");
    seen[v] = true;
    out[i] = static_cast<std::uint8_t>(v);
  }
  return p;
}

Permutation Permutation::from_one_line(std::initializer_list<unsigned> values) {
  return from_one_line(std::span<const unsigned>(values.begin(), values.size()));
}

Permutation Permutation::identity(std::size_t n) { return make_basic(BasicKind::increasing, n); }

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < size_; ++i) {
    if (values_[i] != i + 1) return false;
  }
  return true;
}

Composition::Composition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidArgument("composition must have at least one part");
  for (unsigned d : parts_) {
    if (d == 0) throw InvalidArgument("composition parts must be positive");
    total_ += d;
  }
}

Permutation make_basic(BasicKind kind, std::size_t n) {
  Permutation p = with_size(n);
  std::uint8_t* out = PermutationBuilder::data(p);
  switch (kind) {
    case BasicKind::increasing:
      for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(i + 1);
      break;
    case BasicKind::decreasing:
      for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(n - i);
      break;
    case BasicKind::eps:
      if (n == 0) throw InvalidArgument("eps_n requires n >= 1");
      out[0] = static_cast<std::uint8_t>(n);
      for (std::size_t i = 1; i < n; ++i) out[i] = static_cast<std::uint8_t>(i);
      break;
  }
  return p;
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.size() != tau.size()) {
    throw LengthMismatch("cannot compose permutations of lengths " +
                         std::to_string(sigma.size()) + " and " + std::to_string(tau.size()));
  }
  Permutation r = with_size(sigma.size());
  std::uint8_t* out = PermutationBuilder::data(r);
  const auto s = sigma.values();
  const auto t = tau.values();
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = s[t[i] - 1];
  return r;
}

Permutation power(const Permutation& pi, std::uint64_t k) {
  Permutation result = Permutation::identity(pi.size());
  Permutation base = pi;
  while (k > 0) {
    if (k & 1U) result = compose(base, result);
    k >>= 1U;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

Permutation inverse(const Permutation& pi) {
  Permutation r = with_size(pi.size());
  std::uint8_t* out = PermutationBuilder::data(r);
  const auto v = pi.values();
  for (std::size_t i = 0; i < v.size(); ++i) out[v[i] - 1] = static_cast<std::uint8_t>(i + 1);
  return r;
}

Permutation reverse_complement(const Permutation& pi) {
  const std::size_t n = pi.size();
  Permutation r = with_size(n);
  std::uint8_t* out = PermutationBuilder::data(r);
  const auto v = pi.values();
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::uint8_t>(n + 1 - v[n - 1 - i]);
  return r;
}

std::vector<std::size_t> cycle_type(const Permutation& pi) {
  std::vector<std::size_t> lengths;
  std::array<bool, Permutation::kMaxSize> visited{};
  const auto v = pi.values();
  for (std::size_t start = 0; start < v.size(); ++start) {
    if (visited[start]) continue;
    std::size_t len = 0;
    for (std::size_t j = start; !visited[j]; j = v[j] - 1U) {
      visited[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

std::uint64_t order(const Permutation& pi) {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type(pi)) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

Permutation direct_sum(std::span<const Permutation> blocks) {
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  Permutation r = with_size(total);
  std::uint8_t* out = PermutationBuilder::data(r);
  std::size_t offset = 0;
  for (const auto& b : blocks) {
    for (std::uint8_t v : b.values()) *out++ = static_cast<std::uint8_t>(v + offset);
    offset += b.size();
  }
  return r;
}

Permutation direct_sum(const Permutation& sigma, const Permutation& tau) {
  const std::array<Permutation, 2> blocks{sigma, tau};
  return direct_sum(blocks);
}

Permutation skew_sum(const Permutation& sigma, const Permutation& tau) {
  Permutation r = with_size(sigma.size() + tau.size());
  std::uint8_t* out = PermutationBuilder::data(r);
  for (std::uint8_t v : sigma.values()) *out++ = static_cast<std::uint8_t>(v + tau.size());
  for (std::uint8_t v : tau.values()) *out++ = v;
  return r;
}

Permutation layered_eps(const Composition& comp) {
  std::vector<Permutation> blocks;
  blocks.reserve(comp.parts().size());
  for (unsigned d : comp.parts()) blocks.push_back(make_basic(BasicKind::eps, d));
  return direct_sum(blocks);
}

std::string to_string(const Permutation& pi) {
  std::string out;
  const bool spaced = pi.size() > 9;
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (spaced && i > 0) out += ' ';
    out += std::to_string(pi.values()[i]);
  }
  return out;
}

Permutation parse_permutation(std::string_view text) {
  std::vector<unsigned> values;
  const bool spaced = text.find_first_of(" \t\n\r,") != std::string_view::npos;
  if (spaced) {
    std::string token;
    auto flush = [&] {
      if (token.empty()) return;
      if (token.size() > 3) throw InvalidArgument("permutation entry '" + token + "' too large");
      values.push_back(static_cast<unsigned>(std::stoul(token)));
      token.clear();
    };
    for (char c : text) {
      if (std::isdigit(static_cast<unsigned char>(c))) {
        token += c;
      } else if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',') {
        flush();
      } else {
        throw InvalidArgument(std::string("unexpected character '") + c + "' in permutation");
      }
    }
    flush();
  } else {
    for (char c : text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw InvalidArgument(std::string("unexpected character '") + c + "' in permutation");
      }
      values.push_back(static_cast<unsigned>(c - '0'));
    }
    if (values.size() > 9) {
      throw InvalidArgument("contiguous digit notation is only valid for n <= 9");
    }
  }
  return Permutation::from_one_line(values);
}

}  // namespace chainperm
