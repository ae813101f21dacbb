#include <cmnp/slope_sequence.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cmnp {

namespace {

const Rational kZero(0);
const Rational kOne(1);
const Rational kHalf(1, 2);

}  // namespace

SlopeSequence::SlopeSequence(std::vector<Rational> values, std::uint64_t g)
    : g_(g), slopes_(std::move(values)) {
  if (g_ == 0) throw std::invalid_argument("SlopeSequence: g must be positive");
  if (slopes_.size() != 2 * g_) {
    throw std::invalid_argument("SlopeSequence: expected " +
                                std::to_string(2 * g_) + " slopes, got " +
                                std::to_string(slopes_.size()));
  }
  for (const Rational& v : slopes_) {
    if (v < kZero || v > kOne) {
      throw std::invalid_argument("SlopeSequence: slope " + v.str() +
                                  " outside [0, 1]");
    }
  }
  std::sort(slopes_.begin(), slopes_.end());
}

bool SlopeSequence::is_symmetric() const {
  const std::size_t n = slopes_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (slopes_[i] + slopes_[n - 1 - i] != kOne) return false;
  }
  return true;
}

bool SlopeSequence::is_integral() const {
  std::map<Rational, std::uint64_t> multiplicity;
  for (const Rational& v : slopes_) ++multiplicity[v];
  for (const auto& [value, count] : multiplicity) {
    // value is stored in lowest terms, so its denominator is the reduced one.
    if (Integer(count) % value.denominator() != 0) return false;
  }
  return true;
}

bool SlopeSequence::is_ordinary() const {
  return std::all_of(slopes_.begin(), slopes_.end(),
                     [](const Rational& v) { return v == kZero || v == kOne; });
}

bool SlopeSequence::is_supersingular() const {
  return std::all_of(slopes_.begin(), slopes_.end(),
                     [](const Rational& v) { return v == kHalf; });
}

bool SlopeSequence::is_half_valued() const {
  return std::all_of(slopes_.begin(), slopes_.end(), [](const Rational& v) {
    return v == kZero || v == kHalf || v == kOne;
  });
}

Rational SlopeSequence::sum() const {
  return std::accumulate(slopes_.begin(), slopes_.end(), Rational(0));
}

std::string SlopeSequence::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    if (i > 0) out += ", ";
    out += slopes_[i].str();
  }
  out += ")";
  return out;
}

std::ostream& operator<<(std::ostream& os, const SlopeSequence& seq) {
  return os << seq.str();
}

SlopeSequence parse_slope_sequence(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("parse_slope_sequence: malformed input '" +
                                std::string(text) + "'");
  };
  std::size_t open = text.find('(');
  std::size_t close = text.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos ||
      close <= open) {
    fail();
  }
  std::string_view body = text.substr(open + 1, close - open - 1);
  std::vector<Rational> values;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t comma = body.find(',', pos);
    std::string_view token = body.substr(
        pos, comma == std::string_view::npos ? body.size() - pos : comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty()) fail();
    std::size_t slash = token.find('/');
    try {
      if (slash == std::string_view::npos) {
        values.emplace_back(Integer(std::string(token)));
      } else {
        values.emplace_back(Integer(std::string(token.substr(0, slash))),
                            Integer(std::string(token.substr(slash + 1))));
      }
    } catch (const std::runtime_error&) {
      fail();
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (values.empty() || values.size() % 2 != 0) fail();
  const std::uint64_t g = values.size() / 2;
  return SlopeSequence(std::move(values), g);
}

namespace {

struct Fraction {
  std::uint64_t num;
  std::uint64_t den;
};

// Reduced fractions n/d with 0 <= n/d < 1/2 and paired block weight d <= g,
// in a fixed order. 0/1 covers the {0, 1} blocks.
std::vector<Fraction> candidate_fractions(std::uint64_t g) {
  std::vector<Fraction> fractions{{0, 1}};
  for (std::uint64_t d = 3; d <= g; ++d) {
    for (std::uint64_t n = 1; 2 * n < d; ++n) {
      if (std::gcd(n, d) == 1) fractions.push_back({n, d});
    }
  }
  return fractions;
}

void emit_sequence(const std::vector<Fraction>& fractions,
                   const std::vector<std::uint64_t>& multipliers,
                   std::uint64_t half_pairs, std::uint64_t g,
                   std::set<SlopeSequence>& out) {
  std::vector<Rational> values;
  values.reserve(2 * g);
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    const std::uint64_t copies = multipliers[i] * fractions[i].den;
    for (std::uint64_t c = 0; c < copies; ++c) {
      values.emplace_back(Integer(fractions[i].num), Integer(fractions[i].den));
      values.emplace_back(Integer(fractions[i].den - fractions[i].num),
                          Integer(fractions[i].den));
    }
  }
  for (std::uint64_t c = 0; c < 2 * half_pairs; ++c) values.emplace_back(1, 2);
  out.emplace(std::move(values), g);
}

void enumerate_blocks(const std::vector<Fraction>& fractions, std::size_t index,
                      std::uint64_t remaining,
                      std::vector<std::uint64_t>& multipliers, std::uint64_t g,
                      std::set<SlopeSequence>& out) {
  if (index == fractions.size()) {
    emit_sequence(fractions, multipliers, remaining, g, out);
    return;
  }
  const std::uint64_t d = fractions[index].den;
  for (std::uint64_t m = 0; m * d <= remaining; ++m) {
    multipliers[index] = m;
    enumerate_blocks(fractions, index + 1, remaining - m * d, multipliers, g,
                     out);
  }
  multipliers[index] = 0;
}

}  // namespace

std::set<SlopeSequence> enumerate_symmetric_integral(std::uint64_t g) {
  if (g == 0) {
    throw std::invalid_argument(
        "enumerate_symmetric_integral: g must be positive");
  }
  const std::vector<Fraction> fractions = candidate_fractions(g);
  std::vector<std::uint64_t> multipliers(fractions.size(), 0);
  std::set<SlopeSequence> out;
  enumerate_blocks(fractions, 0, g, multipliers, g, out);
  return out;
}

std::set<SlopeSequence> enumerate_half_valued(std::uint64_t g) {
  if (g == 0) {
    throw std::invalid_argument("enumerate_half_valued: g must be positive");
  }
  std::set<SlopeSequence> out;
  for (std::uint64_t s = 0; s <= g; ++s) {
    std::vector<Rational> values;
    values.reserve(2 * g);
    for (std::uint64_t i = 0; i < g - s; ++i) values.emplace_back(0);
    for (std::uint64_t i = 0; i < 2 * s; ++i) values.emplace_back(1, 2);
    for (std::uint64_t i = 0; i < g - s; ++i) values.emplace_back(1);
    out.emplace(std::move(values), g);
  }
  return out;
}

}  // namespace cmnp
