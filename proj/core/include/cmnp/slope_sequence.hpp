#pragma once

/**
 * @file slope_sequence.hpp
 * @brief Slope sequences: sorted multisets of 2g exact rationals in [0, 1],
 *        the symmetric/integral/ordinary/supersingular predicates, and
 *        exhaustive enumeration of all symmetric integral sequences.
 */

#include <cmnp/rational.hpp>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cmnp {

/// An immutable sorted multiset of 2g rationals in [0, 1]. Equality is exact
/// multiset equality; ordering is lexicographic on the sorted slope list.
class SlopeSequence {
 public:
  /// Canonicalizing constructor: sorts the values. Throws std::invalid_argument
  /// when the length is not 2g or a value falls outside [0, 1].
  SlopeSequence(std::vector<Rational> values, std::uint64_t g);

  std::uint64_t g() const { return g_; }
  const std::vector<Rational>& slopes() const { return slopes_; }

  /// True iff slope i pairs with slope 2g+1-i to sum 1, for every i.
  bool is_symmetric() const;

  /// True iff every slope n/d (lowest terms) has multiplicity a multiple of d.
  bool is_integral() const;

  /// All slopes in {0, 1}.
  bool is_ordinary() const;

  /// All slopes equal to 1/2.
  bool is_supersingular() const;

  /// True iff every slope takes a value in {0, 1/2, 1}.
  bool is_half_valued() const;

  Rational sum() const;

  bool operator==(const SlopeSequence& rhs) const = default;
  auto operator<=>(const SlopeSequence& rhs) const = default;

  /// "(0, 1/2, 1/2, 1)"
  std::string str() const;

 private:
  std::uint64_t g_;
  std::vector<Rational> slopes_;  // sorted non-decreasing, length 2g
};

std::ostream& operator<<(std::ostream& os, const SlopeSequence& seq);

/// Parses the str() form back into a canonical sequence.
SlopeSequence parse_slope_sequence(std::string_view text);

/// The set of all symmetric integral slope sequences of length 2g.
///
/// Enumerates by block decomposition: every such sequence is uniquely a
/// multiset union of a 1/2-block of length 2s and, for distinct reduced
/// fractions n/d < 1/2, paired blocks {(n/d) x m*d, ((d-n)/d) x m*d}, with
/// s + sum(m_i * d_i) = g.
std::set<SlopeSequence> enumerate_symmetric_integral(std::uint64_t g);

/// The g+1 sequences (0^(g-s), 1/2^(2s), 1^(g-s)) for s = 0..g.
std::set<SlopeSequence> enumerate_half_valued(std::uint64_t g);

}  // namespace cmnp
