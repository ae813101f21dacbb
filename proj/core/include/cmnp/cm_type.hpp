#pragma once

/**
 * @file cm_type.hpp
 * @brief CM types: subsets phi of a group with complex conjugation such that
 *        phi and its conjugate translate partition the group, primitivity
 *        testing, and the slope computation mapping (phi, decomposition
 *        subgroup) to a slope sequence.
 */

#include <cmnp/groups.hpp>
#include <cmnp/slope_sequence.hpp>

#include <cstdint>
#include <vector>

namespace cmnp {

class CMType {
 public:
  /// Validating constructor. Throws std::invalid_argument on wrong
  /// cardinality, or when some element and its conjugate both lie in phi
  /// (the message names the offending pair).
  CMType(FiniteAbelianGroup group, std::vector<std::uint64_t> phi);

  const FiniteAbelianGroup& group() const { return group_; }
  const std::vector<std::uint64_t>& phi() const { return phi_; }
  std::uint64_t g() const { return group_.order() / 2; }
  bool contains(std::uint64_t a) const;

  bool operator==(const CMType& rhs) const = default;

 private:
  FiniteAbelianGroup group_;
  std::vector<std::uint64_t> phi_;  // sorted, size |G|/2
};

/// The half-open interval {0, 1, ..., g-1} in Z/2gZ. Always primitive.
CMType interval_cm_type(std::uint64_t g);

/// True iff the translation stabilizer {h : phi.h = phi} is trivial.
bool is_primitive(const CMType& cm);

/// Slope sequence of the reduction determined by (phi, D): each coset aD of
/// the subgroup D contributes the slope |phi intersect aD| / |D| with
/// multiplicity |D|. Throws when D does not live inside cm's group.
SlopeSequence shimura_taniyama_slopes(const CMType& cm, const Subgroup& D);

/// Slopes of the reduction at p for a CM type on (Z/lZ)^x, via the
/// Frobenius subgroup generated by p mod l.
SlopeSequence reduction_slopes_cyclotomic(std::uint64_t ell, const CMType& cm,
                                          std::uint64_t p);

}  // namespace cmnp
