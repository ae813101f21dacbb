#pragma once

/**
 * @file groups.hpp
 * @brief The two finite abelian groups the library needs: Z/nZ and the unit
 *        group (Z/lZ)^x, with element orders, subgroups, coset partitions,
 *        complex conjugation, and the Frobenius subgroup of a prime.
 *
 * Both kinds are cyclic, which is what makes subgroups unique per order.
 * Elements are canonical integer residues: 0..n-1 additively, units 1..l-1
 * multiplicatively.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace cmnp {

enum class GroupKind { AdditiveCyclic, UnitsMod };

class FiniteAbelianGroup {
 public:
  static FiniteAbelianGroup additive_cyclic(std::uint64_t n);

  /// Requires an odd prime l; the group is cyclic of order l-1.
  static FiniteAbelianGroup units_mod(std::uint64_t ell);

  GroupKind kind() const { return kind_; }

  /// n for additive-cyclic, l for units-mod.
  std::uint64_t modulus() const { return modulus_; }

  std::uint64_t order() const;
  std::uint64_t identity() const;
  bool contains(std::uint64_t a) const;
  std::uint64_t op(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inverse(std::uint64_t a) const;
  std::vector<std::uint64_t> elements() const;

  bool operator==(const FiniteAbelianGroup& rhs) const = default;

  /// "cyclic:6" or "units:7" (the CLI flag syntax).
  std::string str() const;

 private:
  FiniteAbelianGroup(GroupKind kind, std::uint64_t modulus)
      : kind_(kind), modulus_(modulus) {}

  GroupKind kind_;
  std::uint64_t modulus_;
};

/// Smallest k >= 1 with a composed with itself k times giving the identity.
std::uint64_t element_order(const FiniteAbelianGroup& G, std::uint64_t a);

/// The unique element of order 2: g in Z/2gZ, -1 in (Z/lZ)^x.
/// Throws std::invalid_argument when |G| is odd.
std::uint64_t complex_conjugation(const FiniteAbelianGroup& G);

class Subgroup {
 public:
  /// Validates closure, identity membership, and Lagrange divisibility.
  Subgroup(FiniteAbelianGroup parent, std::vector<std::uint64_t> elements);

  const FiniteAbelianGroup& parent() const { return parent_; }
  const std::vector<std::uint64_t>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }
  bool contains(std::uint64_t a) const;

  bool operator==(const Subgroup& rhs) const = default;

 private:
  FiniteAbelianGroup parent_;
  std::vector<std::uint64_t> elements_;  // sorted
};

/// The unique subgroup of order f of a cyclic group. Throws when f does not
/// divide |G|.
Subgroup subgroup_of_order(const FiniteAbelianGroup& G, std::uint64_t f);

/// The cyclic subgroup generated by a.
Subgroup cyclic_subgroup(const FiniteAbelianGroup& G, std::uint64_t a);

/// Decomposition subgroup of p in (Z/lZ)^x: the subgroup generated by
/// p mod l. Requires distinct primes p and l, with l odd.
Subgroup frobenius_subgroup(std::uint64_t ell, std::uint64_t p);

struct CosetPartition {
  Subgroup subgroup;
  /// Each coset sorted; cosets ordered by smallest representative, which
  /// puts the identity coset first.
  std::vector<std::vector<std::uint64_t>> cosets;
};

CosetPartition coset_partition(const Subgroup& H);

}  // namespace cmnp
