#include <cmnp/groups.hpp>

#include <cmnp/numeric.hpp>

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cmnp {

FiniteAbelianGroup FiniteAbelianGroup::additive_cyclic(std::uint64_t n) {
  if (n == 0) {
    throw std::invalid_argument("additive_cyclic: n must be positive");
  }
  return FiniteAbelianGroup(GroupKind::AdditiveCyclic, n);
}

FiniteAbelianGroup FiniteAbelianGroup::units_mod(std::uint64_t ell) {
  if (ell == 2 || !is_prime(ell)) {
    throw std::invalid_argument("units_mod: " + std::to_string(ell) +
                                " is not an odd prime");
  }
  return FiniteAbelianGroup(GroupKind::UnitsMod, ell);
}

std::uint64_t FiniteAbelianGroup::order() const {
  return kind_ == GroupKind::AdditiveCyclic ? modulus_ : modulus_ - 1;
}

std::uint64_t FiniteAbelianGroup::identity() const {
  return kind_ == GroupKind::AdditiveCyclic ? 0 : 1;
}

bool FiniteAbelianGroup::contains(std::uint64_t a) const {
  if (kind_ == GroupKind::AdditiveCyclic) return a < modulus_;
  return a >= 1 && a < modulus_;
}

std::uint64_t FiniteAbelianGroup::op(std::uint64_t a, std::uint64_t b) const {
  if (!contains(a) || !contains(b)) {
    throw std::invalid_argument("group op: element not in " + str());
  }
  if (kind_ == GroupKind::AdditiveCyclic) {
    const std::uint64_t s = a + b;
    return s >= modulus_ ? s - modulus_ : s;
  }
  return mulmod(a, b, modulus_);
}

std::uint64_t FiniteAbelianGroup::inverse(std::uint64_t a) const {
  if (!contains(a)) {
    throw std::invalid_argument("group inverse: element not in " + str());
  }
  if (kind_ == GroupKind::AdditiveCyclic) return a == 0 ? 0 : modulus_ - a;
  // Fermat: a^(l-2) mod l, l prime.
  return powmod(a, modulus_ - 2, modulus_);
}

std::vector<std::uint64_t> FiniteAbelianGroup::elements() const {
  std::vector<std::uint64_t> out;
  out.reserve(order());
  const std::uint64_t first = kind_ == GroupKind::AdditiveCyclic ? 0 : 1;
  for (std::uint64_t a = first; a < modulus_; ++a) out.push_back(a);
  return out;
}

std::string FiniteAbelianGroup::str() const {
  return (kind_ == GroupKind::AdditiveCyclic ? "cyclic:" : "units:") +
         std::to_string(modulus_);
}

std::uint64_t element_order(const FiniteAbelianGroup& G, std::uint64_t a) {
  if (!G.contains(a)) {
    throw std::invalid_argument("element_order: " + std::to_string(a) +
                                " not in " + G.str());
  }
  std::uint64_t k = 1;
  std::uint64_t acc = a;
  while (acc != G.identity()) {
    acc = G.op(acc, a);
    ++k;
  }
  return k;
}

std::uint64_t complex_conjugation(const FiniteAbelianGroup& G) {
  if (G.order() % 2 != 0) {
    throw std::invalid_argument("complex_conjugation: " + G.str() +
                                " has odd order");
  }
  if (G.kind() == GroupKind::AdditiveCyclic) return G.modulus() / 2;
  return G.modulus() - 1;  // -1 mod l
}

Subgroup::Subgroup(FiniteAbelianGroup parent,
                   std::vector<std::uint64_t> elements)
    : parent_(parent), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
  if (elements_.empty()) {
    throw std::invalid_argument("Subgroup: empty element set");
  }
  for (std::uint64_t a : elements_) {
    if (!parent_.contains(a)) {
      throw std::invalid_argument("Subgroup: " + std::to_string(a) +
                                  " not in " + parent_.str());
    }
  }
  if (!contains(parent_.identity())) {
    throw std::invalid_argument("Subgroup: missing identity");
  }
  for (std::uint64_t a : elements_) {
    if (!contains(parent_.inverse(a))) {
      throw std::invalid_argument("Subgroup: not closed under inverses");
    }
    for (std::uint64_t b : elements_) {
      if (!contains(parent_.op(a, b))) {
        throw std::invalid_argument("Subgroup: not closed under the operation");
      }
    }
  }
  if (parent_.order() % elements_.size() != 0) {
    throw std::invalid_argument("Subgroup: size does not divide group order");
  }
}

bool Subgroup::contains(std::uint64_t a) const {
  return std::binary_search(elements_.begin(), elements_.end(), a);
}

namespace {

// Smallest generator of the cyclic group (Z/lZ)^x.
std::uint64_t smallest_primitive_root(std::uint64_t ell) {
  const std::uint64_t n = ell - 1;
  std::vector<std::uint64_t> prime_factors;
  std::uint64_t m = n;
  for (std::uint64_t q = 2; q * q <= m; ++q) {
    if (m % q == 0) {
      prime_factors.push_back(q);
      while (m % q == 0) m /= q;
    }
  }
  if (m > 1) prime_factors.push_back(m);
  for (std::uint64_t c = 2; c < ell; ++c) {
    bool generates = true;
    for (std::uint64_t q : prime_factors) {
      if (powmod(c, n / q, ell) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return c;
  }
  throw std::logic_error("smallest_primitive_root: no generator found");
}

}  // namespace

Subgroup subgroup_of_order(const FiniteAbelianGroup& G, std::uint64_t f) {
  if (f == 0 || G.order() % f != 0) {
    throw std::invalid_argument("subgroup_of_order: " + std::to_string(f) +
                                " does not divide |" + G.str() + "| = " +
                                std::to_string(G.order()));
  }
  if (G.kind() == GroupKind::AdditiveCyclic) {
    return cyclic_subgroup(G, G.order() / f);
  }
  const std::uint64_t root = smallest_primitive_root(G.modulus());
  return cyclic_subgroup(G, powmod(root, G.order() / f, G.modulus()));
}

Subgroup cyclic_subgroup(const FiniteAbelianGroup& G, std::uint64_t a) {
  if (!G.contains(a)) {
    throw std::invalid_argument("cyclic_subgroup: " + std::to_string(a) +
                                " not in " + G.str());
  }
  std::vector<std::uint64_t> elems{G.identity()};
  std::uint64_t acc = a;
  while (acc != G.identity()) {
    elems.push_back(acc);
    acc = G.op(acc, a);
  }
  return Subgroup(G, std::move(elems));
}

Subgroup frobenius_subgroup(std::uint64_t ell, std::uint64_t p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("frobenius_subgroup: p = " +
                                std::to_string(p) + " is not prime");
  }
  if (p == ell) {
    throw std::invalid_argument("frobenius_subgroup: p = l = " +
                                std::to_string(p) + " is ramified");
  }
  const FiniteAbelianGroup G = FiniteAbelianGroup::units_mod(ell);
  return cyclic_subgroup(G, p % ell);
}

CosetPartition coset_partition(const Subgroup& H) {
  const FiniteAbelianGroup& G = H.parent();
  std::set<std::uint64_t> remaining;
  for (std::uint64_t a : G.elements()) remaining.insert(a);

  std::vector<std::vector<std::uint64_t>> cosets;
  while (!remaining.empty()) {
    // Smallest unassigned element leads its coset, so cosets come out
    // ordered by smallest representative (identity coset first).
    const std::uint64_t rep = *remaining.begin();
    std::vector<std::uint64_t> coset;
    coset.reserve(H.order());
    for (std::uint64_t h : H.elements()) coset.push_back(G.op(rep, h));
    std::sort(coset.begin(), coset.end());
    for (std::uint64_t a : coset) remaining.erase(a);
    cosets.push_back(std::move(coset));
  }
  return CosetPartition{H, std::move(cosets)};
}

}  // namespace cmnp
