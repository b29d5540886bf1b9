#ifndef HYPERDUAL_ORACLE_HPP
#define HYPERDUAL_ORACLE_HPP

// Brute-force ground truth for small groups. Nothing here touches stabilizer
// chains: groups are enumerated element by element, so agreement with the
// engine is an independent check.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hyperdual/perm.hpp"

namespace hyperdual::oracle
{

class CutoffExceeded : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Raised when a structural prediction fails on some instance, e.g. when
/// the minimal normal subgroup with self-dual quotient is not unique.
class OracleFinding : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t builtin_cutoff = 100000;

/// builtin_cutoff, or HYPERDUAL_ORACLE_CUTOFF when set.
std::size_t default_cutoff();

/// A subgroup as its sorted list of elements.
using ElementSet = std::vector<Permutation>;

class ElementTable
{
public:
  std::vector<Permutation> const &elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t cutoff() const { return cutoff_; }
  std::size_t degree() const { return elements_.front().degree(); }

  /// Index of p, or size() if p is not in the group.
  std::size_t index_of(Permutation const &p) const;
  bool contains(Permutation const &p) const { return index_of(p) != size(); }

private:
  friend ElementTable enumerate_elements(std::span<Permutation const>, std::size_t);

  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::size_t> index_;
  std::size_t cutoff_ = builtin_cutoff;
};

/// Breadth-first closure of the generators; throws CutoffExceeded as soon
/// as more than cutoff elements are found.
ElementTable enumerate_elements(std::span<Permutation const> generators,
                                std::size_t cutoff = default_cutoff());

/// Subgroup generated by gens, as a sorted element list.
ElementSet closure(std::span<Permutation const> gens, std::size_t cutoff = default_cutoff());

std::vector<ElementSet> conjugacy_classes(ElementTable const &table);

/// Every normal subgroup, ordered by size and then lexicographically.
std::vector<ElementSet> all_normal_subgroups(ElementTable const &table);

/// Multiplication table of G/N, cosets numbered by first appearance in the
/// element table (so the identity coset is 0).
struct QuotientTable
{
  std::size_t size = 0;
  std::vector<std::vector<std::size_t>> mul;
  std::vector<std::size_t> coset_of;

  std::size_t order_of(std::size_t c) const;
};

/// Throws std::invalid_argument unless n is a normal subgroup in the table.
QuotientTable quotient_table(ElementTable const &table, ElementSet const &n);

/// The automorphism of q sending gens to images, if one exists.
std::optional<std::vector<std::size_t>>
extend_to_automorphism(QuotientTable const &q, std::pair<std::size_t, std::size_t> gens,
                       std::pair<std::size_t, std::size_t> images);

/// All image pairs (a, b), with orders matching gens, that extend to an
/// automorphism.
std::vector<std::pair<std::size_t, std::size_t>>
automorphism_images(QuotientTable const &q, std::pair<std::size_t, std::size_t> gens);

/// Whether the quotient hypermap (G/N, xN, yN) is self-dual.
bool quotient_is_self_dual(ElementTable const &table, ElementSet const &n,
                           Permutation const &x, Permutation const &y);

/// Minimal normal subgroup with self-dual quotient, found by trying every
/// normal subgroup. Throws OracleFinding if that minimum is not unique under
/// inclusion.
ElementSet brute_duality_group(Permutation const &x, Permutation const &y,
                               std::size_t cutoff = default_cutoff());

/// Every nontrivial invariant partition, each as block labels numbered by
/// first occurrence. Throws std::invalid_argument for degree > 10 or an
/// intransitive group.
std::vector<std::vector<std::size_t>> brute_block_systems(std::span<Permutation const> generators);

/// All ordered pairs (a, b) of elements generating the whole table.
std::vector<std::pair<Permutation, Permutation>> generating_pairs(ElementTable const &table);

} // namespace hyperdual::oracle

#endif // HYPERDUAL_ORACLE_HPP
