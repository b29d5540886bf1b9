#ifndef HYPERDUAL_GROUP_HPP
#define HYPERDUAL_GROUP_HPP

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperdual/perm.hpp"

namespace hyperdual
{

class GroupError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

/// Base and strong generating set with explicit transversals.
class StabilizerChain
{
public:
  struct Level
  {
    Point base;
    /// Strong generators fixing every earlier base point.
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    /// transversal[p] maps base to p; empty for points outside the orbit.
    std::vector<std::optional<Permutation>> transversal;
  };

  /// Runs randomized Schreier-Sims, then a deterministic sweep in which every
  /// Schreier generator is sifted. The result is exact regardless of the
  /// random phase. Base points start with base_prefix (in order), even when
  /// their fundamental orbits are trivial.
  static StabilizerChain build(std::span<Permutation const> generators,
                               std::size_t degree,
                               std::span<Point const> base_prefix = {},
                               std::uint64_t seed = 0x5eed);

  std::size_t degree() const { return degree_; }
  std::vector<Level> const &levels() const { return levels_; }
  std::vector<Point> base() const;

  BigInt order() const;

  /// Strips g through levels [from, end). Returns the residue and the index
  /// of the level where stripping stopped (levels().size() on completion).
  std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from = 0) const;

  bool contains(Permutation const &g) const;

  /// The chain of the subgroup fixing the first k base points.
  StabilizerChain tail(std::size_t k) const;

private:
  explicit StabilizerChain(std::size_t degree) : degree_(degree) {}

  void recompute_orbit(std::size_t level);
  void insert_residue(Permutation const &h, std::size_t from, std::size_t to);
  void random_phase(std::span<Permutation const> generators, std::uint64_t seed);
  void verification_sweep();

  std::size_t degree_;
  std::vector<Level> levels_;
};

enum class NaturalClass { symmetric, alternating, other };

std::string natural_class_name(NaturalClass c);

/// A nontrivial G-invariant partition of the domain.
struct BlockSystem
{
  /// Block ids are numbered by first occurrence, so equal partitions compare equal.
  std::vector<std::size_t> block_of;
  std::size_t num_blocks = 0;

  std::vector<std::vector<Point>> blocks() const;

  friend bool operator==(BlockSystem const &, BlockSystem const &) = default;
  friend auto operator<=>(BlockSystem const &, BlockSystem const &) = default;
};

/// Canonical BlockSystem for an arbitrary labelling of the points.
BlockSystem normalize_partition(std::span<std::size_t const> labels);

/// Finite permutation group given by generators. The stabilizer chain is
/// built on first use and shared between copies; concurrent readers see a
/// single completed chain.
class PermutationGroup
{
public:
  /// Throws GroupError on an empty list or mixed degrees.
  explicit PermutationGroup(std::vector<Permutation> generators);

  static PermutationGroup trivial(std::size_t degree);

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }

  StabilizerChain const &chain() const;

  BigInt order() const;
  bool contains(Permutation const &p) const;
  bool is_trivial() const;

  std::vector<Point> orbit(Point p) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;

  /// Every nontrivial block system, sorted. Throws GroupError if intransitive.
  std::vector<BlockSystem> block_systems() const;

  /// Finest invariant partition placing all of seed in one block.
  BlockSystem minimal_block_system(std::span<Point const> seed) const;

  bool is_primitive() const;

  /// Transitive on ordered k-tuples of distinct points; 1 <= k <= degree.
  bool is_k_transitive(std::size_t k) const;

  /// Smallest normal subgroup containing seeds. Throws if a seed is not in G.
  PermutationGroup normal_closure(std::span<Permutation const> seeds) const;

  /// Subgroup fixing every listed point.
  PermutationGroup pointwise_stabilizer(std::span<Point const> points) const;

  bool is_subgroup_of(PermutationGroup const &other) const;
  bool is_normal_in(PermutationGroup const &other) const;

  NaturalClass classify_natural() const;

private:
  PermutationGroup(std::vector<Permutation> generators, StabilizerChain chain);

  struct LazyChain
  {
    std::once_flag once;
    std::optional<StabilizerChain> chain;
  };

  std::vector<Permutation> generators_;
  std::size_t degree_;
  std::shared_ptr<LazyChain> lazy_;
};

PermutationGroup group_from(std::vector<Permutation> generators);

BigInt factorial(std::size_t n);

} // namespace hyperdual

#endif // HYPERDUAL_GROUP_HPP
