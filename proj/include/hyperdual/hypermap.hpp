#ifndef HYPERDUAL_HYPERMAP_HPP
#define HYPERDUAL_HYPERMAP_HPP

#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hyperdual/group.hpp"
#include "hyperdual/perm.hpp"

namespace hyperdual
{

/// Raised when a computed result fails one of its runtime certificates.
class VerificationError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// Oriented regular hypermap (<x, y>, x, y): x rotates darts around
/// hypervertices and y around hyperfaces.
class Hypermap
{
public:
  /// Throws DegreeMismatch unless x and y have the same degree.
  Hypermap(Permutation x, Permutation y);

  Permutation const &x() const { return x_; }
  Permutation const &y() const { return y_; }
  std::size_t degree() const { return x_.degree(); }

  PermutationGroup monodromy() const { return PermutationGroup({x_, y_}); }

  friend bool operator==(Hypermap const &, Hypermap const &) = default;

private:
  Permutation x_;
  Permutation y_;
};

Hypermap dual(Hypermap const &h);

/// K = <(x,y), (y,x)> acting on two copies of the domain; the first copy
/// occupies points 0..d-1.
PermutationGroup product_group(Hypermap const &h);

/// True iff x -> y, y -> x extends to an automorphism of <x, y>,
/// i.e. iff |K| = |G|.
bool is_self_dual(Hypermap const &h);

/// D(H) = { g : (1, g) in K }: the smallest normal subgroup of G whose
/// quotient hypermap is self-dual. Normality and |K| = |G| |D| are checked
/// at runtime; so is self-duality of H/D when [G:D] is small.
PermutationGroup duality_group(Hypermap const &h);

BigInt duality_index(Hypermap const &h);

/// Action of G on the cosets of the normal subgroup n.
/// Throws GroupError unless n is a normal subgroup of <x, y>.
Hypermap quotient(Hypermap const &h, PermutationGroup const &n);

struct TypeTriple
{
  BigInt l; ///< order of x
  BigInt m; ///< order of x*y
  BigInt n; ///< order of y

  friend bool operator==(TypeTriple const &, TypeTriple const &) = default;
};

struct DualityReport
{
  TypeTriple type;
  /// Unordered pair {l, n}, stored ascending.
  std::pair<BigInt, BigInt> duality_type;
  bool self_dual = false;
  BigInt duality_index;
  std::vector<Permutation> duality_group_generators;
  bool extreme = false;
  NaturalClass monodromy_class = NaturalClass::other;
  BigInt monodromy_order;
};

TypeTriple type_triple(Hypermap const &h);
std::pair<BigInt, BigInt> duality_type(Hypermap const &h);

DualityReport analyze(Hypermap const &h);

enum class SnPrediction { extreme, self_dual_or_half, s4_exceptional };

std::string sn_prediction_name(SnPrediction p);

/// Parity-based prediction for a generating pair of the full symmetric
/// group on the domain. Throws GroupError if <x, y> is not symmetric.
SnPrediction classify_sn_pair(Hypermap const &h);

/// Duality indices compatible with the prediction for degree d.
std::set<BigInt> predicted_indices(SnPrediction p, std::size_t degree);

} // namespace hyperdual

#endif // HYPERDUAL_HYPERMAP_HPP
