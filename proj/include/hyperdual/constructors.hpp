#ifndef HYPERDUAL_CONSTRUCTORS_HPP
#define HYPERDUAL_CONSTRUCTORS_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperdual/hypermap.hpp"

namespace hyperdual
{

class ConstructionError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

enum class CaseTag
{
  lemma1_sym,
  lemma1_alt,
  theorem2,
  case_a,
  case_b,
  case_c,
  case_d,
  case_e,
  small_case_table
};

std::string case_tag_name(CaseTag tag);

struct Witness
{
  std::string description;
  Permutation permutation;
};

struct ConstructionCertificate
{
  CaseTag case_tag = CaseTag::case_a;
  std::size_t ambient_degree = 0;
  NaturalClass claimed_class = NaturalClass::other;
  bool claimed_extreme = false;
  std::vector<Witness> witnesses;
};

struct Construction
{
  Hypermap hypermap;
  ConstructionCertificate certificate;
  /// Filled in by verification.
  DualityReport report;
};

/// x = (1,...,n), y = (1,2) for n > 2; (identity, (1,2)) for n = 2.
Hypermap lemma1_sym(int n);

/// x = (1,...,n) for odd n, (2,...,n) for even n; y = (1,2,3).
/// n = 3 gives (identity, (1,2,3)); n = 4 gives ((1,2)(3,4), (1,2,3)).
Hypermap lemma1_alt(int n);

/// lemma1_sym with a certificate; extremeness is claimed when x or y is even.
Construction lemma1_sym_certified(int n);
Construction lemma1_alt_certified(int n);

/// Extreme hypermap with monodromy group A_n (n >= 3): the lemma1_alt pair.
Construction theorem2_alt_extreme(int n);

/// Extreme hypermap of duality-type {l, n} with alternating or symmetric
/// monodromy and order(x) = l, order(y) = n. Throws ConstructionError for
/// l or n < 2, and VerificationError when no construction passes its
/// certificate ({2, 2} has none).
Construction duality_type_extreme(int l, int n);

/// x = (1,...,l), y = (2,...,l+1) on l+1 points. Conjugation by (1,l+1)
/// swaps x and y, so this hypermap is always self-dual.
Hypermap shifted_cycle_pair(int l);

/// Recomputes everything the certificate claims; throws VerificationError
/// on any disagreement and stores the recomputed report on success.
void verify_construction(Construction &c);

/// Precomputed generating pair for duality-types not covered by the
/// cycle families; x has the larger order.
struct SmallCaseEntry
{
  int larger;
  int smaller;
  std::size_t degree;
  char const *x;
  char const *y;
};

std::span<SmallCaseEntry const> small_case_table();

/// Duality-types (larger, smaller) with 2 <= smaller <= larger <= max that the
/// cycle families do not cover.
std::vector<std::pair<int, int>> small_case_keys(int max);

/// Exhaustive search over degrees 2..max_degree: x runs over one
/// representative per cycle type of order `larger`, y over all permutations
/// of order `smaller` in lexicographic order. Returns the first pair that
/// generates an alternating or symmetric group with extreme duality index.
std::optional<Hypermap> search_small_case(int larger, int smaller, std::size_t max_degree);

} // namespace hyperdual

#endif // HYPERDUAL_CONSTRUCTORS_HPP
