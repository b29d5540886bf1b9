#ifndef HYPERDUAL_PERM_HPP
#define HYPERDUAL_PERM_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperdual
{

using BigInt = boost::multiprecision::cpp_int;

/// A point of the internal 0-based domain.
using Point = std::uint32_t;

class PermError : public std::invalid_argument
{
public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public PermError
{
public:
  using PermError::PermError;
};

class DegreeMismatch : public PermError
{
public:
  using PermError::PermError;
};

enum class Parity { even, odd };

/// Bijection of {0, ..., degree-1}, stored as an image array.
///
/// Products follow the "rightmost factor acts first" convention:
/// (p * q)(i) == p(q(i)).
class Permutation
{
public:
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree = 1);

  /// Takes ownership of an image array; throws PermError unless it is a
  /// bijection of {0, ..., images.size()-1}.
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  /// Builds from disjoint 0-based cycles.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point i) const { return images_[i]; }
  Point operator[](Point i) const { return images_[i]; }
  std::span<Point const> images() const { return images_; }

  bool is_identity() const;

  Permutation inverse() const;
  Permutation pow(long long k) const;

  /// The same permutation on a larger domain, fixing the added points.
  Permutation embed(std::size_t degree) const;

  /// Relabels point i as i + offset inside a domain of the given degree.
  Permutation shifted(std::size_t offset, std::size_t degree) const;

  /// Disjoint cycles of length > 1, each starting at its least point,
  /// sorted by least point.
  std::vector<std::vector<Point>> cycles() const;

  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
  std::vector<Point> images_;
};

Permutation compose(Permutation const &p, Permutation const &q);
inline Permutation operator*(Permutation const &p, Permutation const &q)
{ return compose(p, q); }

Permutation inverse(Permutation const &p);
Permutation power(Permutation const &p, long long k);

/// Least k >= 1 with p^k = identity.
BigInt order(Permutation const &p);
Parity parity(Permutation const &p);
std::vector<Point> support(Permutation const &p);

/// a^-1 * b^-1 * a * b
Permutation commutator(Permutation const &a, Permutation const &b);

/// Parses 1-based disjoint-cycle notation such as "(1,2)(5,6,7,8)" or "()".
/// Without an explicit degree the largest mentioned point is used (1 for "()").
Permutation parse_cycles(std::string_view text,
                         std::optional<std::size_t> degree = std::nullopt);

/// 1-based disjoint-cycle notation; the identity prints as "()".
std::string print_cycles(Permutation const &p);

std::ostream &operator<<(std::ostream &os, Permutation const &p);

std::string parity_name(Parity p);

} // namespace hyperdual

template<>
struct std::hash<hyperdual::Permutation>
{
  std::size_t operator()(hyperdual::Permutation const &p) const noexcept;
};

#endif // HYPERDUAL_PERM_HPP
