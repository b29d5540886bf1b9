#include "hyperdual/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace hyperdual
{

Permutation::Permutation(std::size_t degree)
: images_(degree)
{
  if (degree == 0)
    throw PermError("permutation degree must be positive");
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images)
: images_(std::move(images))
{
  if (images_.empty())
    throw PermError("permutation degree must be positive");

  std::vector<bool> seen(images_.size(), false);
  for (Point im : images_) {
    if (im >= images_.size() || seen[im])
      throw PermError("image array is not a bijection");
    seen[im] = true;
  }
}

Permutation Permutation::from_cycles(std::size_t degree,
                                     std::vector<std::vector<Point>> const &cycles)
{
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  std::vector<bool> used(degree, false);

  for (auto const &cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      if (a >= degree)
        throw PermError("cycle point " + std::to_string(a + 1) +
                        " exceeds degree " + std::to_string(degree));
      if (used[a])
        throw PermError("point " + std::to_string(a + 1) + " repeated in cycles");
      used[a] = true;
      images[a] = cycle[(i + 1) % cycle.size()];
    }
  }
  return Permutation(std::move(images));
}

bool Permutation::is_identity() const
{
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

Permutation Permutation::inverse() const
{
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<Point>(i);
  Permutation res;
  res.images_ = std::move(inv);
  return res;
}

Permutation Permutation::pow(long long k) const
{
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-(k + 1)) + 1
                               : static_cast<unsigned long long>(k);
  Permutation result(degree());
  while (e > 0) {
    if (e & 1u)
      result = compose(result, base);
    base = compose(base, base);
    e >>= 1u;
  }
  return result;
}

Permutation Permutation::embed(std::size_t degree) const
{
  if (degree < images_.size())
    throw DegreeMismatch("cannot embed degree " + std::to_string(images_.size()) +
                         " permutation into degree " + std::to_string(degree));
  std::vector<Point> images(images_);
  images.resize(degree);
  for (std::size_t i = images_.size(); i < degree; ++i)
    images[i] = static_cast<Point>(i);
  Permutation res;
  res.images_ = std::move(images);
  return res;
}

Permutation Permutation::shifted(std::size_t offset, std::size_t degree) const
{
  if (offset + images_.size() > degree)
    throw DegreeMismatch("shifted permutation does not fit the target degree");
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), Point{0});
  for (std::size_t i = 0; i < images_.size(); ++i)
    images[i + offset] = static_cast<Point>(images_[i] + offset);
  Permutation res;
  res.images_ = std::move(images);
  return res;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> done(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point p = start; !done[p]; p = images_[p]) {
      done[p] = true;
      cycle.push_back(p);
    }
    res.push_back(std::move(cycle));
  }
  return res;
}

Permutation compose(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw DegreeMismatch("cannot compose permutations of degree " +
                         std::to_string(p.degree()) + " and " +
                         std::to_string(q.degree()));
  std::vector<Point> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i)
    images[i] = p(q(static_cast<Point>(i)));
  return Permutation(std::move(images));
}

Permutation inverse(Permutation const &p) { return p.inverse(); }

Permutation power(Permutation const &p, long long k) { return p.pow(k); }

BigInt order(Permutation const &p)
{
  BigInt res = 1;
  for (auto const &cycle : p.cycles()) {
    BigInt len = cycle.size();
    res = res / boost::multiprecision::gcd(res, len) * len;
  }
  return res;
}

Parity parity(Permutation const &p)
{
  std::size_t transpositions = 0;
  for (auto const &cycle : p.cycles())
    transpositions += cycle.size() - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

std::vector<Point> support(Permutation const &p)
{
  std::vector<Point> res;
  for (Point i = 0; i < p.degree(); ++i)
    if (p(i) != i)
      res.push_back(i);
  return res;
}

Permutation commutator(Permutation const &a, Permutation const &b)
{
  return a.inverse() * b.inverse() * a * b;
}

namespace
{

class CycleParser
{
public:
  explicit CycleParser(std::string_view text) : text_(text) {}

  std::vector<std::vector<Point>> parse()
  {
    std::vector<std::vector<Point>> cycles;
    skip_ws();
    if (at_end())
      fail("expected '('");

    while (!at_end()) {
      expect('(');
      skip_ws();
      if (peek() == ')') {
        ++pos_;
        if (!cycles.empty() || !rest_is_blank())
          fail("the empty cycle '()' must stand alone");
        return cycles;
      }
      std::vector<Point> cycle{read_int()};
      skip_ws();
      while (peek() == ',') {
        ++pos_;
        cycle.push_back(read_int());
        skip_ws();
      }
      expect(')');
      skip_ws();
      cycles.push_back(std::move(cycle));
    }
    return cycles;
  }

private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool rest_is_blank()
  {
    skip_ws();
    return at_end();
  }

  void expect(char c)
  {
    skip_ws();
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  Point read_int()
  {
    skip_ws();
    std::size_t start = pos_;
    unsigned long long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > 1'000'000)
        fail("point out of range");
      ++pos_;
    }
    if (pos_ == start)
      fail("expected a positive integer");
    if (value == 0)
      fail("points are 1-based; 0 is not allowed");
    return static_cast<Point>(value - 1);
  }

  [[noreturn]] void fail(std::string const &what) const
  {
    throw ParseError("cycle notation error at offset " + std::to_string(pos_) +
                     " in \"" + std::string(text_) + "\": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

Permutation parse_cycles(std::string_view text, std::optional<std::size_t> degree)
{
  auto cycles = CycleParser(text).parse();

  std::size_t implied = 1;
  std::vector<bool> seen;
  for (auto const &cycle : cycles) {
    for (Point p : cycle) {
      implied = std::max<std::size_t>(implied, p + 1);
      if (seen.size() <= p)
        seen.resize(p + 1, false);
      if (seen[p])
        throw ParseError("point " + std::to_string(p + 1) +
                         " repeated in \"" + std::string(text) + "\"");
      seen[p] = true;
    }
  }

  if (degree) {
    if (*degree == 0)
      throw ParseError("degree must be positive");
    if (*degree < implied)
      throw ParseError("degree " + std::to_string(*degree) +
                       " is smaller than mentioned point " + std::to_string(implied));
  }
  return Permutation::from_cycles(degree.value_or(implied), cycles);
}

std::string print_cycles(Permutation const &p)
{
  auto cycles = p.cycles();
  if (cycles.empty())
    return "()";

  std::ostringstream os;
  for (auto const &cycle : cycles) {
    os << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i)
      os << (i ? "," : "") << cycle[i] + 1;
    os << ')';
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, Permutation const &p)
{
  return os << print_cycles(p);
}

std::string parity_name(Parity p)
{
  return p == Parity::even ? "even" : "odd";
}

} // namespace hyperdual

std::size_t std::hash<hyperdual::Permutation>::operator()(
  hyperdual::Permutation const &p) const noexcept
{
  std::size_t seed = p.degree();
  for (auto x : p.images())
    seed ^= x + 0x9e3779b9 + (seed << 6) + (seed >> 2);
  return seed;
}
