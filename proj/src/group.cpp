#include "hyperdual/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace hyperdual
{

std::string natural_class_name(NaturalClass c)
{
  switch (c) {
  case NaturalClass::symmetric:
    return "symmetric";
  case NaturalClass::alternating:
    return "alternating";
  case NaturalClass::other:
    break;
  }
  return "other";
}

BigInt factorial(std::size_t n)
{
  BigInt res = 1;
  for (std::size_t i = 2; i <= n; ++i)
    res *= i;
  return res;
}

std::vector<std::vector<Point>> BlockSystem::blocks() const
{
  std::vector<std::vector<Point>> res(num_blocks);
  for (Point p = 0; p < block_of.size(); ++p)
    res[block_of[p]].push_back(p);
  return res;
}

BlockSystem normalize_partition(std::span<std::size_t const> labels)
{
  BlockSystem res;
  std::map<std::size_t, std::size_t> relabel;
  res.block_of.reserve(labels.size());
  for (auto label : labels) {
    auto [it, fresh] = relabel.try_emplace(label, relabel.size());
    res.block_of.push_back(it->second);
  }
  res.num_blocks = relabel.size();
  return res;
}

namespace
{

class UnionFind
{
public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t a)
  {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }

  // Returns false if a and b were already joined.
  bool unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    if (b < a)
      std::swap(a, b);
    parent_[b] = a;
    return true;
  }

private:
  std::vector<std::size_t> parent_;
};

} // namespace

PermutationGroup::PermutationGroup(std::vector<Permutation> generators)
: generators_(std::move(generators)),
  degree_(0),
  lazy_(std::make_shared<LazyChain>())
{
  if (generators_.empty())
    throw GroupError("a group needs at least one generator");
  degree_ = generators_.front().degree();
  for (auto const &g : generators_)
    if (g.degree() != degree_)
      throw DegreeMismatch("generators have different degrees");
}

PermutationGroup::PermutationGroup(std::vector<Permutation> generators,
                                   StabilizerChain chain)
: PermutationGroup(std::move(generators))
{
  std::call_once(lazy_->once, [&] { lazy_->chain.emplace(std::move(chain)); });
}

PermutationGroup PermutationGroup::trivial(std::size_t degree)
{
  return PermutationGroup({Permutation(degree)});
}

PermutationGroup group_from(std::vector<Permutation> generators)
{
  return PermutationGroup(std::move(generators));
}

StabilizerChain const &PermutationGroup::chain() const
{
  std::call_once(lazy_->once, [this] {
    lazy_->chain.emplace(StabilizerChain::build(generators_, degree_));
  });
  return *lazy_->chain;
}

BigInt PermutationGroup::order() const { return chain().order(); }

bool PermutationGroup::contains(Permutation const &p) const
{
  if (p.degree() != degree_)
    throw DegreeMismatch("membership test against a group of different degree");
  return chain().contains(p);
}

bool PermutationGroup::is_trivial() const
{
  return std::all_of(generators_.begin(), generators_.end(),
                     [](Permutation const &g) { return g.is_identity(); });
}

std::vector<Point> PermutationGroup::orbit(Point p) const
{
  std::vector<bool> seen(degree_, false);
  std::vector<Point> res{p};
  seen[p] = true;
  for (std::size_t k = 0; k < res.size(); ++k)
    for (auto const &g : generators_) {
      Point q = g(res[k]);
      if (!seen[q]) {
        seen[q] = true;
        res.push_back(q);
      }
    }
  return res;
}

std::vector<std::vector<Point>> PermutationGroup::orbits() const
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> seen(degree_, false);
  for (Point p = 0; p < degree_; ++p) {
    if (seen[p])
      continue;
    auto orb = orbit(p);
    for (Point q : orb)
      seen[q] = true;
    std::sort(orb.begin(), orb.end());
    res.push_back(std::move(orb));
  }
  return res;
}

bool PermutationGroup::is_transitive() const { return orbit(0).size() == degree_; }

BlockSystem PermutationGroup::minimal_block_system(std::span<Point const> seed) const
{
  UnionFind uf(degree_);
  std::vector<std::pair<Point, Point>> pending;
  for (std::size_t i = 1; i < seed.size(); ++i)
    if (uf.unite(seed[0], seed[i]))
      pending.emplace_back(seed[0], seed[i]);

  while (!pending.empty()) {
    auto [a, b] = pending.back();
    pending.pop_back();
    for (auto const &g : generators_) {
      Point ga = g(a);
      Point gb = g(b);
      if (uf.unite(ga, gb))
        pending.emplace_back(ga, gb);
    }
  }

  std::vector<std::size_t> labels(degree_);
  for (Point p = 0; p < degree_; ++p)
    labels[p] = uf.find(p);
  return normalize_partition(labels);
}

std::vector<BlockSystem> PermutationGroup::block_systems() const
{
  if (!is_transitive())
    throw GroupError("block systems are only defined for transitive groups");

  auto is_nontrivial = [this](BlockSystem const &s) {
    return s.num_blocks > 1 && s.num_blocks < degree_;
  };
  auto block_of_zero = [](BlockSystem const &s) {
    std::vector<Point> res;
    for (Point p = 0; p < s.block_of.size(); ++p)
      if (s.block_of[p] == s.block_of[0])
        res.push_back(p);
    return res;
  };

  // Each system is determined by its block through 0; those blocks are
  // the joins of the minimal blocks of pairs {0, b}.
  std::set<BlockSystem> found;
  std::vector<BlockSystem> todo;
  for (Point b = 1; b < degree_; ++b) {
    Point seed[] = {0, b};
    auto sys = minimal_block_system(seed);
    if (is_nontrivial(sys) && found.insert(sys).second)
      todo.push_back(sys);
  }

  std::vector<BlockSystem> done;
  while (!todo.empty()) {
    auto sys = todo.back();
    todo.pop_back();
    auto block = block_of_zero(sys);
    for (auto const &other : done) {
      auto seed = block;
      auto extra = block_of_zero(other);
      seed.insert(seed.end(), extra.begin(), extra.end());
      auto joined = minimal_block_system(seed);
      if (is_nontrivial(joined) && found.insert(joined).second)
        todo.push_back(joined);
    }
    done.push_back(std::move(sys));
  }

  return {found.begin(), found.end()};
}

bool PermutationGroup::is_primitive() const
{
  if (!is_transitive())
    return false;
  for (Point b = 1; b < degree_; ++b) {
    Point seed[] = {0, b};
    if (minimal_block_system(seed).num_blocks > 1)
      return false;
  }
  return true;
}

bool PermutationGroup::is_k_transitive(std::size_t k) const
{
  if (k < 1 || k > degree_)
    throw GroupError("k-transitivity needs 1 <= k <= degree");
  if (!is_transitive())
    return false;

  // G is k-transitive iff the stabilizer of points 0..j-1 is transitive on
  // the remaining points for every j < k.
  std::vector<Point> prefix(k);
  std::iota(prefix.begin(), prefix.end(), Point{0});
  auto chain = StabilizerChain::build(generators_, degree_, prefix);
  for (std::size_t j = 0; j < k; ++j)
    if (chain.levels()[j].orbit.size() != degree_ - j)
      return false;
  return true;
}

PermutationGroup PermutationGroup::normal_closure(std::span<Permutation const> seeds) const
{
  std::vector<Permutation> gens;
  for (auto const &s : seeds) {
    if (!contains(s))
      throw GroupError("normal closure seed " + print_cycles(s) + " is not in the group");
    if (!s.is_identity())
      gens.push_back(s);
  }
  if (gens.empty())
    return trivial(degree_);

  PermutationGroup closure(gens);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (auto const &g : generators_) {
      Permutation conj = g.inverse() * gens[i] * g;
      if (!closure.contains(conj)) {
        gens.push_back(conj);
        closure = PermutationGroup(gens);
      }
    }
  }
  return closure;
}

PermutationGroup PermutationGroup::pointwise_stabilizer(std::span<Point const> points) const
{
  std::vector<Point> prefix(points.begin(), points.end());
  std::sort(prefix.begin(), prefix.end());
  prefix.erase(std::unique(prefix.begin(), prefix.end()), prefix.end());
  for (Point p : prefix)
    if (p >= degree_)
      throw GroupError("stabilized point outside the domain");

  auto full = StabilizerChain::build(generators_, degree_, prefix);
  auto sub = full.tail(prefix.size());
  if (sub.levels().empty())
    return trivial(degree_);

  auto gens = sub.levels().front().generators;
  if (gens.empty())
    gens.push_back(Permutation(degree_));
  return PermutationGroup(std::move(gens), std::move(sub));
}

bool PermutationGroup::is_subgroup_of(PermutationGroup const &other) const
{
  if (other.degree() != degree_)
    return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&other](Permutation const &g) { return other.contains(g); });
}

bool PermutationGroup::is_normal_in(PermutationGroup const &other) const
{
  if (!is_subgroup_of(other))
    return false;
  for (auto const &g : other.generators())
    for (auto const &n : generators_)
      if (!contains(g.inverse() * n * g))
        return false;
  return true;
}

NaturalClass PermutationGroup::classify_natural() const
{
  if (!is_transitive())
    return NaturalClass::other;
  BigInt ord = order();
  BigInt full = factorial(degree_);
  if (ord == full)
    return NaturalClass::symmetric;
  bool all_even = std::all_of(generators_.begin(), generators_.end(),
                              [](Permutation const &g) { return parity(g) == Parity::even; });
  if (degree_ >= 2 && ord * 2 == full && all_even)
    return NaturalClass::alternating;
  return NaturalClass::other;
}

} // namespace hyperdual
