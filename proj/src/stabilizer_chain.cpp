#include "hyperdual/group.hpp"

#include <algorithm>
#include <random>

namespace hyperdual
{

namespace
{

std::optional<Point> first_moved_point(Permutation const &p)
{
  for (Point i = 0; i < p.degree(); ++i)
    if (p(i) != i)
      return i;
  return std::nullopt;
}

// Product replacement generator of (nearly) uniform random elements.
class ProductReplacement
{
public:
  ProductReplacement(std::span<Permutation const> generators, std::uint64_t seed)
  : rng_(seed),
    accumulator_(generators.front().degree())
  {
    while (state_.size() < 10)
      for (auto const &g : generators)
        state_.push_back(g);
    for (int i = 0; i < 50; ++i)
      next();
  }

  Permutation next()
  {
    std::size_t const n = state_.size();
    std::size_t s = draw(n);
    std::size_t t = draw(n - 1);
    if (t >= s)
      ++t;
    if (draw(2) == 0)
      state_[s] = state_[s] * state_[t];
    else
      state_[s] = state_[t] * state_[s];
    accumulator_ = accumulator_ * state_[s];
    return accumulator_;
  }

private:
  std::size_t draw(std::size_t bound) { return static_cast<std::size_t>(rng_() % bound); }

  std::mt19937_64 rng_;
  std::vector<Permutation> state_;
  Permutation accumulator_;
};

} // namespace

std::vector<Point> StabilizerChain::base() const
{
  std::vector<Point> res;
  for (auto const &level : levels_)
    res.push_back(level.base);
  return res;
}

BigInt StabilizerChain::order() const
{
  BigInt res = 1;
  for (auto const &level : levels_)
    res *= level.orbit.size();
  return res;
}

std::pair<Permutation, std::size_t> StabilizerChain::sift(Permutation g,
                                                          std::size_t from) const
{
  for (std::size_t i = from; i < levels_.size(); ++i) {
    auto const &level = levels_[i];
    auto const &u = level.transversal[g(level.base)];
    if (!u)
      return {std::move(g), i};
    g = u->inverse() * g;
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(Permutation const &g) const
{
  if (g.degree() != degree_)
    throw DegreeMismatch("membership test against a group of different degree");
  auto [residue, level] = sift(g);
  return level == levels_.size() && residue.is_identity();
}

StabilizerChain StabilizerChain::tail(std::size_t k) const
{
  StabilizerChain res(degree_);
  if (k < levels_.size())
    res.levels_.assign(levels_.begin() + static_cast<std::ptrdiff_t>(k), levels_.end());
  return res;
}

void StabilizerChain::recompute_orbit(std::size_t i)
{
  auto &level = levels_[i];
  level.orbit.assign(1, level.base);
  level.transversal.assign(degree_, std::nullopt);
  level.transversal[level.base] = Permutation(degree_);

  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point p = level.orbit[k];
    for (auto const &s : level.generators) {
      Point q = s(p);
      if (!level.transversal[q]) {
        level.transversal[q] = s * *level.transversal[p];
        level.orbit.push_back(q);
      }
    }
  }
}

// h fixes the base points of levels [0, to) and is added as a strong
// generator of levels [from, to]; level `to` is created if needed.
void StabilizerChain::insert_residue(Permutation const &h, std::size_t from, std::size_t to)
{
  if (to == levels_.size()) {
    auto moved = first_moved_point(h);
    levels_.push_back(Level{*moved, {}, {}, {}});
  }
  for (std::size_t i = from; i <= to; ++i) {
    levels_[i].generators.push_back(h);
    recompute_orbit(i);
  }
}

void StabilizerChain::random_phase(std::span<Permutation const> generators,
                                   std::uint64_t seed)
{
  // Consecutive successful sifts before the random phase gives up.
  constexpr int quiet_rounds = 24;

  ProductReplacement random(generators, seed);
  for (int quiet = 0; quiet < quiet_rounds;) {
    auto [h, j] = sift(random.next());
    if (j == levels_.size() && h.is_identity()) {
      ++quiet;
      continue;
    }
    quiet = 0;
    insert_residue(h, 0, j);
  }
}

void StabilizerChain::verification_sweep()
{
  std::size_t i = levels_.size();
  while (i-- > 0) {
    bool restarted = false;
    for (std::size_t k = 0; k < levels_[i].orbit.size() && !restarted; ++k) {
      Point p = levels_[i].orbit[k];
      for (std::size_t s = 0; s < levels_[i].generators.size(); ++s) {
        auto const &level = levels_[i];
        auto const &gen = level.generators[s];
        Permutation schreier =
          level.transversal[gen(p)]->inverse() * gen * *level.transversal[p];
        if (schreier.is_identity())
          continue;
        auto [h, j] = sift(std::move(schreier), i + 1);
        if (j == levels_.size() && h.is_identity())
          continue;
        insert_residue(h, i + 1, j);
        i = j + 1;
        restarted = true;
        break;
      }
    }
  }
}

StabilizerChain StabilizerChain::build(std::span<Permutation const> generators,
                                       std::size_t degree,
                                       std::span<Point const> base_prefix,
                                       std::uint64_t seed)
{
  StabilizerChain chain(degree);
  for (Point b : base_prefix) {
    if (b >= degree)
      throw GroupError("base point outside the domain");
    if (std::any_of(chain.levels_.begin(), chain.levels_.end(),
                    [b](Level const &l) { return l.base == b; }))
      continue;
    chain.levels_.push_back(Level{b, {}, {}, {}});
  }

  std::vector<Permutation> nontrivial;
  for (auto const &g : generators) {
    if (g.degree() != degree)
      throw DegreeMismatch("generator degree differs from group degree");
    if (!g.is_identity())
      nontrivial.push_back(g);
  }

  for (auto const &g : nontrivial) {
    bool fixes_base = std::all_of(chain.levels_.begin(), chain.levels_.end(),
                                  [&g](Level const &l) { return g(l.base) == l.base; });
    if (fixes_base)
      chain.levels_.push_back(Level{*first_moved_point(g), {}, {}, {}});
  }

  if (!chain.levels_.empty()) {
    chain.levels_[0].generators = nontrivial;
    for (std::size_t i = 0; i < chain.levels_.size(); ++i)
      chain.recompute_orbit(i);
  }

  if (!nontrivial.empty()) {
    chain.random_phase(nontrivial, seed);
    chain.verification_sweep();
  }
  return chain;
}

} // namespace hyperdual
