#include "hyperdual/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <unordered_set>

namespace hyperdual::oracle
{

std::size_t default_cutoff()
{
  if (char const *env = std::getenv("HYPERDUAL_ORACLE_CUTOFF")) {
    try {
      auto v = std::stoull(env);
      if (v > 0)
        return static_cast<std::size_t>(v);
    } catch (std::exception const &) {
    }
  }
  return builtin_cutoff;
}

std::size_t ElementTable::index_of(Permutation const &p) const
{
  auto it = index_.find(p);
  return it == index_.end() ? elements_.size() : it->second;
}

ElementTable enumerate_elements(std::span<Permutation const> generators, std::size_t cutoff)
{
  if (generators.empty())
    throw std::invalid_argument("enumerate_elements needs a generator");

  ElementTable t;
  t.cutoff_ = cutoff;
  Permutation id(generators.front().degree());
  t.elements_.push_back(id);
  t.index_.emplace(id, 0);

  for (std::size_t k = 0; k < t.elements_.size(); ++k) {
    for (auto const &g : generators) {
      Permutation next = t.elements_[k] * g;
      if (t.index_.contains(next))
        continue;
      if (t.elements_.size() >= cutoff)
        throw CutoffExceeded("group has more than " + std::to_string(cutoff) + " elements");
      t.index_.emplace(next, t.elements_.size());
      t.elements_.push_back(std::move(next));
    }
  }
  return t;
}

ElementSet closure(std::span<Permutation const> gens, std::size_t cutoff)
{
  auto t = enumerate_elements(gens, cutoff);
  ElementSet res = t.elements();
  std::sort(res.begin(), res.end());
  return res;
}

std::vector<ElementSet> conjugacy_classes(ElementTable const &table)
{
  std::vector<bool> done(table.size(), false);
  std::vector<ElementSet> res;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (done[i])
      continue;
    std::set<Permutation> cls;
    auto const &g = table.elements()[i];
    for (auto const &h : table.elements())
      cls.insert(h * g * h.inverse());
    for (auto const &c : cls)
      done[table.index_of(c)] = true;
    res.emplace_back(cls.begin(), cls.end());
  }
  return res;
}

namespace
{

bool is_subset(ElementSet const &a, ElementSet const &b)
{
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElementSet join(ElementSet const &a, ElementSet const &b, std::size_t cutoff)
{
  std::vector<Permutation> gens(a);
  gens.insert(gens.end(), b.begin(), b.end());
  return closure(gens, cutoff);
}

} // namespace

std::vector<ElementSet> all_normal_subgroups(ElementTable const &table)
{
  std::set<ElementSet> found;
  found.insert(ElementSet{Permutation(table.degree())});
  for (auto const &cls : conjugacy_classes(table))
    found.insert(closure(cls, table.cutoff()));

  // Every normal subgroup is the join of the normal closures of its classes.
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<ElementSet> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (is_subset(current[i], current[j]) || is_subset(current[j], current[i]))
          continue;
        if (found.insert(join(current[i], current[j], table.cutoff())).second)
          grew = true;
      }
  }

  std::vector<ElementSet> res(found.begin(), found.end());
  std::stable_sort(res.begin(), res.end(), [](ElementSet const &a, ElementSet const &b) {
    return a.size() < b.size();
  });
  return res;
}

std::size_t QuotientTable::order_of(std::size_t c) const
{
  std::size_t k = 1;
  for (std::size_t p = c; p != 0; p = mul[p][c])
    ++k;
  return k;
}

QuotientTable quotient_table(ElementTable const &table, ElementSet const &n)
{
  for (auto const &m : n)
    if (!table.contains(m))
      throw std::invalid_argument("quotient subgroup is not contained in the group");
  if (table.size() % n.size() != 0)
    throw std::invalid_argument("quotient subgroup order does not divide the group order");

  QuotientTable q;
  std::size_t const unset = table.size();
  q.coset_of.assign(table.size(), unset);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (q.coset_of[i] != unset)
      continue;
    for (auto const &m : n)
      q.coset_of[table.index_of(table.elements()[i] * m)] = reps.size();
    reps.push_back(i);
  }
  q.size = reps.size();
  if (q.size * n.size() != table.size())
    throw std::invalid_argument("quotient subgroup is not a subgroup");

  q.mul.assign(q.size, std::vector<std::size_t>(q.size));
  for (std::size_t a = 0; a < q.size; ++a)
    for (std::size_t b = 0; b < q.size; ++b)
      q.mul[a][b] =
        q.coset_of[table.index_of(table.elements()[reps[a]] * table.elements()[reps[b]])];

  // Normality: the product of two cosets must itself be a single coset.
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j : reps)
      if (q.coset_of[table.index_of(table.elements()[i] * table.elements()[j])] !=
          q.mul[q.coset_of[i]][q.coset_of[j]])
        throw std::invalid_argument("quotient subgroup is not normal");
  return q;
}

std::optional<std::vector<std::size_t>>
extend_to_automorphism(QuotientTable const &q, std::pair<std::size_t, std::size_t> gens,
                       std::pair<std::size_t, std::size_t> images)
{
  std::size_t const unset = q.size;
  std::vector<std::size_t> phi(q.size, unset);
  phi[0] = 0;
  std::vector<std::size_t> queue{0};
  std::pair<std::size_t, std::size_t> const edges[] = {{gens.first, images.first},
                                                       {gens.second, images.second}};

  for (std::size_t k = 0; k < queue.size(); ++k) {
    std::size_t c = queue[k];
    for (auto [s, t] : edges) {
      std::size_t target = q.mul[c][s];
      std::size_t image = q.mul[phi[c]][t];
      if (phi[target] == unset) {
        phi[target] = image;
        queue.push_back(target);
      } else if (phi[target] != image) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != q.size)
    throw std::invalid_argument("quotient generators do not generate");

  std::vector<bool> hit(q.size, false);
  for (auto v : phi) {
    if (hit[v])
      return std::nullopt;
    hit[v] = true;
  }

  for (std::size_t a = 0; a < q.size; ++a)
    for (std::size_t b = 0; b < q.size; ++b)
      if (phi[q.mul[a][b]] != q.mul[phi[a]][phi[b]])
        return std::nullopt;
  return phi;
}

std::vector<std::pair<std::size_t, std::size_t>>
automorphism_images(QuotientTable const &q, std::pair<std::size_t, std::size_t> gens)
{
  std::size_t ord_x = q.order_of(gens.first);
  std::size_t ord_y = q.order_of(gens.second);
  std::vector<std::pair<std::size_t, std::size_t>> res;
  for (std::size_t a = 0; a < q.size; ++a) {
    if (q.order_of(a) != ord_x)
      continue;
    for (std::size_t b = 0; b < q.size; ++b)
      if (q.order_of(b) == ord_y && extend_to_automorphism(q, gens, {a, b}))
        res.emplace_back(a, b);
  }
  return res;
}

bool quotient_is_self_dual(ElementTable const &table, ElementSet const &n,
                           Permutation const &x, Permutation const &y)
{
  auto q = quotient_table(table, n);
  std::size_t xbar = q.coset_of[table.index_of(x)];
  std::size_t ybar = q.coset_of[table.index_of(y)];
  if (q.order_of(xbar) != q.order_of(ybar))
    return false;
  return extend_to_automorphism(q, {xbar, ybar}, {ybar, xbar}).has_value();
}

ElementSet brute_duality_group(Permutation const &x, Permutation const &y, std::size_t cutoff)
{
  Permutation const gens[] = {x, y};
  auto table = enumerate_elements(gens, cutoff);

  std::vector<ElementSet> self_dual;
  for (auto const &n : all_normal_subgroups(table))
    if (quotient_is_self_dual(table, n, x, y))
      self_dual.push_back(n);

  // The whole group always qualifies, so self_dual is never empty.
  ElementSet const &smallest = self_dual.front();
  for (auto const &n : self_dual)
    if (!is_subset(smallest, n))
      throw OracleFinding("minimal normal subgroup with self-dual quotient is not unique for " +
                          print_cycles(x) + ", " + print_cycles(y));
  return smallest;
}

std::vector<std::vector<std::size_t>> brute_block_systems(std::span<Permutation const> generators)
{
  if (generators.empty())
    throw std::invalid_argument("brute_block_systems needs a generator");
  std::size_t const d = generators.front().degree();
  if (d > 10)
    throw std::invalid_argument("brute_block_systems is limited to degree 10");

  std::vector<bool> seen(d, false);
  std::vector<Point> orbit{0};
  seen[0] = true;
  for (std::size_t k = 0; k < orbit.size(); ++k)
    for (auto const &g : generators)
      if (!seen[g(orbit[k])]) {
        seen[g(orbit[k])] = true;
        orbit.push_back(g(orbit[k]));
      }
  if (orbit.size() != d)
    throw std::invalid_argument("brute_block_systems needs a transitive group");

  std::vector<std::vector<std::size_t>> res;
  // Restricted growth strings enumerate each set partition exactly once.
  std::vector<std::size_t> labels(d, 0);
  std::vector<std::size_t> max_before(d, 0);
  while (true) {
    std::size_t blocks = *std::max_element(labels.begin(), labels.end()) + 1;
    if (blocks > 1 && blocks < d) {
      bool invariant = true;
      for (auto const &g : generators) {
        for (Point a = 0; a < d && invariant; ++a)
          for (Point b = a + 1; b < d && invariant; ++b)
            if (labels[a] == labels[b] && labels[g(a)] != labels[g(b)])
              invariant = false;
      }
      if (invariant)
        res.push_back(labels);
    }

    std::size_t i = d;
    while (--i > 0 && labels[i] == max_before[i] + 1) {
    }
    if (i == 0)
      break;
    ++labels[i];
    for (std::size_t j = i + 1; j < d; ++j) {
      labels[j] = 0;
      max_before[j] = std::max(max_before[j - 1], labels[j - 1]);
    }
  }
  std::sort(res.begin(), res.end());
  return res;
}

std::vector<std::pair<Permutation, Permutation>> generating_pairs(ElementTable const &table)
{
  std::vector<std::pair<Permutation, Permutation>> res;
  for (auto const &a : table.elements())
    for (auto const &b : table.elements()) {
      Permutation const gens[] = {a, b};
      if (enumerate_elements(gens, table.size()).size() == table.size())
        res.emplace_back(a, b);
    }
  return res;
}

} // namespace hyperdual::oracle
