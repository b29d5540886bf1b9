#include "hyperdual/hypermap.hpp"

#include <numeric>

namespace hyperdual
{

namespace
{

// Quotients with more cosets than this are not rebuilt to double-check
// their self-duality.
constexpr std::size_t quotient_check_limit = 720;

Permutation direct_sum(Permutation const &a, Permutation const &b)
{
  std::size_t d = a.degree();
  std::vector<Point> images(2 * d);
  for (Point i = 0; i < d; ++i) {
    images[i] = a(i);
    images[d + i] = static_cast<Point>(b(i) + d);
  }
  return Permutation(std::move(images));
}

Permutation second_component(Permutation const &k, std::size_t d)
{
  std::vector<Point> images(d);
  for (Point i = 0; i < d; ++i)
    images[i] = static_cast<Point>(k(static_cast<Point>(d + i)) - d);
  return Permutation(std::move(images));
}

struct DualityData
{
  BigInt group_order;
  BigInt product_order;
  PermutationGroup kernel;
};

DualityData compute_duality_data(Hypermap const &h)
{
  std::size_t d = h.degree();
  auto g = h.monodromy();
  auto k = product_group(h);

  std::vector<Point> first_copy(d);
  std::iota(first_copy.begin(), first_copy.end(), Point{0});
  auto chain = StabilizerChain::build(k.generators(), 2 * d, first_copy);

  std::vector<Permutation> gens;
  auto sub = chain.tail(d);
  if (!sub.levels().empty())
    for (auto const &s : sub.levels().front().generators)
      gens.push_back(second_component(s, d));
  if (gens.empty())
    gens.push_back(Permutation(d));

  return {g.order(), chain.order(), PermutationGroup(std::move(gens))};
}

} // namespace

Hypermap::Hypermap(Permutation x, Permutation y)
: x_(std::move(x)),
  y_(std::move(y))
{
  if (x_.degree() != y_.degree())
    throw DegreeMismatch("hypermap generators have degrees " +
                         std::to_string(x_.degree()) + " and " +
                         std::to_string(y_.degree()));
}

Hypermap dual(Hypermap const &h) { return Hypermap(h.y(), h.x()); }

PermutationGroup product_group(Hypermap const &h)
{
  return PermutationGroup({direct_sum(h.x(), h.y()), direct_sum(h.y(), h.x())});
}

bool is_self_dual(Hypermap const &h)
{
  return product_group(h).order() == h.monodromy().order();
}

PermutationGroup duality_group(Hypermap const &h)
{
  auto data = compute_duality_data(h);
  auto g = h.monodromy();
  auto const &d = data.kernel;

  if (data.product_order != data.group_order * d.order())
    throw VerificationError("|K| != |G| |D| for " + print_cycles(h.x()) + ", " +
                            print_cycles(h.y()));
  if (!d.is_normal_in(g))
    throw VerificationError("duality group is not normal in the monodromy group");
  if (g.normal_closure(d.generators()).order() != d.order())
    throw VerificationError("duality group differs from its normal closure");

  if (!d.is_trivial() && data.group_order / d.order() <= quotient_check_limit) {
    if (!is_self_dual(quotient(h, d)))
      throw VerificationError("quotient by the duality group is not self-dual");
  }
  return d;
}

BigInt duality_index(Hypermap const &h)
{
  return product_group(h).order() / h.monodromy().order();
}

Hypermap quotient(Hypermap const &h, PermutationGroup const &n)
{
  auto g = h.monodromy();
  if (n.degree() != h.degree())
    throw GroupError("quotient subgroup has the wrong degree");
  if (!n.is_subgroup_of(g))
    throw GroupError("quotient subgroup is not contained in the monodromy group");
  if (!n.is_normal_in(g))
    throw GroupError("quotient subgroup is not normal");

  // Cosets rN, enumerated as an orbit of N under left multiplication.
  std::vector<Permutation> reps{Permutation(h.degree())};
  auto coset_of = [&](Permutation const &p) -> std::size_t {
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (n.contains(reps[i].inverse() * p))
        return i;
    return reps.size();
  };

  std::vector<Point> x_images;
  std::vector<Point> y_images;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (auto const *s : {&h.x(), &h.y()}) {
      Permutation next = *s * reps[i];
      std::size_t j = coset_of(next);
      if (j == reps.size())
        reps.push_back(std::move(next));
      (s == &h.x() ? x_images : y_images).push_back(static_cast<Point>(j));
    }
  }

  Hypermap res(Permutation(std::move(x_images)), Permutation(std::move(y_images)));
  if (res.monodromy().order() * n.order() != g.order())
    throw VerificationError("quotient action has the wrong order");
  return res;
}

TypeTriple type_triple(Hypermap const &h)
{
  return {order(h.x()), order(h.x() * h.y()), order(h.y())};
}

std::pair<BigInt, BigInt> duality_type(Hypermap const &h)
{
  BigInt l = order(h.x());
  BigInt n = order(h.y());
  if (n < l)
    std::swap(l, n);
  return {l, n};
}

DualityReport analyze(Hypermap const &h)
{
  DualityReport r;
  r.type = type_triple(h);
  r.duality_type = duality_type(h);

  auto g = h.monodromy();
  auto d = duality_group(h);
  r.monodromy_order = g.order();
  r.monodromy_class = g.classify_natural();
  r.duality_index = d.order();
  r.self_dual = r.duality_index == 1;
  r.extreme = r.duality_index == r.monodromy_order;
  for (auto const &gen : d.generators())
    if (!gen.is_identity())
      r.duality_group_generators.push_back(gen);
  return r;
}

std::string sn_prediction_name(SnPrediction p)
{
  switch (p) {
  case SnPrediction::extreme:
    return "extreme";
  case SnPrediction::self_dual_or_half:
    return "self_dual_or_half";
  case SnPrediction::s4_exceptional:
    break;
  }
  return "s4_exceptional";
}

SnPrediction classify_sn_pair(Hypermap const &h)
{
  if (h.monodromy().classify_natural() != NaturalClass::symmetric)
    throw GroupError("monodromy group is not the full symmetric group");
  if (parity(h.x()) == Parity::even || parity(h.y()) == Parity::even)
    return SnPrediction::extreme;
  return h.degree() == 4 ? SnPrediction::s4_exceptional : SnPrediction::self_dual_or_half;
}

std::set<BigInt> predicted_indices(SnPrediction p, std::size_t degree)
{
  BigInt full = factorial(degree);
  switch (p) {
  case SnPrediction::extreme:
    return {full};
  case SnPrediction::self_dual_or_half:
    return {BigInt(1), full / 2};
  case SnPrediction::s4_exceptional:
    break;
  }
  return {BigInt(1), BigInt(4)};
}

} // namespace hyperdual
