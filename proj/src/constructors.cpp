#include "hyperdual/constructors.hpp"

#include <algorithm>
#include <numeric>

namespace hyperdual
{

namespace
{

// The cycle (first, first+1, ..., last) in 1-based points.
std::vector<Point> run(int first, int last)
{
  std::vector<Point> res;
  for (int p = first; p <= last; ++p)
    res.push_back(static_cast<Point>(p - 1));
  return res;
}

Permutation cycle_perm(std::size_t degree, std::vector<std::vector<Point>> cycles)
{
  std::erase_if(cycles, [](auto const &c) { return c.size() < 2; });
  return Permutation::from_cycles(degree, cycles);
}

bool is_odd(int k) { return k % 2 != 0; }

ConstructionCertificate certificate(CaseTag tag, std::size_t degree, NaturalClass cls,
                                    bool extreme, std::vector<Witness> witnesses = {})
{
  return {tag, degree, cls, extreme, std::move(witnesses)};
}

Construction oriented(Hypermap h, ConstructionCertificate cert, bool swap)
{
  if (swap) {
    h = dual(h);
    for (auto &w : cert.witnesses)
      w.description += " (before dualizing)";
  }
  return {std::move(h), std::move(cert), {}};
}

bool covered_by_cycle_families(int larger, int smaller)
{
  bool odd_l = is_odd(larger);
  bool odd_n = is_odd(smaller);
  if (odd_l != odd_n)
    return true;
  if (larger != smaller)
    return odd_l ? larger > 8 : smaller != 2;
  return odd_l ? larger >= 7 : larger != 2;
}

Construction from_table(int larger, int smaller, bool swap)
{
  auto table = small_case_table();
  auto it = std::find_if(table.begin(), table.end(), [&](SmallCaseEntry const &e) {
    return e.larger == larger && e.smaller == smaller;
  });
  if (it == table.end())
    throw VerificationError("no hypermap of duality-type {" + std::to_string(smaller) + "," +
                            std::to_string(larger) +
                            "} with extreme duality index and alternating or symmetric "
                            "monodromy group is known");

  Hypermap h(parse_cycles(it->x, it->degree), parse_cycles(it->y, it->degree));
  auto cls = h.monodromy().classify_natural();
  return oriented(std::move(h), certificate(CaseTag::small_case_table, it->degree, cls, true),
                  swap);
}

} // namespace

std::string case_tag_name(CaseTag tag)
{
  switch (tag) {
  case CaseTag::lemma1_sym:
    return "lemma1_sym";
  case CaseTag::lemma1_alt:
    return "lemma1_alt";
  case CaseTag::theorem2:
    return "theorem2";
  case CaseTag::case_a:
    return "case_a";
  case CaseTag::case_b:
    return "case_b";
  case CaseTag::case_c:
    return "case_c";
  case CaseTag::case_d:
    return "case_d";
  case CaseTag::case_e:
    return "case_e";
  case CaseTag::small_case_table:
    break;
  }
  return "small_case_table";
}

Hypermap lemma1_sym(int n)
{
  if (n < 2)
    throw ConstructionError("lemma1_sym needs n >= 2");
  auto d = static_cast<std::size_t>(n);
  if (n == 2)
    return Hypermap(Permutation(2), cycle_perm(2, {run(1, 2)}));
  return Hypermap(cycle_perm(d, {run(1, n)}), cycle_perm(d, {run(1, 2)}));
}

Hypermap lemma1_alt(int n)
{
  if (n < 3)
    throw ConstructionError("lemma1_alt needs n >= 3");
  auto d = static_cast<std::size_t>(n);
  Permutation y = cycle_perm(d, {run(1, 3)});
  if (n == 3)
    return Hypermap(Permutation(3), y);
  // (2,3,4) and (1,2,3) have the same order and the pair is self-dual
  // (conjugation by (1,4) swaps them); an involution and a 3-cycle are not.
  if (n == 4)
    return Hypermap(cycle_perm(4, {run(1, 2), run(3, 4)}), y);
  return Hypermap(cycle_perm(d, {is_odd(n) ? run(1, n) : run(2, n)}), y);
}

Construction lemma1_sym_certified(int n)
{
  auto h = lemma1_sym(n);
  bool extreme = parity(h.x()) == Parity::even || parity(h.y()) == Parity::even;
  auto cert = certificate(CaseTag::lemma1_sym, h.degree(), NaturalClass::symmetric, extreme);
  Construction c{std::move(h), std::move(cert), {}};
  verify_construction(c);
  if (c.report.self_dual)
    throw VerificationError("lemma1_sym produced a self-dual hypermap");
  return c;
}

Construction lemma1_alt_certified(int n)
{
  auto h = lemma1_alt(n);
  auto cert = certificate(CaseTag::lemma1_alt, h.degree(), NaturalClass::alternating, true);
  Construction c{std::move(h), std::move(cert), {}};
  verify_construction(c);
  if (c.report.self_dual)
    throw VerificationError("lemma1_alt produced a self-dual hypermap");
  return c;
}

Construction theorem2_alt_extreme(int n)
{
  if (n < 3)
    throw ConstructionError("theorem2 needs n >= 3");
  auto h = lemma1_alt(n);
  auto cert = certificate(CaseTag::theorem2, h.degree(), NaturalClass::alternating, true);
  Construction c{std::move(h), std::move(cert), {}};
  verify_construction(c);
  return c;
}

Construction duality_type_extreme(int l, int n)
{
  if (l < 2 || n < 2)
    throw ConstructionError("duality-type entries must be at least 2");

  bool swap = l < n;
  int big = std::max(l, n);
  int small = std::min(l, n);

  Construction c = [&]() -> Construction {
    if (!covered_by_cycle_families(big, small))
      return from_table(big, small, swap);

    if (is_odd(big) != is_odd(small)) {
      auto d = static_cast<std::size_t>(big);
      Hypermap h(cycle_perm(d, {run(1, big)}), cycle_perm(d, {run(1, small)}));
      return oriented(std::move(h),
                      certificate(CaseTag::case_b, d, NaturalClass::symmetric, true), swap);
    }

    if (is_odd(big) && big != small) {
      auto d = static_cast<std::size_t>(big);
      Hypermap h(cycle_perm(d, {run(1, big)}), cycle_perm(d, {run(1, small)}));
      Witness z{"commutator y^-1 x^-1 y x", commutator(h.y(), h.x())};
      return oriented(std::move(h),
                      certificate(CaseTag::case_a, d, NaturalClass::alternating, true, {z}),
                      swap);
    }

    if (!is_odd(big)) {
      // Same shape for l > n (case c) and l = n (case d).
      auto d = static_cast<std::size_t>(big + small - 1);
      Hypermap h(cycle_perm(d, {run(1, big)}),
                 cycle_perm(d, {run(1, 2), run(big, big + small - 1)}));
      std::vector<Witness> witnesses{{"l-cycle x", h.x()}};
      if (small == 4)
        witnesses.push_back({"y^2", h.y().pow(2)});
      CaseTag tag = big == small ? CaseTag::case_d : CaseTag::case_c;
      return oriented(std::move(h),
                      certificate(tag, d, NaturalClass::symmetric, true, std::move(witnesses)),
                      swap);
    }

    // l = n odd. The shifted pair (1..l), (2..l+1) is swapped by conjugation
    // with (1,l+1); dropping point 2 from y instead breaks that symmetry.
    auto d = static_cast<std::size_t>(big + 1);
    std::vector<Point> y_cycle = run(2, big + 1);
    y_cycle.front() = 0;
    Hypermap h(cycle_perm(d, {run(1, big)}), cycle_perm(d, {y_cycle}));
    Witness w{"y^-1 x", h.y().inverse() * h.x()};
    return oriented(std::move(h),
                    certificate(CaseTag::case_e, d, NaturalClass::alternating, true, {w}),
                    false);
  }();

  verify_construction(c);
  if (order(c.hypermap.x()) != l || order(c.hypermap.y()) != n)
    throw VerificationError("constructed generators have the wrong orders");
  if (c.report.monodromy_class == NaturalClass::other)
    throw VerificationError("constructed monodromy group is neither alternating nor symmetric");
  if (!c.report.extreme)
    throw VerificationError("constructed hypermap does not have extreme duality index");
  return c;
}

void verify_construction(Construction &c)
{
  auto const &h = c.hypermap;
  auto const &cert = c.certificate;
  std::string const tag = case_tag_name(cert.case_tag);

  if (h.degree() != cert.ambient_degree)
    throw VerificationError(tag + ": ambient degree mismatch");

  c.report = analyze(h);
  if (c.report.monodromy_class != cert.claimed_class)
    throw VerificationError(tag + ": monodromy group is " +
                            natural_class_name(c.report.monodromy_class) + ", claimed " +
                            natural_class_name(cert.claimed_class));
  if (c.report.extreme != cert.claimed_extreme)
    throw VerificationError(tag + ": extremeness claim failed");

  auto g = h.monodromy();
  for (auto const &w : cert.witnesses)
    if (!g.contains(w.permutation))
      throw VerificationError(tag + ": witness " + w.description + " is not in the group");
}

Hypermap shifted_cycle_pair(int l)
{
  if (l < 2)
    throw ConstructionError("shifted_cycle_pair needs l >= 2");
  auto d = static_cast<std::size_t>(l + 1);
  return Hypermap(cycle_perm(d, {run(1, l)}), cycle_perm(d, {run(2, l + 1)}));
}

std::vector<std::pair<int, int>> small_case_keys(int max)
{
  std::vector<std::pair<int, int>> res;
  for (int big = 2; big <= max; ++big)
    for (int small = 2; small <= big; ++small)
      if (!covered_by_cycle_families(big, small))
        res.emplace_back(big, small);
  return res;
}

namespace
{

std::size_t lcm_of(std::vector<std::size_t> const &parts)
{
  std::size_t res = 1;
  for (auto p : parts)
    res = std::lcm(res, p);
  return res;
}

void partitions(std::size_t remaining, std::size_t max_part, std::vector<std::size_t> &cur,
                std::vector<std::vector<std::size_t>> &out)
{
  if (remaining == 0) {
    out.push_back(cur);
    return;
  }
  for (std::size_t p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

std::size_t perm_order(std::vector<Point> const &images)
{
  std::vector<bool> seen(images.size(), false);
  std::size_t res = 1;
  for (Point s = 0; s < images.size(); ++s) {
    if (seen[s])
      continue;
    std::size_t len = 0;
    for (Point p = s; !seen[p]; p = images[p]) {
      seen[p] = true;
      ++len;
    }
    res = std::lcm(res, len);
  }
  return res;
}

} // namespace

std::optional<Hypermap> search_small_case(int larger, int smaller, std::size_t max_degree)
{
  for (std::size_t d = 2; d <= max_degree; ++d) {
    std::vector<std::vector<std::size_t>> types;
    std::vector<std::size_t> cur;
    partitions(d, d, cur, types);

    for (auto const &type : types) {
      if (lcm_of(type) != static_cast<std::size_t>(larger))
        continue;
      std::vector<std::vector<Point>> cycles;
      Point next = 0;
      for (auto len : type) {
        std::vector<Point> c(len);
        std::iota(c.begin(), c.end(), next);
        next += static_cast<Point>(len);
        cycles.push_back(std::move(c));
      }
      Permutation x = cycle_perm(d, cycles);

      std::vector<Point> images(d);
      std::iota(images.begin(), images.end(), Point{0});
      do {
        if (perm_order(images) != static_cast<std::size_t>(smaller))
          continue;
        Hypermap h(x, Permutation(images));
        auto g = h.monodromy();
        if (g.classify_natural() == NaturalClass::other)
          continue;
        BigInt ord = g.order();
        if (product_group(h).order() == ord * ord)
          return h;
      } while (std::next_permutation(images.begin(), images.end()));
    }
  }
  return std::nullopt;
}

} // namespace hyperdual
