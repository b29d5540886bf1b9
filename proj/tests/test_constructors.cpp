#include "doctest.h"
#include "hyperdual/constructors.hpp"

using namespace hyperdual;

namespace
{

Permutation P(char const *text, std::size_t degree) { return parse_cycles(text, degree); }

bool has_witness(ConstructionCertificate const &c, std::string const &prefix)
{
  for (auto const &w : c.witnesses)
    if (w.description.rfind(prefix, 0) == 0)
      return true;
  return false;
}

} // namespace

TEST_CASE("lemma1_sym")
{
  auto h5 = lemma1_sym(5);
  CHECK(h5.x() == P("(1,2,3,4,5)", 5));
  CHECK(h5.y() == P("(1,2)", 5));
  CHECK_FALSE(is_self_dual(h5));
  CHECK(h5.monodromy().order() == 120);

  auto h2 = lemma1_sym(2);
  CHECK(h2.x().is_identity());
  CHECK(h2.y() == P("(1,2)", 2));
  CHECK_FALSE(is_self_dual(h2));

  auto h3 = lemma1_sym(3);
  CHECK(order(h3.x()) == 3);
  CHECK(order(h3.y()) == 2);
  CHECK_FALSE(is_self_dual(h3));

  CHECK_THROWS_AS(lemma1_sym(1), ConstructionError);
  for (int n = 2; n <= 9; ++n)
    CHECK_NOTHROW(lemma1_sym_certified(n));
}

TEST_CASE("lemma1_alt")
{
  auto h5 = lemma1_alt(5);
  CHECK(h5.x() == P("(1,2,3,4,5)", 5));
  CHECK(h5.y() == P("(1,2,3)", 5));

  auto h6 = lemma1_alt(6);
  CHECK(h6.x() == P("(2,3,4,5,6)", 6));
  CHECK(h6.y() == P("(1,2,3)", 6));
  CHECK(h6.monodromy().order() == 360);

  auto h3 = lemma1_alt(3);
  CHECK(h3.x().is_identity());
  CHECK(h3.y() == P("(1,2,3)", 3));

  CHECK_THROWS_AS(lemma1_alt(2), ConstructionError);
  for (int n = 3; n <= 9; ++n)
    CHECK_NOTHROW(lemma1_alt_certified(n));
}

TEST_CASE("A_4: the pair of 3-cycles is self-dual, the involution pair is not")
{
  auto cycles = Hypermap(P("(2,3,4)", 4), P("(1,2,3)", 4));
  CHECK(cycles.monodromy().order() == 12);
  CHECK(is_self_dual(cycles));
  auto swap = P("(1,4)", 4);
  CHECK(swap * cycles.x() * swap == cycles.y());

  auto h = lemma1_alt(4);
  CHECK(h.x() == P("(1,2)(3,4)", 4));
  CHECK(h.y() == P("(1,2,3)", 4));
  auto r = analyze(h);
  CHECK(r.monodromy_class == NaturalClass::alternating);
  CHECK(r.duality_index == 12);
  CHECK(r.extreme);
}

TEST_CASE("theorem2_alt_extreme")
{
  auto c5 = theorem2_alt_extreme(5);
  CHECK(c5.hypermap == lemma1_alt(5));
  CHECK(c5.report.duality_index == 60);
  CHECK(c5.report.extreme);

  auto c7 = theorem2_alt_extreme(7);
  CHECK(c7.report.duality_index == 2520);

  auto c4 = theorem2_alt_extreme(4);
  CHECK(c4.hypermap == lemma1_alt(4));
  CHECK(c4.report.monodromy_class == NaturalClass::alternating);
  CHECK(c4.report.duality_index == 12);

  auto c3 = theorem2_alt_extreme(3);
  CHECK(c3.report.duality_index == 3);
  CHECK(c3.report.extreme);

  for (int n = 3; n <= 10; ++n) {
    auto c = theorem2_alt_extreme(n);
    CHECK(c.report.extreme);
    CHECK(c.report.monodromy_order == factorial(static_cast<std::size_t>(n)) / 2);
  }
  CHECK_THROWS_AS(theorem2_alt_extreme(2), ConstructionError);
}

TEST_CASE("duality_type_extreme examples")
{
  auto a = duality_type_extreme(9, 5);
  CHECK(a.certificate.case_tag == CaseTag::case_a);
  CHECK(a.report.monodromy_class == NaturalClass::alternating);
  CHECK(a.report.duality_index == 181440);

  auto c = duality_type_extreme(6, 4);
  CHECK(c.certificate.case_tag == CaseTag::case_c);
  CHECK(c.hypermap.degree() == 9);
  CHECK(c.report.monodromy_class == NaturalClass::symmetric);
  CHECK(c.report.extreme);

  auto d = duality_type_extreme(4, 4);
  CHECK(d.certificate.case_tag == CaseTag::case_d);
  CHECK(d.hypermap.degree() == 7);
  CHECK(parity(d.hypermap.x()) == Parity::odd);
  CHECK(parity(d.hypermap.y()) == Parity::even);
  CHECK(d.report.monodromy_class == NaturalClass::symmetric);
  CHECK(d.report.extreme);

  auto e = duality_type_extreme(7, 7);
  CHECK(e.certificate.case_tag == CaseTag::case_e);
  CHECK(e.hypermap.degree() == 8);
  CHECK(parity(e.hypermap.x()) == Parity::even);
  CHECK(parity(e.hypermap.y()) == Parity::even);
  CHECK(e.report.monodromy_order == 20160);
  CHECK(e.report.extreme);

  CHECK_THROWS_AS(duality_type_extreme(1, 4), ConstructionError);
  CHECK_THROWS_AS(duality_type_extreme(2, 2), VerificationError);
}

TEST_CASE("the shifted cycle pair is self-dual")
{
  for (int l = 3; l <= 13; l += 2) {
    auto h = shifted_cycle_pair(l);
    auto swap = Permutation::from_cycles(h.degree(), {{0, static_cast<Point>(l)}});
    CHECK(swap * h.x() * swap.inverse() == h.y());
    CHECK(swap * h.y() * swap.inverse() == h.x());
    CHECK(is_self_dual(h));
  }
}

TEST_CASE("swapped arguments dualize")
{
  auto fwd = duality_type_extreme(9, 5);
  auto rev = duality_type_extreme(5, 9);
  CHECK(rev.hypermap == dual(fwd.hypermap));
  CHECK(order(rev.hypermap.x()) == 5);

  auto table_fwd = duality_type_extreme(6, 2);
  auto table_rev = duality_type_extreme(2, 6);
  CHECK(table_rev.hypermap == dual(table_fwd.hypermap));
}

TEST_CASE("grid: every duality-type in [2,12]^2 except {2,2}")
{
  for (int l = 2; l <= 12; ++l)
    for (int n = 2; n <= 12; ++n) {
      if (l == 2 && n == 2)
        continue;
      CAPTURE(l);
      CAPTURE(n);
      auto c = duality_type_extreme(l, n);
      CHECK(order(c.hypermap.x()) == l);
      CHECK(order(c.hypermap.y()) == n);
      CHECK(c.report.extreme);
      CHECK(c.report.monodromy_class != NaturalClass::other);

      auto g = c.hypermap.monodromy();
      for (auto const &w : c.certificate.witnesses)
        CHECK(g.contains(w.permutation));

      auto tag = c.certificate.case_tag;
      auto d = c.hypermap.degree();
      if (tag == CaseTag::case_a && d > 8) {
        CHECK(c.report.monodromy_order == factorial(d) / 2);
        CHECK(has_witness(c.certificate, "commutator"));
      }
      if (tag == CaseTag::case_c || tag == CaseTag::case_d) {
        auto big = static_cast<std::size_t>(std::max(l, n));
        auto small = static_cast<std::size_t>(std::min(l, n));
        auto x = l >= n ? c.hypermap.x() : c.hypermap.y();
        auto y = l >= n ? c.hypermap.y() : c.hypermap.x();
        CHECK(parity(x) == Parity::odd);
        CHECK(parity(y) == Parity::even);
        CHECK(c.report.duality_index == c.report.monodromy_order);
        // Jordan: primitive with a cycle moving `big` of big+small-1 points.
        CHECK(g.is_primitive());
        CHECK(g.is_k_transitive(d - big + 1));
        CHECK(d - big + 1 == small);
      }
    }
}

TEST_CASE("Miller certificate: case a and e witnesses")
{
  for (int l = 9; l <= 15; l += 2)
    for (int n = 3; n < l; n += 2) {
      auto c = duality_type_extreme(l, n);
      REQUIRE(c.certificate.case_tag == CaseTag::case_a);
      auto const &w = c.certificate.witnesses.front().permutation;
      CHECK(support(w).size() <= 4);
      auto g = c.hypermap.monodromy();
      CHECK(g.is_primitive());
      CHECK(g.classify_natural() == NaturalClass::alternating);
    }
  for (int l = 9; l <= 13; l += 2) {
    auto c = duality_type_extreme(l, l);
    REQUIRE(c.certificate.case_tag == CaseTag::case_e);
    auto const &w = c.certificate.witnesses.front().permutation;
    CHECK(support(w).size() == 4);
    CHECK(w == Permutation::from_cycles(c.hypermap.degree(),
                                        {{0, 1}, {static_cast<Point>(l - 1), static_cast<Point>(l)}}));
    CHECK(c.hypermap.monodromy().is_k_transitive(2));
    CHECK(c.report.monodromy_class == NaturalClass::alternating);
  }
}

TEST_CASE("verify_construction rejects false claims")
{
  auto c = duality_type_extreme(9, 5);
  c.certificate.claimed_class = NaturalClass::symmetric;
  CHECK_THROWS_AS(verify_construction(c), VerificationError);

  auto c2 = duality_type_extreme(6, 4);
  c2.certificate.witnesses.push_back({"bogus", P("(1,2)", 9) * P("(3,4)", 9) * P("(5,6)", 9) *
                                                 P("(1,2)", 9) * P("(3,4)", 9)});
  CHECK_NOTHROW(verify_construction(c2));

  auto e = duality_type_extreme(7, 7);
  e.certificate.witnesses.push_back({"odd", P("(1,2)", 8)});
  CHECK_THROWS_AS(verify_construction(e), VerificationError);
}
