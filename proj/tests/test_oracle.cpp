#include <cstdlib>
#include <numeric>
#include <random>

#include "doctest.h"
#include "hyperdual/hypermap.hpp"
#include "hyperdual/oracle.hpp"

using namespace hyperdual;
using namespace hyperdual::oracle;

namespace
{

Permutation P(char const *text, std::size_t degree) { return parse_cycles(text, degree); }

std::vector<Permutation> s4_gens() { return {P("(1,2,3,4)", 4), P("(1,2)", 4)}; }
std::vector<Permutation> s5_gens() { return {P("(1,2,3,4,5)", 5), P("(1,2)", 5)}; }
std::vector<Permutation> a5_gens() { return {P("(1,2,3,4,5)", 5), P("(1,2,3)", 5)}; }

std::vector<std::size_t> sizes(std::vector<ElementSet> const &sets)
{
  std::vector<std::size_t> res;
  for (auto const &s : sets)
    res.push_back(s.size());
  return res;
}

} // namespace

TEST_CASE("enumerate_elements")
{
  CHECK(enumerate_elements(s4_gens()).size() == 24);
  CHECK(enumerate_elements(a5_gens()).size() == 60);
  CHECK(enumerate_elements(std::vector<Permutation>{Permutation(3)}).size() == 1);
  CHECK_THROWS_AS(enumerate_elements(s5_gens(), 100), CutoffExceeded);
}

TEST_CASE("element table is closed under products and inverses")
{
  auto t = enumerate_elements(s4_gens());
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    auto const &a = t.elements()[rng() % t.size()];
    auto const &b = t.elements()[rng() % t.size()];
    CHECK(t.contains(a * b));
    CHECK(t.contains(a.inverse()));
  }
}

TEST_CASE("cutoff can be overridden from the environment")
{
  setenv("HYPERDUAL_ORACLE_CUTOFF", "50", 1);
  CHECK(default_cutoff() == 50);
  CHECK_THROWS_AS(enumerate_elements(a5_gens()), CutoffExceeded);
  unsetenv("HYPERDUAL_ORACLE_CUTOFF");
  CHECK(default_cutoff() == builtin_cutoff);
}

TEST_CASE("conjugacy classes")
{
  CHECK(conjugacy_classes(enumerate_elements(s4_gens())).size() == 5);
  CHECK(conjugacy_classes(enumerate_elements(a5_gens())).size() == 5);
  CHECK(conjugacy_classes(enumerate_elements(s5_gens())).size() == 7);
}

TEST_CASE("all_normal_subgroups")
{
  CHECK(sizes(all_normal_subgroups(enumerate_elements(s4_gens()))) ==
        std::vector<std::size_t>{1, 4, 12, 24});
  CHECK(sizes(all_normal_subgroups(enumerate_elements(s5_gens()))) ==
        std::vector<std::size_t>{1, 60, 120});
  CHECK(sizes(all_normal_subgroups(enumerate_elements(a5_gens()))) ==
        std::vector<std::size_t>{1, 60});
  // C_2 x C_2 x C_2: every subgroup is normal; 16 in total.
  auto c2cubed = enumerate_elements(
    std::vector<Permutation>{P("(1,2)", 6), P("(3,4)", 6), P("(5,6)", 6)});
  CHECK(all_normal_subgroups(c2cubed).size() == 16);
}

TEST_CASE("automorphism counts")
{
  // Aut(S_4) = S_4, Aut(A_5) = S_5, Aut(C_5) = C_4.
  auto s4 = enumerate_elements(s4_gens());
  auto q = quotient_table(s4, {Permutation(4)});
  auto x = q.coset_of[s4.index_of(s4_gens()[0])];
  auto y = q.coset_of[s4.index_of(s4_gens()[1])];
  CHECK(automorphism_images(q, {x, y}).size() == 24);

  auto a5 = enumerate_elements(a5_gens());
  auto qa = quotient_table(a5, {Permutation(5)});
  CHECK(automorphism_images(qa, {qa.coset_of[a5.index_of(a5_gens()[0])],
                                 qa.coset_of[a5.index_of(a5_gens()[1])]})
          .size() == 120);

  auto c5 = enumerate_elements(std::vector<Permutation>{P("(1,2,3,4,5)", 5)});
  auto qc = quotient_table(c5, {Permutation(5)});
  auto gen = qc.coset_of[c5.index_of(P("(1,2,3,4,5)", 5))];
  CHECK(automorphism_images(qc, {gen, gen}).size() == 4);
}

TEST_CASE("quotient_table rejects non-normal subgroups")
{
  auto s4 = enumerate_elements(s4_gens());
  CHECK_THROWS_AS(quotient_table(s4, closure(std::vector<Permutation>{P("(1,2)", 4)})),
                  std::invalid_argument);
}

TEST_CASE("brute_duality_group")
{
  auto a5 = brute_duality_group(P("(1,2,3,4,5)", 5), P("(1,2,3)", 5));
  CHECK(a5.size() == 60);

  auto v4 = brute_duality_group(P("(1,2)", 4), P("(1,2,3,4)", 4));
  ElementSet expected{Permutation(4), P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4),
                      P("(1,4)(2,3)", 4)};
  std::sort(expected.begin(), expected.end());
  CHECK(v4 == expected);

  auto x = P("(1,2,3,4)", 6);
  CHECK(brute_duality_group(x, x).size() == 1);
}

TEST_CASE("brute_block_systems")
{
  auto c4 = brute_block_systems(std::vector<Permutation>{P("(1,2,3,4)", 4)});
  REQUIRE(c4.size() == 1);
  CHECK(c4[0] == std::vector<std::size_t>{0, 1, 0, 1});

  CHECK(brute_block_systems(a5_gens()).empty());
  CHECK_THROWS_AS(brute_block_systems(std::vector<Permutation>{P("(1,2)", 4), P("(3,4)", 4)}),
                  std::invalid_argument);
  CHECK_THROWS_AS(brute_block_systems(std::vector<Permutation>{P("(1,2,3,4,5,6,7,8,9,10,11)", 11)}),
                  std::invalid_argument);

  // Bell(6) = 203 partitions; C_6 has blocks of size 2 and 3.
  CHECK(brute_block_systems(std::vector<Permutation>{P("(1,2,3,4,5,6)", 6)}).size() == 2);
}

TEST_CASE("generating pairs of S_3")
{
  auto s3 = enumerate_elements(std::vector<Permutation>{P("(1,2,3)", 3), P("(1,2)", 3)});
  // 36 ordered pairs; non-generating ones lie in a common proper subgroup.
  CHECK(generating_pairs(s3).size() == 18);
}

TEST_CASE("engine agrees with the oracle on every generating pair of S_4")
{
  auto s4 = enumerate_elements(s4_gens());
  for (auto const &[a, b] : generating_pairs(s4)) {
    Hypermap h(a, b);
    auto engine = oracle::closure(duality_group(h).generators());
    CHECK(engine == brute_duality_group(a, b));
  }
}
