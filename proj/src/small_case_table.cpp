#include "hyperdual/constructors.hpp"

namespace hyperdual
{

namespace
{

// Output of search_small_case(larger, smaller, 8) for every key of
// small_case_keys(12). tests/test_small_cases.cpp reruns the search and
// diffs against this table. {2, 2} has no entry: two involutions generate
// a dihedral group, where swapping the generators is always an automorphism.
constexpr SmallCaseEntry table[] = {
  {3, 3, 7, "(1,2,3)(4,5,6)", "(3,4,7)"}, // alternating
  {4, 2, 5, "(1,2,3,4)", "(2,4)(3,5)"}, // symmetric
  {5, 3, 5, "(1,2,3,4,5)", "(3,4,5)"}, // alternating
  {5, 5, 6, "(1,2,3,4,5)", "(2,3,5,6,4)"}, // alternating
  {6, 2, 5, "(1,2,3)(4,5)", "(2,4)(3,5)"}, // symmetric
  {7, 3, 7, "(1,2,3,4,5,6,7)", "(5,6,7)"}, // alternating
  {7, 5, 7, "(1,2,3,4,5,6,7)", "(3,4,5,6,7)"}, // alternating
  {8, 2, 8, "(1,2,3,4,5,6,7,8)", "(5,6)(7,8)"}, // symmetric
  {10, 2, 7, "(1,2,3,4,5)(6,7)", "(4,6)(5,7)"}, // symmetric
  {12, 2, 7, "(1,2,3,4)(5,6,7)", "(4,5)(6,7)"}, // symmetric
};

} // namespace

std::span<SmallCaseEntry const> small_case_table() { return table; }

} // namespace hyperdual
