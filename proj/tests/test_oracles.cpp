#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "chimot/oracles.hpp"

using namespace chimot;
using namespace chimot::oracle;

TEST_CASE("forms over F_p classify by rank and discriminant square class") {
  CHECK(classify_form_fp({3, {1, 1}}) == FormClass{2, true});
  CHECK(classify_form_fp({3, {-1, -1}}) == FormClass{2, true});  // (-1)(-1) = 1
  CHECK(classify_form_fp({3, {-1}}) == FormClass{1, false});     // -1 = 2 not a square mod 3
  CHECK(classify_form_fp({5, {-1}}) == FormClass{1, true});      // -1 = 4 = 2^2 mod 5
  CHECK(classify_form_fp({7, {1, 2, 4}}) == FormClass{3, true}); // disc 8 = 1 mod 7
  CHECK(classify_form_fp({7, {3}}) == FormClass{1, false});
  CHECK(classify_form_fp({13, {-1, -1, -1}}) == FormClass{3, true});
  CHECK(classify_form_fp({3, {}}) == FormClass{0, true});        // empty form, trivial disc
}

TEST_CASE("degenerate or invalid forms are rejected") {
  CHECK_THROWS_AS(classify_form_fp({7, {7}}), std::invalid_argument);
  CHECK_THROWS_AS(classify_form_fp({7, {14}}), std::invalid_argument);
  CHECK_THROWS_AS(classify_form_fp({2, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(classify_form_fp({9, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(classify_form_fp({1, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(classify_form_fp({-3, {1}}), std::invalid_argument);
}

TEST_CASE("twist relations match the residue of p mod 4") {
  for (long long p : {3LL, 5LL, 7LL, 11LL, 13LL, 17LL, 19LL, 23LL})
    CHECK(gw_fp_relation_check(p));
  CHECK_THROWS_AS(gw_fp_relation_check(2), std::invalid_argument);
  CHECK_THROWS_AS(gw_fp_relation_check(15), std::invalid_argument);
}

TEST_CASE("closed-form Weyl orders") {
  CHECK(weyl_order_closed_form({CartanFamily::A, 1}) == 2);
  CHECK(weyl_order_closed_form({CartanFamily::A, 2}) == 6);
  CHECK(weyl_order_closed_form({CartanFamily::A, 7}) == 40320);
  CHECK(weyl_order_closed_form({CartanFamily::B, 2}) == 8);
  CHECK(weyl_order_closed_form({CartanFamily::B, 6}) == 46080);
  CHECK(weyl_order_closed_form({CartanFamily::C, 3}) == 48);
  CHECK(weyl_order_closed_form({CartanFamily::D, 3}) == 24);
  CHECK(weyl_order_closed_form({CartanFamily::D, 4}) == 192);
  CHECK(weyl_order_closed_form({CartanFamily::G, 2}) == 12);
  CHECK(weyl_order_closed_form({CartanFamily::F, 4}) == 1152);
  CHECK(weyl_order_closed_form({CartanFamily::E, 6}) == 51840);
}

TEST_CASE("shapes without a formula are rejected") {
  CHECK_THROWS_AS(weyl_order_closed_form({CartanFamily::B, 1}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_order_closed_form({CartanFamily::E, 7}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_order_closed_form({CartanFamily::A, 0}), std::invalid_argument);
  CHECK_THROWS_AS(weyl_order_closed_form({CartanFamily::A, 25}), std::invalid_argument);
}
