#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include "chimot/expr.hpp"
#include "chimot/parse.hpp"

using namespace chimot;

namespace {

const CartanType A2{CartanFamily::A, 2};

}  // namespace

TEST_CASE("atoms and simple constructors parse to the expected trees") {
  CHECK(parse("Point") == point());
  CHECK(parse("Gm") == gm());
  CHECK(parse("TateTwist") == tate_twist());
  CHECK(parse("Affine(3)") == affine(3));
  CHECK(parse("Torus(2)") == torus(2));
  CHECK(parse("Projective(0)") == projective(0));
  CHECK(parse("Product(Gm, Point)") == product(gm(), point()));
  CHECK(parse("Smash(TateTwist, TateTwist)") == smash(tate_twist(), tate_twist()));
  CHECK(parse("DisjointUnion(Point, Gm)") == disjoint_union(point(), gm()));
  CHECK(parse("PushoutCone(Gm, Point)") == pushout_cone(gm(), point()));
  CHECK(parse("TorusFixed(Projective(1), DisjointUnion(Point, Point))") ==
        torus_fixed(projective(1), disjoint_union(point(), point())));
  CHECK(parse("ThomTrivial(2, Gm)") == thom_trivial(2, gm()));
  CHECK(parse("TorusSlice(1, Point)") == torus_slice(1, point()));
  CHECK(parse("ClosedOpenPair(Affine(1), Gm, Point, 1)") ==
        closed_open_pair(affine(1), gm(), point(), 1));
  CHECK(parse("PointedQuotient(Affine(1), Gm, Point, 1)") ==
        pointed_quotient(affine(1), gm(), point(), 1));
  CHECK(parse("MayerVietoris(Gm, Gm, Gm, Point, Point, Point)") ==
        mayer_vietoris(gm(), gm(), gm(), point(), point(), point()));
  CHECK(parse("Flag(A, 2)") == flag(A2));
  CHECK(parse("GModT(B, 3)") == g_mod_t({CartanFamily::B, 3}));
  CHECK(parse("GModN(A, 1)") == g_mod_n({CartanFamily::A, 1}));
  CHECK(parse("Stratified[(Affine(1), 0), (Point, 1)]") ==
        stratified({{affine(1), 0}, {point(), 1}}));
  CHECK(parse("Stratified[]") == stratified({}));
}

TEST_CASE("whitespace and comments are trivia") {
  const char* text =
      "# the multiplicative group, twice\n"
      "Product(  Gm ,\n"
      "          Gm )  # trailing note\n";
  CHECK(parse(text) == product(gm(), gm()));
  CHECK(parse("Flag(A,2)") == flag(A2));
  CHECK(parse("\n\n  Point  \n") == point());
}

TEST_CASE("parse errors carry 1-based positions") {
  auto fails_at = [](const char* text, int line, int column, const char* fragment) {
    try {
      parse(text);
      FAIL_CHECK("expected ParseError for: " << text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == column);
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };

  fails_at("Blah(2)", 1, 1, "unknown constructor 'Blah'");
  fails_at("Smash(Gm", 1, 9, "found 'end of input'");
  fails_at("Affine(x)", 1, 8, "expected dimension (a non-negative integer)");
  fails_at("Affine(-1)", 1, 8, "unexpected character '-'");
  fails_at("Point(3)", 1, 6, "Point takes no arguments");
  fails_at("Gm Gm", 1, 4, "trailing input after expression: 'Gm'");
  fails_at("Affine(1000000000001)", 1, 8, "integer literal too large");
  fails_at("# comment\nProduct(Gm,\n        Foo)", 3, 9, "unknown constructor 'Foo'");
  fails_at("Flag(H, 2)", 1, 6, "Cartan family letter A..G");
  fails_at("Flag(A, 0)", 1, 6, "Cartan rank out of range");
  fails_at("", 1, 1, "expected a space constructor");
}

TEST_CASE("arity is enforced by the grammar") {
  CHECK_THROWS_AS(parse("Product(Gm)"), ParseError);
  CHECK_THROWS_AS(parse("Product(Gm, Gm, Gm)"), ParseError);
  CHECK_THROWS_AS(parse("MayerVietoris(Gm, Gm, Gm, Gm, Gm)"), ParseError);
  CHECK_THROWS_AS(parse("ThomTrivial(Gm, 2)"), ParseError);
  CHECK_THROWS_AS(parse("ClosedOpenPair(Affine(1), Gm, Point)"), ParseError);
  CHECK_THROWS_AS(parse("Stratified[(Gm, 0), (Point)]"), ParseError);
  CHECK_THROWS_AS(parse("Stratified[Gm]"), ParseError);
  CHECK_THROWS_AS(parse("Flag(A)"), ParseError);

  try {
    parse("MayerVietoris(Gm, Gm, Gm, Gm, Gm)");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("needs all six slots") != std::string::npos);
  }
}

TEST_CASE("files parse like strings") {
  namespace fs = std::filesystem;
  fs::path p = fs::temp_directory_path() / "chimot_dsl_test.chi";
  {
    std::ofstream out(p);
    out << "# a torus with its fixed points\n"
        << "TorusFixed(Torus(2), Point)\n";
  }
  CHECK(parse_file(p.string()) == torus_fixed(torus(2), point()));
  fs::remove(p);
  CHECK_THROWS_AS(parse_file((fs::temp_directory_path() / "chimot_no_such.chi").string()),
                  ParseError);
}

TEST_CASE("pointedness is a property of the head constructor") {
  CHECK_FALSE(point().pointed());
  CHECK_FALSE(gm().pointed());
  CHECK_FALSE(flag(A2).pointed());
  CHECK_FALSE(stratified({}).pointed());
  CHECK(tate_twist().pointed());
  CHECK(smash(tate_twist(), tate_twist()).pointed());
  CHECK(pointed_quotient(affine(1), gm(), point(), 1).pointed());
  CHECK(thom_trivial(2, point()).pointed());
  CHECK(mayer_vietoris(gm(), gm(), gm(), point(), point(), point()).pointed());
  CHECK(pushout_cone(gm(), point()).pointed());
}

TEST_CASE("validate flags shape violations with a location") {
  auto complains = [](const SpaceExpr& e, const char* fragment) {
    auto diags = validate(e);
    REQUIRE(!diags.empty());
    bool found = false;
    for (const auto& d : diags)
      if (d.message.find(fragment) != std::string::npos) found = true;
    CHECK_MESSAGE(found, "no diagnostic contains: " << fragment);
  };

  CHECK(validate(product(gm(), projective(4))).empty());
  CHECK(validate(stratified({})).empty());

  complains(smash(gm(), tate_twist()), "Smash requires pointed children");
  complains(product(tate_twist(), point()), "requires unpointed factors");
  complains(disjoint_union(thom_trivial(1, point()), point()), "requires unpointed factors");
  complains(torus(0), "Torus rank must be positive");
  complains(affine(-1), "dimension must be non-negative");
  complains(thom_trivial(-2, point()), "codimension must be non-negative");
  complains(torus_slice(-1, point()), "corank must be non-negative");
  complains(stratified({{gm(), -1}}), "codimension must be non-negative");
  complains(flag({CartanFamily::G, 3}), "invalid Cartan type G,3");
  complains(flag({CartanFamily::E, 7}), "invalid Cartan type E,7");
  complains(g_mod_n({CartanFamily::B, 1}), "invalid Cartan type B,1");

  // Violations are found arbitrarily deep.
  complains(mayer_vietoris(gm(), gm(), product(gm(), torus(0)), point(), point(), point()),
            "Torus rank must be positive");

  // Hand-built nodes with broken child counts are caught too.
  SpaceExpr broken;
  broken.kind = NodeKind::Product;
  broken.children.push_back(gm());
  complains(broken, "Product expects 2 child expressions, found 1");

  SpaceExpr ragged;
  ragged.kind = NodeKind::Stratified;
  ragged.children.push_back(gm());
  complains(ragged, "equal length");

  // The diagnostic's location names the offending head.
  auto diags = validate(torus(0));
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].where == "Torus(0)");
}

namespace {

SpaceExpr gen_expr(std::mt19937& rng, int depth) {
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };
  auto small = [&]() { return static_cast<long long>(pick(5)); };
  auto rand_cartan = [&]() {
    const char fams[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
    return CartanType{static_cast<CartanFamily>(fams[pick(7)]), 1 + pick(9)};
  };

  int leaf_kinds = 9;
  int all_kinds = 19;
  switch (pick(depth <= 0 ? leaf_kinds : all_kinds)) {
    case 0: return point();
    case 1: return affine(small());
    case 2: return gm();
    case 3: return torus(1 + small());
    case 4: return tate_twist();
    case 5: return projective(small());
    case 6: return flag(rand_cartan());
    case 7: return g_mod_t(rand_cartan());
    case 8: return g_mod_n(rand_cartan());
    case 9: return product(gen_expr(rng, depth - 1), gen_expr(rng, depth - 1));
    case 10: return smash(gen_expr(rng, depth - 1), gen_expr(rng, depth - 1));
    case 11: return disjoint_union(gen_expr(rng, depth - 1), gen_expr(rng, depth - 1));
    case 12: {
      std::vector<std::pair<SpaceExpr, long long>> strata;
      int n = pick(4);
      for (int i = 0; i < n; ++i) strata.emplace_back(gen_expr(rng, depth - 1), small());
      return stratified(std::move(strata));
    }
    case 13:
      return closed_open_pair(gen_expr(rng, depth - 1), gen_expr(rng, depth - 1),
                              gen_expr(rng, depth - 1), small());
    case 14:
      return pointed_quotient(gen_expr(rng, depth - 1), gen_expr(rng, depth - 1),
                              gen_expr(rng, depth - 1), small());
    case 15: return thom_trivial(small(), gen_expr(rng, depth - 1));
    case 16: return torus_slice(small(), gen_expr(rng, depth - 1));
    case 17: return pushout_cone(gen_expr(rng, depth - 1), gen_expr(rng, depth - 1));
    default:
      return mayer_vietoris(gen_expr(rng, 0), gen_expr(rng, 0), gen_expr(rng, 0),
                            gen_expr(rng, 0), gen_expr(rng, 0),
                            gen_expr(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("pretty_print round-trips through parse") {
  CHECK(pretty_print(parse("Product( Gm,Gm )")) == "Product(Gm, Gm)");
  CHECK(pretty_print(parse("Stratified[ ( Affine(1),0 ),(Point, 1) ]")) ==
        "Stratified[(Affine(1), 0), (Point, 1)]");
  CHECK(pretty_print(thom_trivial(2, point())) == "ThomTrivial(2, Point)");
  CHECK(pretty_print(closed_open_pair(affine(1), gm(), point(), 1)) ==
        "ClosedOpenPair(Affine(1), Gm, Point, 1)");
  CHECK(pretty_print(flag(A2)) == "Flag(A, 2)");

  std::mt19937 rng(0xD5D5);
  for (int i = 0; i < 400; ++i) {
    SpaceExpr e = gen_expr(rng, 6);
    CAPTURE(pretty_print(e));
    CHECK(parse(pretty_print(e)) == e);
  }
}

TEST_CASE("the parser is total: garbage raises ParseError, nothing else") {
  std::mt19937 rng(0xF022);
  const std::string alphabet = "ABCDEFGHPSTabcdefgmnorstuix0123456789(),[] \n#_";
  int parsed = 0;
  for (int i = 0; i < 3000; ++i) {
    std::string s;
    int len = std::uniform_int_distribution<int>(0, 40)(rng);
    for (int j = 0; j < len; ++j)
      s += alphabet[std::uniform_int_distribution<size_t>(0, alphabet.size() - 1)(rng)];
    try {
      parse(s);
      ++parsed;
    } catch (const ParseError&) {
    }
  }
  CHECK(parsed >= 0);  // reaching here means no foreign exception escaped

  // Mutations of valid prints must also stay within ParseError.
  for (int i = 0; i < 500; ++i) {
    SpaceExpr e = gen_expr(rng, 3);
    std::string s = pretty_print(e);
    if (s.empty()) continue;
    size_t at = std::uniform_int_distribution<size_t>(0, s.size() - 1)(rng);
    switch (std::uniform_int_distribution<int>(0, 2)(rng)) {
      case 0: s.erase(at, 1); break;
      case 1: s.insert(at, 1, alphabet[std::uniform_int_distribution<size_t>(
                                  0, alphabet.size() - 1)(rng)]); break;
      default: s[at] = '?'; break;
    }
    try {
      parse(s);
    } catch (const ParseError&) {
    }
  }
}

TEST_CASE("cartan helpers") {
  CHECK(cartan_to_string({CartanFamily::D, 4}) == "D,4");
  CHECK(cartan_from_string("D,4") == CartanType{CartanFamily::D, 4});
  CHECK(cartan_from_string(" E , 6 ") == CartanType{CartanFamily::E, 6});
  CHECK_FALSE(cartan_from_string("X,4").has_value());
  CHECK_FALSE(cartan_from_string("A").has_value());
  CHECK_FALSE(cartan_from_string("A,").has_value());
  CHECK_FALSE(cartan_from_string("A,0").has_value());

  CHECK(cartan_shape_ok({CartanFamily::A, 1}));
  CHECK(cartan_shape_ok({CartanFamily::D, 3}));
  CHECK_FALSE(cartan_shape_ok({CartanFamily::B, 1}));
  CHECK_FALSE(cartan_shape_ok({CartanFamily::E, 8}));
  CHECK_FALSE(cartan_shape_ok({CartanFamily::G, 1}));

  CHECK(supported_cartan_types().size() == 24);
  for (CartanType ct : supported_cartan_types()) {
    CHECK(cartan_shape_ok(ct));
    CHECK(cartan_supported(ct));
  }
  CHECK_FALSE(cartan_supported({CartanFamily::A, 8}));
  CHECK_FALSE(cartan_supported({CartanFamily::B, 7}));
  CHECK_FALSE(cartan_supported({CartanFamily::D, 7}));
}
