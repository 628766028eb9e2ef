#pragma once

#include <string>
#include <utility>
#include <vector>

#include "chimot/cartan.hpp"

// Combinatorial descriptions of motivic spaces.  A node either names a space
// directly (Point, Affine, Gm, ...) or packages a decomposition assertion
// (stratification, closed/open pair, Mayer-Vietoris cover, torus fixed
// locus) that the evaluator is entitled to use.  Assertion slots are trusted
// after shape validation; their geometric truth is the caller's burden.

namespace chimot {

enum class NodeKind {
  Point,           // Spec(k)
  Affine,          // A^n, n >= 0
  Gm,              // multiplicative group
  Torus,           // split torus G_m^n, n >= 1
  TateTwist,       // pointed Tate object T = A^1/G_m
  Projective,      // P^n, n >= 0
  Product,         // X x Y, unpointed factors
  Smash,           // P ^ Q, pointed factors
  DisjointUnion,   // X u Y, unpointed
  Stratified,      // finite stratification [(S_a, codim c_a)...], unpointed strata
  ClosedOpenPair,  // (X, U, Z, c): Z closed in X, codim c, trivial normal bundle, U = X - Z
  PointedQuotient, // (X, U, Z, c): the quotient X/U as a Thom space of Z
  ThomTrivial,     // (c, Z): Thom space of the trivial rank-c bundle on Z
  MayerVietoris,   // (X1, X2, X12, U1, U2, U12): value of (X1 u X2)/(U1 u U2)
  PushoutCone,     // (F1, F3): cone of F3 -> F1
  TorusFixed,      // (X, X^T): torus action with fixed locus X^T
  TorusSlice,      // (corank r, Y): stratum of shape (T/Gamma) x Y, dim Gamma-orbit r
  Flag,            // G/B for the simple type ct
  GModT,           // G/T
  GModN            // G/N_G(T)
};

const char* node_kind_name(NodeKind k);

struct SpaceExpr {
  NodeKind kind = NodeKind::Point;
  // Affine/Torus/Projective dimension; ThomTrivial / ClosedOpenPair /
  // PointedQuotient codimension; TorusSlice corank.  Unused otherwise.
  long long dim = 0;
  CartanType cartan{CartanFamily::A, 1};  // Flag / GModT / GModN only
  std::vector<SpaceExpr> children;
  std::vector<long long> strata_codims;  // Stratified only, parallel to children

  // Pointedness is a fixed property of the node kind.
  bool pointed() const;

  friend bool operator==(const SpaceExpr&, const SpaceExpr&) = default;
};

// Construction helpers; these fill slots but do not validate.
SpaceExpr point();
SpaceExpr affine(long long n);
SpaceExpr gm();
SpaceExpr torus(long long n);
SpaceExpr tate_twist();
SpaceExpr projective(long long n);
SpaceExpr product(SpaceExpr x, SpaceExpr y);
SpaceExpr smash(SpaceExpr p, SpaceExpr q);
SpaceExpr disjoint_union(SpaceExpr x, SpaceExpr y);
SpaceExpr stratified(std::vector<std::pair<SpaceExpr, long long>> strata);
SpaceExpr closed_open_pair(SpaceExpr x, SpaceExpr u, SpaceExpr z, long long c);
SpaceExpr pointed_quotient(SpaceExpr x, SpaceExpr u, SpaceExpr z, long long c);
SpaceExpr thom_trivial(long long c, SpaceExpr z);
SpaceExpr mayer_vietoris(SpaceExpr x1, SpaceExpr x2, SpaceExpr x12, SpaceExpr u1, SpaceExpr u2,
                         SpaceExpr u12);
SpaceExpr pushout_cone(SpaceExpr f1, SpaceExpr f3);
SpaceExpr torus_fixed(SpaceExpr x, SpaceExpr xfixed);
SpaceExpr torus_slice(long long corank, SpaceExpr y);
SpaceExpr flag(CartanType ct);
SpaceExpr g_mod_t(CartanType ct);
SpaceExpr g_mod_n(CartanType ct);

struct Diagnostic {
  std::string message;
  std::string where;  // pretty-printed head of the offending subexpression

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

// Shape checks: pointedness of children per node kind, dimension signs and
// bounds, Cartan shape constraints.  Empty result means well-formed.
std::vector<Diagnostic> validate(const SpaceExpr& e);

// Canonical text form; parse(pretty_print(e)) == e for well-formed e.
std::string pretty_print(const SpaceExpr& e);

}  // namespace chimot
