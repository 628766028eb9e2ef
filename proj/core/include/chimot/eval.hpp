#pragma once

#include <string>
#include <vector>

#include "chimot/expr.hpp"
#include "chimot/gw.hpp"
#include "chimot/roots.hpp"

// Syntax-directed evaluator: one rewrite rule per node kind, producing the
// motivic Euler characteristic as a GwValue together with a derivation tree
// recording which rule fired where, the theorem tag it instantiates, and
// every intermediate value.  Derivations replay: recomputing every node
// bottom-up through the GW arithmetic reproduces the recorded values.

namespace chimot {

enum class RuleId {
  AtomPoint,
  AtomAffine,
  AtomGm,
  AtomTorus,
  AtomTate,
  ProjectiveCells,
  ProductMult,
  SmashMult,
  DisjointAdd,
  StratifiedAdd,
  ClosedOpenAdd,
  QuotientThom,
  ThomTwist,
  MayerVietorisAdd,
  PushoutConeDiff,
  TorusSliceMult,
  TorusFixedLocus,
  FlagBruhat,
  GModTAffineBundle,
  GModNFixedPoint,
  AssumeConnectedReduction,
  AssumeUnipotentQuotient,
};

const char* rule_name(RuleId r);      // "stratified.add", ...
const char* rule_citation(RuleId r);  // theorem tag, e.g. "Thm 2.8(iii)"

struct Derivation {
  RuleId rule = RuleId::AtomPoint;
  std::string citation;
  SpaceExpr expr;
  GwValue value;
  std::vector<Derivation> children;
};

struct EvalResult {
  GwValue value;
  Derivation derivation;
};

// Validates, then evaluates.  Throws EvalError on validation failure or
// unsupported Cartan types; coefficient overflow in the GW arithmetic
// escapes as std::overflow_error.
EvalResult eval_chi(const SpaceExpr& e, const FieldModel& m);

// Recomputes the tree bottom-up from leaf rules and each node's rule
// arithmetic; returns the recomputed root value.  Structural damage
// (wrong child counts for a rule) raises std::logic_error.
GwValue replay(const Derivation& d, const FieldModel& m);

// {"rule": .., "citation": .., "expr": .., "value": {..}, "children": [..]}
// with exactly this field order at every level.
std::string derivation_to_json(const Derivation& d, const FieldModel& m);

// Value rendering shared by the derivation export and the CLI:
// {"unit": {..}, "twist": {..}, "model": .., "exactness": ..} plus
// "unit_known" when the value is a congruence class.
std::string value_to_json(const GwValue& v, const FieldModel& m);

}  // namespace chimot
