#include "chimot/eval.hpp"

#include "json.hpp"

namespace chimot {

const char* rule_name(RuleId r) {
  switch (r) {
    case RuleId::AtomPoint: return "atom.point";
    case RuleId::AtomAffine: return "atom.affine";
    case RuleId::AtomGm: return "atom.gm";
    case RuleId::AtomTorus: return "atom.torus";
    case RuleId::AtomTate: return "atom.tate-twist";
    case RuleId::ProjectiveCells: return "projective.cells";
    case RuleId::ProductMult: return "product.mult";
    case RuleId::SmashMult: return "smash.mult";
    case RuleId::DisjointAdd: return "disjoint-union.add";
    case RuleId::StratifiedAdd: return "stratified.add";
    case RuleId::ClosedOpenAdd: return "closed-open.add";
    case RuleId::QuotientThom: return "quotient.thom";
    case RuleId::ThomTwist: return "thom.twist";
    case RuleId::MayerVietorisAdd: return "mayer-vietoris.add";
    case RuleId::PushoutConeDiff: return "pushout.cone";
    case RuleId::TorusSliceMult: return "torus-slice.mult";
    case RuleId::TorusFixedLocus: return "torus.fixed-locus";
    case RuleId::FlagBruhat: return "flag.bruhat";
    case RuleId::GModTAffineBundle: return "gmodt.affine-bundle";
    case RuleId::GModNFixedPoint: return "gmodn.fixed-point";
    case RuleId::AssumeConnectedReduction: return "assume.connected-reduction";
    case RuleId::AssumeUnipotentQuotient: return "assume.unipotent-quotient";
  }
  return "?";
}

const char* rule_citation(RuleId r) {
  switch (r) {
    case RuleId::AtomPoint: return "Thm 3.2 proof (A^1-contractibility)";
    case RuleId::AtomAffine: return "Thm 3.2 proof (A^1-contractibility)";
    case RuleId::AtomGm: return "Thm 3.2(i)";
    case RuleId::AtomTorus: return "Thm 3.2(i)";
    case RuleId::AtomTate: return "Thm 2.8(ii) proof (class of the Tate object)";
    case RuleId::ProjectiveCells: return "Thm 2.8(iii) (cell stratification)";
    case RuleId::ProductMult: return "Prop 2.7";
    case RuleId::SmashMult: return "Prop 2.7";
    case RuleId::DisjointAdd: return "Thm 2.5(i)";
    case RuleId::StratifiedAdd: return "Thm 2.8(iii)";
    case RuleId::ClosedOpenAdd: return "Thm 2.8(ii)";
    case RuleId::QuotientThom: return "Thm 2.8(ii)";
    case RuleId::ThomTwist: return "Thm 2.8(ii)";
    case RuleId::MayerVietorisAdd: return "Thm 2.8(i)";
    case RuleId::PushoutConeDiff: return "Thm 2.5(ii)";
    case RuleId::TorusSliceMult: return "Prop 3.1; Thm 3.2(i)";
    case RuleId::TorusFixedLocus: return "Thm 3.2(ii)";
    case RuleId::FlagBruhat: return "Thm 2.8(iii) (Bruhat cells)";
    case RuleId::GModTAffineBundle: return "Thm 2.8(iii) (Bruhat cells; T -> B affine bundle)";
    case RuleId::GModNFixedPoint: return "Thm 1.3";
    case RuleId::AssumeConnectedReduction: return "Thm 1.3 proof (reduction to connected G)";
    case RuleId::AssumeUnipotentQuotient: return "Thm 1.3 proof (unipotent radical quotient)";
  }
  return "?";
}

namespace {

// (1 - <-1>)^n; the power collapses to 0 quickly outside generic models.
GwElement hyper_diff_pow(long long n, const FieldModel& m) {
  GwElement base = gw_make(1, -1, m);
  GwElement acc = gw_one(m);
  for (long long i = 0; i < n; ++i) {
    acc = gw_mul(acc, base, m);
    if (acc == gw_zero()) break;
  }
  return acc;
}

Derivation make_node(RuleId rule, const SpaceExpr& e, GwValue v,
                     std::vector<Derivation> children = {}) {
  Derivation d;
  d.rule = rule;
  d.citation = rule_citation(rule);
  d.expr = e;
  d.value = std::move(v);
  d.children = std::move(children);
  return d;
}

Derivation eval_node(const SpaceExpr& e, const FieldModel& m);

Derivation eval_gmodn(const SpaceExpr& e, const FieldModel& m) {
  // chi_g_mod_normalizer performs the cap check and warms the Weyl cache.
  GwValue v = chi_g_mod_normalizer(e.cartan, m);

  Derivation pt = make_node(RuleId::AtomPoint, point(), exact_value(gw_one(m), m));
  Derivation fixed = make_node(RuleId::TorusFixedLocus, torus_fixed(e, point()), v);
  fixed.children.push_back(std::move(pt));
  Derivation unip = make_node(RuleId::AssumeUnipotentQuotient, e, v);
  unip.children.push_back(std::move(fixed));
  Derivation conn = make_node(RuleId::AssumeConnectedReduction, e, v);
  conn.children.push_back(std::move(unip));
  Derivation root = make_node(RuleId::GModNFixedPoint, e, v);
  if (v.exactness == Exactness::ModuloFundamentalIdeal) root.citation += "; Cor 1.4";
  root.children.push_back(std::move(conn));
  return root;
}

Derivation eval_node(const SpaceExpr& e, const FieldModel& m) {
  switch (e.kind) {
    case NodeKind::Point:
      return make_node(RuleId::AtomPoint, e, exact_value(gw_one(m), m));
    case NodeKind::Affine:
      return make_node(RuleId::AtomAffine, e, exact_value(gw_one(m), m));
    case NodeKind::Gm:
      return make_node(RuleId::AtomGm, e, exact_value(gw_make(1, -1, m), m));
    case NodeKind::Torus:
      return make_node(RuleId::AtomTorus, e, exact_value(hyper_diff_pow(e.dim, m), m));
    case NodeKind::TateTwist:
      return make_node(RuleId::AtomTate, e, exact_value(gw_make(0, 1, m), m));

    case NodeKind::Projective: {
      std::vector<std::pair<SpaceExpr, long long>> cells;
      for (long long i = 0; i <= e.dim; ++i) cells.emplace_back(affine(i), e.dim - i);
      Derivation inner = eval_node(stratified(std::move(cells)), m);
      GwValue v = inner.value;
      Derivation d = make_node(RuleId::ProjectiveCells, e, std::move(v));
      d.children.push_back(std::move(inner));
      return d;
    }

    case NodeKind::Product:
    case NodeKind::Smash: {
      Derivation a = eval_node(e.children[0], m);
      Derivation b = eval_node(e.children[1], m);
      GwValue v = value_mul(a.value, b.value, m);
      RuleId rule = e.kind == NodeKind::Product ? RuleId::ProductMult : RuleId::SmashMult;
      Derivation d = make_node(rule, e, std::move(v));
      d.children.push_back(std::move(a));
      d.children.push_back(std::move(b));
      return d;
    }

    case NodeKind::DisjointUnion: {
      Derivation a = eval_node(e.children[0], m);
      Derivation b = eval_node(e.children[1], m);
      GwValue v = value_add(a.value, b.value, m);
      Derivation d = make_node(RuleId::DisjointAdd, e, std::move(v));
      d.children.push_back(std::move(a));
      d.children.push_back(std::move(b));
      return d;
    }

    case NodeKind::Stratified: {
      GwValue acc = exact_value(gw_zero(), m);
      std::vector<Derivation> kids;
      kids.reserve(e.children.size());
      for (size_t i = 0; i < e.children.size(); ++i) {
        Derivation k = eval_node(e.children[i], m);
        acc = value_add(acc,
                        value_twist(static_cast<unsigned long long>(e.strata_codims[i]),
                                    k.value, m),
                        m);
        kids.push_back(std::move(k));
      }
      return make_node(RuleId::StratifiedAdd, e, std::move(acc), std::move(kids));
    }

    case NodeKind::ClosedOpenPair: {
      // chi(X) = chi(U) + <-1>^c chi(Z); the X slot is the trusted subject.
      Derivation u = eval_node(e.children[1], m);
      Derivation z = eval_node(e.children[2], m);
      GwValue v = value_add(
          u.value, value_twist(static_cast<unsigned long long>(e.dim), z.value, m), m);
      Derivation d = make_node(RuleId::ClosedOpenAdd, e, std::move(v));
      d.children.push_back(std::move(u));
      d.children.push_back(std::move(z));
      return d;
    }

    case NodeKind::PointedQuotient: {
      // chi(X/U) = <-1>^c chi(Z): the quotient is the Thom space of the
      // trivialized normal bundle of Z.
      Derivation z = eval_node(e.children[2], m);
      GwValue v = value_twist(static_cast<unsigned long long>(e.dim), z.value, m);
      Derivation d = make_node(RuleId::QuotientThom, e, std::move(v));
      d.children.push_back(std::move(z));
      return d;
    }

    case NodeKind::ThomTrivial: {
      Derivation z = eval_node(e.children[0], m);
      GwValue v = value_twist(static_cast<unsigned long long>(e.dim), z.value, m);
      Derivation d = make_node(RuleId::ThomTwist, e, std::move(v));
      d.children.push_back(std::move(z));
      return d;
    }

    case NodeKind::MayerVietoris: {
      std::vector<Derivation> kids;
      kids.reserve(6);
      for (const auto& c : e.children) kids.push_back(eval_node(c, m));
      // chi(X/U) = chi(X1/U1) + chi(X2/U2) - chi(X12/U12), each quotient
      // taken as chi(Xi) - chi(Ui).
      GwValue q1 = value_sub(kids[0].value, kids[3].value, m);
      GwValue q2 = value_sub(kids[1].value, kids[4].value, m);
      GwValue q12 = value_sub(kids[2].value, kids[5].value, m);
      GwValue v = value_sub(value_add(q1, q2, m), q12, m);
      return make_node(RuleId::MayerVietorisAdd, e, std::move(v), std::move(kids));
    }

    case NodeKind::PushoutCone: {
      Derivation f1 = eval_node(e.children[0], m);
      Derivation f3 = eval_node(e.children[1], m);
      GwValue v = value_sub(f1.value, f3.value, m);
      Derivation d = make_node(RuleId::PushoutConeDiff, e, std::move(v));
      d.children.push_back(std::move(f1));
      d.children.push_back(std::move(f3));
      return d;
    }

    case NodeKind::TorusSlice: {
      Derivation y = eval_node(e.children[0], m);
      GwValue orbit = exact_value(hyper_diff_pow(e.dim, m), m);
      GwValue v = value_mul(orbit, y.value, m);
      Derivation d = make_node(RuleId::TorusSliceMult, e, std::move(v));
      d.children.push_back(std::move(y));
      return d;
    }

    case NodeKind::TorusFixed: {
      // Exact when sqrt(-1) exists; otherwise chi(X) is only pinned modulo
      // the fundamental ideal by chi(X^T).  The X slot is not evaluated.
      Derivation f = eval_node(e.children[1], m);
      GwValue v = value_downgrade(f.value, m);
      Derivation d = make_node(RuleId::TorusFixedLocus, e, std::move(v));
      d.children.push_back(std::move(f));
      return d;
    }

    case NodeKind::Flag:
      return make_node(RuleId::FlagBruhat, e, chi_flag(e.cartan, m));

    case NodeKind::GModT: {
      Derivation inner = make_node(RuleId::FlagBruhat, flag(e.cartan), chi_flag(e.cartan, m));
      GwValue v = chi_g_mod_t(e.cartan, m);
      Derivation d = make_node(RuleId::GModTAffineBundle, e, std::move(v));
      d.children.push_back(std::move(inner));
      return d;
    }

    case NodeKind::GModN:
      return eval_gmodn(e, m);
  }
  throw std::logic_error("corrupt node kind in evaluator");
}

}  // namespace

EvalResult eval_chi(const SpaceExpr& e, const FieldModel& m) {
  std::vector<Diagnostic> problems = validate(e);
  if (!problems.empty()) {
    std::string msg = "expression failed validation:";
    for (const auto& p : problems) msg += "\n  " + p.message + " [in " + p.where + "]";
    throw EvalError(msg);
  }
  Derivation d = eval_node(e, m);
  return {d.value, std::move(d)};
}

namespace {

[[noreturn]] void replay_fault(const Derivation& d, const char* why) {
  throw std::logic_error(std::string("derivation replay: ") + why + " at rule " +
                         rule_name(d.rule));
}

void need_children(const Derivation& d, size_t n) {
  if (d.children.size() != n) replay_fault(d, "wrong child count");
}

}  // namespace

GwValue replay(const Derivation& d, const FieldModel& m) {
  auto child = [&](size_t i) { return replay(d.children[i], m); };

  switch (d.rule) {
    case RuleId::AtomPoint:
    case RuleId::AtomAffine:
      need_children(d, 0);
      return exact_value(gw_one(m), m);
    case RuleId::AtomGm:
      need_children(d, 0);
      return exact_value(gw_make(1, -1, m), m);
    case RuleId::AtomTorus:
      need_children(d, 0);
      return exact_value(hyper_diff_pow(d.expr.dim, m), m);
    case RuleId::AtomTate:
      need_children(d, 0);
      return exact_value(gw_make(0, 1, m), m);

    case RuleId::ProjectiveCells:
    case RuleId::GModTAffineBundle:
    case RuleId::GModNFixedPoint:
    case RuleId::AssumeConnectedReduction:
    case RuleId::AssumeUnipotentQuotient:
      need_children(d, 1);
      return child(0);

    case RuleId::ProductMult:
    case RuleId::SmashMult:
      need_children(d, 2);
      return value_mul(child(0), child(1), m);

    case RuleId::DisjointAdd:
      need_children(d, 2);
      return value_add(child(0), child(1), m);

    case RuleId::StratifiedAdd: {
      need_children(d, d.expr.strata_codims.size());
      GwValue acc = exact_value(gw_zero(), m);
      for (size_t i = 0; i < d.children.size(); ++i)
        acc = value_add(
            acc,
            value_twist(static_cast<unsigned long long>(d.expr.strata_codims[i]), child(i), m),
            m);
      return acc;
    }

    case RuleId::ClosedOpenAdd:
      need_children(d, 2);
      return value_add(child(0),
                       value_twist(static_cast<unsigned long long>(d.expr.dim), child(1), m),
                       m);

    case RuleId::QuotientThom:
    case RuleId::ThomTwist:
      need_children(d, 1);
      return value_twist(static_cast<unsigned long long>(d.expr.dim), child(0), m);

    case RuleId::MayerVietorisAdd: {
      need_children(d, 6);
      GwValue q1 = value_sub(child(0), child(3), m);
      GwValue q2 = value_sub(child(1), child(4), m);
      GwValue q12 = value_sub(child(2), child(5), m);
      return value_sub(value_add(q1, q2, m), q12, m);
    }

    case RuleId::PushoutConeDiff:
      need_children(d, 2);
      return value_sub(child(0), child(1), m);

    case RuleId::TorusSliceMult:
      need_children(d, 1);
      return value_mul(exact_value(hyper_diff_pow(d.expr.dim, m), m), child(0), m);

    case RuleId::TorusFixedLocus:
      need_children(d, 1);
      return value_downgrade(child(0), m);

    case RuleId::FlagBruhat:
      need_children(d, 0);
      return chi_flag(d.expr.cartan, m);
  }
  replay_fault(d, "unknown rule");
}

namespace {

nlohmann::ordered_json coeff_json(Coefficient c) {
  return nlohmann::ordered_json{{"num", c.num}, {"p_exp", c.p_exp}};
}

nlohmann::ordered_json value_json(const GwValue& v, const FieldModel& m) {
  nlohmann::ordered_json j;
  j["unit"] = coeff_json(v.representative.unit);
  j["twist"] = coeff_json(v.representative.twist);
  j["model"] = m.name();
  j["exactness"] = exactness_name(v.exactness);
  if (v.exactness == Exactness::ModuloFundamentalIdeal) j["unit_known"] = v.unit_known;
  return j;
}

nlohmann::ordered_json derivation_json(const Derivation& d, const FieldModel& m) {
  nlohmann::ordered_json j;
  j["rule"] = rule_name(d.rule);
  j["citation"] = d.citation;
  j["expr"] = pretty_print(d.expr);
  j["value"] = value_json(d.value, m);
  j["children"] = nlohmann::ordered_json::array();
  for (const auto& c : d.children) j["children"].push_back(derivation_json(c, m));
  return j;
}

}  // namespace

std::string value_to_json(const GwValue& v, const FieldModel& m) {
  return value_json(v, m).dump();
}

std::string derivation_to_json(const Derivation& d, const FieldModel& m) {
  return derivation_json(d, m).dump(2);
}

}  // namespace chimot
