#include "chimot/expr.hpp"

namespace chimot {

const char* node_kind_name(NodeKind k) {
  switch (k) {
    case NodeKind::Point: return "Point";
    case NodeKind::Affine: return "Affine";
    case NodeKind::Gm: return "Gm";
    case NodeKind::Torus: return "Torus";
    case NodeKind::TateTwist: return "TateTwist";
    case NodeKind::Projective: return "Projective";
    case NodeKind::Product: return "Product";
    case NodeKind::Smash: return "Smash";
    case NodeKind::DisjointUnion: return "DisjointUnion";
    case NodeKind::Stratified: return "Stratified";
    case NodeKind::ClosedOpenPair: return "ClosedOpenPair";
    case NodeKind::PointedQuotient: return "PointedQuotient";
    case NodeKind::ThomTrivial: return "ThomTrivial";
    case NodeKind::MayerVietoris: return "MayerVietoris";
    case NodeKind::PushoutCone: return "PushoutCone";
    case NodeKind::TorusFixed: return "TorusFixed";
    case NodeKind::TorusSlice: return "TorusSlice";
    case NodeKind::Flag: return "Flag";
    case NodeKind::GModT: return "GModT";
    case NodeKind::GModN: return "GModN";
  }
  return "?";
}

bool SpaceExpr::pointed() const {
  switch (kind) {
    case NodeKind::TateTwist:
    case NodeKind::Smash:
    case NodeKind::PointedQuotient:
    case NodeKind::ThomTrivial:
    case NodeKind::MayerVietoris:
    case NodeKind::PushoutCone:
      return true;
    default:
      return false;
  }
}

namespace {

SpaceExpr node(NodeKind k) {
  SpaceExpr e;
  e.kind = k;
  return e;
}

SpaceExpr node(NodeKind k, std::vector<SpaceExpr> children) {
  SpaceExpr e;
  e.kind = k;
  e.children = std::move(children);
  return e;
}

}  // namespace

SpaceExpr point() { return node(NodeKind::Point); }

SpaceExpr affine(long long n) {
  SpaceExpr e = node(NodeKind::Affine);
  e.dim = n;
  return e;
}

SpaceExpr gm() { return node(NodeKind::Gm); }

SpaceExpr torus(long long n) {
  SpaceExpr e = node(NodeKind::Torus);
  e.dim = n;
  return e;
}

SpaceExpr tate_twist() { return node(NodeKind::TateTwist); }

SpaceExpr projective(long long n) {
  SpaceExpr e = node(NodeKind::Projective);
  e.dim = n;
  return e;
}

SpaceExpr product(SpaceExpr x, SpaceExpr y) {
  return node(NodeKind::Product, {std::move(x), std::move(y)});
}

SpaceExpr smash(SpaceExpr p, SpaceExpr q) {
  return node(NodeKind::Smash, {std::move(p), std::move(q)});
}

SpaceExpr disjoint_union(SpaceExpr x, SpaceExpr y) {
  return node(NodeKind::DisjointUnion, {std::move(x), std::move(y)});
}

SpaceExpr stratified(std::vector<std::pair<SpaceExpr, long long>> strata) {
  SpaceExpr e = node(NodeKind::Stratified);
  for (auto& [s, c] : strata) {
    e.children.push_back(std::move(s));
    e.strata_codims.push_back(c);
  }
  return e;
}

SpaceExpr closed_open_pair(SpaceExpr x, SpaceExpr u, SpaceExpr z, long long c) {
  SpaceExpr e = node(NodeKind::ClosedOpenPair, {std::move(x), std::move(u), std::move(z)});
  e.dim = c;
  return e;
}

SpaceExpr pointed_quotient(SpaceExpr x, SpaceExpr u, SpaceExpr z, long long c) {
  SpaceExpr e = node(NodeKind::PointedQuotient, {std::move(x), std::move(u), std::move(z)});
  e.dim = c;
  return e;
}

SpaceExpr thom_trivial(long long c, SpaceExpr z) {
  SpaceExpr e = node(NodeKind::ThomTrivial, {std::move(z)});
  e.dim = c;
  return e;
}

SpaceExpr mayer_vietoris(SpaceExpr x1, SpaceExpr x2, SpaceExpr x12, SpaceExpr u1, SpaceExpr u2,
                         SpaceExpr u12) {
  return node(NodeKind::MayerVietoris, {std::move(x1), std::move(x2), std::move(x12),
                                        std::move(u1), std::move(u2), std::move(u12)});
}

SpaceExpr pushout_cone(SpaceExpr f1, SpaceExpr f3) {
  return node(NodeKind::PushoutCone, {std::move(f1), std::move(f3)});
}

SpaceExpr torus_fixed(SpaceExpr x, SpaceExpr xfixed) {
  return node(NodeKind::TorusFixed, {std::move(x), std::move(xfixed)});
}

SpaceExpr torus_slice(long long corank, SpaceExpr y) {
  SpaceExpr e = node(NodeKind::TorusSlice, {std::move(y)});
  e.dim = corank;
  return e;
}

SpaceExpr flag(CartanType ct) {
  SpaceExpr e = node(NodeKind::Flag);
  e.cartan = ct;
  return e;
}

SpaceExpr g_mod_t(CartanType ct) {
  SpaceExpr e = node(NodeKind::GModT);
  e.cartan = ct;
  return e;
}

SpaceExpr g_mod_n(CartanType ct) {
  SpaceExpr e = node(NodeKind::GModN);
  e.cartan = ct;
  return e;
}

namespace {

std::string head_of(const SpaceExpr& e) {
  std::string s = pretty_print(e);
  if (s.size() > 60) s = s.substr(0, 57) + "...";
  return s;
}

void check(const SpaceExpr& e, std::vector<Diagnostic>& out) {
  auto complain = [&](std::string msg) { out.push_back({std::move(msg), head_of(e)}); };

  auto expect_children = [&](size_t n) {
    if (e.children.size() != n)
      complain(std::string(node_kind_name(e.kind)) + " expects " + std::to_string(n) +
               " child expressions, found " + std::to_string(e.children.size()));
  };
  auto expect_unpointed_children = [&](const char* role) {
    for (const auto& c : e.children)
      if (c.pointed())
        complain(std::string(node_kind_name(e.kind)) + " requires unpointed " + role +
                 ", found pointed " + node_kind_name(c.kind));
  };

  switch (e.kind) {
    case NodeKind::Point:
    case NodeKind::Gm:
    case NodeKind::TateTwist:
      expect_children(0);
      break;
    case NodeKind::Affine:
    case NodeKind::Projective:
      expect_children(0);
      if (e.dim < 0) complain("dimension must be non-negative");
      break;
    case NodeKind::Torus:
      expect_children(0);
      if (e.dim < 1) complain("Torus rank must be positive");
      break;
    case NodeKind::Product:
    case NodeKind::DisjointUnion:
      expect_children(2);
      expect_unpointed_children("factors");
      break;
    case NodeKind::Smash:
      expect_children(2);
      for (const auto& c : e.children)
        if (!c.pointed()) complain("Smash requires pointed children");
      break;
    case NodeKind::Stratified:
      if (e.children.size() != e.strata_codims.size())
        complain("Stratified strata and codimension lists must have equal length");
      expect_unpointed_children("strata");
      for (long long c : e.strata_codims)
        if (c < 0) complain("stratum codimension must be non-negative");
      break;
    case NodeKind::ClosedOpenPair:
    case NodeKind::PointedQuotient:
      expect_children(3);
      expect_unpointed_children("spaces");
      if (e.dim < 0) complain("codimension must be non-negative");
      break;
    case NodeKind::ThomTrivial:
      expect_children(1);
      expect_unpointed_children("base");
      if (e.dim < 0) complain("codimension must be non-negative");
      break;
    case NodeKind::MayerVietoris:
      expect_children(6);
      expect_unpointed_children("cover pieces");
      break;
    case NodeKind::PushoutCone:
      expect_children(2);
      expect_unpointed_children("legs");
      break;
    case NodeKind::TorusFixed:
      expect_children(2);
      expect_unpointed_children("spaces");
      break;
    case NodeKind::TorusSlice:
      expect_children(1);
      expect_unpointed_children("slice");
      if (e.dim < 0) complain("corank must be non-negative");
      break;
    case NodeKind::Flag:
    case NodeKind::GModT:
    case NodeKind::GModN:
      expect_children(0);
      if (!cartan_shape_ok(e.cartan))
        complain("invalid Cartan type " + cartan_to_string(e.cartan));
      break;
  }
  for (const auto& c : e.children) check(c, out);
}

}  // namespace

std::vector<Diagnostic> validate(const SpaceExpr& e) {
  std::vector<Diagnostic> out;
  check(e, out);
  return out;
}

namespace {

void print(const SpaceExpr& e, std::string& out) {
  out += node_kind_name(e.kind);
  switch (e.kind) {
    case NodeKind::Point:
    case NodeKind::Gm:
    case NodeKind::TateTwist:
      return;
    case NodeKind::Affine:
    case NodeKind::Torus:
    case NodeKind::Projective:
      out += "(" + std::to_string(e.dim) + ")";
      return;
    case NodeKind::Flag:
    case NodeKind::GModT:
    case NodeKind::GModN:
      out += "(";
      out += static_cast<char>(e.cartan.family);
      out += ", " + std::to_string(e.cartan.rank) + ")";
      return;
    case NodeKind::Stratified: {
      out += "[";
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ", ";
        out += "(";
        print(e.children[i], out);
        long long c = i < e.strata_codims.size() ? e.strata_codims[i] : 0;
        out += ", " + std::to_string(c) + ")";
      }
      out += "]";
      return;
    }
    case NodeKind::ThomTrivial:
    case NodeKind::TorusSlice: {
      out += "(" + std::to_string(e.dim);
      for (const auto& c : e.children) {
        out += ", ";
        print(c, out);
      }
      out += ")";
      return;
    }
    case NodeKind::ClosedOpenPair:
    case NodeKind::PointedQuotient: {
      out += "(";
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ", ";
        print(e.children[i], out);
      }
      out += ", " + std::to_string(e.dim) + ")";
      return;
    }
    default: {
      out += "(";
      for (size_t i = 0; i < e.children.size(); ++i) {
        if (i) out += ", ";
        print(e.children[i], out);
      }
      out += ")";
      return;
    }
  }
}

}  // namespace

std::string pretty_print(const SpaceExpr& e) {
  std::string out;
  print(e, out);
  return out;
}

}  // namespace chimot
