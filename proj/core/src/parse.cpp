#include "chimot/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace chimot {

namespace {

enum class Tok { Ident, Int, LParen, RParen, LBracket, RBracket, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

private:
  void advance() {
    skip_trivia();
    current_.line = line_;
    current_.column = column_;
    if (pos_ >= text_.size()) {
      current_.kind = Tok::End;
      current_.text = "end of input";
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '(': single(Tok::LParen, c); return;
      case ')': single(Tok::RParen, c); return;
      case '[': single(Tok::LBracket, c); return;
      case ']': single(Tok::RBracket, c); return;
      case ',': single(Tok::Comma, c); return;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      long long v = 0;
      std::string s;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_] - '0');
        if (v > 1000000000000LL)
          throw ParseError("integer literal too large", line_, current_.column);
        s += text_[pos_];
        bump();
      }
      current_.kind = Tok::Int;
      current_.text = std::move(s);
      current_.value = v;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string s;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        s += text_[pos_];
        bump();
      }
      current_.kind = Tok::Ident;
      current_.text = std::move(s);
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
  }

  void single(Tok k, char c) {
    current_.kind = k;
    current_.text = std::string(1, c);
    bump();
  }

  void skip_trivia() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        bump();
      } else {
        break;
      }
    }
  }

  void bump() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
  Token current_;
};

class Parser {
public:
  explicit Parser(std::string_view text) : lex_(text) {}

  SpaceExpr run() {
    SpaceExpr e = expr();
    const Token& t = lex_.peek();
    if (t.kind != Tok::End)
      throw ParseError("trailing input after expression: '" + t.text + "'", t.line, t.column);
    return e;
  }

private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) {
    throw ParseError(msg, t.line, t.column);
  }

  Token expect(Tok k, const char* what) {
    Token t = lex_.take();
    if (t.kind != k) fail(t, std::string("expected ") + what + ", found '" + t.text + "'");
    return t;
  }

  long long integer_arg(const char* role) {
    Token t = lex_.take();
    if (t.kind != Tok::Int)
      fail(t, std::string("expected ") + role + " (a non-negative integer), found '" + t.text +
                  "'");
    return t.value;
  }

  CartanType cartan_args(const std::string& ctor) {
    Token fam = lex_.take();
    if (fam.kind != Tok::Ident || fam.text.size() != 1 || fam.text[0] < 'A' ||
        fam.text[0] > 'G')
      fail(fam, ctor + " expects a Cartan family letter A..G, found '" + fam.text + "'");
    expect(Tok::Comma, "','");
    long long rank = integer_arg("Cartan rank");
    if (rank < 1 || rank > 1000) fail(fam, "Cartan rank out of range");
    return CartanType{static_cast<CartanFamily>(fam.text[0]), static_cast<int>(rank)};
  }

  SpaceExpr expr() {
    Token head = lex_.take();
    if (head.kind != Tok::Ident)
      fail(head, "expected a space constructor, found '" + head.text + "'");
    const std::string& name = head.text;

    if (name == "Stratified") return stratified_body(head);

    if (name == "Point") return atom(head, point());
    if (name == "Gm") return atom(head, gm());
    if (name == "TateTwist") return atom(head, tate_twist());

    if (name == "Affine") return dim_ctor(NodeKind::Affine);
    if (name == "Torus") return dim_ctor(NodeKind::Torus);
    if (name == "Projective") return dim_ctor(NodeKind::Projective);

    if (name == "Product") return pair_ctor(head, NodeKind::Product);
    if (name == "Smash") return pair_ctor(head, NodeKind::Smash);
    if (name == "DisjointUnion") return pair_ctor(head, NodeKind::DisjointUnion);
    if (name == "PushoutCone") return pair_ctor(head, NodeKind::PushoutCone);
    if (name == "TorusFixed") return pair_ctor(head, NodeKind::TorusFixed);

    if (name == "ThomTrivial" || name == "TorusSlice") {
      expect(Tok::LParen, "'('");
      long long c = integer_arg(name == "ThomTrivial" ? "codimension" : "corank");
      expect(Tok::Comma, "','");
      SpaceExpr inner = expr();
      expect(Tok::RParen, "')'");
      return name == "ThomTrivial" ? thom_trivial(c, std::move(inner))
                                   : torus_slice(c, std::move(inner));
    }

    if (name == "ClosedOpenPair" || name == "PointedQuotient") {
      expect(Tok::LParen, "'('");
      SpaceExpr x = expr();
      expect(Tok::Comma, "','");
      SpaceExpr u = expr();
      expect(Tok::Comma, "','");
      SpaceExpr z = expr();
      expect(Tok::Comma, "','");
      long long c = integer_arg("codimension");
      expect(Tok::RParen, "')'");
      return name == "ClosedOpenPair"
                 ? closed_open_pair(std::move(x), std::move(u), std::move(z), c)
                 : pointed_quotient(std::move(x), std::move(u), std::move(z), c);
    }

    if (name == "MayerVietoris") {
      expect(Tok::LParen, "'('");
      std::vector<SpaceExpr> slots;
      slots.push_back(expr());
      for (int i = 1; i < 6; ++i) {
        expect(Tok::Comma, "',' (MayerVietoris needs all six slots X1, X2, X12, U1, U2, U12)");
        slots.push_back(expr());
      }
      expect(Tok::RParen, "')' (MayerVietoris takes exactly six slots)");
      return mayer_vietoris(std::move(slots[0]), std::move(slots[1]), std::move(slots[2]),
                            std::move(slots[3]), std::move(slots[4]), std::move(slots[5]));
    }

    if (name == "Flag" || name == "GModT" || name == "GModN") {
      expect(Tok::LParen, "'('");
      CartanType ct = cartan_args(name);
      expect(Tok::RParen, "')'");
      if (name == "Flag") return flag(ct);
      if (name == "GModT") return g_mod_t(ct);
      return g_mod_n(ct);
    }

    fail(head, "unknown constructor '" + name + "'");
  }

  SpaceExpr atom(const Token& head, SpaceExpr e) {
    if (lex_.peek().kind == Tok::LParen)
      fail(lex_.peek(), head.text + " takes no arguments");
    return e;
  }

  SpaceExpr dim_ctor(NodeKind kind) {
    expect(Tok::LParen, "'('");
    long long n = integer_arg(kind == NodeKind::Torus ? "rank" : "dimension");
    expect(Tok::RParen, "')'");
    switch (kind) {
      case NodeKind::Affine: return affine(n);
      case NodeKind::Torus: return torus(n);
      default: return projective(n);
    }
  }

  SpaceExpr pair_ctor(const Token& head, NodeKind kind) {
    expect(Tok::LParen, "'('");
    SpaceExpr a = expr();
    expect(Tok::Comma, (head.text + " takes two arguments, expected ','").c_str());
    SpaceExpr b = expr();
    expect(Tok::RParen, "')'");
    switch (kind) {
      case NodeKind::Product: return product(std::move(a), std::move(b));
      case NodeKind::Smash: return smash(std::move(a), std::move(b));
      case NodeKind::DisjointUnion: return disjoint_union(std::move(a), std::move(b));
      case NodeKind::PushoutCone: return pushout_cone(std::move(a), std::move(b));
      default: return torus_fixed(std::move(a), std::move(b));
    }
  }

  SpaceExpr stratified_body(const Token& head) {
    expect(Tok::LBracket, "'['");
    std::vector<std::pair<SpaceExpr, long long>> strata;
    if (lex_.peek().kind != Tok::RBracket) {
      while (true) {
        expect(Tok::LParen, "'(' (each stratum is '(expr, codim)')");
        SpaceExpr s = expr();
        expect(Tok::Comma, "','");
        long long c = integer_arg("codimension");
        expect(Tok::RParen, "')'");
        strata.emplace_back(std::move(s), c);
        if (lex_.peek().kind == Tok::Comma) {
          lex_.take();
          continue;
        }
        break;
      }
    }
    expect(Tok::RBracket, "']'");
    return stratified(std::move(strata));
  }

  Lexer lex_;
};

}  // namespace

SpaceExpr parse(std::string_view text) {
  Parser p(text);
  return p.run();
}

SpaceExpr parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file '" + path + "'", 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace chimot
