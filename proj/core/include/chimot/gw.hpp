#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

// Arithmetic in the subring of the Grothendieck-Witt ring GW(k) spanned by
// the rank-one forms <1> and <-1>.  Internally this is the group ring
// Z[eps]/(eps^2 - 1) with eps the class of <-1>, cut down by the relations
// the chosen base field imposes, with coefficients in Z[1/p] when k has
// characteristic exponent p > 1.

namespace chimot {

enum class ModelKind { Generic, SqrtMinusOne, RealClosed, Finite };

// Base-field shape.  Only facts that change the arithmetic are kept:
//  - generic:        no relations between <1> and <-1>
//  - sqrt-minus-one: k contains a square root of -1, so <-1> = <1>
//  - real-closed:    no relations; rank and signature jointly injective
//  - finite(p):      p an odd prime; coefficients live in Z[1/p];
//                    p = 1 mod 4 behaves like sqrt-minus-one,
//                    p = 3 mod 4 imposes 2(<1> - <-1>) = 0
class FieldModel {
public:
  static FieldModel generic() { return FieldModel(ModelKind::Generic, 1); }
  static FieldModel sqrt_minus_one() { return FieldModel(ModelKind::SqrtMinusOne, 1); }
  static FieldModel real_closed() { return FieldModel(ModelKind::RealClosed, 1); }
  static FieldModel finite(long long p);  // rejects 2, non-primes

  ModelKind kind() const { return kind_; }

  // 1 in characteristic zero models, p for finite(p).
  long long char_exponent() const { return char_exp_; }

  bool is_finite() const { return kind_ == ModelKind::Finite; }

  // True when <-1> = <1> holds: sqrt-minus-one, and finite(p) with p = 1 mod 4.
  bool has_sqrt_minus_one() const;

  // True when <1> - <-1> is nonzero: generic, real-closed, finite(p = 3 mod 4).
  bool twist_nontrivial() const { return !has_sqrt_minus_one(); }

  // Canonical selector string: "generic", "sqrt-minus-one", "real-closed",
  // "finite:p".  parse() accepts exactly these.
  std::string name() const;
  static FieldModel parse(std::string_view text);  // throws std::invalid_argument

  friend bool operator==(const FieldModel& a, const FieldModel& b) {
    return a.kind_ == b.kind_ && a.char_exp_ == b.char_exp_;
  }

private:
  FieldModel(ModelKind k, long long ce) : kind_(k), char_exp_(ce) {}
  ModelKind kind_;
  long long char_exp_;
};

// Element num / p^p_exp of Z[1/p], reduced: p_exp = 0 whenever num = 0 or
// p divides num, and always 0 when the model's characteristic exponent is 1.
struct Coefficient {
  long long num = 0;
  int p_exp = 0;

  friend bool operator==(const Coefficient&, const Coefficient&) = default;
};

Coefficient coeff_make(long long num, int p_exp, const FieldModel& m);
Coefficient coeff_add(Coefficient a, Coefficient b, const FieldModel& m);
Coefficient coeff_sub(Coefficient a, Coefficient b, const FieldModel& m);
Coefficient coeff_mul(Coefficient a, Coefficient b, const FieldModel& m);
Coefficient coeff_neg(Coefficient a);
bool coeff_is_zero(Coefficient a);

// Units of Z (num = +-1) resp. Z[1/p] (num = +-p^j after reduction).
bool coeff_is_unit(Coefficient a, const FieldModel& m);

// Multiplicative inverse; precondition coeff_is_unit.
Coefficient coeff_inverse(Coefficient a, const FieldModel& m);

// "n" or "n/p^e" ("n/p" when e = 1).
std::string coeff_to_string(Coefficient a, const FieldModel& m);

// unit*<1> + twist*<-1> in model normal form:
//  - generic, real-closed: as given
//  - sqrt-minus-one, finite(p = 1 mod 4): twist folded into unit, twist = 0
//  - finite(p = 3 mod 4): twist reduced to {0,1} by numerator parity, the
//    even remainder folded into unit
struct GwElement {
  Coefficient unit;
  Coefficient twist;

  friend bool operator==(const GwElement&, const GwElement&) = default;
};

GwElement normal_form(Coefficient a, Coefficient b, const FieldModel& m);
GwElement gw_make(Coefficient a, Coefficient b, const FieldModel& m);
GwElement gw_make(long long a, long long b, const FieldModel& m);
GwElement gw_zero();
GwElement gw_one(const FieldModel& m);

GwElement gw_add(const GwElement& x, const GwElement& y, const FieldModel& m);
GwElement gw_sub(const GwElement& x, const GwElement& y, const FieldModel& m);
GwElement gw_mul(const GwElement& x, const GwElement& y, const FieldModel& m);

// <-1>^c, decided by the parity of c.
GwElement gw_pow_twist(unsigned long long c, const FieldModel& m);

// Image under eps -> 1, i.e. the rank homomorphism GW(k) -> Z[1/p].
Coefficient rank(const GwElement& x, const FieldModel& m);

// Image under eps -> -1; defined for the real-closed model only.
Coefficient signature(const GwElement& x, const FieldModel& m);

// Reduction modulo the fundamental ideal I = ker(rank); equals rank.
Coefficient reduce_mod_fundamental(const GwElement& x, const FieldModel& m);

// Invertibility in the model ring.  generic/real-closed: both character
// images must be coefficient units; sqrt-minus-one and finite: rank alone
// (the fundamental ideal is nilpotent there).
bool is_unit(const GwElement& x, const FieldModel& m);

// "a<1> + b<-1>" with signs folded ("2<1> - 2<-1>", "-1<1>", "0").
std::string gw_to_string(const GwElement& x, const FieldModel& m);
GwElement gw_from_string(std::string_view text, const FieldModel& m);

// {"unit": {"num": .., "p_exp": ..}, "twist": {..}, "model": ".."}
std::string gw_to_json(const GwElement& x, const FieldModel& m);
std::pair<GwElement, FieldModel> gw_from_json(std::string_view json_text);

enum class Exactness { Exact, ModuloFundamentalIdeal };

// A GW class known either exactly or as a coset of the fundamental ideal.
// Congruence values can only arise in models where <1> - <-1> is nonzero.
// unit_known is maintained as is_unit(representative); it is only
// meaningful for congruence values (exact values answer is_unit directly).
struct GwValue {
  GwElement representative;
  Exactness exactness = Exactness::Exact;
  bool unit_known = false;

  friend bool operator==(const GwValue&, const GwValue&) = default;
};

GwValue exact_value(GwElement x, const FieldModel& m);
GwValue congruence_value(GwElement x, const FieldModel& m);  // rejects models with <-1> = <1>

GwValue value_add(const GwValue& x, const GwValue& y, const FieldModel& m);
GwValue value_sub(const GwValue& x, const GwValue& y, const FieldModel& m);
GwValue value_mul(const GwValue& x, const GwValue& y, const FieldModel& m);

// <-1>^c * x.
GwValue value_twist(unsigned long long c, const GwValue& x, const FieldModel& m);

// Weakens an exact value to its coset modulo the fundamental ideal in models
// where the ideal is nonzero; identity where <-1> = <1>.
GwValue value_downgrade(const GwValue& x, const FieldModel& m);

const char* exactness_name(Exactness e);
std::string value_to_string(const GwValue& v, const FieldModel& m);

}  // namespace chimot
