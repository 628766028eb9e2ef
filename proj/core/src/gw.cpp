#include "chimot/gw.hpp"

#include <cctype>
#include <cstdlib>

#include "json.hpp"

namespace chimot {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("GW coefficient overflow in addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("GW coefficient overflow in multiplication");
  return r;
}

long long checked_pow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r = checked_mul(r, base);
  return r;
}

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

// Strips p factors so that p_exp > 0 implies p does not divide num.
Coefficient reduce(long long num, int p_exp, long long p) {
  if (num == 0) return {0, 0};
  while (p_exp > 0 && num % p == 0) {
    num /= p;
    --p_exp;
  }
  return {num, p_exp};
}

int parity(long long n) { return static_cast<int>(((n % 2) + 2) % 2); }

}  // namespace

FieldModel FieldModel::finite(long long p) {
  if (!is_odd_prime(p))
    throw std::invalid_argument("finite field model requires an odd prime, got " +
                                std::to_string(p));
  return FieldModel(ModelKind::Finite, p);
}

bool FieldModel::has_sqrt_minus_one() const {
  return kind_ == ModelKind::SqrtMinusOne ||
         (kind_ == ModelKind::Finite && char_exp_ % 4 == 1);
}

std::string FieldModel::name() const {
  switch (kind_) {
    case ModelKind::Generic: return "generic";
    case ModelKind::SqrtMinusOne: return "sqrt-minus-one";
    case ModelKind::RealClosed: return "real-closed";
    case ModelKind::Finite: return "finite:" + std::to_string(char_exp_);
  }
  throw std::logic_error("corrupt FieldModel kind");
}

FieldModel FieldModel::parse(std::string_view text) {
  if (text == "generic") return generic();
  if (text == "sqrt-minus-one") return sqrt_minus_one();
  if (text == "real-closed") return real_closed();
  constexpr std::string_view prefix = "finite:";
  if (text.substr(0, prefix.size()) == prefix) {
    std::string digits(text.substr(prefix.size()));
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad finite field selector: '" + std::string(text) + "'");
    errno = 0;
    long long p = std::strtoll(digits.c_str(), nullptr, 10);
    if (errno != 0) throw std::invalid_argument("prime out of range: '" + digits + "'");
    return finite(p);
  }
  throw std::invalid_argument(
      "unknown field model '" + std::string(text) +
      "' (expected generic, sqrt-minus-one, real-closed, or finite:p)");
}

Coefficient coeff_make(long long num, int p_exp, const FieldModel& m) {
  if (p_exp < 0) throw std::invalid_argument("negative denominator exponent");
  if (m.char_exponent() == 1) {
    if (p_exp != 0)
      throw std::invalid_argument(
          "denominator exponents need a finite model (characteristic exponent 1)");
    return {num, 0};
  }
  return reduce(num, p_exp, m.char_exponent());
}

Coefficient coeff_add(Coefficient a, Coefficient b, const FieldModel& m) {
  if (m.char_exponent() == 1) return {checked_add(a.num, b.num), 0};
  long long p = m.char_exponent();
  int e = std::max(a.p_exp, b.p_exp);
  long long n = checked_add(checked_mul(a.num, checked_pow(p, e - a.p_exp)),
                            checked_mul(b.num, checked_pow(p, e - b.p_exp)));
  return reduce(n, e, p);
}

Coefficient coeff_neg(Coefficient a) { return {-a.num, a.p_exp}; }

Coefficient coeff_sub(Coefficient a, Coefficient b, const FieldModel& m) {
  return coeff_add(a, coeff_neg(b), m);
}

Coefficient coeff_mul(Coefficient a, Coefficient b, const FieldModel& m) {
  long long n = checked_mul(a.num, b.num);
  if (m.char_exponent() == 1) return {n, 0};
  return reduce(n, a.p_exp + b.p_exp, m.char_exponent());
}

bool coeff_is_zero(Coefficient a) { return a.num == 0; }

bool coeff_is_unit(Coefficient a, const FieldModel& m) {
  long long n = a.num < 0 ? -a.num : a.num;
  if (n == 0) return false;
  if (m.char_exponent() > 1)
    while (n % m.char_exponent() == 0) n /= m.char_exponent();
  return n == 1;
}

Coefficient coeff_inverse(Coefficient a, const FieldModel& m) {
  if (!coeff_is_unit(a, m))
    throw std::invalid_argument("coefficient is not a unit, cannot invert");
  long long sign = a.num < 0 ? -1 : 1;
  if (m.char_exponent() == 1) return {sign, 0};
  long long p = m.char_exponent();
  int j = 0;
  for (long long n = sign * a.num; n > 1; n /= p) ++j;  // num = sign * p^j
  int d = a.p_exp - j;                                  // value = sign * p^{-d}
  if (d >= 0) return {checked_mul(sign, checked_pow(p, d)), 0};
  return {sign, -d};
}

std::string coeff_to_string(Coefficient a, const FieldModel& m) {
  std::string s = std::to_string(a.num);
  if (a.p_exp > 0) {
    s += "/" + std::to_string(m.char_exponent());
    if (a.p_exp > 1) s += "^" + std::to_string(a.p_exp);
  }
  return s;
}

GwElement normal_form(Coefficient a, Coefficient b, const FieldModel& m) {
  a = coeff_make(a.num, a.p_exp, m);
  b = coeff_make(b.num, b.p_exp, m);
  if (m.has_sqrt_minus_one()) return {coeff_add(a, b, m), {0, 0}};
  if (m.is_finite()) {
    // p = 3 mod 4: 2(<1> - <-1>) = 0, so only the twist's parity matters.
    // p is odd, hence the numerator's parity is the coset of b in Z/2.
    long long beta = parity(b.num);
    Coefficient rest = coeff_sub(b, {beta, 0}, m);
    return {coeff_add(a, rest, m), {beta, 0}};
  }
  return {a, b};
}

GwElement gw_make(Coefficient a, Coefficient b, const FieldModel& m) {
  return normal_form(a, b, m);
}

GwElement gw_make(long long a, long long b, const FieldModel& m) {
  return normal_form({a, 0}, {b, 0}, m);
}

GwElement gw_zero() { return {{0, 0}, {0, 0}}; }

GwElement gw_one(const FieldModel& m) { return gw_make(1, 0, m); }

GwElement gw_add(const GwElement& x, const GwElement& y, const FieldModel& m) {
  return normal_form(coeff_add(x.unit, y.unit, m), coeff_add(x.twist, y.twist, m), m);
}

GwElement gw_sub(const GwElement& x, const GwElement& y, const FieldModel& m) {
  return normal_form(coeff_sub(x.unit, y.unit, m), coeff_sub(x.twist, y.twist, m), m);
}

GwElement gw_mul(const GwElement& x, const GwElement& y, const FieldModel& m) {
  // (a1 + b1 eps)(a2 + b2 eps) with eps^2 = 1.
  Coefficient a = coeff_add(coeff_mul(x.unit, y.unit, m), coeff_mul(x.twist, y.twist, m), m);
  Coefficient b = coeff_add(coeff_mul(x.unit, y.twist, m), coeff_mul(x.twist, y.unit, m), m);
  return normal_form(a, b, m);
}

GwElement gw_pow_twist(unsigned long long c, const FieldModel& m) {
  return c % 2 == 0 ? gw_one(m) : gw_make(0, 1, m);
}

Coefficient rank(const GwElement& x, const FieldModel& m) {
  return coeff_add(x.unit, x.twist, m);
}

Coefficient signature(const GwElement& x, const FieldModel& m) {
  if (m.kind() != ModelKind::RealClosed)
    throw std::invalid_argument("signature is defined for the real-closed model only");
  return coeff_sub(x.unit, x.twist, m);
}

Coefficient reduce_mod_fundamental(const GwElement& x, const FieldModel& m) {
  return rank(x, m);
}

bool is_unit(const GwElement& x, const FieldModel& m) {
  switch (m.kind()) {
    case ModelKind::Generic:
    case ModelKind::RealClosed:
      // Both characters eps -> +1 and eps -> -1 must land on units.
      return coeff_is_unit(coeff_add(x.unit, x.twist, m), m) &&
             coeff_is_unit(coeff_sub(x.unit, x.twist, m), m);
    case ModelKind::SqrtMinusOne:
    case ModelKind::Finite:
      // The fundamental ideal is nilpotent; rank decides invertibility.
      return coeff_is_unit(rank(x, m), m);
  }
  throw std::logic_error("corrupt FieldModel kind");
}

std::string gw_to_string(const GwElement& x, const FieldModel& m) {
  std::string s;
  if (!coeff_is_zero(x.unit)) s = coeff_to_string(x.unit, m) + "<1>";
  if (!coeff_is_zero(x.twist)) {
    if (s.empty())
      s = coeff_to_string(x.twist, m) + "<-1>";
    else if (x.twist.num > 0)
      s += " + " + coeff_to_string(x.twist, m) + "<-1>";
    else
      s += " - " + coeff_to_string(coeff_neg(x.twist), m) + "<-1>";
  }
  return s.empty() ? "0" : s;
}

namespace {

// Recursive-descent reader for the "a<1> + b<-1>" rendering.
struct ElementReader {
  std::string_view text;
  size_t pos = 0;
  const FieldModel& m;

  explicit ElementReader(std::string_view t, const FieldModel& model) : text(t), m(model) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text.substr(pos, tok.size()) == tok) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad GW element text at offset " + std::to_string(pos) +
                                ": " + why);
  }

  long long integer() {
    skip_ws();
    size_t start = pos;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    size_t digits = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == digits) fail("expected an integer");
    errno = 0;
    long long v = std::strtoll(std::string(text.substr(start, pos - start)).c_str(), nullptr, 10);
    if (errno != 0) fail("integer out of range");
    return v;
  }

  // coeff := INT ('/' INT ('^' INT)?)?
  Coefficient coefficient(int sign) {
    long long n = integer();
    int e = 0;
    if (eat("/")) {
      long long base = integer();
      if (base != m.char_exponent()) fail("denominator base must be the model's prime");
      e = 1;
      if (eat("^")) {
        long long k = integer();
        if (k < 1 || k > 64) fail("denominator exponent out of range");
        e = static_cast<int>(k);
      }
    }
    return coeff_make(sign * n, e, m);
  }

  GwElement element() {
    Coefficient a{0, 0}, b{0, 0};
    int sign = eat("-") ? -1 : 1;
    while (true) {
      Coefficient c = coefficient(sign);
      if (eat("<1>"))
        a = coeff_add(a, c, m);
      else if (eat("<-1>"))
        b = coeff_add(b, c, m);
      else
        a = coeff_add(a, c, m);  // bare integer counts as a <1> term
      skip_ws();
      if (pos >= text.size()) break;
      if (eat("+"))
        sign = 1;
      else if (eat("-"))
        sign = -1;
      else
        fail("expected '+', '-', or end of text");
    }
    return normal_form(a, b, m);
  }
};

}  // namespace

GwElement gw_from_string(std::string_view text, const FieldModel& m) {
  ElementReader r(text, m);
  return r.element();
}

namespace {

nlohmann::ordered_json coeff_json(Coefficient c) {
  return nlohmann::ordered_json{{"num", c.num}, {"p_exp", c.p_exp}};
}

Coefficient coeff_from_json(const nlohmann::json& j, const FieldModel& m) {
  if (!j.is_object() || !j.contains("num") || !j.contains("p_exp") ||
      !j["num"].is_number_integer() || !j["p_exp"].is_number_integer())
    throw std::invalid_argument("coefficient JSON must be {\"num\": int, \"p_exp\": int}");
  return coeff_make(j["num"].get<long long>(), j["p_exp"].get<int>(), m);
}

}  // namespace

std::string gw_to_json(const GwElement& x, const FieldModel& m) {
  nlohmann::ordered_json j;
  j["unit"] = coeff_json(x.unit);
  j["twist"] = coeff_json(x.twist);
  j["model"] = m.name();
  return j.dump();
}

std::pair<GwElement, FieldModel> gw_from_json(std::string_view json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("malformed GW element JSON");
  if (!j.is_object() || !j.contains("unit") || !j.contains("twist") || !j.contains("model") ||
      !j["model"].is_string())
    throw std::invalid_argument("GW element JSON must have unit, twist, and model fields");
  FieldModel m = FieldModel::parse(j["model"].get<std::string>());
  GwElement x = normal_form(coeff_from_json(j["unit"], m), coeff_from_json(j["twist"], m), m);
  return {x, m};
}

GwValue exact_value(GwElement x, const FieldModel& m) {
  return {x, Exactness::Exact, is_unit(x, m)};
}

GwValue congruence_value(GwElement x, const FieldModel& m) {
  if (m.has_sqrt_minus_one())
    throw std::logic_error(
        "congruence values cannot arise when <-1> = <1> (fundamental ideal reduction "
        "is trivial there)");
  return {x, Exactness::ModuloFundamentalIdeal, is_unit(x, m)};
}

namespace {

GwValue combined(GwElement repr, const GwValue& x, const GwValue& y, const FieldModel& m) {
  if (x.exactness == Exactness::Exact && y.exactness == Exactness::Exact)
    return exact_value(repr, m);
  return congruence_value(repr, m);
}

}  // namespace

GwValue value_add(const GwValue& x, const GwValue& y, const FieldModel& m) {
  return combined(gw_add(x.representative, y.representative, m), x, y, m);
}

GwValue value_sub(const GwValue& x, const GwValue& y, const FieldModel& m) {
  return combined(gw_sub(x.representative, y.representative, m), x, y, m);
}

GwValue value_mul(const GwValue& x, const GwValue& y, const FieldModel& m) {
  return combined(gw_mul(x.representative, y.representative, m), x, y, m);
}

GwValue value_twist(unsigned long long c, const GwValue& x, const FieldModel& m) {
  GwElement repr = gw_mul(gw_pow_twist(c, m), x.representative, m);
  if (x.exactness == Exactness::Exact) return exact_value(repr, m);
  return congruence_value(repr, m);
}

GwValue value_downgrade(const GwValue& x, const FieldModel& m) {
  if (m.has_sqrt_minus_one()) return x;
  return congruence_value(x.representative, m);
}

const char* exactness_name(Exactness e) {
  return e == Exactness::Exact ? "exact" : "modulo-fundamental-ideal";
}

std::string value_to_string(const GwValue& v, const FieldModel& m) {
  std::string s = gw_to_string(v.representative, m);
  if (v.exactness == Exactness::Exact) return s + "  (exact)";
  return s + "  (modulo fundamental ideal; unit_known=" + (v.unit_known ? "true" : "false") +
         ")";
}

}  // namespace chimot
