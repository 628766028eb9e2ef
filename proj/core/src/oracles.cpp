#include "chimot/oracles.hpp"

#include <stdexcept>
#include <string>

namespace chimot::oracle {

namespace {

void require_odd_prime(long long p) {
  bool ok = p >= 3 && p % 2 == 1;
  for (long long d = 3; ok && d * d <= p; d += 2)
    if (p % d == 0) ok = false;
  if (!ok)
    throw std::invalid_argument("form classification needs an odd prime, got " +
                                std::to_string(p));
}

long long mod_pow(long long base, long long exp, long long mod) {
  long long result = 1 % mod;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = (result * base) % mod;
    base = (base * base) % mod;
    exp >>= 1;
  }
  return result;
}

// Euler's criterion: a is a nonzero square mod p iff a^((p-1)/2) = 1.
bool is_square_mod(long long a, long long p) {
  return mod_pow(a, (p - 1) / 2, p) == 1;
}

}  // namespace

FormClass classify_form_fp(const DiagonalForm& f) {
  require_odd_prime(f.prime);
  long long disc = 1;
  for (long long e : f.entries) {
    long long r = e % f.prime;
    if (r < 0) r += f.prime;
    if (r == 0)
      throw std::invalid_argument("diagonal entry " + std::to_string(e) +
                                  " is degenerate mod " + std::to_string(f.prime));
    disc = (disc * r) % f.prime;
  }
  return {static_cast<long long>(f.entries.size()), is_square_mod(disc, f.prime)};
}

bool gw_fp_relation_check(long long p) {
  require_odd_prime(p);
  FormClass pos1 = classify_form_fp({p, {1}});
  FormClass neg1 = classify_form_fp({p, {-1}});
  FormClass pos2 = classify_form_fp({p, {1, 1}});
  FormClass neg2 = classify_form_fp({p, {-1, -1}});
  if (p % 4 == 1) return neg1 == pos1;
  return neg2 == pos2 && !(neg1 == pos1);
}

long long weyl_order_closed_form(CartanType ct) {
  if (!cartan_shape_ok(ct) || ct.rank > 19)
    throw std::invalid_argument("no Weyl order formula for type " + cartan_to_string(ct));
  auto factorial = [](long long n) {
    long long r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
  };
  auto two_pow = [](long long n) { return 1LL << n; };
  switch (ct.family) {
    case CartanFamily::A: return factorial(ct.rank + 1);
    case CartanFamily::B:
    case CartanFamily::C: return two_pow(ct.rank) * factorial(ct.rank);
    case CartanFamily::D: return two_pow(ct.rank - 1) * factorial(ct.rank);
    case CartanFamily::G: return 12;
    case CartanFamily::F: return 1152;
    case CartanFamily::E: return 51840;  // rank 6 is the only supported E type
  }
  throw std::invalid_argument("unknown Cartan family");
}

}  // namespace chimot::oracle
