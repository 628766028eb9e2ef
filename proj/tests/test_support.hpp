#pragma once

#include <random>
#include <vector>

#include "chimot/gw.hpp"

namespace chimot::testing {

// Every model the suites sweep.  finite(5) and finite(13) exercise the
// p = 1 mod 4 collapse, finite(3)/finite(7) the twist-parity relation.
inline const std::vector<FieldModel>& all_models() {
  static const std::vector<FieldModel> models = {
      FieldModel::generic(),   FieldModel::sqrt_minus_one(), FieldModel::real_closed(),
      FieldModel::finite(3),   FieldModel::finite(5),        FieldModel::finite(7),
      FieldModel::finite(13)};
  return models;
}

inline Coefficient rand_coeff(std::mt19937& rng, const FieldModel& m) {
  std::uniform_int_distribution<long long> num(-20, 20);
  int p_exp = 0;
  if (m.char_exponent() > 1) {
    std::uniform_int_distribution<int> exp(0, 2);
    p_exp = exp(rng);
  }
  return coeff_make(num(rng), p_exp, m);
}

inline GwElement rand_element(std::mt19937& rng, const FieldModel& m) {
  return gw_make(rand_coeff(rng, m), rand_coeff(rng, m), m);
}

}  // namespace chimot::testing
