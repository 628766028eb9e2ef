#pragma once

#include <vector>

#include "chimot/cartan.hpp"

// Independent ground truth for tests.  Nothing here touches the GW
// arithmetic, the evaluator, or the Weyl enumeration: quadratic forms over
// F_p are classified from scratch by (rank, discriminant square class), and
// Weyl group orders come from the closed-form product formulas.

namespace chimot::oracle {

// Nondegenerate diagonal form <e_1, ..., e_n> over F_p, p an odd prime.
struct DiagonalForm {
  long long prime = 3;
  std::vector<long long> entries;
};

struct FormClass {
  long long rank = 0;
  bool disc_is_square = true;

  friend bool operator==(const FormClass&, const FormClass&) = default;
};

// (rank, discriminant class) classifies nondegenerate forms over a finite
// field of odd characteristic.  Square-ness is decided by Euler's
// criterion.  Throws std::invalid_argument for p = 2, composite p, or an
// entry divisible by p.
FormClass classify_form_fp(const DiagonalForm& f);

// Sanity of the model relations: for p = 1 mod 4, <-1> and <1> are
// isometric; for p = 3 mod 4 they differ but <-1,-1> and <1,1> agree.
bool gw_fp_relation_check(long long p);

// |W| by the product formulas: A_n (n+1)!, B_n/C_n 2^n n!, D_n 2^(n-1) n!,
// G2 12, F4 1152, E6 51840.
long long weyl_order_closed_form(CartanType ct);

}  // namespace chimot::oracle
