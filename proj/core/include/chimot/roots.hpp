#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "chimot/cartan.hpp"
#include "chimot/gw.hpp"

namespace chimot {

// Request for a Cartan type outside the enumeration cap, or any other
// input the evaluator cannot honor.
class EvalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Integer realization of a simple root system.
//  - simple_roots: rows are ambient integer coordinates (doubled lattice for
//    F4/E6 so everything stays integral)
//  - cartan_matrix[i][j] = 2(a_i, a_j)/(a_i, a_i)
//  - positive_root_count: N = #roots/2 = dim G/B
struct RootSystem {
  CartanType cartan;
  std::vector<std::vector<long long>> simple_roots;
  std::vector<std::vector<long long>> cartan_matrix;
  long long positive_root_count = 0;
};

// Weyl group enumerated by breadth-first closure of the simple reflections
// acting on the root lattice (simple-root basis); length_counts[l] = number
// of elements of Coxeter length l, l = 0..positive_root_count.
struct WeylData {
  long long order = 0;
  std::vector<long long> length_counts;
};

// Builds the realization; throws EvalError when ct is outside the supported
// list (enumeration cap |W| <= 60000).
RootSystem build_root_system(CartanType ct);

WeylData weyl_enumerate(const RootSystem& rs);

// length_counts as a JSON array indexed by Coxeter length, e.g. "[1,2,2,1]".
std::string length_counts_to_json(const WeylData& wd);

// Cached variants; safe for concurrent readers.
std::shared_ptr<const RootSystem> root_system(CartanType ct);
std::shared_ptr<const WeylData> weyl_data(CartanType ct);

// chi(G/B) = sum over w of <-1>^(N - l(w)): Bruhat cells are affine of
// dimension l(w), hence codimension N - l(w).  Always exact.
GwValue chi_flag(CartanType ct, const FieldModel& m);

// chi(G/T): equals chi_flag via the affine-bundle G/T -> G/B.
GwValue chi_g_mod_t(CartanType ct, const FieldModel& m);

// chi(G/N_G(T)) via the torus fixed locus of the variety of maximal tori,
// which is the single point eN(T).  Exact 1 when sqrt(-1) exists (also in
// finite models with p = 1 mod 4); otherwise the class of 1 modulo the
// fundamental ideal, with unit_known = true.
GwValue chi_g_mod_normalizer(CartanType ct, const FieldModel& m);

}  // namespace chimot
