#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chimot {

enum class CartanFamily : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A simple type "X,n".  Shape constraints: A any rank >= 1, B/C rank >= 2,
// D rank >= 3 (D3 kept literal, not folded into A3), G2, F4, E6.
struct CartanType {
  CartanFamily family = CartanFamily::A;
  int rank = 1;

  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

// Shape validity as above (no enumeration cap applied).
bool cartan_shape_ok(CartanType ct);

// Types whose Weyl group the enumerator will touch (order capped at 60000):
// A1..A7, B2..B6, C2..C6, D3..D6, G2, F4, E6.
bool cartan_supported(CartanType ct);
const std::vector<CartanType>& supported_cartan_types();

std::string cartan_to_string(CartanType ct);  // "A,2"
std::optional<CartanType> cartan_from_string(std::string_view text);

}  // namespace chimot
