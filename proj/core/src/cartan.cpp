#include "chimot/cartan.hpp"

#include <cctype>

namespace chimot {

bool cartan_shape_ok(CartanType ct) {
  switch (ct.family) {
    case CartanFamily::A: return ct.rank >= 1;
    case CartanFamily::B: return ct.rank >= 2;
    case CartanFamily::C: return ct.rank >= 2;
    case CartanFamily::D: return ct.rank >= 3;
    case CartanFamily::E: return ct.rank == 6;
    case CartanFamily::F: return ct.rank == 4;
    case CartanFamily::G: return ct.rank == 2;
  }
  return false;
}

bool cartan_supported(CartanType ct) {
  if (!cartan_shape_ok(ct)) return false;
  switch (ct.family) {
    case CartanFamily::A: return ct.rank <= 7;
    case CartanFamily::B: return ct.rank <= 6;
    case CartanFamily::C: return ct.rank <= 6;
    case CartanFamily::D: return ct.rank <= 6;
    case CartanFamily::E: return ct.rank == 6;
    case CartanFamily::F: return true;
    case CartanFamily::G: return true;
  }
  return false;
}

const std::vector<CartanType>& supported_cartan_types() {
  static const std::vector<CartanType> types = [] {
    std::vector<CartanType> v;
    for (int r = 1; r <= 7; ++r) v.push_back({CartanFamily::A, r});
    for (int r = 2; r <= 6; ++r) v.push_back({CartanFamily::B, r});
    for (int r = 2; r <= 6; ++r) v.push_back({CartanFamily::C, r});
    for (int r = 3; r <= 6; ++r) v.push_back({CartanFamily::D, r});
    v.push_back({CartanFamily::G, 2});
    v.push_back({CartanFamily::F, 4});
    v.push_back({CartanFamily::E, 6});
    return v;
  }();
  return types;
}

std::string cartan_to_string(CartanType ct) {
  return std::string(1, static_cast<char>(ct.family)) + "," + std::to_string(ct.rank);
}

std::optional<CartanType> cartan_from_string(std::string_view text) {
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i >= text.size()) return std::nullopt;
  char f = text[i++];
  if (f < 'A' || f > 'G') return std::nullopt;
  skip_ws();
  if (i >= text.size() || text[i] != ',') return std::nullopt;
  ++i;
  skip_ws();
  int rank = 0;
  size_t digits = i;
  while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
    rank = rank * 10 + (text[i] - '0');
    if (rank > 1000) return std::nullopt;
    ++i;
  }
  if (i == digits || rank < 1) return std::nullopt;
  skip_ws();
  if (i != text.size()) return std::nullopt;
  return CartanType{static_cast<CartanFamily>(f), rank};
}

}  // namespace chimot
