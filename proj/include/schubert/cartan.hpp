#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <vector>

#include "schubert/errors.hpp"

namespace schubert {

// Integer Cartan matrix with the pairing convention
//
//   a[i][j] = <alpha_j, alpha_i^vee>,   s_i(alpha_j) = alpha_j - a[i][j] * alpha_i.
//
// This convention is fixed here once and used everywhere else.
struct CartanMatrix {
  std::vector<std::vector<int>> a;

  int rank() const { return static_cast<int>(a.size()); }

  // Structural checks: square, 2 on the diagonal, non-positive off-diagonal
  // entries with symmetric zeroes.  Finiteness is checked at root-closure time.
  void validate() const {
    const int n = rank();
    if (n < 1) fail(errc::not_finite_type, "Cartan matrix must have rank >= 1");
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(a[i].size()) != n)
        fail(errc::not_finite_type, "Cartan matrix must be square");
      if (a[i][i] != 2) fail(errc::not_finite_type, "Cartan matrix diagonal entries must equal 2");
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (a[i][j] > 0)
          fail(errc::not_finite_type, "Cartan matrix off-diagonal entries must be <= 0");
        if ((a[i][j] == 0) != (a[j][i] == 0))
          fail(errc::not_finite_type, "Cartan matrix zeroes must be symmetric");
      }
    }
  }

  bool operator==(const CartanMatrix& other) const = default;
};

namespace detail {

inline CartanMatrix chain_cartan(int n) {
  CartanMatrix c;
  c.a.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c.a[i][i] = 2;
    if (i + 1 < n) c.a[i][i + 1] = c.a[i + 1][i] = -1;
  }
  return c;
}

}  // namespace detail

// Built-in Cartan matrices.  For the B/C/G presets the short/long asymmetric
// bond sits between indices 0 and 1, with index 0 short for B and G2 (so that
// in B2 both alpha + beta and 2*alpha + beta are roots).
inline std::optional<CartanMatrix> preset_cartan(char family, int n) {
  switch (family) {
    case 'A':
      if (n < 1) return std::nullopt;
      return detail::chain_cartan(n);
    case 'B': {
      if (n < 2) return std::nullopt;
      CartanMatrix c = detail::chain_cartan(n);
      c.a[0][1] = -2;  // index 0 short
      return c;
    }
    case 'C': {
      if (n < 2) return std::nullopt;
      CartanMatrix c = detail::chain_cartan(n);
      c.a[1][0] = -2;  // index 0 long
      return c;
    }
    case 'D': {
      if (n < 3) return std::nullopt;
      CartanMatrix c = detail::chain_cartan(n - 1);
      c.a.resize(n);
      for (auto& row : c.a) row.resize(n, 0);
      c.a[n - 1][n - 1] = 2;
      c.a[n - 3][n - 1] = c.a[n - 1][n - 3] = -1;
      return c;
    }
    case 'G': {
      if (n != 2) return std::nullopt;
      CartanMatrix c = detail::chain_cartan(2);
      c.a[0][1] = -3;  // index 0 short
      return c;
    }
    case 'F': {
      if (n != 4) return std::nullopt;
      CartanMatrix c = detail::chain_cartan(4);
      c.a[2][1] = -2;
      return c;
    }
    default:
      return std::nullopt;
  }
}

// Parses preset names such as "B2", "a3", "D4" (case-insensitive).
inline std::optional<std::pair<CartanMatrix, std::string>> parse_preset(const std::string& name) {
  if (name.size() < 2) return std::nullopt;
  char family = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  for (std::size_t k = 1; k < name.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
  int n = 0;
  for (std::size_t k = 1; k < name.size(); ++k) n = n * 10 + (name[k] - '0');
  auto c = preset_cartan(family, n);
  if (!c) return std::nullopt;
  return std::make_pair(*c, std::string(1, family) + std::to_string(n));
}

}  // namespace schubert
