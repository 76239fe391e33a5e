#pragma once

#include <cassert>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

// A Kazhdan-Lusztig polynomial in q, constant term first, no trailing zeroes.
// The empty coefficient list is the zero polynomial (used internally for
// incomparable pairs; kl_polynomial itself refuses those).
class KLPolynomial {
 public:
  KLPolynomial() = default;
  explicit KLPolynomial(std::vector<int> coeffs) : c_(std::move(coeffs)) { trim(); }

  static KLPolynomial zero() { return KLPolynomial(); }
  static KLPolynomial one() { return KLPolynomial({1}); }

  const std::vector<int>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  int coeff(int k) const { return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[static_cast<std::size_t>(k)] : 0; }

  KLPolynomial shifted(int k) const {  // multiply by q^k
    if (is_zero()) return *this;
    std::vector<int> out(static_cast<std::size_t>(k), 0);
    out.insert(out.end(), c_.begin(), c_.end());
    return KLPolynomial(std::move(out));
  }

  KLPolynomial& operator+=(const KLPolynomial& other) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
    for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] += other.c_[k];
    trim();
    return *this;
  }

  KLPolynomial& sub_scaled(const KLPolynomial& other, int scale) {
    if (other.c_.size() > c_.size()) c_.resize(other.c_.size(), 0);
    for (std::size_t k = 0; k < other.c_.size(); ++k) c_[k] -= scale * other.c_[k];
    trim();
    return *this;
  }

  bool operator==(const KLPolynomial& other) const = default;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<int> c_;
};

namespace detail {

inline KLPolynomial kl_rec(const WeylElement& u, const WeylElement& w);

// mu(z, v): the coefficient of q^{(l(v)-l(z)-1)/2} in P_{z,v}.
inline int kl_mu(const WeylElement& z, const WeylElement& v) {
  if (z == v || !bruhat_leq(z, v)) return 0;
  const int d = v.length() - z.length();
  if (d % 2 == 0) return 0;
  return kl_rec(z, v).coeff((d - 1) / 2);
}

// The classical recursion on a left descent s of w, with v = sw:
//
//   P_{u,w} = q^{1-c} P_{su,v} + q^c P_{u,v}
//             - sum over u <= z < v with sz < z of mu(z,v) q^{(l(w)-l(z))/2} P_{u,z},
//
// where c = 1 if su < u and c = 0 otherwise.  Memoized per root system.
inline KLPolynomial kl_rec(const WeylElement& u, const WeylElement& w) {
  if (u == w) return KLPolynomial::one();
  if (!bruhat_leq(u, w)) return KLPolynomial::zero();

  std::vector<int> key = u.key();
  key.insert(key.end(), w.key().begin(), w.key().end());
  auto& cache = u.system()->kl_cache();
  if (auto hit = cache.find(key)) return KLPolynomial(*hit);

  int s = 0;
  while (!left_descent(w, s)) ++s;
  const WeylElement si = WeylElement::simple(w.system(), s);
  const WeylElement v = si * w;
  const WeylElement su = si * u;
  const int c = su.length() < u.length() ? 1 : 0;

  KLPolynomial p = kl_rec(su, v).shifted(1 - c);
  p += kl_rec(u, v).shifted(c);

  if (bruhat_leq(u, v)) {
    for (const WeylElement& z : enumerate_interval(u, v)) {
      if (z == v) continue;
      if (!left_descent(z, s)) continue;
      const int mu = kl_mu(z, v);
      if (mu == 0) continue;
      assert((w.length() - z.length()) % 2 == 0);
      p.sub_scaled(kl_rec(u, z).shifted((w.length() - z.length()) / 2), mu);
    }
  }

#ifndef NDEBUG
  assert(p.coeff(0) == 1);
  for (int k = 0; k <= p.degree(); ++k) assert(p.coeff(k) >= 0);
#endif
  cache.store(std::move(key), p.coeffs());
  return p;
}

}  // namespace detail

inline KLPolynomial kl_polynomial(const WeylElement& u, const WeylElement& w) {
  u.check_same_system(w);
  if (!bruhat_leq(u, w))
    fail(errc::not_comparable, "'" + word_string(u) + "' is not below '" + word_string(w) + "'");
  return detail::kl_rec(u, w);
}

inline int kl_mu(const WeylElement& u, const WeylElement& w) {
  u.check_same_system(w);
  return detail::kl_mu(u, w);
}

}  // namespace schubert
