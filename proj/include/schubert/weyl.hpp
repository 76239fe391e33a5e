#pragma once

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "schubert/root_system.hpp"

namespace schubert {

// A Weyl group element, identified by its action on the simple roots.  The
// inverse action is carried along so that w and w^-1 act in O(rank^2); the
// inversion-count length is computed once at construction.
class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr rs) {
    const int n = rs->rank();
    std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i) * n + i] = 1;
    return WeylElement(std::move(rs), m, m, 0);
  }

  static WeylElement simple(RootSystemPtr rs, int i) {
    const int n = rs->rank();
    if (i < 0 || i >= n) fail(errc::index_out_of_range, "simple index out of range");
    std::vector<int> m(static_cast<std::size_t>(n) * n, 0);
    for (int k = 0; k < n; ++k) m[static_cast<std::size_t>(k) * n + k] = 1;
    for (int j = 0; j < n; ++j) m[static_cast<std::size_t>(i) * n + j] -= rs->cartan().a[i][j];
    return WeylElement(std::move(rs), m, m, 1);
  }

  const RootSystemPtr& system() const { return rs_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  Root act(const Root& r) const { return apply(mat_, r); }
  Root act_inverse(const Root& r) const { return apply(inv_, r); }

  WeylElement inverse() const { return WeylElement(rs_, inv_, mat_, len_); }

  friend WeylElement operator*(const WeylElement& u, const WeylElement& v) {
    u.check_same_system(v);
    const int n = u.rs_->rank();
    std::vector<int> m(static_cast<std::size_t>(n) * n, 0), inv(static_cast<std::size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) {
        const int a = u.mat_[static_cast<std::size_t>(i) * n + k];
        const int b = v.inv_[static_cast<std::size_t>(i) * n + k];
        if (a)
          for (int j = 0; j < n; ++j)
            m[static_cast<std::size_t>(i) * n + j] += a * v.mat_[static_cast<std::size_t>(k) * n + j];
        if (b)
          for (int j = 0; j < n; ++j)
            inv[static_cast<std::size_t>(i) * n + j] += b * u.inv_[static_cast<std::size_t>(k) * n + j];
      }
    return WeylElement(u.rs_, std::move(m), std::move(inv));
  }

  bool operator==(const WeylElement& other) const {
    return rs_.get() == other.rs_.get() && mat_ == other.mat_;
  }
  bool operator!=(const WeylElement& other) const { return !(*this == other); }

  // Flattened action matrix; used as a memo key.
  const std::vector<int>& key() const { return mat_; }

  void check_same_system(const WeylElement& other) const {
    if (rs_.get() != other.rs_.get())
      fail(errc::mixed_systems, "operands belong to different root systems");
  }

 private:
  WeylElement(RootSystemPtr rs, std::vector<int> mat, std::vector<int> inv)
      : rs_(std::move(rs)), mat_(std::move(mat)), inv_(std::move(inv)) {
    len_ = 0;
    for (const Root& b : rs_->positive_roots())
      if (!act(b).is_positive()) ++len_;
  }
  WeylElement(RootSystemPtr rs, std::vector<int> mat, std::vector<int> inv, int len)
      : rs_(std::move(rs)), mat_(std::move(mat)), inv_(std::move(inv)), len_(len) {}

  Root apply(const std::vector<int>& m, const Root& r) const {
    const int n = rs_->rank();
    if (static_cast<int>(r.coords.size()) != n)
      fail(errc::unknown_root, "coordinate vector has wrong rank");
    std::vector<int> out(n, 0);
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int j = 0; j < n; ++j) s += m[static_cast<std::size_t>(i) * n + j] * r.coords[j];
      out[i] = s;
    }
    return Root(std::move(out));
  }

  RootSystemPtr rs_;
  std::vector<int> mat_, inv_;  // row-major; column j = coordinates of w(alpha_j)
  int len_ = 0;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept {
    return detail::VecIntHash{}(w.key());
  }
};

// l(s_i * u) < l(u)
inline bool left_descent(const WeylElement& u, int i) {
  return !u.act_inverse(u.system()->simple_root(i)).is_positive();
}

// l(u * s_i) < l(u)
inline bool right_descent(const WeylElement& u, int i) {
  return !u.act(u.system()->simple_root(i)).is_positive();
}

inline WeylElement element_from_word(RootSystemPtr rs, const std::vector<int>& word) {
  WeylElement w = WeylElement::identity(rs);
  for (int i : word) w = w * WeylElement::simple(rs, i);
  return w;
}

// Lexicographically smallest reduced word, built by repeatedly taking the
// smallest left descent.
inline std::vector<int> reduced_word(const WeylElement& u) {
  std::vector<int> word;
  WeylElement w = u;
  while (!w.is_identity()) {
    for (int i = 0; i < w.system()->rank(); ++i) {
      if (left_descent(w, i)) {
        word.push_back(i);
        w = WeylElement::simple(w.system(), i) * w;
        break;
      }
    }
  }
  return word;
}

inline std::vector<std::vector<int>> all_reduced_words(const WeylElement& u) {
  if (u.is_identity()) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < u.system()->rank(); ++i) {
    if (!left_descent(u, i)) continue;
    for (auto& tail : all_reduced_words(WeylElement::simple(u.system(), i) * u)) {
      std::vector<int> word;
      word.reserve(tail.size() + 1);
      word.push_back(i);
      word.insert(word.end(), tail.begin(), tail.end());
      out.push_back(std::move(word));
    }
  }
  return out;
}

// Words are serialized as comma-free strings of simple indices in base 36;
// for ranks <= 3 the letter aliases a=0, b=1, c=2 are also accepted and used
// for display.
inline std::string format_word(const RootSystem& rs, const std::vector<int>& word) {
  std::string s;
  for (int i : word) {
    if (rs.rank() <= 3)
      s += static_cast<char>('a' + i);
    else
      s += (i < 10) ? static_cast<char>('0' + i) : static_cast<char>('a' + (i - 10));
  }
  return s;
}

inline std::vector<int> parse_word(const RootSystem& rs, std::string_view s) {
  std::vector<int> word;
  for (char ch : s) {
    int v;
    if (ch >= '0' && ch <= '9')
      v = ch - '0';
    else if (ch >= 'a' && ch <= 'z')
      v = rs.rank() <= 3 ? (ch - 'a') : (ch - 'a' + 10);
    else if (ch >= 'A' && ch <= 'Z')
      v = rs.rank() <= 3 ? (ch - 'A') : (ch - 'A' + 10);
    else
      fail(errc::bad_input, std::string("bad character '") + ch + "' in word");
    if (v < 0 || v >= rs.rank())
      fail(errc::bad_input, std::string("letter '") + ch + "' is out of range for " + rs.name());
    word.push_back(v);
  }
  return word;
}

inline std::string word_string(const WeylElement& u) {
  return format_word(*u.system(), reduced_word(u));
}

// The reflection fixing the wall of beta: peel beta down to a simple root by
// height-reducing simple reflections and conjugate.
inline WeylElement reflection_for_root(const RootSystemPtr& rs, const Root& beta) {
  if (!rs->contains(beta)) fail(errc::unknown_root, beta.str() + " is not a root of " + rs->name());
  Root cur = canonical_positive(beta);
  std::vector<int> conj;
  for (;;) {
    int simple = -1;
    for (int i = 0; i < rs->rank(); ++i)
      if (cur == rs->simple_root(i)) {
        simple = i;
        break;
      }
    if (simple >= 0) {
      WeylElement w = WeylElement::simple(rs, simple);
      for (auto it = conj.rbegin(); it != conj.rend(); ++it) {
        WeylElement s = WeylElement::simple(rs, *it);
        w = s * w * s;
      }
      return w;
    }
    for (int i = 0; i < rs->rank(); ++i) {
      if (rs->pairing(i, cur) > 0) {
        conj.push_back(i);
        cur = rs->reflect_simple(i, cur);
        break;
      }
    }
  }
}

// Chevalley-Bruhat order via the descent recursion, memoized per root system:
// pick s with l(sw) < l(w); then u <= w iff (su <= sw if su < u, else u <= sw).
inline bool bruhat_leq(const WeylElement& u, const WeylElement& w) {
  u.check_same_system(w);
  if (u == w) return true;
  if (u.length() >= w.length()) return false;
  if (u.is_identity()) return true;

  std::vector<int> key = u.key();
  key.insert(key.end(), w.key().begin(), w.key().end());
  auto& cache = u.system()->bruhat_cache();
  if (auto hit = cache.find(key)) return *hit;

  int s = 0;
  while (!left_descent(w, s)) ++s;
  WeylElement si = WeylElement::simple(w.system(), s);
  WeylElement sw = si * w;
  WeylElement su = si * u;
  bool result = su.length() < u.length() ? bruhat_leq(su, sw) : bruhat_leq(u, sw);
  cache.store(std::move(key), result);
  return result;
}

// Standard parabolic subsets are plain sorted index lists.
using ParabolicType = std::vector<int>;

inline ParabolicType normalize_parabolic(const RootSystem& rs, std::vector<int> t) {
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  for (int i : t)
    if (i < 0 || i >= rs.rank())
      fail(errc::bad_input, "parabolic index " + std::to_string(i) + " out of range for " + rs.name());
  return t;
}

// Positive roots supported on the simple roots of t.
inline std::vector<Root> levi_positive_roots(const RootSystem& rs, const ParabolicType& t) {
  std::vector<bool> in_t(rs.rank(), false);
  for (int i : t) in_t[i] = true;
  std::vector<Root> out;
  for (const Root& r : rs.positive_roots()) {
    bool ok = true;
    for (int j = 0; j < rs.rank(); ++j)
      if (r.coords[j] != 0 && !in_t[j]) {
        ok = false;
        break;
      }
    if (ok) out.push_back(r);
  }
  return out;
}

// Minimal-length representative of u * W_t, obtained by stripping right
// descents lying in t.
inline WeylElement min_coset_rep(const WeylElement& u, const ParabolicType& t) {
  WeylElement w = u;
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (int i : t) {
      if (right_descent(w, i)) {
        w = w * WeylElement::simple(w.system(), i);
        stripped = true;
        break;
      }
    }
  }
  return w;
}

inline bool is_min_coset_rep(const WeylElement& u, const ParabolicType& t) {
  for (int i : t)
    if (right_descent(u, i)) return false;
  return true;
}

namespace detail {

inline std::vector<WeylElement> sorted_by_length_and_word(std::vector<WeylElement> v) {
  std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
  keyed.reserve(v.size());
  for (std::size_t k = 0; k < v.size(); ++k) keyed.emplace_back(reduced_word(v[k]), k);
  std::sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<WeylElement> out;
  out.reserve(v.size());
  for (const auto& [word, k] : keyed) out.push_back(v[k]);
  return out;
}

}  // namespace detail

// { v : u <= v <= w }, by downward closure over coatoms starting from w.
// Ordered by length, then by canonical word.
inline std::vector<WeylElement> enumerate_interval(const WeylElement& u, const WeylElement& w) {
  u.check_same_system(w);
  if (!bruhat_leq(u, w)) fail(errc::not_comparable, "interval endpoints are not comparable");

  const RootSystemPtr& rs = u.system();
  std::vector<WeylElement> reflections;
  for (const Root& b : rs->positive_roots()) reflections.push_back(reflection_for_root(rs, b));

  std::set<std::vector<int>> seen{w.key()};
  std::deque<WeylElement> queue{w};
  std::vector<WeylElement> out{w};
  while (!queue.empty()) {
    WeylElement z = queue.front();
    queue.pop_front();
    for (const WeylElement& t : reflections) {
      WeylElement z2 = t * z;
      if (z2.length() != z.length() - 1) continue;
      if (!seen.insert(z2.key()).second) continue;
      if (!bruhat_leq(u, z2)) continue;
      queue.push_back(z2);
      out.push_back(std::move(z2));
    }
  }
  return detail::sorted_by_length_and_word(std::move(out));
}

// The whole group, by closure under the generators.  Ordered by length, then
// by canonical word.  Intended for desk-scale sweeps.
inline std::vector<WeylElement> enumerate_group(const RootSystemPtr& rs) {
  std::set<std::vector<int>> seen;
  std::deque<WeylElement> queue{WeylElement::identity(rs)};
  seen.insert(queue.front().key());
  std::vector<WeylElement> out{queue.front()};
  while (!queue.empty()) {
    WeylElement w = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs->rank(); ++i) {
      WeylElement w2 = w * WeylElement::simple(rs, i);
      if (seen.insert(w2.key()).second) {
        queue.push_back(w2);
        out.push_back(std::move(w2));
      }
    }
  }
  return detail::sorted_by_length_and_word(std::move(out));
}

}  // namespace schubert
