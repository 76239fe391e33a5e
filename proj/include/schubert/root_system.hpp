#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "schubert/cartan.hpp"
#include "schubert/errors.hpp"

namespace schubert {

// A root written in the simple-root basis.  All roots of a finite system have
// coordinates of one uniform sign.
struct Root {
  std::vector<int> coords;

  Root() = default;
  explicit Root(std::vector<int> c) : coords(std::move(c)) {}

  int height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

  bool is_positive() const {
    for (int c : coords)
      if (c < 0) return false;
    return true;
  }

  Root operator-() const {
    Root r = *this;
    for (int& c : r.coords) c = -c;
    return r;
  }

  bool operator==(const Root& other) const = default;
  bool operator<(const Root& other) const {
    if (height() != other.height()) return height() < other.height();
    return coords < other.coords;
  }

  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords[i]);
    }
    return s + ")";
  }
};

inline Root canonical_positive(const Root& r) { return r.is_positive() ? r : -r; }

namespace detail {

struct VecIntHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(x));
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Mutex-guarded memo table keyed by flattened integer matrices.  Shared by
// the Bruhat-order test and the Kazhdan-Lusztig recursion; both are pure
// functions of their arguments, so concurrent readers/writers only ever race
// to insert identical values.
template <class V>
class SyncCache {
 public:
  std::optional<V> find(const std::vector<int>& key) const {
    std::lock_guard<std::mutex> g(m_);
    auto it = map_.find(key);
    if (it == map_.end()) return std::nullopt;
    return it->second;
  }

  void store(std::vector<int> key, V value) const {
    std::lock_guard<std::mutex> g(m_);
    map_.emplace(std::move(key), std::move(value));
  }

 private:
  mutable std::mutex m_;
  mutable std::unordered_map<std::vector<int>, V, VecIntHash> map_;
};

}  // namespace detail

// A finite crystallographic root system generated from a Cartan matrix by
// closing the simple roots under the simple reflections.  Immutable after
// construction; the embedded memo tables are internally synchronized.
class RootSystem {
 public:
  static constexpr std::size_t kDefaultPositiveBound = 10000;

  static std::shared_ptr<const RootSystem> build(const CartanMatrix& cartan,
                                                 std::string name = "custom",
                                                 std::size_t max_positive = kDefaultPositiveBound) {
    cartan.validate();
    const int n = cartan.rank();

    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(e);
    }
    while (!queue.empty()) {
      std::vector<int> r = queue.front();
      queue.pop_front();
      for (int i = 0; i < n; ++i) {
        int pair = 0;
        for (int j = 0; j < n; ++j) pair += cartan.a[i][j] * r[j];
        std::vector<int> img = r;
        img[i] -= pair;
        if (seen.insert(img).second) {
          bool has_pos = false, has_neg = false;
          for (int c : img) {
            has_pos |= c > 0;
            has_neg |= c < 0;
          }
          if (has_pos && has_neg)
            fail(errc::not_finite_type, "reflection closure produced a mixed-sign vector");
          queue.push_back(img);
          if (seen.size() > 2 * max_positive)
            fail(errc::not_finite_type,
                 "reflection closure exceeded " + std::to_string(max_positive) + " positive roots");
        }
      }
    }

    auto rs = std::shared_ptr<RootSystem>(new RootSystem());
    rs->cartan_ = cartan;
    rs->name_ = std::move(name);
    for (const auto& c : seen) {
      Root r(c);
      if (r.is_positive()) rs->positive_.push_back(std::move(r));
    }
    std::sort(rs->positive_.begin(), rs->positive_.end());
    rs->all_ = rs->positive_;
    for (const Root& r : rs->positive_) rs->all_.push_back(-r);
    for (std::size_t k = 0; k < rs->all_.size(); ++k) rs->index_.emplace(rs->all_[k].coords, static_cast<int>(k));
    return rs;
  }

  // Builds from a preset name such as "B2" (case-insensitive).
  static std::shared_ptr<const RootSystem> preset(const std::string& name) {
    auto p = parse_preset(name);
    if (!p) fail(errc::bad_input, "unknown root system preset '" + name + "'");
    return build(p->first, p->second);
  }

  const CartanMatrix& cartan() const { return cartan_; }
  const std::string& name() const { return name_; }
  int rank() const { return cartan_.rank(); }

  const std::vector<Root>& positive_roots() const { return positive_; }
  const std::vector<Root>& all_roots() const { return all_; }

  Root simple_root(int i) const {
    check_simple_index(i);
    std::vector<int> c(rank(), 0);
    c[i] = 1;
    return Root(std::move(c));
  }

  // Index into all_roots(), or -1 if the vector is not a root.
  int index_of(const Root& r) const {
    auto it = index_.find(r.coords);
    return it == index_.end() ? -1 : it->second;
  }

  bool contains(const Root& r) const { return index_of(r) >= 0; }

  // <r, alpha_i^vee>
  int pairing(int i, const Root& r) const {
    check_simple_index(i);
    int p = 0;
    for (int j = 0; j < rank(); ++j) p += cartan_.a[i][j] * r.coords[j];
    return p;
  }

  Root reflect_simple(int i, const Root& r) const {
    if (!contains(r)) fail(errc::unknown_root, r.str() + " is not a root of " + name_);
    Root img = r;
    img.coords[i] -= pairing(i, r);
    return img;
  }

  detail::SyncCache<bool>& bruhat_cache() const { return bruhat_cache_; }
  detail::SyncCache<std::vector<int>>& kl_cache() const { return kl_cache_; }

 private:
  RootSystem() = default;

  void check_simple_index(int i) const {
    if (i < 0 || i >= rank())
      fail(errc::index_out_of_range, "simple index " + std::to_string(i) + " out of range");
  }

  CartanMatrix cartan_;
  std::string name_;
  std::vector<Root> positive_;
  std::vector<Root> all_;  // positives first, then their negatives in the same order
  std::unordered_map<std::vector<int>, int, detail::VecIntHash> index_;

  mutable detail::SyncCache<bool> bruhat_cache_;
  mutable detail::SyncCache<std::vector<int>> kl_cache_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr build_root_system(const CartanMatrix& cartan, std::string name = "custom",
                                       std::size_t max_positive = RootSystem::kDefaultPositiveBound) {
  return RootSystem::build(cartan, std::move(name), max_positive);
}

inline Root reflect_simple(const RootSystem& rs, int i, const Root& r) {
  return rs.reflect_simple(i, r);
}

}  // namespace schubert
