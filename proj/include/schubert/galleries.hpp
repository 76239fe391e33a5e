#pragma once

#include <algorithm>
#include <cassert>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "schubert/weyl.hpp"

namespace schubert {

// A minimal chamber-gallery type: a reduced word (i_r,...,i_1), read from the
// source end to the target end, together with the type t of the target face.
// The product of the word must be the minimal-length representative of its
// coset mod W_t.
//
// Step indices run j = r (source end) down to j = 1 (target end); position
// p = r - j in the stored arrays.  Serialization is left-to-right, source
// first, matching [gamma_r,...,gamma_1].
class GalleryType {
 public:
  static std::shared_ptr<const GalleryType> make(RootSystemPtr rs, std::vector<int> word,
                                                 ParabolicType target_type = {}) {
    target_type = normalize_parabolic(*rs, target_type);
    for (int i : word)
      if (i < 0 || i >= rs->rank()) fail(errc::bad_input, "word letter out of range");
    WeylElement w = element_from_word(rs, word);
    if (w.length() != static_cast<int>(word.size()))
      fail(errc::not_reduced, "'" + format_word(*rs, word) + "' is not a reduced word");
    if (!is_min_coset_rep(w, target_type))
      fail(errc::not_minimal_rep, "'" + format_word(*rs, word) +
                                      "' is not the minimal representative of its coset");
    return std::shared_ptr<const GalleryType>(
        new GalleryType(std::move(rs), std::move(word), std::move(target_type), std::move(w)));
  }

  const RootSystemPtr& system() const { return rs_; }
  const std::vector<int>& word() const { return word_; }
  const ParabolicType& target_type() const { return target_type_; }
  const WeylElement& top() const { return w_; }

  int r() const { return static_cast<int>(word_.size()); }
  int letter(int j) const {  // j in [1, r]
    if (j < 1 || j > r()) fail(errc::index_out_of_range, "step index out of range");
    return word_[static_cast<std::size_t>(r() - j)];
  }

  bool operator==(const GalleryType& other) const {
    return rs_.get() == other.rs_.get() && word_ == other.word_ && target_type_ == other.target_type_;
  }

 private:
  GalleryType(RootSystemPtr rs, std::vector<int> word, ParabolicType t, WeylElement w)
      : rs_(std::move(rs)), word_(std::move(word)), target_type_(std::move(t)), w_(std::move(w)) {}

  RootSystemPtr rs_;
  std::vector<int> word_;
  ParabolicType target_type_;
  WeylElement w_;
};

using GalleryTypePtr = std::shared_ptr<const GalleryType>;

inline GalleryTypePtr make_gallery_type(RootSystemPtr rs, std::vector<int> word,
                                        ParabolicType target_type = {}) {
  return GalleryType::make(std::move(rs), std::move(word), std::move(target_type));
}

// A combinatorial gallery of a fixed type: the choice vector [c_r,...,c_1],
// c_j = true meaning gamma_j = s_{i_j} and c_j = false meaning gamma_j = 1.
class Gallery {
 public:
  Gallery(GalleryTypePtr typ, std::vector<bool> choices)
      : typ_(std::move(typ)), choices_(std::move(choices)) {
    if (static_cast<int>(choices_.size()) != typ_->r())
      fail(errc::bad_input, "choice vector length does not match the gallery type");
  }

  const GalleryType& type() const { return *typ_; }
  const GalleryTypePtr& type_ptr() const { return typ_; }
  int r() const { return typ_->r(); }

  bool choice(int j) const {  // j in [1, r]
    if (j < 1 || j > r()) fail(errc::index_out_of_range, "step index out of range");
    return choices_[static_cast<std::size_t>(r() - j)];
  }
  const std::vector<bool>& choices() const { return choices_; }

  // Chamber elements w_l = gamma_r ... gamma_{l+1}; entry [l], l = 0..r, so
  // [r] is the identity and [0] the raw product.
  std::vector<WeylElement> chambers() const {
    const RootSystemPtr& rs = typ_->system();
    std::vector<WeylElement> out(static_cast<std::size_t>(r()) + 1, WeylElement::identity(rs));
    WeylElement pref = WeylElement::identity(rs);
    for (int k = 1; k <= r(); ++k) {
      if (choices_[static_cast<std::size_t>(k - 1)])
        pref = pref * WeylElement::simple(rs, typ_->word()[static_cast<std::size_t>(k - 1)]);
      out[static_cast<std::size_t>(r() - k)] = pref;
    }
    return out;
  }

  WeylElement raw_target() const { return chambers()[0]; }
  WeylElement target() const { return min_coset_rep(raw_target(), typ_->target_type()); }

  // "s1s" style display string, source to target.
  std::string display() const {
    std::string s;
    for (bool c : choices_) s += c ? 's' : '1';
    return s;
  }

  bool operator==(const Gallery& other) const {
    return type() == other.type() && choices_ == other.choices_;
  }
  bool operator!=(const Gallery& other) const { return !(*this == other); }

 private:
  GalleryTypePtr typ_;
  std::vector<bool> choices_;
};

struct WallInfo {
  Root wall;      // canonical positive representative
  bool crossing;  // false = bend
};

// Wall met at step j: the positive form of w_j(alpha_{i_j}).
inline WallInfo wall_at(const Gallery& g, int j) {
  if (j < 1 || j > g.r()) fail(errc::index_out_of_range, "step index out of range");
  const WeylElement w_j = g.chambers()[static_cast<std::size_t>(j)];
  Root wall = canonical_positive(w_j.act(g.type().system()->simple_root(g.type().letter(j))));
  return WallInfo{std::move(wall), g.choice(j)};
}

// All step walls at once; entry [j] for j = 1..r (entry [0] unused).
inline std::vector<WallInfo> walls_of(const Gallery& g) {
  const auto ch = g.chambers();
  std::vector<WallInfo> out(static_cast<std::size_t>(g.r()) + 1);
  for (int j = 1; j <= g.r(); ++j) {
    Root wall = canonical_positive(
        ch[static_cast<std::size_t>(j)].act(g.type().system()->simple_root(g.type().letter(j))));
    out[static_cast<std::size_t>(j)] = WallInfo{std::move(wall), g.choice(j)};
  }
  return out;
}

// Walls containing the target face: images of the Levi roots of the target
// type under the raw target.  Empty in the Borel case.
inline std::vector<Root> target_face_walls(const Gallery& g) {
  const RootSystemPtr& rs = g.type().system();
  const WeylElement w0 = g.raw_target();
  std::set<Root> walls;
  for (const Root& m : levi_positive_roots(*rs, g.type().target_type()))
    walls.insert(canonical_positive(w0.act(m)));
  return std::vector<Root>(walls.begin(), walls.end());
}

// A chamber w lies on the fundamental-chamber side of the wall of a positive
// root m iff w^-1(m) is positive.
inline bool on_base_side(const WeylElement& chamber, const Root& positive_wall) {
  return chamber.act_inverse(positive_wall).is_positive();
}

inline Gallery toggle(const Gallery& g, int j) {
  if (j < 1 || j > g.r()) fail(errc::index_out_of_range, "step index out of range");
  std::vector<bool> c = g.choices();
  c[static_cast<std::size_t>(g.r() - j)] = !c[static_cast<std::size_t>(g.r() - j)];
  return Gallery(g.type_ptr(), std::move(c));
}

// A buckle: steps j > i meet the same wall and every chamber strictly between
// stays on one side of it.  i = 0 is allowed when the target face itself lies
// on the wall of step j (only possible for a parabolic target type).
struct Buckle {
  int j = 0;
  int i = 0;
  Root wall;

  bool operator==(const Buckle& other) const = default;
};

inline std::vector<Buckle> find_buckles(const Gallery& g) {
  const auto ch = g.chambers();
  const auto ws = walls_of(g);
  const auto face_walls = target_face_walls(g);

  auto same_side = [&](const Root& wall, int lo, int hi) {
    // chambers w_l for hi >= l >= lo
    bool side = on_base_side(ch[static_cast<std::size_t>(hi)], wall);
    for (int l = hi - 1; l >= lo; --l)
      if (on_base_side(ch[static_cast<std::size_t>(l)], wall) != side) return false;
    return true;
  };

  std::vector<Buckle> out;
  for (int j = g.r(); j >= 1; --j) {
    for (int i = j - 1; i >= 1; --i) {
      if (ws[static_cast<std::size_t>(j)].wall != ws[static_cast<std::size_t>(i)].wall) continue;
      if (same_side(ws[static_cast<std::size_t>(j)].wall, i, j - 1))
        out.push_back(Buckle{j, i, ws[static_cast<std::size_t>(j)].wall});
    }
    const Root& wall = ws[static_cast<std::size_t>(j)].wall;
    if (std::find(face_walls.begin(), face_walls.end(), wall) != face_walls.end() &&
        same_side(wall, 0, j - 1))
      out.push_back(Buckle{j, 0, wall});
  }
  return out;
}

// Buckles not contained in a larger buckle on the same wall.
inline std::vector<Buckle> maximal_buckles(const Gallery& g) {
  const auto all = find_buckles(g);
  std::vector<Buckle> out;
  for (const Buckle& b : all) {
    bool contained = false;
    for (const Buckle& c : all)
      if (!(c == b) && c.wall == b.wall && c.j >= b.j && c.i <= b.i) {
        contained = true;
        break;
      }
    if (!contained) out.push_back(b);
  }
  return out;
}

// Reflect the part of the gallery strictly inside the buckle through its
// wall.  In choice coordinates this flips the steps at both ends of the
// buckle (only the top end if the buckle closes on the target face).  Returns
// the folded gallery and whether the fold went towards the fundamental
// chamber.
inline std::pair<Gallery, bool> part_fold(const Gallery& g, const Buckle& b) {
  const auto buckles = find_buckles(g);
  if (std::find(buckles.begin(), buckles.end(), b) == buckles.end())
    fail(errc::not_a_buckle, "the given (j, i, wall) triple is not a buckle of this gallery");

  Gallery folded = toggle(g, b.j);
  if (b.i >= 1) folded = toggle(folded, b.i);

  const auto ch = folded.chambers();
  bool towards = on_base_side(ch[static_cast<std::size_t>(b.j - 1)], b.wall);
#ifndef NDEBUG
  for (int l = b.j - 1; l >= b.i; --l)
    assert(on_base_side(ch[static_cast<std::size_t>(l)], b.wall) == towards);
#endif
  return {std::move(folded), towards};
}

// The canonical gallery above u: take the letters of a reduced sub-word of u
// as far to the right as possible.  It is the fixed point of part-foldings
// towards the fundamental chamber in its fiber.
inline Gallery gamma_uw(const GalleryTypePtr& typ, const WeylElement& u) {
  u.check_same_system(typ->top());
  if (!is_min_coset_rep(u, typ->target_type()))
    fail(errc::not_minimal_rep, "point is not a minimal coset representative");
  std::vector<bool> choices(static_cast<std::size_t>(typ->r()), false);
  WeylElement v = u;
  for (int j = 1; j <= typ->r(); ++j) {
    const int letter = typ->letter(j);
    if (right_descent(v, letter)) {
      choices[static_cast<std::size_t>(typ->r() - j)] = true;
      v = v * WeylElement::simple(typ->system(), letter);
    }
  }
  if (!v.is_identity())
    fail(errc::not_in_schubert,
         "'" + word_string(u) + "' is not below '" + format_word(*typ->system(), typ->word()) + "'");
  return Gallery(typ, std::move(choices));
}

// All 2^r galleries of the type, ordered by the choice vector read as a
// binary number, source end most significant ("111" < "11s" < ... < "sss").
inline std::vector<Gallery> all_galleries(const GalleryTypePtr& typ) {
  const int r = typ->r();
  std::vector<Gallery> out;
  out.reserve(static_cast<std::size_t>(1) << r);
  for (std::size_t k = 0; k < (static_cast<std::size_t>(1) << r); ++k) {
    std::vector<bool> choices(static_cast<std::size_t>(r), false);
    for (int p = 0; p < r; ++p) choices[static_cast<std::size_t>(p)] = (k >> (r - 1 - p)) & 1u;
    out.emplace_back(typ, std::move(choices));
  }
  return out;
}

// The galleries whose target coset is u, by exhaustive scan of all choice
// vectors.
inline std::vector<Gallery> enumerate_fiber(const GalleryTypePtr& typ, const WeylElement& u) {
  u.check_same_system(typ->top());
  if (!is_min_coset_rep(u, typ->target_type()))
    fail(errc::not_minimal_rep, "point is not a minimal coset representative");
  std::vector<Gallery> out;
  for (Gallery& g : all_galleries(typ))
    if (g.target() == u) out.push_back(std::move(g));
  return out;
}

}  // namespace schubert
