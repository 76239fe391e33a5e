#pragma once

#include <string>
#include <vector>

#include "schubert/kl.hpp"
#include "schubert/tangent.hpp"

namespace schubert {

// Carrell-Peterson property: every v in [u, w] sees exactly l(w) positive
// roots beta with s_beta * v <= w.  Borel case only.
inline bool property_p(const WeylElement& u, const WeylElement& w) {
  u.check_same_system(w);
  if (!bruhat_leq(u, w))
    fail(errc::not_comparable, "'" + word_string(u) + "' is not below '" + word_string(w) + "'");
  const RootSystemPtr& rs = u.system();
  for (const WeylElement& v : enumerate_interval(u, w)) {
    int count = 0;
    for (const Root& beta : rs->positive_roots())
      if (bruhat_leq(reflection_for_root(rs, beta) * v, w)) ++count;
    if (count != w.length()) return false;
  }
  return true;
}

// The dimension criterion: rationally smooth at u iff the combinatorial
// tangent space has dimension l(w) at every v in [u, w].  Borel case only.
inline bool rationally_smooth_at(const WeylElement& u, const WeylElement& w) {
  u.check_same_system(w);
  if (!bruhat_leq(u, w))
    fail(errc::not_comparable, "'" + word_string(u) + "' is not below '" + word_string(w) + "'");
  for (const WeylElement& v : enumerate_interval(u, w))
    if (weights_closed_form(v, w, {}).dim() != w.length()) return false;
  return true;
}

struct SmoothnessReport {
  WeylElement w;
  int length = 0;

  struct Point {
    WeylElement u;
    int dim = 0;
    bool rationally_smooth = false;
    KLPolynomial kl;
  };
  std::vector<Point> points;  // all u <= w, by length then canonical word
  bool rationally_smooth_everywhere = false;
};

inline SmoothnessReport smoothness_report(const WeylElement& w) {
  SmoothnessReport report{w, w.length(), {}, false};

  const std::vector<WeylElement> below = enumerate_interval(WeylElement::identity(w.system()), w);
  std::vector<int> dims;
  dims.reserve(below.size());
  for (const WeylElement& v : below) dims.push_back(weights_closed_form(v, w, {}).dim());

  for (std::size_t k = 0; k < below.size(); ++k) {
    const WeylElement& u = below[k];
    bool smooth = true;
    for (std::size_t m = 0; m < below.size(); ++m)
      if (dims[m] != w.length() && bruhat_leq(u, below[m])) {
        smooth = false;
        break;
      }
    report.points.push_back(SmoothnessReport::Point{u, dims[k], smooth, kl_polynomial(u, w)});
  }
  report.rationally_smooth_everywhere = true;
  for (const auto& p : report.points)
    report.rationally_smooth_everywhere &= p.rationally_smooth;
  return report;
}

// One-line permutation form for type A systems: rank n acts as the symmetric
// group on n+1 letters.
inline std::vector<int> one_line_permutation(const WeylElement& u) {
  const RootSystem& rs = *u.system();
  if (rs.name().empty() || rs.name()[0] != 'A')
    fail(errc::bad_input, "one-line forms are only defined for type A systems");
  std::vector<int> line(static_cast<std::size_t>(rs.rank()) + 1);
  for (std::size_t k = 0; k < line.size(); ++k) line[k] = static_cast<int>(k) + 1;
  for (int i : reduced_word(u)) std::swap(line[static_cast<std::size_t>(i)], line[static_cast<std::size_t>(i) + 1]);
  return line;
}

}  // namespace schubert
