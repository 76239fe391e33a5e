#include "catch2/catch_amalgamated.hpp"
#include "test_util.hpp"

using namespace schubert;
using namespace testutil;

TEST_CASE("KL polynomial basics") {
  auto rs = RootSystem::preset("B2");
  const WeylElement w = elem(rs, "aba");

  REQUIRE(kl_polynomial(w, w).coeffs() == std::vector<int>{1});
  REQUIRE(kl_polynomial(WeylElement::identity(rs), elem(rs, "a")).coeffs() == std::vector<int>{1});

  REQUIRE_THROWS_MATCHES(kl_polynomial(elem(rs, "a"), elem(rs, "b")), error,
                         Catch::Matchers::Predicate<error>([](const error& e) {
                           return e.code() == errc::not_comparable;
                         }));
}

TEST_CASE("dihedral groups have trivial KL polynomials") {
  for (const char* name : {"A2", "B2", "G2"}) {
    auto rs = RootSystem::preset(name);
    const auto group = enumerate_group(rs);
    for (const WeylElement& w : group)
      for (const WeylElement& u : group)
        if (bruhat_leq(u, w)) REQUIRE(kl_polynomial(u, w).is_one());
  }
}

TEST_CASE("the 3412 pattern produces 1 + q") {
  auto rs = RootSystem::preset("A3");
  const WeylElement w = elem(rs, "bacb");  // s_2 s_1 s_3 s_2 in 1-based labels
  REQUIRE(kl_polynomial(WeylElement::identity(rs), w).coeffs() == std::vector<int>{1, 1});

  // the nontrivial polynomials sit exactly below the singular locus 1324
  std::set<std::string> nontrivial;
  for (const WeylElement& u : enumerate_interval(WeylElement::identity(rs), w))
    if (!kl_polynomial(u, w).is_one()) {
      nontrivial.insert(word_string(u));
      REQUIRE(kl_polynomial(u, w).coeffs() == std::vector<int>{1, 1});
    }
  REQUIRE(nontrivial == std::set<std::string>{"", "b"});
}

TEST_CASE("degree bound and constant term over A3") {
  auto rs = RootSystem::preset("A3");
  const auto group = enumerate_group(rs);
  for (const WeylElement& w : group)
    for (const WeylElement& u : group) {
      if (!bruhat_leq(u, w)) continue;
      const KLPolynomial p = kl_polynomial(u, w);
      REQUIRE(p.coeff(0) == 1);
      for (int k = 0; k <= p.degree(); ++k) REQUIRE(p.coeff(k) >= 0);
      if (u != w) REQUIRE(2 * p.degree() <= w.length() - u.length() - 1);
    }
}
