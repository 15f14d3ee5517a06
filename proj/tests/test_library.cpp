#include <doctest.h>

#include <set>

#include "sindy/poly_library.hpp"

using namespace sindy;

namespace {

long long binom(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("degree-3 library over (x, v) matches the canonical ordering") {
  auto terms = polynomial_terms(2, 3);
  REQUIRE(terms.size() == 10);
  const std::vector<std::string> expected = {"1",   "x",   "v",    "x^2",
                                             "x v", "v^2", "x^3",  "x^2 v",
                                             "x v^2", "v^3"};
  for (std::size_t i = 0; i < expected.size(); ++i)
    CHECK(terms[i].name == expected[i]);
  CHECK(terms.front().is_constant());
}

TEST_CASE("degree-0 and degree-5 counts") {
  CHECK(polynomial_terms(2, 0).size() == 1);
  CHECK(polynomial_terms(2, 5).size() == 21);  // C(7,5)
}

TEST_CASE("term count formula C(n+d, d) for n <= 4, d <= 6") {
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 6; ++d)
      CHECK(static_cast<long long>(polynomial_terms(n, d).size()) ==
            binom(n + d, d));
}

TEST_CASE("no duplicate descriptors") {
  auto terms = polynomial_terms(3, 4);
  std::set<std::vector<int>> seen;
  for (const auto& t : terms) CHECK(seen.insert(t.exponents).second);
}

TEST_CASE("library evaluation") {
  auto terms = polynomial_terms(2, 3);
  Eigen::MatrixXd states(2, 2);
  states << 2.0, 3.0,    // (x, v) = (2, 3)
      1.5, -2.0;         // (x, v) = (1.5, -2)
  auto lib = evaluate_library(states, terms);

  auto col_of = [&](const std::string& name) {
    for (std::size_t j = 0; j < lib.terms.size(); ++j)
      if (lib.terms[j].name == name) return static_cast<Eigen::Index>(j);
    FAIL("missing term");
    return Eigen::Index{0};
  };
  CHECK(lib.values(0, col_of("x v")) == 6.0);
  CHECK(lib.values(1, col_of("v^3")) == -8.0);
  CHECK(lib.values(1, col_of("x^2 v")) == -4.5);
  // constant column is all ones
  CHECK(lib.values.col(0).isOnes());
}

TEST_CASE("evaluation is exact on integer states") {
  auto terms = polynomial_terms(2, 6);
  Eigen::MatrixXd states(1, 2);
  states << 3.0, -2.0;
  auto lib = evaluate_library(states, terms);
  for (std::size_t j = 0; j < terms.size(); ++j) {
    double expected = 1.0;
    for (int e = 0; e < terms[j].exponents[0]; ++e) expected *= 3.0;
    for (int e = 0; e < terms[j].exponents[1]; ++e) expected *= -2.0;
    CHECK(lib.values(0, static_cast<Eigen::Index>(j)) == expected);
  }
}

TEST_CASE("non-finite states rejected") {
  Eigen::MatrixXd states(1, 2);
  states << 1.0, std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(evaluate_library(states, polynomial_terms(2, 2)),
                  validation_error);
}
