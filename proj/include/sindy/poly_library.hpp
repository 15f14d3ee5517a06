#pragma once

#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "sindy/errors.hpp"

namespace sindy {

// One monomial over the state variables, e.g. exponents {2,1} == x^2 v.
struct TermDescriptor {
  std::vector<int> exponents;  // one entry per state variable
  std::string name;

  int total_degree() const {
    int d = 0;
    for (int e : exponents) d += e;
    return d;
  }
  bool is_constant() const { return total_degree() == 0; }
  bool operator==(const TermDescriptor& other) const {
    return exponents == other.exponents;
  }
};

inline std::string term_name(const std::vector<int>& exponents,
                             const std::vector<std::string>& state_names) {
  std::string s;
  for (std::size_t k = 0; k < exponents.size(); ++k) {
    if (exponents[k] == 0) continue;
    if (!s.empty()) s += ' ';
    s += state_names[k];
    if (exponents[k] > 1) s += '^' + std::to_string(exponents[k]);
  }
  return s.empty() ? "1" : s;
}

// All monomials of total degree <= degree, ordered by (total degree, then
// graded lexicographic on exponents). Count is C(n_states + degree, degree).
inline std::vector<TermDescriptor> polynomial_terms(
    int n_states, int degree,
    const std::vector<std::string>& state_names = {"x", "v"}) {
  if (n_states < 1) throw std::invalid_argument("need at least one state");
  if (degree < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<std::string> names = state_names;
  while (static_cast<int>(names.size()) < n_states)
    names.push_back("s" + std::to_string(names.size()));

  std::vector<TermDescriptor> terms;
  std::vector<int> expo(n_states, 0);
  // Lexicographically descending enumeration of compositions of d.
  auto emit = [&](auto&& self, int var, int remaining) -> void {
    if (var == n_states - 1) {
      expo[var] = remaining;
      terms.push_back({expo, term_name(expo, names)});
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      expo[var] = e;
      self(self, var + 1, remaining - e);
    }
    expo[var] = 0;
  };
  for (int d = 0; d <= degree; ++d) emit(emit, 0, d);
  return terms;
}

// Candidate-library matrix: rows = samples, columns = terms.
struct LibraryMatrix {
  Eigen::MatrixXd values;
  std::vector<TermDescriptor> terms;
};

inline LibraryMatrix evaluate_library(const Eigen::MatrixXd& states,
                                      const std::vector<TermDescriptor>& terms) {
  if (!states.allFinite())
    throw validation_error("state matrix contains non-finite entries");
  for (const auto& term : terms)
    if (static_cast<Eigen::Index>(term.exponents.size()) != states.cols())
      throw std::invalid_argument("term arity does not match state count");

  LibraryMatrix lib;
  lib.terms = terms;
  lib.values.resize(states.rows(), static_cast<Eigen::Index>(terms.size()));
  for (std::size_t j = 0; j < terms.size(); ++j) {
    Eigen::VectorXd col = Eigen::VectorXd::Ones(states.rows());
    for (std::size_t k = 0; k < terms[j].exponents.size(); ++k)
      for (int e = 0; e < terms[j].exponents[k]; ++e)
        col.array() *= states.col(static_cast<Eigen::Index>(k)).array();
    lib.values.col(static_cast<Eigen::Index>(j)) = col;
  }
  return lib;
}

inline nlohmann::json to_json(const TermDescriptor& term) {
  return {{"name", term.name}, {"exponents", term.exponents}};
}

}  // namespace sindy
