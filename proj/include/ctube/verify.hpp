#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "ctube/cluster.hpp"
#include "ctube/execution.hpp"

namespace ctube {

struct CheckResult {
  std::string name;
  bool pass;
  std::string detail;  // summary on success, counterexamples on failure
};

struct VerificationReport {
  int rank = 0;
  std::vector<CheckResult> checks;
  std::chrono::milliseconds elapsed{0};

  bool passed() const;
  const CheckResult* find(const std::string& name) const;
};

/// Counterexamples kept per check.
inline constexpr std::size_t kMaxCounterexamples = 100;

/// X_M X_{M*} = X_E + X_{E'} for every maximal rigid R and summand M.
VerificationReport check_mutation_relations(int rank, Execution exec = Execution::parallel);

/// Characters of rigid indecomposables against the seed-BFS variables, and
/// maximal rigid objects against the BFS seeds.
VerificationReport check_bijection(int rank, Execution exec = Execution::parallel,
                                   std::size_t node_limit = kDefaultNodeLimit);

/// mu_i(A_R) = A_{mu_i R} with the replaced summand kept in slot i, disjoint
/// middles, and the Cartan type of A_T.
VerificationReport check_cluster_structure(int rank, Execution exec = Execution::parallel);

/// Positive coefficients and exact exchange divisions along the seed BFS.
VerificationReport check_positivity_and_laurent(int rank, Execution exec = Execution::parallel,
                                                std::size_t node_limit = kDefaultNodeLimit);

/// All four, concatenated in the order above.
VerificationReport check_all(int rank, Execution exec = Execution::parallel,
                             std::size_t node_limit = kDefaultNodeLimit);

/// True when c is a Cartan matrix of type C_r under some labelling: the
/// Dynkin graph is a path, one end bond is double and the end vertex of that
/// bond is the long root (c_uv = -1, c_vu = -2). For r = 1 this is [2].
bool is_type_c_cartan(const IntMatrix& c);

/// {"rank":n,"checks":[{"name","pass","detail"}],"elapsedMs":int}
nlohmann::ordered_json to_json(const VerificationReport& r);

/// One line per check: "PASS name: detail" / "FAIL name: detail".
std::string to_text(const VerificationReport& r);

}  // namespace ctube
