#include "ctube/verify.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <set>

#include "ctube/character.hpp"
#include "ctube/errors.hpp"
#include "ctube/tube.hpp"

namespace ctube {

namespace {

using Clock = std::chrono::steady_clock;

// Collects counterexamples for one check, keeping the first kMaxCounterexamples.
class Check {
 public:
  explicit Check(std::string name) : name_(std::move(name)) {}

  void fail(std::string what) {
    if (failures_.size() < kMaxCounterexamples) failures_.push_back(std::move(what));
    ++failure_count_;
  }
  void fail_all(const std::vector<std::string>& items) {
    for (const auto& s : items) fail(s);
  }
  bool ok() const { return failure_count_ == 0; }

  CheckResult result(std::string summary) const {
    if (ok()) return {name_, true, std::move(summary)};
    std::string d;
    for (const auto& f : failures_) d += (d.empty() ? "" : "; ") + f;
    if (failure_count_ > failures_.size()) {
      d += "; (+" + std::to_string(failure_count_ - failures_.size()) + " more)";
    }
    return {name_, false, d};
  }

 private:
  std::string name_;
  std::vector<std::string> failures_;
  std::size_t failure_count_ = 0;
};

// Runs fn(i) for i in [0, count), in parallel when asked. Each call writes
// only to its own slot of the caller's result arrays, so the aggregated
// output does not depend on scheduling.
template <class Fn>
void for_each_index(std::size_t count, Execution exec, Fn&& fn) {
  const bool parallel = exec == Execution::parallel;
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t i = 0; i < count; ++i) {
    try {
      fn(i);
    } catch (...) {
#pragma omp critical(ctube_verify_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

void require_rank(int rank) {
  if (rank < 2) throw Error("verification needs rank >= 2, got " + std::to_string(rank));
}

std::map<TubeObject, LaurentPoly, decltype(&canonical_less)> character_table(int rank) {
  std::map<TubeObject, LaurentPoly, decltype(&canonical_less)> table(&canonical_less);
  for (const auto& x : rigid_indecomposables(rank)) table.emplace(x, x_closed_form(x));
  return table;
}

std::vector<LaurentPoly> characters_of(const MaximalRigid& r) {
  std::vector<LaurentPoly> out;
  for (const auto& s : r.summands()) out.push_back(x_closed_form(s));
  return out;
}

std::string where(const MaximalRigid& r, const TubeObject& m) {
  return "R=" + to_string(r) + " M=" + short_text(m);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t c = 1;
  for (std::size_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

VerificationReport finish(int rank, std::vector<CheckResult> checks, Clock::time_point start) {
  VerificationReport r;
  r.rank = rank;
  r.checks = std::move(checks);
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return r;
}

}  // namespace

bool VerificationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

VerificationReport check_mutation_relations(int rank, Execution exec) {
  require_rank(rank);
  const auto start = Clock::now();
  const auto nodes = enumerate_maximal_rigid(rank);
  const auto chars = character_table(rank);

  struct Slot {
    std::vector<std::string> failures;
    std::size_t dim1 = 0, dim2 = 0;
  };
  std::vector<Slot> slots(nodes.size());
  for_each_index(nodes.size(), exec, [&](std::size_t v) {
    const MaximalRigid& r = nodes[v];
    for (const auto& m : r.summands()) {
      try {
        ExchangeTriangles tri = exchange_triangles(r, m);
        (tri.ext_dim == 2 ? slots[v].dim2 : slots[v].dim1) += 1;
        LaurentPoly lhs = chars.at(m) * chars.at(tri.partner);
        LaurentPoly rhs = x_of_rigid_sum(tri.middle) + x_of_rigid_sum(tri.middle_prime);
        if (lhs != rhs) {
          slots[v].failures.push_back(where(r, m) + " M*=" + short_text(tri.partner) + ": " +
                                      canonical_text(lhs) + " != " + canonical_text(rhs));
        }
      } catch (const std::exception& e) {
        slots[v].failures.push_back(where(r, m) + ": " + e.what());
      }
    }
  });

  Check relation("mutation-relation");
  std::size_t dim1 = 0, dim2 = 0;
  for (const auto& s : slots) {
    relation.fail_all(s.failures);
    dim1 += s.dim1;
    dim2 += s.dim2;
  }
  const std::string counts =
      "ext-dim-1 pairs=" + std::to_string(dim1) + ", ext-dim-2 pairs=" + std::to_string(dim2);
  Check kinds("exchange-kinds");
  if (rank >= 3 && (dim1 == 0 || dim2 == 0)) kinds.fail("missing an exchange kind: " + counts);
  if (rank == 2 && dim2 == 0) kinds.fail("no ext-dim-2 pair at rank 2");

  return finish(rank,
                {relation.result(std::to_string(dim1 + dim2) + " exchanges over " +
                                 std::to_string(nodes.size()) + " maximal rigid objects"),
                 kinds.result(counts)},
                start);
}

VerificationReport check_bijection(int rank, Execution exec, std::size_t node_limit) {
  require_rank(rank);
  const auto start = Clock::now();
  const MaximalRigid t = initial_maximal_rigid(rank);
  const ExchangeGraph g = enumerate_exchange_graph(initial_seed(exchange_matrix(t)), node_limit, exec);
  const auto chars = character_table(rank);
  const auto nodes = enumerate_maximal_rigid(rank);
  const std::size_t vars = static_cast<std::size_t>(rank) * static_cast<std::size_t>(rank - 1);
  const std::size_t clusters = binomial(static_cast<std::size_t>(2 * rank - 2),
                                        static_cast<std::size_t>(rank - 1));

  Check initial("initial-cluster");
  for (std::size_t i = 0; i < t.summands().size(); ++i) {
    LaurentPoly xi = LaurentPoly::variable(static_cast<std::size_t>(rank - 1), i);
    if (chars.at(t.summands()[i]) != xi) {
      initial.fail("X" + short_text(t.summands()[i]) + " = " +
                   canonical_text(chars.at(t.summands()[i])) + ", expected " + canonical_text(xi));
    }
  }

  Check injective("injective");
  std::map<LaurentPoly, TubeObject> seen;
  for (const auto& [x, p] : chars) {
    auto [it, inserted] = seen.try_emplace(p, x);
    if (!inserted) {
      injective.fail(short_text(it->second) + " and " + short_text(x) + " share " + canonical_text(p));
    }
  }

  Check counts("counts");
  if (chars.size() != vars) counts.fail(std::to_string(chars.size()) + " rigid indecomposables");
  if (g.variables.size() != vars) counts.fail(std::to_string(g.variables.size()) + " cluster variables");
  if (g.nodes.size() != clusters) counts.fail(std::to_string(g.nodes.size()) + " clusters");
  if (nodes.size() != clusters) counts.fail(std::to_string(nodes.size()) + " maximal rigid objects");

  Check variable_set("variable-set");
  std::set<LaurentPoly> image;
  for (const auto& [x, p] : chars) image.insert(p);
  for (const auto& v : g.variables) {
    if (!image.contains(v)) variable_set.fail("BFS variable " + canonical_text(v) + " is no character");
  }
  for (const auto& [x, p] : chars) {
    if (!std::binary_search(g.variables.begin(), g.variables.end(), p)) {
      variable_set.fail("X" + short_text(x) + " = " + canonical_text(p) + " is no BFS variable");
    }
  }

  // Each maximal rigid R, with cluster (X_{R_i}) and matrix A_R, must be one
  // of the BFS seeds, and distinct R must give distinct seeds.
  std::map<Seed, std::size_t, bool (*)(const Seed&, const Seed&)> seed_id(
      [](const Seed& a, const Seed& b) {
        if (a.cluster != b.cluster) return a.cluster < b.cluster;
        return a.matrix < b.matrix;
      });
  for (std::size_t v = 0; v < g.nodes.size(); ++v) seed_id.emplace(g.nodes[v], v);
  std::vector<std::ptrdiff_t> image_of(nodes.size(), -1);
  std::vector<std::string> errors(nodes.size());
  for_each_index(nodes.size(), exec, [&](std::size_t v) {
    try {
      Seed s = canonical_seed(Seed(characters_of(nodes[v]), exchange_matrix(nodes[v])));
      auto it = seed_id.find(s);
      if (it == seed_id.end()) {
        errors[v] = "R=" + to_string(nodes[v]) + " gives no BFS seed";
      } else {
        image_of[v] = static_cast<std::ptrdiff_t>(it->second);
      }
    } catch (const std::exception& e) {
      errors[v] = "R=" + to_string(nodes[v]) + ": " + e.what();
    }
  });
  Check bijection("cluster-bijection");
  std::map<std::ptrdiff_t, std::size_t> hit;
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (!errors[v].empty()) {
      bijection.fail(errors[v]);
      continue;
    }
    auto [it, inserted] = hit.try_emplace(image_of[v], v);
    if (!inserted) {
      bijection.fail("R=" + to_string(nodes[it->second]) + " and R=" + to_string(nodes[v]) +
                     " give the same seed");
    }
  }
  if (bijection.ok() && hit.size() != g.nodes.size()) {
    bijection.fail(std::to_string(g.nodes.size() - hit.size()) + " BFS seeds not reached");
  }

  const std::string summary = std::to_string(g.variables.size()) + " variables, " +
                              std::to_string(g.nodes.size()) + " clusters";
  return finish(rank,
                {initial.result("X_{T_i} = x_i"), injective.result(std::to_string(chars.size()) + " distinct characters"),
                 counts.result(summary), variable_set.result(summary),
                 bijection.result(std::to_string(nodes.size()) + " maximal rigid objects onto " +
                                  std::to_string(g.nodes.size()) + " seeds")},
                start);
}

bool is_type_c_cartan(const IntMatrix& c) {
  const std::size_t r = c.dim();
  if (r == 0) return false;
  std::vector<std::vector<std::size_t>> adj(r);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (c(i, i) != 2) return false;
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) continue;
      if (c(i, j) > 0 || (c(i, j) == 0) != (c(j, i) == 0)) return false;
      if (c(i, j) != 0) adj[i].push_back(j);
    }
    edges += adj[i].size();
  }
  if (r == 1) return true;
  edges /= 2;
  if (edges != r - 1) return false;
  // connected with max degree 2 and r-1 edges: a path
  std::vector<bool> seen(r, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t i = stack.back();
    stack.pop_back();
    if (adj[i].size() > 2) return false;
    for (std::size_t j : adj[i]) {
      if (!seen[j]) {
        seen[j] = true;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  if (reached != r) return false;

  std::size_t doubles = 0;
  bool long_leaf = false;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j : adj[i]) {
      if (j < i) continue;
      const int prod = c(i, j) * c(j, i);
      if (prod == 1) continue;
      if (prod != 2) return false;
      ++doubles;
      // u is the end with c_uv = -1 (the long root); it must be a leaf.
      const std::size_t u = c(i, j) == -1 ? i : j;
      long_leaf = adj[u].size() == 1;
    }
  }
  return doubles == 1 && long_leaf;
}

VerificationReport check_cluster_structure(int rank, Execution exec) {
  require_rank(rank);
  const auto start = Clock::now();
  const auto nodes = enumerate_maximal_rigid(rank);

  Check cartan("cartan-type");
  const IntMatrix c = cartan_part(exchange_matrix(initial_maximal_rigid(rank)));
  if (!is_type_c_cartan(c)) cartan.fail("Cartan part of A_T is " + to_string(c));

  struct Slot {
    std::vector<std::string> matrix, middles, symmetrizable;
  };
  std::vector<Slot> slots(nodes.size());
  for_each_index(nodes.size(), exec, [&](std::size_t v) {
    const MaximalRigid& r = nodes[v];
    Slot& out = slots[v];
    try {
      const ExchangeMatrix a = exchange_matrix(r);
      if (skew_symmetrizer(a).empty()) {
        out.symmetrizable.push_back("R=" + to_string(r) + ": A_R = " + to_string(a));
      }
      for (std::size_t i = 0; i < r.summands().size(); ++i) {
        const TubeObject& m = r.summands()[i];
        ExchangeTriangles tri = exchange_triangles(r, m);
        for (const auto& s : tri.middle.summands()) {
          if (tri.middle_prime.multiplicity(s) > 0) {
            out.middles.push_back(where(r, m) + ": " + short_text(s) + " in both E and E'");
            break;
          }
        }
        std::vector<TubeObject> next = r.summands();
        next[i] = tri.partner;
        const ExchangeMatrix lhs = mutate_matrix(a, i);
        const ExchangeMatrix rhs = exchange_matrix(rank, next);
        if (lhs != rhs) {
          out.matrix.push_back(where(r, m) + ": mu(A_R) = " + to_string(lhs) +
                               ", A_{mu R} = " + to_string(rhs));
        }
      }
    } catch (const std::exception& e) {
      out.matrix.push_back("R=" + to_string(r) + ": " + e.what());
    }
  });

  Check matrix("matrix-mutation"), middles("middles-disjoint"), symm("skew-symmetrizable");
  for (const auto& s : slots) {
    matrix.fail_all(s.matrix);
    middles.fail_all(s.middles);
    symm.fail_all(s.symmetrizable);
  }
  const std::string scope = std::to_string(nodes.size()) + " maximal rigid objects, " +
                            std::to_string(nodes.size() * static_cast<std::size_t>(rank - 1)) +
                            " directions";
  return finish(rank,
                {cartan.result("type C_" + std::to_string(rank - 1)), matrix.result(scope),
                 middles.result(scope), symm.result(scope)},
                start);
}

VerificationReport check_positivity_and_laurent(int rank, Execution exec, std::size_t node_limit) {
  require_rank(rank);
  const auto start = Clock::now();
  Check division("exact-division");
  std::vector<LaurentPoly> variables;
  try {
    const Seed s0 = initial_seed(exchange_matrix(initial_maximal_rigid(rank)));
    variables = enumerate_exchange_graph(s0, node_limit, exec).variables;
  } catch (const NotDivisible& e) {
    division.fail(e.what());
  }

  Check bfs("bfs-positive"), chars("character-positive"), denominators("denominators");
  for (const auto& v : variables) {
    if (!v.has_positive_coefficients()) bfs.fail(canonical_text(v));
    bool initial = v.is_monomial() && v.leading().coeff == 1 && v.leading().mono.degree() == 1 &&
                   std::ranges::all_of(v.leading().mono.exps(), [](int e) { return e >= 0; });
    bool has_denominator = false;
    for (const auto& t : v.terms())
      for (int e : t.mono.exps()) has_denominator = has_denominator || e < 0;
    if (!initial && !has_denominator) denominators.fail(canonical_text(v) + " has no denominator");
  }
  for (const auto& x : rigid_indecomposables(rank)) {
    LaurentPoly p = x_closed_form(x);
    if (!p.has_positive_coefficients()) chars.fail("X" + short_text(x) + " = " + canonical_text(p));
  }

  const std::string n_vars = std::to_string(variables.size()) + " variables";
  return finish(rank,
                {division.result("no failed division"), bfs.result(n_vars),
                 chars.result(std::to_string(rank * (rank - 1)) + " characters"),
                 denominators.result(n_vars)},
                start);
}

VerificationReport check_all(int rank, Execution exec, std::size_t node_limit) {
  const auto start = Clock::now();
  VerificationReport all;
  all.rank = rank;
  for (auto r : {check_mutation_relations(rank, exec), check_bijection(rank, exec, node_limit),
                 check_cluster_structure(rank, exec),
                 check_positivity_and_laurent(rank, exec, node_limit)}) {
    all.checks.insert(all.checks.end(), r.checks.begin(), r.checks.end());
  }
  all.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return all;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["rank"] = r.rank;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  }
  j["elapsedMs"] = r.elapsed.count();
  return j;
}

std::string to_text(const VerificationReport& r) {
  std::string out;
  for (const auto& c : r.checks) {
    out += (c.pass ? "PASS " : "FAIL ") + c.name + ": " + c.detail + "\n";
  }
  return out;
}

}  // namespace ctube
