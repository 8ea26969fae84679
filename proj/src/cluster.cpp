#include "ctube/cluster.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "ctube/errors.hpp"

namespace ctube {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error("IntMatrix: rows must form a square matrix");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  IntMatrix a(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw Error("IntMatrix: rows must form a square matrix");
    for (std::size_t j = 0; j < rows.size(); ++j) a(i, j) = rows[i][j];
  }
  return a;
}

std::vector<std::vector<int>> IntMatrix::rows() const {
  std::vector<std::vector<int>> r(dim_, std::vector<int>(dim_));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r[i][j] = (*this)(i, j);
  return r;
}

IntMatrix IntMatrix::permuted(const std::vector<std::size_t>& perm) const {
  IntMatrix r(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) r(i, j) = (*this)(perm[i], perm[j]);
  return r;
}

bool IntMatrix::is_sign_skew_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i) {
    if ((*this)(i, i) != 0) return false;
    for (std::size_t j = i + 1; j < dim_; ++j) {
      int x = (*this)(i, j), y = (*this)(j, i);
      if ((x == 0) != (y == 0)) return false;
      if (static_cast<long>(x) * y > 0) return false;
    }
  }
  return true;
}

bool IntMatrix::is_skew_symmetrized_by(const std::vector<int>& d) const {
  if (d.size() != dim_) return false;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (d[i] <= 0) return false;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (static_cast<long>(d[i]) * (*this)(i, j) != -static_cast<long>(d[j]) * (*this)(j, i))
        return false;
    }
  }
  return true;
}

std::string to_string(const IntMatrix& a) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (j) os << ',';
      os << a(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& a, std::size_t k) {
  const std::size_t r = a.dim();
  if (k >= r) {
    throw std::out_of_range("mutation direction " + std::to_string(k + 1) + " outside [1, " +
                            std::to_string(r) + "]");
  }
  ExchangeMatrix out(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (i == k || j == k) {
        out(i, j) = -a(i, j);
      } else {
        out(i, j) = a(i, j) + (std::abs(a(i, k)) * a(k, j) + a(i, k) * std::abs(a(k, j))) / 2;
      }
    }
  }
  return out;
}

IntMatrix cartan_part(const ExchangeMatrix& a) {
  IntMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = (i == j) ? 2 : -std::abs(a(i, j));
  return c;
}

std::vector<int> skew_symmetrizer(const ExchangeMatrix& a) {
  // d_i a_ij = -d_j a_ji; propagate ratios num/den along nonzero entries.
  const std::size_t r = a.dim();
  std::vector<long> num(r, 0), den(r, 1);
  for (std::size_t root = 0; root < r; ++root) {
    if (num[root] != 0) continue;
    num[root] = 1;
    std::deque<std::size_t> queue{root};
    while (!queue.empty()) {
      std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < r; ++j) {
        if (a(i, j) == 0 || num[j] != 0) continue;
        // d_j = -d_i a_ij / a_ji
        long n = -num[i] * a(i, j);
        long d = den[i] * a(j, i);
        if (d < 0) {
          n = -n;
          d = -d;
        }
        if (n <= 0 || d == 0) return {};
        long g = std::gcd(n, d);
        num[j] = n / g;
        den[j] = d / g;
        queue.push_back(j);
      }
    }
  }
  long l = 1;
  for (long d : den) l = std::lcm(l, d);
  std::vector<int> diag(r);
  for (std::size_t i = 0; i < r; ++i) diag[i] = static_cast<int>(num[i] * (l / den[i]));
  int g = 0;
  for (int d : diag) g = std::gcd(g, d);
  for (int& d : diag) d /= g;
  if (!a.is_skew_symmetrized_by(diag)) return {};
  return diag;
}

Seed::Seed(std::vector<LaurentPoly> c, ExchangeMatrix m)
    : cluster(std::move(c)), matrix(std::move(m)) {
  if (cluster.size() != matrix.dim()) {
    throw Error("seed: cluster length " + std::to_string(cluster.size()) +
                " does not match matrix dimension " + std::to_string(matrix.dim()));
  }
  if (cluster.empty()) throw Error("seed: empty cluster");
  for (const auto& x : cluster) {
    if (x.is_zero()) throw Error("seed: zero cluster variable");
    if (x.var_count() != cluster.front().var_count()) throw VarCountMismatch("seed variables");
  }
  if (!matrix.is_sign_skew_symmetric()) throw Error("seed: matrix is not sign-skew-symmetric");
}

Seed initial_seed(const ExchangeMatrix& a) {
  std::vector<LaurentPoly> xs;
  for (std::size_t i = 0; i < a.dim(); ++i) xs.push_back(LaurentPoly::variable(a.dim(), i));
  return Seed(std::move(xs), a);
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  ExchangeMatrix a2 = mutate_matrix(s.matrix, k);
  const std::size_t m = s.cluster.front().var_count();
  LaurentPoly plus = LaurentPoly::constant(m, 1);
  LaurentPoly minus = LaurentPoly::constant(m, 1);
  for (std::size_t i = 0; i < s.rank(); ++i) {
    int e = s.matrix(i, k);
    if (e > 0) plus *= s.cluster[i].pow(static_cast<unsigned>(e));
    if (e < 0) minus *= s.cluster[i].pow(static_cast<unsigned>(-e));
  }
  std::vector<LaurentPoly> c = s.cluster;
  c[k] = exact_div(plus + minus, s.cluster[k]);
  return Seed(std::move(c), std::move(a2));
}

Seed canonical_seed(const Seed& s) {
  const std::size_t r = s.rank();
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t i, std::size_t j) { return s.cluster[i] < s.cluster[j]; });

  // Tie groups (equal cluster entries) only arise for degenerate inputs;
  // pick the lexicographically smallest matrix over their permutations.
  std::vector<std::pair<std::size_t, std::size_t>> groups;
  for (std::size_t i = 0; i < r;) {
    std::size_t j = i + 1;
    while (j < r && s.cluster[perm[j]] == s.cluster[perm[i]]) ++j;
    if (j - i > 1) groups.emplace_back(i, j);
    i = j;
  }
  IntMatrix best = s.matrix.permuted(perm);
  if (!groups.empty()) {
    std::vector<std::size_t> best_perm = perm;
    auto search = [&](auto&& self, std::size_t g) -> void {
      if (g == groups.size()) {
        IntMatrix cand = s.matrix.permuted(perm);
        if (cand < best) {
          best = cand;
          best_perm = perm;
        }
        return;
      }
      auto first = perm.begin() + static_cast<long>(groups[g].first);
      auto last = perm.begin() + static_cast<long>(groups[g].second);
      std::sort(first, last);
      do {
        self(self, g + 1);
      } while (std::next_permutation(first, last));
    };
    search(search, 0);
    perm = best_perm;
  }

  std::vector<LaurentPoly> c;
  c.reserve(r);
  for (std::size_t i : perm) c.push_back(s.cluster[i]);
  return Seed(std::move(c), std::move(best));
}

namespace {

struct SeedLess {
  bool operator()(const Seed& a, const Seed& b) const {
    if (auto c = a.cluster <=> b.cluster; c != 0) return c < 0;
    return a.matrix < b.matrix;
  }
};

void finish_graph(ExchangeGraph& g) {
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    for (std::size_t k = 0; k < g.neighbors[v].size(); ++k) {
      std::size_t w = g.neighbors[v][k];
      if (v < w) g.edges.push_back({v, k, w});
    }
  }
  std::vector<LaurentPoly> vars;
  for (const auto& s : g.nodes) vars.insert(vars.end(), s.cluster.begin(), s.cluster.end());
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  g.variables = std::move(vars);
}

void limit_exceeded(std::size_t limit) {
  throw NodeLimitExceeded("exchange graph did not close within " + std::to_string(limit) +
                          " nodes");
}

// Reference: plain queue-driven BFS.
ExchangeGraph bfs_serial(const Seed& s0, std::size_t node_limit) {
  ExchangeGraph g;
  std::map<Seed, std::size_t, SeedLess> index;
  Seed start = canonical_seed(s0);
  index.emplace(start, 0);
  g.nodes.push_back(start);
  g.neighbors.emplace_back();
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    const std::size_t r = g.nodes[v].rank();
    std::vector<std::size_t> nbrs(r);
    for (std::size_t k = 0; k < r; ++k) {
      Seed next = canonical_seed(mutate_seed(g.nodes[v], k));
      auto [it, inserted] = index.emplace(next, g.nodes.size());
      if (inserted) {
        if (g.nodes.size() >= node_limit) limit_exceeded(node_limit);
        g.nodes.push_back(std::move(next));
        g.neighbors.emplace_back();
      }
      nbrs[k] = it->second;
    }
    g.neighbors[v] = std::move(nbrs);
  }
  finish_graph(g);
  return g;
}

// Level-synchronous BFS: mutations of a whole frontier are computed in
// parallel, then merged serially in (frontier, direction) order so node
// numbering matches bfs_serial exactly.
ExchangeGraph bfs_parallel(const Seed& s0, std::size_t node_limit) {
  ExchangeGraph g;
  std::map<Seed, std::size_t, SeedLess> index;
  Seed start = canonical_seed(s0);
  index.emplace(start, 0);
  g.nodes.push_back(start);
  g.neighbors.emplace_back();
  const std::size_t r = start.rank();

  std::size_t level_begin = 0;
  while (level_begin < g.nodes.size()) {
    const std::size_t level_end = g.nodes.size();
    const long jobs = static_cast<long>((level_end - level_begin) * r);
    std::vector<std::optional<Seed>> results(static_cast<std::size_t>(jobs));
    std::exception_ptr failure;

#pragma omp parallel for schedule(dynamic, 4)
    for (long job = 0; job < jobs; ++job) {
      std::size_t v = level_begin + static_cast<std::size_t>(job) / r;
      std::size_t k = static_cast<std::size_t>(job) % r;
      try {
        results[static_cast<std::size_t>(job)] = canonical_seed(mutate_seed(g.nodes[v], k));
      } catch (...) {
#pragma omp critical(ctube_bfs_failure)
        if (!failure) failure = std::current_exception();
      }
    }
    if (failure) std::rethrow_exception(failure);

    for (std::size_t v = level_begin; v < level_end; ++v) {
      std::vector<std::size_t> nbrs(r);
      for (std::size_t k = 0; k < r; ++k) {
        Seed& next = *results[(v - level_begin) * r + k];
        auto [it, inserted] = index.emplace(next, g.nodes.size());
        if (inserted) {
          if (g.nodes.size() >= node_limit) limit_exceeded(node_limit);
          g.nodes.push_back(std::move(next));
          g.neighbors.emplace_back();
        }
        nbrs[k] = it->second;
      }
      g.neighbors[v] = std::move(nbrs);
    }
    level_begin = level_end;
  }
  finish_graph(g);
  return g;
}

}  // namespace

ExchangeGraph enumerate_exchange_graph(const Seed& s0, std::size_t node_limit, Execution exec) {
  if (node_limit == 0) throw Error("node limit must be at least 1");
  return exec == Execution::serial ? bfs_serial(s0, node_limit) : bfs_parallel(s0, node_limit);
}

}  // namespace ctube
