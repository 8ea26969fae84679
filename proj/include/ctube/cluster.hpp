#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ctube/execution.hpp"
#include "ctube/laurent.hpp"

namespace ctube {

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows);
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t dim() const { return dim_; }
  int operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }
  int& operator()(std::size_t i, std::size_t j) { return data_[i * dim_ + j]; }

  std::vector<std::vector<int>> rows() const;
  /// Simultaneous row/column permutation: result(i,j) = (*this)(perm[i], perm[j]).
  IntMatrix permuted(const std::vector<std::size_t>& perm) const;

  bool is_sign_skew_symmetric() const;
  /// True when diag(d) * A is skew-symmetric.
  bool is_skew_symmetrized_by(const std::vector<int>& d) const;

  bool operator==(const IntMatrix&) const = default;
  auto operator<=>(const IntMatrix& other) const { return data_ <=> other.data_; }

 private:
  std::size_t dim_ = 0;
  std::vector<int> data_;
};

using ExchangeMatrix = IntMatrix;

std::string to_string(const IntMatrix& a);

/// Matrix mutation in direction k (0-based):
///   a'_ij = -a_ij                                   if i == k or j == k
///   a'_ij = a_ij + (|a_ik| a_kj + a_ik |a_kj|) / 2  otherwise
ExchangeMatrix mutate_matrix(const ExchangeMatrix& a, std::size_t k);

/// c_ii = 2, c_ij = -|a_ij|.
IntMatrix cartan_part(const ExchangeMatrix& a);

/// A positive diagonal D with D*A skew-symmetric, if one exists.
std::vector<int> skew_symmetrizer(const ExchangeMatrix& a);

struct Seed {
  std::vector<LaurentPoly> cluster;
  ExchangeMatrix matrix;

  /// Validates length agreement, nonzero entries and sign-skew-symmetry.
  Seed(std::vector<LaurentPoly> cluster, ExchangeMatrix matrix);

  std::size_t rank() const { return cluster.size(); }
  bool operator==(const Seed&) const = default;
};

/// The seed (x_1, ..., x_r; a).
Seed initial_seed(const ExchangeMatrix& a);

/// x_k x'_k = prod_{a_ik > 0} x_i^{a_ik} + prod_{a_ik < 0} x_i^{-a_ik}.
/// Propagates NotDivisible, which would mean the Laurent phenomenon failed.
Seed mutate_seed(const Seed& s, std::size_t k);

/// Representative of the seed up to simultaneous permutation of cluster
/// entries and matrix rows/columns: cluster sorted ascending, ties broken by
/// the lexicographically smallest matrix.
Seed canonical_seed(const Seed& s);

struct GraphEdge {
  std::size_t from;
  std::size_t dir;  // 0-based direction at `from`
  std::size_t to;
};

/// Exchange graph of unlabeled seeds.
struct ExchangeGraph {
  std::vector<Seed> nodes;                           // canonical seeds, BFS order
  std::vector<std::vector<std::size_t>> neighbors;   // neighbors[v][k] = mu_k(v)
  std::vector<GraphEdge> edges;                      // undirected, from < to
  std::vector<LaurentPoly> variables;                // sorted ascending
};

inline constexpr std::size_t kDefaultNodeLimit = 1'000'000;

/// Breadth-first closure of s0 under all mutations. Node ids follow
/// discovery order (frontier order, then direction), independent of the
/// execution mode. Throws NodeLimitExceeded when more than node_limit
/// seeds are discovered.
ExchangeGraph enumerate_exchange_graph(const Seed& s0,
                                       std::size_t node_limit = kDefaultNodeLimit,
                                       Execution exec = Execution::parallel);

}  // namespace ctube
