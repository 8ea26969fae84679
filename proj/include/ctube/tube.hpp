#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ctube/cluster.hpp"

namespace ctube {

/// Indecomposable object (a, b) of the cluster tube of rank n: socle at
/// vertex a (kept in [1, n]) and quasi-length b. Quasi-length 0 is the zero
/// object, stored with socle 0.
class TubeObject {
 public:
  TubeObject(int rank, int socle, int length);
  static TubeObject zero(int rank) { return TubeObject(rank, 0, 0); }

  int rank() const { return rank_; }
  int socle() const { return socle_; }
  int length() const { return length_; }
  bool is_zero() const { return length_ == 0; }

  bool operator==(const TubeObject&) const = default;

 private:
  int rank_;
  int socle_;
  int length_;
};

/// Canonical summand order: quasi-length descending, then socle ascending.
bool canonical_less(const TubeObject& x, const TubeObject& y);

/// "(a,b)@n", or "0@n" for the zero object.
std::string to_string(const TubeObject& x);
/// "(a,b)", or "0".
std::string short_text(const TubeObject& x);
/// Accepts "(a,b)", "a,b" and an optional "@n" suffix that must match rank.
TubeObject parse_object(std::string_view text, int rank);

TubeObject tau(const TubeObject& x);
TubeObject tau_inverse(const TubeObject& x);
TubeObject tau_power(const TubeObject& x, int k);
/// In the orbit category the shift acts on objects as tau.
TubeObject shift(const TubeObject& x);
TubeObject shift_inverse(const TubeObject& x);

/// dim Hom in the tube: number of k with max(0, b-d) <= k <= b-1 and
/// k = c - a (mod n), for X = (a,b), Y = (c,d).
int hom_tube_dim(const TubeObject& x, const TubeObject& y);

/// Same dimension computed by linear algebra on explicit nilpotent
/// representations of the cyclic quiver. Quasi-lengths above max_length
/// raise SizeLimitExceeded.
int hom_tube_dim_oracle(const TubeObject& x, const TubeObject& y, int max_length = 64);

/// Hom in the cluster tube: T-maps plus D-maps,
/// dim Hom_T(X,Y) + dim Hom_T(Y, tau^2 X).
int hom_c_dim(const TubeObject& x, const TubeObject& y);

/// dim Ext^1(X,Y) = dim Hom_C(X, Y[1]).
int ext1_dim(const TubeObject& x, const TubeObject& y);

/// Rigid iff quasi-length <= n-1; the zero object is rigid.
bool is_rigid(const TubeObject& x);

enum class Region { O, I, II, III, IV, outside };

std::string to_string(Region r);

/// Region of a nonzero object in the partition used by the cluster map.
Region region(const TubeObject& x);

/// All n(n-1) rigid indecomposables in canonical order.
std::vector<TubeObject> rigid_indecomposables(int rank);

/// Multiset of nonzero indecomposables, kept in canonical order.
class RigidSum {
 public:
  explicit RigidSum(int rank) : rank_(rank) {}
  RigidSum(int rank, std::vector<TubeObject> summands);

  int rank() const { return rank_; }
  const std::vector<TubeObject>& summands() const { return summands_; }
  bool empty() const { return summands_.empty(); }
  int multiplicity(const TubeObject& x) const;

  bool operator==(const RigidSum&) const = default;

 private:
  int rank_;
  std::vector<TubeObject> summands_;
};

/// "(1,1)^2 + (1,3)", or "0" when empty.
std::string to_string(const RigidSum& s);
/// Parses "+"-joined objects such as "(1,2)+(1,1)"; "0" is the empty sum.
RigidSum parse_sum(std::string_view text, int rank);

/// Basic maximal rigid object: n-1 distinct rigid indecomposables, pairwise
/// Ext-orthogonal and not extendable. Summands are in canonical order.
class MaximalRigid {
 public:
  /// Validates; throws NotMaximalRigid with the offending objects otherwise.
  MaximalRigid(int rank, std::vector<TubeObject> summands);

  int rank() const { return rank_; }
  const std::vector<TubeObject>& summands() const { return summands_; }
  bool contains(const TubeObject& x) const;
  std::size_t index_of(const TubeObject& x) const;

  bool operator==(const MaximalRigid&) const = default;
  bool operator<(const MaximalRigid& other) const;

  static MaximalRigid trusted(int rank, std::vector<TubeObject> summands);

 private:
  MaximalRigid() = default;
  int rank_ = 0;
  std::vector<TubeObject> summands_;
};

std::string to_string(const MaximalRigid& r);

/// T = (1,n-1) + (1,n-2) + ... + (1,1); summand i (0-based) is T_{i+1}.
MaximalRigid initial_maximal_rigid(int rank);

/// Every maximal rigid object, generated by wing recursion from each
/// (a, n-1); n * Catalan(n-1) of them, sorted.
std::vector<MaximalRigid> enumerate_maximal_rigid(int rank);

/// The unique rigid indecomposable N != M completing R \ {M}.
TubeObject exchange_partner(const MaximalRigid& r, const TubeObject& m);

/// Exchange data for the summand M of R:
///   partner -> middle -> M        (middle = E)
///   M -> middle_prime -> partner  (middle_prime = E')
struct ExchangeTriangles {
  TubeObject partner;
  RigidSum middle;
  RigidSum middle_prime;
  int ext_dim;
};

ExchangeTriangles exchange_triangles(const MaximalRigid& r, const TubeObject& m);

/// a_ij = mult(R_i in E'_j) - mult(R_i in E_j), summands indexed in the
/// given order (which must list a maximal rigid object).
ExchangeMatrix exchange_matrix(int rank, const std::vector<TubeObject>& ordered);
/// Same, in canonical summand order.
ExchangeMatrix exchange_matrix(const MaximalRigid& r);

MaximalRigid mutate(const MaximalRigid& r, const TubeObject& m);

/// Exchange graph of maximal rigid objects. Nodes are sorted; neighbors[v][k]
/// is the mutation of node v at its k-th canonical summand.
struct RigidExchangeGraph {
  int rank = 0;
  std::vector<MaximalRigid> nodes;
  std::vector<std::vector<std::size_t>> neighbors;
  std::vector<GraphEdge> edges;  // undirected, from < to
};

RigidExchangeGraph maximal_rigid_exchange_graph(int rank,
                                                std::size_t node_limit = kDefaultNodeLimit);

/// {"rank": n, "summands": [[a,b], ...]} in canonical order.
nlohmann::ordered_json to_json(const MaximalRigid& r);
MaximalRigid maximal_rigid_from_json(const nlohmann::ordered_json& j);

}  // namespace ctube
