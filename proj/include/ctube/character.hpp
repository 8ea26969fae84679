#pragma once

#include <vector>

#include "ctube/laurent.hpp"
#include "ctube/tube.hpp"

namespace ctube {

/// Coefficients of [T_1], ..., [T_{n-1}] in the split Grothendieck group of
/// add T. [T_n] is the zero class.
using IndexVector = std::vector<int>;

/// e_i = dim Hom(T_i[-1], X), i = 1..n-1.
using DimVector = std::vector<int>;

struct GrassTerm {
  DimVector e;
  int chi;
  IndexVector iota;

  bool operator==(const GrassTerm&) const = default;
};

/// Index of a rigid object with respect to T = (1,n-1) + ... + (1,1):
///   a+b >= n+1: [T_1] - [T_{n-a+1}] - [T_{2n-a-b}]
///   otherwise:  [T_{n-a-b+1}] - [T_{n-a+1}]
IndexVector index(const TubeObject& x);
IndexVector index(const RigidSum& s);

/// e_i = hom_c_dim(tau^{-1} T_i, X).
DimVector dim_vector(const TubeObject& x);

/// Grassmannian terms of the character sum, one per dimension vector e,
/// sorted by e descending. Vectors with e_1 = 1 are left out.
std::vector<GrassTerm> grass_terms(const TubeObject& x);

/// x^{index X} * sum chi x^{-iota} over grass_terms(X). Zero maps to 1.
LaurentPoly x_from_definition(const TubeObject& x);

/// Closed forms by region, in x_1..x_{n-1} with x_n = 1.
LaurentPoly x_closed_form(const TubeObject& x);

/// Product of x_closed_form over the summands; 1 for the empty sum.
LaurentPoly x_of_rigid_sum(const RigidSum& s);

/// x^v for an index vector v.
LaurentPoly monomial_of(const IndexVector& v);

}  // namespace ctube
