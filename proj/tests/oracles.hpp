#pragma once

// Independent reference computations used by the tests. None of these call
// the closed formulas they are compared against.

#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ctube/cluster.hpp"
#include "ctube/laurent.hpp"
#include "ctube/tube.hpp"

namespace oracle {

using Obj = std::pair<int, int>;  // (socle, quasi-length)

/// dim Ext^1(X,Y) = dim Hom_T(X, tau Y) + dim Hom_T(tau Y, tau^2 X), with
/// both Hom spaces solved by linear algebra.
int ext1(const ctube::TubeObject& x, const ctube::TubeObject& y);

/// Maximal sets of pairwise Ext-orthogonal rigid indecomposables, found by
/// clique search over all rigid objects.
std::set<std::set<Obj>> brute_maximal_rigid(int n);

/// Value of p at a rational point.
mpq_class eval(const ctube::LaurentPoly& p, const std::vector<mpq_class>& point);

/// The region formulas for X_(a,b), evaluated directly in Q with x_n = 1.
mpq_class closed_form_value(int n, int a, int b, const std::vector<mpq_class>& point);

/// Matrix mutation in the [x]_+ form:
/// a'_ij = a_ij + [a_ik]_+ [a_kj]_+ - [-a_ik]_+ [-a_kj]_+ off row/column k.
ctube::IntMatrix mutate_plus(const ctube::IntMatrix& a, std::size_t k);

struct NumericGraph {
  std::size_t clusters = 0;
  std::set<mpq_class> variables;
};

/// Seed exchange graph computed on the values of the cluster variables at a
/// rational point, rather than on Laurent polynomials.
NumericGraph numeric_exchange_graph(const ctube::IntMatrix& a, const std::vector<mpq_class>& point);

/// Dimension vector of Hom(T[-1], X) read from the band tables by region.
std::vector<int> band_dim_vector(int n, int a, int b);

/// A fixed generic point with n-1 coordinates.
std::vector<mpq_class> generic_point(int n);

long binomial(int n, int k);
long catalan(int n);

}  // namespace oracle
