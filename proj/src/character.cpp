#include "ctube/character.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ctube/errors.hpp"

namespace ctube {

namespace {

void require_rigid(const TubeObject& x) {
  if (!is_rigid(x)) {
    throw NonRigidObject(to_string(x) + " is not rigid (quasi-length must be at most " +
                         std::to_string(x.rank() - 1) + ")");
  }
}

IndexVector& add_into(IndexVector& acc, const IndexVector& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += v[i];
  return acc;
}

// 1-based band lo..hi with value m, as a vector of length n-1.
DimVector band(int n, int lo, int hi, int m = 1) {
  DimVector e(static_cast<std::size_t>(n - 1), 0);
  for (int i = std::max(lo, 1); i <= std::min(hi, n - 1); ++i) e[static_cast<std::size_t>(i - 1)] = m;
  return e;
}

DimVector operator+(DimVector a, const DimVector& b) { return add_into(a, b); }

struct Family {
  std::vector<TubeObject> ys;
  DimVector e;
  int chi;
};

// Submodule families of F(X) with their dimension vectors and Euler
// characteristics, region by region.
std::vector<Family> families(const TubeObject& x) {
  const int n = x.rank(), a = x.socle(), b = x.length();
  auto y = [n](int s, int l) { return TubeObject(n, s, l); };
  const DimVector zero(static_cast<std::size_t>(n - 1), 0);
  std::vector<Family> fam;

  switch (region(x)) {
    case Region::O:
      fam.push_back({{}, zero, 1});
      break;
    case Region::I:
      for (int bp = 0; bp <= b; ++bp) {
        fam.push_back({{y(a, bp)}, band(n, n - a - bp + 2, n - a + 1), 1});
      }
      break;
    case Region::II:
      if (b == n - 1) {
        const int p = n - a + 1;
        fam.push_back({{x}, band(n, 1, p, 2), 1});
        for (int bp = 1; bp <= n - a; ++bp) {
          const int i = n - a - bp + 2;
          fam.push_back({{y(a, bp), y(a, bp)}, band(n, i, p, 2), 1});
          fam.push_back({{y(a, bp)}, band(n, i, p), 2});
          for (int bpp = 1; bpp < bp; ++bpp) {
            const int j = n - a - bpp + 2;
            fam.push_back({{y(a, bp), y(a, bpp)}, band(n, i, p) + band(n, j, p), 2});
          }
        }
        fam.push_back({{}, zero, 1});
      } else {
        const int p = n - a + 1, q = 2 * n - a - b, c = a + b - n + 1;
        fam.push_back({{x}, band(n, 1, p) + band(n, 1, q), 1});
        for (int bp = 1; bp <= n - a; ++bp) {
          fam.push_back({{y(a, bp)}, band(n, n - a - bp + 2, p), 1});
        }
        for (int bpp = 1; bpp <= n - b - 1; ++bpp) {
          fam.push_back({{y(c, bpp)}, band(n, q - bpp + 1, q), 1});
        }
        for (int bpp = n - b; bpp <= q - 1; ++bpp) {
          fam.push_back({{y(c, bpp)}, band(n, q - bpp + 1, q), 2});
        }
        for (int bp = 1; bp <= n - a; ++bp) {
          const int i = n - a - bp + 2;
          fam.push_back({{y(a, bp), y(c, n - b - 1)}, band(n, i, p) + band(n, p + 1, q), 2});
          for (int bpp = 1; bpp <= n - b - 2; ++bpp) {
            fam.push_back({{y(a, bp), y(c, bpp)}, band(n, i, p) + band(n, q - bpp + 1, q), 1});
          }
          fam.push_back({{y(a, bp), y(c, bp - b + n - 1)}, band(n, i, p) + band(n, i, q), 1});
          for (int bpp = n - b; bpp <= q - 1; ++bpp) {
            const int j = q - bpp + 1;
            if (j != i) {
              fam.push_back({{y(a, bp), y(c, bpp)}, band(n, i, p) + band(n, j, q), 2});
            }
          }
        }
        fam.push_back({{}, zero, 1});
      }
      break;
    case Region::III:
    case Region::IV:
    case Region::outside:
      throw InvariantViolation("rigid object " + to_string(x) + " outside regions O, I, II");
  }
  return fam;
}

std::string vec_text(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

LaurentPoly xvar(int n, int i) {
  const auto m = static_cast<std::size_t>(n - 1);
  if (i == n) return LaurentPoly::constant(m, 1);
  return LaurentPoly::variable(m, static_cast<std::size_t>(i - 1));
}

// 1 / (x_i x_j) with x_n = 1.
LaurentPoly inverse_pair(int n, int i, int j) {
  Monomial mono(static_cast<std::size_t>(n - 1));
  if (i != n) mono[static_cast<std::size_t>(i - 1)] -= 1;
  if (j != n) mono[static_cast<std::size_t>(j - 1)] -= 1;
  return LaurentPoly::monomial(mono);
}

}  // namespace

IndexVector index(const TubeObject& x) {
  require_rigid(x);
  const int n = x.rank();
  IndexVector v(static_cast<std::size_t>(n - 1), 0);
  if (x.is_zero()) return v;
  const int a = x.socle(), b = x.length();
  auto add = [&](int i, int s) {
    if (i != n) v[static_cast<std::size_t>(i - 1)] += s;
  };
  if (a + b >= n + 1) {
    add(1, 1);
    add(n - a + 1, -1);
    add(2 * n - a - b, -1);
  } else {
    add(n - a - b + 1, 1);
    add(n - a + 1, -1);
  }
  return v;
}

IndexVector index(const RigidSum& s) {
  IndexVector v(static_cast<std::size_t>(s.rank() - 1), 0);
  for (const auto& x : s.summands()) add_into(v, index(x));
  return v;
}

DimVector dim_vector(const TubeObject& x) {
  require_rigid(x);
  const int n = x.rank();
  DimVector e(static_cast<std::size_t>(n - 1), 0);
  if (x.is_zero()) return e;
  for (int i = 1; i <= n - 1; ++i) {
    e[static_cast<std::size_t>(i - 1)] = hom_c_dim(tau_inverse(TubeObject(n, 1, n - i)), x);
  }
  return e;
}

std::vector<GrassTerm> grass_terms(const TubeObject& x) {
  require_rigid(x);
  if (x.is_zero()) throw Error("grass_terms needs a nonzero object");
  const int n = x.rank();
  std::map<DimVector, GrassTerm, std::greater<>> by_e;
  for (const auto& f : families(x)) {
    DimVector generic(static_cast<std::size_t>(n - 1), 0);
    IndexVector iota(static_cast<std::size_t>(n - 1), 0);
    for (const auto& y : f.ys) {
      add_into(generic, dim_vector(y));
      add_into(iota, index(y));
      add_into(iota, index(tau(y)));
    }
    if (generic != f.e) {
      throw InvariantViolation("family of " + to_string(x) + " has table e " + vec_text(f.e) +
                               " but dimension vector " + vec_text(generic));
    }
    auto [it, inserted] = by_e.try_emplace(f.e, GrassTerm{f.e, f.chi, iota});
    if (!inserted && (it->second.chi != f.chi || it->second.iota != iota)) {
      throw InvariantViolation("families of " + to_string(x) + " with e " + vec_text(f.e) +
                               " disagree on chi or iota");
    }
  }
  std::vector<GrassTerm> out;
  for (auto& [e, t] : by_e) {
    if (e[0] != 1) out.push_back(t);
  }
  return out;
}

LaurentPoly monomial_of(const IndexVector& v) {
  return LaurentPoly::monomial(Monomial(std::vector<int>(v.begin(), v.end())));
}

LaurentPoly x_from_definition(const TubeObject& x) {
  require_rigid(x);
  const auto m = static_cast<std::size_t>(x.rank() - 1);
  if (x.is_zero()) return LaurentPoly::constant(m, 1);
  LaurentPoly sum(m);
  for (const auto& t : grass_terms(x)) {
    IndexVector neg = t.iota;
    for (int& c : neg) c = -c;
    sum += LaurentPoly::constant(m, t.chi) * monomial_of(neg);
  }
  return monomial_of(index(x)) * sum;
}

LaurentPoly x_closed_form(const TubeObject& x) {
  require_rigid(x);
  const int n = x.rank();
  const auto m = static_cast<std::size_t>(n - 1);
  if (x.is_zero()) return LaurentPoly::constant(m, 1);
  const int a = x.socle(), b = x.length();
  switch (region(x)) {
    case Region::O:
      return xvar(n, n - b);
    case Region::I: {
      LaurentPoly sum(m);
      for (int k = 0; k <= b; ++k) sum += inverse_pair(n, n - a - k + 1, n - a - k + 2);
      return xvar(n, n - a - b + 1) * xvar(n, n - a + 2) * sum;
    }
    case Region::II: {
      LaurentPoly s1(m), s2(m);
      for (int k = 0; k <= n - a; ++k) s1 += inverse_pair(n, n - a - k + 1, n - a - k + 2);
      for (int l = 0; l <= 2 * n - a - b - 1; ++l) {
        s2 += inverse_pair(n, 2 * n - a - b - l, 2 * n - a - b - l + 1);
      }
      return xvar(n, 1) * xvar(n, n - a + 2) * xvar(n, 2 * n - a - b + 1) *
             (inverse_pair(n, 1, 1) + s1 * s2);
    }
    default:
      throw InvariantViolation("rigid object " + to_string(x) + " outside regions O, I, II");
  }
}

LaurentPoly x_of_rigid_sum(const RigidSum& s) {
  LaurentPoly p = LaurentPoly::constant(static_cast<std::size_t>(s.rank() - 1), 1);
  for (const auto& x : s.summands()) p *= x_closed_form(x);
  return p;
}

}  // namespace ctube
