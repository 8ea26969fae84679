#include "oracles.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>

namespace oracle {

using ctube::TubeObject;

int ext1(const TubeObject& x, const TubeObject& y) {
  TubeObject ty = ctube::tau(y);
  TubeObject ttx = ctube::tau(ctube::tau(x));
  return ctube::hom_tube_dim_oracle(x, ty) + ctube::hom_tube_dim_oracle(ty, ttx);
}

std::set<std::set<Obj>> brute_maximal_rigid(int n) {
  std::vector<TubeObject> rigid;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n - 1; ++b) rigid.emplace_back(n, a, b);
  const std::size_t k = rigid.size();
  std::vector<std::vector<bool>> ok(k, std::vector<bool>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) ok[i][j] = ext1(rigid[i], rigid[j]) == 0;

  std::set<std::set<Obj>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    bool extendable = false;
    for (std::size_t c = 0; c < k; ++c) {
      if (std::find(cur.begin(), cur.end(), c) != cur.end()) continue;
      if (std::all_of(cur.begin(), cur.end(), [&](std::size_t s) { return ok[c][s]; })) {
        extendable = true;
        if (c >= from) {
          cur.push_back(c);
          grow(c + 1);
          cur.pop_back();
        }
      }
    }
    if (!extendable) {
      std::set<Obj> s;
      for (std::size_t c : cur) s.insert({rigid[c].socle(), rigid[c].length()});
      out.insert(s);
    }
  };
  grow(0);
  return out;
}

mpq_class eval(const ctube::LaurentPoly& p, const std::vector<mpq_class>& point) {
  mpq_class total = 0;
  for (const auto& t : p.terms()) {
    mpq_class v = mpq_class(t.coeff);
    for (std::size_t i = 0; i < point.size(); ++i) {
      int e = t.mono[i];
      for (int r = 0; r < std::abs(e); ++r) {
        if (e > 0) v *= point[i];
        else v /= point[i];
      }
    }
    total += v;
  }
  return total;
}

mpq_class closed_form_value(int n, int a, int b, const std::vector<mpq_class>& point) {
  auto x = [&](int i) -> mpq_class { return i == n ? mpq_class(1) : point[static_cast<std::size_t>(i - 1)]; };
  if (b == 0) return 1;
  if (a == 1) return x(n - b);
  if (a + b <= n) {
    mpq_class s = 0;
    for (int k = 0; k <= b; ++k) s += 1 / (x(n - a - k + 1) * x(n - a - k + 2));
    return x(n - a - b + 1) * x(n - a + 2) * s;
  }
  mpq_class s1 = 0, s2 = 0;
  for (int k = 0; k <= n - a; ++k) s1 += 1 / (x(n - a - k + 1) * x(n - a - k + 2));
  for (int l = 0; l <= 2 * n - a - b - 1; ++l) s2 += 1 / (x(2 * n - a - b - l) * x(2 * n - a - b - l + 1));
  return x(1) * x(n - a + 2) * x(2 * n - a - b + 1) * (1 / (x(1) * x(1)) + s1 * s2);
}

ctube::IntMatrix mutate_plus(const ctube::IntMatrix& a, std::size_t k) {
  auto pos = [](int v) { return v > 0 ? v : 0; };
  ctube::IntMatrix out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (i == k || j == k) {
        out(i, j) = -a(i, j);
      } else {
        out(i, j) = a(i, j) + pos(a(i, k)) * pos(a(k, j)) - pos(-a(i, k)) * pos(-a(k, j));
      }
    }
  }
  return out;
}

NumericGraph numeric_exchange_graph(const ctube::IntMatrix& a0, const std::vector<mpq_class>& point) {
  struct S {
    std::vector<mpq_class> x;
    ctube::IntMatrix a;
  };
  auto key = [](const S& s) {
    std::vector<mpq_class> k = s.x;
    std::sort(k.begin(), k.end());
    return k;
  };
  std::map<std::vector<mpq_class>, bool> seen;
  std::deque<S> queue{S{point, a0}};
  seen[key(queue.front())] = true;
  NumericGraph g;
  while (!queue.empty()) {
    S s = queue.front();
    queue.pop_front();
    for (const auto& v : s.x) g.variables.insert(v);
    for (std::size_t k = 0; k < s.x.size(); ++k) {
      mpq_class plus = 1, minus = 1;
      for (std::size_t i = 0; i < s.x.size(); ++i) {
        for (int r = 0; r < s.a(i, k); ++r) plus *= s.x[i];
        for (int r = 0; r < -s.a(i, k); ++r) minus *= s.x[i];
      }
      S t{s.x, mutate_plus(s.a, k)};
      t.x[k] = (plus + minus) / s.x[k];
      auto kk = key(t);
      if (!seen.count(kk)) {
        seen[kk] = true;
        queue.push_back(std::move(t));
      }
    }
    if (seen.size() > 100000) break;
  }
  g.clusters = seen.size();
  return g;
}

std::vector<int> band_dim_vector(int n, int a, int b) {
  std::vector<int> e(static_cast<std::size_t>(n - 1), 0);
  auto set = [&](int lo, int hi, int v) {
    for (int i = lo; i <= hi; ++i)
      if (i >= 1 && i <= n - 1) e[static_cast<std::size_t>(i - 1)] = v;
  };
  if (b == 0 || a == 1) return e;
  if (a + b <= n) {
    set(n - a - b + 2, n - a + 1, 1);
  } else if (b == n - 1) {
    set(1, n - a + 1, 2);
  } else {
    set(n - a + 2, 2 * n - a - b, 1);
    set(1, n - a + 1, 2);
  }
  return e;
}

std::vector<mpq_class> generic_point(int n) {
  static const int primes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  std::vector<mpq_class> p;
  for (int i = 0; i < n - 1; ++i) p.emplace_back(primes[i + 1], primes[i] + 2 * i + 1);
  for (auto& v : p) v.canonicalize();
  return p;
}

long binomial(int n, int k) {
  long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

long catalan(int n) { return binomial(2 * n, n) / (n + 1); }

}  // namespace oracle
