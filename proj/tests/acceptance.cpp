// Acceptance run: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ctube/character.hpp"
#include "ctube/cluster.hpp"
#include "ctube/errors.hpp"
#include "ctube/tube.hpp"
#include "ctube/verify.hpp"
#include "oracles.hpp"

using namespace ctube;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;

  void expect(bool ok, const std::string& what) {
    if (!ok && pass) note = what;
    pass = pass && ok;
  }
};

bool report_ok(const VerificationReport& r, Outcome& o) {
  for (const auto& c : r.checks) o.expect(c.pass, "rank " + std::to_string(r.rank) + " " + c.name + ": " + c.detail);
  return r.passed();
}

int failures = 0;

void criterion(int id, const char* title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.note = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_s) {
    o.expect(false, "took " + std::to_string(secs) + " s, budget " + std::to_string(budget_s) + " s");
  }
  std::printf("%s criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", id, title, secs,
              o.note.empty() ? "" : " -- ", o.note.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

TubeObject O(int n, int a, int b) { return TubeObject(n, a, b); }

}  // namespace

int main() {
  criterion(1, "rank 3 characters equal their expected values", 1.0, [] {
    Outcome o;
    auto P = [](const char* s) { return parse_laurent(s, 2); };
    const LaurentPoly x1 = P("x1"), x2 = P("x2"), one = P("1");
    struct Case {
      TubeObject x;
      LaurentPoly want;
    };
    const Case cases[] = {
        {O(3, 1, 2), x1},
        {O(3, 1, 1), x2},
        {O(3, 2, 2), exact_div((x1 + one) * (x1 + one) + x2 * x2, x1 * x2 * x2)},
        {O(3, 2, 1), exact_div(x1 + one, x2)},
        {O(3, 3, 2), exact_div(x2 * x2 + one, x1)},
        {O(3, 3, 1), exact_div(x1 + one + x2 * x2, x1 * x2)},
    };
    for (const auto& c : cases) {
      o.expect(x_closed_form(c.x) == c.want, "closed form of " + to_string(c.x));
      o.expect(x_from_definition(c.x) == c.want, "definition of " + to_string(c.x));
      o.expect(canonical_text(x_closed_form(c.x)) == canonical_text(c.want), "text of " + to_string(c.x));
    }
    return o;
  });

  criterion(2, "initial exchange matrix and its type C Cartan part, ranks 2..8", 1.0, [] {
    Outcome o;
    for (int n = 2; n <= 8; ++n) {
      IntMatrix a = exchange_matrix(initial_maximal_rigid(n));
      const std::size_t r = static_cast<std::size_t>(n - 1);
      IntMatrix want(r), cartan(r);
      for (std::size_t i = 0; i < r; ++i) {
        cartan(i, i) = 2;
        if (i + 1 < r) {
          want(i, i + 1) = 1;
          want(i + 1, i) = (i == 0) ? -2 : -1;
          cartan(i, i + 1) = -1;
          cartan(i + 1, i) = (i == 0) ? -2 : -1;
        }
      }
      o.expect(a == want, "A_T at rank " + std::to_string(n) + " = " + to_string(a));
      o.expect(cartan_part(a) == cartan, "Cartan part at rank " + std::to_string(n));
      o.expect(is_type_c_cartan(cartan_part(a)), "type C classification at rank " + std::to_string(n));
    }
    return o;
  });

  criterion(3, "X_M X_M* = X_E + X_E' for every exchange, ranks 2..6", 60.0, [] {
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
      auto r = check_mutation_relations(n);
      report_ok(r, o);
      std::printf("  rank %d: %s\n", n, r.find("exchange-kinds")->detail.c_str());
    }
    return o;
  });

  criterion(4, "characters biject onto cluster variables and clusters, ranks 2..6", 120.0, [] {
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
      auto r = check_bijection(n);
      report_ok(r, o);
      const std::string want = std::to_string(n * (n - 1)) + " variables, " +
                               std::to_string(oracle::binomial(2 * n - 2, n - 1)) + " clusters";
      o.expect(r.find("counts")->detail == want, "rank " + std::to_string(n) + " counts " + r.find("counts")->detail);
      std::printf("  rank %d: %s\n", n, r.find("counts")->detail.c_str());
    }
    return o;
  });

  criterion(5, "mu_i(A_R) = A_{mu_i R} with disjoint middles, ranks 2..5", 60.0, [] {
    Outcome o;
    for (int n = 2; n <= 5; ++n) report_ok(check_cluster_structure(n), o);
    return o;
  });

  criterion(6, "Hom, rigidity and character oracles agree", 120.0, [] {
    Outcome o;
    for (int n = 2; n <= 5; ++n)
      for (int a = 1; a <= n; ++a)
        for (int b = 0; b <= 2 * n; ++b)
          for (int c = 1; c <= n; ++c)
            for (int d = 0; d <= 2 * n; ++d)
              o.expect(hom_tube_dim(O(n, a, b), O(n, c, d)) == hom_tube_dim_oracle(O(n, a, b), O(n, c, d)),
                       "hom " + to_string(O(n, a, b)) + " -> " + to_string(O(n, c, d)));
    for (int n = 2; n <= 6; ++n)
      for (int a = 1; a <= n; ++a)
        for (int b = 0; b <= 2 * n; ++b)
          o.expect(is_rigid(O(n, a, b)) == (ext1_dim(O(n, a, b), O(n, a, b)) == 0) &&
                       is_rigid(O(n, a, b)) == (oracle::ext1(O(n, a, b), O(n, a, b)) == 0),
                   "rigidity of " + to_string(O(n, a, b)));
    for (int n = 2; n <= 6; ++n)
      for (const auto& x : rigid_indecomposables(n))
        o.expect(x_from_definition(x) == x_closed_form(x), "character of " + to_string(x));
    return o;
  });

  criterion(7, "property suite", 60.0, [] {
    Outcome o;
    for (int n = 2; n <= 5; ++n)
      for (int a = 1; a <= n; ++a)
        for (int b = 0; b <= 2 * n; ++b)
          for (int c = 1; c <= n; ++c)
            for (int d = 0; d <= 2 * n; ++d)
              o.expect(ext1_dim(O(n, a, b), O(n, c, d)) == ext1_dim(O(n, c, d), O(n, a, b)),
                       "Ext symmetry " + to_string(O(n, a, b)) + ", " + to_string(O(n, c, d)));
    for (int n = 2; n <= 6; ++n) {
      const Seed s0 = initial_seed(exchange_matrix(initial_maximal_rigid(n)));
      ExchangeGraph g;
      try {
        g = enumerate_exchange_graph(s0);
      } catch (const NotDivisible& e) {
        o.expect(false, std::string("exact division failed: ") + e.what());
        continue;
      }
      for (const auto& s : g.nodes)
        for (std::size_t k = 0; k < s.rank(); ++k) {
          o.expect(mutate_seed(mutate_seed(s, k), k) == s, "seed involution at rank " + std::to_string(n));
          o.expect(mutate_matrix(mutate_matrix(s.matrix, k), k) == s.matrix, "matrix involution");
        }
      for (const auto& v : g.variables) o.expect(v.has_positive_coefficients(), "positivity of " + canonical_text(v));
      for (const auto& r : enumerate_maximal_rigid(n))
        for (const auto& m : r.summands())
          o.expect(mutate(mutate(r, m), exchange_partner(r, m)) == r, "rigid mutation involution");
      report_ok(check_positivity_and_laurent(n), o);
    }
    for (int n = 2; n <= 7; ++n) {
      const long count = static_cast<long>(enumerate_maximal_rigid(n).size());
      o.expect(count == n * oracle::catalan(n - 1) && count == oracle::binomial(2 * n - 2, n - 1),
               "maximal rigid count at rank " + std::to_string(n));
    }
    return o;
  });

  return failures == 0 ? 0 : 1;
}
