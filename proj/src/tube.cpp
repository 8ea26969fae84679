#include "ctube/tube.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include <gmpxx.h>

#include "ctube/errors.hpp"

namespace ctube {

namespace {

int mod_pos(int a, int n) { return ((a - 1) % n + n) % n + 1; }

void check_rank(int rank) {
  if (rank < 1) throw Error("tube rank must be positive, got " + std::to_string(rank));
}

void check_same_rank(const TubeObject& x, const TubeObject& y) {
  if (x.rank() != y.rank()) {
    throw RankMismatch("objects of ranks " + std::to_string(x.rank()) + " and " +
                       std::to_string(y.rank()));
  }
}

}  // namespace

TubeObject::TubeObject(int rank, int socle, int length) : rank_(rank), socle_(0), length_(length) {
  check_rank(rank);
  if (length < 0) throw Error("negative quasi-length " + std::to_string(length));
  if (length > 0) socle_ = mod_pos(socle, rank);
}

bool canonical_less(const TubeObject& x, const TubeObject& y) {
  if (x.length() != y.length()) return x.length() > y.length();
  return x.socle() < y.socle();
}

std::string short_text(const TubeObject& x) {
  if (x.is_zero()) return "0";
  return "(" + std::to_string(x.socle()) + "," + std::to_string(x.length()) + ")";
}

std::string to_string(const TubeObject& x) { return short_text(x) + "@" + std::to_string(x.rank()); }

TubeObject parse_object(std::string_view text, int rank) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  auto fail = [&]() -> TubeObject {
    throw ParseError("cannot parse tube object '" + std::string(text) + "'");
  };
  if (auto at = s.find('@'); at != std::string::npos) {
    int r = 0;
    try {
      std::size_t used = 0;
      r = std::stoi(s.substr(at + 1), &used);
      if (used != s.size() - at - 1) fail();
    } catch (const std::logic_error&) {
      fail();
    }
    if (r != rank) {
      throw ParseError("object '" + std::string(text) + "' has rank " + std::to_string(r) +
                       ", expected " + std::to_string(rank));
    }
    s.resize(at);
  }
  if (s == "0") return TubeObject::zero(rank);
  if (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  auto comma = s.find(',');
  if (comma == std::string::npos) return fail();
  try {
    std::size_t u1 = 0, u2 = 0;
    std::string sa = s.substr(0, comma), sb = s.substr(comma + 1);
    int a = std::stoi(sa, &u1);
    int b = std::stoi(sb, &u2);
    if (u1 != sa.size() || u2 != sb.size()) return fail();
    if (b < 0) return fail();
    return TubeObject(rank, a, b);
  } catch (const std::logic_error&) {
    return fail();
  }
}

TubeObject tau_power(const TubeObject& x, int k) {
  if (x.is_zero()) return x;
  return TubeObject(x.rank(), x.socle() - k, x.length());
}

TubeObject tau(const TubeObject& x) { return tau_power(x, 1); }
TubeObject tau_inverse(const TubeObject& x) { return tau_power(x, -1); }
TubeObject shift(const TubeObject& x) { return tau(x); }
TubeObject shift_inverse(const TubeObject& x) { return tau_inverse(x); }

int hom_tube_dim(const TubeObject& x, const TubeObject& y) {
  check_same_rank(x, y);
  if (x.is_zero() || y.is_zero()) return 0;
  const int n = x.rank();
  const int b = x.length(), d = y.length();
  const int offset = ((y.socle() - x.socle()) % n + n) % n;
  int count = 0;
  for (int k = std::max(0, b - d); k <= b - 1; ++k) {
    if (k % n == offset) ++count;
  }
  return count;
}

int hom_tube_dim_oracle(const TubeObject& x, const TubeObject& y, int max_length) {
  check_same_rank(x, y);
  if (x.is_zero() || y.is_zero()) return 0;
  if (x.length() > max_length || y.length() > max_length) {
    throw SizeLimitExceeded("oracle limited to quasi-length " + std::to_string(max_length));
  }
  const int n = x.rank();
  const int b = x.length(), d = y.length();
  // Basis vector j of (a, len) sits at vertex a + j (j = 0 is the socle);
  // the nilpotent arrow action sends basis j to j - 1 and the socle to 0.
  auto vx = [&](int q) { return mod_pos(x.socle() + q, n); };
  auto vy = [&](int p) { return mod_pos(y.socle() + p, n); };

  // Unknowns F[p][q]: coefficient of y_p in f(x_q), allowed when vertices agree.
  std::vector<int> var(static_cast<std::size_t>(b * d), -1);
  int unknowns = 0;
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < b; ++q)
      if (vy(p) == vx(q)) var[static_cast<std::size_t>(p * b + q)] = unknowns++;
  auto unknown = [&](int p, int q) { return var[static_cast<std::size_t>(p * b + q)]; };

  // f(N x_q) = N f(x_q): coefficient of y_r gives F[r+1][q] - F[r][q-1] = 0.
  std::vector<std::vector<mpq_class>> rows;
  for (int q = 0; q < b; ++q) {
    for (int r = 0; r < d; ++r) {
      std::vector<mpq_class> row(static_cast<std::size_t>(unknowns));
      bool nonzero = false;
      if (r + 1 < d && unknown(r + 1, q) >= 0) {
        row[static_cast<std::size_t>(unknown(r + 1, q))] += 1;
        nonzero = true;
      }
      if (q >= 1 && unknown(r, q - 1) >= 0) {
        row[static_cast<std::size_t>(unknown(r, q - 1))] -= 1;
        nonzero = true;
      }
      if (nonzero) rows.push_back(std::move(row));
    }
  }

  int rank = 0;
  for (int col = 0; col < unknowns && rank < static_cast<int>(rows.size()); ++col) {
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const auto& row) {
      return row[static_cast<std::size_t>(col)] != 0;
    });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    auto& prow = rows[static_cast<std::size_t>(rank)];
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == static_cast<std::size_t>(rank)) continue;
      mpq_class factor = rows[i][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      factor /= prow[static_cast<std::size_t>(col)];
      for (int c = col; c < unknowns; ++c) {
        rows[i][static_cast<std::size_t>(c)] -= factor * prow[static_cast<std::size_t>(c)];
      }
    }
    ++rank;
  }
  return unknowns - rank;
}

int hom_c_dim(const TubeObject& x, const TubeObject& y) {
  check_same_rank(x, y);
  return hom_tube_dim(x, y) + hom_tube_dim(y, tau_power(x, 2));
}

int ext1_dim(const TubeObject& x, const TubeObject& y) { return hom_c_dim(x, shift(y)); }

bool is_rigid(const TubeObject& x) { return x.length() <= x.rank() - 1; }

std::string to_string(Region r) {
  switch (r) {
    case Region::O: return "O";
    case Region::I: return "I";
    case Region::II: return "II";
    case Region::III: return "III";
    case Region::IV: return "IV";
    case Region::outside: return "outside";
  }
  return "outside";
}

Region region(const TubeObject& x) {
  if (x.is_zero()) throw Error("region of the zero object is undefined");
  const int n = x.rank(), a = x.socle(), b = x.length();
  if (a == 1 && b <= n - 1) return Region::O;
  if (2 <= a && a <= n - 1 && a + b <= n) return Region::I;
  if (a + b >= n + 1 && b <= n - 1) return Region::II;
  if (a + b <= 2 * n - 1 && a != 1 && b >= n) return Region::III;
  if (a + b == 2 * n && a != 1 && b >= n) return Region::IV;
  return Region::outside;
}

std::vector<TubeObject> rigid_indecomposables(int rank) {
  check_rank(rank);
  std::vector<TubeObject> out;
  for (int b = rank - 1; b >= 1; --b)
    for (int a = 1; a <= rank; ++a) out.emplace_back(rank, a, b);
  return out;
}

RigidSum::RigidSum(int rank, std::vector<TubeObject> summands) : rank_(rank) {
  for (auto& s : summands) {
    if (s.rank() != rank) throw RankMismatch("summand " + to_string(s) + " in rank " + std::to_string(rank));
    if (!s.is_zero()) summands_.push_back(s);
  }
  std::sort(summands_.begin(), summands_.end(), canonical_less);
}

int RigidSum::multiplicity(const TubeObject& x) const {
  return static_cast<int>(std::count(summands_.begin(), summands_.end(), x));
}

std::string to_string(const RigidSum& s) {
  if (s.empty()) return "0";
  std::string out;
  const auto& v = s.summands();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (!out.empty()) out += " + ";
    out += short_text(v[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

RigidSum parse_sum(std::string_view text, int rank) {
  std::vector<TubeObject> items;
  std::string cur;
  int depth = 0;
  auto flush = [&]() {
    std::string t;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    cur.clear();
    if (t.empty()) throw ParseError("empty summand in '" + std::string(text) + "'");
    int mult = 1;
    if (auto caret = t.rfind('^'); caret != std::string::npos && t.find(')') < caret) {
      try {
        mult = std::stoi(t.substr(caret + 1));
      } catch (const std::logic_error&) {
        throw ParseError("bad multiplicity in '" + t + "'");
      }
      if (mult < 0) throw ParseError("negative multiplicity in '" + t + "'");
      t.resize(caret);
    }
    TubeObject x = parse_object(t, rank);
    for (int i = 0; i < mult; ++i) items.push_back(x);
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == '+' && depth == 0) {
      flush();
    } else {
      cur.push_back(c);
    }
  }
  flush();
  return RigidSum(rank, std::move(items));
}

namespace {

std::string set_text(const std::vector<TubeObject>& xs) {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += "+";
    out += short_text(x);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

MaximalRigid::MaximalRigid(int rank, std::vector<TubeObject> summands) : rank_(rank) {
  if (rank < 2) throw NotMaximalRigid("maximal rigid objects need rank >= 2");
  std::sort(summands.begin(), summands.end(), canonical_less);
  summands_ = std::move(summands);
  const std::string what = set_text(summands_);
  for (const auto& s : summands_) {
    if (s.rank() != rank) throw RankMismatch("summand " + to_string(s) + " in rank " + std::to_string(rank));
    if (s.is_zero()) throw NotMaximalRigid(what + ": contains the zero object");
    if (!is_rigid(s)) throw NotMaximalRigid(what + ": " + short_text(s) + " is not rigid");
  }
  if (std::adjacent_find(summands_.begin(), summands_.end()) != summands_.end())
    throw NotMaximalRigid(what + ": repeated summand (not basic)");
  for (std::size_t i = 0; i < summands_.size(); ++i) {
    for (std::size_t j = i + 1; j < summands_.size(); ++j) {
      if (ext1_dim(summands_[i], summands_[j]) != 0) {
        throw NotMaximalRigid(what + ": Ext^1(" + short_text(summands_[i]) + "," +
                              short_text(summands_[j]) + ") != 0");
      }
    }
  }
  for (const auto& cand : rigid_indecomposables(rank)) {
    if (contains(cand)) continue;
    bool orthogonal = std::all_of(summands_.begin(), summands_.end(),
                                  [&](const TubeObject& s) { return ext1_dim(cand, s) == 0; });
    if (orthogonal) throw NotMaximalRigid(what + ": can be extended by " + short_text(cand));
  }
}

MaximalRigid MaximalRigid::trusted(int rank, std::vector<TubeObject> summands) {
  MaximalRigid r;
  r.rank_ = rank;
  std::sort(summands.begin(), summands.end(), canonical_less);
  r.summands_ = std::move(summands);
  return r;
}

bool MaximalRigid::contains(const TubeObject& x) const {
  return std::find(summands_.begin(), summands_.end(), x) != summands_.end();
}

std::size_t MaximalRigid::index_of(const TubeObject& x) const {
  auto it = std::find(summands_.begin(), summands_.end(), x);
  if (it == summands_.end()) throw NotASummand(short_text(x) + " is not a summand of " + to_string(*this));
  return static_cast<std::size_t>(it - summands_.begin());
}

bool MaximalRigid::operator<(const MaximalRigid& other) const {
  if (rank_ != other.rank_) return rank_ < other.rank_;
  return std::lexicographical_compare(summands_.begin(), summands_.end(), other.summands_.begin(),
                                      other.summands_.end(), canonical_less);
}

std::string to_string(const MaximalRigid& r) { return set_text(r.summands()); }

MaximalRigid initial_maximal_rigid(int rank) {
  std::vector<TubeObject> t;
  for (int i = 1; i <= rank - 1; ++i) t.emplace_back(rank, 1, rank - i);
  return MaximalRigid(rank, std::move(t));
}

namespace {

// Maximal rigid configurations inside the wing of (x, m): (x, m) together
// with a configuration in the wing of (x, h-1) and one in the wing of
// (x+h, m-h), for some 1 <= h <= m.
std::vector<std::vector<TubeObject>> wing_configurations(int rank, int x, int m) {
  if (m == 0) return {{}};
  std::vector<std::vector<TubeObject>> out;
  for (int h = 1; h <= m; ++h) {
    auto left = wing_configurations(rank, x, h - 1);
    auto right = wing_configurations(rank, x + h, m - h);
    for (const auto& l : left) {
      for (const auto& r : right) {
        std::vector<TubeObject> c{TubeObject(rank, x, m)};
        c.insert(c.end(), l.begin(), l.end());
        c.insert(c.end(), r.begin(), r.end());
        out.push_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<MaximalRigid> enumerate_maximal_rigid(int rank) {
  if (rank < 2) throw Error("maximal rigid objects need rank >= 2");
  std::vector<MaximalRigid> out;
  for (int a = 1; a <= rank; ++a) {
    for (auto& c : wing_configurations(rank, a, rank - 1)) {
      out.push_back(MaximalRigid::trusted(rank, std::move(c)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TubeObject exchange_partner(const MaximalRigid& r, const TubeObject& m) {
  if (!r.contains(m)) throw NotASummand(short_text(m) + " is not a summand of " + to_string(r));
  std::vector<TubeObject> found;
  for (const auto& cand : rigid_indecomposables(r.rank())) {
    if (r.contains(cand)) continue;
    bool ok = std::all_of(r.summands().begin(), r.summands().end(), [&](const TubeObject& s) {
      return s == m || ext1_dim(cand, s) == 0;
    });
    if (ok) found.push_back(cand);
  }
  if (found.size() != 1) {
    throw InvariantViolation("exchange partner of " + short_text(m) + " in " + to_string(r) +
                             " is not unique (" + std::to_string(found.size()) + " candidates)");
  }
  return found.front();
}

ExchangeTriangles exchange_triangles(const MaximalRigid& r, const TubeObject& m) {
  const int n = r.rank();
  const TubeObject partner = exchange_partner(r, m);
  auto obj = [n](int a, int b) { return TubeObject(n, a, b); };

  ExchangeTriangles out{partner, RigidSum(n), RigidSum(n), 0};
  if (m.length() == n - 1 && partner.length() == n - 1) {
    const int a = m.socle();
    const int h = ((partner.socle() - a) % n + n) % n;
    out.middle_prime = RigidSum(n, {obj(a + h, n - h - 1), obj(a + h, n - h - 1)});
    out.middle = RigidSum(n, {obj(a, h - 1), obj(a, h - 1)});
    out.ext_dim = 2;
  } else {
    // Write the pair as P = (a,b), Q = (a+h, b-h+i) with 1 <= h <= b and
    // 1 <= i <= n-b-1. Then P -> (a,b+i) + (a+h,b-h) -> Q and
    // Q -> (a+b+1,i-1) + (a,h-1) -> P. At most one role assignment parses.
    bool parsed = false;
    for (bool p_is_m : {true, false}) {
      const TubeObject& p = p_is_m ? m : partner;
      const TubeObject& q = p_is_m ? partner : m;
      const int a = p.socle(), b = p.length();
      const int h = ((q.socle() - a) % n + n) % n;
      const int i = q.length() - b + h;
      if (!(b <= n - 2 && 1 <= h && h <= b && 1 <= i && i <= n - b - 1)) continue;
      if (parsed) throw InvariantViolation("exchange pair parameterized twice");
      parsed = true;
      RigidSum from_p(n, {obj(a, b + i), obj(a + h, b - h)});
      RigidSum from_q(n, {obj(a + b + 1, i - 1), obj(a, h - 1)});
      out.middle_prime = p_is_m ? from_p : from_q;
      out.middle = p_is_m ? from_q : from_p;
    }
    if (!parsed) {
      throw InvariantViolation("cannot parameterize exchange pair " + short_text(m) + ", " +
                               short_text(partner));
    }
    out.ext_dim = 1;
  }

  for (const RigidSum* mid : {&out.middle, &out.middle_prime}) {
    for (const auto& s : mid->summands()) {
      if (s == m || !r.contains(s)) {
        throw InvariantViolation("exchange middle summand " + short_text(s) + " of " +
                                 short_text(m) + " lies outside " + to_string(r));
      }
    }
  }
  if (ext1_dim(m, partner) != out.ext_dim) {
    throw InvariantViolation("dim Ext^1(" + short_text(m) + "," + short_text(partner) +
                             ") disagrees with the exchange case");
  }
  return out;
}

ExchangeMatrix exchange_matrix(int rank, const std::vector<TubeObject>& ordered) {
  MaximalRigid r(rank, ordered);
  const std::size_t dim = ordered.size();
  ExchangeMatrix a(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    ExchangeTriangles tri = exchange_triangles(r, ordered[j]);
    for (std::size_t i = 0; i < dim; ++i) {
      a(i, j) = tri.middle_prime.multiplicity(ordered[i]) - tri.middle.multiplicity(ordered[i]);
    }
  }
  return a;
}

ExchangeMatrix exchange_matrix(const MaximalRigid& r) {
  return exchange_matrix(r.rank(), r.summands());
}

MaximalRigid mutate(const MaximalRigid& r, const TubeObject& m) {
  TubeObject partner = exchange_partner(r, m);
  std::vector<TubeObject> s = r.summands();
  s[r.index_of(m)] = partner;
  return MaximalRigid(r.rank(), std::move(s));
}

RigidExchangeGraph maximal_rigid_exchange_graph(int rank, std::size_t node_limit) {
  RigidExchangeGraph g;
  g.rank = rank;
  g.nodes = enumerate_maximal_rigid(rank);
  if (g.nodes.size() > node_limit) {
    throw NodeLimitExceeded("rank " + std::to_string(rank) + " has " +
                            std::to_string(g.nodes.size()) + " maximal rigid objects, limit " +
                            std::to_string(node_limit));
  }
  std::map<MaximalRigid, std::size_t> index;
  for (std::size_t v = 0; v < g.nodes.size(); ++v) index.emplace(g.nodes[v], v);
  g.neighbors.resize(g.nodes.size());
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    for (const auto& s : g.nodes[v].summands()) {
      std::vector<TubeObject> next = g.nodes[v].summands();
      next[g.nodes[v].index_of(s)] = exchange_partner(g.nodes[v], s);
      g.neighbors[v].push_back(index.at(MaximalRigid::trusted(rank, std::move(next))));
    }
  }
  for (std::size_t v = 0; v < g.nodes.size(); ++v) {
    for (std::size_t k = 0; k < g.neighbors[v].size(); ++k) {
      if (v < g.neighbors[v][k]) g.edges.push_back({v, k, g.neighbors[v][k]});
    }
  }
  return g;
}

nlohmann::ordered_json to_json(const MaximalRigid& r) {
  nlohmann::ordered_json j;
  j["rank"] = r.rank();
  nlohmann::ordered_json s = nlohmann::ordered_json::array();
  for (const auto& x : r.summands()) s.push_back({x.socle(), x.length()});
  j["summands"] = std::move(s);
  return j;
}

MaximalRigid maximal_rigid_from_json(const nlohmann::ordered_json& j) {
  try {
    int rank = j.at("rank").get<int>();
    std::vector<TubeObject> s;
    for (const auto& pair : j.at("summands")) {
      if (pair.size() != 2) throw ParseError("summand must be [a, b]");
      s.emplace_back(rank, pair.at(0).get<int>(), pair.at(1).get<int>());
    }
    return MaximalRigid(rank, std::move(s));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("maximal rigid JSON: ") + e.what());
  }
}

}  // namespace ctube
