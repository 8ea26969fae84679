#include "ctube/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

#include "ctube/errors.hpp"

namespace ctube {

long Monomial::degree() const {
  long d = 0;
  for (int e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= other.exps_[i];
  return r;
}

bool grlex_before(const Monomial& a, const Monomial& b) {
  long da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  auto ea = a.exps(), eb = b.exps();
  return std::lexicographical_compare(eb.begin(), eb.end(), ea.begin(), ea.end());
}

namespace {

void check_vars(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.var_count() != q.var_count()) {
    throw VarCountMismatch("Laurent polynomials over " + std::to_string(p.var_count()) +
                           " and " + std::to_string(q.var_count()) + " variables");
  }
}

// Sorts into canonical order and merges equal monomials, dropping zeros.
std::vector<Term> normalize(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_before(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  return out;
}

// Merge of two canonical term lists with q scaled by `sign`.
std::vector<Term> merge(const std::vector<Term>& p, const std::vector<Term>& q, int sign) {
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  std::size_t i = 0, j = 0;
  while (i < p.size() || j < q.size()) {
    if (j == q.size() || (i < p.size() && grlex_before(p[i].mono, q[j].mono))) {
      out.push_back(p[i++]);
    } else if (i == p.size() || grlex_before(q[j].mono, p[i].mono)) {
      out.push_back({q[j].mono, sign > 0 ? Integer(q[j].coeff) : Integer(-q[j].coeff)});
      ++j;
    } else {
      Integer c = sign > 0 ? Integer(p[i].coeff + q[j].coeff) : Integer(p[i].coeff - q[j].coeff);
      if (c != 0) out.push_back({p[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(std::size_t var_count) : var_count_(var_count) {
  if (var_count == 0) throw Error("Laurent polynomials need at least one variable");
}

LaurentPoly LaurentPoly::constant(std::size_t var_count, const Integer& c) {
  return monomial(Monomial(var_count), c);
}

LaurentPoly LaurentPoly::variable(std::size_t var_count, std::size_t index) {
  if (index >= var_count) throw Error("variable index out of range");
  Monomial m(var_count);
  m[index] = 1;
  return monomial(m);
}

LaurentPoly LaurentPoly::monomial(const Monomial& m, const Integer& c) {
  LaurentPoly p(m.var_count());
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::size_t var_count, std::vector<Term> terms) {
  LaurentPoly p(var_count);
  for (const auto& t : terms) {
    if (t.mono.var_count() != var_count) throw VarCountMismatch("term has wrong variable count");
  }
  p.terms_ = normalize(std::move(terms));
  return p;
}

bool LaurentPoly::has_positive_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff > 0; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

LaurentPoly operator+(const LaurentPoly& p, const LaurentPoly& q) {
  check_vars(p, q);
  LaurentPoly r(p.var_count_);
  r.terms_ = merge(p.terms_, q.terms_, +1);
  return r;
}

LaurentPoly operator-(const LaurentPoly& p, const LaurentPoly& q) {
  check_vars(p, q);
  LaurentPoly r(p.var_count_);
  r.terms_ = merge(p.terms_, q.terms_, -1);
  return r;
}

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& q) {
  check_vars(p, q);
  std::vector<Term> prod;
  prod.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& s : p.terms_) {
    for (const auto& t : q.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  }
  LaurentPoly r(p.var_count_);
  r.terms_ = normalize(std::move(prod));
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(var_count_, 1);
  LaurentPoly base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::scaled(const Monomial& m) const {
  LaurentPoly r(*this);
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  if (var_count_ != other.var_count_ || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].mono != other.terms_[i].mono || terms_[i].coeff != other.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::strong_ordering LaurentPoly::operator<=>(const LaurentPoly& other) const {
  if (auto c = var_count_ <=> other.var_count_; c != 0) return c;
  std::size_t n = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = terms_[i];
    const auto& b = other.terms_[i];
    if (a.mono != b.mono) {
      return grlex_before(a.mono, b.mono) ? std::strong_ordering::less
                                          : std::strong_ordering::greater;
    }
    int c = cmp(a.coeff, b.coeff);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return terms_.size() <=> other.terms_.size();
}

LaurentPoly add(const LaurentPoly& p, const LaurentPoly& q) { return p + q; }
LaurentPoly mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

namespace {

// Componentwise minimum exponent over all terms.
Monomial min_exponents(const LaurentPoly& p) {
  Monomial m = p.terms().front().mono;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < m.var_count(); ++i) m[i] = std::min(m[i], t.mono[i]);
  }
  return m;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& p, const LaurentPoly& q) {
  check_vars(p, q);
  if (q.is_zero()) throw DivisionByZero("exact_div by the zero polynomial");
  const std::size_t m = p.var_count();
  if (p.is_zero()) return LaurentPoly(m);

  // Monomials are units. Strip them so both sides are ordinary polynomials
  // with no variable factor; then q | p in the Laurent ring iff the
  // stripped q divides the stripped p in Z[x], and grlex division on
  // nonnegative exponents terminates.
  Monomial shift_p = min_exponents(p);
  Monomial shift_q = min_exponents(q);
  LaurentPoly rem = p.scaled(Monomial(m) / shift_p);
  LaurentPoly divisor = q.scaled(Monomial(m) / shift_q);
  const Term& lead = divisor.leading();

  std::vector<Term> quotient;
  while (!rem.is_zero()) {
    const Term& top = rem.leading();
    Monomial qm = top.mono / lead.mono;
    bool mono_ok = std::all_of(qm.exps().begin(), qm.exps().end(), [](int e) { return e >= 0; });
    if (!mono_ok || !mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw NotDivisible("exact_div: " + canonical_text(p) + " is not divisible by " +
                         canonical_text(q));
    }
    Integer qc = top.coeff / lead.coeff;
    LaurentPoly step = LaurentPoly::monomial(qm, qc);
    rem = rem - step * divisor;
    quotient.push_back({std::move(qm), std::move(qc)});
  }
  return LaurentPoly::from_terms(m, std::move(quotient)).scaled(shift_p / shift_q);
}

namespace {

void write_monomial(std::ostream& os, const Monomial& m) {
  bool first = true;
  for (std::size_t i = 0; i < m.var_count(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << 'x' << (i + 1);
    if (m[i] != 1) os << '^' << m[i];
  }
}

}  // namespace

std::string canonical_text(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : p.terms()) {
    bool neg = t.coeff < 0;
    Integer mag = abs(t.coeff);
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    if (t.mono.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << '*';
      write_monomial(os, t.mono);
    }
  }
  return os.str();
}

namespace {

class TextParser {
 public:
  TextParser(std::string_view s, std::size_t m) : s_(s), m_(m) {}

  LaurentPoly run() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    int sign = read_signs(/*required=*/false);
    terms.push_back(read_term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      sign = read_signs(/*required=*/true);
      terms.push_back(read_term(sign));
    }
    return LaurentPoly::from_terms(m_, std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial text, position " + std::to_string(pos_) + ": " + what);
  }

  int read_signs(bool required) {
    int sign = 1;
    bool seen = false;
    while (true) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        if (c == '-') sign = -sign;
        seen = true;
        ++pos_;
      } else {
        break;
      }
    }
    if (required && !seen) fail("expected '+' or '-'");
    return sign;
  }

  std::string read_digits() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  Term read_term(int sign) {
    Integer coeff = sign;
    Monomial mono(m_);
    while (true) {
      skip_ws();
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        coeff *= Integer(read_digits());
      } else if (c == 'x') {
        ++pos_;
        std::size_t idx = std::stoul(read_digits());
        if (idx < 1 || idx > m_) fail("variable x" + std::to_string(idx) + " out of range");
        int e = 1;
        skip_ws();
        if (peek() == '^') {
          ++pos_;
          skip_ws();
          int esign = 1;
          if (peek() == '-' || peek() == '+') {
            if (peek() == '-') esign = -1;
            ++pos_;
          }
          e = esign * std::stoi(read_digits());
        }
        mono[idx - 1] += e;
      } else {
        fail("expected coefficient or variable");
      }
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
    }
    return {std::move(mono), std::move(coeff)};
  }

  std::string_view s_;
  std::size_t m_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text, std::size_t var_count) {
  return TextParser(text, var_count).run();
}

nlohmann::ordered_json to_json(const LaurentPoly& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json jt;
    jt["coeff"] = t.coeff.get_str();
    jt["exps"] = std::vector<int>(t.mono.exps().begin(), t.mono.exps().end());
    terms.push_back(std::move(jt));
  }
  nlohmann::ordered_json j;
  j["vars"] = p.var_count();
  j["terms"] = std::move(terms);
  return j;
}

LaurentPoly laurent_from_json(const nlohmann::ordered_json& j) {
  try {
    auto m = j.at("vars").get<std::size_t>();
    std::vector<Term> terms;
    for (const auto& jt : j.at("terms")) {
      auto exps = jt.at("exps").get<std::vector<int>>();
      if (exps.size() != m) throw ParseError("term exponent vector has wrong length");
      terms.push_back({Monomial(std::move(exps)), Integer(jt.at("coeff").get<std::string>())});
    }
    return LaurentPoly::from_terms(m, std::move(terms));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("polynomial JSON: coefficient is not a decimal integer");
  }
}

std::size_t LaurentHash::operator()(const LaurentPoly& p) const {
  std::size_t h = p.var_count();
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& t : p.terms()) {
    for (int e : t.mono.exps()) mix(static_cast<std::size_t>(e));
    mix(static_cast<std::size_t>(mpz_get_si(t.coeff.get_mpz_t())));
  }
  return h;
}

}  // namespace ctube
