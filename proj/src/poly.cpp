#include "specsup/poly.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

#include "specsup/errors.hpp"

namespace specsup {

Polynomial::Polynomial(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int k) {
  std::vector<Rational> v(k + 1, 0);
  v[k] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational Polynomial::coefficient(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

const Rational& Polynomial::leading() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Polynomial::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (c_.empty()) return *this;
  return Rational(1) / leading() * *this;
}

Polynomial Polynomial::compose(const Polynomial& inner) const {
  Polynomial acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + constant(*it);
  return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(c_);
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& k, const Polynomial& p) {
  std::vector<Rational> c(p.c_);
  for (auto& x : c) x *= k;
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& d) const {
  if (d.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> r(c_);
  const int dd = d.degree();
  std::vector<Rational> q(std::max(0, degree() - dd + 1), 0);
  for (int k = degree(); k >= dd; --k) {
    if (r[k] == 0) continue;
    Rational f = r[k] / d.leading();
    q[k - dd] = f;
    for (int j = 0; j <= dd; ++j) r[k - dd + j] -= f * d.c_[j];
  }
  return {Polynomial(std::move(q)), Polynomial(std::move(r))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string Polynomial::to_string(std::string_view var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) {
      out << mag.get_str();
      if (k > 0) out << "*";
    }
    if (k >= 1) out << var;
    if (k >= 2) out << "^" << k;
  }
  return out.str();
}

int sign(const Rational& r) { return sgn(r); }

int sign_at(const Polynomial& p, const Rational& x) { return sign(p(x)); }

int sign_at(const Polynomial& p, const Surd& x) {
  if (x.c < 0) throw DomainError("surd radicand must be non-negative");
  // Horner in Q(sqrt c): (P + Q r)(a + b r) = (Pa + Qbc) + (Pb + Qa) r.
  Rational P = 0;
  Rational Q = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    Rational np = P * x.a + Q * x.b * x.c + *it;
    Rational nq = P * x.b + Q * x.a;
    P = std::move(np);
    Q = std::move(nq);
  }
  const int sp = sign(P);
  const int sq = x.c == 0 ? 0 : sign(Q);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare P^2 with Q^2 c.
  const int cmp = sign(P * P - Q * Q * x.c);
  return cmp > 0 ? sp : (cmp < 0 ? sq : 0);
}

int sign_at_infinity(const Polynomial& p) { return p.is_zero() ? 0 : sign(p.leading()); }

namespace {

class SurdParser {
 public:
  explicit SurdParser(std::string_view s) : s_(s) {}

  Surd run() {
    Surd out{0, 0, 0};
    skip();
    if (pos_ == s_.size()) throw ParseError("empty surd", pos_);
    bool first = true;
    while (pos_ < s_.size()) {
      int sgn = 1;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        sgn = s_[pos_] == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      Rational coeff = 1;
      bool have_number = false;
      if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])))) {
        coeff = number();
        have_number = true;
        skip();
        if (pos_ < s_.size() && s_[pos_] == '*') {
          ++pos_;
          skip();
        } else if (!starts_sqrt()) {
          add_rational(out, sgn * coeff);
          continue;
        }
      }
      if (starts_sqrt()) {
        pos_ += 4;
        skip();
        expect('(');
        Rational r = number();
        skip();
        expect(')');
        if (r < 0) throw ParseError("negative radicand", pos_);
        if (out.b != 0 && out.c != r) throw ParseError("only one radicand supported", pos_);
        out.c = r;
        out.b += sgn * coeff;
        skip();
      } else if (!have_number) {
        throw ParseError("expected number or sqrt(...)", pos_);
      }
    }
    return out;
  }

 private:
  void add_rational(Surd& s, const Rational& r) { s.a += r; }
  bool starts_sqrt() const { return s_.substr(pos_, 4) == "sqrt"; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
    skip();
  }
  Rational number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '/')) ++pos_;
    if (start == pos_) throw ParseError("expected number", pos_);
    Rational r;
    try {
      r = Rational(std::string(s_.substr(start, pos_ - start)));
      r.canonicalize();
    } catch (const std::invalid_argument&) {
      throw ParseError("malformed number", start);
    }
    if (r.get_den() == 0) throw ParseError("zero denominator", start);
    return r;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Surd parse_surd(std::string_view text) { return SurdParser(text).run(); }

SturmSequence::SturmSequence(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
  Polynomial sf = p.degree() > 0 ? p.divmod(gcd(p, p.derivative())).first : p;
  chain_.push_back(sf);
  if (sf.degree() > 0) chain_.push_back(sf.derivative());
  while (chain_.back().degree() > 0) {
    Polynomial r = chain_[chain_.size() - 2].divmod(chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmSequence::variations(const Rational& x) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmSequence::count(const Rational& a, const Rational& b) const {
  return variations(a) - variations(b);
}

Rational root_bound(const Polynomial& p) {
  if (p.degree() < 1) return 1;
  Rational m = 0;
  for (int k = 0; k < p.degree(); ++k) m = std::max<Rational>(m, abs(p.coefficient(k) / p.leading()));
  return m + 1;
}

RootInterval largest_root_interval(const Polynomial& p, const Rational& width,
                                   std::optional<std::pair<Rational, Rational>> bracket) {
  if (p.is_zero()) throw DomainError("the zero polynomial has no largest root");
  const SturmSequence sturm(p);
  const Rational bound = root_bound(p);
  if (sturm.count(-bound, bound) == 0) {
    throw DomainError("polynomial " + p.to_string() + " has no real root");
  }
  // Invariant: at least one root in (lo, bound], none in (hi, bound].
  Rational lo = -bound;
  Rational hi = bound;
  if (bracket) {
    auto [a, b] = *bracket;
    if (a < b && sturm.count(a, bound) >= 1 && sturm.count(b, bound) == 0) {
      lo = a;
      hi = b;
    }
  }
  while (hi - lo > width) {
    Rational mid = (lo + hi) / 2;
    if (sturm.count(mid, bound) >= 1) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

double largest_real_root(const Polynomial& p, std::optional<std::pair<Rational, Rational>> bracket) {
  RootInterval r = largest_root_interval(p, Rational(1UL, 1000000000000UL), bracket);
  // An exact root at hi is reported exactly.
  if (p(r.hi) == 0) return r.hi.get_d();
  return r.midpoint();
}

int compare_largest_roots(const Polynomial& p, const Polynomial& q) {
  const SturmSequence sp(p);
  const SturmSequence sq(q);
  const Rational bound = std::max(root_bound(p), root_bound(q));
  if (sp.count(-bound, bound) == 0 || sq.count(-bound, bound) == 0) {
    throw DomainError("root comparison needs polynomials with real roots");
  }
  // Equal largest roots are a common root, hence the largest root of the gcd.
  const Polynomial g = gcd(sp.squarefree(), sq.squarefree());
  if (g.degree() >= 1) {
    const SturmSequence sg(g);
    if (sg.count(-bound, bound) >= 1) {
      Rational lo = -bound;
      Rational hi = bound;
      while (sp.count(hi, bound) == 0 && sq.count(hi, bound) == 0) {
        if (sp.count(lo, bound) == 1 && sq.count(lo, bound) == 1) return 0;
        Rational mid = (lo + hi) / 2;
        if (sg.count(mid, bound) >= 1) {
          lo = mid;
        } else {
          hi = mid;
        }
      }
    }
  }
  for (Rational width = 1; ; width /= 2) {
    const RootInterval a = largest_root_interval(p, width);
    const RootInterval b = largest_root_interval(q, width);
    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;
  }
}

// ---------------------------------------------------------------------------

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly out;
  if (c != 0) out.terms_[{0, 0, 0, 0}] = c;
  return out;
}

MultiPoly MultiPoly::variable(Var v) {
  MultiPoly out;
  Exponents e{0, 0, 0, 0};
  e[v] = 1;
  out.terms_[e] = 1;
  return out;
}

void MultiPoly::trim() { std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; }); }

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0, 0});
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.terms_[e] += c;
  out.trim();
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out = a;
  for (const auto& [e, c] : b.terms_) out.terms_[e] -= c;
  out.trim();
  return out;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      MultiPoly::Exponents e;
      for (int i = 0; i < 4; ++i) e[i] = ea[i] + eb[i];
      out.terms_[e] += ca * cb;
    }
  }
  out.trim();
  return out;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw DomainError("negative exponent");
  MultiPoly out = constant(1);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Polynomial MultiPoly::substitute(const std::array<Polynomial, 4>& images) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) {
    Polynomial term = Polynomial::constant(c);
    for (int v = 0; v < 4; ++v) {
      for (int k = 0; k < e[v]; ++k) term = term * images[v];
    }
    out = out + term;
  }
  return out;
}

Polynomial MultiPoly::in_x(const Rational& n, const Rational& s, const Rational& t) const {
  return substitute({Polynomial::monomial(1, 1), Polynomial::constant(n), Polynomial::constant(s),
                     Polynomial::constant(t)});
}

namespace {

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  MultiPoly run() {
    MultiPoly out = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return out;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool starts_primary() {
    char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'x' || c == 'n' || c == 's' ||
           c == 't';
  }

  MultiPoly expr() {
    MultiPoly acc;
    bool first = true;
    while (true) {
      char c = peek();
      int sgn = 1;
      if (c == '+' || c == '-') {
        sgn = c == '-' ? -1 : 1;
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      MultiPoly t = term();
      acc = sgn > 0 ? acc + t : acc - t;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        const std::size_t at = pos_++;
        MultiPoly d = factor();
        if (!d.is_constant() || d.terms().empty()) throw ParseError("division only by non-zero constants", at);
        acc = acc * MultiPoly::constant(1 / d.terms().begin()->second);
      } else if (starts_primary()) {
        acc = acc * factor();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    if (peek() == '-') {
      ++pos_;
      return MultiPoly::constant(-1) * factor();
    }
    MultiPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected integer exponent", pos_);
      base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  MultiPoly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (peek() != ')') throw ParseError("expected ')'", pos_);
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MultiPoly::constant(Rational(std::string(s_.substr(start, pos_ - start))));
    }
    const std::size_t at = pos_;
    ++pos_;
    // A variable must not run into further letters ("sqrt", "xy").
    if (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) {
      throw ParseError("unknown identifier", at);
    }
    switch (c) {
      case 'x': return MultiPoly::variable(MultiPoly::X);
      case 'n': return MultiPoly::variable(MultiPoly::N);
      case 's': return MultiPoly::variable(MultiPoly::S);
      case 't': return MultiPoly::variable(MultiPoly::T);
      default: throw ParseError(c ? "unexpected character" : "unexpected end of input", at);
    }
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return ExprParser(text).run(); }

}  // namespace specsup
