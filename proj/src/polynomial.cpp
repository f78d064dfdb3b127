#include "zipmot/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "zipmot/error.hpp"

namespace zipmot {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
  for (const int x : e_) {
    ensure(x >= 0, "negative exponent in monomial");
    deg_ += x;
  }
}

Monomial Monomial::variable(int rank, int i) {
  ensure(i >= 0 && i < rank, "variable index out of range");
  std::vector<int> e(rank, 0);
  e[i] = 1;
  return Monomial(std::move(e));
}

Monomial Monomial::times(const Monomial& o) const {
  ensure(rank() == o.rank(), "monomial rank mismatch");
  std::vector<int> e(e_);
  for (int i = 0; i < rank(); ++i) e[i] += o.e_[i];
  return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const {
  if (rank() != m.rank()) return false;
  for (int i = 0; i < rank(); ++i)
    if (e_[i] > m.e_[i]) return false;
  return true;
}

Monomial Monomial::divided_into(const Monomial& m) const {
  ensure(divides(m), "inexact monomial division");
  std::vector<int> e(m.e_);
  for (int i = 0; i < rank(); ++i) e[i] -= e_[i];
  return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  ensure(a.rank() == b.rank(), "monomial rank mismatch");
  std::vector<int> e(a.e_);
  for (int i = 0; i < a.rank(); ++i) e[i] = std::max(e[i], b.e_[i]);
  return Monomial(std::move(e));
}

bool Monomial::coprime(const Monomial& o) const {
  for (int i = 0; i < rank(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

int Monomial::cmp(const Monomial& a, const Monomial& b) {
  ensure(a.rank() == b.rank(), "monomial rank mismatch");
  if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
  // Equal degree: a > b iff the last nonzero entry of a - b is negative.
  for (int i = a.rank() - 1; i >= 0; --i) {
    const int d = a.e_[i] - b.e_[i];
    if (d != 0) return d < 0 ? 1 : -1;
  }
  return 0;
}

std::string Monomial::str() const {
  if (is_one()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < rank(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) os << "*";
    os << "x" << (i + 1);
    if (e_[i] > 1) os << "^" << e_[i];
    first = false;
  }
  return os.str();
}

namespace {
bool term_desc(const Term& a, const Term& b) { return Monomial::cmp(a.mono, b.mono) > 0; }
}  // namespace

MultiPoly MultiPoly::constant(int rank, const Rational& c) {
  MultiPoly p(rank);
  if (!c.is_zero()) p.terms_.push_back({Monomial::one(rank), c});
  return p;
}

MultiPoly MultiPoly::variable(int rank, int i) {
  MultiPoly p(rank);
  p.terms_.push_back({Monomial::variable(rank, i), Rational(1)});
  return p;
}

MultiPoly MultiPoly::from_terms(int rank, std::vector<Term> terms) {
  for (const auto& t : terms)
    ensure(t.mono.rank() == rank, "term rank mismatch");
  std::sort(terms.begin(), terms.end(), term_desc);
  MultiPoly p(rank);
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono)
      p.terms_.back().coeff += t.coeff;
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
  return p;
}

const Term& MultiPoly::leading_term() const {
  ensure(!terms_.empty(), "leading term of the zero polynomial");
  return terms_.front();
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const Term& t) { return t.mono.degree() == d; });
}

Rational MultiPoly::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Rational(0);
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
  require(rank_ == o.rank_, "polynomials live in different variable sets");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  MultiPoly out(a.rank_);
  out.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && Monomial::cmp(a.terms_[i].mono, b.terms_[j].mono) > 0)) {
      out.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() ||
               Monomial::cmp(a.terms_[i].mono, b.terms_[j].mono) < 0) {
      out.terms_.push_back(b.terms_[j++]);
    } else {
      Rational c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!c.is_zero()) out.terms_.push_back({a.terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  return out;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  if (a.is_zero() || b.is_zero()) return MultiPoly::zero(a.rank_);
  struct MonoLess {
    bool operator()(const Monomial& x, const Monomial& y) const {
      return Monomial::cmp(x, y) < 0;
    }
  };
  std::map<Monomial, Rational, MonoLess> acc;
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      const Monomial m = ta.mono.times(tb.mono);
      auto [it, fresh] = acc.try_emplace(m, Rational(0));
      it->second += ta.coeff * tb.coeff;
      (void)fresh;
    }
  MultiPoly out(a.rank_);
  out.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) out.terms_.push_back({it->first, it->second});
  return out;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
  if (c.is_zero()) return MultiPoly::zero(rank_);
  MultiPoly p = *this;
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

MultiPoly MultiPoly::times_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return MultiPoly::zero(rank_);
  MultiPoly p(rank_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back({t.mono.times(m), t.coeff * c});
  return p;  // multiplying by a fixed monomial preserves grevlex order
}

MultiPoly MultiPoly::homogeneous_component(int d) const {
  require(d >= 0, "degree must be non-negative");
  MultiPoly p(rank_);
  for (const auto& t : terms_)
    if (t.mono.degree() == d) p.terms_.push_back(t);
  return p;
}

MultiPoly MultiPoly::substitute_linear(const IntMat& m) const {
  require(m.rows() == rank_ && m.cols() == rank_, "substitution matrix rank mismatch");
  // Column i of m is the image of x_i.
  std::vector<MultiPoly> images;
  images.reserve(rank_);
  for (int i = 0; i < rank_; ++i) {
    std::vector<Term> ts;
    for (int j = 0; j < rank_; ++j)
      if (m.at(j, i) != 0) ts.push_back({Monomial::variable(rank_, j), Rational(m.at(j, i))});
    images.push_back(MultiPoly::from_terms(rank_, std::move(ts)));
  }
  // Memoized powers of each image.
  std::vector<std::vector<MultiPoly>> powers(rank_);
  auto image_power = [&](int i, int e) -> const MultiPoly& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(MultiPoly::constant(rank_, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[i]);
    return pw[e];
  };
  MultiPoly out(rank_);
  for (const auto& t : terms_) {
    MultiPoly prod = MultiPoly::constant(rank_, t.coeff);
    for (int i = 0; i < rank_; ++i) {
      const int e = t.mono.exp(i);
      if (e > 0) prod *= image_power(i, e);
    }
    out += prod;
  }
  return out;
}

MultiPoly MultiPoly::monic() const {
  ensure(!is_zero(), "cannot normalize the zero polynomial");
  return scaled(leading_term().coeff.inverse());
}

MultiPoly MultiPoly::primitive_part() const {
  if (is_zero()) return *this;
  mpz_class den(1);
  for (const auto& t : terms_) {
    mpz_class g;
    mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), t.coeff.denominator().get_mpz_t());
    den = g;
  }
  mpz_class content(0);
  for (const auto& t : terms_) {
    const mpz_class num = t.coeff.numerator() * (den / t.coeff.denominator());
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    content = g;
  }
  Rational f = Rational(den) / Rational(content);
  if (leading_term().coeff.sign() < 0) f = -f;
  return scaled(f);
}

QVec MultiPoly::dense_coeffs(const std::vector<Monomial>& basis) const {
  QVec v(basis.size(), Rational(0));
  std::size_t hint = 0;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {  // ascending
    bool placed = false;
    for (std::size_t k = hint; k < basis.size(); ++k)
      if (basis[k] == it->mono) {
        v[k] = it->coeff;
        hint = k + 1;
        placed = true;
        break;
      }
    ensure(placed, "monomial outside the chosen basis");
  }
  return v;
}

MultiPoly MultiPoly::from_dense(const std::vector<Monomial>& basis, const QVec& v, int rank) {
  ensure(basis.size() == v.size(), "basis/vector length mismatch");
  std::vector<Term> ts;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!v[k].is_zero()) ts.push_back({basis[k], v[k]});
  return MultiPoly::from_terms(rank, std::move(ts));
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.rank_ != b.rank_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) ||
        a.terms_[i].coeff != b.terms_[i].coeff)
      return false;
  return true;
}

std::string MultiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    const bool neg = t.coeff.sign() < 0;
    const Rational a = neg ? -t.coeff : t.coeff;
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    if (t.mono.is_one()) {
      os << a.str();
    } else {
      if (!a.is_one()) os << a.str() << "*";
      os << t.mono.str();
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;
  int rank;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw PreconditionError("cannot parse polynomial '" + s + "': " + what);
  }
  long long integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoll(s.substr(start, pos - start));
  }
  Rational number() {
    const long long num = integer();
    if (eat('/')) {
      const long long den = integer();
      return Rational(num, den);
    }
    return Rational(num);
  }

  // term := [number '*'] factor ('*' factor)* | number
  Term term() {
    skip_ws();
    Rational coeff(1);
    std::vector<int> exps(rank, 0);
    bool saw_factor = false;
    bool saw_coeff = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = number();
      saw_coeff = true;
    }
    while (true) {
      skip_ws();
      if (saw_coeff && !saw_factor) {
        if (!eat('*')) break;
      } else if (saw_factor) {
        std::size_t save = pos;
        if (!eat('*')) break;
        skip_ws();
        if (pos >= s.size() || s[pos] != 'x') { pos = save; break; }
      }
      skip_ws();
      if (pos >= s.size() || s[pos] != 'x') fail("expected a variable");
      ++pos;
      const long long idx = integer();
      if (idx < 1 || idx > rank) fail("variable index out of range");
      int e = 1;
      if (eat('^')) e = static_cast<int>(integer());
      exps[idx - 1] += e;
      saw_factor = true;
    }
    if (!saw_coeff && !saw_factor) fail("expected a term");
    return {Monomial(std::move(exps)), coeff};
  }

  MultiPoly parse() {
    std::vector<Term> ts;
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    while (true) {
      Term t = term();
      if (neg) t.coeff = -t.coeff;
      ts.push_back(std::move(t));
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else fail("unexpected character");
    }
    return MultiPoly::from_terms(rank, std::move(ts));
  }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& s, int rank) {
  Parser p{s, 0, rank};
  p.skip_ws();
  if (p.pos < s.size() && s[p.pos] == '0') {
    std::size_t q = p.pos + 1;
    while (q < s.size() && std::isspace(static_cast<unsigned char>(s[q]))) ++q;
    if (q == s.size()) return MultiPoly::zero(rank);
  }
  return p.parse();
}

std::vector<Monomial> monomials_of_degree(int rank, int d) {
  ensure(rank >= 0 && d >= 0, "invalid monomial basis request");
  std::vector<Monomial> out;
  std::vector<int> e(rank, 0);
  // Enumerate recursively, then sort ascending grevlex for a canonical order.
  std::vector<std::vector<int>> all;
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == rank - 1) {
      e[i] = remaining;
      all.push_back(e);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      e[i] = v;
      self(self, i + 1, remaining - v);
    }
  };
  if (rank == 0) {
    if (d == 0) out.push_back(Monomial(std::vector<int>{}));
    return out;
  }
  rec(rec, 0, d);
  out.reserve(all.size());
  for (auto& v : all) out.push_back(Monomial(std::move(v)));
  std::sort(out.begin(), out.end(),
            [](const Monomial& a, const Monomial& b) { return Monomial::cmp(a, b) < 0; });
  return out;
}

}  // namespace zipmot
