#include "ttow/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ttow {

unsigned total_degree(const Monomial &m) {
  unsigned d = 0;
  for (auto e : m)
    d += e;
  return d;
}

bool divides(const Monomial &a, const Monomial &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

Monomial lcm(const Monomial &a, const Monomial &b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    m[i] = std::max(a[i], b[i]);
  return m;
}

Monomial mono_mul(const Monomial &a, const Monomial &b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    m[i] = a[i] + b[i];
  return m;
}

Monomial mono_div(const Monomial &b, const Monomial &a) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    m[i] = b[i] - a[i];
  return m;
}

bool coprime(const Monomial &a, const Monomial &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && b[i])
      return false;
  return true;
}

namespace {

int cmp_grevlex(const Monomial &a, const Monomial &b, std::size_t lo,
                std::size_t hi) {
  unsigned da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db)
    return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;)
    if (a[i] != b[i])
      return a[i] > b[i] ? -1 : 1;
  return 0;
}

int cmp_lex(const Monomial &a, const Monomial &b, std::size_t lo,
            std::size_t hi) {
  for (std::size_t i = lo; i < hi; ++i)
    if (a[i] != b[i])
      return a[i] < b[i] ? -1 : 1;
  return 0;
}

} // namespace

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::lex;
  return o;
}

MonomialOrder MonomialOrder::block(std::size_t k, const MonomialOrder &inner) {
  if (inner.kind_ == Kind::block)
    throw OrderMismatch("nested block orders are not supported");
  MonomialOrder o;
  o.kind_ = Kind::block;
  o.k_ = k;
  o.inner_ = inner.kind_;
  return o;
}

MonomialOrder MonomialOrder::parse(const std::string &s) {
  if (s == "grevlex")
    return grevlex();
  if (s == "lex")
    return lex();
  throw ParseError("unknown monomial order: " + s);
}

int MonomialOrder::compare(const Monomial &a, const Monomial &b) const {
  std::size_t n = a.size();
  switch (kind_) {
  case Kind::grevlex:
    return cmp_grevlex(a, b, 0, n);
  case Kind::lex:
    return cmp_lex(a, b, 0, n);
  case Kind::block: {
    std::size_t k = std::min(k_, n);
    int c = cmp_grevlex(a, b, 0, k);
    if (c)
      return c;
    return inner_ == Kind::lex ? cmp_lex(a, b, k, n) : cmp_grevlex(a, b, k, n);
  }
  }
  return 0;
}

MonomialOrder MonomialOrder::tail() const {
  if (kind_ != Kind::block)
    return *this;
  return inner_ == Kind::lex ? lex() : grevlex();
}

std::string MonomialOrder::str() const {
  switch (kind_) {
  case Kind::grevlex:
    return "grevlex";
  case Kind::lex:
    return "lex";
  case Kind::block:
    return "block(" + std::to_string(k_) + "," +
           (inner_ == Kind::lex ? "lex" : "grevlex") + ")";
  }
  return "";
}

MultiPoly MultiPoly::constant(const FieldSpec &f, std::size_t nvars,
                              const Scalar &c) {
  MultiPoly p(f, nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(const FieldSpec &f, std::size_t nvars,
                              std::size_t i) {
  if (i >= nvars)
    throw DimensionMismatch("variable index out of range");
  Monomial m(nvars, 0);
  m[i] = 1;
  return term(f, m, Scalar::one(f));
}

MultiPoly MultiPoly::term(const FieldSpec &f, const Monomial &m,
                          const Scalar &c) {
  MultiPoly p(f, m.size());
  p.add_term(m, c);
  return p;
}

Scalar MultiPoly::coeff(const Monomial &m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void MultiPoly::add_term(const Monomial &m, const Scalar &c) {
  if (m.size() != n_)
    throw DimensionMismatch("monomial length");
  if (c.field() != field_)
    throw FieldMismatch("coefficient over another field");
  if (c.is_zero())
    return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero())
      terms_.erase(it);
  }
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const auto &[m, c] : terms_)
    d = std::max(d, ttow::total_degree(m));
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto &[m, c] : terms_)
    d = std::max(d, m[var]);
  return d;
}

bool MultiPoly::is_linear_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto &kv) {
    return ttow::total_degree(kv.first) == 1;
  });
}

const Monomial &MultiPoly::lead(const MonomialOrder &o) const {
  if (terms_.empty())
    throw DimensionMismatch("leading term of the zero polynomial");
  auto best = terms_.begin();
  for (auto it = std::next(best); it != terms_.end(); ++it)
    if (o.compare(it->first, best->first) > 0)
      best = it;
  return best->first;
}

const Scalar &MultiPoly::lead_coeff(const MonomialOrder &o) const {
  return terms_.at(lead(o));
}

MultiPoly MultiPoly::monic(const MonomialOrder &o) const {
  if (is_zero())
    return *this;
  return scaled(lead_coeff(o).inv());
}

void MultiPoly::check(const MultiPoly &b) const {
  if (n_ != b.n_)
    throw DimensionMismatch("polynomials in different variable counts");
  if (field_ != b.field_)
    throw FieldMismatch("polynomials over different fields");
}

MultiPoly MultiPoly::operator+(const MultiPoly &b) const {
  check(b);
  MultiPoly r = *this;
  for (const auto &[m, c] : b.terms_)
    r.add_term(m, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly &b) const {
  check(b);
  MultiPoly r = *this;
  for (const auto &[m, c] : b.terms_)
    r.add_term(m, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly &b) const {
  check(b);
  MultiPoly r(field_, n_);
  for (const auto &[m1, c1] : terms_)
    for (const auto &[m2, c2] : b.terms_)
      r.add_term(mono_mul(m1, m2), c1 * c2);
  return r;
}

MultiPoly MultiPoly::operator-() const { return scaled(-Scalar::one(field_)); }

MultiPoly MultiPoly::scaled(const Scalar &s) const {
  MultiPoly r(field_, n_);
  if (s.is_zero())
    return r;
  for (const auto &[m, c] : terms_)
    r.terms_.emplace(m, c * s);
  return r;
}

MultiPoly MultiPoly::mul_term(const Monomial &mm, const Scalar &cc) const {
  MultiPoly r(field_, n_);
  if (cc.is_zero())
    return r;
  for (const auto &[m, c] : terms_)
    r.terms_.emplace(mono_mul(m, mm), c * cc);
  return r;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(field_, n_, Scalar::one(field_));
  for (unsigned i = 0; i < k; ++i)
    r = r * *this;
  return r;
}

Scalar MultiPoly::eval(const std::vector<Scalar> &x) const {
  if (x.size() != n_)
    throw DimensionMismatch("evaluation point length");
  Scalar s = Scalar::zero(field_);
  for (const auto &[m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < n_; ++i)
      if (m[i])
        t *= x[i].pow(m[i]);
    s += t;
  }
  return s;
}

MultiPoly MultiPoly::remap(std::size_t nvars,
                           const std::vector<std::size_t> &map) const {
  MultiPoly r(field_, nvars);
  for (const auto &[m, c] : terms_) {
    Monomial e(nvars, 0);
    for (std::size_t i = 0; i < n_; ++i)
      if (m[i]) {
        if (map.at(i) >= nvars)
          throw DimensionMismatch("variable map out of range");
        e[map[i]] += m[i];
      }
    r.add_term(e, c);
  }
  return r;
}

std::string MultiPoly::str(const MonomialOrder &o) const {
  if (terms_.empty())
    return "0";
  std::vector<std::pair<Monomial, Scalar>> ts(terms_.begin(), terms_.end());
  std::sort(ts.begin(), ts.end(), [&](const auto &a, const auto &b) {
    return o.compare(a.first, b.first) > 0;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto &[m, c] : ts) {
    std::string cs = c.str();
    bool neg = field_.is_rational() && cs[0] == '-';
    if (neg)
      cs.erase(0, 1);
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    bool unit = cs == "1";
    bool any = false;
    if (!unit || ttow::total_degree(m) == 0) {
      os << cs;
      any = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) {
        if (any)
          os << "*";
        os << "x" << i;
        if (m[i] > 1)
          os << "^" << m[i];
        any = true;
      }
  }
  return os.str();
}

std::ostream &operator<<(std::ostream &os, const MultiPoly &p) {
  return os << p.str();
}

namespace {

struct RawTerm {
  std::string coeff = "1";
  bool neg = false;
  std::vector<std::pair<std::size_t, unsigned>> vars;
};

} // namespace

MultiPoly MultiPoly::parse(const FieldSpec &f, const std::string &text,
                           std::size_t nvars) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw ParseError("empty polynomial");
  std::vector<RawTerm> raw;
  std::size_t i = 0, maxvar = 0;
  bool anyvar = false;
  auto read_uint = [&](const char *what) {
    std::size_t st = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
      ++i;
    if (st == i)
      throw ParseError(std::string("expected ") + what + " in: " + text);
    return s.substr(st, i - st);
  };
  while (i < s.size()) {
    RawTerm t;
    if (s[i] == '+' || s[i] == '-') {
      t.neg = s[i] == '-';
      ++i;
    } else if (!raw.empty()) {
      throw ParseError("expected + or - in: " + text);
    }
    bool have_coeff = false;
    while (true) {
      if (i >= s.size())
        throw ParseError("dangling operator in: " + text);
      if (std::isdigit(static_cast<unsigned char>(s[i]))) {
        if (have_coeff)
          throw ParseError("two coefficients in one term: " + text);
        std::string num = read_uint("number");
        if (i < s.size() && s[i] == '/') {
          ++i;
          num += "/" + read_uint("denominator");
        }
        t.coeff = num;
        have_coeff = true;
      } else if (s[i] == 'x') {
        ++i;
        std::size_t v = std::stoul(read_uint("variable index"));
        unsigned e = 1;
        if (i < s.size() && s[i] == '^') {
          ++i;
          e = static_cast<unsigned>(std::stoul(read_uint("exponent")));
        }
        t.vars.emplace_back(v, e);
        maxvar = std::max(maxvar, v);
        anyvar = true;
      } else {
        throw ParseError("unexpected character '" + std::string(1, s[i]) +
                         "' in: " + text);
      }
      if (i < s.size() && s[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    raw.push_back(std::move(t));
  }
  std::size_t n = nvars ? nvars : (anyvar ? maxvar + 1 : 1);
  if (anyvar && maxvar >= n)
    throw ParseError("variable x" + std::to_string(maxvar) +
                     " beyond the ring in: " + text);
  MultiPoly p(f, n);
  for (const auto &t : raw) {
    Monomial m(n, 0);
    for (auto [v, e] : t.vars)
      m[v] += e;
    Scalar c = Scalar::parse(f, t.coeff);
    p.add_term(m, t.neg ? -c : c);
  }
  return p;
}

} // namespace ttow
