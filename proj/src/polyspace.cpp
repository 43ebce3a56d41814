#include "shortres/polyspace.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace shortres {

Monomial Monomial::variable(std::size_t nvars, std::size_t k) {
  Monomial m(nvars);
  m.exp.at(k) = 1;
  return m;
}

unsigned Monomial::degree() const {
  unsigned d = 0;
  for (auto x : exp) d += x;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  if (o.exp.size() != exp.size()) throw std::invalid_argument("monomials over different variable sets");
  Monomial r = *this;
  for (std::size_t i = 0; i < exp.size(); ++i) {
    unsigned s = exp[i] + o.exp[i];
    if (s > 255) throw std::overflow_error("exponent overflow");
    r.exp[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < exp.size(); ++i)
    if (exp[i] > o.exp[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
  if (!divides(o)) throw std::invalid_argument("monomial does not divide");
  Monomial r = o;
  for (std::size_t i = 0; i < exp.size(); ++i) r.exp[i] = static_cast<std::uint8_t>(o.exp[i] - exp[i]);
  return r;
}

bool grlex_less(const Monomial& a, const Monomial& b) {
  unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp < b.exp;
}

namespace {

void fill_basis(std::size_t e, unsigned d, std::size_t pos, Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == e) {
    cur.exp[pos] = static_cast<std::uint8_t>(d);
    out.push_back(cur);
    return;
  }
  for (unsigned k = d + 1; k-- > 0;) {
    cur.exp[pos] = static_cast<std::uint8_t>(k);
    fill_basis(e, d - k, pos + 1, cur, out);
  }
  cur.exp[pos] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t e, unsigned d) {
  std::vector<Monomial> out;
  if (e == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  Monomial cur(e);
  fill_basis(e, d, 0, cur, out);
  return out;
}

MonomialIndex::MonomialIndex(const std::vector<Monomial>& monos) {
  table_.reserve(monos.size());
  for (std::size_t i = 0; i < monos.size(); ++i) table_.emplace(key(monos[i]), i);
}

std::uint64_t MonomialIndex::key(const Monomial& m) {
  if (m.nvars() > 10) throw std::out_of_range("at most 10 variables are supported");
  std::uint64_t k = 0;
  for (auto x : m.exp) {
    if (x >= 64) throw std::out_of_range("exponent too large for monomial index");
    k = (k << 6) | x;
  }
  return k;
}

std::size_t MonomialIndex::find(const Monomial& m) const {
  auto it = table_.find(key(m));
  return it == table_.end() ? npos : it->second;
}

std::size_t MonomialIndex::at(const Monomial& m) const {
  auto i = find(m);
  if (i == npos) throw std::out_of_range("monomial not in index");
  return i;
}

// ---------------------------------------------------------------------------

Poly Poly::constant(PrimeField field, std::size_t nvars, std::uint32_t c) {
  Poly f(field, nvars);
  f.add_term(Monomial(nvars), c);
  return f;
}

Poly Poly::variable(PrimeField field, std::size_t nvars, std::size_t k) {
  Poly f(field, nvars);
  f.add_term(Monomial::variable(nvars, k), 1);
  return f;
}

Poly Poly::term(PrimeField field, const Monomial& m, std::uint32_t c) {
  Poly f(field, m.nvars());
  f.add_term(m, c);
  return f;
}

std::uint32_t Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Poly::add_term(const Monomial& m, std::uint32_t c) {
  if (m.nvars() != nvars_) throw std::invalid_argument("monomial has wrong number of variables");
  c %= field_.p();
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (inserted) return;
  it->second = field_.add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree() == terms_.rbegin()->first.degree();
}

int Poly::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

int Poly::low_degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first.degree()); }

Poly Poly::homogeneous_part(unsigned d) const {
  Poly r(field_, nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() == d) r.terms_.emplace(m, c);
  return r;
}

Poly Poly::truncated(unsigned d) const {
  Poly r(field_, nvars_);
  for (const auto& [m, c] : terms_)
    if (m.degree() <= d) r.terms_.emplace(m, c);
  return r;
}

void Poly::check_compatible(const Poly& o) const {
  if (nvars_ != o.nvars_ || !(field_ == o.field_))
    throw std::invalid_argument("polynomials from different rings");
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(field_, nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly r(field_, nvars_);
  for (const auto& [m1, c1] : terms_)
    for (const auto& [m2, c2] : o.terms_) r.add_term(m1 * m2, field_.mul(c1, c2));
  return r;
}

Poly Poly::mul_trunc(const Poly& o, unsigned cap) const {
  check_compatible(o);
  Poly r(field_, nvars_);
  for (const auto& [m1, c1] : terms_) {
    unsigned d1 = m1.degree();
    if (d1 > cap) continue;
    for (const auto& [m2, c2] : o.terms_)
      if (d1 + m2.degree() <= cap) r.add_term(m1 * m2, field_.mul(c1, c2));
  }
  return r;
}

Poly Poly::scaled(std::uint32_t c) const {
  Poly r(field_, nvars_);
  if (c % field_.p() == 0) return r;
  for (const auto& [m, x] : terms_) r.terms_.emplace(m, field_.mul(x, c));
  return r;
}

Poly Poly::pow(unsigned n) const {
  Poly r = constant(field_, nvars_, 1);
  for (unsigned i = 0; i < n; ++i) r = r * *this;
  return r;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
  if (images.size() != nvars_) throw std::invalid_argument("substitution needs one image per variable");
  if (images.empty()) return *this;
  const std::size_t target = images.front().nvars();
  Poly r(field_, target);
  for (const auto& [m, c] : terms_) {
    Poly t = constant(field_, target, c);
    for (std::size_t k = 0; k < nvars_; ++k)
      if (m.exp[k]) t = t * images[k].pow(m.exp[k]);
    r = r + t;
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, const PrimeField& field)
      : s_(text), vars_(vars), field_(field) {}

  Poly run() {
    skip();
    if (pos_ == s_.size()) throw ParseError("empty expression", pos_);
    Poly f = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return f;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    skip();
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly f = term();
    if (neg) f = -f;
    while (true) {
      if (eat('+'))
        f = f + term();
      else if (eat('-'))
        f = f - term();
      else
        return f;
    }
  }

  Poly term() {
    Poly f = factor();
    while (eat('*')) f = f * factor();
    return f;
  }

  Poly factor() {
    Poly base = primary();
    if (eat('^')) {
      skip();
      std::size_t at = pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected exponent", pos_);
      unsigned long n = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        n = n * 10 + static_cast<unsigned long>(s_[pos_++] - '0');
        if (n > 255) throw ParseError("exponent too large", at);
      }
      return base.pow(static_cast<unsigned>(n));
    }
    return base;
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly f = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return f;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = (v * 10 + static_cast<std::uint64_t>(s_[pos_++] - '0')) % field_.p();
      return Poly::constant(field_, vars_.size(), static_cast<std::uint32_t>(v));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string_view name = s_.substr(start, pos_ - start);
      auto it = std::find(vars_.begin(), vars_.end(), name);
      if (it == vars_.end()) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      return Poly::variable(field_, vars_.size(), static_cast<std::size_t>(it - vars_.begin()));
    }
    throw ParseError(std::string("unexpected '") + c + "'", pos_);
  }

  std::string_view s_;
  const std::vector<std::string>& vars_;
  const PrimeField& field_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const std::vector<std::string>& vars, const PrimeField& field) {
  return Parser(text, vars, field).run();
}

std::string to_string(const Poly& f, const std::vector<std::string>& vars) {
  if (vars.size() != f.nvars()) throw std::invalid_argument("variable name count mismatch");
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    std::int64_t s = f.field().symmetric(c);
    std::int64_t mag = s < 0 ? -s : s;
    if (first)
      os << (s < 0 ? "-" : "");
    else
      os << (s < 0 ? " - " : " + ");
    first = false;
    bool constant = m.degree() == 0;
    bool wrote = false;
    if (constant || mag != 1) {
      os << mag;
      wrote = true;
    }
    for (std::size_t k = 0; k < m.nvars(); ++k) {
      if (!m.exp[k]) continue;
      if (wrote) os << '*';
      os << vars[k];
      if (m.exp[k] > 1) os << '^' << static_cast<unsigned>(m.exp[k]);
      wrote = true;
    }
  }
  return os.str();
}

std::vector<std::string> default_var_names(std::size_t e) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < e; ++i) out.push_back(e <= 4 ? small[i] : "x" + std::to_string(i + 1));
  return out;
}

Vec coordinates(const Poly& f, unsigned d, const std::vector<Monomial>& basis, const MonomialIndex& index) {
  Vec v(basis.size(), 0);
  for (const auto& [m, c] : f.terms())
    if (m.degree() == d) v[index.at(m)] = c;
  return v;
}

Poly from_coordinates(const PrimeField& field, std::size_t nvars, std::span<const std::uint32_t> v,
                      const std::vector<Monomial>& basis) {
  Poly f(field, nvars);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) f.add_term(basis.at(i), v[i]);
  return f;
}

Matrix mult_map(const Poly& f, unsigned d, unsigned cap) {
  if (!f.is_homogeneous()) throw std::invalid_argument("mult_map needs a homogeneous polynomial");
  const unsigned d0 = f.is_zero() ? 0 : static_cast<unsigned>(f.degree());
  if (d + d0 > cap) throw std::out_of_range("mult_map exceeds the degree cap");
  auto src = monomial_basis(f.nvars(), d);
  auto dst = monomial_basis(f.nvars(), d + d0);
  MonomialIndex index(dst);
  Matrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j)
    for (const auto& [mono, c] : f.terms()) {
      auto& x = m.at(index.at(mono * src[j]), j);
      x = f.field().add(x, c);
    }
  return m;
}

}  // namespace shortres
