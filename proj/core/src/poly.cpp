#include "homconf/poly.hpp"

#include <algorithm>
#include <sstream>

#include "homconf/errors.hpp"

namespace homconf {

namespace {

bool desc(const Poly::Term& a, const Poly::Term& b) { return a.exps > b.exps; }

Monomial add_exps(const Monomial& a, const Monomial& b) {
  Monomial out{};
  for (int i = 0; i < kMaxVars; ++i) {
    out[i] = static_cast<std::uint8_t>(a[i] + b[i]);
  }
  return out;
}

// Sort, merge equal monomials, drop zeros.
void normalize(std::vector<Poly::Term>& terms) {
  std::sort(terms.begin(), terms.end(), desc);
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Poly::Term acc = std::move(terms[i]);
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].exps == acc.exps) {
      acc.coef += terms[j].coef;
      ++j;
    }
    if (sgn(acc.coef) != 0) {
      terms[out++] = std::move(acc);
    }
    i = j;
  }
  terms.resize(out);
}

Rational rpow(const Rational& base, unsigned n) {
  Rational r = 1;
  for (unsigned i = 0; i < n; ++i) r *= base;
  return r;
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names, std::vector<VarClass> classes)
    : names_(std::move(names)), classes_(std::move(classes)) {
  if (names_.size() != classes_.size() || names_.size() > kMaxVars) {
    throw Error("alphabet: bad size");
  }
}

const Alphabet& Alphabet::standard() {
  static const Alphabet instance(
      {"L", "M", "N", "D", "D1", "D2", "D3", "D4", "X0", "X1", "X2", "X3", "X4", "X5", "X6", "X7"},
      {VarClass::Lambda, VarClass::Lambda, VarClass::Lambda, VarClass::Partial, VarClass::Partial,
       VarClass::Partial, VarClass::Partial, VarClass::Partial, VarClass::Temp, VarClass::Temp,
       VarClass::Temp, VarClass::Temp, VarClass::Temp, VarClass::Temp, VarClass::Temp,
       VarClass::Temp});
  return instance;
}

std::optional<Var> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return Var(static_cast<std::uint8_t>(i));
  }
  return std::nullopt;
}

Poly::Poly(const Rational& c) : alphabet_(&Alphabet::standard()) {
  if (sgn(c) != 0) terms_.push_back({Monomial{}, c});
}

Poly Poly::var(Var v, const Alphabet& alphabet) {
  if (v.id() >= alphabet.size()) throw Error("variable outside alphabet");
  Poly p = zero_over(alphabet);
  Monomial m{};
  m[v.id()] = 1;
  p.terms_.push_back({m, Rational(1)});
  p.refresh_mask();
  return p;
}

Poly Poly::zero_over(const Alphabet& alphabet) {
  Poly p;
  p.alphabet_ = &alphabet;
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms, const Alphabet& alphabet) {
  Poly p = zero_over(alphabet);
  normalize(terms);
  p.terms_ = std::move(terms);
  p.refresh_mask();
  return p;
}

void Poly::refresh_mask() {
  var_mask_ = 0;
  for (const auto& t : terms_) {
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.exps[i] != 0) var_mask_ |= (1U << i);
    }
  }
}

void Poly::check_same(const Poly& q) const {
  if (alphabet_ != q.alphabet_) throw AlphabetMismatch();
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exps == Monomial{});
}

Rational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().exps == Monomial{}) return terms_.back().coef;
  return 0;
}

int Poly::degree(Var v) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max<int>(d, t.exps[v.id()]);
  return is_zero() ? -1 : d;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

Poly& Poly::operator+=(const Poly& q) {
  check_same(q);
  if (q.terms_.empty()) return *this;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + q.terms_.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < terms_.size() || j < q.terms_.size()) {
    if (j == q.terms_.size() || (i < terms_.size() && terms_[i].exps > q.terms_[j].exps)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || q.terms_[j].exps > terms_[i].exps) {
      merged.push_back(q.terms_[j++]);
    } else {
      Rational c = terms_[i].coef + q.terms_[j].coef;
      if (sgn(c) != 0) merged.push_back({terms_[i].exps, c});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  refresh_mask();
  return *this;
}

Poly& Poly::operator-=(const Poly& q) { return *this += -q; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

Poly operator*(const Poly& p, const Poly& q) {
  p.check_same(q);
  std::vector<Poly::Term> out;
  out.reserve(p.terms_.size() * q.terms_.size());
  for (const auto& a : p.terms_) {
    for (const auto& b : q.terms_) {
      out.push_back({add_exps(a.exps, b.exps), a.coef * b.coef});
    }
  }
  return Poly::from_terms(std::move(out), *p.alphabet_);
}

Poly& Poly::operator*=(const Poly& q) { return *this = *this * q; }

bool operator==(const Poly& p, const Poly& q) {
  p.check_same(q);
  if (p.terms_.size() != q.terms_.size()) return false;
  for (std::size_t i = 0; i < p.terms_.size(); ++i) {
    if (p.terms_[i].exps != q.terms_[i].exps || p.terms_[i].coef != q.terms_[i].coef) return false;
  }
  return true;
}

Poly Poly::pow(unsigned n) const {
  Poly r = Poly::from_terms({{Monomial{}, Rational(1)}}, *alphabet_);
  Poly base = *this;
  while (n != 0) {
    if (n & 1U) r *= base;
    n >>= 1U;
    if (n != 0) base *= base;
  }
  return r;
}

Poly Poly::substitute(Var target, const Poly& replacement) const {
  check_same(replacement);
  if (replacement.contains(target)) {
    throw InvalidSubstitution("replacement mentions the substituted variable " +
                              alphabet_->name(target));
  }
  std::pair<Var, Poly> image{target, replacement};
  return compose(std::span<const std::pair<Var, Poly>>(&image, 1));
}

Poly Poly::compose(std::span<const std::pair<Var, Poly>> images) const {
  std::uint32_t touched = 0;
  for (const auto& [v, img] : images) {
    check_same(img);
    touched |= 1U << v.id();
  }
  if ((touched & var_mask_) == 0) return *this;

  // Cache powers of each image.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power_of = [&](std::size_t k, unsigned e) -> const Poly& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back(Poly::from_terms({{Monomial{}, Rational(1)}}, *alphabet_));
    while (cache.size() <= e) cache.push_back(cache.back() * images[k].second);
    return cache[e];
  };

  Poly result = zero_over(*alphabet_);
  std::vector<Term> untouched;
  for (const auto& t : terms_) {
    Term rest{t.exps, t.coef};
    Poly factor = from_terms({}, *alphabet_);
    bool any = false;
    for (std::size_t k = 0; k < images.size(); ++k) {
      auto id = images[k].first.id();
      unsigned e = rest.exps[id];
      if (e == 0) continue;
      rest.exps[id] = 0;
      if (!any) {
        factor = power_of(k, e);
        any = true;
      } else {
        factor *= power_of(k, e);
      }
    }
    if (!any) {
      untouched.push_back(std::move(rest));
      continue;
    }
    result += from_terms({std::move(rest)}, *alphabet_) * factor;
  }
  result += from_terms(std::move(untouched), *alphabet_);
  return result;
}

Rational Poly::eval(const Assignment& point) const {
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.exps[i] == 0) continue;
      auto it = point.find(Var(static_cast<std::uint8_t>(i)));
      if (it == point.end()) throw MissingAssignment(alphabet_->name(Var(static_cast<std::uint8_t>(i))));
      v *= rpow(it->second, t.exps[i]);
    }
    total += v;
  }
  return total;
}

std::optional<Poly> Poly::divide_univariate(const Poly& divisor, Var v) const {
  check_same(divisor);
  if (divisor.is_zero()) throw Error("division by zero polynomial");
  if ((divisor.var_mask_ & ~(1U << v.id())) != 0) throw Error("divisor is not univariate");
  const int dd = divisor.degree(v);
  Rational lead;
  for (const auto& t : divisor.terms_) {
    if (t.exps[v.id()] == dd) lead = t.coef;
  }
  Poly rem = *this;
  Poly quot = zero_over(*alphabet_);
  while (!rem.is_zero()) {
    // Pick a term of maximal v-degree.
    const Term* top = &rem.terms_.front();
    for (const auto& t : rem.terms_) {
      if (t.exps[v.id()] > top->exps[v.id()]) top = &t;
    }
    if (top->exps[v.id()] < dd) return std::nullopt;
    Term q{top->exps, top->coef / lead};
    q.exps[v.id()] = static_cast<std::uint8_t>(q.exps[v.id()] - dd);
    Poly qp = from_terms({q}, *alphabet_);
    quot += qp;
    rem -= qp * divisor;
  }
  return quot;
}

Poly poly_add(const Poly& p, const Poly& q) { return p + q; }
Poly poly_mul(const Poly& p, const Poly& q) { return p * q; }
Poly poly_neg(const Poly& p) { return -p; }
Poly substitute(const Poly& p, const Substitution& s) {
  return p.substitute(s.target, s.replacement);
}
bool poly_equal(const Poly& p, const Poly& q) { return p == q; }
Rational eval_at(const Poly& p, const Assignment& point) { return p.eval(point); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coef;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out << "-";
    } else {
      out << (neg ? " - " : " + ");
    }
    first = false;
    bool constant = t.exps == Monomial{};
    bool wrote = false;
    if (constant || c != 1) {
      out << to_string(c);
      wrote = true;
    }
    for (int i = 0; i < kMaxVars; ++i) {
      if (t.exps[i] == 0) continue;
      if (wrote) out << "*";
      out << p.alphabet().name(Var(static_cast<std::uint8_t>(i)));
      if (t.exps[i] > 1) out << "^" << static_cast<int>(t.exps[i]);
      wrote = true;
    }
  }
  return out.str();
}

Var fresh_temp(std::uint32_t used_mask) {
  for (int k = 0; k < Var::kTemps; ++k) {
    Var v = Var::temp(k);
    if (((used_mask >> v.id()) & 1U) == 0) return v;
  }
  throw Error("out of temporary variables");
}

}  // namespace homconf
