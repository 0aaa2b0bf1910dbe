#pragma once

// Exact sparse multivariate polynomials over Q.

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace homconf {

using Rational = mpq_class;

inline constexpr int kMaxVars = 16;

enum class VarClass : std::uint8_t { Lambda, Partial, Temp };

/// Index of a variable in an alphabet.
class Var {
 public:
  constexpr Var() = default;
  constexpr explicit Var(std::uint8_t id) : id_(id) {}

  constexpr std::uint8_t id() const { return id_; }
  constexpr auto operator<=>(const Var&) const = default;

  // Slots of the standard alphabet. Declaration order is the monomial order.
  static constexpr Var lambda() { return Var(0); }
  static constexpr Var mu() { return Var(1); }
  static constexpr Var nu() { return Var(2); }
  static constexpr Var d() { return Var(3); }
  /// Per-leg derivation of a tensor, leg in [1, 4].
  static constexpr Var leg(int k) { return Var(static_cast<std::uint8_t>(3 + k)); }
  static constexpr Var temp(int k) { return Var(static_cast<std::uint8_t>(8 + k)); }
  static constexpr int kTemps = 8;

 private:
  std::uint8_t id_ = 0;
};

/// Ordered list of variable names; the order fixes the lexicographic monomial order.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> names, std::vector<VarClass> classes);

  /// L M N D D1 D2 D3 D4 X0..X7
  static const Alphabet& standard();

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(Var v) const { return names_.at(v.id()); }
  VarClass var_class(Var v) const { return classes_.at(v.id()); }
  std::optional<Var> find(std::string_view name) const;

 private:
  std::vector<std::string> names_;
  std::vector<VarClass> classes_;
};

using Monomial = std::array<std::uint8_t, kMaxVars>;
using Assignment = std::map<Var, Rational>;

class Poly {
 public:
  struct Term {
    Monomial exps;
    Rational coef;
  };

  Poly() : alphabet_(&Alphabet::standard()) {}
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static Poly var(Var v, const Alphabet& alphabet = Alphabet::standard());
  static Poly zero_over(const Alphabet& alphabet);
  /// Builds from arbitrary (possibly repeated, possibly zero) terms.
  static Poly from_terms(std::vector<Term> terms, const Alphabet& alphabet = Alphabet::standard());

  const Alphabet& alphabet() const { return *alphabet_; }
  /// Terms sorted by descending lexicographic monomial order, no zero coefficients.
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  bool contains(Var v) const { return (var_mask_ >> v.id()) & 1U; }
  std::uint32_t var_mask() const { return var_mask_; }
  int degree(Var v) const;
  int total_degree() const;

  Poly& operator+=(const Poly& q);
  Poly& operator-=(const Poly& q);
  Poly& operator*=(const Poly& q);
  Poly operator-() const;

  friend Poly operator+(Poly p, const Poly& q) { return p += q; }
  friend Poly operator-(Poly p, const Poly& q) { return p -= q; }
  friend Poly operator*(const Poly& p, const Poly& q);
  friend bool operator==(const Poly& p, const Poly& q);

  Poly pow(unsigned n) const;

  /// Replaces `target` by `replacement`. The replacement must not mention the target.
  Poly substitute(Var target, const Poly& replacement) const;
  /// Simultaneous substitution of several variables.
  Poly compose(std::span<const std::pair<Var, Poly>> images) const;
  Poly compose(std::initializer_list<std::pair<Var, Poly>> images) const {
    return compose(std::span<const std::pair<Var, Poly>>(images.begin(), images.size()));
  }

  Rational eval(const Assignment& point) const;

  /// Exact quotient by a polynomial in the single variable `v`; nullopt if not divisible.
  std::optional<Poly> divide_univariate(const Poly& divisor, Var v) const;

 private:
  void check_same(const Poly& q) const;
  void refresh_mask();

  const Alphabet* alphabet_;
  std::vector<Term> terms_;
  std::uint32_t var_mask_ = 0;
};

struct Substitution {
  Var target;
  Poly replacement;
};

Poly poly_add(const Poly& p, const Poly& q);
Poly poly_mul(const Poly& p, const Poly& q);
Poly poly_neg(const Poly& p);
Poly substitute(const Poly& p, const Substitution& s);
bool poly_equal(const Poly& p, const Poly& q);
Rational eval_at(const Poly& p, const Assignment& point);

/// Surface syntax: `2*L^2*D - 3/4*D1 + 1`.
std::string to_string(const Poly& p);
std::string to_string(const Rational& q);

inline Poly lam() { return Poly::var(Var::lambda()); }
inline Poly mu() { return Poly::var(Var::mu()); }
inline Poly nu() { return Poly::var(Var::nu()); }
inline Poly del() { return Poly::var(Var::d()); }
inline Poly del(int leg) { return Poly::var(Var::leg(leg)); }

/// First temporary variable appearing in none of the masks.
Var fresh_temp(std::uint32_t used_mask);

}  // namespace homconf
