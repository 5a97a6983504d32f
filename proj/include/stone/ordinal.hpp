#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace stone {

/**
 * An ordinal below epsilon_0 in hereditary Cantor normal form:
 *
 *     w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck,   e1 > e2 > ... > ek,  ci >= 1
 *
 * where every exponent is itself an Ordinal. The empty term list is 0.
 * Normalization is unique, so value equality is structural equality.
 *
 * Ordinals double as the points of the ambient spaces [0, w^a * n].
 */
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;  // zero
  Ordinal(std::uint64_t n);  // NOLINT(google-explicit-constructor): finite ordinals read naturally

  static Ordinal omega();
  /// w^exponent * coef (zero when coef == 0).
  static Ordinal omega_pow(const Ordinal& exponent, std::uint64_t coef = 1);
  /// Builds from terms that are already in strictly decreasing exponent order.
  static Ordinal from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const;
  /// The natural-number value; only meaningful when is_finite().
  std::uint64_t finite_value() const;

  const Ordinal& leading_exponent() const;  // 0 for zero
  const Ordinal& last_exponent() const;     // 0 for zero
  std::uint64_t leading_coef() const;       // 0 for zero

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  std::uint64_t coef = 1;
};

bool operator==(const Ordinal::Term& a, const Ordinal::Term& b);

/// Ordinal addition (non-commutative): terms of a below b's leading exponent are absorbed.
Ordinal operator+(const Ordinal& a, const Ordinal& b);

/// Left subtraction: the unique c with a + c == b. Throws Underflow when a > b.
Ordinal left_sub(const Ordinal& a, const Ordinal& b);

struct DivMod {
  Ordinal quotient;
  Ordinal remainder;
};

/// Writes b = w^beta * q + r with r < w^beta and q maximal.
DivMod divmod_omega_pow(const Ordinal& b, const Ordinal& beta);

/// w^beta * q (left multiplication by a power of omega).
Ordinal mul_omega_pow(const Ordinal& beta, const Ordinal& q);

/// Cantor-Bendixson rank of x as a point of any ordinal space containing it:
/// the exponent of the last CNF term, 0 for zero and successors.
Ordinal point_rank(const Ordinal& x);

bool is_limit(const Ordinal& x);
bool is_successor(const Ordinal& x);
Ordinal successor(const Ordinal& x);

/// Predecessor of a successor ordinal. Throws NotALimit-style Underflow otherwise.
Ordinal predecessor(const Ordinal& x);

/// The canonical (Wainer) fundamental sequence x[k], k >= 1:
///   (g + w^(b+1))[k] = g + w^b * k,   (g + w^l)[k] = g + w^(l[k]) for limit l.
/// Throws NotALimit when x is not a limit.
Ordinal fundamental_seq(const Ordinal& x, std::uint64_t k);

/// Smallest k >= 1 with fundamental_seq(x, k) >= target. Requires target < x.
std::uint64_t fundamental_index_reaching(const Ordinal& x, const Ordinal& target);

/// Parses the textual notation (see README for the grammar). Non-canonical
/// sums are normalized; malformed text throws SyntaxError with a byte offset.
Ordinal parse_ordinal(std::string_view text);

/// Canonical notation: decreasing exponents, "^1" and "*1" omitted, no "+0".
std::string to_string(const Ordinal& x);

std::ostream& operator<<(std::ostream& os, const Ordinal& x);

/// A cardinality that is either a natural number or countably infinite.
class Count {
 public:
  static Count finite(std::uint64_t k) { return Count(k); }
  static Count infinite() { return Count(); }

  bool is_finite() const noexcept { return value_.has_value(); }
  bool is_infinite() const noexcept { return !value_.has_value(); }
  /// Throws std::logic_error when infinite.
  std::uint64_t value() const;
  bool is_zero() const noexcept { return value_ == std::uint64_t{0}; }

  friend Count operator+(const Count& a, const Count& b);
  friend bool operator==(const Count& a, const Count& b) = default;
  friend std::strong_ordering operator<=>(const Count& a, const Count& b);

 private:
  Count() = default;
  explicit Count(std::uint64_t k) : value_(k) {}
  std::optional<std::uint64_t> value_;
};

std::string to_string(const Count& c);

}  // namespace stone
