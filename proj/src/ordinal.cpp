#include "stone/ordinal.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "stone/error.hpp"

namespace stone {

namespace {

const Ordinal& zero_ordinal() {
  static const Ordinal z;
  return z;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw std::overflow_error("ordinal coefficient overflow");
  }
  return a + b;
}

}  // namespace

Ordinal::Ordinal(std::uint64_t n) {
  if (n > 0) terms_.push_back(Term{Ordinal{}, n});
}

Ordinal Ordinal::omega() { return omega_pow(Ordinal(1)); }

Ordinal Ordinal::omega_pow(const Ordinal& exponent, std::uint64_t coef) {
  Ordinal r;
  if (coef > 0) r.terms_.push_back(Term{exponent, coef});
  return r;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coef == 0) throw std::invalid_argument("CNF term with zero coefficient");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) {
      throw std::invalid_argument("CNF exponents must strictly decrease");
    }
  }
  Ordinal r;
  r.terms_ = std::move(terms);
  return r;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

std::uint64_t Ordinal::finite_value() const { return terms_.empty() ? 0 : terms_[0].coef; }

const Ordinal& Ordinal::leading_exponent() const {
  return terms_.empty() ? zero_ordinal() : terms_.front().exponent;
}

const Ordinal& Ordinal::last_exponent() const {
  return terms_.empty() ? zero_ordinal() : terms_.back().exponent;
}

std::uint64_t Ordinal::leading_coef() const { return terms_.empty() ? 0 : terms_.front().coef; }

bool operator==(const Ordinal::Term& a, const Ordinal::Term& b) {
  return a.coef == b.coef && a.exponent == b.exponent;
}

bool operator==(const Ordinal& a, const Ordinal& b) { return a.terms_ == b.terms_; }

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    if (auto c = a.terms_[i].coef <=> b.terms_[i].coef; c != 0) return c;
  }
  return a.terms_.size() <=> b.terms_.size();
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms().front();
  std::vector<Ordinal::Term> out;
  out.reserve(a.terms().size() + b.terms().size());
  bool merged = false;
  for (const auto& t : a.terms()) {
    const auto c = t.exponent <=> lead.exponent;
    if (c > 0) {
      out.push_back(t);
    } else {
      if (c == 0) {
        out.push_back(Ordinal::Term{t.exponent, checked_add(t.coef, lead.coef)});
        merged = true;
      }
      break;
    }
  }
  if (!merged) out.push_back(lead);
  out.insert(out.end(), b.terms().begin() + 1, b.terms().end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal left_sub(const Ordinal& a, const Ordinal& b) {
  if (a > b) throw Error(ErrorCode::Underflow, to_string(a) + " exceeds " + to_string(b));
  const auto& at = a.terms();
  const auto& bt = b.terms();
  std::size_t i = 0;
  while (i < at.size() && at[i] == bt[i]) ++i;
  if (i == at.size()) return Ordinal::from_terms({bt.begin() + static_cast<std::ptrdiff_t>(i), bt.end()});
  // a < b, so at position i either b has the larger exponent or the same exponent with a larger coefficient.
  std::vector<Ordinal::Term> out;
  if (at[i].exponent == bt[i].exponent) {
    out.push_back(Ordinal::Term{bt[i].exponent, bt[i].coef - at[i].coef});
  } else {
    out.push_back(bt[i]);
  }
  out.insert(out.end(), bt.begin() + static_cast<std::ptrdiff_t>(i) + 1, bt.end());
  return Ordinal::from_terms(std::move(out));
}

DivMod divmod_omega_pow(const Ordinal& b, const Ordinal& beta) {
  std::vector<Ordinal::Term> q;
  std::vector<Ordinal::Term> r;
  for (const auto& t : b.terms()) {
    if (t.exponent >= beta) {
      q.push_back(Ordinal::Term{left_sub(beta, t.exponent), t.coef});
    } else {
      r.push_back(t);
    }
  }
  return DivMod{Ordinal::from_terms(std::move(q)), Ordinal::from_terms(std::move(r))};
}

Ordinal mul_omega_pow(const Ordinal& beta, const Ordinal& q) {
  std::vector<Ordinal::Term> out;
  out.reserve(q.terms().size());
  for (const auto& t : q.terms()) out.push_back(Ordinal::Term{beta + t.exponent, t.coef});
  return Ordinal::from_terms(std::move(out));
}

Ordinal point_rank(const Ordinal& x) { return x.last_exponent(); }

bool is_limit(const Ordinal& x) { return !x.is_zero() && !x.last_exponent().is_zero(); }

bool is_successor(const Ordinal& x) { return !x.is_zero() && x.last_exponent().is_zero(); }

Ordinal successor(const Ordinal& x) { return x + Ordinal(1); }

Ordinal predecessor(const Ordinal& x) {
  if (!is_successor(x)) throw Error(ErrorCode::Underflow, to_string(x) + " has no predecessor");
  auto terms = x.terms();
  if (--terms.back().coef == 0) terms.pop_back();
  return Ordinal::from_terms(std::move(terms));
}

Ordinal fundamental_seq(const Ordinal& x, std::uint64_t k) {
  if (!is_limit(x)) throw Error(ErrorCode::NotALimit, to_string(x) + " is not a limit ordinal");
  if (k == 0) throw std::invalid_argument("fundamental sequence index starts at 1");
  auto terms = x.terms();
  const Ordinal e = terms.back().exponent;
  if (--terms.back().coef == 0) terms.pop_back();
  const Ordinal prefix = Ordinal::from_terms(std::move(terms));
  if (is_successor(e)) return prefix + Ordinal::omega_pow(predecessor(e), k);
  return prefix + Ordinal::omega_pow(fundamental_seq(e, k));
}

std::uint64_t fundamental_index_reaching(const Ordinal& x, const Ordinal& target) {
  if (!(target < x)) throw std::invalid_argument("fundamental_index_reaching: target must lie below x");
  std::uint64_t hi = 1;
  while (fundamental_seq(x, hi) < target) {
    if (hi > (std::numeric_limits<std::uint64_t>::max() >> 2)) {
      throw std::overflow_error("fundamental sequence index overflow");
    }
    hi *= 2;
  }
  std::uint64_t lo = hi / 2;  // seq(lo) < target, or lo == 0
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (fundamental_seq(x, mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return hi;
}

// ---------------------------------------------------------------------------
// Notation

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Ordinal parse() {
    Ordinal result = ord();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return result;
  }

 private:
  Ordinal ord() {
    Ordinal sum = term();
    while (peek() == '+') {
      ++pos_;
      sum = sum + term();
    }
    return sum;
  }

  Ordinal term() {
    const char c = peek();
    if (c == 'w') {
      ++pos_;
      Ordinal exponent(1);
      if (peek() == '^') {
        ++pos_;
        exponent = atom();
      }
      std::uint64_t coef = 1;
      if (peek() == '*') {
        ++pos_;
        coef = nat();
      }
      return Ordinal::omega_pow(exponent, coef);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t value = nat();
      if (peek() == '*') {
        ++pos_;
        const std::uint64_t coef = nat();
        if (coef != 0 && value > std::numeric_limits<std::uint64_t>::max() / coef) {
          fail("numeric literal overflow");
        }
        value *= coef;
      }
      return Ordinal(value);
    }
    fail("expected a term");
  }

  Ordinal atom() {
    const char c = peek();
    if (c == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    if (c == '(') {
      ++pos_;
      Ordinal inner = ord();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Ordinal(nat());
    fail("expected an exponent");
  }

  std::uint64_t nat() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("numeric literal overflow");
      v = v * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    if (text_[start] == '0' && pos_ - start > 1) {
      pos_ = start;
      fail("leading zero in number");
    }
    return v;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) { throw SyntaxError(pos_, what); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void print_exponent(std::string& out, const Ordinal& e) {
  if (e.is_finite()) {
    out += std::to_string(e.finite_value());
  } else if (e == Ordinal::omega()) {
    out += 'w';
  } else {
    out += '(';
    out += to_string(e);
    out += ')';
  }
}

}  // namespace

Ordinal parse_ordinal(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const Ordinal& x) {
  if (x.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : x.terms()) {
    if (!first) out += '+';
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coef);
      continue;
    }
    out += 'w';
    if (t.exponent != Ordinal(1)) {
      out += '^';
      print_exponent(out, t.exponent);
    }
    if (t.coef != 1) {
      out += '*';
      out += std::to_string(t.coef);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Ordinal& x) { return os << to_string(x); }

// ---------------------------------------------------------------------------
// Count

std::uint64_t Count::value() const {
  if (!value_) throw std::logic_error("Count::value on an infinite count");
  return *value_;
}

Count operator+(const Count& a, const Count& b) {
  if (a.is_infinite() || b.is_infinite()) return Count::infinite();
  return Count::finite(checked_add(*a.value_, *b.value_));
}

std::strong_ordering operator<=>(const Count& a, const Count& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() <=> b.is_infinite();
  return *a.value_ <=> *b.value_;
}

std::string to_string(const Count& c) {
  return c.is_finite() ? std::to_string(c.value()) : std::string("inf");
}

}  // namespace stone
