#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sslab {

#ifndef SSLAB_MAX_EXPONENT
#define SSLAB_MAX_EXPONENT 8
#endif

/// Largest admissible exponent K. All ordinals handled by the library live
/// below w^(K+1). K is a build-wide constant so that canonical forms are
/// stable across every value ever constructed in one binary.
inline constexpr int kMaxExponent = SSLAB_MAX_EXPONENT;

/// Sentinel value of nu() for zero: zero is divisible by w^r for every r,
/// which keeps the divisibility-cell algebra uniform.
inline constexpr int kNuTop = kMaxExponent + 1;

/// An ordinal below w^(K+1) in Cantor normal form:
///
///   w^e1 * c1 + w^e2 * c2 + ... + w^ek * ck
///
/// with e1 > e2 > ... > ek >= 0 and ci >= 1. The empty sum denotes 0.
/// Two equal ordinals always have identical term lists, so equality and
/// hashing are structural. Values are immutable after construction.
class Ordinal {
 public:
  struct Term {
    int exponent = 0;
    std::uint64_t coeff = 0;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Ordinal() = default;  // zero

  static Ordinal nat(std::uint64_t n);
  /// w^exponent * coeff; requires exponent <= K and coeff >= 1.
  static Ordinal omega_power(int exponent, std::uint64_t coeff = 1);
  /// Builds from a term list that must already be in canonical form.
  static Ordinal from_terms(std::vector<Term> terms);

  /// Parses the literal grammar  term ("+" term)* with
  /// term := "w^" nat ("*" nat)? | "w" ("*" nat)? | nat.
  /// The literal "0" denotes zero. Terms must appear in strictly decreasing
  /// exponent order; violations raise ErrorKind::parse naming the term, and
  /// exponents above K raise ErrorKind::bound.
  static Ordinal parse(std::string_view text);

  /// Canonical literal; parse(str()) == *this.
  std::string str() const;

  bool is_zero() const { return terms_.empty(); }
  /// True iff nonzero and the least exponent is >= 1.
  bool is_limit() const { return !terms_.empty() && terms_.back().exponent >= 1; }
  /// Least exponent of the CNF; kNuTop for zero.
  int nu() const { return terms_.empty() ? kNuTop : terms_.back().exponent; }
  Ordinal successor() const;

  std::span<const Term> terms() const { return terms_; }
  int leading_exponent() const { return terms_.empty() ? -1 : terms_.front().exponent; }

  /// Largest multiple of w^r that is <= *this (drops all terms with
  /// exponent < r).
  Ordinal floor_to(int r) const;
  /// Least multiple of w^r that is >= *this.
  Ordinal ceil_to(int r) const;

  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);
  friend bool operator==(const Ordinal&, const Ordinal&) = default;

  /// Ordinal sum (non-commutative).
  friend Ordinal operator+(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<Term> terms_;
};

/// The unique c with a + c = b; requires a <= b (ErrorKind::underflow
/// otherwise). Right subtraction is not well-defined for ordinals and is
/// deliberately not provided.
Ordinal left_subtract(const Ordinal& a, const Ordinal& b);

struct OrdinalClass {
  bool is_limit;
  int nu;  // kNuTop for zero
  Ordinal successor;
};
OrdinalClass classify(const Ordinal& a);

}  // namespace sslab
