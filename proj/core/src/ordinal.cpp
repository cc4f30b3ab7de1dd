#include "sslab/ordinal.hpp"

#include <cctype>

#include "sslab/error.hpp"

namespace sslab {

Ordinal Ordinal::nat(std::uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back({0, n});
  return o;
}

Ordinal Ordinal::omega_power(int exponent, std::uint64_t coeff) {
  if (exponent < 0 || exponent > kMaxExponent)
    fail(ErrorKind::bound, "exponent " + std::to_string(exponent) +
                               " exceeds bound K=" + std::to_string(kMaxExponent));
  if (coeff == 0) fail(ErrorKind::parse, "coefficient must be >= 1");
  Ordinal o;
  o.terms_.push_back({exponent, coeff});
  return o;
}

Ordinal Ordinal::from_terms(std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coeff == 0) fail(ErrorKind::parse, "zero coefficient in term list");
    if (terms[i].exponent < 0 || terms[i].exponent > kMaxExponent)
      fail(ErrorKind::bound, "exponent exceeds bound in term list");
    if (i > 0 && terms[i - 1].exponent <= terms[i].exponent)
      fail(ErrorKind::parse, "term list not in strictly decreasing exponent order");
  }
  Ordinal o;
  o.terms_ = std::move(terms);
  return o;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const auto& x = a.terms_;
  const auto& y = b.terms_;
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    if (x[i].exponent != y[i].exponent)
      return x[i].exponent <=> y[i].exponent;
    if (x[i].coeff != y[i].coeff)
      return x[i].coeff <=> y[i].coeff;
  }
  return x.size() <=> y.size();
}

Ordinal operator+(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const int lead = b.terms_.front().exponent;
  Ordinal out;
  // Terms of a with exponent < lead are absorbed by the leading term of b.
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) out.terms_.push_back(t);
  }
  std::size_t rest = 0;
  if (!a.terms_.empty()) {
    // Merge a coefficient at the joining exponent, if present.
    for (const auto& t : a.terms_) {
      if (t.exponent == lead) {
        out.terms_.push_back({lead, t.coeff + b.terms_.front().coeff});
        rest = 1;
        break;
      }
    }
  }
  for (std::size_t i = rest; i < b.terms_.size(); ++i) out.terms_.push_back(b.terms_[i]);
  return out;
}

Ordinal left_subtract(const Ordinal& a, const Ordinal& b) {
  if (a > b) fail(ErrorKind::underflow, "left subtraction underflow: a > b");
  if (a == b) return {};
  const auto& x = a.terms();
  const auto& y = b.terms();
  std::size_t i = 0;
  while (i < x.size() && i < y.size() && x[i] == y[i]) ++i;
  // a is a strict prefix of b, or differs first at position i with either a
  // smaller exponent (b's term swallows the rest of a) or an equal exponent
  // and a smaller coefficient.
  std::vector<Ordinal::Term> out;
  if (i == x.size()) {
    out.assign(y.begin() + i, y.end());
  } else if (x[i].exponent < y[i].exponent) {
    out.assign(y.begin() + i, y.end());
  } else {
    out.push_back({y[i].exponent, y[i].coeff - x[i].coeff});
    out.insert(out.end(), y.begin() + i + 1, y.end());
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal Ordinal::successor() const { return *this + Ordinal::nat(1); }

Ordinal Ordinal::floor_to(int r) const {
  Ordinal o;
  for (const auto& t : terms_)
    if (t.exponent >= r) o.terms_.push_back(t);
  return o;
}

Ordinal Ordinal::ceil_to(int r) const {
  Ordinal hi = floor_to(r);
  if (hi == *this) return hi;
  return hi + Ordinal::omega_power(r);
}

OrdinalClass classify(const Ordinal& a) {
  return OrdinalClass{a.is_limit(), a.nu(), a.successor()};
}

namespace {

struct LiteralCursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  std::uint64_t number(const char* what) {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail(ErrorKind::parse, std::string("expected a number for ") + what);
    std::uint64_t v = 0;
    std::size_t digits = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      ++pos;
      if (++digits > 15) fail(ErrorKind::parse, "number too large");
    }
    return v;
  }
};

}  // namespace

Ordinal Ordinal::parse(std::string_view text) {
  LiteralCursor cur{text};
  cur.skip_ws();
  if (cur.at_end()) fail(ErrorKind::parse, "empty ordinal literal");

  std::vector<Term> terms;
  bool first = true;
  while (true) {
    cur.skip_ws();
    std::size_t term_start = cur.pos;
    Term t;
    if (cur.eat('w')) {
      int e = 1;
      if (cur.eat('^')) e = static_cast<int>(cur.number("exponent"));
      std::uint64_t c = 1;
      if (cur.eat('*')) c = cur.number("coefficient");
      if (e > kMaxExponent)
        fail(ErrorKind::bound,
             "exponent " + std::to_string(e) + " exceeds bound K=" + std::to_string(kMaxExponent) +
                 " in term '" + std::string(text.substr(term_start, cur.pos - term_start)) + "'");
      if (c == 0)
        fail(ErrorKind::parse, "zero coefficient in term '" +
                                   std::string(text.substr(term_start, cur.pos - term_start)) + "'");
      t = {e, c};
    } else {
      std::uint64_t n = cur.number("term");
      if (n == 0) {
        if (first && cur.at_end()) return {};  // the literal "0"
        fail(ErrorKind::parse, "term '0' is only valid as the whole literal");
      }
      t = {0, n};
    }
    if (!terms.empty() && terms.back().exponent <= t.exponent) {
      fail(ErrorKind::parse,
           "non-canonical term order at '" +
               std::string(text.substr(term_start, cur.pos - term_start)) +
               "': exponents must strictly decrease");
    }
    terms.push_back(t);
    first = false;
    if (cur.at_end()) break;
    if (!cur.eat('+'))
      fail(ErrorKind::parse, "unexpected character '" + std::string(1, text[cur.pos]) +
                                 "' in ordinal literal");
  }
  return Ordinal::from_terms(std::move(terms));
}

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) out += "+";
    first = false;
    if (t.exponent == 0) {
      out += std::to_string(t.coeff);
    } else {
      out += "w";
      if (t.exponent != 1) {
        out += "^";
        out += std::to_string(t.exponent);
      }
      if (t.coeff != 1) {
        out += "*";
        out += std::to_string(t.coeff);
      }
    }
  }
  return out;
}

}  // namespace sslab
