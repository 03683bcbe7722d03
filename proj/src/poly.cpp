#include "u3alg/poly.hpp"

#include <cctype>

namespace u3alg {

std::string coeff_text(const Rat& c) { return c.to_string(); }

std::string coeff_text(const CycNum& c) {
  if (c.is_rational()) return c[0].to_string();
  return c.to_string();
}

CycPoly to_cyc(const RatPoly& p) {
  std::vector<CycPoly::Term> terms;
  terms.reserve(p.size());
  for (const auto& [m, c] : p.terms()) terms.emplace_back(m, CycNum(c));
  return CycPoly::from_terms(p.ring(), std::move(terms));
}

namespace {

class PolyParser {
 public:
  PolyParser(const RingPtr& ring, std::string_view text) : ring_(ring) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
  }

  RatPoly parse() {
    RatPoly result(ring_);
    if (s_.empty()) fail("empty polynomial");
    while (pos_ < s_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
      } else if (pos_ != 0) {
        fail("expected '+' or '-'");
      }
      result += term().scaled(Rat(sign));
    }
    return result;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse_poly: " + what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  long integer() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stol(s_.substr(start, pos_ - start));
  }

  RatPoly term() {
    Rat coeff(1);
    std::vector<Monomial::Exp> exps(ring_->size(), 0);
    bool any = false;
    while (true) {
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        integer();
        if (peek() == '/') {
          ++pos_;
          integer();
        }
        coeff *= Rat::parse(s_.substr(start, pos_ - start));
      } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
        const std::size_t start = pos_;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        if (!ring_->has(name)) fail("unknown variable '" + name + "'");
        long e = 1;
        if (peek() == '^') {
          ++pos_;
          e = integer();
        }
        exps[ring_->index_of(name)] += static_cast<Monomial::Exp>(e);
      } else {
        fail("expected coefficient or variable");
      }
      any = true;
      if (peek() != '*') break;
      ++pos_;
    }
    if (!any) fail("empty term");
    return RatPoly::term(ring_, Monomial(*ring_, std::move(exps)), coeff);
  }

  RingPtr ring_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RatPoly parse_poly(const RingPtr& ring, std::string_view text) { return PolyParser(ring, text).parse(); }

}  // namespace u3alg
