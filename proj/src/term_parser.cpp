#include "witt/term_parser.hpp"

#include <cctype>

#include "witt/error.hpp"
#include "witt/gmp_util.hpp"

namespace witt {

namespace {

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& what) {
    fail(ErrorKind::Parse, what + " at position " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  mpz_class integer() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) error("expected digits");
    return mpz_class(s_.substr(start, pos_ - start));
  }
  // integer or integer/integer (only when followed directly by digits)
  mpq_class number() {
    mpz_class n = integer();
    size_t save = pos_;
    if (eat('/')) {
      skip();
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        mpz_class d = integer();
        if (d == 0) error("zero denominator");
        mpq_class q(n, d);
        q.canonicalize();
        return q;
      }
      pos_ = save;
    }
    return mpq_class(n);
  }
  std::string ident() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    return s_.substr(start, pos_ - start);
  }
  mpq_class signed_exponent() {
    bool paren = eat('(');
    bool minus = eat('-');
    mpq_class e = number();
    if (paren && !eat(')')) error("expected ')'");
    return minus ? mpq_class(-e) : e;
  }

 private:
  const std::string& s_;
  size_t pos_ = 0;
};

ParsedTerm parse_product(Lexer& lx) {
  ParsedTerm t;
  t.coeff = 1;
  bool any = false;
  while (true) {
    char c = lx.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.coeff *= lx.number();
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string v = lx.ident();
      mpq_class e = 1;
      if (lx.eat('^')) e = lx.signed_exponent();
      t.exps[v] += e;
    } else {
      lx.error("expected a number or variable");
    }
    any = true;
    if (lx.eat('*')) continue;
    char n = lx.peek();
    // juxtaposition such as "2i" or "3z^2"
    if (std::isalpha(static_cast<unsigned char>(n))) continue;
    break;
  }
  if (!any) lx.error("empty term");
  return t;
}

}  // namespace

std::vector<ParsedTerm> parse_terms(const std::string& text, const std::string& list_var) {
  Lexer lx(text);
  std::vector<ParsedTerm> out;
  if (lx.eat('[')) {
    long idx = 0;
    if (lx.eat(']')) return out;
    do {
      bool minus = false;
      while (true) {
        if (lx.eat('-')) minus = !minus;
        else if (!lx.eat('+')) break;
      }
      ParsedTerm t;
      t.coeff = lx.number();
      if (minus) t.coeff = -t.coeff;
      if (idx > 0) t.exps[list_var] = idx;
      out.push_back(t);
      ++idx;
    } while (lx.eat(','));
    if (!lx.eat(']')) lx.error("expected ']'");
    if (!lx.done()) lx.error("trailing input");
    return out;
  }
  bool first = true;
  while (!lx.done()) {
    bool minus = false;
    bool sign = false;
    while (true) {
      if (lx.eat('-')) {
        minus = !minus;
        sign = true;
      } else if (lx.eat('+')) {
        sign = true;
      } else {
        break;
      }
    }
    if (!first && !sign) lx.error("expected '+' or '-'");
    ParsedTerm t = parse_product(lx);
    if (minus) t.coeff = -t.coeff;
    out.push_back(t);
    first = false;
  }
  if (first) lx.error("empty expression");
  return out;
}

}  // namespace witt
