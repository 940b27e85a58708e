#include "cliffgen/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <string>

namespace cliffgen::expr {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  Expression run() {
    Expression e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("syntax error: " + what, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "', got end of input");
      fail(std::string("expected '") + c + "'");
    }
  }

  Expression expr() {
    std::vector<Expression> terms{term()};
    for (;;) {
      if (accept('+')) {
        terms.push_back(term());
      } else if (accept('-')) {
        terms.push_back(-term());
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms[0] : sum(std::move(terms));
  }

  Expression term() {
    std::vector<Expression> f{unary()};
    while (accept('*')) f.push_back(unary());
    return f.size() == 1 ? f[0] : product(std::move(f));
  }

  Expression unary() {
    if (accept('-')) return -unary();
    return factor();
  }

  Expression factor() {
    Expression base = atom();
    if (!accept('^')) return base;
    long double p;
    if (accept('(')) {
      p = signed_number();
      expect(')');
    } else {
      p = signed_number();
    }
    return pow(base, p);
  }

  long double signed_number() {
    skip();
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    skip();
    if (pos_ >= s_.size()) fail("expected number, got end of input");
    if (!std::isdigit(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '.') fail("expected number");
    const long double v = number();
    return neg ? -v : v;
  }

  long double number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t q = pos_ + 1;
      if (q < s_.size() && (s_[q] == '+' || s_[q] == '-')) ++q;
      if (q < s_.size() && std::isdigit(static_cast<unsigned char>(s_[q]))) {
        pos_ = q;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    const std::string text(s_.substr(start, pos_ - start));
    char* end = nullptr;
    const long double v = std::strtold(text.c_str(), &end);
    if (end != text.c_str() + text.size()) {
      pos_ = start;
      fail("malformed number '" + text + "'");
    }
    return v;
  }

  Expression call(Expression (*fn)(const Expression&)) {
    expect('(');
    Expression a = expr();
    expect(')');
    return fn(a);
  }

  Expression atom() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return constant(number());
    if (c == '(') {
      ++pos_;
      Expression e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view id = s_.substr(start, pos_ - start);
      if (id == "i") return imag_unit();
      if (id == "x0") return x0();
      if (id == "r") return r();
      if (id == "z") return z();
      if (id == "exp") return call(&exp);
      if (id == "cos") return call(&cos);
      if (id == "sin") return call(&sin);
      pos_ = start;
      fail("unknown identifier '" + std::string(id) + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse(std::string_view text) { return Parser(text).run(); }

}  // namespace cliffgen::expr
