#include "cliffgen/expr.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "cliffgen/expr_program.hpp"

namespace cliffgen::expr {

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2));
}

std::size_t hash_ld(long double v) {
  if (v == 0) v = 0;  // fold -0
  const double d = static_cast<double>(v);
  return std::hash<double>{}(d) ^ std::hash<double>{}(static_cast<double>(v - static_cast<long double>(d)));
}

Expression make(Node n) {
  std::size_t h = static_cast<std::size_t>(n.kind) * 1315423911u;
  h = mix(h, hash_ld(n.value.real()));
  h = mix(h, hash_ld(n.value.imag()));
  h = mix(h, static_cast<std::size_t>(n.var));
  h = mix(h, hash_ld(n.exponent));
  for (const auto& a : n.args) h = mix(h, a.hash());
  n.hash = h;
  return Expression(std::make_shared<const Node>(std::move(n)));
}

bool is_integer_exponent(long double p) {
  return std::floor(p) == p && std::fabs(p) < 1e9L;
}

// Kind-major ordering keeps constants first and makes commutative argument
// lists canonical up to hash collisions.
bool canonical_less(const Expression& a, const Expression& b) {
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  return a.hash() < b.hash();
}

const Expression& zero_expr() {
  static const Expression z = [] {
    Node n;
    return make(std::move(n));
  }();
  return z;
}

// Split a term into (numeric coefficient, non-constant core).
std::pair<Complex, Expression> split_coefficient(const Expression& e) {
  if (e.is_constant()) return {e.value(), constant(1)};
  if (e.kind() == Kind::Neg) {
    auto [c, core] = split_coefficient(e.args()[0]);
    return {-c, core};
  }
  if (e.kind() == Kind::Product && e.args()[0].is_constant()) {
    std::vector<Expression> rest(e.args().begin() + 1, e.args().end());
    Expression core = rest.size() == 1 ? rest[0] : [&] {
      Node n;
      n.kind = Kind::Product;
      n.args = std::move(rest);
      return make(std::move(n));
    }();
    return {e.args()[0].value(), core};
  }
  return {Complex(1, 0), e};
}

template <class T>
std::complex<T> int_pow(std::complex<T> b, long long n) {
  const bool invert = n < 0;
  unsigned long long k = static_cast<unsigned long long>(invert ? -n : n);
  std::complex<T> acc(1, 0);
  while (k) {
    if (k & 1) acc *= b;
    b *= b;
    k >>= 1;
  }
  return invert ? std::complex<T>(1, 0) / acc : acc;
}

template <class T>
std::complex<T> checked_pow(const std::complex<T>& b, long double p) {
  if (is_integer_exponent(p)) {
    if (p < 0 && b == std::complex<T>(0, 0)) throw PoleError("pole: zero base raised to a negative power");
    return int_pow(b, static_cast<long long>(p));
  }
  if (b == std::complex<T>(0, 0)) {
    if (p > 0) return {0, 0};
    throw PoleError("pole: zero base raised to a negative power");
  }
  if (b.imag() == 0) {
    if (b.real() < 0) {
      throw BranchCutError("branch cut: non-integer power of a negative real base");
    }
    return {std::pow(b.real(), static_cast<T>(p)), 0};
  }
  return std::pow(b, std::complex<T>(static_cast<T>(p), 0));
}

}  // namespace

Expression::Expression() : n_(zero_expr().n_) {}

Kind Expression::kind() const { return n_->kind; }
const Complex& Expression::value() const { return n_->value; }
Var Expression::var() const { return n_->var; }
long double Expression::exponent() const { return n_->exponent; }
std::span<const Expression> Expression::args() const { return n_->args; }
std::size_t Expression::hash() const { return n_->hash; }

bool Expression::is_zero() const { return is_constant() && value() == Complex(0, 0); }
bool Expression::is_one() const { return is_constant() && value() == Complex(1, 0); }

bool Expression::is_real() const {
  if (is_constant()) return value().imag() == 0;
  return std::all_of(args().begin(), args().end(), [](const Expression& a) { return a.is_real(); });
}

bool operator==(const Expression& a, const Expression& b) {
  if (a.n_ == b.n_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Kind::Const:
      return a.value() == b.value();
    case Kind::Variable:
      return a.var() == b.var();
    case Kind::Power:
      if (a.exponent() != b.exponent()) return false;
      break;
    default:
      break;
  }
  if (a.args().size() != b.args().size()) return false;
  for (std::size_t i = 0; i < a.args().size(); ++i) {
    if (!(a.args()[i] == b.args()[i])) return false;
  }
  return true;
}

Expression constant(Complex c) {
  if (c == Complex(0, 0)) return zero_expr();
  Node n;
  n.kind = Kind::Const;
  n.value = c;
  return make(std::move(n));
}

Expression variable(Var v) {
  Node n;
  n.kind = Kind::Variable;
  n.var = v;
  return make(std::move(n));
}

Expression x0() {
  static const Expression e = variable(Var::X0);
  return e;
}

Expression r() {
  static const Expression e = variable(Var::R);
  return e;
}

Expression imag_unit() {
  static const Expression e = constant(Complex(0, 1));
  return e;
}

Expression z() { return x0() + imag_unit() * r(); }
Expression z_conj() { return x0() - imag_unit() * r(); }

Expression sum(std::vector<Expression> terms) {
  // flatten
  std::vector<Expression> flat;
  for (auto& t : terms) {
    if (t.kind() == Kind::Sum) {
      flat.insert(flat.end(), t.args().begin(), t.args().end());
    } else {
      flat.push_back(std::move(t));
    }
  }
  Complex c(0, 0);
  std::vector<std::pair<Complex, Expression>> like;
  for (const auto& t : flat) {
    if (t.is_constant()) {
      c += t.value();
      continue;
    }
    auto [coef, core] = split_coefficient(t);
    auto it = std::find_if(like.begin(), like.end(), [&](const auto& p) { return p.second == core; });
    if (it == like.end()) {
      like.emplace_back(coef, core);
    } else {
      it->first += coef;
    }
  }
  std::vector<Expression> out;
  if (c != Complex(0, 0)) out.push_back(constant(c));
  for (auto& [coef, core] : like) {
    if (coef == Complex(0, 0)) continue;
    out.push_back(coef == Complex(1, 0) ? core : product({constant(coef), core}));
  }
  if (out.empty()) return zero_expr();
  if (out.size() == 1) return out[0];
  std::sort(out.begin(), out.end(), canonical_less);
  Node n;
  n.kind = Kind::Sum;
  n.args = std::move(out);
  return make(std::move(n));
}

Expression product(std::vector<Expression> factors) {
  Complex c(1, 0);
  std::vector<std::pair<Expression, long double>> bases;
  std::function<void(const Expression&, long double)> absorb = [&](const Expression& f, long double p) {
    switch (f.kind()) {
      case Kind::Const:
        if (p == 1) {
          c *= f.value();
        } else {
          bases.emplace_back(f, p);
        }
        return;
      case Kind::Neg:
        if (p == 1) {
          c = -c;
          absorb(f.args()[0], 1);
        } else {
          bases.emplace_back(f, p);
        }
        return;
      case Kind::Product:
        if (p == 1) {
          for (const auto& a : f.args()) absorb(a, 1);
        } else {
          bases.emplace_back(f, p);
        }
        return;
      case Kind::Power:
        bases.emplace_back(f.args()[0], f.exponent() * p);
        return;
      default:
        bases.emplace_back(f, p);
        return;
    }
  };
  for (const auto& f : factors) absorb(f, 1);
  if (c == Complex(0, 0)) return zero_expr();

  std::vector<std::pair<Expression, long double>> merged;
  for (auto& [b, p] : bases) {
    auto it = std::find_if(merged.begin(), merged.end(), [&](const auto& q) { return q.first == b; });
    if (it == merged.end()) {
      merged.emplace_back(b, p);
    } else {
      it->second += p;
    }
  }
  std::vector<Expression> out;
  for (auto& [b, p] : merged) {
    if (p == 0) continue;
    Expression f = pow(b, p);
    if (f.is_constant()) {
      c *= f.value();
    } else {
      out.push_back(std::move(f));
    }
  }
  if (c == Complex(0, 0)) return zero_expr();
  if (out.empty()) return constant(c);
  std::sort(out.begin(), out.end(), canonical_less);
  if (c != Complex(1, 0)) out.insert(out.begin(), constant(c));
  if (out.size() == 1) return out[0];
  Node n;
  n.kind = Kind::Product;
  n.args = std::move(out);
  return make(std::move(n));
}

Expression pow(const Expression& base, long double p) {
  if (p == 0) return constant(1);
  if (p == 1) return base;
  if (base.is_constant()) {
    try {
      return constant(checked_pow<long double>(base.value(), p));
    } catch (const DomainError&) {
      // leave unevaluated; evaluation reports the problem
    }
  }
  if (base.kind() == Kind::Power && is_integer_exponent(p)) {
    return pow(base.args()[0], base.exponent() * p);
  }
  Node n;
  n.kind = Kind::Power;
  n.exponent = p;
  n.args = {base};
  return make(std::move(n));
}

namespace {

Expression unary(Kind k, const Expression& a) {
  Node n;
  n.kind = k;
  n.args = {a};
  return make(std::move(n));
}

}  // namespace

Expression exp(const Expression& a) {
  if (a.is_constant()) return constant(std::exp(a.value()));
  return unary(Kind::Exp, a);
}

Expression cos(const Expression& a) {
  if (a.is_constant()) return constant(std::cos(a.value()));
  return unary(Kind::Cos, a);
}

Expression sin(const Expression& a) {
  if (a.is_constant()) return constant(std::sin(a.value()));
  return unary(Kind::Sin, a);
}

Expression operator+(const Expression& a, const Expression& b) { return sum({a, b}); }
Expression operator-(const Expression& a, const Expression& b) { return sum({a, -b}); }

Expression operator-(const Expression& a) {
  if (a.is_constant()) return constant(-a.value());
  if (a.kind() == Kind::Neg) return a.args()[0];
  if (a.kind() == Kind::Product || a.kind() == Kind::Sum) return product({constant(-1), a});
  return unary(Kind::Neg, a);
}

Expression operator*(const Expression& a, const Expression& b) { return product({a, b}); }
Expression operator*(long double s, const Expression& a) { return product({constant(s), a}); }
Expression operator*(Complex s, const Expression& a) { return product({constant(s), a}); }

namespace {

class Differentiator {
 public:
  explicit Differentiator(Var v) : v_(v) {}

  Expression operator()(const Expression& e) {
    auto it = memo_.find(e.node());
    if (it != memo_.end()) return it->second;
    Expression d = compute(e);
    memo_.emplace(e.node(), d);
    keep_.push_back(e);
    return d;
  }

 private:
  Expression compute(const Expression& e) {
    switch (e.kind()) {
      case Kind::Const:
        return constant(0);
      case Kind::Variable:
        return constant(e.var() == v_ ? 1 : 0);
      case Kind::Sum: {
        std::vector<Expression> terms;
        for (const auto& a : e.args()) terms.push_back((*this)(a));
        return sum(std::move(terms));
      }
      case Kind::Product: {
        std::vector<Expression> terms;
        const auto args = e.args();
        for (std::size_t i = 0; i < args.size(); ++i) {
          Expression d = (*this)(args[i]);
          if (d.is_zero()) continue;
          std::vector<Expression> f(args.begin(), args.end());
          f[i] = d;
          terms.push_back(product(std::move(f)));
        }
        return sum(std::move(terms));
      }
      case Kind::Power: {
        const Expression& b = e.args()[0];
        const Expression db = (*this)(b);
        if (db.is_zero()) return constant(0);
        return product({constant(e.exponent()), pow(b, e.exponent() - 1), db});
      }
      case Kind::Exp:
        return product({e, (*this)(e.args()[0])});
      case Kind::Cos:
        return product({constant(-1), sin(e.args()[0]), (*this)(e.args()[0])});
      case Kind::Sin:
        return product({cos(e.args()[0]), (*this)(e.args()[0])});
      case Kind::Neg:
        return -(*this)(e.args()[0]);
    }
    return constant(0);
  }

  Var v_;
  std::unordered_map<const Node*, Expression> memo_;
  std::vector<Expression> keep_;
};

}  // namespace

Expression diff(const Expression& e, Var v) { return Differentiator(v)(e); }

Expression diff(const Expression& e, Var v, int order) {
  if (order < 0) throw PreconditionError("derivative order must be >= 0");
  Expression out = e;
  for (int i = 0; i < order; ++i) out = diff(out, v);
  return out;
}

std::size_t node_count(const Expression& e) {
  std::unordered_set<const Node*> seen;
  std::vector<Expression> stack{e};
  while (!stack.empty()) {
    Expression cur = stack.back();
    stack.pop_back();
    if (!seen.insert(cur.node()).second) continue;
    for (const auto& a : cur.args()) stack.push_back(a);
  }
  return seen.size();
}

namespace {

std::string number_text(long double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<long double>::max_digits10) << v;
  return os.str();
}

std::string constant_text(const Complex& c) {
  if (c.imag() == 0) {
    return c.real() < 0 ? "(" + number_text(c.real()) + ")" : number_text(c.real());
  }
  if (c.real() == 0) {
    if (c.imag() == 1) return "i";
    return "(" + number_text(c.imag()) + "*i)";
  }
  return "(" + number_text(c.real()) + "+" + number_text(c.imag()) + "*i)";
}

bool is_atomic(const Expression& e) {
  switch (e.kind()) {
    case Kind::Const:
    case Kind::Variable:
    case Kind::Exp:
    case Kind::Cos:
    case Kind::Sin:
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string Expression::to_string() const {
  switch (kind()) {
    case Kind::Const:
      return constant_text(value());
    case Kind::Variable:
      return var() == Var::X0 ? "x0" : "r";
    case Kind::Sum: {
      std::string s = "(";
      for (std::size_t i = 0; i < args().size(); ++i) {
        if (i) s += " + ";
        s += args()[i].to_string();
      }
      return s + ")";
    }
    case Kind::Product: {
      std::string s;
      for (std::size_t i = 0; i < args().size(); ++i) {
        if (i) s += "*";
        s += args()[i].to_string();
      }
      return s;
    }
    case Kind::Power: {
      const Expression& b = args()[0];
      std::string base = is_atomic(b) ? b.to_string() : "(" + b.to_string() + ")";
      return base + "^" + number_text(exponent());
    }
    case Kind::Exp:
      return "exp(" + args()[0].to_string() + ")";
    case Kind::Cos:
      return "cos(" + args()[0].to_string() + ")";
    case Kind::Sin:
      return "sin(" + args()[0].to_string() + ")";
    case Kind::Neg:
      return "(-" + (is_atomic(args()[0]) ? args()[0].to_string() : "(" + args()[0].to_string() + ")") + ")";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Compiled evaluation

Program::Program(const Expression& e) {
  std::unordered_map<const Node*, std::uint32_t> slot;
  // iterative post-order over the DAG
  std::vector<std::pair<Expression, bool>> stack{{e, false}};
  while (!stack.empty()) {
    auto [cur, expanded] = stack.back();
    stack.pop_back();
    if (slot.count(cur.node())) continue;
    if (!expanded) {
      stack.emplace_back(cur, true);
      for (const auto& a : cur.args()) {
        if (!slot.count(a.node())) stack.emplace_back(a, false);
      }
      continue;
    }
    Instr ins;
    ins.kind = cur.kind();
    ins.value = cur.value();
    ins.var = cur.var();
    ins.exponent = cur.exponent();
    for (const auto& a : cur.args()) ins.operands.push_back(slot.at(a.node()));
    slot.emplace(cur.node(), static_cast<std::uint32_t>(code_.size()));
    code_.push_back(std::move(ins));
  }
}

template <class T>
std::complex<T> Program::run(T x0_value, T r_value, std::vector<std::complex<T>>& regs) const {
  regs.resize(code_.size());
  for (std::size_t i = 0; i < code_.size(); ++i) {
    const Instr& ins = code_[i];
    std::complex<T> v;
    switch (ins.kind) {
      case Kind::Const:
        v = std::complex<T>(static_cast<T>(ins.value.real()), static_cast<T>(ins.value.imag()));
        break;
      case Kind::Variable:
        v = std::complex<T>(ins.var == Var::X0 ? x0_value : r_value, 0);
        break;
      case Kind::Sum:
        v = {0, 0};
        for (auto o : ins.operands) v += regs[o];
        break;
      case Kind::Product:
        v = {1, 0};
        for (auto o : ins.operands) v *= regs[o];
        break;
      case Kind::Power:
        v = checked_pow(regs[ins.operands[0]], ins.exponent);
        break;
      case Kind::Exp:
        v = std::exp(regs[ins.operands[0]]);
        break;
      case Kind::Cos:
        v = std::cos(regs[ins.operands[0]]);
        break;
      case Kind::Sin:
        v = std::sin(regs[ins.operands[0]]);
        break;
      case Kind::Neg:
        v = -regs[ins.operands[0]];
        break;
    }
    regs[i] = v;
  }
  return regs.back();
}

template <class T>
std::complex<T> Program::operator()(T x0_value, T r_value) const {
  std::vector<std::complex<T>> regs;
  return run(x0_value, r_value, regs);
}

template std::complex<double> Program::run<double>(double, double, std::vector<std::complex<double>>&) const;
template std::complex<long double> Program::run<long double>(long double, long double,
                                                             std::vector<std::complex<long double>>&) const;
template std::complex<double> Program::operator()<double>(double, double) const;
template std::complex<long double> Program::operator()<long double>(long double, long double) const;

template <class T>
std::complex<T> evaluate(const Expression& e, T x0_value, T r_value) {
  return Program(e)(x0_value, r_value);
}

template std::complex<double> evaluate<double>(const Expression&, double, double);
template std::complex<long double> evaluate<long double>(const Expression&, long double, long double);

}  // namespace cliffgen::expr
