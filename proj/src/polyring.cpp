#include "psa/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "psa/errors.hpp"

namespace psa {

// ---------------------------------------------------------------------------
// VarContext

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_'))
    return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw DomainError("exponent overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw DomainError("exponent overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw DomainError("exponent overflow");
  return r;
}

} // namespace

VarContext::VarContext(std::vector<std::string> names, RingKind kind)
    : names_(std::move(names)), kind_(kind) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n))
      throw DomainError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second)
      throw DomainError("duplicate variable name '" + n + "'");
  }
}

std::optional<std::size_t> VarContext::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name)
      return i;
  return std::nullopt;
}

ContextPtr make_context(std::vector<std::string> names, RingKind kind) {
  return std::make_shared<const VarContext>(std::move(names), kind);
}

ContextPtr with_kind(const ContextPtr& ctx, RingKind kind) {
  if (ctx->kind() == kind)
    return ctx;
  return make_context(ctx->names(), kind);
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
  if (a != b && !(*a == *b))
    throw DomainError("context mismatch");
}

// ---------------------------------------------------------------------------
// Exponents

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
  std::int64_t da = total_degree(a), db = total_degree(b);
  if (da != db)
    return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Exponent add_exponents(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw DomainError("exponent length mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = checked_add(a[i], b[i]);
  return r;
}

Exponent sub_exponents(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size())
    throw DomainError("exponent length mismatch");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] = checked_sub(a[i], b[i]);
  return r;
}

std::int64_t total_degree(const Exponent& e) {
  std::int64_t d = 0;
  for (auto v : e)
    d = checked_add(d, v);
  return d;
}

std::string format_monomial(const VarContext& ctx, const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0)
      continue;
    if (!out.empty())
      out += '*';
    out += ctx.name(i);
    if (e[i] != 1)
      out += '^' + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

// ---------------------------------------------------------------------------
// LaurentPoly

LaurentPoly::LaurentPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_)
    throw DomainError("null variable context");
}

LaurentPoly LaurentPoly::constant(ContextPtr ctx, const Rational& c) {
  LaurentPoly p(std::move(ctx));
  p.add_term(Exponent(p.ctx_->arity(), 0), c);
  return p;
}

LaurentPoly LaurentPoly::variable(ContextPtr ctx, std::size_t i) {
  if (i >= ctx->arity())
    throw DomainError("variable index " + std::to_string(i) + " out of range");
  Exponent e(ctx->arity(), 0);
  e[i] = 1;
  return monomial(std::move(ctx), std::move(e));
}

LaurentPoly LaurentPoly::monomial(ContextPtr ctx, Exponent e, const Rational& c) {
  LaurentPoly p(std::move(ctx));
  p.add_term(e, c);
  return p;
}

bool LaurentPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                            [](std::int64_t v) { return v == 0; }));
}

const Exponent& LaurentPoly::leading_exponent() const {
  if (terms_.empty())
    throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->first;
}

const Rational& LaurentPoly::leading_coefficient() const {
  if (terms_.empty())
    throw DomainError("zero polynomial has no leading term");
  return terms_.begin()->second;
}

void LaurentPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != ctx_->arity())
    throw DomainError("exponent length " + std::to_string(e.size()) + " does not match arity " +
                      std::to_string(ctx_->arity()));
  if (c == 0)
    return;
  if (!ctx_->is_laurent())
    for (auto v : e)
      if (v < 0)
        throw DomainError("negative exponent in polynomial ring");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0)
      terms_.erase(it);
  }
}

Exponent LaurentPoly::min_exponent() const {
  Exponent m(ctx_->arity(), 0);
  if (terms_.empty())
    return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      m[i] = std::min(m[i], e[i]);
  return m;
}

Exponent LaurentPoly::max_exponent() const {
  Exponent m(ctx_->arity(), 0);
  if (terms_.empty())
    return m;
  m = terms_.begin()->first;
  for (const auto& [e, c] : terms_)
    for (std::size_t i = 0; i < m.size(); ++i)
      m[i] = std::max(m[i], e[i]);
  return m;
}

std::int64_t LaurentPoly::degree() const {
  return terms_.empty() ? 0 : total_degree(terms_.begin()->first);
}

LaurentPoly LaurentPoly::shifted(const Exponent& e) const {
  LaurentPoly r(ctx_);
  for (const auto& [exp, c] : terms_)
    r.add_term(add_exponents(exp, e), c);
  return r;
}

LaurentPoly LaurentPoly::rebased(ContextPtr ctx) const {
  if (ctx->arity() != ctx_->arity())
    throw DomainError("cannot rebase between contexts of different arity");
  LaurentPoly r(std::move(ctx));
  for (const auto& [e, c] : terms_)
    r.add_term(e, c);
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  require_same_context(ctx_, other.ctx_);
  for (const auto& [e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  require_same_context(ctx_, other.ctx_);
  for (const auto& [e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  require_same_context(a.ctx_, b.ctx_);
  LaurentPoly r(a.ctx_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term(add_exponents(ea, eb), ca * cb);
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& other) {
  *this = *this * other;
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_)
    coeff *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, c] : r.terms_)
    c = -c;
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& other) const {
  if (ctx_ != other.ctx_ && !(*ctx_ == *other.ctx_))
    return false;
  return terms_ == other.terms_;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    bool negative = c < 0;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    Rational mag = abs(c);
    bool unit_monomial = std::all_of(e.begin(), e.end(), [](std::int64_t v) { return v == 0; });
    if (unit_monomial) {
      out += psa::to_string(mag);
    } else {
      if (mag != 1)
        out += psa::to_string(mag) + "*";
      out += format_monomial(*ctx_, e);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
    } else {
      Tok k;
      switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      default:
        throw ParseError("syntax error at position " + std::to_string(i) + ": unexpected character '" +
                             std::string(1, s[i]) + "'",
                         i, std::string(1, s[i]));
      }
      out.push_back({k, std::string(1, s[i]), i});
      ++i;
    }
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// expr    := [+|-] term (('+'|'-') term)*
// term    := power ('*' power)*
// power   := primary ['^' [+|-] integer]
// primary := integer ['/' integer] | variable | '(' expr ')'
class Parser {
public:
  Parser(std::string_view text, const ContextPtr& ctx) : toks_(tokenize(text)), ctx_(ctx) {}

  LaurentPoly run() {
    LaurentPoly result = expr();
    if (peek().kind != Tok::End)
      fail(peek());
    return result;
  }

private:
  // Powers of non-monomial subexpressions are expanded, so keep them small.
  static constexpr std::int64_t kMaxExpandedPower = 256;
  static constexpr std::int64_t kMaxExponent = 1000000;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const Token& t) const {
    std::string shown = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw ParseError("syntax error at position " + std::to_string(t.pos) + ": unexpected " + shown, t.pos,
                     t.text);
  }

  LaurentPoly expr() {
    bool negate = false;
    if (peek().kind == Tok::Plus || peek().kind == Tok::Minus)
      negate = next().kind == Tok::Minus;
    LaurentPoly acc = term();
    if (negate)
      acc = -acc;
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      if (minus)
        acc -= term();
      else
        acc += term();
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = power();
    while (peek().kind == Tok::Star) {
      next();
      acc *= power();
    }
    return acc;
  }

  Integer integer_literal(const Token& t) { return Integer(t.text, 10); }

  LaurentPoly power() {
    LaurentPoly base = primary();
    if (peek().kind != Tok::Caret)
      return base;
    next();
    bool negative = false;
    std::size_t sign_pos = peek().pos;
    if (peek().kind == Tok::Minus || peek().kind == Tok::Plus)
      negative = next().kind == Tok::Minus;
    const Token& e = next();
    if (e.kind != Tok::Number)
      fail(e);
    Integer v = integer_literal(e);
    if (!v.fits_slong_p() || v > kMaxExponent)
      throw ParseError("exponent too large at position " + std::to_string(e.pos), e.pos, e.text);
    std::int64_t k = negative ? -v.get_si() : v.get_si();

    if (base.is_monomial()) {
      if (k < 0 && !ctx_->is_laurent() && !base.is_constant())
        throw ParseError("negative exponent at position " + std::to_string(sign_pos) + " in a polynomial ring",
                         sign_pos, "-" + e.text);
      const auto& [exp, coeff] = *base.terms().begin();
      Exponent scaled(exp.size());
      for (std::size_t i = 0; i < exp.size(); ++i)
        scaled[i] = checked_mul(exp[i], k);
      return LaurentPoly::monomial(ctx_, std::move(scaled), psa::power(coeff, k));
    }
    if (base.is_zero())
      return k == 0 ? LaurentPoly::constant(ctx_, 1) : base;
    if (k < 0)
      throw ParseError("negative power of a non-monomial at position " + std::to_string(sign_pos), sign_pos, e.text);
    if (k > kMaxExpandedPower)
      throw ParseError("exponent too large at position " + std::to_string(e.pos), e.pos, e.text);
    LaurentPoly result = LaurentPoly::constant(ctx_, 1);
    for (std::int64_t i = 0; i < k; ++i)
      result *= base;
    return result;
  }

  LaurentPoly primary() {
    const Token& t = next();
    if (t.kind == Tok::Number) {
      Integer num = integer_literal(t);
      Integer den = 1;
      if (peek().kind == Tok::Slash) {
        next();
        const Token& d = next();
        if (d.kind != Tok::Number)
          fail(d);
        den = integer_literal(d);
        if (den == 0)
          throw ParseError("syntax error at position " + std::to_string(d.pos) + ": zero denominator", d.pos,
                           d.text);
      }
      Rational q(num, den);
      q.canonicalize();
      return LaurentPoly::constant(ctx_, q);
    }
    if (t.kind == Tok::LParen) {
      LaurentPoly inner = expr();
      if (peek().kind != Tok::RParen)
        fail(peek());
      next();
      return inner;
    }
    if (t.kind != Tok::Ident)
      fail(t);
    auto idx = ctx_->index_of(t.text);
    if (!idx)
      throw ParseError("unknown variable '" + t.text + "' at position " + std::to_string(t.pos), t.pos, t.text);
    return LaurentPoly::variable(ctx_, *idx);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const ContextPtr& ctx_;
};

} // namespace

LaurentPoly parse(std::string_view text, const ContextPtr& ctx) { return Parser(text, ctx).run(); }

// ---------------------------------------------------------------------------
// Calculus and division

LaurentPoly partial_derivative(const LaurentPoly& f, std::size_t i) {
  if (i >= f.context()->arity())
    throw DomainError("variable index " + std::to_string(i) + " out of range");
  LaurentPoly r(f.context());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0)
      continue;
    Exponent d = e;
    d[i] -= 1;
    r.add_term(d, c * Rational(static_cast<long>(e[i])));
  }
  return r;
}

namespace {

bool divides(const Exponent& a, const Exponent& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

} // namespace

std::optional<LaurentPoly> divide_exact(const LaurentPoly& f, const LaurentPoly& g) {
  require_same_context(f.context(), g.context());
  if (g.is_zero())
    throw DomainError("division by the zero polynomial");
  if (f.is_zero())
    return LaurentPoly(f.context());

  // Strip monomial content from both sides and divide in the polynomial ring.
  // A polynomial without monomial factors divides x^a*f' in the Laurent ring
  // exactly when it divides f' in the polynomial ring.
  ContextPtr lctx = with_kind(f.context(), RingKind::Laurent);
  Exponent mf = f.min_exponent();
  Exponent mg = g.min_exponent();
  Exponent neg_mf = sub_exponents(Exponent(mf.size(), 0), mf);
  Exponent neg_mg = sub_exponents(Exponent(mg.size(), 0), mg);
  LaurentPoly rem = f.rebased(lctx).shifted(neg_mf);
  LaurentPoly div = g.rebased(lctx).shifted(neg_mg);

  const Exponent& lead_e = div.leading_exponent();
  const Rational& lead_c = div.leading_coefficient();
  LaurentPoly quot(lctx);
  while (!rem.is_zero()) {
    const Exponent& re = rem.leading_exponent();
    if (!divides(lead_e, re))
      return std::nullopt;
    LaurentPoly t = LaurentPoly::monomial(lctx, sub_exponents(re, lead_e), rem.leading_coefficient() / lead_c);
    rem -= t * div;
    quot += t;
  }

  quot = quot.shifted(sub_exponents(mf, mg));
  if (!f.context()->is_laurent())
    for (const auto& [e, c] : quot.terms())
      for (auto v : e)
        if (v < 0)
          return std::nullopt;
  return quot.rebased(f.context());
}

std::optional<Rational> evaluate(const LaurentPoly& f, const RationalPoint& p) {
  if (p.size() != f.context()->arity())
    throw DomainError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                      std::to_string(f.context()->arity()));
  Rational total = 0;
  for (const auto& [e, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0)
        continue;
      if (e[i] < 0 && p[i] == 0)
        return std::nullopt;
      term *= power(p[i], e[i]);
    }
    total += term;
  }
  return total;
}

} // namespace psa
