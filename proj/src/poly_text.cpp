#include "stabilis/poly_text.hpp"

#include <cctype>
#include <optional>

#include "stabilis/errors.hpp"
#include "stabilis/upoly.hpp"

namespace stabilis {

VarNames VarNames::z(std::size_t n) {
  std::vector<std::string> v;
  for (std::size_t k = 1; k <= n; ++k) v.push_back("z" + std::to_string(k));
  return VarNames(std::move(v));
}

VarNames VarNames::zw(std::size_t n) { return zw(n, n); }

VarNames VarNames::zw(std::size_t nz, std::size_t nw) {
  std::vector<std::string> v = z(nz).names();
  for (std::size_t k = 1; k <= nw; ++k) v.push_back("w" + std::to_string(k));
  return VarNames(std::move(v));
}

VarNames VarNames::blocks(const Exponent& sizes, const std::string& prefix) {
  std::vector<std::string> v;
  for (std::size_t i = 0; i < sizes.size(); ++i)
    for (std::size_t j = 0; j < sizes[i]; ++j)
      v.push_back(prefix + "_" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
  return VarNames(std::move(v));
}

VarNames VarNames::concat(const VarNames& a, const VarNames& b) {
  std::vector<std::string> v = a.names_;
  v.insert(v.end(), b.names_.begin(), b.names_.end());
  return VarNames(std::move(v));
}

long VarNames::index_of(const std::string& name) const {
  for (std::size_t k = 0; k < names_.size(); ++k)
    if (names_[k] == name) return static_cast<long>(k);
  return -1;
}

namespace {

enum class Tok { Number, Imag, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t k = 0;
  while (k < s.size()) {
    char c = s[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++k;
      continue;
    }
    std::size_t start = k;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (k < s.size() && std::isdigit(static_cast<unsigned char>(s[k]))) ++k;
      std::string digits = s.substr(start, k - start);
      if (k < s.size() && s[k] == 'i' && (k + 1 == s.size() || !ident_char(s[k + 1]))) {
        ++k;
        out.push_back({Tok::Imag, digits, start});
      } else {
        out.push_back({Tok::Number, digits, start});
      }
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (k < s.size() && ident_char(s[k])) ++k;
      out.push_back({Tok::Ident, s.substr(start, k - start), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      default: throw ParseError(std::string("unexpected character '") + c + "'", k);
    }
    out.push_back({kind, std::string(1, c), k});
    ++k;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

// Auto mode accepts z1, z2, ...
std::optional<std::size_t> z_index(const std::string& name) {
  if (name.size() < 2 || name[0] != 'z') return std::nullopt;
  for (std::size_t k = 1; k < name.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(name[k]))) return std::nullopt;
  if (name[1] == '0') return std::nullopt;
  return std::stoul(name.substr(1));
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const VarNames& names)
      : toks_(std::move(toks)), names_(names), n_(names.size()) {}

  MPoly parse() {
    MPoly f = expr();
    if (peek().kind != Tok::End) fail_implicit_or("unexpected token '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, peek().pos); }

  void fail_implicit_or(const std::string& msg) {
    Tok k = peek().kind;
    if (k == Tok::Number || k == Tok::Imag || k == Tok::Ident || k == Tok::LParen)
      fail("implicit multiplication is not allowed");
    fail(msg);
  }

  MPoly expr() {
    MPoly f = term();
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool minus = next().kind == Tok::Minus;
      MPoly g = term();
      if (minus) {
        f -= g;
      } else {
        f += g;
      }
    }
    return f;
  }

  MPoly term() {
    MPoly f = factor();
    while (peek().kind == Tok::Star || peek().kind == Tok::Slash) {
      bool divide = next().kind == Tok::Slash;
      std::size_t at = peek().pos;
      MPoly g = factor();
      if (divide) {
        if (!g.is_constant() || g.is_zero())
          throw ParseError("division only by a nonzero constant", at);
        f *= Scalar(1) / g.coeff(Exponent(n_, 0));
      } else {
        f = f * g;
      }
    }
    Tok k = peek().kind;
    if (k == Tok::Number || k == Tok::Imag || k == Tok::Ident || k == Tok::LParen)
      fail("implicit multiplication is not allowed");
    return f;
  }

  MPoly factor() {
    if (peek().kind == Tok::Minus) {
      next();
      return -factor();
    }
    if (peek().kind == Tok::Plus) {
      next();
      return factor();
    }
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    if (peek().kind == Tok::Caret) {
      next();
      if (peek().kind != Tok::Number) fail("exponent must be a non-negative integer");
      const Token& t = next();
      if (t.text.size() > 6) throw ParseError("exponent too large", t.pos);
      base = base.pow(static_cast<unsigned>(std::stoul(t.text)));
    }
    return base;
  }

  MPoly primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        next();
        return MPoly::constant(n_, Scalar(mpq_class(mpz_class(t.text))));
      case Tok::Imag:
        next();
        return MPoly::constant(n_, Scalar(0, mpq_class(mpz_class(t.text))));
      case Tok::Ident: {
        next();
        if (t.text == "i") return MPoly::constant(n_, Scalar::i());
        long idx = names_.index_of(t.text);
        if (idx < 0) throw ParseError("unknown variable '" + t.text + "'", t.pos);
        return MPoly::variable(n_, static_cast<std::size_t>(idx));
      }
      case Tok::LParen: {
        next();
        MPoly inner = expr();
        if (peek().kind != Tok::RParen) fail_implicit_or("expected ')'");
        next();
        return inner;
      }
      case Tok::End:
        fail("unexpected end of input");
      default:
        fail("unexpected token '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  const VarNames& names_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

std::string monomial_str(const Exponent& e, const VarNames& names) {
  std::string s;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!s.empty()) s += "*";
    s += names[k];
    if (e[k] > 1) s += "^" + std::to_string(e[k]);
  }
  return s;
}

}  // namespace

MPoly parse_polynomial(const std::string& text, const VarNames& names) {
  return Parser(tokenize(text), names).parse();
}

MPoly parse_polynomial(const std::string& text, std::size_t min_nvars) {
  auto toks = tokenize(text);
  std::size_t n = min_nvars;
  for (const auto& t : toks) {
    if (t.kind != Tok::Ident || t.text == "i") continue;
    auto idx = z_index(t.text);
    if (!idx) throw ParseError("unknown variable '" + t.text + "'", t.pos);
    if (*idx > 4096) throw ParseError("variable index too large", t.pos);
    n = std::max(n, *idx);
  }
  VarNames names = VarNames::z(n);
  return Parser(std::move(toks), names).parse();
}

std::string to_string(const MPoly& f, const VarNames& names) {
  if (names.size() != f.nvars()) throw DimensionError("variable names do not match ring");
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& [e, c] : f.terms()) {
    std::string m = monomial_str(e, names);
    std::string t;
    if (m.empty()) {
      t = c.str();
    } else if (c == Scalar(1)) {
      t = m;
    } else if (c == Scalar(-1)) {
      t = "-" + m;
    } else {
      t = c.str() + "*" + m;
    }
    if (!out.empty() && t[0] != '-') out += "+";
    out += t;
  }
  return out;
}

std::string to_string(const MPoly& f) { return to_string(f, VarNames::z(f.nvars())); }

std::string upoly_str(const UPoly& p, const std::string& var) {
  return to_string(mpoly_from_upoly(p), VarNames({var}));
}

Scalar parse_scalar(const std::string& text) {
  MPoly f = parse_polynomial(text, VarNames());
  if (!f.is_constant()) throw ParseError("expected a constant", 0);
  return f.coeff(Exponent{});
}

}  // namespace stabilis
