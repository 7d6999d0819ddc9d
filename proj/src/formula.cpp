#include "contralg/formula.hpp"

#include <algorithm>
#include <cctype>

namespace contralg {

FormulaPtr f_false() { return std::make_shared<Formula>(Formula{Formula::Kind::False, "", nullptr, nullptr}); }
FormulaPtr f_true() { return std::make_shared<Formula>(Formula{Formula::Kind::True, "", nullptr, nullptr}); }
FormulaPtr f_var(std::string name) {
  return std::make_shared<Formula>(Formula{Formula::Kind::Var, std::move(name), nullptr, nullptr});
}
FormulaPtr f_not(FormulaPtr a) {
  return std::make_shared<Formula>(Formula{Formula::Kind::Not, "", std::move(a), nullptr});
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{Formula::Kind::And, "", std::move(a), std::move(b)});
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{Formula::Kind::Or, "", std::move(a), std::move(b)});
}
FormulaPtr f_imp(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{Formula::Kind::Imp, "", std::move(a), std::move(b)});
}

bool same_formula(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  if (a->kind == Formula::Kind::Var) return a->var == b->var;
  if (a->lhs || b->lhs)
    if (!same_formula(a->lhs, b->lhs)) return false;
  if (a->rhs || b->rhs)
    if (!same_formula(a->rhs, b->rhs)) return false;
  return true;
}

namespace {

struct Token {
  enum class Type { End, LParen, RParen, Comma, Not, And, Or, Imp, Zero, One, Ident };
  Type type;
  std::string text;
  std::size_t pos;
};

const char* token_name(Token::Type t) {
  switch (t) {
    case Token::Type::End: return "end of input";
    case Token::Type::LParen: return "'('";
    case Token::Type::RParen: return "')'";
    case Token::Type::Comma: return "','";
    case Token::Type::Not: return "'!'";
    case Token::Type::And: return "'&'";
    case Token::Type::Or: return "'|'";
    case Token::Type::Imp: return "'->'";
    case Token::Type::Zero: return "'0'";
    case Token::Type::One: return "'1'";
    case Token::Type::Ident: return "identifier";
  }
  return "?";
}

std::vector<Token> tokenize(std::string_view text, bool allow_comma) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
    const std::size_t pos = i;
    if (c == '(') { toks.push_back({Token::Type::LParen, "(", pos}); ++i; continue; }
    if (c == ')') { toks.push_back({Token::Type::RParen, ")", pos}); ++i; continue; }
    if (c == ',' && allow_comma) { toks.push_back({Token::Type::Comma, ",", pos}); ++i; continue; }
    if (c == '!') { toks.push_back({Token::Type::Not, "!", pos}); ++i; continue; }
    if (c == '&') { toks.push_back({Token::Type::And, "&", pos}); ++i; continue; }
    if (c == '|') { toks.push_back({Token::Type::Or, "|", pos}); ++i; continue; }
    if (c == '-') {
      if (i + 1 < text.size() && text[i + 1] == '>') {
        toks.push_back({Token::Type::Imp, "->", pos});
        i += 2;
        continue;
      }
      throw ParseError(ErrorKind::UnknownToken, "'-' is not a token (did you mean '->')", pos);
    }
    if (c == '0') { toks.push_back({Token::Type::Zero, "0", pos}); ++i; continue; }
    if (c == '1') { toks.push_back({Token::Type::One, "1", pos}); ++i; continue; }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i + 1;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      toks.push_back({Token::Type::Ident, std::string(text.substr(i, j - i)), pos});
      i = j;
      continue;
    }
    throw ParseError(ErrorKind::UnknownToken, "unexpected character '" + std::string(1, c) + "'",
                     pos);
  }
  toks.push_back({Token::Type::End, "", text.size()});
  return toks;
}

class FormulaParser {
 public:
  explicit FormulaParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  FormulaPtr parse_formula() { return parse_imp(); }

  const Token& peek() const { return toks_[at_]; }
  Token take() { return toks_[at_++]; }

  Token expect(Token::Type t) {
    if (peek().type != t)
      throw ParseError(ErrorKind::SyntaxError,
                       "expected " + std::string(token_name(t)) + ", found " +
                           token_name(peek().type),
                       peek().pos, {token_name(t)});
    return take();
  }

 private:
  FormulaPtr parse_imp() {
    FormulaPtr lhs = parse_or();
    if (peek().type == Token::Type::Imp) {
      take();
      return f_imp(std::move(lhs), parse_imp());  // right-associative
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (peek().type == Token::Type::Or) {
      take();
      lhs = f_or(std::move(lhs), parse_and());
    }
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (peek().type == Token::Type::And) {
      take();
      lhs = f_and(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    if (peek().type == Token::Type::Not) {
      take();
      return f_not(parse_unary());
    }
    return parse_primary();
  }

  FormulaPtr parse_primary() {
    const Token t = peek();
    switch (t.type) {
      case Token::Type::Zero: take(); return f_false();
      case Token::Type::One: take(); return f_true();
      case Token::Type::Ident: take(); return f_var(t.text);
      case Token::Type::LParen: {
        take();
        FormulaPtr inner = parse_imp();
        expect(Token::Type::RParen);
        return inner;
      }
      default:
        throw ParseError(ErrorKind::SyntaxError,
                         std::string("expected a formula, found ") + token_name(t.type), t.pos,
                         {"'0'", "'1'", "identifier", "'!'", "'('"});
    }
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::Imp: return 1;
    case Formula::Kind::Or: return 2;
    case Formula::Kind::And: return 3;
    case Formula::Kind::Not: return 4;
    default: return 5;
  }
}

void print(const FormulaPtr& f, int parent_prec, std::string& out) {
  const int prec = precedence(f->kind);
  const bool wrap = prec < parent_prec;
  if (wrap) out += "(";
  switch (f->kind) {
    case Formula::Kind::False: out += "0"; break;
    case Formula::Kind::True: out += "1"; break;
    case Formula::Kind::Var: out += f->var; break;
    case Formula::Kind::Not:
      out += "!";
      print(f->lhs, prec, out);
      break;
    case Formula::Kind::And:
      print(f->lhs, prec, out);
      out += " & ";
      print(f->rhs, prec + 1, out);
      break;
    case Formula::Kind::Or:
      print(f->lhs, prec, out);
      out += " | ";
      print(f->rhs, prec + 1, out);
      break;
    case Formula::Kind::Imp:
      print(f->lhs, prec + 1, out);
      out += " -> ";
      print(f->rhs, prec, out);
      break;
  }
  if (wrap) out += ")";
}

}  // namespace

FormulaPtr parse(std::string_view text) {
  FormulaParser p(tokenize(text, false));
  FormulaPtr f = p.parse_formula();
  p.expect(Token::Type::End);
  return f;
}

std::string to_string(const FormulaPtr& f) {
  std::string out;
  print(f, 0, out);
  return out;
}

VarContext::VarContext(std::vector<std::string> vars)
    : vars_(std::move(vars)), alg_(free_boolean_algebra(vars_)) {}

Mask VarContext::var_mask(const std::string& name) const {
  auto it = std::find(vars_.begin(), vars_.end(), name);
  if (it == vars_.end())
    throw Error(ErrorKind::UnboundVariable, "variable '" + name + "' is not declared");
  return free_variable_mask(*alg_, static_cast<int>(it - vars_.begin()),
                            static_cast<int>(vars_.size()));
}

std::string VarContext::minterm_name(int j) const {
  if (vars_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (!s.empty()) s += " & ";
    if (!((j >> i) & 1)) s += "!";
    s += vars_[i];
  }
  return s;
}

Mask eval(const FormulaPtr& f, const VarContext& ctx) {
  const auto& B = *ctx.algebra();
  switch (f->kind) {
    case Formula::Kind::False: return 0;
    case Formula::Kind::True: return B.ones();
    case Formula::Kind::Var: return ctx.var_mask(f->var);
    case Formula::Kind::Not: return B.complement(eval(f->lhs, ctx));
    case Formula::Kind::And: return B.meet(eval(f->lhs, ctx), eval(f->rhs, ctx));
    case Formula::Kind::Or: return B.join(eval(f->lhs, ctx), eval(f->rhs, ctx));
    case Formula::Kind::Imp: return B.implies(eval(f->lhs, ctx), eval(f->rhs, ctx));
  }
  throw Error(ErrorKind::Mismatch, "malformed formula node");
}

ContractPair parse_contract(std::string_view text, const VarContext& ctx, bool saturate) {
  FormulaParser p(tokenize(text, true));
  p.expect(Token::Type::LParen);
  FormulaPtr fa = p.parse_formula();
  p.expect(Token::Type::Comma);
  FormulaPtr fg = p.parse_formula();
  p.expect(Token::Type::RParen);
  p.expect(Token::Type::End);

  const auto& B = *ctx.algebra();
  Mask a = eval(fa, ctx);
  Mask g = eval(fg, ctx);
  if (saturate) g = B.join(g, B.complement(a));
  if (B.join(a, g) != B.ones()) {
    const Mask uncovered = B.complement(B.join(a, g));
    std::string detail = "uncovered minterms:";
    for (int j = 0; j < B.atom_count(); ++j)
      if (uncovered & (Mask{1} << j)) detail += " " + ctx.minterm_name(j);
    throw Error(ErrorKind::NotAContract, "(" + to_string(fa) + ", " + to_string(fg) +
                                             ") has a \\/ g != 1; " + detail);
  }
  return {a, g};
}

std::string render_mask(const VarContext& ctx, Mask m) {
  const auto& B = *ctx.algebra();
  if (m == 0) return "0";
  if (m == B.ones()) return "1";
  std::string out;
  for (int j = 0; j < B.atom_count(); ++j)
    if (m & (Mask{1} << j)) {
      if (!out.empty()) out += " | ";
      out += ctx.minterm_name(j);
    }
  return out;
}

}  // namespace contralg
