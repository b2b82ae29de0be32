// Copyright 2026 The fzfeat Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fzfeat/flatzinc.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace fzfeat {

ParseError::ParseError(const std::string& message, int line, int column)
    : Error(fmt::format("{}:{}: {}", line, column, message)), line_(line), column_(column) {}

namespace {

enum class Tok {
  End, Ident, Int, Float, String,
  LParen, RParen, LBracket, RBracket, LBrace, RBrace,
  Comma, Colon, DoubleColon, Semicolon, Equals, DotDot,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::int64_t ival = 0;
  double fval = 0;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space();
    Token t;
    t.line = line_;
    t.column = col_;
    if (pos_ >= src_.size()) return t;
    char c = src_[pos_];
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        advance();
      t.kind = Tok::Ident;
      t.text = std::string(src_.substr(start, pos_ - start));
      return t;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '-' && pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])))) {
      return number(t);
    }
    if (c == '"') return string_lit(t);
    advance();
    switch (c) {
      case '(': t.kind = Tok::LParen; break;
      case ')': t.kind = Tok::RParen; break;
      case '[': t.kind = Tok::LBracket; break;
      case ']': t.kind = Tok::RBracket; break;
      case '{': t.kind = Tok::LBrace; break;
      case '}': t.kind = Tok::RBrace; break;
      case ',': t.kind = Tok::Comma; break;
      case ';': t.kind = Tok::Semicolon; break;
      case '=': t.kind = Tok::Equals; break;
      case ':':
        if (peek_char() == ':') {
          advance();
          t.kind = Tok::DoubleColon;
        } else {
          t.kind = Tok::Colon;
        }
        break;
      case '.':
        if (peek_char() == '.') {
          advance();
          t.kind = Tok::DotDot;
          break;
        }
        [[fallthrough]];
      default:
        throw ParseError(fmt::format("unexpected character '{}'", c), t.line, t.column);
    }
    t.text = std::string(1, c);
    return t;
  }

 private:
  char peek_char() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '%') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  Token number(Token t) {
    std::size_t start = pos_;
    if (src_[pos_] == '-') advance();
    bool is_float = false;
    if (src_[pos_] == '0' && pos_ + 1 < src_.size() && (src_[pos_ + 1] == 'x' || src_[pos_ + 1] == 'o')) {
      throw ParseError("hexadecimal/octal literals are not supported", t.line, t.column);
    }
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    // A '.' followed by a digit starts a fraction; ".." is a range.
    if (pos_ + 1 < src_.size() && src_[pos_] == '.' && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      is_float = true;
      advance();
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t save = pos_;
      int save_col = col_;
      advance();
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) advance();
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        is_float = true;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) advance();
      } else {
        pos_ = save;
        col_ = save_col;
      }
    }
    t.text = std::string(src_.substr(start, pos_ - start));
    if (is_float) {
      t.kind = Tok::Float;
      // std::from_chars for double is available in libstdc++ 11.
      auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.fval);
      if (res.ec != std::errc()) throw ParseError("bad float literal '" + t.text + "'", t.line, t.column);
    } else {
      t.kind = Tok::Int;
      auto res = std::from_chars(t.text.data(), t.text.data() + t.text.size(), t.ival);
      if (res.ec != std::errc()) throw ParseError("integer literal out of range '" + t.text + "'", t.line, t.column);
    }
    return t;
  }

  Token string_lit(Token t) {
    advance();
    std::string out;
    while (true) {
      if (pos_ >= src_.size() || src_[pos_] == '\n') throw ParseError("unterminated string", t.line, t.column);
      char c = src_[pos_];
      advance();
      if (c == '"') break;
      if (c == '\\') {
        if (pos_ >= src_.size()) throw ParseError("unterminated string", t.line, t.column);
        char e = src_[pos_];
        advance();
        switch (e) {
          case 'n': out += '\n'; break;
          case 't': out += '\t'; break;
          default: out += e; break;
        }
        continue;
      }
      out += c;
    }
    t.kind = Tok::String;
    t.text = std::move(out);
    return t;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string_view tok_name(Tok k) {
  switch (k) {
    case Tok::End: return "end of input";
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::Float: return "float";
    case Tok::String: return "string";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::DoubleColon: return "'::'";
    case Tok::Semicolon: return "';'";
    case Tok::Equals: return "'='";
    case Tok::DotDot: return "'..'";
  }
  return "?";
}

// Declared type of a parameter or variable item.
struct TypeSpec {
  bool is_array = false;
  IntRange index{1, 0};
  bool is_var = false;
  VarType base = VarType::Int;
  Domain domain = Domain::unbounded_int();
};

class Parser {
 public:
  Parser(std::string_view text, std::string path) : lex_(text) {
    model_.set_source_path(std::move(path));
    cur_ = lex_.next();
  }

  Model run() {
    bool have_solve = false;
    while (cur_.kind != Tok::End) {
      if (cur_.kind != Tok::Ident) error("expected an item");
      const std::string& kw = cur_.text;
      if (have_solve) error("items after the solve item");
      if (kw == "predicate") {
        predicate();
      } else if (kw == "constraint") {
        constraint();
      } else if (kw == "solve") {
        solve();
        have_solve = true;
      } else {
        declaration();
      }
    }
    if (!have_solve) throw ModelError("missing solve item");
    mark_labeled();
    return std::move(model_);
  }

 private:
  [[noreturn]] void error(const std::string& msg) const {
    throw ParseError(fmt::format("{} (found {}{})", msg, tok_name(cur_.kind),
                                 cur_.text.empty() ? "" : " '" + cur_.text + "'"),
                     cur_.line, cur_.column);
  }

  [[noreturn]] void type_error(const Token& at, const std::string& msg) const {
    throw ModelError(fmt::format("{}:{}: type mismatch: {}", at.line, at.column, msg));
  }

  void bump() { cur_ = lex_.next(); }

  bool accept(Tok k) {
    if (cur_.kind != k) return false;
    bump();
    return true;
  }

  Token expect(Tok k) {
    if (cur_.kind != k) error(fmt::format("expected {}", tok_name(k)));
    Token t = cur_;
    bump();
    return t;
  }

  bool at_keyword(std::string_view kw) const { return cur_.kind == Tok::Ident && cur_.text == kw; }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) error(fmt::format("expected '{}'", kw));
    bump();
  }

  std::int64_t int_literal() { return expect(Tok::Int).ival; }

  double float_literal() {
    if (cur_.kind == Tok::Int) return static_cast<double>(int_literal());
    return expect(Tok::Float).fval;
  }

  void predicate() {
    bump();
    PredicateDecl p;
    p.name = expect(Tok::Ident).text;
    expect(Tok::LParen);
    int depth = 1;
    std::string sig;
    auto spaced = [&](const std::string& piece, bool space_before) {
      if (space_before && !sig.empty()) sig += ' ';
      sig += piece;
    };
    while (depth > 0) {
      if (cur_.kind == Tok::End) error("unterminated predicate declaration");
      if (cur_.kind == Tok::LParen) ++depth;
      if (cur_.kind == Tok::RParen && --depth == 0) {
        bump();
        break;
      }
      switch (cur_.kind) {
        case Tok::Ident:
        case Tok::Int:
        case Tok::Float: {
          bool glue = !sig.empty() && (sig.back() == '[' || sig.back() == '.' || sig.back() == '(');
          spaced(cur_.text, !glue);
          break;
        }
        case Tok::Comma: sig += ","; break;
        case Tok::Colon: sig += ":"; break;
        case Tok::DotDot: sig += ".."; break;
        case Tok::LBracket: spaced("[", !sig.empty() && sig.back() != '('); break;
        case Tok::RBracket: sig += "]"; break;
        case Tok::LParen: sig += "("; break;
        case Tok::RParen: sig += ")"; break;
        case Tok::LBrace: spaced("{", true); break;
        case Tok::RBrace: sig += "}"; break;
        default: error("unexpected token in predicate declaration");
      }
      bump();
    }
    expect(Tok::Semicolon);
    p.signature = std::move(sig);
    model_.add_predicate(std::move(p));
  }

  // Base type after optional `var`: bool | int | float | lo..hi | {..} |
  // flo..fhi | set of (int | lo..hi | {..}).
  void base_type(TypeSpec& ts) {
    if (at_keyword("bool")) {
      bump();
      ts.base = VarType::Bool;
      ts.domain = Domain::boolean();
    } else if (at_keyword("int")) {
      bump();
      ts.base = VarType::Int;
      ts.domain = Domain::unbounded_int();
    } else if (at_keyword("float")) {
      bump();
      ts.base = VarType::Float;
      ts.domain = Domain::unbounded_float();
    } else if (at_keyword("set")) {
      bump();
      expect_keyword("of");
      ts.base = VarType::Set;
      if (at_keyword("int")) {
        bump();
        ts.domain = Domain::set_of_int();
      } else if (cur_.kind == Tok::LBrace) {
        ts.domain = Domain::set_of_values(int_set_body());
      } else {
        std::int64_t lo = int_literal();
        expect(Tok::DotDot);
        std::int64_t hi = int_literal();
        ts.domain = Domain::set_of_range(lo, hi);
      }
    } else if (cur_.kind == Tok::LBrace) {
      Token at = cur_;
      ts.base = VarType::Int;
      auto vals = int_set_body();
      if (vals.empty()) throw ModelError(fmt::format("{}:{}: empty domain", at.line, at.column));
      ts.domain = Domain::int_set(std::move(vals));
    } else if (cur_.kind == Tok::Float) {
      double lo = float_literal();
      expect(Tok::DotDot);
      double hi = float_literal();
      ts.base = VarType::Float;
      ts.domain = Domain::float_range(lo, hi);
    } else if (cur_.kind == Tok::Int) {
      Token at = cur_;
      std::int64_t lo = int_literal();
      expect(Tok::DotDot);
      if (cur_.kind == Tok::Float) {
        double hi = float_literal();
        ts.base = VarType::Float;
        ts.domain = Domain::float_range(static_cast<double>(lo), hi);
        return;
      }
      std::int64_t hi = int_literal();
      if (lo > hi) throw ModelError(fmt::format("{}:{}: empty domain {}..{}", at.line, at.column, lo, hi));
      ts.base = VarType::Int;
      ts.domain = Domain::int_range(lo, hi);
    } else {
      error("expected a type");
    }
  }

  std::vector<std::int64_t> int_set_body() {
    expect(Tok::LBrace);
    std::vector<std::int64_t> vals;
    if (!accept(Tok::RBrace)) {
      do vals.push_back(int_literal());
      while (accept(Tok::Comma));
      expect(Tok::RBrace);
    }
    return vals;
  }

  TypeSpec type_spec() {
    TypeSpec ts;
    if (at_keyword("array")) {
      bump();
      ts.is_array = true;
      expect(Tok::LBracket);
      ts.index.lo = int_literal();
      expect(Tok::DotDot);
      ts.index.hi = int_literal();
      expect(Tok::RBracket);
      if (ts.index.lo != 1) error("array index sets must start at 1");
      if (ts.index.hi < 0) error("negative array size");
      expect_keyword("of");
    }
    if (at_keyword("var")) {
      bump();
      ts.is_var = true;
    } else if (at_keyword("par")) {
      bump();
    }
    base_type(ts);
    return ts;
  }

  std::vector<Term> annotations() {
    std::vector<Term> anns;
    while (accept(Tok::DoubleColon)) anns.push_back(expr());
    return anns;
  }

  Term expr() {
    Token at = cur_;
    switch (cur_.kind) {
      case Tok::Int: {
        std::int64_t v = int_literal();
        if (accept(Tok::DotDot)) return Term{IntRange{v, int_literal()}};
        return Term::integer(v);
      }
      case Tok::Float: {
        double v = float_literal();
        if (accept(Tok::DotDot)) error("float ranges are only allowed in types");
        return Term::real(v);
      }
      case Tok::String: {
        bump();
        return Term{Term::String{at.text}};
      }
      case Tok::LBrace: {
        auto vals = int_set_body();
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        return Term{IntSet{std::move(vals)}};
      }
      case Tok::LBracket: {
        bump();
        std::vector<Term> items;
        if (!accept(Tok::RBracket)) {
          do items.push_back(expr());
          while (accept(Tok::Comma));
          expect(Tok::RBracket);
        }
        return Term::array(std::move(items));
      }
      case Tok::Ident: {
        std::string name = cur_.text;
        bump();
        if (name == "true") return Term::boolean(true);
        if (name == "false") return Term::boolean(false);
        if (accept(Tok::LBracket)) {
          std::int64_t idx = int_literal();
          expect(Tok::RBracket);
          return Term::access(std::move(name), idx);
        }
        if (accept(Tok::LParen)) {
          std::vector<Term> args;
          if (!accept(Tok::RParen)) {
            do args.push_back(expr());
            while (accept(Tok::Comma));
            expect(Tok::RParen);
          }
          return Term::call(std::move(name), std::move(args));
        }
        return Term::ident(std::move(name));
      }
      default:
        error("expected an expression");
    }
  }

  // Static type of a term used as a value. Arrays report their element type.
  std::optional<VarType> type_of(const Term& t) const {
    if (t.is<bool>()) return VarType::Bool;
    if (t.is<std::int64_t>()) return VarType::Int;
    if (t.is<double>()) return VarType::Float;
    if (t.is<IntRange>() || t.is<IntSet>()) return VarType::Set;
    if (const auto* id = t.as<Term::Ident>()) {
      auto sym = model_.lookup(id->name);
      if (!sym) return std::nullopt;
      switch (sym->kind) {
        case Model::SymbolKind::Variable: return model_.variables()[sym->index].domain.type();
        case Model::SymbolKind::Parameter: return model_.parameters()[sym->index].type;
        case Model::SymbolKind::Array: return array_types_.at(id->name);
      }
    }
    if (const auto* acc = t.as<Term::Access>()) {
      auto it = array_types_.find(acc->array);
      if (it != array_types_.end()) return it->second;
    }
    return std::nullopt;
  }

  static bool compatible(VarType declared, VarType actual) {
    return declared == actual || (declared == VarType::Float && actual == VarType::Int);
  }

  // Checks that identifiers in a value term are declared scalars of a
  // compatible type and that array accesses are in bounds.
  void check_value(const Term& t, VarType declared, const Token& at, bool allow_var) {
    if (const auto* id = t.as<Term::Ident>()) {
      auto sym = model_.lookup(id->name);
      if (!sym) throw ModelError(fmt::format("{}:{}: undefined identifier '{}'", at.line, at.column, id->name));
      if (sym->kind == Model::SymbolKind::Array)
        type_error(at, "array '" + id->name + "' used where a scalar is expected");
      if (!allow_var && sym->kind == Model::SymbolKind::Variable)
        type_error(at, "variable '" + id->name + "' used in a parameter");
    } else if (const auto* acc = t.as<Term::Access>()) {
      check_access(*acc, at);
      if (!allow_var && model_.find_array(acc->array)->is_var)
        type_error(at, "variable array element used in a parameter");
    } else if (t.is<Term::Array>() || t.is<Term::Call>() || t.is<Term::String>()) {
      type_error(at, "expected a scalar value");
    }
    auto ty = type_of(t);
    if (ty && !compatible(declared, *ty))
      type_error(at, fmt::format("declared {} but given {}", to_string(declared), to_string(*ty)));
  }

  void check_access(const Term::Access& acc, const Token& at) {
    const ArrayDecl* a = model_.find_array(acc.array);
    if (!a) throw ModelError(fmt::format("{}:{}: undefined array '{}'", at.line, at.column, acc.array));
    if (acc.index < a->index.lo || acc.index > a->index.hi)
      throw ModelError(fmt::format("{}:{}: index {} out of bounds for '{}'", at.line, at.column, acc.index, acc.array));
  }

  // Identifiers in constraint and annotation arguments must be declared;
  // annotation atoms (e.g. `first_fail`) are exempt.
  void check_args(const Term& t, const Token& at, bool in_annotation) {
    if (const auto* id = t.as<Term::Ident>()) {
      if (!in_annotation && !model_.lookup(id->name))
        throw ModelError(fmt::format("{}:{}: undefined identifier '{}'", at.line, at.column, id->name));
    } else if (const auto* acc = t.as<Term::Access>()) {
      check_access(*acc, at);
    } else if (const auto* arr = t.as<Term::Array>()) {
      for (const auto& item : arr->items) check_args(item, at, in_annotation);
    } else if (const auto* call = t.as<Term::Call>()) {
      if (!in_annotation) type_error(at, "call '" + call->name + "' is not a constraint argument");
      for (const auto& a : call->args) check_args(a, at, true);
    }
  }

  void declaration() {
    Token at = cur_;
    TypeSpec ts = type_spec();
    expect(Tok::Colon);
    std::string name = expect(Tok::Ident).text;
    auto anns = annotations();
    std::optional<Term> init;
    Token init_at = cur_;
    if (accept(Tok::Equals)) {
      init_at = cur_;
      init = expr();
    }
    expect(Tok::Semicolon);

    if (ts.is_array) {
      array_decl(at, init_at, ts, std::move(name), std::move(anns), std::move(init));
      return;
    }
    if (!ts.is_var) {
      if (!init) throw ModelError(fmt::format("{}:{}: parameter '{}' has no value", at.line, at.column, name));
      check_value(*init, ts.base, init_at, false);
      if (!anns.empty()) type_error(at, "annotations on a parameter");
      model_.add_parameter(Parameter{std::move(name), ts.base, std::move(*init)});
      return;
    }
    Variable v;
    v.name = std::move(name);
    v.domain = ts.domain;
    set_flags(v, anns);
    v.annotations = std::move(anns);
    if (init) {
      check_value(*init, ts.base, init_at, true);
      bool is_ref = init->is<Term::Ident>() || init->is<Term::Access>();
      if (is_ref && init->is<Term::Ident>() && model_.find_parameter(init->as<Term::Ident>()->name)) is_ref = false;
      if (is_ref)
        v.binding.value = Binding::Alias{std::move(*init)};
      else
        v.binding.value = Binding::Constant{std::move(*init)};
    }
    model_.add_variable(std::move(v));
  }

  static void set_flags(Variable& v, const std::vector<Term>& anns) {
    for (const auto& a : anns) {
      if (a.head() == "var_is_introduced") v.is_introduced = true;
      if (a.head() == "is_defined_var") v.is_defined = true;
    }
  }

  void array_decl(const Token& at, const Token& init_at, const TypeSpec& ts, std::string name,
                  std::vector<Term> anns, std::optional<Term> init) {
    ArrayDecl a;
    a.name = name;
    a.is_var = ts.is_var;
    a.index = ts.index;
    a.element_domain = ts.domain;
    if (init) {
      const auto* arr = init->as<Term::Array>();
      if (!arr) type_error(init_at, "array '" + name + "' initialized with a non-array value");
      if (static_cast<std::int64_t>(arr->items.size()) != a.size())
        type_error(init_at, fmt::format("array '{}' declared with {} elements but given {}", name, a.size(),
                                        arr->items.size()));
      for (const auto& item : arr->items) check_value(item, ts.base, init_at, ts.is_var);
      a.elements = arr->items;
    } else {
      if (!ts.is_var) throw ModelError(fmt::format("{}:{}: parameter array '{}' has no value", at.line, at.column, name));
      a.owns_elements = true;
      for (std::int64_t i = a.index.lo; i <= a.index.hi; ++i) {
        Variable v;
        v.name = fmt::format("{}[{}]", name, i);
        v.domain = ts.domain;
        set_flags(v, anns);
        v.owner = name;
        a.elements.push_back(Term::ident(v.name));
        model_.add_variable(std::move(v));
      }
    }
    a.annotations = std::move(anns);
    array_types_[name] = ts.base;
    model_.add_array(std::move(a));
  }

  void constraint() {
    bump();
    Token at = cur_;
    Constraint c;
    c.name = expect(Tok::Ident).text;
    expect(Tok::LParen);
    if (!accept(Tok::RParen)) {
      do {
        Token arg_at = cur_;
        Term t = expr();
        check_args(t, arg_at, false);
        c.args.push_back(std::move(t));
      } while (accept(Tok::Comma));
      expect(Tok::RParen);
    }
    Token ann_at = cur_;
    c.annotations = annotations();
    for (const auto& a : c.annotations) check_args(a, ann_at, true);
    expect(Tok::Semicolon);
    (void)at;
    model_.add_constraint(std::move(c));
  }

  void solve() {
    bump();
    SolveGoal g;
    g.annotations = annotations();
    if (at_keyword("satisfy")) {
      bump();
      g.kind = SolveGoal::Kind::Satisfy;
    } else if (at_keyword("minimize") || at_keyword("maximize")) {
      g.kind = at_keyword("minimize") ? SolveGoal::Kind::Minimize : SolveGoal::Kind::Maximize;
      bump();
      Token at = cur_;
      Term obj = expr();
      if (!obj.is<Term::Ident>() && !obj.is<Term::Access>() && !obj.is<std::int64_t>() && !obj.is<double>())
        error("objective must be a variable or a number");
      check_args(obj, at, false);
      if (auto ty = type_of(obj); ty && *ty != VarType::Int && *ty != VarType::Float)
        type_error(at, "objective must be int or float");
      g.objective = std::move(obj);
    } else {
      error("expected satisfy, minimize or maximize");
    }
    expect(Tok::Semicolon);
    model_.set_goal(std::move(g));
  }

  void mark_labeled() {
    std::vector<std::uint32_t> occ;
    // Only flags; features count labeled variables from the annotations.
    for (const auto& s : search_annotations(model_.goal())) {
      for (const auto& t : s.variables) {
        std::vector<std::string> names;
        gather_names(t, names);
        for (const auto& n : names)
          if (auto sym = model_.lookup(n); sym && sym->kind == Model::SymbolKind::Variable)
            model_.variable_at(sym->index).is_labeled = true;
      }
    }
  }

  void gather_names(const Term& t, std::vector<std::string>& out) const {
    if (const auto* id = t.as<Term::Ident>()) {
      if (const ArrayDecl* a = model_.find_array(id->name)) {
        for (const auto& e : a->elements) gather_names(e, out);
      } else {
        out.push_back(id->name);
      }
    } else if (const auto* acc = t.as<Term::Access>()) {
      const ArrayDecl* a = model_.find_array(acc->array);
      if (a && acc->index >= a->index.lo && acc->index <= a->index.hi)
        gather_names(a->elements[static_cast<std::size_t>(acc->index - a->index.lo)], out);
    } else if (const auto* arr = t.as<Term::Array>()) {
      for (const auto& i : arr->items) gather_names(i, out);
    }
  }

  Lexer lex_;
  Token cur_;
  Model model_;
  std::unordered_map<std::string, VarType> array_types_;
};

std::string format_float(double v) {
  std::string s = fmt::format("{}", v);
  if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
  return s;
}

std::string join(const std::vector<Term>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += print_term(items[i]);
  }
  return out;
}

std::string print_annotations(const std::vector<Term>& anns) {
  std::string out;
  for (const auto& a : anns) out += " :: " + print_term(a);
  return out;
}

std::string print_int_set(const std::vector<std::int64_t>& vals) {
  std::string out = "{";
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(vals[i]);
  }
  return out + "}";
}

}  // namespace

std::string print_term(const Term& t) {
  struct Visitor {
    std::string operator()(bool b) const { return b ? "true" : "false"; }
    std::string operator()(std::int64_t v) const { return std::to_string(v); }
    std::string operator()(double v) const { return format_float(v); }
    std::string operator()(const IntRange& r) const { return fmt::format("{}..{}", r.lo, r.hi); }
    std::string operator()(const IntSet& s) const { return print_int_set(s.values); }
    std::string operator()(const Term::String& s) const {
      std::string out = "\"";
      for (char c : s.text) {
        if (c == '"' || c == '\\') out += '\\';
        if (c == '\n') {
          out += "\\n";
          continue;
        }
        out += c;
      }
      return out + "\"";
    }
    std::string operator()(const Term::Ident& id) const { return id.name; }
    std::string operator()(const Term::Access& a) const { return fmt::format("{}[{}]", a.array, a.index); }
    std::string operator()(const Term::Array& a) const { return "[" + join(a.items) + "]"; }
    std::string operator()(const Term::Call& c) const { return c.name + "(" + join(c.args) + ")"; }
  };
  return std::visit(Visitor{}, t.value);
}

std::string print_domain(const Domain& d) {
  switch (d.kind()) {
    case Domain::Kind::Bool: return "bool";
    case Domain::Kind::UnboundedInt: return "int";
    case Domain::Kind::UnboundedFloat: return "float";
    case Domain::Kind::IntRange: return fmt::format("{}..{}", d.range()->lo, d.range()->hi);
    case Domain::Kind::IntSet: return print_int_set(d.values()->values);
    case Domain::Kind::FloatRange:
      return format_float(d.float_bounds()->lo) + ".." + format_float(d.float_bounds()->hi);
    case Domain::Kind::SetOfInt:
      if (const auto* r = d.range()) return fmt::format("set of {}..{}", r->lo, r->hi);
      if (const auto* s = d.values()) return "set of " + print_int_set(s->values);
      return "set of int";
  }
  return "?";
}

std::string print_flatzinc(const Model& model) {
  std::ostringstream out;
  for (const auto& p : model.predicates()) out << "predicate " << p.name << "(" << p.signature << ");\n";
  for (const auto& ref : model.order()) {
    switch (ref.kind) {
      case DeclRef::Kind::Parameter: {
        const auto& p = model.parameters()[ref.index];
        out << to_string(p.type) << ": " << p.name << " = " << print_term(p.value) << ";\n";
        break;
      }
      case DeclRef::Kind::Variable: {
        const auto& v = model.variables()[ref.index];
        out << "var " << print_domain(v.domain) << ": " << v.name << print_annotations(v.annotations);
        if (const auto* c = std::get_if<Binding::Constant>(&v.binding.value))
          out << " = " << print_term(c->value);
        else if (const auto* a = std::get_if<Binding::Alias>(&v.binding.value))
          out << " = " << print_term(a->target);
        out << ";\n";
        break;
      }
      case DeclRef::Kind::Array: {
        const auto& a = model.arrays()[ref.index];
        out << "array [" << a.index.lo << ".." << a.index.hi << "] of ";
        if (a.is_var) {
          out << "var " << print_domain(a.element_domain);
        } else {
          // Parameter arrays carry their base type in element_domain.
          out << to_string(a.element_domain.type());
        }
        out << ": " << a.name << print_annotations(a.annotations);
        if (!a.owns_elements) out << " = [" << join(a.elements) << "]";
        out << ";\n";
        break;
      }
    }
  }
  for (const auto& c : model.constraints())
    out << "constraint " << c.name << "(" << join(c.args) << ")" << print_annotations(c.annotations) << ";\n";
  const auto& g = model.goal();
  out << "solve" << print_annotations(g.annotations);
  switch (g.kind) {
    case SolveGoal::Kind::Satisfy: out << " satisfy"; break;
    case SolveGoal::Kind::Minimize: out << " minimize " << print_term(*g.objective); break;
    case SolveGoal::Kind::Maximize: out << " maximize " << print_term(*g.objective); break;
  }
  out << ";\n";
  return out.str();
}

Model parse_flatzinc(std::string_view text, std::string source_path) {
  return Parser(text, std::move(source_path)).run();
}

Model load_flatzinc(std::string_view text, std::string source_path) {
  return resolve_aliases(parse_flatzinc(text, std::move(source_path)));
}

Model load_flatzinc_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_flatzinc(buf.str(), path);
}

}  // namespace fzfeat
