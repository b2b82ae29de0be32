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

#include "fzfeat/xcsp.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <fmt/format.h>

#include "xcsp_globals_data.hpp"

namespace fzfeat {

namespace pt = boost::property_tree;

namespace {

using K = XcspError::Kind;

[[noreturn]] void fail(K kind, const std::string& msg) { throw XcspError(kind, msg); }

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> words(std::string_view s) {
  std::istringstream in{std::string(s)};
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::optional<std::int64_t> to_int(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::int64_t need_int(std::string_view s, const std::string& where) {
  auto v = to_int(s);
  if (!v) fail(K::Malformed, fmt::format("{}: expected an integer, got '{}'", where, s));
  return *v;
}

std::string attr(const pt::ptree& node, const std::string& key, const std::string& where) {
  auto v = node.get_optional<std::string>("<xmlattr>." + key);
  if (!v) fail(K::Malformed, fmt::format("{}: missing attribute '{}'", where, key));
  return *v;
}

std::string opt_attr(const pt::ptree& node, const std::string& key) {
  return node.get("<xmlattr>." + key, std::string{});
}

bool is_meta(const std::string& key) { return key == "<xmlattr>" || key == "<xmlcomment>"; }

// ---- functional expressions -------------------------------------------------

struct OpInfo {
  int arity;
  bool bool_args;
  bool bool_result;
};

const std::map<std::string, OpInfo>& op_table() {
  static const std::map<std::string, OpInfo> t{
      {"eq", {2, false, true}},   {"ne", {2, false, true}},   {"lt", {2, false, true}},
      {"le", {2, false, true}},   {"gt", {2, false, true}},   {"ge", {2, false, true}},
      {"add", {2, false, false}}, {"sub", {2, false, false}}, {"mul", {2, false, false}},
      {"div", {2, false, false}}, {"mod", {2, false, false}}, {"abs", {1, false, false}},
      {"min", {2, false, false}}, {"max", {2, false, false}}, {"neg", {1, false, false}},
      {"not", {1, true, true}},   {"and", {2, true, true}},   {"or", {2, true, true}},
      {"xor", {2, true, true}},   {"iff", {2, true, true}}};
  return t;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  XcspExpr parse() {
    XcspExpr e = expr();
    skip();
    if (i_ != s_.size()) fail(K::Malformed, fmt::format("functional expression: trailing input at offset {}", i_));
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }

  XcspExpr expr() {
    skip();
    if (i_ >= s_.size()) fail(K::Malformed, "functional expression: unexpected end");
    std::size_t start = i_;
    if (s_[i_] == '-' || s_[i_] == '+' || std::isdigit(static_cast<unsigned char>(s_[i_]))) {
      ++i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto v = to_int(s_.substr(start, i_ - start));
      if (!v) fail(K::Malformed, fmt::format("functional expression: bad integer at offset {}", start));
      return XcspExpr::integer(*v);
    }
    while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
    if (i_ == start) fail(K::Malformed, fmt::format("functional expression: unexpected '{}' at offset {}", s_[i_], i_));
    std::string name(s_.substr(start, i_ - start));
    skip();
    if (i_ < s_.size() && s_[i_] == '(') {
      ++i_;
      std::vector<XcspExpr> args;
      skip();
      if (i_ < s_.size() && s_[i_] == ')') {
        ++i_;
      } else {
        for (;;) {
          args.push_back(expr());
          skip();
          if (i_ < s_.size() && s_[i_] == ',') {
            ++i_;
            continue;
          }
          if (i_ < s_.size() && s_[i_] == ')') {
            ++i_;
            break;
          }
          fail(K::Malformed, fmt::format("functional expression: expected ',' or ')' at offset {}", i_));
        }
      }
      auto it = op_table().find(name);
      if (it == op_table().end()) fail(K::Unsupported, fmt::format("unsupported operator '{}'", name));
      if (static_cast<int>(args.size()) != it->second.arity)
        fail(K::Malformed, fmt::format("operator '{}' takes {} argument(s), got {}", name, it->second.arity, args.size()));
      return XcspExpr::call(name, std::move(args));
    }
    if (name == "true") return XcspExpr::boolean(true);
    if (name == "false") return XcspExpr::boolean(false);
    return XcspExpr::var(name);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

void check_names(const XcspExpr& e, const std::set<std::string>& allowed, const std::string& where) {
  if (e.kind == XcspExpr::Kind::Var && !allowed.count(e.name))
    fail(K::Invalid, fmt::format("{}: undeclared name '{}'", where, e.name));
  for (const auto& a : e.args) check_names(a, allowed, where);
}

// ---- global constraint parameters --------------------------------------------

std::vector<std::string> param_tokens(std::string_view s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(std::move(cur));
    cur.clear();
  };
  for (char c : s) {
    if (c == '[' || c == ']' || c == '{' || c == '}') {
      flush();
      out.emplace_back(1, c);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

class ParamReader {
 public:
  ParamReader(std::vector<std::string> toks, const std::set<std::string>& scope, std::string where)
      : t_(std::move(toks)), scope_(scope), where_(std::move(where)) {}

  bool done() const { return i_ >= t_.size(); }
  bool peek(const char* s) const { return i_ < t_.size() && t_[i_] == s; }
  void expect(const char* s) {
    if (!peek(s)) fail(K::Malformed, fmt::format("{}: expected '{}'", where_, s));
    ++i_;
  }
  XcspTerm term() {
    if (done()) fail(K::Malformed, where_ + ": unexpected end of parameters");
    const std::string& tok = t_[i_++];
    if (auto v = to_int(tok)) return XcspTerm{false, {}, *v};
    if (!scope_.count(tok)) fail(K::Invalid, fmt::format("{}: '{}' is not in the constraint scope", where_, tok));
    return XcspTerm{true, tok, 0};
  }
  std::optional<XcspTerm> term_or_nil() {
    if (peek("nil")) {
      ++i_;
      return std::nullopt;
    }
    return term();
  }
  std::int64_t integer() {
    XcspTerm x = term();
    if (x.is_var) fail(K::Malformed, fmt::format("{}: expected an integer, got '{}'", where_, x.var));
    return x.value;
  }
  void finish() {
    if (!done()) fail(K::Malformed, fmt::format("{}: unexpected '{}' in parameters", where_, t_[i_]));
  }

 private:
  std::vector<std::string> t_;
  const std::set<std::string>& scope_;
  std::string where_;
  std::size_t i_ = 0;
};

const std::set<std::string> kRelops{"eq", "ne", "lt", "le", "gt", "ge"};

XcspGlobal parse_global(const std::string& name, const XcspGlobalSpec& spec, const pt::ptree& node,
                        const std::vector<std::string>& scope_list, const std::string& where) {
  XcspGlobal g;
  g.name = name;
  g.form = spec.form;
  std::set<std::string> scope(scope_list.begin(), scope_list.end());
  auto params = node.get_child_optional("parameters");
  std::string text;
  std::string relop;
  if (params) {
    text = params->data();
    for (const auto& [key, child] : *params) {
      if (is_meta(key)) continue;
      if (!kRelops.count(key) || !relop.empty())
        fail(K::Malformed, fmt::format("{}: unexpected element <{}> in parameters", where, key));
      relop = key;
    }
  }
  ParamReader r(param_tokens(text), scope, where);
  if (g.form == "list") {
    if (!params) {
      for (const auto& v : scope_list) g.list.push_back(XcspTerm{true, v, 0});
      return g;
    }
    r.expect("[");
    while (!r.peek("]")) g.list.push_back(r.term());
    r.expect("]");
  } else if (g.form == "linear") {
    if (relop.empty()) fail(K::Malformed, where + ": weighted sum needs a relational operator element");
    g.relop = relop;
    r.expect("[");
    while (!r.peek("]")) {
      r.expect("{");
      g.coefficients.push_back(r.integer());
      XcspTerm x = r.term();
      g.list.push_back(x);
      r.expect("}");
    }
    r.expect("]");
    g.rhs = r.integer();
  } else if (g.form == "element") {
    g.index = r.term();
    r.expect("[");
    while (!r.peek("]")) g.list.push_back(r.term());
    r.expect("]");
    g.value = r.term();
  } else if (g.form == "cumulative") {
    r.expect("[");
    while (!r.peek("]")) {
      r.expect("{");
      XcspGlobal::Task t;
      auto o = r.term_or_nil();
      auto d = r.term_or_nil();
      t.end = r.term_or_nil();
      auto h = r.term_or_nil();
      if (!o || !d || !h) fail(K::Unsupported, where + ": cumulative tasks need origin, duration and height");
      t.origin = *o;
      t.duration = *d;
      t.height = *h;
      r.expect("}");
      g.tasks.push_back(std::move(t));
    }
    r.expect("]");
    g.rhs = r.integer();
  } else {
    fail(K::UnsupportedGlobal, fmt::format("{}: unknown form '{}' for global '{}'", where, g.form, name));
  }
  if (g.form != "linear" && !relop.empty()) fail(K::Malformed, fmt::format("{}: unexpected <{}>", where, relop));
  r.finish();
  return g;
}

std::vector<std::int64_t> parse_domain_values(std::string_view text, const std::string& where) {
  std::set<std::int64_t> vals;
  for (const auto& w : words(text)) {
    auto dots = w.find("..");
    if (dots == std::string::npos) {
      vals.insert(need_int(w, where));
      continue;
    }
    std::int64_t lo = need_int(std::string_view(w).substr(0, dots), where);
    std::int64_t hi = need_int(std::string_view(w).substr(dots + 2), where);
    if (hi >= lo && hi - lo > 10'000'000) fail(K::Unsupported, where + ": domain range too large");
    for (std::int64_t v = lo; v <= hi; ++v) vals.insert(v);
  }
  return {vals.begin(), vals.end()};
}

XcspRelation parse_relation(const pt::ptree& node) {
  XcspRelation r;
  r.name = attr(node, "name", "relation");
  const std::string where = "relation '" + r.name + "'";
  auto arity = to_int(attr(node, "arity", where));
  if (!arity || *arity < 0) fail(K::Malformed, where + ": bad arity");
  r.arity = static_cast<std::size_t>(*arity);
  const std::string sem = lower(attr(node, "semantics", where));
  if (sem == "soft" || !opt_attr(node, "defaultCost").empty())
    fail(K::Unsupported, where + ": weighted constraints are not supported");
  if (sem == "supports")
    r.supports = true;
  else if (sem == "conflicts")
    r.supports = false;
  else
    fail(K::Malformed, fmt::format("{}: unknown semantics '{}'", where, sem));
  const std::string body = node.data();
  if (body.find(':') != std::string::npos) fail(K::Unsupported, where + ": weighted tuples are not supported");
  if (body.find('*') != std::string::npos) fail(K::AbridgedTuples, where + ": abridged tuple notation is not supported");
  std::size_t start = 0;
  for (;;) {
    std::size_t bar = body.find('|', start);
    std::string piece = body.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    auto ws = words(piece);
    if (!ws.empty() || bar != std::string::npos) {
      if (ws.size() < r.arity && !ws.empty())
        fail(K::AbridgedTuples, fmt::format("{}: tuple {} has {} values for arity {}; abridged tuple notation is "
                                            "not supported",
                                            where, r.tuples.size() + 1, ws.size(), r.arity));
      if (ws.size() != r.arity)
        fail(K::Invalid, fmt::format("{}: tuple {} has {} values for arity {}", where, r.tuples.size() + 1,
                                     ws.size(), r.arity));
      std::vector<std::int64_t> t;
      for (const auto& w : ws) t.push_back(need_int(w, where));
      r.tuples.push_back(std::move(t));
    }
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  if (auto nb = opt_attr(node, "nbTuples"); !nb.empty() && need_int(nb, where) != static_cast<std::int64_t>(r.tuples.size()))
    fail(K::Malformed, fmt::format("{}: nbTuples={} but {} tuples listed", where, nb, r.tuples.size()));
  return r;
}

XcspPredicate parse_predicate(const pt::ptree& node) {
  XcspPredicate p;
  p.name = attr(node, "name", "predicate");
  const std::string where = "predicate '" + p.name + "'";
  auto ws = words(node.get("parameters", std::string{}));
  if (ws.size() % 2) fail(K::Malformed, where + ": parameters must be '<type> <name>' pairs");
  for (std::size_t i = 0; i < ws.size(); i += 2) {
    if (ws[i] != "int") fail(K::Unsupported, fmt::format("{}: parameter type '{}' is not supported", where, ws[i]));
    p.parameters.push_back(ws[i + 1]);
  }
  auto expr = node.get_child_optional("expression");
  if (!expr) fail(K::Malformed, where + ": missing <expression>");
  auto functional = expr->get_optional<std::string>("functional");
  if (!functional) fail(K::Unsupported, where + ": only functional expressions are supported");
  p.body = ExprParser(*functional).parse();
  check_names(p.body, std::set<std::string>(p.parameters.begin(), p.parameters.end()), where);
  return p;
}

template <class T>
const T* find_named(const std::vector<T>& v, std::string_view name) {
  for (const auto& x : v)
    if (x.name == name) return &x;
  return nullptr;
}

// ---- evaluation --------------------------------------------------------------

// Integer value or undefined (division by zero). Undefinedness turns the
// nearest enclosing comparison false.
struct Val {
  std::int64_t v = 0;
  bool undef = false;
};

Val eval(const XcspExpr& e, const std::unordered_map<std::string, std::int64_t>& env) {
  switch (e.kind) {
    case XcspExpr::Kind::Int:
    case XcspExpr::Kind::Bool:
      return {e.value, false};
    case XcspExpr::Kind::Var:
      return {env.at(e.name), false};
    case XcspExpr::Kind::Call:
      break;
  }
  const std::string& op = e.name;
  Val a = eval(e.args[0], env);
  if (op == "abs") return a.undef ? a : Val{a.v < 0 ? -a.v : a.v};
  if (op == "neg") return a.undef ? a : Val{-a.v};
  if (op == "not") return {a.v == 0};
  Val b = eval(e.args[1], env);
  if (op == "and") return {a.v != 0 && b.v != 0};
  if (op == "or") return {a.v != 0 || b.v != 0};
  if (op == "xor") return {(a.v != 0) != (b.v != 0)};
  if (op == "iff") return {(a.v != 0) == (b.v != 0)};
  if (a.undef || b.undef) {
    if (kRelops.count(op)) return {0};
    return {0, true};
  }
  if (op == "eq") return {a.v == b.v};
  if (op == "ne") return {a.v != b.v};
  if (op == "lt") return {a.v < b.v};
  if (op == "le") return {a.v <= b.v};
  if (op == "gt") return {a.v > b.v};
  if (op == "ge") return {a.v >= b.v};
  if (op == "add") return {a.v + b.v};
  if (op == "sub") return {a.v - b.v};
  if (op == "mul") return {a.v * b.v};
  if (op == "div") return b.v == 0 ? Val{0, true} : Val{a.v / b.v};
  if (op == "mod") return b.v == 0 ? Val{0, true} : Val{a.v % b.v};
  if (op == "min") return {std::min(a.v, b.v)};
  if (op == "max") return {std::max(a.v, b.v)};
  throw Error("unknown operator " + op);
}

bool relop_holds(const std::string& op, std::int64_t a, std::int64_t b) {
  if (op == "eq") return a == b;
  if (op == "ne") return a != b;
  if (op == "lt") return a < b;
  if (op == "le") return a <= b;
  if (op == "gt") return a > b;
  return a >= b;
}

bool cumulative_holds(const std::vector<std::int64_t>& o, const std::vector<std::int64_t>& d,
                      const std::vector<std::int64_t>& h, std::int64_t limit) {
  for (std::size_t i = 0; i < o.size(); ++i)
    if (d[i] < 0 || h[i] < 0) return false;
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (d[i] == 0 || h[i] == 0) continue;
    // The load peaks at some task's start time.
    std::int64_t load = 0;
    for (std::size_t j = 0; j < o.size(); ++j)
      if (d[j] > 0 && o[j] <= o[i] && o[i] < o[j] + d[j]) load += h[j];
    if (load > limit) return false;
  }
  return true;
}

bool global_holds(const XcspGlobal& g, const std::unordered_map<std::string, std::int64_t>& env) {
  auto val = [&](const XcspTerm& t) { return t.is_var ? env.at(t.var) : t.value; };
  std::vector<std::int64_t> xs;
  for (const auto& t : g.list) xs.push_back(val(t));
  if (g.form == "list") {
    const std::string& mzn = xcsp_global_table().at(g.name).minizinc;
    if (mzn == "alldifferent") {
      std::sort(xs.begin(), xs.end());
      return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
    }
    if (mzn == "all_equal") return std::adjacent_find(xs.begin(), xs.end(), std::not_equal_to<>{}) == xs.end();
    if (mzn == "increasing") return std::is_sorted(xs.begin(), xs.end());
    if (mzn == "decreasing") return std::is_sorted(xs.rbegin(), xs.rend());
    throw Error("no evaluator for list global '" + mzn + "'");
  }
  if (g.form == "linear") {
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) sum += g.coefficients[i] * xs[i];
    return relop_holds(g.relop, sum, g.rhs);
  }
  if (g.form == "element") {
    std::int64_t i = val(g.index);
    if (i < 1 || i > static_cast<std::int64_t>(xs.size())) return false;
    return xs[static_cast<std::size_t>(i - 1)] == val(g.value);
  }
  std::vector<std::int64_t> o, d, h;
  for (const auto& t : g.tasks) {
    o.push_back(val(t.origin));
    d.push_back(val(t.duration));
    h.push_back(val(t.height));
    if (t.end && val(*t.end) != o.back() + d.back()) return false;
  }
  return cumulative_holds(o, d, h, g.rhs);
}

// ---- MiniZinc output ---------------------------------------------------------

const std::set<std::string>& mzn_keywords() {
  static const std::set<std::string> k{
      "ann",      "annotation", "any",     "array",  "bool",      "case",     "constraint", "default", "diff",
      "div",      "else",       "elseif",  "endif",  "enum",      "false",    "float",      "function", "if",
      "in",       "include",    "int",     "intersect", "let",    "list",     "maximize",   "minimize", "mod",
      "not",      "of",         "op",      "opt",    "output",    "par",      "predicate",  "record",  "satisfy",
      "set",      "solve",      "string",  "subset", "superset",  "symdiff",  "test",       "then",    "true",
      "tuple",    "type",       "union",   "var",    "where",     "xor",      "abs",        "min",     "max",
      "sum",      "table",      "alldifferent", "cumulative", "bool2int", "forall", "exists"};
  return k;
}

bool valid_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return !mzn_keywords().count(s);
}

std::string literal(std::int64_t v) { return std::to_string(v); }

struct Emitter {
  const std::unordered_map<std::string, std::string>& names;

  std::string term(const XcspTerm& t) const { return t.is_var ? names.at(t.var) : literal(t.value); }

  // Returns (text, is_bool) with `subst` mapping formals to actual text.
  std::pair<std::string, bool> expr(const XcspExpr& e,
                                    const std::unordered_map<std::string, std::pair<std::string, bool>>& subst) const {
    switch (e.kind) {
      case XcspExpr::Kind::Int:
        return {literal(e.value), false};
      case XcspExpr::Kind::Bool:
        return {e.value ? "true" : "false", true};
      case XcspExpr::Kind::Var:
        return subst.at(e.name);
      case XcspExpr::Kind::Call:
        break;
    }
    const OpInfo& info = op_table().at(e.name);
    std::vector<std::string> a;
    std::vector<bool> ab;
    for (const auto& x : e.args) {
      auto [s, b] = expr(x, subst);
      a.push_back(s);
      ab.push_back(b);
    }
    const std::string& op = e.name;
    if (info.bool_result && !info.bool_args && (op == "eq" || op == "ne") && ab[0] && ab[1])
      return {fmt::format("({} {} {})", a[0], op == "eq" ? "=" : "!=", a[1]), true};
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (info.bool_args && !ab[i]) a[i] = fmt::format("({} != 0)", a[i]);
      if (!info.bool_args && ab[i]) a[i] = fmt::format("bool2int({})", a[i]);
    }
    static const std::map<std::string, std::string> infix{
        {"eq", "="},    {"ne", "!="},    {"lt", "<"},     {"le", "<="},   {"gt", ">"},   {"ge", ">="},
        {"add", "+"},   {"sub", "-"},    {"mul", "*"},    {"div", "div"}, {"mod", "mod"}, {"and", "/\\"},
        {"or", "\\/"},  {"xor", "xor"},  {"iff", "<->"}};
    if (auto it = infix.find(op); it != infix.end())
      return {fmt::format("({} {} {})", a[0], it->second, a[1]), info.bool_result};
    if (op == "not") return {fmt::format("(not {})", a[0]), true};
    if (op == "neg") return {fmt::format("(-{})", a[0]), false};
    if (op == "abs") return {fmt::format("abs({})", a[0]), false};
    return {fmt::format("{}({}, {})", op, a[0], a[1]), false};
  }
};

std::string join_terms(const std::vector<std::string>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s;
}

}  // namespace

const std::vector<std::string>& xcsp_operators() {
  static const std::vector<std::string> ops = [] {
    std::vector<std::string> v;
    for (const auto& [k, _] : op_table()) v.push_back(k);
    return v;
  }();
  return ops;
}

XcspExpr parse_xcsp_expression(std::string_view text) { return ExprParser(text).parse(); }

std::map<std::string, XcspGlobalSpec> parse_xcsp_global_table(std::string_view text) {
  std::map<std::string, XcspGlobalSpec> t;
  static const std::set<std::string> forms{"list", "linear", "element", "cumulative"};
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto ws = words(line);
    if (ws.empty()) continue;
    if (ws.size() != 4) throw Error(fmt::format("xcsp global table line {}: expected 4 fields", lineno));
    if (!forms.count(ws[1])) throw Error(fmt::format("xcsp global table line {}: unknown form '{}'", lineno, ws[1]));
    t[lower(ws[0])] = XcspGlobalSpec{ws[1], ws[2] == "-" ? "" : ws[2], ws[3] == "-" ? "" : ws[3]};
  }
  return t;
}

const std::map<std::string, XcspGlobalSpec>& xcsp_global_table() {
  static const auto t = parse_xcsp_global_table(kBuiltinXcspGlobals);
  return t;
}

const XcspDomain* XcspInstance::find_domain(std::string_view n) const { return find_named(domains, n); }
const XcspRelation* XcspInstance::find_relation(std::string_view n) const { return find_named(relations, n); }
const XcspPredicate* XcspInstance::find_predicate(std::string_view n) const { return find_named(predicates, n); }

XcspInstance parse_xcsp(std::string_view xml) {
  pt::ptree doc;
  try {
    std::istringstream in{std::string(xml)};
    pt::read_xml(in, doc);
  } catch (const pt::xml_parser_error& e) {
    fail(K::Malformed, fmt::format("malformed XML: {} (line {})", e.message(), e.line()));
  }
  auto root = doc.get_child_optional("instance");
  if (!root) fail(K::Malformed, "missing <instance> root element");
  XcspInstance inst;
  static const std::set<std::string> sections{"presentation", "domains", "variables", "relations", "predicates",
                                               "constraints"};
  for (const auto& [key, _] : *root) {
    if (is_meta(key)) continue;
    if (!sections.count(key)) fail(K::Unsupported, fmt::format("unsupported XCSP extension <{}>", key));
  }

  auto pres = root->get_child_optional("presentation");
  if (!pres) fail(K::Malformed, "missing <presentation>");
  if (auto fmt_attr = opt_attr(*pres, "format"); fmt_attr != "XCSP 2.1")
    fail(K::Unsupported, fmt::format("unsupported format '{}', expected 'XCSP 2.1'", fmt_attr));
  if (auto type = lower(opt_attr(*pres, "type")); type == "wcsp" || type == "qcsp" || type == "qcsp+")
    fail(K::Unsupported, fmt::format("unsupported XCSP extension: instance type '{}'", opt_attr(*pres, "type")));
  inst.name = opt_attr(*pres, "name");

  auto section = [&](const char* name) -> const pt::ptree& {
    auto s = root->get_child_optional(name);
    if (!s) fail(K::Malformed, fmt::format("missing <{}>", name));
    return *s;
  };
  auto children = [](const pt::ptree& s, const char* tag) {
    std::vector<const pt::ptree*> out;
    for (const auto& [key, child] : s) {
      if (is_meta(key)) continue;
      if (key != tag) fail(K::Malformed, fmt::format("unexpected element <{}>, expected <{}>", key, tag));
      out.push_back(&child);
    }
    return out;
  };
  auto check_count = [](const pt::ptree& s, const char* attr_name, std::size_t n, const char* what) {
    if (auto nb = opt_attr(s, attr_name); !nb.empty() && need_int(nb, what) != static_cast<std::int64_t>(n))
      fail(K::Malformed, fmt::format("{}={} but {} {} listed", attr_name, nb, n, what));
  };

  const auto& doms = section("domains");
  for (const auto* d : children(doms, "domain")) {
    XcspDomain dom;
    dom.name = attr(*d, "name", "domain");
    if (inst.find_domain(dom.name)) fail(K::Invalid, "duplicate domain '" + dom.name + "'");
    dom.values = parse_domain_values(d->data(), "domain '" + dom.name + "'");
    if (auto nb = opt_attr(*d, "nbValues"); !nb.empty() && need_int(nb, "domain") != static_cast<std::int64_t>(dom.values.size()))
      fail(K::Malformed, fmt::format("domain '{}': nbValues={} but {} values", dom.name, nb, dom.values.size()));
    inst.domains.push_back(std::move(dom));
  }
  check_count(doms, "nbDomains", inst.domains.size(), "domains");

  std::set<std::string> declared;
  const auto& vars = section("variables");
  for (const auto* v : children(vars, "variable")) {
    XcspVariable var{attr(*v, "name", "variable"), attr(*v, "domain", "variable")};
    if (!declared.insert(var.name).second) fail(K::Invalid, "duplicate variable '" + var.name + "'");
    if (!inst.find_domain(var.domain))
      fail(K::Invalid, fmt::format("variable '{}': undeclared domain '{}'", var.name, var.domain));
    inst.variables.push_back(std::move(var));
  }
  check_count(vars, "nbVariables", inst.variables.size(), "variables");

  if (auto rels = root->get_child_optional("relations")) {
    for (const auto* r : children(*rels, "relation")) {
      auto rel = parse_relation(*r);
      if (inst.find_relation(rel.name)) fail(K::Invalid, "duplicate relation '" + rel.name + "'");
      inst.relations.push_back(std::move(rel));
    }
    check_count(*rels, "nbRelations", inst.relations.size(), "relations");
  }
  if (auto preds = root->get_child_optional("predicates")) {
    for (const auto* p : children(*preds, "predicate")) {
      auto pred = parse_predicate(*p);
      if (inst.find_predicate(pred.name)) fail(K::Invalid, "duplicate predicate '" + pred.name + "'");
      inst.predicates.push_back(std::move(pred));
    }
    check_count(*preds, "nbPredicates", inst.predicates.size(), "predicates");
  }

  const auto& cons = section("constraints");
  if (!opt_attr(cons, "maximalCost").empty() || !opt_attr(cons, "initialCost").empty())
    fail(K::Unsupported, "unsupported XCSP extension: weighted constraints");
  std::set<std::string> unsupported_globals;
  for (const auto* c : children(cons, "constraint")) {
    XcspConstraint con;
    con.name = attr(*c, "name", "constraint");
    const std::string where = "constraint '" + con.name + "'";
    con.scope = words(attr(*c, "scope", where));
    con.reference = attr(*c, "reference", where);
    if (auto ar = opt_attr(*c, "arity"); !ar.empty() && need_int(ar, where) != static_cast<std::int64_t>(con.scope.size()))
      fail(K::Invalid, fmt::format("{}: arity {} but scope has {} variables", where, ar, con.scope.size()));
    for (const auto& v : con.scope)
      if (!declared.count(v)) fail(K::Invalid, fmt::format("{}: undeclared variable '{}' in scope", where, v));
    std::set<std::string> scope(con.scope.begin(), con.scope.end());

    if (con.reference.rfind("global:", 0) == 0) {
      std::string gname = lower(con.reference.substr(7));
      auto it = xcsp_global_table().find(gname);
      if (it == xcsp_global_table().end()) {
        unsupported_globals.insert(con.reference.substr(7));
        continue;
      }
      con.global = parse_global(gname, it->second, *c, con.scope, where);
    } else if (const auto* rel = inst.find_relation(con.reference)) {
      if (rel->arity != con.scope.size())
        fail(K::Invalid, fmt::format("{}: relation '{}' has arity {} but scope has {} variables", where, rel->name,
                                     rel->arity, con.scope.size()));
    } else if (const auto* pred = inst.find_predicate(con.reference)) {
      auto ws = words(c->get("parameters", std::string{}));
      if (ws.size() != pred->parameters.size())
        fail(K::Invalid, fmt::format("{}: predicate '{}' takes {} arguments, got {}", where, pred->name,
                                     pred->parameters.size(), ws.size()));
      for (const auto& w : ws) {
        if (auto v = to_int(w)) {
          con.arguments.push_back(XcspExpr::integer(*v));
        } else {
          if (!scope.count(w)) fail(K::Invalid, fmt::format("{}: argument '{}' is not in the scope", where, w));
          con.arguments.push_back(XcspExpr::var(w));
        }
      }
    } else {
      fail(K::Invalid, fmt::format("{}: undefined reference '{}'", where, con.reference));
    }
    inst.constraints.push_back(std::move(con));
  }
  if (!unsupported_globals.empty()) {
    std::string list;
    for (const auto& g : unsupported_globals) list += (list.empty() ? "" : ", ") + g;
    fail(K::UnsupportedGlobal, "unsupported global constraint(s): " + list);
  }
  check_count(cons, "nbConstraints", inst.constraints.size(), "constraints");
  return inst;
}

XcspInstance load_xcsp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_xcsp(buf.str());
}

std::vector<std::string> minizinc_names(const XcspInstance& inst) {
  std::vector<std::string> out(inst.variables.size());
  std::set<std::string> used;
  for (std::size_t i = 0; i < inst.variables.size(); ++i)
    if (valid_identifier(inst.variables[i].name)) {
      out[i] = inst.variables[i].name;
      used.insert(out[i]);
    }
  for (std::size_t i = 0; i < inst.variables.size(); ++i) {
    if (!out[i].empty()) continue;
    std::string base = "x_";
    for (char c : inst.variables[i].name) base += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    std::string cand = base;
    for (int k = 1; used.count(cand); ++k) cand = base + "_" + std::to_string(k);
    out[i] = cand;
    used.insert(cand);
  }
  return out;
}

std::string translate_to_minizinc(const XcspInstance& inst) {
  const auto mzn = minizinc_names(inst);
  std::unordered_map<std::string, std::string> names;
  for (std::size_t i = 0; i < inst.variables.size(); ++i) names[inst.variables[i].name] = mzn[i];
  Emitter em{names};

  std::set<std::string> includes;
  std::vector<std::string> body;
  for (const auto& c : inst.constraints) {
    std::vector<std::string> scope;
    for (const auto& v : c.scope) scope.push_back(names.at(v));
    if (c.global) {
      const XcspGlobal& g = *c.global;
      const XcspGlobalSpec& spec = xcsp_global_table().at(g.name);
      if (!spec.include.empty()) includes.insert(spec.include);
      std::vector<std::string> xs;
      for (const auto& t : g.list) xs.push_back(em.term(t));
      if (g.form == "list") {
        body.push_back(fmt::format("constraint {}([{}]);", spec.minizinc, join_terms(xs)));
      } else if (g.form == "linear") {
        static const std::map<std::string, std::string> rel{{"eq", "="}, {"ne", "!="}, {"lt", "<"},
                                                            {"le", "<="}, {"gt", ">"},  {"ge", ">="}};
        std::string lhs;
        for (std::size_t i = 0; i < xs.size(); ++i)
          lhs += fmt::format("{}{} * {}", i ? " + " : "", literal(g.coefficients[i]), xs[i]);
        if (lhs.empty()) lhs = "0";
        body.push_back(fmt::format("constraint {} {} {};", lhs, rel.at(g.relop), literal(g.rhs)));
      } else if (g.form == "element") {
        body.push_back(fmt::format("constraint [{}][{}] = {};", join_terms(xs), em.term(g.index), em.term(g.value)));
      } else {
        std::vector<std::string> o, d, h;
        for (const auto& t : g.tasks) {
          o.push_back(em.term(t.origin));
          d.push_back(em.term(t.duration));
          h.push_back(em.term(t.height));
        }
        body.push_back(fmt::format("constraint {}([{}], [{}], [{}], {});", spec.minizinc, join_terms(o), join_terms(d),
                                   join_terms(h), literal(g.rhs)));
        for (const auto& t : g.tasks)
          if (t.end)
            body.push_back(fmt::format("constraint {} = {} + {};", em.term(*t.end), em.term(t.origin),
                                       em.term(t.duration)));
      }
    } else if (const auto* rel = inst.find_relation(c.reference)) {
      if (rel->supports) {
        if (rel->tuples.empty()) {
          body.push_back("constraint false;");
          continue;
        }
        includes.insert("table.mzn");
        std::string rows;
        for (const auto& t : rel->tuples) {
          std::vector<std::string> vs;
          for (auto v : t) vs.push_back(literal(v));
          rows += " " + join_terms(vs) + " |";
        }
        body.push_back(fmt::format("constraint table([{}], [|{}]);", join_terms(scope), rows));
      } else {
        std::vector<std::string> clauses;
        for (const auto& t : rel->tuples) {
          std::string clause;
          for (std::size_t i = 0; i < t.size(); ++i)
            clause += fmt::format("{}{} != {}", i ? " \\/ " : "", scope[i], literal(t[i]));
          if (t.empty()) clause = "false";
          clauses.push_back(clause);
        }
        if (clauses.empty()) {
          body.push_back("constraint true;");
        } else if (clauses.size() == 1) {
          body.push_back("constraint " + clauses[0] + ";");
        } else {
          std::string s;
          for (std::size_t i = 0; i < clauses.size(); ++i) s += fmt::format("{}({})", i ? " /\\ " : "", clauses[i]);
          body.push_back("constraint " + s + ";");
        }
      }
    } else {
      const auto* pred = inst.find_predicate(c.reference);
      std::unordered_map<std::string, std::pair<std::string, bool>> subst;
      for (std::size_t i = 0; i < pred->parameters.size(); ++i) {
        const XcspExpr& a = c.arguments[i];
        subst[pred->parameters[i]] = {a.kind == XcspExpr::Kind::Var ? names.at(a.name) : literal(a.value), false};
      }
      auto [text, is_bool] = em.expr(pred->body, subst);
      body.push_back("constraint " + (is_bool ? text : "(" + text + " != 0)") + ";");
    }
  }

  std::string out = "% XCSP 2.1 instance";
  if (!inst.name.empty()) out += ": " + inst.name;
  out += "\n";
  for (const auto& inc : includes) out += "include \"" + inc + "\";\n";
  if (!includes.empty()) out += "\n";
  for (std::size_t i = 0; i < inst.variables.size(); ++i) {
    const auto& vals = inst.find_domain(inst.variables[i].domain)->values;
    std::string dom;
    if (vals.empty())
      dom = "1..0";
    else if (vals.back() - vals.front() + 1 == static_cast<std::int64_t>(vals.size()))
      dom = fmt::format("{}..{}", vals.front(), vals.back());
    else {
      std::vector<std::string> vs;
      for (auto v : vals) vs.push_back(literal(v));
      dom = "{" + join_terms(vs) + "}";
    }
    out += fmt::format("var {}: {};\n", dom, mzn[i]);
  }
  if (!body.empty()) out += "\n";
  for (const auto& b : body) out += b + "\n";
  out += "\nsolve satisfy;\n";
  return out;
}

std::vector<std::vector<std::int64_t>> enumerate_solutions(const XcspInstance& inst, std::size_t limit) {
  const std::size_t n = inst.variables.size();
  std::vector<const std::vector<std::int64_t>*> doms;
  for (const auto& v : inst.variables) {
    doms.push_back(&inst.find_domain(v.domain)->values);
    if (doms.back()->empty()) return {};
  }
  std::vector<std::size_t> at(n, 0);
  std::unordered_map<std::string, std::int64_t> env;
  std::vector<std::vector<std::int64_t>> out;
  for (;;) {
    std::vector<std::int64_t> assignment(n);
    for (std::size_t i = 0; i < n; ++i) {
      assignment[i] = (*doms[i])[at[i]];
      env[inst.variables[i].name] = assignment[i];
    }
    bool ok = true;
    for (const auto& c : inst.constraints) {
      if (c.global) {
        ok = global_holds(*c.global, env);
      } else if (const auto* rel = inst.find_relation(c.reference)) {
        std::vector<std::int64_t> t;
        for (const auto& v : c.scope) t.push_back(env.at(v));
        bool listed = std::find(rel->tuples.begin(), rel->tuples.end(), t) != rel->tuples.end();
        ok = listed == rel->supports;
      } else {
        const auto* pred = inst.find_predicate(c.reference);
        std::unordered_map<std::string, std::int64_t> local;
        for (std::size_t i = 0; i < pred->parameters.size(); ++i) {
          const XcspExpr& a = c.arguments[i];
          local[pred->parameters[i]] = a.kind == XcspExpr::Kind::Var ? env.at(a.name) : a.value;
        }
        Val r = eval(pred->body, local);
        ok = !r.undef && r.v != 0;
      }
      if (!ok) break;
    }
    if (ok) {
      out.push_back(std::move(assignment));
      if (out.size() >= limit) return out;
    }
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++at[k] < doms[k]->size()) break;
      at[k] = 0;
      if (k == 0) return out;
    }
    if (n == 0) return out;
  }
}

}  // namespace fzfeat
