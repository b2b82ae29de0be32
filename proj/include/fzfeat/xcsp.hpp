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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fzfeat/model.hpp"

namespace fzfeat {

class XcspError : public Error {
 public:
  enum class Kind { Malformed, Unsupported, AbridgedTuples, Invalid, UnsupportedGlobal };
  XcspError(Kind kind, const std::string& message) : Error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct XcspDomain {
  std::string name;
  std::vector<std::int64_t> values;  // sorted, distinct
};

struct XcspVariable {
  std::string name;
  std::string domain;
};

struct XcspRelation {
  std::string name;
  std::size_t arity = 0;
  bool supports = true;  // false: conflicts
  std::vector<std::vector<std::int64_t>> tuples;
};

// Functional expression of a predicate body or a constraint argument.
struct XcspExpr {
  enum class Kind { Int, Bool, Var, Call };
  Kind kind = Kind::Int;
  std::int64_t value = 0;
  std::string name;  // Var: parameter or variable name; Call: operator
  std::vector<XcspExpr> args;

  static XcspExpr integer(std::int64_t v) { return {Kind::Int, v, {}, {}}; }
  static XcspExpr boolean(bool b) { return {Kind::Bool, b ? 1 : 0, {}, {}}; }
  static XcspExpr var(std::string n) { return {Kind::Var, 0, std::move(n), {}}; }
  static XcspExpr call(std::string op, std::vector<XcspExpr> a) { return {Kind::Call, 0, std::move(op), std::move(a)}; }
  bool operator==(const XcspExpr&) const = default;
};

XcspExpr parse_xcsp_expression(std::string_view text);
const std::vector<std::string>& xcsp_operators();

struct XcspPredicate {
  std::string name;
  std::vector<std::string> parameters;  // formal names, all of type int
  XcspExpr body;
};

// One argument slot of a global constraint: a variable or an integer.
struct XcspTerm {
  bool is_var = false;
  std::string var;
  std::int64_t value = 0;
  bool operator==(const XcspTerm&) const = default;
};

struct XcspGlobal {
  std::string name;  // lower-cased XCSP name without the "global:" prefix
  std::string form;  // list, linear, element, cumulative
  std::vector<XcspTerm> list;                  // list / element table
  std::vector<std::int64_t> coefficients;      // linear
  std::string relop;                           // linear: eq ne lt le gt ge
  std::int64_t rhs = 0;                        // linear rhs, cumulative limit
  XcspTerm index, value;                       // element
  struct Task {
    XcspTerm origin, duration, height;
    std::optional<XcspTerm> end;
  };
  std::vector<Task> tasks;                     // cumulative
};

struct XcspConstraint {
  std::string name;
  std::vector<std::string> scope;
  std::string reference;
  std::vector<XcspExpr> arguments;  // predicate actuals
  std::optional<XcspGlobal> global;
};

struct XcspInstance {
  std::string name;
  std::vector<XcspDomain> domains;
  std::vector<XcspVariable> variables;
  std::vector<XcspRelation> relations;
  std::vector<XcspPredicate> predicates;
  std::vector<XcspConstraint> constraints;

  const XcspDomain* find_domain(std::string_view name) const;
  const XcspRelation* find_relation(std::string_view name) const;
  const XcspPredicate* find_predicate(std::string_view name) const;
};

// Supported global constraints: XCSP name -> (form, MiniZinc predicate,
// MiniZinc include). Loaded from config/xcsp_globals.txt.
struct XcspGlobalSpec {
  std::string form;
  std::string minizinc;
  std::string include;
};
const std::map<std::string, XcspGlobalSpec>& xcsp_global_table();
std::map<std::string, XcspGlobalSpec> parse_xcsp_global_table(std::string_view text);

// Throws XcspError: Malformed (XML or structure), Unsupported (weighted,
// quantified or unknown extensions), AbridgedTuples, Invalid (undeclared
// names, arity mismatches), UnsupportedGlobal.
XcspInstance parse_xcsp(std::string_view xml);
XcspInstance load_xcsp_file(const std::string& path);

// MiniZinc text: one declaration per variable, `table` for supports,
// conjunctions of disequality disjunctions for conflicts, predicates as
// boolean expressions, and `solve satisfy`.
std::string translate_to_minizinc(const XcspInstance& inst);

// MiniZinc identifier used for each XCSP variable, in declaration order.
std::vector<std::string> minizinc_names(const XcspInstance& inst);

// Brute force over the Cartesian product of the domains. Each solution
// lists values in variable declaration order. Stops after `limit`.
std::vector<std::vector<std::int64_t>> enumerate_solutions(const XcspInstance& inst, std::size_t limit = 1000000);

}  // namespace fzfeat
