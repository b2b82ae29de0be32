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
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

namespace fzfeat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised for semantic problems in a model: duplicate or undefined names,
// type mismatches, alias cycles.
class ModelError : public Error {
 public:
  using Error::Error;
};

class AliasCycleError : public ModelError {
 public:
  explicit AliasCycleError(std::vector<std::string> cycle);
  const std::vector<std::string>& cycle() const { return cycle_; }

 private:
  std::vector<std::string> cycle_;
};

// Domain size used for `var int`, `var float` and `var set of int` without
// bounds. Any finite value keeps log-products finite.
inline constexpr double kUnboundedDomainSize = 4294967296.0;  // 2^32

enum class VarType { Bool, Int, Float, Set };

std::string_view to_string(VarType t);

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool operator==(const IntRange&) const = default;
};

// Sorted, deduplicated.
struct IntSet {
  std::vector<std::int64_t> values;
  bool operator==(const IntSet&) const = default;
};

struct FloatRange {
  double lo = 0;
  double hi = 0;
  bool operator==(const FloatRange&) const = default;
};

class Domain {
 public:
  enum class Kind { Bool, IntRange, IntSet, FloatRange, SetOfInt, UnboundedInt, UnboundedFloat };

  static Domain boolean();
  static Domain unbounded_int();
  static Domain unbounded_float();
  static Domain int_range(std::int64_t lo, std::int64_t hi);
  // Throws ModelError on an empty list; duplicates are removed.
  static Domain int_set(std::vector<std::int64_t> values);
  static Domain float_range(double lo, double hi);
  static Domain set_of_range(std::int64_t lo, std::int64_t hi);
  static Domain set_of_values(std::vector<std::int64_t> values);
  static Domain set_of_int();

  Kind kind() const;
  VarType type() const { return type_; }

  // bool: 2; int range: hi-lo+1; int set: cardinality; set of S: 2^|S|;
  // float range: hi-lo; unbounded: `unbounded`.
  double size(double unbounded = kUnboundedDomainSize) const;

  // Bounds of int ranges and set universes given as ranges.
  const IntRange* range() const { return std::get_if<IntRange>(&bounds_); }
  const IntSet* values() const { return std::get_if<IntSet>(&bounds_); }
  const FloatRange* float_bounds() const { return std::get_if<FloatRange>(&bounds_); }

  bool operator==(const Domain&) const = default;

 private:
  Domain(VarType t, std::variant<std::monostate, IntRange, IntSet, FloatRange> b)
      : type_(t), bounds_(std::move(b)) {}

  VarType type_ = VarType::Bool;
  std::variant<std::monostate, IntRange, IntSet, FloatRange> bounds_;
};

// A FlatZinc expression: literal, identifier, array access, array literal or
// annotation call.
struct Term {
  struct Ident {
    std::string name;
    bool operator==(const Ident&) const = default;
  };
  struct Access {
    std::string array;
    std::int64_t index = 0;
    bool operator==(const Access&) const = default;
  };
  struct Array {
    std::vector<Term> items;
    bool operator==(const Array&) const = default;
  };
  struct Call {
    std::string name;
    std::vector<Term> args;
    bool operator==(const Call&) const = default;
  };
  struct String {
    std::string text;
    bool operator==(const String&) const = default;
  };

  using Value = std::variant<bool, std::int64_t, double, IntRange, IntSet, String, Ident, Access,
                             Array, Call>;
  Value value;

  static Term boolean(bool b) { return Term{b}; }
  static Term integer(std::int64_t v) { return Term{v}; }
  static Term real(double v) { return Term{v}; }
  static Term ident(std::string name) { return Term{Ident{std::move(name)}}; }
  static Term access(std::string array, std::int64_t index) {
    return Term{Access{std::move(array), index}};
  }
  static Term array(std::vector<Term> items) { return Term{Array{std::move(items)}}; }
  static Term call(std::string name, std::vector<Term> args) {
    return Term{Call{std::move(name), std::move(args)}};
  }

  template <class T>
  const T* as() const {
    return std::get_if<T>(&value);
  }
  template <class T>
  bool is() const {
    return std::holds_alternative<T>(value);
  }

  // Name of an identifier or of an annotation call; empty otherwise.
  std::string_view head() const;

  bool operator==(const Term&) const = default;
};

struct Binding {
  struct Free {
    bool operator==(const Free&) const = default;
  };
  struct Constant {
    Term value;
    bool operator==(const Constant&) const = default;
  };
  // Target is an identifier or an array access.
  struct Alias {
    Term target;
    bool operator==(const Alias&) const = default;
  };
  std::variant<Free, Constant, Alias> value;

  bool is_free() const { return std::holds_alternative<Free>(value); }
  bool is_constant() const { return std::holds_alternative<Constant>(value); }
  bool is_alias() const { return std::holds_alternative<Alias>(value); }

  bool operator==(const Binding&) const = default;
};

struct Variable {
  std::string name;
  Domain domain = Domain::boolean();
  Binding binding;
  std::vector<Term> annotations;
  bool is_introduced = false;
  bool is_defined = false;
  bool is_labeled = false;
  // Set for the element variables of a `var` array declared without an
  // initializer; such variables are printed through their array.
  std::optional<std::string> owner;

  bool operator==(const Variable&) const = default;
};

struct Parameter {
  std::string name;
  VarType type = VarType::Int;
  Term value;
  bool operator==(const Parameter&) const = default;
};

struct ArrayDecl {
  std::string name;
  bool is_var = false;
  // Element domain for `var` arrays (bounds printed in the declaration).
  Domain element_domain = Domain::unbounded_int();
  IntRange index{1, 0};
  std::vector<Term> elements;
  std::vector<Term> annotations;
  // True when the declaration had no initializer and created its elements.
  bool owns_elements = false;

  std::int64_t size() const { return index.hi - index.lo + 1; }
  bool operator==(const ArrayDecl&) const = default;
};

struct PredicateDecl {
  std::string name;
  std::string signature;  // parameter list as written, normalized spacing
  bool operator==(const PredicateDecl&) const = default;
};

struct Constraint {
  std::string name;
  std::vector<Term> args;
  std::vector<Term> annotations;
  bool operator==(const Constraint&) const = default;
};

struct SolveGoal {
  enum class Kind { Satisfy, Minimize, Maximize };
  Kind kind = Kind::Satisfy;
  std::optional<Term> objective;
  std::vector<Term> annotations;
  bool operator==(const SolveGoal&) const = default;
};

// A search annotation with nested `seq_search` lists flattened.
struct SearchAnnotation {
  std::string type;  // bool_search, int_search, set_search, float_search, ...
  std::vector<Term> variables;
  std::string variable_choice;
  std::string value_choice;
  std::string strategy;
};

std::vector<SearchAnnotation> search_annotations(const SolveGoal& goal);

// Declaration kinds in source order, for printing.
struct DeclRef {
  enum class Kind { Parameter, Variable, Array };
  Kind kind;
  std::size_t index;
  bool operator==(const DeclRef&) const = default;
};

class Model {
 public:
  enum class SymbolKind { Parameter, Variable, Array };
  struct Symbol {
    SymbolKind kind;
    std::size_t index;
  };

  Model() = default;

  // Each add_* throws ModelError on a duplicate identifier.
  void add_predicate(PredicateDecl p);
  void add_parameter(Parameter p);
  std::size_t add_variable(Variable v);
  void add_array(ArrayDecl a);
  void add_constraint(Constraint c) { constraints_.push_back(std::move(c)); }
  void set_goal(SolveGoal g) { goal_ = std::move(g); }
  void set_source_path(std::string p) { source_path_ = std::move(p); }

  const std::vector<PredicateDecl>& predicates() const { return predicates_; }
  const std::vector<Parameter>& parameters() const { return parameters_; }
  const std::vector<Variable>& variables() const { return variables_; }
  const std::vector<ArrayDecl>& arrays() const { return arrays_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const std::vector<DeclRef>& order() const { return order_; }
  const SolveGoal& goal() const { return goal_; }
  const std::string& source_path() const { return source_path_; }

  std::optional<Symbol> lookup(std::string_view name) const;
  const Variable* find_variable(std::string_view name) const;
  const ArrayDecl* find_array(std::string_view name) const;
  const Parameter* find_parameter(std::string_view name) const;

  // Mutable access for rewriting passes that preserve names.
  Variable& variable_at(std::size_t i) { return variables_.at(i); }
  ArrayDecl& array_at(std::size_t i) { return arrays_.at(i); }
  Constraint& constraint_at(std::size_t i) { return constraints_.at(i); }
  SolveGoal& mutable_goal() { return goal_; }

  // Compares content; the source path is ignored.
  bool operator==(const Model& other) const;

 private:
  void claim(const std::string& name, Symbol sym);

  std::vector<PredicateDecl> predicates_;
  std::vector<Parameter> parameters_;
  std::vector<Variable> variables_;
  std::vector<ArrayDecl> arrays_;
  std::vector<Constraint> constraints_;
  std::vector<DeclRef> order_;
  SolveGoal goal_;
  std::string source_path_;
  std::unordered_map<std::string, Symbol> symbols_;
};

// Rewrites constraint arguments, array elements and the objective so that no
// reference targets an alias, and points every alias at its chain root.
// Throws AliasCycleError on a cyclic chain.
Model resolve_aliases(const Model& model);

struct ModelCounts {
  std::size_t n_vars = 0;
  std::size_t n_constants = 0;
  std::size_t n_aliases = 0;
  std::size_t n_constraints = 0;  // constraints with deg(c) > 0
  std::size_t n_defined = 0;
  std::size_t n_introduced = 0;
};

ModelCounts model_counts(const Model& model);

// Derived structure used by every feature: the free variables V, the
// constraint set C (deg(c) > 0), Var(c), ari(c), deg(x).
class ModelIndex {
 public:
  struct ConstraintInfo {
    std::size_t decl;                 // position in Model::constraints()
    std::size_t arity = 0;            // ari(c)
    std::vector<std::uint32_t> vars;  // Var(c), sorted V positions
    std::size_t degree() const { return vars.size(); }
  };

  explicit ModelIndex(const Model& model);

  const Model& model() const { return *model_; }

  std::size_t num_vars() const { return free_.size(); }
  // Model variable position of V slot `v`.
  std::size_t variable_of(std::uint32_t v) const { return free_[v]; }
  const Variable& var(std::uint32_t v) const { return model_->variables()[free_[v]]; }
  double dom(std::uint32_t v) const { return dom_[v]; }
  std::uint32_t degree(std::uint32_t v) const { return degree_[v]; }
  const std::vector<double>& doms() const { return dom_; }
  const std::vector<std::uint32_t>& degrees() const { return degree_; }

  const std::vector<ConstraintInfo>& constraints() const { return constraints_; }
  std::size_t num_constraints() const { return constraints_.size(); }

  // V slot of the free variable an identifier or access term denotes after
  // alias resolution; nullopt for constants, literals and parameters.
  std::optional<std::uint32_t> resolve(const Term& t) const;

  // Appends every free-variable occurrence in `t` (arrays flattened).
  void collect(const Term& t, std::vector<std::uint32_t>& out) const;

  const ModelCounts& counts() const { return counts_; }

 private:
  std::optional<std::uint32_t> chase(std::size_t var_pos) const;

  const Model* model_;
  std::vector<std::size_t> free_;
  std::vector<std::int64_t> slot_of_;  // model variable -> V slot or -1
  std::vector<double> dom_;
  std::vector<std::uint32_t> degree_;
  std::vector<ConstraintInfo> constraints_;
  ModelCounts counts_;
};

}  // namespace fzfeat
