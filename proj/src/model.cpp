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

#include "fzfeat/model.hpp"

#include <algorithm>
#include <cmath>

namespace fzfeat {

namespace {

std::string join_cycle(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) {
    if (!out.empty()) out += " -> ";
    out += n;
  }
  return out;
}

}  // namespace

AliasCycleError::AliasCycleError(std::vector<std::string> cycle)
    : ModelError("cyclic alias chain: " + join_cycle(cycle)), cycle_(std::move(cycle)) {}

std::string_view to_string(VarType t) {
  switch (t) {
    case VarType::Bool: return "bool";
    case VarType::Int: return "int";
    case VarType::Float: return "float";
    case VarType::Set: return "set of int";
  }
  return "?";
}

Domain Domain::boolean() { return Domain(VarType::Bool, std::monostate{}); }
Domain Domain::unbounded_int() { return Domain(VarType::Int, std::monostate{}); }
Domain Domain::unbounded_float() { return Domain(VarType::Float, std::monostate{}); }
Domain Domain::set_of_int() { return Domain(VarType::Set, std::monostate{}); }

Domain Domain::int_range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw ModelError("empty int range " + std::to_string(lo) + ".." + std::to_string(hi));
  return Domain(VarType::Int, IntRange{lo, hi});
}

static IntSet normalize(std::vector<std::int64_t> values) {
  if (values.empty()) throw ModelError("empty value set in domain");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return IntSet{std::move(values)};
}

Domain Domain::int_set(std::vector<std::int64_t> values) {
  return Domain(VarType::Int, normalize(std::move(values)));
}

Domain Domain::float_range(double lo, double hi) {
  if (!(lo <= hi)) throw ModelError("empty float range");
  return Domain(VarType::Float, FloatRange{lo, hi});
}

Domain Domain::set_of_range(std::int64_t lo, std::int64_t hi) {
  // An empty universe is legal for set variables: the only value is {}.
  return Domain(VarType::Set, IntRange{lo, hi});
}

Domain Domain::set_of_values(std::vector<std::int64_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return Domain(VarType::Set, IntSet{std::move(values)});
}

Domain::Kind Domain::kind() const {
  switch (type_) {
    case VarType::Bool: return Kind::Bool;
    case VarType::Set: return Kind::SetOfInt;
    case VarType::Int:
      if (range()) return Kind::IntRange;
      if (values()) return Kind::IntSet;
      return Kind::UnboundedInt;
    case VarType::Float:
      return float_bounds() ? Kind::FloatRange : Kind::UnboundedFloat;
  }
  return Kind::Bool;
}

double Domain::size(double unbounded) const {
  switch (type_) {
    case VarType::Bool: return 2.0;
    case VarType::Int:
      if (const auto* r = range()) return static_cast<double>(r->hi) - static_cast<double>(r->lo) + 1.0;
      if (const auto* s = values()) return static_cast<double>(s->values.size());
      return unbounded;
    case VarType::Float:
      if (const auto* f = float_bounds()) return f->hi - f->lo;
      return unbounded;
    case VarType::Set: {
      double card = 0;
      if (const auto* r = range()) {
        card = r->hi >= r->lo ? static_cast<double>(r->hi) - static_cast<double>(r->lo) + 1.0 : 0.0;
      } else if (const auto* s = values()) {
        card = static_cast<double>(s->values.size());
      } else {
        return unbounded;
      }
      return std::exp2(card);
    }
  }
  return unbounded;
}

std::string_view Term::head() const {
  if (const auto* id = as<Ident>()) return id->name;
  if (const auto* c = as<Call>()) return c->name;
  return {};
}

std::vector<SearchAnnotation> search_annotations(const SolveGoal& goal) {
  std::vector<SearchAnnotation> out;
  auto ident_of = [](const Term& t) -> std::string {
    return std::string(t.head());
  };
  auto visit = [&](auto&& self, const Term& ann) -> void {
    const auto* call = ann.as<Term::Call>();
    if (!call) return;
    if (call->name == "seq_search" || call->name == "warm_start_array") {
      for (const auto& a : call->args)
        if (const auto* arr = a.as<Term::Array>())
          for (const auto& inner : arr->items) self(self, inner);
      return;
    }
    if (call->name.size() < 7 || call->name.compare(call->name.size() - 7, 7, "_search") != 0) return;
    SearchAnnotation s;
    s.type = call->name;
    if (!call->args.empty()) {
      const Term& vars = call->args[0];
      if (const auto* arr = vars.as<Term::Array>())
        s.variables = arr->items;
      else
        s.variables.push_back(vars);
    }
    // float_search carries a precision before the heuristics.
    const std::size_t at = call->name == "float_search" ? 2 : 1;
    if (call->args.size() > at) s.variable_choice = ident_of(call->args[at]);
    if (call->args.size() > at + 1) s.value_choice = ident_of(call->args[at + 1]);
    if (call->args.size() > at + 2) s.strategy = ident_of(call->args[at + 2]);
    out.push_back(std::move(s));
  };
  for (const auto& ann : goal.annotations) visit(visit, ann);
  return out;
}

void Model::claim(const std::string& name, Symbol sym) {
  if (!symbols_.emplace(name, sym).second) throw ModelError("duplicate identifier '" + name + "'");
}

void Model::add_predicate(PredicateDecl p) {
  for (const auto& q : predicates_)
    if (q.name == p.name && q.signature == p.signature)
      throw ModelError("duplicate predicate '" + p.name + "'");
  predicates_.push_back(std::move(p));
}

void Model::add_parameter(Parameter p) {
  claim(p.name, {SymbolKind::Parameter, parameters_.size()});
  order_.push_back({DeclRef::Kind::Parameter, parameters_.size()});
  parameters_.push_back(std::move(p));
}

std::size_t Model::add_variable(Variable v) {
  claim(v.name, {SymbolKind::Variable, variables_.size()});
  if (!v.owner) order_.push_back({DeclRef::Kind::Variable, variables_.size()});
  variables_.push_back(std::move(v));
  return variables_.size() - 1;
}

void Model::add_array(ArrayDecl a) {
  claim(a.name, {SymbolKind::Array, arrays_.size()});
  order_.push_back({DeclRef::Kind::Array, arrays_.size()});
  arrays_.push_back(std::move(a));
}

std::optional<Model::Symbol> Model::lookup(std::string_view name) const {
  auto it = symbols_.find(std::string(name));
  if (it == symbols_.end()) return std::nullopt;
  return it->second;
}

const Variable* Model::find_variable(std::string_view name) const {
  auto s = lookup(name);
  return s && s->kind == SymbolKind::Variable ? &variables_[s->index] : nullptr;
}

const ArrayDecl* Model::find_array(std::string_view name) const {
  auto s = lookup(name);
  return s && s->kind == SymbolKind::Array ? &arrays_[s->index] : nullptr;
}

const Parameter* Model::find_parameter(std::string_view name) const {
  auto s = lookup(name);
  return s && s->kind == SymbolKind::Parameter ? &parameters_[s->index] : nullptr;
}

bool Model::operator==(const Model& o) const {
  return predicates_ == o.predicates_ && parameters_ == o.parameters_ &&
         variables_ == o.variables_ && arrays_ == o.arrays_ && constraints_ == o.constraints_ &&
         order_ == o.order_ && goal_ == o.goal_;
}

namespace {

// Follows alias bindings and array accesses from `t` until reaching a
// non-alias variable or a literal. Returns the terminal term.
Term chase_term(const Model& m, const Term& t) {
  Term cur = t;
  std::vector<std::string> path;
  const std::size_t limit = m.variables().size() + m.arrays().size() + 2;
  for (std::size_t step = 0;; ++step) {
    if (step > limit) {
      // Trim the path to the repeating part.
      const std::string& last = path.back();
      auto first = std::find(path.begin(), path.end(), last);
      std::vector<std::string> cycle(first, path.end());
      throw AliasCycleError(std::move(cycle));
    }
    if (const auto* acc = cur.as<Term::Access>()) {
      const ArrayDecl* a = m.find_array(acc->array);
      if (!a) throw ModelError("undefined array '" + acc->array + "'");
      if (acc->index < a->index.lo || acc->index > a->index.hi)
        throw ModelError("index " + std::to_string(acc->index) + " out of bounds for '" + acc->array + "'");
      cur = a->elements[static_cast<std::size_t>(acc->index - a->index.lo)];
      continue;
    }
    if (const auto* id = cur.as<Term::Ident>()) {
      const Variable* v = m.find_variable(id->name);
      if (!v) return cur;  // parameters and arrays terminate the chain
      const auto* al = std::get_if<Binding::Alias>(&v->binding.value);
      if (!al) return cur;
      path.push_back(id->name);
      if (std::count(path.begin(), path.end(), id->name) > 1) {
        auto first = std::find(path.begin(), path.end(), id->name);
        throw AliasCycleError(std::vector<std::string>(first, path.end()));
      }
      cur = al->target;
      continue;
    }
    return cur;
  }
}

void rewrite(const Model& m, Term& t) {
  if (auto* arr = std::get_if<Term::Array>(&t.value)) {
    for (auto& item : arr->items) rewrite(m, item);
    return;
  }
  if (const auto* id = t.as<Term::Ident>()) {
    const Variable* v = m.find_variable(id->name);
    if (v && v->binding.is_alias()) t = chase_term(m, t);
  }
}

}  // namespace

Model resolve_aliases(const Model& model) {
  Model out = model;
  // Chase against the original model; chains are read-only there.
  for (std::size_t i = 0; i < out.variables().size(); ++i) {
    Variable& v = out.variable_at(i);
    if (auto* al = std::get_if<Binding::Alias>(&v.binding.value)) al->target = chase_term(model, al->target);
  }
  for (std::size_t i = 0; i < out.arrays().size(); ++i) {
    ArrayDecl& a = out.array_at(i);
    if (!a.is_var) continue;
    for (auto& e : a.elements) rewrite(model, e);
  }
  for (std::size_t i = 0; i < out.constraints().size(); ++i)
    for (auto& arg : out.constraint_at(i).args) rewrite(model, arg);
  if (auto& obj = out.mutable_goal().objective) rewrite(model, *obj);
  return out;
}

ModelCounts model_counts(const Model& model) { return ModelIndex(model).counts(); }

ModelIndex::ModelIndex(const Model& model) : model_(&model) {
  const auto& vars = model.variables();
  slot_of_.assign(vars.size(), -1);
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const Variable& v = vars[i];
    if (v.is_defined) ++counts_.n_defined;
    if (v.is_introduced) ++counts_.n_introduced;
    if (v.binding.is_constant()) {
      ++counts_.n_constants;
    } else if (v.binding.is_alias()) {
      ++counts_.n_aliases;
    } else {
      slot_of_[i] = static_cast<std::int64_t>(free_.size());
      free_.push_back(i);
      dom_.push_back(v.domain.size());
    }
  }
  counts_.n_vars = free_.size();
  degree_.assign(free_.size(), 0);

  // Detect cycles up front so that resolve() never loops.
  for (std::size_t i = 0; i < vars.size(); ++i)
    if (vars[i].binding.is_alias()) (void)chase_term(model, Term::ident(vars[i].name));

  std::vector<std::uint32_t> occ;
  const auto& cons = model.constraints();
  for (std::size_t c = 0; c < cons.size(); ++c) {
    occ.clear();
    for (const auto& arg : cons[c].args) collect(arg, occ);
    if (occ.empty()) continue;
    ConstraintInfo info;
    info.decl = c;
    info.arity = occ.size();
    std::sort(occ.begin(), occ.end());
    occ.erase(std::unique(occ.begin(), occ.end()), occ.end());
    info.vars = occ;
    for (auto v : info.vars) ++degree_[v];
    constraints_.push_back(std::move(info));
  }
  counts_.n_constraints = constraints_.size();
}

std::optional<std::uint32_t> ModelIndex::chase(std::size_t var_pos) const {
  Term root = chase_term(*model_, Term::ident(model_->variables()[var_pos].name));
  const auto* id = root.as<Term::Ident>();
  if (!id) return std::nullopt;
  auto sym = model_->lookup(id->name);
  if (!sym || sym->kind != Model::SymbolKind::Variable) return std::nullopt;
  auto slot = slot_of_[sym->index];
  if (slot < 0) return std::nullopt;
  return static_cast<std::uint32_t>(slot);
}

std::optional<std::uint32_t> ModelIndex::resolve(const Term& t) const {
  Term root = chase_term(*model_, t);
  const auto* id = root.as<Term::Ident>();
  if (!id) return std::nullopt;
  auto sym = model_->lookup(id->name);
  if (!sym || sym->kind != Model::SymbolKind::Variable) return std::nullopt;
  auto slot = slot_of_[sym->index];
  if (slot < 0) return std::nullopt;
  return static_cast<std::uint32_t>(slot);
}

void ModelIndex::collect(const Term& t, std::vector<std::uint32_t>& out) const {
  if (const auto* arr = t.as<Term::Array>()) {
    for (const auto& item : arr->items) collect(item, out);
    return;
  }
  if (const auto* id = t.as<Term::Ident>()) {
    auto sym = model_->lookup(id->name);
    if (!sym) throw ModelError("undefined identifier '" + id->name + "'");
    if (sym->kind == Model::SymbolKind::Array) {
      const ArrayDecl& a = model_->arrays()[sym->index];
      if (!a.is_var) return;
      for (const auto& e : a.elements) collect(e, out);
      return;
    }
    if (sym->kind == Model::SymbolKind::Variable) {
      if (auto v = chase(sym->index)) out.push_back(*v);
    }
    return;
  }
  if (t.is<Term::Access>()) {
    if (auto v = resolve(t)) out.push_back(*v);
  }
}

}  // namespace fzfeat
