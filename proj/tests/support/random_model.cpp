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

#include "support/random_model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fzfeat::testing {

namespace {

int pick(std::mt19937& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

const char* kConstraintNames[] = {
    "int_le",        "int_lin_eq",  "int_ne",        "bool_or",          "array_bool_and", "bool_lin_le",
    "bool_lin_eq",   "all_different_int", "table_int", "set_in",         "float_lin_le",   "int_times",
    "gecode_circuit", "count",      "int_eq_reif",   "custom_solver_predicate", "array_int_element",
    "cumulatives",   "int_lin_ne",  "set_card",
};

const char* kAnnotations[] = {"domain", "bounds", "boundsZ", "boundsR", "boundsD", "priority(2)"};
const char* kVarChoice[] = {"input_order", "first_fail", "smallest", "anti_first_fail", "occurrence"};
const char* kValChoice[] = {"indomain_min", "indomain_max", "indomain_split", "indomain_median"};

std::string render_arg(const GenModel& m, const GenModel::Arg& a) {
  switch (a.kind) {
    case GenModel::Arg::Kind::Literal: return a.literal;
    case GenModel::Arg::Kind::Var: return m.vars[static_cast<std::size_t>(a.index)].name;
    case GenModel::Arg::Kind::ArrayRef: return m.arrays[static_cast<std::size_t>(a.index)].name;
    case GenModel::Arg::Kind::Array: {
      std::string out = "[";
      for (std::size_t i = 0; i < a.items.size(); ++i) {
        if (i) out += ", ";
        out += render_arg(m, a.items[i]);
      }
      return out + "]";
    }
  }
  return {};
}

}  // namespace

std::string GenModel::render() const {
  std::ostringstream out;
  out << "% generated\n";
  for (const auto& v : vars) {
    out << "var " << v.domain << ": " << v.name;
    if (v.introduced) out << " :: var_is_introduced";
    if (v.defined) out << " :: is_defined_var";
    if (v.kind == Var::Kind::Constant) out << " = " << v.constant;
    if (v.kind == Var::Kind::Alias) out << " = " << vars[static_cast<std::size_t>(v.alias_of)].name;
    out << ";\n";
  }
  for (const auto& a : arrays) {
    out << "array [1.." << a.elements.size() << "] of var " << a.domain << ": " << a.name << " = [";
    for (std::size_t i = 0; i < a.elements.size(); ++i) {
      if (i) out << ", ";
      out << vars[static_cast<std::size_t>(a.elements[i])].name;
    }
    out << "];\n";
  }
  for (const auto& c : cons) {
    out << "constraint " << c.name << "(";
    for (std::size_t i = 0; i < c.args.size(); ++i) {
      if (i) out << ", ";
      out << render_arg(*this, c.args[i]);
    }
    out << ")";
    for (const auto& a : c.annotations) out << " :: " << a;
    out << ";\n";
  }
  out << "solve";
  for (const auto& s : searches)
    out << " :: " << s.type << "(" << arrays[static_cast<std::size_t>(s.array)].name << ", " << s.var_choice
        << ", " << s.val_choice << ", complete)";
  if (goal == 0) out << " satisfy;\n";
  if (goal == 1) out << " minimize " << vars[static_cast<std::size_t>(objective)].name << ";\n";
  if (goal == 2) out << " maximize " << vars[static_cast<std::size_t>(objective)].name << ";\n";
  return out.str();
}

GenModel GenModel::with_permuted_constraints(std::mt19937& rng) const {
  GenModel m = *this;
  std::shuffle(m.cons.begin(), m.cons.end(), rng);
  return m;
}

GenModel GenModel::with_renamed_identifiers(std::mt19937& rng) const {
  GenModel m = *this;
  std::vector<int> perm(vars.size() + arrays.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const int salt = pick(rng, 0, 9999);
  for (std::size_t i = 0; i < m.vars.size(); ++i) m.vars[i].name = "r" + std::to_string(salt) + "_v" + std::to_string(perm[i]);
  for (std::size_t i = 0; i < m.arrays.size(); ++i)
    m.arrays[i].name = "R" + std::to_string(salt) + "_a" + std::to_string(perm[vars.size() + i]);
  return m;
}

GenModel random_model(std::mt19937& rng, const GenOptions& opt) {
  GenModel m;
  const int nv = pick(rng, opt.min_vars, opt.max_vars);
  for (int i = 0; i < nv; ++i) {
    GenModel::Var v;
    v.name = "x" + std::to_string(i);
    switch (i == 0 ? 9 : pick(rng, 0, 9)) {
      case 0: v.domain = "bool"; break;
      case 1: v.domain = "{1, 3, 5, 9}"; break;
      case 2: v.domain = "0.0..2.5"; break;
      case 3: v.domain = "set of 1..3"; break;
      case 4: v.domain = "int"; break;
      default: {
        int lo = pick(rng, -3, 3);
        v.domain = std::to_string(lo) + ".." + std::to_string(lo + pick(rng, 0, 8));
      }
    }
    if (opt.allow_bounded && i > 0 && v.domain.find_first_of(".{") != std::string::npos &&
        v.domain.find("set") == std::string::npos && v.domain.find('.') != std::string::npos &&
        v.domain.find("0.0") == std::string::npos) {
      int r = pick(rng, 0, 9);
      if (r == 0) {
        v.kind = GenModel::Var::Kind::Constant;
        v.constant = v.domain.substr(0, v.domain.find(".."));
      } else if (r == 1) {
        // Alias an earlier int-range variable.
        std::vector<int> cands;
        for (int j = 0; j < i; ++j) {
          const auto& d = m.vars[static_cast<std::size_t>(j)].domain;
          if (d.find("..") != std::string::npos && d.find("set") == std::string::npos && d.find("0.0") == std::string::npos)
            cands.push_back(j);
        }
        if (!cands.empty()) {
          v.kind = GenModel::Var::Kind::Alias;
          v.alias_of = cands[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(cands.size()) - 1))];
        }
      }
    }
    v.introduced = pick(rng, 0, 4) == 0;
    v.defined = pick(rng, 0, 5) == 0;
    m.vars.push_back(std::move(v));
  }

  // One or two named arrays over random variables.
  const int na = pick(rng, 1, 2);
  for (int a = 0; a < na; ++a) {
    GenModel::VarArray arr;
    arr.name = "xs" + std::to_string(a);
    arr.domain = "int";
    std::vector<int> ints;
    for (int i = 0; i < nv; ++i) {
      const auto& d = m.vars[static_cast<std::size_t>(i)].domain;
      if (d == "int" || d[0] == '{' || (d.find("..") != std::string::npos && d.find("set") == std::string::npos &&
                                        d.find("0.0") == std::string::npos))
        ints.push_back(i);
    }
    const int len = pick(rng, 1, std::min(static_cast<int>(ints.size()), 5));
    for (int k = 0; k < len; ++k)
      arr.elements.push_back(ints[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(ints.size()) - 1))]);
    m.arrays.push_back(std::move(arr));
  }

  const int nc = pick(rng, 0, opt.max_cons);
  for (int c = 0; c < nc; ++c) {
    GenModel::Con con;
    con.name = kConstraintNames[pick(rng, 0, static_cast<int>(std::size(kConstraintNames)) - 1)];
    const int nargs = pick(rng, 1, 3);
    for (int k = 0; k < nargs; ++k) {
      GenModel::Arg arg;
      switch (pick(rng, 0, 5)) {
        case 0:
          arg.kind = GenModel::Arg::Kind::Literal;
          arg.literal = std::to_string(pick(rng, -5, 5));
          break;
        case 1:
          arg.kind = GenModel::Arg::Kind::ArrayRef;
          arg.index = pick(rng, 0, na - 1);
          break;
        case 2: {
          arg.kind = GenModel::Arg::Kind::Array;
          const int len = pick(rng, 0, 4);
          for (int q = 0; q < len; ++q) {
            GenModel::Arg item;
            if (pick(rng, 0, 4) == 0) {
              item.kind = GenModel::Arg::Kind::Literal;
              item.literal = std::to_string(pick(rng, 0, 3));
            } else {
              item.kind = GenModel::Arg::Kind::Var;
              item.index = pick(rng, 0, nv - 1);
            }
            arg.items.push_back(item);
          }
          break;
        }
        default:
          arg.kind = GenModel::Arg::Kind::Var;
          arg.index = pick(rng, 0, nv - 1);
      }
      con.args.push_back(std::move(arg));
    }
    if (pick(rng, 0, 3) == 0) con.annotations.push_back(kAnnotations[pick(rng, 0, 5)]);
    m.cons.push_back(std::move(con));
  }

  m.goal = pick(rng, 0, 2);
  if (m.goal != 0) {
    std::vector<int> cands;
    for (int i = 0; i < nv; ++i) {
      const auto& v = m.vars[static_cast<std::size_t>(i)];
      if (v.kind == GenModel::Var::Kind::Free && v.domain.find("..") != std::string::npos &&
          v.domain.find("set") == std::string::npos && v.domain.find("0.0") == std::string::npos)
        cands.push_back(i);
    }
    if (cands.empty()) {
      m.goal = 0;
    } else {
      m.objective = cands[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(cands.size()) - 1))];
    }
  }
  const int ns = pick(rng, 0, 2);
  for (int s = 0; s < ns; ++s) {
    GenModel::Search srch;
    srch.type = pick(rng, 0, 1) ? "int_search" : "bool_search";
    srch.array = pick(rng, 0, na - 1);
    srch.var_choice = kVarChoice[pick(rng, 0, 4)];
    srch.val_choice = kValChoice[pick(rng, 0, 3)];
    m.searches.push_back(srch);
  }
  return m;
}

}  // namespace fzfeat::testing
