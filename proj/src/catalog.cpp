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

#include "fzfeat/catalog.hpp"

#include <fmt/format.h>

#include <cmath>
#include <numeric>

namespace fzfeat {

std::string_view to_string(FeatureCategory c) {
  switch (c) {
    case FeatureCategory::Variables: return "Variables";
    case FeatureCategory::Domains: return "Domains";
    case FeatureCategory::Constraints: return "Constraints";
    case FeatureCategory::GlobalConstraints: return "GlobalConstraints";
    case FeatureCategory::Graphs: return "Graphs";
    case FeatureCategory::Solving: return "Solving";
    case FeatureCategory::Objective: return "Objective";
    case FeatureCategory::Dynamic: return "Dynamic";
  }
  return "?";
}

std::size_t category_offset(FeatureCategory c) {
  auto k = static_cast<std::size_t>(c);
  return std::accumulate(kCategorySizes.begin(), kCategorySizes.begin() + static_cast<std::ptrdiff_t>(k),
                         std::size_t{0});
}

namespace {

using C = FeatureCategory;

void summary(std::vector<FeatureInfo>& out, C cat, const std::string& prefix_fmt, const std::string& set) {
  static const char* kStats[] = {"min", "max", "avg", "cv", "ent"};
  static const char* kWhat[] = {"minimum", "maximum", "mean", "coefficient of variation",
                                "entropy (ln)"};
  for (int i = 0; i < 5; ++i)
    out.push_back({fmt::format(fmt::runtime(prefix_fmt), kStats[i]), cat, fmt::format("{} of {}", kWhat[i], set)});
}

std::vector<FeatureInfo> build() {
  std::vector<FeatureInfo> f;
  // Variables
  f.push_back({"v_num_vars", C::Variables, "|V|, free variables"});
  f.push_back({"v_num_consts", C::Variables, "cv, variables bound to a constant"});
  f.push_back({"v_num_aliases", C::Variables, "av, variables bound to another variable"});
  f.push_back({"v_ratio_bounded", C::Variables, "(av+cv)/|V|"});
  f.push_back({"v_ratio_vars", C::Variables, "|V|/|C|"});
  f.push_back({"v_def_vars", C::Variables, "variables annotated is_defined_var"});
  f.push_back({"v_intro_vars", C::Variables, "variables annotated var_is_introduced"});
  f.push_back({"v_logprod_dom_vars", C::Variables, "ln prod dom(x), x in V"});
  f.push_back({"v_logprod_deg_vars", C::Variables, "ln prod deg(x), x in V with deg(x)>0"});
  f.push_back({"v_sum_dom_vars", C::Variables, "sum dom(x), x in V"});
  f.push_back({"v_sum_deg_vars", C::Variables, "sum deg(x), x in V"});
  f.push_back({"v_sum_domdeg_vars", C::Variables, "sum dom(x)/deg(x), x in V with deg(x)>0"});
  summary(f, C::Variables, "v_{}_dom_vars", "{dom(x) : x in V}");
  summary(f, C::Variables, "v_{}_deg_vars", "{deg(x) : x in V}");
  summary(f, C::Variables, "v_{}_domdeg_vars", "{dom(x)/deg(x) : deg(x)>0}");
  // Domains
  for (const char* k : {"bool", "float", "int", "set"}) {
    f.push_back({fmt::format("d_{}_vars", k), C::Domains, fmt::format("{} variables in V", k)});
    f.push_back({fmt::format("d_ratio_{}_vars", k), C::Domains, fmt::format("{} variables / |V|", k)});
  }
  for (const char* k : {"array", "bool", "int", "float", "set"}) {
    f.push_back({fmt::format("d_{}_cons", k), C::Domains, fmt::format("constraints named {}_*", k)});
    f.push_back({fmt::format("d_ratio_{}_cons", k), C::Domains, fmt::format("{}_* constraints / |C|", k)});
  }
  // Constraints
  f.push_back({"c_num_cons", C::Constraints, "|C|, constraints with deg(c)>0"});
  f.push_back({"c_ratio_cons", C::Constraints, "|C|/|V|"});
  f.push_back({"c_bounds_z", C::Constraints, "constraints annotated bounds or boundsZ"});
  f.push_back({"c_bounds_r", C::Constraints, "constraints annotated boundsR"});
  f.push_back({"c_bounds_d", C::Constraints, "constraints annotated boundsD"});
  f.push_back({"c_domain", C::Constraints, "constraints annotated domain"});
  f.push_back({"c_priority", C::Constraints, "constraints annotated priority(..)"});
  f.push_back({"c_logprod_dom_cons", C::Constraints, "ln prod_c prod_{x in Var(c)} dom(x) = sum dom(c)"});
  f.push_back({"c_logprod_deg_cons", C::Constraints, "ln prod deg(c)"});
  f.push_back({"c_sum_dom_cons", C::Constraints, "sum dom(c), dom(c) = ln prod_{x in Var(c)} dom(x)"});
  f.push_back({"c_sum_ari_cons", C::Constraints, "sum ari(c), variable occurrences with multiplicity"});
  f.push_back({"c_sum_domdeg_cons", C::Constraints, "sum dom(c)/deg(c)"});
  summary(f, C::Constraints, "c_{}_dom_cons", "{dom(c)}");
  summary(f, C::Constraints, "c_{}_deg_cons", "{deg(c)}");
  summary(f, C::Constraints, "c_{}_domdeg_cons", "{dom(c)/deg(c)}");
  // Global constraints
  f.push_back({"gc_global_cons", C::GlobalConstraints, "gc, global constraints in C"});
  f.push_back({"gc_ratio_globs", C::GlobalConstraints, "gc/|C|"});
  for (const char* k : {"all_diff", "all_equal", "among", "array_int", "array_set", "at_least_most",
                        "bin_packing", "bool_lin", "circuit", "count", "cumulative", "decr_inc", "diffn",
                        "disjoint", "global_card", "link_set", "inverse", "max_min_int", "member", "nvalue",
                        "precede", "range", "regular", "schedule", "set_weights", "sort", "table"})
    f.push_back({fmt::format("gc_{}", k), C::GlobalConstraints, fmt::format("constraints of class {}", k)});
  // Graphs
  summary(f, C::Graphs, "gr_{}_deg_cg", "constraint graph node degrees");
  summary(f, C::Graphs, "gr_{}_clust_cg", "constraint graph clustering coefficients");
  summary(f, C::Graphs, "gr_{}_deg_vg", "variable graph node degrees");
  summary(f, C::Graphs, "gr_{}_diam_vg", "variable graph node eccentricities (unreachable = 0)");
  // Solving
  f.push_back({"s_labeled_vars", C::Solving, "variables listed in search annotations"});
  f.push_back({"s_goal", C::Solving, "1 satisfy, 2 minimize, 3 maximize"});
  f.push_back({"s_bool_search", C::Solving, "bool_search annotations"});
  f.push_back({"s_int_search", C::Solving, "int_search annotations"});
  f.push_back({"s_set_search", C::Solving, "set_search annotations"});
  f.push_back({"s_input_order", C::Solving, "input_order variable choices"});
  f.push_back({"s_first_fail", C::Solving, "first_fail variable choices"});
  f.push_back({"s_other_var", C::Solving, "other variable choices"});
  f.push_back({"s_indomain_min", C::Solving, "indomain_min value choices"});
  f.push_back({"s_indomain_max", C::Solving, "indomain_max value choices"});
  f.push_back({"s_other_val", C::Solving, "other value choices"});
  // Objective
  f.push_back({"o_dom", C::Objective, "dom(v), v the objective variable"});
  f.push_back({"o_dom_avg", C::Objective, "dom(v)/mean dom over V"});
  f.push_back({"o_dom_std", C::Objective, "(dom(v)-mean)/stddev of dom over V"});
  f.push_back({"o_dom_deg", C::Objective, "dom(v)/deg(v)"});
  f.push_back({"o_deg", C::Objective, "deg(v)"});
  f.push_back({"o_deg_avg", C::Objective, "deg(v)/mean deg over V"});
  f.push_back({"o_deg_std", C::Objective, "(deg(v)-mean)/stddev of deg over V"});
  f.push_back({"o_deg_cons", C::Objective, "deg(v)/|C|"});
  f.push_back({"o_deg_vg", C::Objective, "de, degree of v in the variable graph"});
  f.push_back({"o_diam_vg", C::Objective, "di, eccentricity of v in the variable graph"});
  f.push_back({"o_degdiam_vg", C::Objective, "de/di"});
  f.push_back({"o_diamdeg_vg", C::Objective, "di/de"});
  // Dynamic
  f.push_back({"dyn_solutions", C::Dynamic, "solutions found in the capped run"});
  f.push_back({"dyn_propagations", C::Dynamic, "p, propagations"});
  f.push_back({"dyn_ratio_prop_cons", C::Dynamic, "p/|C|"});
  f.push_back({"dyn_nodes", C::Dynamic, "e, search nodes"});
  f.push_back({"dyn_failures", C::Dynamic, "f, failed nodes"});
  f.push_back({"dyn_ratio_fail_nodes", C::Dynamic, "f/e"});
  f.push_back({"dyn_peak_depth", C::Dynamic, "peak search depth"});
  f.push_back({"dyn_peak_mem", C::Dynamic, "peak memory as printed by the solver (gecode dialect: KB)"});
  f.push_back({"t_compile", C::Dynamic, "seconds to compile to FlatZinc (wall clock, 0 for .fzn input)"});
  f.push_back({"t_static", C::Dynamic, "seconds for static features (wall clock)"});
  f.push_back({"t_total", C::Dynamic, "seconds for all features (wall clock)"});
  return f;
}

}  // namespace

const std::vector<FeatureInfo>& feature_catalog() {
  static const std::vector<FeatureInfo> catalog = build();
  return catalog;
}

std::string catalog_table() {
  std::string out = "index\tname\tcategory\tformula\n";
  const auto& cat = feature_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i)
    out += fmt::format("{}\t{}\t{}\t{}\n", i, cat[i].name, to_string(cat[i].category), cat[i].formula);
  return out;
}

bool FeatureVector::all_finite() const {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace fzfeat
