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

#include "fzfeat/static_features.hpp"

#include <algorithm>
#include <cmath>

namespace fzfeat {

namespace {

template <std::size_t N>
void put_summary(std::array<double, N>& out, std::size_t at, const StatSummary& s) {
  out[at + 0] = s.min;
  out[at + 1] = s.max;
  out[at + 2] = s.avg;
  out[at + 3] = s.cv;
  out[at + 4] = s.entropy;
}

double count(std::size_t n) { return static_cast<double>(n); }

// dom(c) = ln prod_{x in Var(c)} dom(x). The product is formed exactly while
// it stays an integer below 2^53, so equal products give equal values;
// otherwise the logs are summed.
double constraint_dom(const ModelIndex& index, const ModelIndex::ConstraintInfo& c) {
  constexpr double kExact = 9007199254740992.0;
  double product = 1;
  bool exact = true;
  std::vector<double> logs;
  logs.reserve(c.vars.size());
  for (auto v : c.vars) {
    const double d = index.dom(v);
    logs.push_back(safe_log(d));
    if (exact && d >= 1 && d == std::floor(d) && product <= kExact / d)
      product *= d;
    else
      exact = false;
  }
  return exact ? std::log(product) : ordered_sum(std::move(logs));
}

std::string_view prefix(std::string_view name) { return name.substr(0, name.find('_')); }

}  // namespace

std::array<double, 27> variable_features(const ModelIndex& index) {
  std::array<double, 27> f{};
  const auto& counts = index.counts();
  const double nv = count(index.num_vars());
  const double nc = count(index.num_constraints());

  std::vector<double> dom, deg, log_dom, log_deg, domdeg;
  for (std::uint32_t v = 0; v < index.num_vars(); ++v) {
    const double d = index.dom(v);
    const double g = index.degree(v);
    dom.push_back(d);
    deg.push_back(g);
    log_dom.push_back(safe_log(d));
    if (g > 0) {
      log_deg.push_back(std::log(g));
      domdeg.push_back(d / g);
    }
  }

  f[0] = nv;
  f[1] = count(counts.n_constants);
  f[2] = count(counts.n_aliases);
  f[3] = ratio(count(counts.n_aliases + counts.n_constants), nv);
  f[4] = ratio(nv, nc);
  f[5] = count(counts.n_defined);
  f[6] = count(counts.n_introduced);
  f[7] = ordered_sum(log_dom);
  f[8] = ordered_sum(log_deg);
  f[9] = ordered_sum(dom);
  f[10] = ordered_sum(deg);
  f[11] = ordered_sum(domdeg);
  put_summary(f, 12, stat_summary(dom));
  put_summary(f, 17, stat_summary(deg));
  put_summary(f, 22, stat_summary(domdeg));
  return f;
}

std::array<double, 18> domain_features(const ModelIndex& index) {
  std::array<double, 18> f{};
  const double nv = count(index.num_vars());
  const double nc = count(index.num_constraints());

  std::array<std::size_t, 4> var_kinds{};  // bool, float, int, set
  for (std::uint32_t v = 0; v < index.num_vars(); ++v) {
    switch (index.var(v).domain.type()) {
      case VarType::Bool: ++var_kinds[0]; break;
      case VarType::Float: ++var_kinds[1]; break;
      case VarType::Int: ++var_kinds[2]; break;
      case VarType::Set: ++var_kinds[3]; break;
    }
  }
  for (std::size_t k = 0; k < 4; ++k) {
    f[2 * k] = count(var_kinds[k]);
    f[2 * k + 1] = ratio(count(var_kinds[k]), nv);
  }

  static constexpr std::array<std::string_view, 5> kPrefixes{"array", "bool", "int", "float", "set"};
  std::array<std::size_t, 5> cons_kinds{};
  const auto& decls = index.model().constraints();
  for (const auto& c : index.constraints()) {
    auto p = prefix(decls[c.decl].name);
    for (std::size_t k = 0; k < kPrefixes.size(); ++k)
      if (p == kPrefixes[k]) ++cons_kinds[k];
  }
  for (std::size_t k = 0; k < 5; ++k) {
    f[8 + 2 * k] = count(cons_kinds[k]);
    f[8 + 2 * k + 1] = ratio(count(cons_kinds[k]), nc);
  }
  return f;
}

std::array<double, 27> constraint_features(const ModelIndex& index) {
  std::array<double, 27> f{};
  const double nv = count(index.num_vars());
  const double nc = count(index.num_constraints());
  const auto& decls = index.model().constraints();

  std::array<std::size_t, 5> anns{};  // bounds/boundsZ, boundsR, boundsD, domain, priority
  std::vector<double> dom, deg, log_deg, domdeg, ari;
  for (const auto& c : index.constraints()) {
    std::array<bool, 5> seen{};
    for (const auto& a : decls[c.decl].annotations) {
      auto h = a.head();
      if (h == "bounds" || h == "boundsZ") seen[0] = true;
      else if (h == "boundsR") seen[1] = true;
      else if (h == "boundsD") seen[2] = true;
      else if (h == "domain") seen[3] = true;
      else if (h == "priority") seen[4] = true;
    }
    for (std::size_t k = 0; k < 5; ++k) anns[k] += seen[k] ? 1 : 0;

    const double d = constraint_dom(index, c);
    const double g = count(c.degree());
    dom.push_back(d);
    deg.push_back(g);
    log_deg.push_back(std::log(g));
    domdeg.push_back(d / g);
    ari.push_back(count(c.arity));
  }

  f[0] = nc;
  f[1] = ratio(nc, nv);
  for (std::size_t k = 0; k < 5; ++k) f[2 + k] = count(anns[k]);
  f[7] = ordered_sum(dom);  // ln prod_c prod_x dom(x)
  f[8] = ordered_sum(log_deg);
  f[9] = ordered_sum(dom);
  f[10] = ordered_sum(ari);
  f[11] = ordered_sum(domdeg);
  put_summary(f, 12, stat_summary(dom));
  put_summary(f, 17, stat_summary(deg));
  put_summary(f, 22, stat_summary(domdeg));
  return f;
}

std::array<double, 29> global_constraint_features(const ModelIndex& index, const GlobalClassTable& table) {
  std::array<double, 29> f{};
  const auto& decls = index.model().constraints();
  std::size_t total = 0;
  for (const auto& c : index.constraints()) {
    if (auto cls = table.class_of(decls[c.decl].name)) {
      ++total;
      f[2 + *cls] += 1;
    }
  }
  f[0] = count(total);
  f[1] = ratio(count(total), count(index.num_constraints()));
  return f;
}

std::array<double, 11> solving_features(const Model& model) {
  std::array<double, 11> f{};
  const auto& goal = model.goal();
  std::size_t labeled = 0;
  std::array<std::size_t, 3> type{}, var_choice{}, val_choice{};

  auto listed = [&model](const Term& t) -> std::size_t {
    if (const auto* arr = t.as<Term::Array>()) return arr->items.size();
    if (const auto* id = t.as<Term::Ident>())
      if (const ArrayDecl* a = model.find_array(id->name)) return a->elements.size();
    return 1;
  };

  for (const auto& s : search_annotations(goal)) {
    for (const auto& v : s.variables) labeled += listed(v);
    if (s.type == "bool_search") ++type[0];
    else if (s.type == "int_search") ++type[1];
    else if (s.type == "set_search") ++type[2];

    if (s.variable_choice == "input_order") ++var_choice[0];
    else if (s.variable_choice == "first_fail") ++var_choice[1];
    else ++var_choice[2];

    if (s.value_choice == "indomain_min") ++val_choice[0];
    else if (s.value_choice == "indomain_max") ++val_choice[1];
    else ++val_choice[2];
  }

  f[0] = count(labeled);
  switch (goal.kind) {
    case SolveGoal::Kind::Satisfy: f[1] = 1; break;
    case SolveGoal::Kind::Minimize: f[1] = 2; break;
    case SolveGoal::Kind::Maximize: f[1] = 3; break;
  }
  for (std::size_t k = 0; k < 3; ++k) {
    f[2 + k] = count(type[k]);
    f[5 + k] = count(var_choice[k]);
    f[8 + k] = count(val_choice[k]);
  }
  return f;
}

std::array<double, 4> objective_ratios(double value, double mean, double stddev, double divisor) {
  return {value, ratio(value, mean), ratio(value - mean, stddev), ratio(value, divisor)};
}

std::array<double, 12> objective_features(const ModelIndex& index, const GraphFeatures& graphs) {
  std::array<double, 12> f;
  f.fill(kSentinel);
  const auto& goal = index.model().goal();
  if (goal.kind == SolveGoal::Kind::Satisfy || !goal.objective) return f;
  auto v = index.resolve(*goal.objective);
  if (!v) return f;

  auto population = [](const std::vector<double>& xs) {
    // Mean and standard deviation as in stat_summary (sorted accumulation).
    StatSummary s = stat_summary(xs);
    double sd = 0;
    if (!xs.empty()) {
      std::vector<double> sq;
      sq.reserve(xs.size());
      for (double x : xs) sq.push_back((x - s.avg) * (x - s.avg));
      sd = std::sqrt(ordered_sum(std::move(sq)) / static_cast<double>(xs.size()));
    }
    return std::pair{s.avg, sd};
  };

  std::vector<double> deg(index.degrees().begin(), index.degrees().end());
  auto [mu_dom, sd_dom] = population(index.doms());
  auto [mu_deg, sd_deg] = population(deg);
  const double dom_v = index.dom(*v);
  const double deg_v = index.degree(*v);

  auto a = objective_ratios(dom_v, mu_dom, sd_dom, deg_v);
  auto b = objective_ratios(deg_v, mu_deg, sd_deg, static_cast<double>(index.num_constraints()));
  std::copy(a.begin(), a.end(), f.begin());
  std::copy(b.begin(), b.end(), f.begin() + 4);
  if (!graphs.timed_out && *v < graphs.vg_degree.size()) {
    const double de = graphs.vg_degree[*v];
    const double di = graphs.vg_diameter[*v];
    f[8] = de;
    f[9] = di;
    f[10] = ratio(de, di);
    f[11] = ratio(di, de);
  }
  return f;
}

FeatureVector static_features(const Model& resolved, const StaticOptions& options) {
  FeatureVector fv;
  fv.values.fill(kSentinel);
  ModelIndex index(resolved);
  const GlobalClassTable& table = options.global_classes ? *options.global_classes : GlobalClassTable::builtin();
  GraphFeatures graphs = graph_features(index, options.graph_budget);

  auto place = [&fv](FeatureCategory c, const auto& block) {
    std::copy(block.begin(), block.end(), fv.category(c).begin());
  };
  place(FeatureCategory::Variables, variable_features(index));
  place(FeatureCategory::Domains, domain_features(index));
  place(FeatureCategory::Constraints, constraint_features(index));
  place(FeatureCategory::GlobalConstraints, global_constraint_features(index, table));
  place(FeatureCategory::Graphs, graphs.values);
  place(FeatureCategory::Solving, solving_features(resolved));
  place(FeatureCategory::Objective, objective_features(index, graphs));
  return fv;
}

}  // namespace fzfeat
