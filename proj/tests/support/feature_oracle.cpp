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

#include "support/feature_oracle.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#ifndef FZFEAT_CONFIG_DIR
#error "FZFEAT_CONFIG_DIR must point at the config directory"
#endif

namespace fzfeat::testing {

namespace {

std::string trim(std::string s) {
  auto issp = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && issp(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && issp(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

bool starts_with(const std::string& s, const std::string& p) { return s.rfind(p, 0) == 0; }

std::string strip_comments(const std::string& text) {
  std::string out;
  bool in_str = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '"') in_str = !in_str;
    if (c == '%' && !in_str) {
      while (i < text.size() && text[i] != '\n') ++i;
      out += '\n';
      continue;
    }
    out += c;
  }
  return out;
}

std::vector<std::string> split_statements(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  bool in_str = false;
  for (char c : text) {
    if (c == '"') in_str = !in_str;
    if (c == ';' && !in_str) {
      auto t = trim(cur);
      if (!t.empty()) out.push_back(t);
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

// Split on `sep` at bracket depth zero.
std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (c == sep && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!trim(cur).empty()) out.push_back(trim(cur));
  return out;
}

// Split "x :: a :: b(c)" into head and annotation strings.
std::pair<std::string, std::vector<std::string>> split_annotations(const std::string& s) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(' || c == '[' || c == '{') ++depth;
    if (c == ')' || c == ']' || c == '}') --depth;
    if (depth == 0 && c == ':' && i + 1 < s.size() && s[i + 1] == ':') {
      parts.push_back(trim(cur));
      cur.clear();
      ++i;
      continue;
    }
    cur += c;
  }
  parts.push_back(trim(cur));
  std::string head = parts.front();
  parts.erase(parts.begin());
  return {head, parts};
}

std::string ann_head(const std::string& a) { return trim(a.substr(0, a.find('('))); }

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

struct OVar {
  std::string name;
  std::string type;  // bool int float set
  double dom = 0;
  std::string rhs;   // empty when free
  bool introduced = false, defined = false;
};

struct OArray {
  std::vector<std::string> elements;  // identifiers or literals
};

struct OCon {
  std::string name;
  std::string args;
  std::vector<std::string> anns;
};

double dom_size(const std::string& d, std::string& type) {
  const double unbounded = 4294967296.0;
  if (d == "bool") return type = "bool", 2;
  if (d == "int") return type = "int", unbounded;
  if (d == "float") return type = "float", unbounded;
  if (starts_with(d, "set of")) {
    type = "set";
    std::string inner = trim(d.substr(6));
    std::string t;
    double n = dom_size(inner, t);
    return std::pow(2.0, n);
  }
  if (d[0] == '{') {
    type = "int";
    std::set<long long> vals;
    for (auto& p : split_top(d.substr(1, d.size() - 2), ',')) vals.insert(std::stoll(p));
    return static_cast<double>(vals.size());
  }
  auto dd = d.find("..");
  std::string lo = trim(d.substr(0, dd)), hi = trim(d.substr(dd + 2));
  if (lo.find_first_of(".eE") != std::string::npos || hi.find_first_of(".eE") != std::string::npos) {
    type = "float";
    return std::stod(hi) - std::stod(lo);
  }
  type = "int";
  return static_cast<double>(std::stoll(hi) - std::stoll(lo) + 1);
}

struct Stats {
  double min = -1, max = -1, avg = -1, cv = -1, ent = -1;
};

Stats summary(const std::vector<double>& xs) {
  Stats s;
  if (xs.empty()) return s;
  s.min = *std::min_element(xs.begin(), xs.end());
  s.max = *std::max_element(xs.begin(), xs.end());
  double sum = 0;
  for (double x : xs) sum += x;
  const double n = static_cast<double>(xs.size());
  s.avg = sum / n;
  double var = 0;
  for (double x : xs) var += (x - s.avg) * (x - s.avg);
  const double sd = std::sqrt(var / n);
  s.cv = s.avg == 0 ? -1 : sd / s.avg;
  std::map<double, int> freq;
  for (double x : xs) ++freq[x];
  s.ent = 0;
  for (auto& [v, k] : freq) {
    double p = k / n;
    s.ent -= p * std::log(p);
  }
  return s;
}

double div_or(double a, double b) { return b == 0 ? -1 : a / b; }
double lg(double x) { return x > 0 ? std::log(x) : 0; }

void push(std::vector<double>& out, const Stats& s) {
  out.insert(out.end(), {s.min, s.max, s.avg, s.cv, s.ent});
}

std::vector<std::pair<std::string, std::string>> load_classes() {
  std::ifstream in(std::string(FZFEAT_CONFIG_DIR) + "/global_classes.txt");
  if (!in) throw std::runtime_error("oracle: cannot read global class table");
  std::vector<std::pair<std::string, std::string>> out;
  std::string line;
  while (std::getline(in, line)) {
    line = line.substr(0, line.find('#'));
    std::istringstream f(line);
    std::string a, b;
    if (f >> a >> b) out.emplace_back(a, b);
  }
  return out;
}

const char* kClassOrder[27] = {"all_diff",  "all_equal",  "among",    "array_int",  "array_set",   "at_least_most",
                               "bin_packing", "bool_lin", "circuit",  "count",      "cumulative",  "decr_inc",
                               "diffn",     "disjoint",   "global_card", "link_set", "inverse",    "max_min_int",
                               "member",    "nvalue",     "precede",  "range",      "regular",     "schedule",
                               "set_weights", "sort",     "table"};

class Oracle {
 public:
  explicit Oracle(const std::string& text) {
    for (auto& st : split_statements(strip_comments(text))) statement(st);
  }

  std::vector<double> features() {
    resolve_constraints();
    std::vector<double> f;
    variables(f);
    domains(f);
    constraints(f);
    globals(f);
    graphs(f);
    solving(f);
    objective(f);
    return f;
  }

 private:
  std::vector<OVar> vars_;
  std::map<std::string, std::size_t> var_at_;
  std::map<std::string, OArray> arrays_;
  std::set<std::string> params_;
  std::vector<OCon> cons_;
  std::string goal_ = "satisfy", objective_;
  std::vector<std::string> solve_anns_;

  // Per free variable (index into free_).
  std::vector<std::size_t> free_;
  std::map<std::size_t, std::size_t> slot_;
  // Constraints in C: variable slot lists and arities.
  std::vector<std::vector<std::size_t>> con_vars_;
  std::vector<double> con_ari_;
  std::vector<std::size_t> con_decl_;
  std::vector<double> deg_;
  bool vg_ok_ = false;
  std::vector<double> vg_deg_, vg_ecc_;

  void statement(const std::string& st) {
    if (starts_with(st, "predicate")) return;
    if (starts_with(st, "constraint")) {
      auto [head, anns] = split_annotations(trim(st.substr(10)));
      OCon c;
      auto p = head.find('(');
      c.name = trim(head.substr(0, p));
      c.args = head.substr(p + 1, head.rfind(')') - p - 1);
      c.anns = anns;
      cons_.push_back(c);
      return;
    }
    if (starts_with(st, "solve")) {
      auto [head, anns] = split_annotations(trim(st.substr(5)));
      // Annotations precede the goal: "solve :: a :: b satisfy".
      std::string goal_text = head;
      if (!anns.empty()) {
        std::string last = anns.back();
        for (auto g : {"satisfy", "minimize", "maximize"}) {
          auto at = last.rfind(g);
          if (at != std::string::npos && (at == 0 || last[at - 1] == ' ' || last[at - 1] == ')')) {
            goal_text = last.substr(at);
            anns.back() = trim(last.substr(0, at));
            break;
          }
        }
      }
      solve_anns_ = anns;
      std::istringstream g(goal_text);
      g >> goal_ >> objective_;
      return;
    }
    // Declarations: "<type>: name [:: anns] [= rhs]"
    auto colon = find_decl_colon(st);
    std::string type = trim(st.substr(0, colon));
    std::string rest = trim(st.substr(colon + 1));
    std::string rhs;
    if (auto eq = rest.find('='); eq != std::string::npos) {
      rhs = trim(rest.substr(eq + 1));
      rest = trim(rest.substr(0, eq));
    }
    auto [name, anns] = split_annotations(rest);
    bool intro = false, defd = false;
    for (auto& a : anns) {
      if (ann_head(a) == "var_is_introduced") intro = true;
      if (ann_head(a) == "is_defined_var") defd = true;
    }
    if (starts_with(type, "array")) {
      auto of = type.find(" of ");
      std::string range = type.substr(type.find('[') + 1, type.find(']') - type.find('[') - 1);
      std::string elem = trim(type.substr(of + 4));
      if (!starts_with(elem, "var ")) {
        params_.insert(name);
        return;
      }
      OArray arr;
      if (!rhs.empty()) {
        for (auto& e : split_top(rhs.substr(1, rhs.size() - 2), ',')) arr.elements.push_back(e);
      } else {
        auto dd = range.find("..");
        long long lo = std::stoll(range.substr(0, dd)), hi = std::stoll(range.substr(dd + 2));
        for (long long i = lo; i <= hi; ++i) {
          OVar v;
          v.name = name + "[" + std::to_string(i) + "]";
          v.dom = dom_size(trim(elem.substr(4)), v.type);
          v.introduced = intro;
          v.defined = defd;
          var_at_[v.name] = vars_.size();
          vars_.push_back(v);
          arr.elements.push_back(v.name);
        }
      }
      arrays_[name] = arr;
      return;
    }
    if (!starts_with(type, "var ")) {
      params_.insert(name);
      return;
    }
    OVar v;
    v.name = name;
    v.dom = dom_size(trim(type.substr(4)), v.type);
    v.rhs = rhs;
    v.introduced = intro;
    v.defined = defd;
    var_at_[name] = vars_.size();
    vars_.push_back(v);
  }

  static std::size_t find_decl_colon(const std::string& st) {
    int depth = 0;
    for (std::size_t i = 0; i < st.size(); ++i) {
      char c = st[i];
      if (c == '(' || c == '[' || c == '{') ++depth;
      if (c == ')' || c == ']' || c == '}') --depth;
      if (c == ':' && depth == 0 && (i + 1 >= st.size() || st[i + 1] != ':') && (i == 0 || st[i - 1] != ':'))
        return i;
    }
    throw std::runtime_error("oracle: cannot parse declaration: " + st);
  }

  // Follow aliases; returns the root variable index or -1 for non-variables.
  long root_of(const std::string& token) const {
    std::string t = trim(token);
    for (int hops = 0; hops < 1000; ++hops) {
      if (t.empty() || !is_ident_start(t[0]) || t == "true" || t == "false") return -1;
      auto br = t.find('[');
      if (br != std::string::npos) {
        std::string arr = t.substr(0, br);
        long long idx = std::stoll(t.substr(br + 1, t.find(']') - br - 1));
        auto it = arrays_.find(arr);
        if (it == arrays_.end()) return -1;
        t = trim(it->second.elements.at(static_cast<std::size_t>(idx - 1)));
        if (var_at_.count(t) && t.find('[') != std::string::npos) {
          // Owned element variable name like "a[2]".
          const OVar& v = vars_[var_at_.at(t)];
          if (v.rhs.empty()) return static_cast<long>(var_at_.at(t));
        }
        continue;
      }
      auto it = var_at_.find(t);
      if (it == var_at_.end()) return -1;
      const OVar& v = vars_[it->second];
      if (v.rhs.empty()) return static_cast<long>(it->second);
      if (!is_ident_start(v.rhs[0]) || v.rhs == "true" || v.rhs == "false" || params_.count(v.rhs)) return -1;
      t = v.rhs;
    }
    throw std::runtime_error("oracle: alias cycle");
  }

  void occurrences(const std::string& arg, std::vector<long>& out) const {
    std::string a = trim(arg);
    if (a.empty()) return;
    if (a[0] == '[') {
      for (auto& e : split_top(a.substr(1, a.size() - 2), ',')) occurrences(e, out);
      return;
    }
    if (!is_ident_start(a[0])) return;
    if (a.find('[') == std::string::npos && arrays_.count(a)) {
      for (auto& e : arrays_.at(a).elements) occurrences(e, out);
      return;
    }
    long r = root_of(a);
    if (r >= 0) out.push_back(r);
  }

  void resolve_constraints() {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].rhs.empty()) {
        slot_[i] = free_.size();
        free_.push_back(i);
      }
    deg_.assign(free_.size(), 0);
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      std::vector<long> occ;
      for (auto& a : split_top(cons_[c].args, ',')) occurrences(a, occ);
      std::vector<std::size_t> distinct;
      for (long v : occ) {
        std::size_t s = slot_.at(static_cast<std::size_t>(v));
        if (std::find(distinct.begin(), distinct.end(), s) == distinct.end()) distinct.push_back(s);
      }
      if (distinct.empty()) continue;
      for (auto s : distinct) deg_[s] += 1;
      con_vars_.push_back(distinct);
      con_ari_.push_back(static_cast<double>(occ.size()));
      con_decl_.push_back(c);
    }
  }

  double nv() const { return static_cast<double>(free_.size()); }
  double nc() const { return static_cast<double>(con_vars_.size()); }
  double dom(std::size_t slot) const { return vars_[free_[slot]].dom; }

  void variables(std::vector<double>& f) const {
    double cv = 0, av = 0, ndef = 0, nint = 0;
    for (auto& v : vars_) {
      if (!v.rhs.empty()) {
        bool alias = is_ident_start(v.rhs[0]) && v.rhs != "true" && v.rhs != "false" && !params_.count(v.rhs);
        (alias ? av : cv) += 1;
      }
      ndef += v.defined;
      nint += v.introduced;
    }
    double logdom = 0, logdeg = 0, sdom = 0, sdeg = 0, sdd = 0;
    std::vector<double> doms, degs, dd;
    for (std::size_t s = 0; s < free_.size(); ++s) {
      logdom += lg(dom(s));
      sdom += dom(s);
      sdeg += deg_[s];
      doms.push_back(dom(s));
      degs.push_back(deg_[s]);
      if (deg_[s] != 0) {
        logdeg += std::log(deg_[s]);
        sdd += dom(s) / deg_[s];
        dd.push_back(dom(s) / deg_[s]);
      }
    }
    f.insert(f.end(), {nv(), cv, av, div_or(av + cv, nv()), div_or(nv(), nc()), ndef, nint, logdom, logdeg, sdom, sdeg,
                       sdd});
    push(f, summary(doms));
    push(f, summary(degs));
    push(f, summary(dd));
  }

  void domains(std::vector<double>& f) const {
    for (auto t : {"bool", "float", "int", "set"}) {
      double n = 0;
      for (auto i : free_) n += vars_[i].type == t;
      f.push_back(n);
      f.push_back(div_or(n, nv()));
    }
    for (auto p : {"array", "bool", "int", "float", "set"}) {
      double n = 0;
      for (auto c : con_decl_) n += cons_[c].name.substr(0, cons_[c].name.find('_')) == p;
      f.push_back(n);
      f.push_back(div_or(n, nc()));
    }
  }

  // log of the exact product when it is an integer below 2^53, otherwise the
  // sum of sorted logs.
  double cdom(std::size_t c) const {
    double product = 1;
    bool exact = true;
    std::vector<double> logs;
    for (auto s : con_vars_[c]) {
      double d = dom(s);
      logs.push_back(lg(d));
      if (d < 1 || d != std::floor(d)) exact = false;
      else product *= d;
    }
    if (exact && product <= 9007199254740992.0) return std::log(product);
    std::sort(logs.begin(), logs.end());
    double sum = 0;
    for (double l : logs) sum += l;
    return sum;
  }

  void constraints(std::vector<double>& f) const {
    f.push_back(nc());
    f.push_back(div_or(nc(), nv()));
    const std::vector<std::vector<std::string>> groups = {{"bounds", "boundsZ"}, {"boundsR"}, {"boundsD"}, {"domain"},
                                                          {"priority"}};
    for (auto& g : groups) {
      double n = 0;
      for (auto c : con_decl_) {
        bool hit = false;
        for (auto& a : cons_[c].anns)
          for (auto& name : g) hit = hit || ann_head(a) == name;
        n += hit;
      }
      f.push_back(n);
    }
    double sdom = 0, logdeg = 0, sari = 0, sdd = 0;
    std::vector<double> doms, degs, dd;
    for (std::size_t c = 0; c < con_vars_.size(); ++c) {
      double d = cdom(c), g = static_cast<double>(con_vars_[c].size());
      sdom += d;
      logdeg += std::log(g);
      sari += con_ari_[c];
      sdd += d / g;
      doms.push_back(d);
      degs.push_back(g);
      dd.push_back(d / g);
    }
    f.insert(f.end(), {sdom, logdeg, sdom, sari, sdd});
    push(f, summary(doms));
    push(f, summary(degs));
    push(f, summary(dd));
  }

  void globals(std::vector<double>& f) const {
    auto table = load_classes();
    std::vector<double> per(27, 0);
    double total = 0;
    for (auto c : con_decl_)
      for (auto& [name, cls] : table)
        if (name == cons_[c].name) {
          for (int k = 0; k < 27; ++k)
            if (cls == kClassOrder[k]) per[static_cast<std::size_t>(k)] += 1;
          total += 1;
        }
    f.push_back(total);
    f.push_back(div_or(total, nc()));
    f.insert(f.end(), per.begin(), per.end());
  }

  void graphs(std::vector<double>& f) {
    const std::size_t m = con_vars_.size(), n = free_.size();
    std::vector<std::vector<int>> cg(m, std::vector<int>(m, 0)), vg(n, std::vector<int>(n, 0));
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        for (auto x : con_vars_[a])
          if (std::find(con_vars_[b].begin(), con_vars_[b].end(), x) != con_vars_[b].end()) cg[a][b] = 1;
      }
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (x == y) continue;
        for (auto& vs : con_vars_)
          if (std::find(vs.begin(), vs.end(), x) != vs.end() && std::find(vs.begin(), vs.end(), y) != vs.end())
            vg[x][y] = 1;
      }
    auto degs = [](const std::vector<std::vector<int>>& g) {
      std::vector<double> d;
      for (auto& row : g) {
        double k = 0;
        for (int e : row) k += e;
        d.push_back(k);
      }
      return d;
    };
    push(f, summary(degs(cg)));
    push(f, summary(oracle_clustering(cg)));
    vg_deg_ = degs(vg);
    vg_ecc_ = oracle_eccentricity(vg);
    vg_ok_ = true;
    push(f, summary(vg_deg_));
    push(f, summary(vg_ecc_));
  }

  void solving(std::vector<double>& f) const {
    // Flatten seq_search by scanning for every *_search( call.
    double labeled = 0;
    std::vector<double> types(3, 0), varc(3, 0), valc(3, 0);
    std::string all;
    for (auto& a : solve_anns_) all += a + " ";
    const std::vector<std::string> kinds = {"bool_search", "int_search", "set_search", "float_search"};
    for (std::size_t pos = 0; pos < all.size(); ++pos) {
      for (std::size_t k = 0; k < kinds.size(); ++k) {
        const std::string key = kinds[k] + "(";
        if (all.compare(pos, key.size(), key) != 0) continue;
        if (pos > 0 && (std::isalnum(static_cast<unsigned char>(all[pos - 1])) || all[pos - 1] == '_')) continue;
        int depth = 0;
        std::size_t end = pos + key.size() - 1;
        for (; end < all.size(); ++end) {
          if (all[end] == '(' || all[end] == '[') ++depth;
          if (all[end] == ')' || all[end] == ']') --depth;
          if (depth == 0) break;
        }
        auto args = split_top(all.substr(pos + key.size(), end - pos - key.size()), ',');
        const std::string& vs = args.at(0);
        if (vs[0] == '[') labeled += static_cast<double>(split_top(vs.substr(1, vs.size() - 2), ',').size());
        else if (arrays_.count(vs)) labeled += static_cast<double>(arrays_.at(vs).elements.size());
        else labeled += 1;
        const std::size_t at = k == 3 ? 2 : 1;
        if (k < 3) types[k] += 1;
        const std::string& vc = args.at(at);
        varc[vc == "input_order" ? 0 : vc == "first_fail" ? 1 : 2] += 1;
        const std::string& lc = args.at(at + 1);
        valc[lc == "indomain_min" ? 0 : lc == "indomain_max" ? 1 : 2] += 1;
      }
    }
    f.push_back(labeled);
    f.push_back(goal_ == "satisfy" ? 1 : goal_ == "minimize" ? 2 : 3);
    f.insert(f.end(), types.begin(), types.end());
    f.insert(f.end(), varc.begin(), varc.end());
    f.insert(f.end(), valc.begin(), valc.end());
  }

  void objective(std::vector<double>& f) const {
    std::vector<double> o(12, -1);
    long r = goal_ == "satisfy" ? -1 : root_of(objective_);
    if (r >= 0) {
      std::size_t s = slot_.at(static_cast<std::size_t>(r));
      auto musd = [](const std::vector<double>& xs) {
        double sum = 0;
        for (double x : xs) sum += x;
        double mu = xs.empty() ? 0 : sum / static_cast<double>(xs.size());
        double var = 0;
        for (double x : xs) var += (x - mu) * (x - mu);
        return std::pair{mu, xs.empty() ? 0 : std::sqrt(var / static_cast<double>(xs.size()))};
      };
      std::vector<double> doms;
      for (std::size_t k = 0; k < free_.size(); ++k) doms.push_back(dom(k));
      auto [mdom, sdom] = musd(doms);
      auto [mdeg, sdeg] = musd(deg_);
      const double d = dom(s), g = deg_[s];
      o = {d, div_or(d, mdom), div_or(d - mdom, sdom), div_or(d, g), g, div_or(g, mdeg), div_or(g - mdeg, sdeg),
           div_or(g, nc()), -1, -1, -1, -1};
      if (vg_ok_) {
        const double de = vg_deg_[s], di = vg_ecc_[s];
        o[8] = de;
        o[9] = di;
        o[10] = div_or(de, di);
        o[11] = div_or(di, de);
      }
    }
    f.insert(f.end(), o.begin(), o.end());
  }
};

}  // namespace

std::vector<double> oracle_clustering(const std::vector<std::vector<int>>& g) {
  const std::size_t n = g.size();
  std::vector<double> out(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    double d = 0;
    for (std::size_t u = 0; u < n; ++u) d += g[v][u];
    if (d < 2) continue;
    double tri = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (g[v][a] && g[v][b] && g[a][b]) tri += 1;
    out[v] = 2 * tri / (d * (d - 1));
  }
  return out;
}

std::vector<double> oracle_eccentricity(const std::vector<std::vector<int>>& g) {
  const std::size_t n = g.size();
  const long inf = 1L << 40;
  std::vector<std::vector<long>> d(n, std::vector<long>(n, inf));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i == j) d[i][j] = 0;
      else if (g[i][j]) d[i][j] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  std::vector<double> out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (d[i][j] < inf) out[i] = std::max(out[i], static_cast<double>(d[i][j]));
  return out;
}

std::vector<double> oracle_static_features(const std::string& fzn_text) { return Oracle(fzn_text).features(); }

}  // namespace fzfeat::testing
