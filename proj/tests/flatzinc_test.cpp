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

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "fzfeat/flatzinc.hpp"
#include "fzfeat/model.hpp"
#include "support/random_model.hpp"

namespace fzfeat {
namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(FZFEAT_FIXTURE_DIR) + "/" + name);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(ParseFlatzinc, MinimalProgram) {
  Model m = load_flatzinc("var 1..3: x; constraint int_le(x,2); solve satisfy;");
  ModelIndex idx(m);
  EXPECT_EQ(idx.num_vars(), 1u);
  EXPECT_EQ(idx.num_constraints(), 1u);
  EXPECT_EQ(m.goal().kind, SolveGoal::Kind::Satisfy);
  EXPECT_EQ(idx.dom(0), 3.0);
}

TEST(ParseFlatzinc, ConstantBinding) {
  Model m = load_flatzinc("var int: y = 5; solve satisfy;");
  ASSERT_EQ(m.variables().size(), 1u);
  EXPECT_TRUE(m.variables()[0].binding.is_constant());
  auto c = model_counts(m);
  EXPECT_EQ(c.n_vars, 0u);
  EXPECT_EQ(c.n_constants, 1u);
}

TEST(ParseFlatzinc, TwentyLineFixtureFieldByField) {
  Model m = load_flatzinc(read_fixture("parse_twenty.fzn"));

  ASSERT_EQ(m.predicates().size(), 1u);
  EXPECT_EQ(m.predicates()[0].name, "my_global");

  ASSERT_EQ(m.parameters().size(), 2u);
  EXPECT_EQ(m.parameters()[0].name, "n");
  EXPECT_EQ(m.parameters()[0].value, Term::integer(3));
  EXPECT_EQ(m.parameters()[1].value, Term::boolean(true));

  // a b c d e f g h ys[1] ys[2]
  const auto& vars = m.variables();
  ASSERT_EQ(vars.size(), 10u);
  EXPECT_EQ(vars[0].name, "a");
  EXPECT_EQ(vars[0].domain, Domain::int_range(1, 9));
  EXPECT_TRUE(vars[0].binding.is_free());
  ASSERT_EQ(vars[0].annotations.size(), 1u);
  EXPECT_EQ(vars[0].annotations[0], Term::ident("output_var"));

  EXPECT_EQ(vars[1].name, "b");
  ASSERT_TRUE(vars[1].binding.is_alias());
  EXPECT_EQ(std::get<Binding::Alias>(vars[1].binding.value).target, Term::ident("a"));

  EXPECT_TRUE(vars[2].is_introduced);
  EXPECT_FALSE(vars[2].is_defined);
  EXPECT_TRUE(vars[3].is_defined);
  EXPECT_EQ(vars[4].domain, Domain::boolean());
  EXPECT_EQ(vars[5].domain, Domain::float_range(0.0, 1.5));
  EXPECT_EQ(vars[6].domain, Domain::set_of_values({1, 2, 4}));
  EXPECT_EQ(vars[6].domain.size(), 8.0);
  ASSERT_TRUE(vars[7].binding.is_constant());
  EXPECT_EQ(std::get<Binding::Constant>(vars[7].binding.value).value, Term::integer(4));
  EXPECT_EQ(vars[8].name, "ys[1]");
  EXPECT_EQ(vars[8].owner, std::optional<std::string>("ys"));
  EXPECT_EQ(vars[9].domain, Domain::int_range(0, 5));

  ASSERT_EQ(m.arrays().size(), 3u);
  EXPECT_EQ(m.arrays()[0].name, "coeffs");
  EXPECT_FALSE(m.arrays()[0].is_var);
  EXPECT_EQ(m.arrays()[1].name, "xs");
  EXPECT_EQ(m.arrays()[1].elements,
            (std::vector<Term>{Term::ident("a"), Term::ident("c"), Term::ident("d")}));
  EXPECT_TRUE(m.arrays()[2].owns_elements);

  const auto& cons = m.constraints();
  ASSERT_EQ(cons.size(), 5u);
  EXPECT_EQ(cons[0].name, "int_lin_eq");
  EXPECT_EQ(cons[0].args, (std::vector<Term>{Term::ident("coeffs"), Term::ident("xs"), Term::integer(10)}));
  EXPECT_EQ(cons[0].annotations, std::vector<Term>{Term::ident("domain")});
  // After resolution the alias b is replaced by its root a.
  EXPECT_EQ(cons[1].args, (std::vector<Term>{Term::ident("a"), Term::ident("d")}));
  EXPECT_EQ(cons[3].name, "my_global");

  EXPECT_EQ(m.goal().kind, SolveGoal::Kind::Minimize);
  EXPECT_EQ(m.goal().objective, std::optional<Term>(Term::ident("d")));
  auto searches = search_annotations(m.goal());
  ASSERT_EQ(searches.size(), 1u);
  EXPECT_EQ(searches[0].type, "int_search");
  EXPECT_EQ(searches[0].variable_choice, "first_fail");
  EXPECT_EQ(searches[0].value_choice, "indomain_min");
  EXPECT_TRUE(vars[0].is_labeled);
  EXPECT_FALSE(vars[4].is_labeled);

  auto c = model_counts(m);
  EXPECT_EQ(c.n_vars, 8u);
  EXPECT_EQ(c.n_constants, 1u);
  EXPECT_EQ(c.n_aliases, 1u);
}

TEST(ParseFlatzinc, SyntaxErrorReportsLineAndColumn) {
  try {
    parse_flatzinc("var 1..3: x;\nconstraint int_le(x 2);\nsolve satisfy;");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 21);
  }
}

TEST(ParseFlatzinc, DuplicateIdentifier) {
  EXPECT_THROW(parse_flatzinc("var 1..3: x; var bool: x; solve satisfy;"), ModelError);
}

TEST(ParseFlatzinc, MissingSolveItem) {
  EXPECT_THROW(parse_flatzinc("var 1..3: x; constraint int_le(x, 2);"), ModelError);
}

TEST(ParseFlatzinc, TypeMismatch) {
  EXPECT_THROW(parse_flatzinc("var bool: x = 3; solve satisfy;"), ModelError);
  EXPECT_THROW(parse_flatzinc("array [1..2] of var int: xs = [1]; solve satisfy;"), ModelError);
  EXPECT_THROW(parse_flatzinc("int: n = 2; var 1..3: x; int: m = x; solve satisfy;"), ModelError);
}

TEST(ParseFlatzinc, UndefinedIdentifier) {
  EXPECT_THROW(parse_flatzinc("constraint int_le(x, 2); solve satisfy;"), ModelError);
}

TEST(ParseFlatzinc, UnknownPredicateIsKept) {
  Model m = load_flatzinc("var 1..3: x; constraint solver_special(x, [1, 2]) :: foo(bar); solve satisfy;");
  ASSERT_EQ(m.constraints().size(), 1u);
  EXPECT_EQ(m.constraints()[0].name, "solver_special");
}

TEST(ResolveAliases, SingleLink) {
  Model m = load_flatzinc("var 1..3: x1; var 1..3: x2 = x1; constraint int_le(x2, 2); solve satisfy;");
  EXPECT_EQ(m.constraints()[0].args[0], Term::ident("x1"));
  ModelIndex idx(m);
  EXPECT_EQ(idx.degree(0), 1u);
  EXPECT_EQ(idx.counts().n_aliases, 1u);
}

TEST(ResolveAliases, TransitiveChain) {
  Model m = load_flatzinc(
      "var 1..3: x1; var 1..3: x2 = x1; var 1..3: x3 = x2; constraint int_le(x3, x2); solve satisfy;");
  EXPECT_EQ(m.constraints()[0].args, (std::vector<Term>{Term::ident("x1"), Term::ident("x1")}));
  EXPECT_EQ(std::get<Binding::Alias>(m.variables()[2].binding.value).target, Term::ident("x1"));
}

TEST(ResolveAliases, TwoCycleIsAnError) {
  Model m;
  Variable a;
  a.name = "x1";
  a.domain = Domain::int_range(1, 3);
  a.binding.value = Binding::Alias{Term::ident("x2")};
  Variable b = a;
  b.name = "x2";
  b.binding.value = Binding::Alias{Term::ident("x1")};
  m.add_variable(a);
  m.add_variable(b);
  try {
    resolve_aliases(m);
    FAIL() << "expected a cycle error";
  } catch (const AliasCycleError& e) {
    ASSERT_FALSE(e.cycle().empty());
    EXPECT_NE(std::string(e.what()).find("x1"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("x2"), std::string::npos);
  }
}

TEST(ModelCountsTest, EmptyModel) {
  auto c = model_counts(load_flatzinc("solve satisfy;"));
  EXPECT_EQ(c.n_vars, 0u);
  EXPECT_EQ(c.n_constants, 0u);
  EXPECT_EQ(c.n_aliases, 0u);
  EXPECT_EQ(c.n_constraints, 0u);
  EXPECT_EQ(c.n_defined, 0u);
  EXPECT_EQ(c.n_introduced, 0u);
}

TEST(ModelCountsTest, FreeConstantAlias) {
  auto c = model_counts(load_flatzinc(
      "var 1..3: a; var 1..3: b; var bool: c; var int: k = 2; var 1..3: d = a; "
      "constraint int_le(a, b); solve satisfy;"));
  EXPECT_EQ(c.n_vars, 3u);
  EXPECT_EQ(c.n_constants, 1u);
  EXPECT_EQ(c.n_aliases, 1u);
}

TEST(ModelCountsTest, IntroducedAndDefined) {
  auto c = model_counts(load_flatzinc(
      "var 1..3: a :: var_is_introduced; var 1..3: b :: var_is_introduced :: is_defined_var; var 1..3: c;"
      "constraint int_le(a, b); solve satisfy;"));
  EXPECT_EQ(c.n_introduced, 2u);
  EXPECT_EQ(c.n_defined, 1u);
}

TEST(ModelIndexTest, ArityAndDegree) {
  Model m = load_flatzinc(
      "var 1..3: a; var 1..3: b; var int: k = 1; array [1..3] of var int: xs = [a, b, a];"
      "constraint int_lin_eq([1, 1, 1, 1], [a, b, k, a], 3); constraint foo(xs, xs, 4); constraint int_le(1, 2);"
      "solve satisfy;");
  ModelIndex idx(m);
  ASSERT_EQ(idx.num_constraints(), 2u);
  EXPECT_EQ(idx.constraints()[0].arity, 3u);
  EXPECT_EQ(idx.constraints()[0].degree(), 2u);
  EXPECT_EQ(idx.constraints()[1].arity, 6u);
  EXPECT_EQ(idx.constraints()[1].degree(), 2u);
}

TEST(DomainTest, Sizes) {
  EXPECT_EQ(Domain::boolean().size(), 2.0);
  EXPECT_EQ(Domain::int_range(-2, 2).size(), 5.0);
  EXPECT_EQ(Domain::int_set({1, 5, 9}).size(), 3.0);
  EXPECT_EQ(Domain::set_of_range(1, 5).size(), 32.0);
  EXPECT_EQ(Domain::float_range(0.5, 3.0).size(), 2.5);
  EXPECT_EQ(Domain::unbounded_int().size(), kUnboundedDomainSize);
  EXPECT_EQ(Domain::unbounded_float().size(), kUnboundedDomainSize);
}

class FixtureRoundTrip : public ::testing::TestWithParam<const char*> {};

TEST_P(FixtureRoundTrip, PrintParseFixpoint) {
  Model m = parse_flatzinc(read_fixture(GetParam()));
  std::string once = print_flatzinc(m);
  Model again = parse_flatzinc(once);
  EXPECT_EQ(again, m);
  EXPECT_EQ(print_flatzinc(again), once);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, FixtureRoundTrip,
                         ::testing::Values("golden_01.fzn", "golden_02.fzn", "golden_03.fzn", "golden_04.fzn",
                                           "golden_05.fzn", "parse_twenty.fzn", "queens_6.fzn", "coloring_12.fzn",
                                           "knapsack_10.fzn", "sched_8.fzn", "sat_15.fzn", "sets.fzn", "floats.fzn",
                                           "alias_chain.fzn", "circuit_10.fzn", "regular_lex.fzn", "empty.fzn",
                                           "unconstrained.fzn"));

TEST(ModelProperties, RandomModels) {
  std::mt19937 rng(20260415);
  for (int trial = 0; trial < 300; ++trial) {
    testing::GenModel g = testing::random_model(rng);
    const std::string text = g.render();
    SCOPED_TRACE(text);
    Model raw = parse_flatzinc(text);

    // Round trip.
    EXPECT_EQ(parse_flatzinc(print_flatzinc(raw)), raw);

    Model m = resolve_aliases(raw);
    ModelIndex idx(m);
    const auto& c = idx.counts();
    EXPECT_EQ(c.n_vars + c.n_constants + c.n_aliases, m.variables().size());

    // deg(c) <= ari(c), equality iff no repeated variable.
    for (const auto& info : idx.constraints()) {
      std::vector<std::uint32_t> occ;
      for (const auto& a : m.constraints()[info.decl].args) idx.collect(a, occ);
      EXPECT_EQ(occ.size(), info.arity);
      EXPECT_LE(info.degree(), info.arity);
      std::sort(occ.begin(), occ.end());
      const bool repeats = std::adjacent_find(occ.begin(), occ.end()) != occ.end();
      EXPECT_EQ(info.degree() == info.arity, !repeats);
    }

    // Dropping any constraint never raises a variable's degree.
    if (!m.constraints().empty()) {
      std::size_t drop = static_cast<std::size_t>(rng() % m.constraints().size());
      Model smaller;
      for (const auto& v : m.variables()) smaller.add_variable(v);
      for (const auto& p : m.parameters()) smaller.add_parameter(p);
      for (const auto& a : m.arrays()) smaller.add_array(a);
      for (std::size_t i = 0; i < m.constraints().size(); ++i)
        if (i != drop) smaller.add_constraint(m.constraints()[i]);
      smaller.set_goal(m.goal());
      ModelIndex sidx(smaller);
      ASSERT_EQ(sidx.num_vars(), idx.num_vars());
      for (std::uint32_t v = 0; v < idx.num_vars(); ++v) EXPECT_LE(sidx.degree(v), idx.degree(v));
    }
  }
}

}  // namespace
}  // namespace fzfeat
