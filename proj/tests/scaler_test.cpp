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

#include <cstdio>
#include <filesystem>
#include <random>

#include "fzfeat/model.hpp"
#include "fzfeat/scaler.hpp"

namespace fzfeat {
namespace {

using Matrix = std::vector<std::vector<double>>;

Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, std::size_t constant_every = 0) {
  std::uniform_real_distribution<double> u(-50, 500);
  Matrix m(rows, std::vector<double>(cols));
  for (std::size_t j = 0; j < cols; ++j) {
    bool constant = constant_every && j % constant_every == 0;
    double c = u(rng);
    for (std::size_t i = 0; i < rows; ++i) m[i][j] = constant ? c : u(rng);
  }
  return m;
}

TEST(Scaler, FortyOneConstantColumnsKeep114) {
  std::mt19937 rng(3);
  Matrix m = random_matrix(rng, 40, 155);
  std::vector<std::size_t> constant_cols;
  for (std::size_t j = 0; j < 155 && constant_cols.size() < 41; j += 3) constant_cols.push_back(j);
  ASSERT_EQ(constant_cols.size(), 41u);
  for (auto j : constant_cols)
    for (auto& row : m) row[j] = j % 2 ? -1.0 : 7.5;
  auto s = Scaler::fit(m);
  EXPECT_EQ(s.kept().size(), 114u);
  for (auto j : constant_cols) EXPECT_FALSE(std::binary_search(s.kept().begin(), s.kept().end(), j));
  for (const auto& row : s.apply_rows(m))
    for (double v : row) {
      EXPECT_GE(v, -1.0);
      EXPECT_LE(v, 1.0);
    }
}

TEST(Scaler, AllConstantKeepsNothing) {
  Matrix m(5, std::vector<double>(155, -1.0));
  auto s = Scaler::fit(m);
  EXPECT_TRUE(s.kept().empty());
  EXPECT_TRUE(s.apply(m[0]).empty());
}

TEST(Scaler, LinearMapEndpointsAndMidpoint) {
  auto s = Scaler::fit({{2}, {6}});
  ASSERT_EQ(s.kept().size(), 1u);
  EXPECT_EQ(s.mins()[0], 2);
  EXPECT_EQ(s.maxs()[0], 6);
  EXPECT_EQ(s.apply({2.0})[0], -1);
  EXPECT_EQ(s.apply({6.0})[0], 1);
  EXPECT_EQ(s.apply({4.0})[0], 0);
  EXPECT_EQ(s.apply({5.0})[0], 0.5);
}

TEST(Scaler, ClampsOutOfRange) {
  auto s = Scaler::fit({{2, 0}, {6, 1}});
  EXPECT_EQ(s.apply({100.0, -3.0}), (std::vector<double>{1, -1}));
  EXPECT_EQ(s.apply({-100.0, 0.5}), (std::vector<double>{-1, 0}));
}

TEST(Scaler, SentinelsAreOrdinaryValues) {
  auto s = Scaler::fit({{-1}, {3}});
  ASSERT_EQ(s.kept().size(), 1u);
  EXPECT_EQ(s.apply({-1.0})[0], -1);
  EXPECT_EQ(s.apply({1.0})[0], 0);
}

TEST(Scaler, Errors) {
  EXPECT_THROW(Scaler::fit({}), Error);
  EXPECT_THROW(Scaler::fit({{1, 2}, {1}}), Error);
  auto s = Scaler::fit({{1, 2}, {3, 4}});
  EXPECT_THROW(s.apply(std::vector<double>{1}), Error);
}

TEST(Scaler, RandomMatricesStayInRange) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Matrix train = random_matrix(rng, 20, 30, 4);
    Matrix test = random_matrix(rng, 10, 30);
    auto s = Scaler::fit(train);
    for (const auto* m : {&train, &test})
      for (const auto& row : s.apply_rows(*m))
        for (double v : row) {
          EXPECT_GE(v, -1.0);
          EXPECT_LE(v, 1.0);
        }
    EXPECT_TRUE(std::is_sorted(s.kept().begin(), s.kept().end()));
    EXPECT_EQ(std::adjacent_find(s.kept().begin(), s.kept().end()), s.kept().end());
  }
}

TEST(Scaler, RowOrderInvariant) {
  std::mt19937 rng(5);
  Matrix m = random_matrix(rng, 25, 40, 5);
  Matrix shuffled = m;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  EXPECT_EQ(Scaler::fit(m), Scaler::fit(shuffled));
}

TEST(Scaler, IdempotentOnClampedRows) {
  std::mt19937 rng(8);
  Matrix train = random_matrix(rng, 15, 20, 6);
  Matrix test = random_matrix(rng, 15, 20);
  auto s = Scaler::fit(train);
  for (auto row : test) {
    auto direct = s.apply(row);
    for (std::size_t k = 0; k < s.kept().size(); ++k)
      row[s.kept()[k]] = std::clamp(row[s.kept()[k]], s.mins()[k], s.maxs()[k]);
    EXPECT_EQ(s.apply(row), direct);
  }
}

TEST(Scaler, SidecarRoundTrip) {
  std::mt19937 rng(21);
  Matrix m = random_matrix(rng, 10, 155, 4);
  auto s = Scaler::fit(m);
  auto back = Scaler::parse(s.serialize());
  EXPECT_EQ(back, s);
  EXPECT_EQ(back.apply(m[3]), s.apply(m[3]));
  auto path = (std::filesystem::temp_directory_path() / "fzfeat_scaler_test.txt").string();
  s.save(path);
  EXPECT_EQ(Scaler::load(path), s);
  std::remove(path.c_str());
  EXPECT_THROW(Scaler::parse("garbage"), Error);
  EXPECT_THROW(Scaler::parse("fzfeat-scaler 1\n3 1\n5 0 1\n"), Error);
  EXPECT_THROW(Scaler::parse("fzfeat-scaler 1\n3 1\n0 1 1\n"), Error);
}

std::size_t nearest(const Matrix& train, const std::vector<double>& q) {
  std::size_t best = 0;
  double best_d = -1;
  for (std::size_t i = 0; i < train.size(); ++i) {
    double d = 0;
    for (std::size_t j = 0; j < q.size(); ++j) d += (train[i][j] - q[j]) * (train[i][j] - q[j]);
    if (best_d < 0 || d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

TEST(Scaler, NearestNeighbourSurvivesAffineMaps) {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> scale(0.5, 10), shift(-100, 100);
  for (int trial = 0; trial < 30; ++trial) {
    Matrix train = random_matrix(rng, 30, 12, 5);
    Matrix queries = random_matrix(rng, 10, 12);
    Matrix train2 = train, queries2 = queries;
    for (std::size_t j = 0; j < 12; ++j) {
      double a = scale(rng), b = shift(rng);
      for (auto& r : train2) r[j] = a * r[j] + b;
      for (auto& r : queries2) r[j] = a * r[j] + b;
    }
    auto s1 = Scaler::fit(train), s2 = Scaler::fit(train2);
    auto t1 = s1.apply_rows(train), t2 = s2.apply_rows(train2);
    for (std::size_t q = 0; q < queries.size(); ++q)
      EXPECT_EQ(nearest(t1, s1.apply(queries[q])), nearest(t2, s2.apply(queries2[q])));
  }
}

}  // namespace
}  // namespace fzfeat
