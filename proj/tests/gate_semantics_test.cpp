// Copyright 2026 The qroute Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qroute/gate_semantics.hpp"

#include <gtest/gtest.h>

#include <set>

#include "gate_zoo.hpp"
#include "oracles.hpp"
#include "qroute/errors.hpp"

namespace qroute {
namespace {

template <std::size_t N>
void expect_table(const UnitaryMatrix &u,
                  const std::array<std::array<int, N>, N> &table) {
  ASSERT_EQ(u.rows(), static_cast<Eigen::Index>(N));
  ASSERT_EQ(u.cols(), static_cast<Eigen::Index>(N));
  for (std::size_t r = 0; r < N; ++r) {
    for (std::size_t c = 0; c < N; ++c) {
      EXPECT_EQ(u(r, c), std::complex<double>(table[r][c], 0.0))
          << "row " << r << " col " << c;
    }
  }
}

TEST(ApplyToBasis, PromoteOnActiveControl) {
  const WireSpec spec(2, 2);
  const Gate g = gates::promote(0, 1, 2);
  EXPECT_EQ(apply_to_basis(g, spec, {1, 0}), (BasisAssignment{1, 2}));
  EXPECT_EQ(apply_to_basis(g, spec, {1, 3}), (BasisAssignment{1, 1}));
  EXPECT_EQ(apply_to_basis(g, spec, {0, 3}), (BasisAssignment{0, 3}));
}

TEST(ApplyToBasis, DeliverFiresAboveThreshold) {
  const WireSpec spec(2, 2);
  const Gate g = gates::deliver(0, 1, 2, 1);
  EXPECT_EQ(apply_to_basis(g, spec, {3, 1}), (BasisAssignment{3, 0}));
  EXPECT_EQ(apply_to_basis(g, spec, {1, 1}), (BasisAssignment{1, 1}));
  // Targets above the modulus are left alone.
  EXPECT_EQ(apply_to_basis(g, spec, {3, 2}), (BasisAssignment{3, 2}));
}

TEST(ApplyToBasis, RelayLiftsTarget) {
  const WireSpec spec(2, 2);
  EXPECT_EQ(apply_to_basis(gates::relay(0, 1, 2), spec, {2, 0}),
            (BasisAssignment{2, 2}));
}

TEST(ApplyToBasis, NegatedSum) {
  const WireSpec spec(3, 2);
  const Gate g = Gate::negated_sum(0, 1, 3);
  EXPECT_EQ(apply_to_basis(g, spec, {2, 0}), (BasisAssignment{2, 1}));
  EXPECT_THROW((void)apply_to_basis(g, spec, {3, 0}), OutOfSubspaceError);
  EXPECT_THROW((void)apply_to_basis(g, spec, {0, 5}), OutOfSubspaceError);
}

TEST(ApplyToBasis, UncontrolledIncrementAndBlock) {
  const WireSpec spec(3, 3);
  EXPECT_EQ(apply_to_basis(Gate::increment_by(1, -1, 3), spec, {0, 0, 2}),
            (BasisAssignment{0, 2, 2}));
  EXPECT_EQ(apply_to_basis(Gate::block({0, 1, 2}), spec, {5, 4, 3}),
            (BasisAssignment{5, 4, 3}));
}

TEST(ApplyToBasis, RejectsBadAssignments) {
  const WireSpec spec(2, 2);
  EXPECT_THROW((void)apply_to_basis(gates::cnot(0, 1), spec, {0}),
               InvalidArgumentError);
  EXPECT_THROW((void)apply_to_basis(gates::cnot(0, 1), spec, {0, 4}),
               InvalidArgumentError);
}

TEST(GateMatrix, MatchesReferenceTables) {
  const WireSpec spec(2, 2);
  expect_table(gate_matrix(gates::promote(0, 1, 2), spec), oracle::kPromoteTable);
  expect_table(gate_matrix(gates::deliver(0, 1, 2, 1), spec),
               oracle::kDeliverTable);
  expect_table(gate_matrix(gates::relay(0, 1, 2), spec), oracle::kRelayTable);
  // Column "10" (index 4) lands on row "12" (index 6).
  EXPECT_EQ(gate_matrix(gates::promote(0, 1, 2), spec)(6, 4), 1.0);
}

TEST(GateMatrix, BlockIsIdentity) {
  const WireSpec spec(2, 2);
  const auto u = gate_matrix(Gate::block({0, 1}), spec);
  EXPECT_EQ(u.rows(), 16);
  EXPECT_TRUE(u.isIdentity(0.0));
}

TEST(GateMatrix, NegatedSumAtTwoIsCnot) {
  const WireSpec spec(2, 2);
  const auto ns = gate_matrix(Gate::negated_sum(0, 1, 2), spec);
  const auto cx = gate_matrix(gates::cnot(0, 1), spec);
  ASSERT_EQ(ns.rows(), 4);
  EXPECT_EQ(ns, cx);
  UnitaryMatrix expected = UnitaryMatrix::Zero(4, 4);
  expected(0, 0) = expected(1, 1) = expected(3, 2) = expected(2, 3) = 1.0;
  EXPECT_EQ(cx, expected);
}

TEST(IsPermutation, Cases) {
  EXPECT_TRUE(is_permutation(UnitaryMatrix::Identity(4, 4)));
  EXPECT_TRUE(is_permutation(gate_matrix(gates::relay(0, 1, 2), WireSpec(2, 2))));
  UnitaryMatrix dup = UnitaryMatrix::Identity(3, 3);
  dup.col(2) = dup.col(1);
  EXPECT_FALSE(is_permutation(dup));
  UnitaryMatrix phase = UnitaryMatrix::Identity(2, 2);
  phase(1, 1) = std::complex<double>(0.0, 1.0);
  EXPECT_FALSE(is_permutation(phase));
  EXPECT_FALSE(is_permutation(UnitaryMatrix::Identity(2, 3)));
}

TEST(GateProperties, BasisActionIsABijection) {
  for (int d = 2; d <= 4; ++d) {
    const WireSpec spec(d, 2);
    const int w = spec.working_dim();
    for (const Gate &g : testing_support::gate_zoo(d)) {
      std::set<BasisAssignment> images;
      std::size_t domain = 0;
      for (int x = 0; x < w; ++x) {
        for (int y = 0; y < w; ++y) {
          if (g.kind == GateKind::NegatedSum && (x >= d || y >= d)) {
            continue;
          }
          ++domain;
          const auto out = apply_to_basis(g, spec, {x, y});
          if (g.kind == GateKind::NegatedSum) {
            EXPECT_LT(out[0], d);
            EXPECT_LT(out[1], d);
          }
          images.insert(out);
        }
      }
      EXPECT_EQ(images.size(), domain) << to_string(g);
    }
  }
}

TEST(GateProperties, MatricesAreUnitaryPermutations) {
  for (int d = 2; d <= 4; ++d) {
    const WireSpec spec(d, 2);
    for (const Gate &g : testing_support::gate_zoo(d)) {
      const auto u = gate_matrix(g, spec);
      EXPECT_TRUE(is_permutation(u)) << to_string(g);
      const UnitaryMatrix gram = u.adjoint() * u;
      EXPECT_TRUE(gram.isIdentity(1e-12)) << to_string(g);
    }
  }
}

TEST(GateProperties, MatrixTimesInverseIsIdentity) {
  for (int d = 2; d <= 4; ++d) {
    const WireSpec spec(d, 2);
    for (const Gate &g : testing_support::gate_zoo(d)) {
      if (g.kind == GateKind::OpaqueBlock) {
        continue;
      }
      const UnitaryMatrix prod = gate_matrix(g, spec) * gate_matrix(g.inverse(), spec);
      EXPECT_TRUE(prod.isIdentity(1e-12)) << to_string(g);
    }
  }
}

TEST(GateProperties, MatrixAgreesWithBasisActionOnEveryColumn) {
  for (int d = 2; d <= 3; ++d) {
    const WireSpec spec(d, 2);
    for (const Gate &g : testing_support::gate_zoo(d)) {
      if (g.wires.size() != 2) {
        continue;
      }
      const auto u = gate_matrix(g, spec);
      const auto dims = local_dims(g, spec);
      for (Eigen::Index col = 0; col < u.cols(); ++col) {
        const BasisAssignment in{static_cast<int>(col / dims[1]),
                                 static_cast<int>(col % dims[1])};
        const auto out = apply_to_basis(g, spec, in);
        const Eigen::Index row = out[0] * dims[1] + out[1];
        EXPECT_EQ(u(row, col), 1.0) << to_string(g) << " col " << col;
      }
    }
  }
}

TEST(LocalDims, FollowReferenceLabels) {
  const WireSpec spec(2, 2);
  EXPECT_EQ(local_dims(gates::promote(0, 1, 2), spec), (std::vector<int>{2, 4}));
  EXPECT_EQ(local_dims(gates::deliver(0, 1, 2, 1), spec), (std::vector<int>{4, 2}));
  EXPECT_EQ(local_dims(gates::relay(0, 1, 2), spec), (std::vector<int>{4, 4}));
  EXPECT_EQ(local_dims(Gate::negated_sum(0, 1, 2), spec), (std::vector<int>{2, 2}));
}

} // namespace
} // namespace qroute
