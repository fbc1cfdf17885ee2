#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "depth2/duality.hpp"
#include "depth2/errors.hpp"
#include "support.hpp"

namespace depth2 {
namespace {

using testing::algebra;
using testing::el;

TEST(ComplexAlgebra, Examples) {
  const BooleanAlgebra b2 = powerset_algebra(2);
  EXPECT_EQ(complex_algebra(universal_frame(2)).op(), discriminator(b2));
  const ModalAlgebra f2 = complex_algebra(testing::f2());
  EXPECT_EQ(f2.f(el(0b01)), el(0b01));
  EXPECT_EQ(f2.f(el(0b10)), el(0b11));
  EXPECT_EQ(f2, testing::f2_plus());
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(complex_algebra(identity_frame(n)).op(), identity_operator(powerset_algebra(n)));
  }
}

// f(X) = {x : R(x) ∩ X ≠ ∅} on every subset, written out directly.
TEST(ComplexAlgebra, DiamondOfSubsets) {
  std::mt19937 rng(29);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::uint32_t> rows(n);
    for (auto& r : rows) r = rng() & ((1U << n) - 1);
    const Frame f(n, rows);
    const ModalAlgebra a = complex_algebra(f);
    for (std::uint32_t x = 0; x < (1U << n); ++x) {
      std::uint32_t want = 0;
      for (int w = 0; w < n; ++w) {
        if (rows[w] & x) want |= 1U << w;
      }
      EXPECT_EQ(a.f(el(x)).bits, want);
    }
  }
}

TEST(CanonicalFrame, Examples) {
  const BooleanAlgebra b2 = powerset_algebra(2);
  EXPECT_EQ(canonical_frame(extremal_algebra(ExtremalKind::ui, b2, el(1))), testing::f2());
  const BooleanAlgebra b3 = powerset_algebra(3);
  EXPECT_EQ(canonical_frame(ModalAlgebra(b3, discriminator(b3))), universal_frame(3));
  EXPECT_EQ(canonical_frame(ModalAlgebra(b3, identity_operator(b3))), identity_frame(3));
  const BooleanAlgebra b13 = powerset_algebra(13);
  EXPECT_THROW(canonical_frame(ModalAlgebra(b13, identity_operator(b13))), SizeError);
}

TEST(CanonicalFrame, ClosureAlgebrasGiveQuasiorders) {
  for (int n = 1; n <= 3; ++n) {
    for (const ModalAlgebra& a : testing::all_closure_algebras(n)) EXPECT_TRUE(is_quasiorder(canonical_frame(a)));
  }
}

TEST(CanonicalFrame, Depth2AxiomMatchesFrameDepth) {
  for (int n = 1; n <= 4; ++n) {
    for (const ModalAlgebra& a : testing::all_closure_algebras(n)) {
      EXPECT_EQ(satisfies_depth2_axiom(a), cluster_poset(canonical_frame(a)).depth <= 2);
    }
  }
}

TEST(AlgebrasIsomorphic, Examples) {
  const IsomorphismResult r = algebras_isomorphic(testing::f2_plus(), complex_algebra(testing::f2()));
  EXPECT_TRUE(r.isomorphic);
  EXPECT_EQ(r.permutation, (std::vector<int>{0, 1}));
  const BooleanAlgebra b2 = powerset_algebra(2);
  EXPECT_FALSE(algebras_isomorphic(ModalAlgebra(b2, identity_operator(b2)), ModalAlgebra(b2, discriminator(b2))).isomorphic);
  const BooleanAlgebra b8 = powerset_algebra(8);
  const ModalAlgebra big(b8, identity_operator(b8));
  EXPECT_THROW(algebras_isomorphic(big, big), SizeError);
}

TEST(AlgebrasIsomorphic, WitnessRelabelsTheOperator) {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::uint32_t> rows(n);
    for (auto& r : rows) r = rng() & ((1U << n) - 1);
    const Frame f(n, rows);
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    const ModalAlgebra a = complex_algebra(f);
    const ModalAlgebra b = complex_algebra(relabel(f, p));
    const IsomorphismResult r = algebras_isomorphic(a, b);
    ASSERT_TRUE(r.isomorphic);
    auto map = [&](std::uint32_t x) {
      std::uint32_t out = 0;
      for (int j = 0; j < n; ++j) {
        if ((x >> j) & 1U) out |= 1U << r.permutation[j];
      }
      return out;
    };
    for (std::uint32_t x = 0; x < (1U << n); ++x) EXPECT_EQ(map(a.f(el(x)).bits), b.f(el(map(x))).bits);
    EXPECT_EQ(algebras_isomorphic(a, b).isomorphic, frames_isomorphic(f, relabel(f, p)));
  }
}

// Atoms and worlds share indices, so both round trips are exact.
TEST(Duality, RoundTripAllOperatorsUpToThreeAtoms) {
  for (int n = 1; n <= 3; ++n) {
    const std::uint32_t size = 1U << n;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= size;
    for (std::uint64_t code = 0; code < total; ++code) {
      std::vector<std::uint32_t> v(n);
      std::uint64_t c = code;
      for (auto& x : v) {
        x = static_cast<std::uint32_t>(c % size);
        c /= size;
      }
      const ModalAlgebra a = algebra(n, v);
      EXPECT_EQ(complex_algebra(canonical_frame(a)), a);
    }
  }
}

TEST(Duality, RoundTripFrames) {
  for (int n = 1; n <= 4; ++n) {
    for (const Frame& f : enumerate_frames(n)) EXPECT_EQ(canonical_frame(complex_algebra(f)), f);
  }
}

}  // namespace
}  // namespace depth2
