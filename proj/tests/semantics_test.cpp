#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "depth2/duality.hpp"
#include "depth2/errors.hpp"
#include "depth2/semantics.hpp"
#include "support.hpp"

namespace depth2 {
namespace {

using testing::el;

Formula f(std::string_view text) { return parse_formula(text); }

TEST(EvalInModel, Examples) {
  EXPECT_EQ(eval_in_model(testing::f2(), {{"p", 0b01}}, f("<>p")), 0b01U);
  EXPECT_EQ(eval_in_model(chain_frame(3), {}, f("1")), 0b111U);
  EXPECT_EQ(eval_in_model(universal_frame(2), {{"p", 0b01}}, f("<>p")), 0b11U);
  EXPECT_EQ(eval_in_model(testing::f2(), {{"p", 0b01}}, f("[]p")), 0b00U);
  EXPECT_EQ(eval_in_model(testing::f2(), {{"p", 0b10}}, f("[]p")), 0b10U);
}

TEST(EvalInModel, Errors) {
  EXPECT_THROW(eval_in_model(testing::f2(), {{"p", 1}}, f("p & q")), BindingError);
  EXPECT_THROW(eval_in_model(testing::f2(), {{"p", 4}}, f("p")), DomainError);
}

// The compiled evaluator agrees with a clause-by-clause reading.
TEST(EvalInModel, AgreesWithNaiveClauses) {
  std::mt19937 rng(41);
  testing::FormulaGenerator gen(43);
  for (int i = 0; i < 500; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::uint32_t> rows(n);
    for (auto& row : rows) row = rng() & ((1U << n) - 1);
    const Frame frame(n, rows);
    const Formula phi = gen(5);
    Valuation v;
    std::map<std::string, std::set<int>> sets;
    for (const std::string& name : variables(phi)) {
      v[name] = rng() & ((1U << n) - 1);
      sets[name];
      for (int w = 0; w < n; ++w) {
        if ((v[name] >> w) & 1U) sets[name].insert(w);
      }
    }
    std::uint32_t want = 0;
    for (int w = 0; w < n; ++w) {
      if (testing::holds_at(testing::matrix_of(frame), sets, phi, w)) want |= 1U << w;
    }
    EXPECT_EQ(eval_in_model(frame, v, phi), want) << print_formula(phi);
  }
}

TEST(EvalInModel, BoxIsDualOfDiamond) {
  std::mt19937 rng(47);
  testing::FormulaGenerator gen(53);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + static_cast<int>(rng() % 6);
    std::vector<std::uint32_t> rows(n);
    for (auto& row : rows) row = rng() & ((1U << n) - 1);
    const Frame frame(n, rows);
    const Formula phi = gen(4);
    Valuation v;
    for (const std::string& name : variables(phi)) v[name] = rng() & ((1U << n) - 1);
    EXPECT_EQ(eval_in_model(frame, v, Formula::box(phi)),
              eval_in_model(frame, v, Formula::negation(Formula::diamond(Formula::negation(phi)))));
  }
}

TEST(EvalInAlgebra, Basics) {
  const ModalAlgebra a = testing::f2_plus();
  EXPECT_EQ(eval_in_algebra(a, {{"x", el(2)}}, f("<>x")), el(3));
  EXPECT_EQ(eval_in_algebra(a, {{"x", el(2)}}, f("[]x")), el(2));
  EXPECT_EQ(eval_in_algebra(a, {{"x", el(1)}}, f("[]x")), el(0));
  EXPECT_THROW(eval_in_algebra(a, {}, f("x")), BindingError);
  EXPECT_THROW(eval_in_algebra(a, {{"x", el(4)}}, f("x")), DomainError);
}

TEST(FrameValidates, Examples) {
  EXPECT_TRUE(frame_validates(identity_frame(3), axiom("T")).valid);
  const FrameValidity b = frame_validates(testing::f2(), axiom("B"));
  EXPECT_FALSE(b.valid);
  ASSERT_TRUE(b.counterexample.has_value());
  EXPECT_EQ(*b.counterexample, (Valuation{{"p", 0b01}}));
  EXPECT_TRUE(frame_validates(universal_frame(3), axiom("B")).valid);
}

TEST(FrameValidates, CounterexampleIsTheLowestFailingValuation) {
  // Mixed radix with the first variable least significant.
  const Frame frame = chain_frame(3);
  const Formula phi = f("q -> p");
  const FrameValidity r = frame_validates(frame, phi);
  ASSERT_FALSE(r.valid);
  EXPECT_EQ(*r.counterexample, (Valuation{{"q", 1}, {"p", 0}}));
}

TEST(FrameValidates, WorkerCountDoesNotChangeTheWitness) {
  std::mt19937 rng(59);
  testing::FormulaGenerator gen(61);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<std::uint32_t> rows(n);
    for (auto& row : rows) row = rng() & ((1U << n) - 1);
    const Frame frame(n, rows);
    const Formula phi = gen(4);
    if (variables(phi).size() > 3) continue;
    const FrameValidity one = frame_validates(frame, phi, {.workers = 1});
    const FrameValidity many = frame_validates(frame, phi, {.workers = 8});
    EXPECT_EQ(one.valid, many.valid);
    EXPECT_EQ(one.counterexample, many.counterexample);
  }
}

TEST(FrameValidates, Budget) {
  EXPECT_THROW(frame_validates(testing::f2(), axiom("B"), {.budget = 3}), BudgetError);
  EXPECT_NO_THROW(frame_validates(testing::f2(), axiom("B"), {.budget = 4}));
  EXPECT_THROW(frame_validates(identity_frame(12), f("p & q & r")), BudgetError);
}

// Frame validity and complex-algebra validity coincide, and validity does
// not depend on how the worlds are labeled.
TEST(FrameValidates, BridgeAndRelabeling) {
  std::mt19937 rng(67);
  testing::FormulaGenerator gen(71);
  std::vector<Formula> formulas;
  for (const std::string& name : axiom_names()) {
    if (variables(axiom(name)).size() <= 2) formulas.push_back(axiom(name));
  }
  while (formulas.size() < 40) {
    Formula phi = gen(4);
    if (variables(phi).size() <= 2) formulas.push_back(std::move(phi));
  }
  for (int n = 1; n <= 3; ++n) {
    for (const Frame& frame : enumerate_frames(n)) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const Frame other = relabel(frame, perm);
      for (const Formula& phi : formulas) {
        const bool valid = frame_validates(frame, phi).valid;
        EXPECT_EQ(valid, algebra_validates(complex_algebra(frame), phi).holds);
        EXPECT_EQ(valid, frame_validates(other, phi).valid);
      }
    }
  }
}

TEST(AlgebraValidates, Examples) {
  for (const ModalAlgebra& a : testing::all_closure_algebras(2)) EXPECT_TRUE(algebra_validates(a, f("p | ~p")).holds);
  EXPECT_TRUE(algebra_validates(testing::f2_plus(), axiom("B2")).holds);
  const BooleanAlgebra b2 = powerset_algebra(2);
  EXPECT_TRUE(algebra_validates(ModalAlgebra(b2, discriminator(b2)), axiom("B")).holds);
  const AlgebraCheck t = algebra_validates(testing::algebra(2, {0, 2}), axiom("T"));
  EXPECT_FALSE(t.holds);
  EXPECT_EQ(*t.witness, (Assignment{{"p", el(1)}}));
}

TEST(QuasiidentityHolds, Examples) {
  const Formula premise = f("<>x & <>~x");
  const Formula premises[] = {premise};
  EXPECT_TRUE(quasiidentity_holds(testing::two_element(), premises, Formula::bottom()).holds);
  const BooleanAlgebra b2 = powerset_algebra(2);
  const AlgebraCheck disc = quasiidentity_holds(ModalAlgebra(b2, discriminator(b2)), premises, Formula::bottom());
  EXPECT_FALSE(disc.holds);
  EXPECT_EQ(*disc.witness, (Assignment{{"x", el(1)}}));
  for (const ModalAlgebra& a : testing::all_closure_algebras(2)) {
    const Formula phi = f("[]x -> <>y");
    const Formula same[] = {phi};
    EXPECT_TRUE(quasiidentity_holds(a, same, phi).holds);
  }
}

TEST(PremisesActive, Examples) {
  const Formula premises[] = {f("<>x & <>~x")};
  const BooleanAlgebra b2 = powerset_algebra(2);
  const AlgebraCheck disc = premises_active(ModalAlgebra(b2, discriminator(b2)), premises);
  EXPECT_TRUE(disc.holds);
  EXPECT_EQ(*disc.witness, (Assignment{{"x", el(1)}}));
  EXPECT_FALSE(premises_active(testing::two_element(), premises).holds);
  const Formula top[] = {Formula::top()};
  EXPECT_TRUE(premises_active(testing::f2_plus(), top).holds);
}

}  // namespace
}  // namespace depth2
