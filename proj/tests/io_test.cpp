#include <gtest/gtest.h>

#include "depth2/errors.hpp"
#include "depth2/io.hpp"
#include "support.hpp"

namespace depth2 {
namespace {

using nlohmann::json;

TEST(AlgebraJson, RoundTrip) {
  const ModalAlgebra a = testing::f2_plus();
  const json j = algebra_to_json(a);
  EXPECT_EQ(j, json::parse(R"({"atoms": 2, "f_on_atoms": [1, 3]})"));
  EXPECT_EQ(algebra_from_json(j), a);
}

TEST(AlgebraJson, Malformed) {
  EXPECT_THROW(algebra_from_json(json::parse(R"({"atoms": 2, "f_on_atoms": [1]})")), Error);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"atoms": 2, "f_on_atoms": [1, 9]})")), DomainError);
  EXPECT_THROW(algebra_from_json(json::parse(R"({"f_on_atoms": [1]})")), DomainError);
  EXPECT_THROW(algebra_from_json(json::parse(R"([1, 2])")), DomainError);
}

TEST(FrameJson, RoundTrip) {
  const Frame f = make_extremal(ExtremalKind::ii, 1, 2);
  const json j = frame_to_json(f);
  EXPECT_EQ(j["worlds"], 3);
  EXPECT_EQ(frame_from_json(j), f);
  EXPECT_THROW(frame_from_json(json::parse(R"({"worlds": 2, "edges": [[0, 5]]})")), DomainError);
  EXPECT_THROW(frame_from_json(json::parse(R"({"worlds": 2, "edges": [[0]]})")), DomainError);
}

TEST(ValuationJson, ListsAndMasks) {
  const Valuation v{{"p", 0b101}, {"q", 0}};
  EXPECT_EQ(valuation_to_json(v), json::parse(R"({"p": [0, 2], "q": []})"));
  EXPECT_EQ(valuation_from_json(valuation_to_json(v), 3), v);
  EXPECT_EQ(valuation_from_json(json::parse(R"({"p": 5})"), 3), (Valuation{{"p", 5}}));
  EXPECT_THROW(valuation_from_json(json::parse(R"({"p": [3]})"), 3), DomainError);
}

}  // namespace
}  // namespace depth2
