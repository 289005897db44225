#include <gtest/gtest.h>

#include "hbcell/io.hpp"
#include "support.hpp"

namespace hbcell {
namespace {

using testing::worked_answer;
using testing::worked_cell;

const FieldSpec QQ = FieldSpec::rationals();

TEST(Io, MVector) {
  EXPECT_EQ(parse_m_vector("0,5,7,11"), testing::small_cell());
  EXPECT_EQ(parse_m_vector(" 0, 2 ,3,5 "), worked_cell());
  EXPECT_THROW(parse_m_vector("0,5,,7"), Error);
  EXPECT_THROW(parse_m_vector("0,5,x"), Error);
  EXPECT_THROW(parse_m_vector("1,5"), Error);
  EXPECT_THROW(parse_m_vector(""), Error);
}

TEST(Io, Generators) {
  const auto gens = parse_generators("# header\n\nx^2 - y  # trailing\n  y^3\n", QQ);
  ASSERT_EQ(gens.size(), 2u);
  EXPECT_EQ(gens[0].to_string(), "x^2 - y");
  EXPECT_EQ(gens[1].to_string(), "y^3");
  EXPECT_THROW(parse_generators("# nothing\n", QQ), Error);
  EXPECT_THROW(parse_generators("x + w\n", QQ), Error);
  EXPECT_EQ(testing::worked_generators().size(), 4u);
}

TEST(Io, JsonLayout) {
  EXPECT_EQ(param_matrix_to_json(worked_answer()),
            R"({"m":[0,2,3,5],"index_base":1,"field":"QQ","entries":[["2*y - 2","-2*y + 1","0"],)"
            R"(["-2","2","4"],["y - 2","3","4"],["-1","1","y + 1"]]})");
}

TEST(Io, JsonRoundTrip) {
  const std::string text = param_matrix_to_json(worked_answer());
  EXPECT_EQ(param_matrix_from_json(text, QQ), worked_answer());
  EXPECT_EQ(param_matrix_from_json(text, QQ, worked_cell()), worked_answer());
  const FieldSpec f = FieldSpec::prime_field(10007);
  const ParamMatrix s = sample(testing::small_cell(), f, 3);
  EXPECT_EQ(param_matrix_from_json(param_matrix_to_json(s), f), s);
}

TEST(Io, JsonErrors) {
  const std::string text = param_matrix_to_json(worked_answer());
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::structure_violation;
  };
  EXPECT_EQ(code_of([&] { param_matrix_from_json("{", QQ); }), ErrorCode::parse_error);
  EXPECT_EQ(code_of([&] { param_matrix_from_json(text, FieldSpec::prime_field(7)); }),
            ErrorCode::field_mismatch);
  EXPECT_EQ(code_of([&] { param_matrix_from_json(text, QQ, make_cell({0, 2, 3, 6})); }),
            ErrorCode::bad_m_vector);
  EXPECT_EQ(code_of([&] { param_matrix_from_json(R"({"entries":[]})", QQ); }), ErrorCode::bad_m_vector);
  EXPECT_EQ(code_of([&] { param_matrix_from_json(R"({"m":[0,1],"entries":[["0"]]})", QQ); }),
            ErrorCode::shape_mismatch);
  EXPECT_EQ(code_of([&] { param_matrix_from_json(R"({"m":[0,1],"entries":[["y"],["0"]]})", QQ); }),
            ErrorCode::bound_violation);
  EXPECT_EQ(code_of([&] { param_matrix_from_json(R"({"m":[0,1],"index_base":0,"entries":[[0],[0]]})", QQ); }),
            ErrorCode::parse_error);
  EXPECT_EQ(param_matrix_from_json(R"({"m":[0,1],"entries":[[3],["-1"]]})", QQ)(1, 1).to_string(), "3");
}

}  // namespace
}  // namespace hbcell
