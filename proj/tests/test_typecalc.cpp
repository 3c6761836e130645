#include <doctest.h>

#include <random>

#include "arbor/typecalc.hpp"

using namespace arbor;

TEST_CASE("word parsing and printing") {
  CHECK(word_str({1, 0, 2}) == "1,0,2");
  CHECK(parse_word("1,0,2") == ColorWord{1, 0, 2});
  CHECK_THROWS_AS(parse_word(""), Error);
  CHECK_THROWS_AS(parse_word("1,,2"), Error);
}

TEST_CASE("least rotation basics") {
  CHECK(least_rotation({2, 1, 2, 0}) == ColorWord{0, 2, 1, 2});
  CHECK(least_rotation({1, 0, 2}) == ColorWord{0, 2, 1});
  CHECK(least_rotation({0, 0, 0}) == ColorWord{0, 0, 0});
  CHECK(least_rotation({1}) == ColorWord{1});
  CHECK(least_rotation({1, 0, 1, 0}) == ColorWord{0, 1, 0, 1});
}

TEST_CASE("make_type is constant on cyclic-shift orbits") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    size_t len = 1 + rng() % 20;
    ColorWord w(len);
    for (auto& c : w) c = static_cast<Color>(rng() % 4);
    CyclicType t = make_type(w);
    for (size_t s = 0; s < len; ++s) {
      ColorWord r(len);
      for (size_t i = 0; i < len; ++i) r[i] = w[(s + i) % len];
      CHECK(make_type(r) == t);
    }
  }
}

TEST_CASE("types [1,0,2] and [0,2,1] are equal") {
  CHECK(make_type({1, 0, 2}) == make_type({0, 2, 1}));
  CHECK(make_type({1, 0, 2}) != make_type({1, 2, 0}));
  CHECK(type_length(make_type({1, 0, 2})) == 3);
}

TEST_CASE("readings_from enumerates anchored rotations") {
  CyclicType t = make_type({1, 0, 1, 2});
  auto rs = t.readings_from(1);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0] == ColorWord{1, 0, 1, 2});
  CHECK(rs[1] == ColorWord{1, 2, 1, 0});
  CHECK(t.readings_from(5).empty());
  CHECK(t.contains(2));
  CHECK(!t.contains(3));
}

TEST_CASE("two-rotation composition doubles the path") {
  CHECK(rot_rot_word({1, 2, 1, 0}) == ColorWord{1, 2, 1, 0, 1, 2});
  CHECK(compose_rot_rot({1, 2, 1, 0}) == make_type({1, 2, 1, 0, 1, 2}));
  CHECK(compose_rot_rot({0, 1}) == make_type({0, 1}));
  CHECK(type_length(compose_rot_rot({0, 1, 0, 1, 0})) == 8);
  CHECK_THROWS_AS(compose_rot_rot({1}), Error);
}

TEST_CASE("off-axis composition prepends the doubled spur") {
  // spur (1,0), reading (1,2): heart(spur) = (1,0) then the reading
  CHECK(compose_rot_trans_word({1, 0}, {1, 2}) == make_type({1, 0, 1, 2}));
  CHECK_THROWS_AS(compose_rot_trans_word({1}, {1, 2}), Error);
  try {
    compose_rot_trans_word({1, 0}, {2, 1});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AnchorAbsent);
  }
}

TEST_CASE("off-axis composition unions all anchored readings") {
  CyclicType t = make_type({1, 0, 1, 2});
  auto types = compose_rot_trans_offaxis({1, 3}, t, 1);
  CHECK(types.size() == 2);
  CHECK(std::find(types.begin(), types.end(), make_type({1, 3, 1, 0, 1, 2})) != types.end());
  CHECK(std::find(types.begin(), types.end(), make_type({1, 3, 1, 2, 1, 0})) != types.end());
  try {
    compose_rot_trans_offaxis({5, 3}, t, 5);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::AnchorAbsent);
  }
}

TEST_CASE("on-axis outcomes enumerate fold depths") {
  // length-2 type (i,j): either survives or folds to a rotation at j
  auto outs = onaxis_outcomes_word({1, 2});
  REQUIRE(outs.size() == 2);
  CHECK(outs[0] == OnAxisOutcome::translation(make_type({1, 2})));
  CHECK(outs[1] == OnAxisOutcome::rotation_fixing(2));
  CHECK(outs[1].str() == "rotation-fixing:2");

  // no palindromic matching: the type passes through unchanged
  auto single = onaxis_outcomes_word({1, 0, 2});
  REQUIRE(single.size() == 1);
  CHECK(single[0] == OnAxisOutcome::translation(make_type({1, 0, 2})));

  // (i1, j, k, j): fold depth 1 gives (j, k), full fold fixes color k
  auto deep = onaxis_outcomes_word({1, 2, 3, 2});
  REQUIRE(deep.size() == 3);
  bool has_full = false, has_folded = false, has_rot = false;
  for (const auto& o : deep) {
    if (o == OnAxisOutcome::translation(make_type({1, 2, 3, 2}))) has_full = true;
    if (o == OnAxisOutcome::translation(make_type({2, 3}))) has_folded = true;
    if (o == OnAxisOutcome::rotation_fixing(3)) has_rot = true;
  }
  CHECK(has_full);
  CHECK(has_folded);
  CHECK(has_rot);
}

TEST_CASE("on-axis outcomes union over anchor occurrences") {
  auto outs = onaxis_outcomes(make_type({1, 0, 2}), 1);
  REQUIRE(outs.size() == 1);
  CHECK(outs[0].type == make_type({0, 2, 1}));
  CHECK_THROWS_AS(onaxis_outcomes(make_type({1, 0, 2}), 7), Error);
}

TEST_CASE("two-rotation shape recognition round-trips") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    size_t n = 2 + rng() % 4;
    ColorWord path(n);
    for (auto& c : path) c = static_cast<Color>(rng() % 3);
    CyclicType t = compose_rot_rot(path);
    auto back = is_two_rotation_type(t);
    REQUIRE(back);
    CHECK(compose_rot_rot(*back) == t);
  }
  CHECK(!is_two_rotation_type(make_type({1, 0, 2})));
  CHECK(is_two_rotation_type(make_type({0, 1, 0, 2})));  // = heart(1,0,2)
  CHECK(!is_two_rotation_type(make_type({0, 0, 1, 2})));
  CHECK(!is_two_rotation_type(make_type({1})));
}
