#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fatpoints/class_expr.hpp"

using namespace fatpoints;

TEST_CASE("flat token lists") {
  const ParsedClass p = parse_class_tokens({"4", "3", "3", "3", "3"});
  CHECK_FALSE(p.notation_dim.has_value());
  CHECK(p.degree == 4);
  CHECK(p.mults == std::vector<Int>{3, 3, 3, 3});

  const ParsedClass q = parse_class_tokens({"-5", "-2", "3"});
  CHECK(q.degree == -5);
  CHECK(q.mults == std::vector<Int>{-2, 3});

  const ParsedClass bare = parse_class_tokens({"7"});
  CHECK(bare.degree == 7);
  CHECK(bare.mults.empty());
}

TEST_CASE("exponent notation") {
  const ParsedClass p = parse_class_tokens({"L2(96;34^8)"});
  CHECK(p.notation_dim == 2);
  CHECK(p.degree == 96);
  CHECK(p.mults == std::vector<Int>(8, Int(34)));

  const ParsedClass q = parse_class_tokens({"L3(19;9^9)"});
  CHECK(q.notation_dim == 3);
  CHECK(q.degree == 19);
  CHECK(q.mults.size() == 9);

  const ParsedClass mixed = parse_class_tokens({"L2(7;3^2,2,1^3)"});
  CHECK(mixed.mults == std::vector<Int>{3, 3, 2, 1, 1, 1});

  const ParsedClass no_points = parse_class_tokens({"L5(6)"});
  CHECK(no_points.notation_dim == 5);
  CHECK(no_points.degree == 6);
  CHECK(no_points.mults.empty());

  const ParsedClass spaces = parse_class_tokens({"l2( 4 ; 2 ^ 2 , 1 )"});
  CHECK(spaces.notation_dim == 2);
  CHECK(spaces.mults == std::vector<Int>{2, 2, 1});

  const ParsedClass negative = parse_class_tokens({"L2(0;-1)"});
  CHECK(negative.degree == 0);
  CHECK(negative.mults == std::vector<Int>{-1});
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS(parse_class_tokens({}));
  CHECK_THROWS(parse_class_tokens({"abc"}));
  CHECK_THROWS(parse_class_tokens({"4", "x"}));
  CHECK_THROWS(parse_class_tokens({"4", ""}));
  CHECK_THROWS(parse_class_tokens({"L1(2;1)"}));     // dimension too small
  CHECK_THROWS(parse_class_tokens({"L99(2;1)"}));    // dimension too large
  CHECK_THROWS(parse_class_tokens({"L2(2;1^0)"}));   // zero exponent
  CHECK_THROWS(parse_class_tokens({"L2(2;1^-1)"}));
  CHECK_THROWS(parse_class_tokens({"L2(2;1"}));      // missing paren
  CHECK_THROWS(parse_class_tokens({"L2(2;1)x"}));    // trailing junk
  CHECK_THROWS(parse_class_tokens({"L2(;1)"}));      // missing degree
  CHECK_THROWS(parse_class_tokens({"2(1;1)"}));      // missing L
}

TEST_CASE("formatting") {
  const DivisorClass d(2, 96, std::vector<Int>(8, Int(34)));
  CHECK(format_plain(d) == "96 34 34 34 34 34 34 34 34");
  CHECK(format_exponent(d) == "L2(96;34^8)");

  const DivisorClass mixed(3, 7, {Int(3), Int(3), Int(2), Int(1)});
  CHECK(format_plain(mixed) == "7 3 3 2 1");
  CHECK(format_exponent(mixed) == "L3(7;3^2,2,1)");

  const DivisorClass bare(2, 5, {});
  CHECK(format_plain(bare) == "5");
  CHECK(format_exponent(bare) == "L2(5)");

  const DivisorClass neg(2, 0, {Int(0), Int(0), Int(-2)});
  CHECK(format_plain(neg) == "0 0 0 -2");
  CHECK(format_exponent(neg) == "L2(0;0^2,-2)");
}

TEST_CASE("formatting and parsing round trip") {
  for (const DivisorClass& d :
       {DivisorClass(2, 96, std::vector<Int>(8, Int(34))),
        DivisorClass(3, 19, std::vector<Int>(9, Int(9))),
        DivisorClass(2, 0, {Int(-1)}),
        DivisorClass(5, 6, std::vector<Int>(6, Int(5))),
        DivisorClass(3, 4, {})}) {
    const ParsedClass p = parse_class_tokens({format_exponent(d)});
    REQUIRE(p.notation_dim.has_value());
    CHECK(*p.notation_dim == d.ambient_dim());
    CHECK(DivisorClass(*p.notation_dim, p.degree, p.mults) == d);
  }
}
