#include <random>

#include "doctest.h"
#include "test_support.hpp"

using namespace entcat;
using namespace entcat::testing;

TEST_CASE("parse_rational reads decimals exactly") {
  CHECK(parse_rational("0.4") == Rational(2, 5));
  CHECK(parse_rational("0.22") == Rational(11, 50));
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(parse_rational("1.0") == 1);
  CHECK(parse_rational(" 50/103 ") == Rational(50, 103));
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("."), Error);
  CHECK_THROWS_AS(parse_rational("1e-3"), Error);
}

TEST_CASE("decimal rendering rounds half to even") {
  CHECK(to_decimal_string(Rational(4, 5)) == "0.8000");
  CHECK(to_decimal_string(Rational(64, 75)) == "0.8533");
  CHECK(to_decimal_string(Rational(1, 8), 2) == "0.12");
  CHECK(to_decimal_string(Rational(3, 8), 2) == "0.38");
  CHECK(to_decimal_string(Rational(1), 4) == "1.0000");
  CHECK(to_decimal_string(Rational(-1, 3), 3) == "-0.333");
  CHECK(to_decimal_string(Rational(7, 2), 0) == "4");
  CHECK(to_decimal_string(Rational(5, 2), 0) == "2");
}

TEST_CASE("parse_vector canonicalizes") {
  auto v = vec("0.4,0.4,0.1,0.1");
  CHECK(serialize(v) == "2/5,2/5,1/10,1/10");
  CHECK(v.size() == 4);
  CHECK(v.run_count() == 2);

  CHECK(serialize(vec("1.0")) == "1");
  CHECK(serialize(vec("0.1,0.5,0.4")) == "1/2,2/5,1/10");
  CHECK(serialize(vec("0.5,0,0.5")) == "1/2,1/2");
  CHECK(serialize(parse_vector("2,1,1", true)) == "1/2,1/4,1/4");
}

TEST_CASE("parse_vector rejects bad input") {
  auto kind_of = [](const std::string& text) {
    try {
      parse_vector(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::InvalidArgument;
  };
  CHECK(kind_of("") == ErrorKind::EmptyInput);
  CHECK(kind_of("0,0") == ErrorKind::EmptyInput);
  CHECK(kind_of("0.4,0.7") == ErrorKind::NotNormalized);
  CHECK(kind_of("1.2,-0.2") == ErrorKind::NonPositiveEntry);
  CHECK(kind_of("0.5,,0.5") == ErrorKind::MalformedNumber);
  CHECK(kind_of("0.5,0.5,") == ErrorKind::MalformedNumber);
}

TEST_CASE("positional access and prefix sums") {
  auto v = vec("0.4,0.4,0.1,0.1");
  CHECK(v[0] == Rational(2, 5));
  CHECK(v[1] == Rational(2, 5));
  CHECK(v[2] == Rational(1, 10));
  CHECK(v[3] == Rational(1, 10));
  CHECK_THROWS_AS(v[4], Error);
  CHECK(v.prefix_sum(0) == 0);
  CHECK(v.prefix_sum(3) == Rational(9, 10));
  CHECK(v.prefix_sum(4) == 1);
}

TEST_CASE("tensor examples") {
  CHECK(tensor(SchmidtVector::product_state(), vec("0.6,0.4")) == vec("3/5,2/5"));
  CHECK(serialize(tensor(vec("0.6,0.4"), vec("0.6,0.4"))) == "9/25,6/25,6/25,4/25");
  // Frozen from the brute-force product-and-sort oracle.
  CHECK(serialize(tensor(source_a(), qubit_catalyst())) == "6/25,6/25,4/25,4/25,3/50,3/50,1/25,1/25");
}

TEST_CASE("tensor_power examples") {
  CHECK(tensor_power(vec("0.6,0.4"), 1) == vec("0.6,0.4"));
  auto uniform = tensor_power(vec("0.5,0.5"), 3);
  CHECK(uniform.size() == 8);
  CHECK(uniform.run_count() == 1);
  CHECK(uniform.largest() == Rational(1, 8));
  CHECK(serialize(tensor_power(vec("0.7,0.3"), 2)) == "49/100,21/100,21/100,9/100");
  CHECK(tensor_power(vec("0.7,0.3"), 0) == SchmidtVector::product_state());

  auto big = tensor_power(qubit_catalyst(), 11);
  CHECK(big.size() == 2048);
  CHECK(big.run_count() == 12);
}

TEST_CASE("component cap is enforced") {
  Limits tight{100};
  CHECK_NOTHROW(tensor(source_a(), source_a(), tight));
  try {
    tensor_power(source_a(), 4, tight);
    FAIL("expected ResourceLimit");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ResourceLimit);
  }
  CHECK_THROWS_AS(source_a().expanded(Limits{3}), Error);
  // Overflow saturates into the same error rather than wrapping.
  CHECK_THROWS_AS(tensor_power(vec("0.5,0.5"), 70), Error);
}

TEST_CASE("tensor properties on random vectors") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    auto x = random_vector(rng, 1 + rng() % 4, 30);
    auto y = random_vector(rng, 1 + rng() % 4, 24);
    auto xy = tensor(x, y);

    Rational total = 0;
    for (const auto& r : xy.runs()) total += r.value * r.count;
    CHECK(total == 1);
    CHECK(xy == tensor(y, x));
    CHECK(xy.size() == x.size() * y.size());
    CHECK(xy.largest() == x.largest() * y.largest());
    CHECK(xy.smallest() == x.smallest() * y.smallest());
    CHECK(xy.expanded() == brute::product(x.expanded(), y.expanded()));

    const unsigned a = 1 + rng() % 2, b = 1 + rng() % 2;
    CHECK(tensor_power(x, a + b) == tensor(tensor_power(x, a), tensor_power(x, b)));

    CHECK(parse_vector(serialize(xy)) == xy);
  }
}
