#include "loopbv/rational.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using loopbv::BigRat;
using loopbv::Rational;

TEST_CASE("rational basics")
{
	Rational zero;
	CHECK(zero.is_zero());
	CHECK(zero.str() == "0");

	Rational a(1, 2);
	Rational b(1, 3);
	CHECK((a + b).str() == "5/6");
	CHECK((a - b).str() == "1/6");
	CHECK((a * b).str() == "1/6");
	CHECK((a / b).str() == "3/2");
	CHECK((-a).str() == "-1/2");

	CHECK(Rational(2, 4) == Rational(1, 2));
	CHECK(Rational(-2, -4) == Rational(1, 2));
	CHECK(Rational(2, -4) == Rational(-1, 2));
	CHECK(Rational(6, 3).is_integer());
	CHECK(!Rational(1, 3).is_integer());
	CHECK(Rational(7).sign() == 1);
	CHECK(Rational(-7, 2).sign() == -1);

	CHECK_THROWS_AS(Rational(1, 0), loopbv::Error);
	CHECK_THROWS_AS(a / zero, loopbv::Error);
}

TEST_CASE("rational parsing round-trips")
{
	for (const char *s : {"0", "5", "-5", "1/2", "-7/3", "123456789012345678901234567890"})
		CHECK(Rational::from_string(s).str() == s);
	CHECK(Rational::from_string("4/6") == Rational(2, 3));
	CHECK_THROWS_AS(Rational::from_string("nope"), loopbv::Error);
	CHECK_THROWS_AS(Rational::from_string("1/0"), loopbv::Error);
}

TEST_CASE("promotion to big integers and demotion back")
{
	Rational big(1);
	BigRat expected(1);
	for (int i = 0; i < 5; ++i)
	{
		big *= Rational(std::int64_t{1} << 62);
		expected *= BigRat(std::int64_t{1} << 62);
	}
	CHECK(!big.is_small());
	CHECK(big == Rational::from_big(expected));

	// dividing back down demotes to the small representation
	Rational shrunk = big;
	for (int i = 0; i < 5; ++i)
		shrunk /= Rational(std::int64_t{1} << 62);
	CHECK(shrunk.is_small());
	CHECK(shrunk == Rational(1));

	// canonical representation: small and big never compare equal unless
	// they are the same value in the same representation
	CHECK(Rational::from_big(BigRat(7)) == Rational(7));
	CHECK(Rational::from_big(BigRat(7)).is_small());
}

TEST_CASE("rational arithmetic agrees with the bignum oracle")
{
	std::mt19937_64 rng(20240811);
	auto rand_rat = [&]() {
		std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
		std::uniform_int_distribution<std::int64_t> den(1, 1000000);
		std::uniform_int_distribution<int> huge(0, 9);
		Rational r(num(rng), den(rng));
		if (huge(rng) == 0)
			r *= Rational(std::int64_t{1} << 61);
		if (huge(rng) == 0)
			r /= Rational((std::int64_t{1} << 61) + 1);
		return r;
	};
	for (int i = 0; i < 2000; ++i)
	{
		Rational a = rand_rat();
		Rational b = rand_rat();
		BigRat ba = a.to_big();
		BigRat bb = b.to_big();
		CHECK((a + b).to_big() == ba + bb);
		CHECK((a - b).to_big() == ba - bb);
		CHECK((a * b).to_big() == ba * bb);
		if (!b.is_zero())
			CHECK((a / b).to_big() == ba / bb);
		CHECK((a == b) == (ba == bb));
		if (a == b)
			CHECK(a.hash() == b.hash());
	}
}
