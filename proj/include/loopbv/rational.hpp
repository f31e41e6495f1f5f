#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace loopbv {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

class Error : public std::runtime_error {
  public:
	using std::runtime_error::runtime_error;
};

namespace detail {

inline int ctz128(unsigned __int128 v)
{
	auto lo = static_cast<std::uint64_t>(v);
	if (lo != 0)
		return __builtin_ctzll(lo);
	return 64 + __builtin_ctzll(static_cast<std::uint64_t>(v >> 64));
}

inline unsigned __int128 gcd128(unsigned __int128 a, unsigned __int128 b)
{
	if (a == 0)
		return b;
	if (b == 0)
		return a;
	int shift = ctz128(a | b);
	a >>= ctz128(a);
	while (b != 0)
	{
		b >>= ctz128(b);
		if (a > b)
			std::swap(a, b);
		b -= a;
	}
	return a << shift;
}

inline unsigned __int128 abs128(__int128 v)
{
	return v < 0 ? -static_cast<unsigned __int128>(v)
	             : static_cast<unsigned __int128>(v);
}

} // namespace detail

/// Exact rational number. Values that fit in 64-bit numerator/denominator are
/// stored inline; anything larger is promoted to an arbitrary-precision
/// representation and demoted back when it shrinks, so the representation of
/// any given value is unique (small iff it fits).
class Rational {
  public:
	Rational() = default;
	Rational(int v) : num_(v) {}
	Rational(long v) : num_(v) {}
	Rational(long long v) : num_(v) {}

	Rational(std::int64_t n, std::int64_t d)
	{
		if (d == 0)
			throw Error("rational: zero denominator");
		*this = make(static_cast<__int128>(n), static_cast<__int128>(d));
	}

	Rational(const Rational &o)
	    : num_(o.num_), den_(o.den_),
	      big_(o.big_ ? std::make_unique<BigRat>(*o.big_) : nullptr)
	{}
	Rational(Rational &&) noexcept = default;
	Rational &operator=(const Rational &o)
	{
		if (this != &o)
		{
			num_ = o.num_;
			den_ = o.den_;
			big_ = o.big_ ? std::make_unique<BigRat>(*o.big_) : nullptr;
		}
		return *this;
	}
	Rational &operator=(Rational &&) noexcept = default;

	static Rational from_big(const BigRat &v)
	{
		Rational r;
		r.assign_big(v);
		return r;
	}

	/// Parses "p", "-p" or "p/q".
	static Rational from_string(std::string_view s)
	{
		auto slash = s.find('/');
		try
		{
			if (slash == std::string_view::npos)
				return from_big(BigRat(BigInt(std::string(s))));
			BigInt num{std::string(s.substr(0, slash))};
			BigInt den{std::string(s.substr(slash + 1))};
			if (den == 0)
				throw Error("rational: zero denominator");
			return from_big(BigRat(num, den));
		}
		catch (const std::runtime_error &)
		{
			throw Error("rational: cannot parse '" + std::string(s) + "'");
		}
	}

	bool is_zero() const { return !big_ && num_ == 0; }
	bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
	/// True iff the denominator is 1 (the integrality predicate).
	bool is_integer() const
	{
		return big_ ? boost::multiprecision::denominator(*big_) == 1
		            : den_ == 1;
	}
	int sign() const
	{
		if (big_)
			return big_->sign();
		return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1);
	}

	BigRat to_big() const
	{
		if (big_)
			return *big_;
		return BigRat(num_, den_);
	}

	Rational operator-() const
	{
		if (big_)
			return from_big(-*big_);
		if (num_ == std::numeric_limits<std::int64_t>::min())
			return from_big(-to_big());
		Rational r;
		r.num_ = -num_;
		r.den_ = den_;
		return r;
	}

	friend Rational operator+(const Rational &a, const Rational &b)
	{
		if (a.big_ || b.big_)
			return from_big(a.to_big() + b.to_big());
		if (a.den_ == 1 && b.den_ == 1)
		{
			std::int64_t s;
			if (!__builtin_add_overflow(a.num_, b.num_, &s))
				return Rational(s);
			return from_big(a.to_big() + b.to_big());
		}
		__int128 n = static_cast<__int128>(a.num_) * b.den_ +
		             static_cast<__int128>(b.num_) * a.den_;
		__int128 d = static_cast<__int128>(a.den_) * b.den_;
		return make(n, d);
	}
	friend Rational operator-(const Rational &a, const Rational &b)
	{
		return a + (-b);
	}
	friend Rational operator*(const Rational &a, const Rational &b)
	{
		if (a.big_ || b.big_)
			return from_big(a.to_big() * b.to_big());
		__int128 n = static_cast<__int128>(a.num_) * b.num_;
		__int128 d = static_cast<__int128>(a.den_) * b.den_;
		return make(n, d);
	}
	friend Rational operator/(const Rational &a, const Rational &b)
	{
		if (b.is_zero())
			throw Error("rational: division by zero");
		if (a.big_ || b.big_)
			return from_big(a.to_big() / b.to_big());
		__int128 n = static_cast<__int128>(a.num_) * b.den_;
		__int128 d = static_cast<__int128>(a.den_) * b.num_;
		return make(n, d);
	}

	Rational &operator+=(const Rational &o) { return *this = *this + o; }
	Rational &operator-=(const Rational &o) { return *this = *this - o; }
	Rational &operator*=(const Rational &o) { return *this = *this * o; }
	Rational &operator/=(const Rational &o) { return *this = *this / o; }

	friend bool operator==(const Rational &a, const Rational &b)
	{
		if (a.big_ || b.big_)
		{
			// canonical: a value is big iff it does not fit small
			if (!a.big_ || !b.big_)
				return false;
			return *a.big_ == *b.big_;
		}
		return a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend bool operator!=(const Rational &a, const Rational &b)
	{
		return !(a == b);
	}

	std::string str() const
	{
		if (big_)
		{
			auto n = boost::multiprecision::numerator(*big_);
			auto d = boost::multiprecision::denominator(*big_);
			if (d == 1)
				return n.str();
			return n.str() + "/" + d.str();
		}
		if (den_ == 1)
			return std::to_string(num_);
		return std::to_string(num_) + "/" + std::to_string(den_);
	}

	std::size_t hash() const
	{
		if (big_)
			return std::hash<std::string>{}(str());
		auto h = static_cast<std::size_t>(num_) * 0x9e3779b97f4a7c15ULL;
		h ^= static_cast<std::size_t>(den_) + 0x9e3779b97f4a7c15ULL +
		     (h << 6) + (h >> 2);
		return h;
	}

	/// Numerator/denominator for small values (throws when promoted).
	std::int64_t num_small() const
	{
		if (big_)
			throw Error("rational: value exceeds 64-bit");
		return num_;
	}
	std::int64_t den_small() const
	{
		if (big_)
			throw Error("rational: value exceeds 64-bit");
		return den_;
	}
	bool is_small() const { return !big_; }

  private:
	std::int64_t num_ = 0;
	std::int64_t den_ = 1;
	std::unique_ptr<BigRat> big_;

	static Rational make(__int128 n, __int128 d)
	{
		if (d < 0)
		{
			n = -n;
			d = -d;
		}
		if (n == 0)
			return Rational();
		auto g = detail::gcd128(detail::abs128(n), detail::abs128(d));
		n /= static_cast<__int128>(g);
		d /= static_cast<__int128>(g);
		constexpr __int128 lo = std::numeric_limits<std::int64_t>::min();
		constexpr __int128 hi = std::numeric_limits<std::int64_t>::max();
		if (n > lo && n <= hi && d <= hi)
		{
			Rational r;
			r.num_ = static_cast<std::int64_t>(n);
			r.den_ = static_cast<std::int64_t>(d);
			return r;
		}
		BigInt bn = n;
		BigInt bd = d;
		Rational r;
		r.big_ = std::make_unique<BigRat>(bn, bd);
		return r;
	}

	void assign_big(const BigRat &v)
	{
		auto n = boost::multiprecision::numerator(v);
		auto d = boost::multiprecision::denominator(v);
		constexpr std::int64_t lo = std::numeric_limits<std::int64_t>::min();
		constexpr std::int64_t hi = std::numeric_limits<std::int64_t>::max();
		if (n > lo && n <= hi && d <= hi)
		{
			num_ = static_cast<std::int64_t>(n);
			den_ = static_cast<std::int64_t>(d);
			big_.reset();
		}
		else
		{
			num_ = 0;
			den_ = 1;
			big_ = std::make_unique<BigRat>(v);
		}
	}
};

inline Rational operator*(std::int64_t a, const Rational &b)
{
	return Rational(a) * b;
}

} // namespace loopbv
