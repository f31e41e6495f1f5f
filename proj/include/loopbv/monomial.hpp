#pragma once

#include "loopbv/rational.hpp"

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace loopbv {

/// Largest supported rank parameter n. Generator exponents are capped at 127.
inline constexpr int kMaxRank = 14;
inline constexpr int kMaxExponent = 127;

/// The parameter pair (n, k) selecting SU(n+1) (k = 1) or the Stiefel
/// quotient SU(n+1)/SU(k). Generator indices run over {k, ..., n}; index l
/// names the odd generator alpha_{2l+1} and the even generator e_{2l}.
struct Signature {
	int n = 1;
	int k = 1;

	Signature() = default;
	Signature(int n_, int k_) : n(n_), k(k_)
	{
		if (n < 1 || n > kMaxRank || k < 1 || k > n)
			throw Error("signature: need 1 <= k <= n <= " +
			            std::to_string(kMaxRank));
	}

	bool contains(int l) const { return l >= k && l <= n; }
	int generator_count() const { return n - k + 1; }
	void require(int l) const
	{
		if (!contains(l))
			throw Error("generator index " + std::to_string(l) +
			            " outside {" + std::to_string(k) + ",...," +
			            std::to_string(n) + "}");
	}

	friend bool operator==(const Signature &, const Signature &) = default;
};

/// Exterior word: a strictly increasing set of generator indices, stored as a
/// bitmask (bit l-1 set iff index l is present).
class Word {
  public:
	Word() = default;
	static Word single(int l) { return Word(static_cast<std::uint16_t>(1u << (l - 1))); }
	static Word from_bits(std::uint16_t bits) { return Word(bits); }

	std::uint16_t bits() const { return bits_; }
	bool empty() const { return bits_ == 0; }
	int size() const { return std::popcount(bits_); }
	bool contains(int l) const { return (bits_ >> (l - 1)) & 1u; }
	int parity() const { return size() & 1; }

	Word with(int l) const { return Word(static_cast<std::uint16_t>(bits_ | (1u << (l - 1)))); }
	Word without(int l) const { return Word(static_cast<std::uint16_t>(bits_ & ~(1u << (l - 1)))); }

	/// 1-based position of index l within the increasing word.
	int position(int l) const
	{
		return std::popcount(static_cast<std::uint16_t>(bits_ & ((1u << (l - 1)) - 1u))) + 1;
	}

	/// Indices in increasing order.
	std::vector<int> indices() const
	{
		std::vector<int> out;
		out.reserve(size());
		for (std::uint16_t b = bits_; b != 0; b &= (b - 1))
			out.push_back(std::countr_zero(b) + 1);
		return out;
	}

	auto operator<=>(const Word &) const = default;

  private:
	explicit Word(std::uint16_t bits) : bits_(bits) {}
	std::uint16_t bits_ = 0;
};

/// Sign and union of the juxtaposition of two disjoint increasing words:
/// sgn(I,J) is (-1)^{inversions of the concatenation I|J}. Returns nothing
/// when the words intersect (the exterior square vanishes).
inline std::optional<std::pair<int, Word>> word_merge(Word w1, Word w2)
{
	if (w1.bits() & w2.bits())
		return std::nullopt;
	// inversions = pairs (i in w1, j in w2) with i > j
	int inversions = 0;
	for (std::uint16_t b = w2.bits(); b != 0; b &= (b - 1))
	{
		int bit = std::countr_zero(b);
		inversions += std::popcount(
		    static_cast<std::uint16_t>(w1.bits() >> (bit + 1)));
	}
	Word merged = Word::from_bits(static_cast<std::uint16_t>(w1.bits() | w2.bits()));
	return std::make_pair((inversions & 1) ? -1 : 1, merged);
}

/// A basis monomial: an exterior word together with an exponent vector over
/// the even generators. Packed into 16 bytes; exponents live in byte lanes so
/// that comparisons and multiplication are branch-light.
class Monomial {
  public:
	Monomial() = default;

	Word word() const
	{
		return Word::from_bits(static_cast<std::uint16_t>(hi_ >> 48));
	}

	int exp(int l) const
	{
		if (l <= 8)
			return static_cast<int>((lo_ >> (8 * (l - 1))) & 0xff);
		return static_cast<int>((hi_ >> (8 * (l - 9))) & 0xff);
	}

	int parity() const { return word().parity(); }
	bool is_unit() const { return lo_ == 0 && hi_ == 0; }
	bool has_even_part() const { return (lo_ | (hi_ & kExpMask)) != 0; }

	/// Total exponent sum of the even part.
	int exponent_sum() const
	{
		int s = 0;
		for (int i = 0; i < 8; ++i)
			s += static_cast<int>((lo_ >> (8 * i)) & 0xff);
		for (int i = 0; i < 6; ++i)
			s += static_cast<int>((hi_ >> (8 * i)) & 0xff);
		return s;
	}

	/// Weighted exponent sum of the even part: sum over l of l * exp(l)
	/// (half the homological degree contributed by the even generators).
	int weight() const
	{
		int s = 0;
		for (int l = 1; l <= kMaxRank; ++l)
			s += l * exp(l);
		return s;
	}

	Monomial with_word(Word w) const
	{
		Monomial m = *this;
		m.hi_ = (m.hi_ & kExpMask) |
		        (static_cast<std::uint64_t>(w.bits()) << 48);
		return m;
	}

	Monomial with_exp(int l, int e) const
	{
		if (e < 0 || e > kMaxExponent)
			throw Error("monomial: exponent out of range");
		Monomial m = *this;
		if (l <= 8)
		{
			m.lo_ &= ~(std::uint64_t{0xff} << (8 * (l - 1)));
			m.lo_ |= static_cast<std::uint64_t>(e) << (8 * (l - 1));
		}
		else
		{
			m.hi_ &= ~(std::uint64_t{0xff} << (8 * (l - 9)));
			m.hi_ |= static_cast<std::uint64_t>(e) << (8 * (l - 9));
		}
		return m;
	}

	static Monomial unit() { return Monomial(); }
	static Monomial alpha(int l) { return Monomial().with_word(Word::single(l)); }
	static Monomial even(int l, int e = 1) { return Monomial().with_exp(l, e); }

	/// Graded product. Returns nothing when the exterior words intersect;
	/// otherwise the Koszul sign of the word merge and the combined monomial
	/// (even parts multiply commutatively, no sign).
	static std::optional<std::pair<int, Monomial>> mul(const Monomial &a,
	                                                   const Monomial &b)
	{
		auto merged = word_merge(a.word(), b.word());
		if (!merged)
			return std::nullopt;
		std::uint64_t lo = a.lo_ + b.lo_;
		std::uint64_t hi = (a.hi_ & kExpMask) + (b.hi_ & kExpMask);
		if (((a.lo_ | b.lo_ | lo) & kOverflowMask) != 0 ||
		    ((a.hi_ | b.hi_ | hi) & kOverflowMask & kExpMask) != 0)
		{
			// slow path only to produce a precise error
			for (int l = 1; l <= kMaxRank; ++l)
				if (a.exp(l) + b.exp(l) > kMaxExponent)
					throw Error("monomial: exponent out of range");
		}
		Monomial m;
		m.lo_ = lo;
		m.hi_ = hi | (static_cast<std::uint64_t>(merged->second.bits()) << 48);
		return std::make_pair(merged->first, m);
	}

	/// Canonical order: exterior word first (hi_ carries it in its top bits),
	/// then exponents; the unit monomial sorts first.
	auto operator<=>(const Monomial &o) const
	{
		if (auto c = hi_ <=> o.hi_; c != 0)
			return c;
		return lo_ <=> o.lo_;
	}
	bool operator==(const Monomial &) const = default;

	std::uint64_t packed_lo() const { return lo_; }
	std::uint64_t packed_hi() const { return hi_; }

	std::size_t hash() const
	{
		std::uint64_t h = lo_ * 0x9e3779b97f4a7c15ULL;
		h ^= (hi_ + 0x9e3779b97f4a7c15ULL) + (h << 6) + (h >> 2);
		return static_cast<std::size_t>(h);
	}

  private:
	// lo_: exponent byte lanes for generators 1..8.
	// hi_: exponent byte lanes for generators 9..14 (bytes 0..5),
	//      exterior word bitmask in bits 48..63.
	static constexpr std::uint64_t kExpMask = 0x0000ffffffffffffULL;
	static constexpr std::uint64_t kOverflowMask = 0x8080808080808080ULL;
	std::uint64_t lo_ = 0;
	std::uint64_t hi_ = 0;
};

enum class Basis : std::uint8_t {
	intersection, ///< alpha/e presentation of loop homology
	pontrjagin,   ///< x/e presentation of the Pontrjagin ring
	symplectic,   ///< alpha/h presentation over the rationals
};

inline const char *basis_name(Basis b)
{
	switch (b)
	{
	case Basis::intersection:
		return "intersection";
	case Basis::pontrjagin:
		return "pontrjagin";
	case Basis::symplectic:
		return "symplectic";
	}
	return "?";
}

struct DegreeParity {
	int degree = 0;
	int parity = 0;
};

/// Degree and parity of a monomial. In the intersection and symplectic
/// presentations the odd generator alpha_{2l+1} has degree -(2l+1); in the
/// Pontrjagin presentation x_{2l+1} has degree +(2l+1). Even generators have
/// degree 2l throughout.
inline DegreeParity degree(const Monomial &m, Basis basis)
{
	int deg = 0;
	for (int l : m.word().indices())
		deg += (basis == Basis::pontrjagin) ? (2 * l + 1) : -(2 * l + 1);
	for (int l = 1; l <= kMaxRank; ++l)
		deg += 2 * l * m.exp(l);
	return {deg, m.parity()};
}

} // namespace loopbv
