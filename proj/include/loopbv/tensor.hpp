#pragma once

#include "loopbv/element.hpp"

#include <utility>
#include <vector>

namespace loopbv {

/// A finite linear combination of ordered monomial pairs: the codomain of
/// the coproduct. Both tensor factors share the Signature and basis tag.
class TensorElement {
  public:
	using Key = std::pair<Monomial, Monomial>;
	using Term = std::pair<Key, Rational>;

	TensorElement(Signature sig, Basis basis) : sig_(sig), basis_(basis) {}

	static TensorElement zero(Signature sig, Basis basis)
	{
		return TensorElement(sig, basis);
	}

	static TensorElement simple(Signature sig, Basis basis, const Monomial &a,
	                            const Monomial &b, Rational c = Rational(1))
	{
		TensorElement t(sig, basis);
		if (!c.is_zero())
			t.terms_.emplace_back(Key{a, b}, std::move(c));
		return t;
	}

	static TensorElement unit(Signature sig, Basis basis)
	{
		return simple(sig, basis, Monomial::unit(), Monomial::unit());
	}

	/// Tensor product of two elements, no interleaving sign.
	static TensorElement outer(const Element &a, const Element &b)
	{
		a.require_compatible(b);
		TensorElement t(a.signature(), a.basis());
		for (const auto &[ma, ca] : a.terms())
			for (const auto &[mb, cb] : b.terms())
				t.terms_.emplace_back(Key{ma, mb}, ca * cb);
		t.normalize();
		return t;
	}

	Signature signature() const { return sig_; }
	Basis basis() const { return basis_; }
	const std::vector<Term> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	TensorElement operator-() const
	{
		TensorElement out(sig_, basis_);
		out.terms_.reserve(terms_.size());
		for (const auto &[k, c] : terms_)
			out.terms_.emplace_back(k, -c);
		return out;
	}

	friend TensorElement operator+(const TensorElement &a,
	                               const TensorElement &b)
	{
		a.require_compatible(b);
		TensorElement out(a.sig_, a.basis_);
		out.terms_ = a.terms_;
		out.terms_.insert(out.terms_.end(), b.terms_.begin(), b.terms_.end());
		out.normalize();
		return out;
	}

	friend TensorElement operator-(const TensorElement &a,
	                               const TensorElement &b)
	{
		return a + (-b);
	}

	friend TensorElement operator*(const Rational &c, const TensorElement &a)
	{
		TensorElement out(a.sig_, a.basis_);
		if (c.is_zero())
			return out;
		out.terms_.reserve(a.terms_.size());
		for (const auto &[k, coeff] : a.terms_)
			out.terms_.emplace_back(k, c * coeff);
		return out;
	}

	/// Super tensor product: (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd.
	friend TensorElement operator*(const TensorElement &a,
	                               const TensorElement &b)
	{
		a.require_compatible(b);
		TensorElement out(a.sig_, a.basis_);
		out.terms_.reserve(a.terms_.size() * b.terms_.size());
		for (const auto &[ka, ca] : a.terms_)
			for (const auto &[kb, cb] : b.terms_)
			{
				auto left = Monomial::mul(ka.first, kb.first);
				if (!left)
					continue;
				auto right = Monomial::mul(ka.second, kb.second);
				if (!right)
					continue;
				int sign = left->first * right->first;
				if (ka.second.parity() & kb.first.parity())
					sign = -sign;
				Rational c = ca * cb;
				if (sign < 0)
					c = -c;
				out.terms_.emplace_back(Key{left->second, right->second},
				                        std::move(c));
			}
		out.normalize();
		return out;
	}

	TensorElement &operator+=(const TensorElement &o)
	{
		return *this = *this + o;
	}
	TensorElement &operator*=(const TensorElement &o)
	{
		return *this = *this * o;
	}

	friend bool operator==(const TensorElement &a, const TensorElement &b)
	{
		return a.sig_ == b.sig_ && a.basis_ == b.basis_ &&
		       a.terms_ == b.terms_;
	}

	/// Graded flip a (x) b -> (-1)^{|a||b|} b (x) a.
	TensorElement flip() const
	{
		TensorElement out(sig_, basis_);
		out.terms_.reserve(terms_.size());
		for (const auto &[k, c] : terms_)
		{
			bool neg = (k.first.parity() & k.second.parity()) != 0;
			out.terms_.emplace_back(Key{k.second, k.first}, neg ? -c : c);
		}
		out.normalize();
		return out;
	}

	/// Terms whose left factor is exactly the given monomial, as an element.
	Element left_slice(const Monomial &left) const
	{
		std::vector<Element::Term> out;
		for (const auto &[k, c] : terms_)
			if (k.first == left)
				out.emplace_back(k.second, c);
		return Element::from_terms(sig_, basis_, std::move(out));
	}

	void require_compatible(const TensorElement &o) const
	{
		if (!(sig_ == o.sig_) || basis_ != o.basis_)
			throw Error("tensor: signature or basis mismatch");
	}

  private:
	Signature sig_;
	Basis basis_;
	std::vector<Term> terms_;

	void normalize()
	{
		std::sort(terms_.begin(), terms_.end(),
		          [](const Term &a, const Term &b) { return a.first < b.first; });
		std::size_t w = 0;
		for (std::size_t r = 0; r < terms_.size();)
		{
			Key k = terms_[r].first;
			Rational c = std::move(terms_[r].second);
			for (++r; r < terms_.size() && terms_[r].first == k; ++r)
				c += terms_[r].second;
			if (!c.is_zero())
				terms_[w++] = {k, std::move(c)};
		}
		terms_.resize(w);
	}
};

namespace detail {

/// phi(e_{2m}) = sum_{i+j=m} e_{2i} (x) e_{2j}, with e_0 = 1 and the factors
/// e_2,...,e_{2k-2} specialized to zero in the Stiefel case.
inline TensorElement coproduct_even_gen(int m, Signature sig, Basis basis)
{
	TensorElement out(sig, basis);
	for (int i = 0; i <= m; ++i)
	{
		int j = m - i;
		bool i_ok = i == 0 || (i >= sig.k && i <= sig.n);
		bool j_ok = j == 0 || (j >= sig.k && j <= sig.n);
		if (!i_ok || !j_ok)
			continue;
		Monomial left = i == 0 ? Monomial::unit() : Monomial::even(i);
		Monomial right = j == 0 ? Monomial::unit() : Monomial::even(j);
		out += TensorElement::simple(sig, basis, left, right);
	}
	return out;
}

} // namespace detail

/// The coalgebra map: multiplicative extension of
/// phi(e_{2m}) = sum_{i+j=m} e_{2i} (x) e_{2j} with all odd generators
/// primitive. Odd words require the Pontrjagin basis; purely even input is
/// accepted in any basis.
inline TensorElement coproduct(const Element &p)
{
	Signature sig = p.signature();
	Basis basis = p.basis();
	TensorElement out(sig, basis);
	for (const auto &[m, c] : p.terms())
	{
		if (!m.word().empty() && basis != Basis::pontrjagin)
			throw Error("coproduct: odd generators require the Pontrjagin "
			            "basis");
		TensorElement t = TensorElement::unit(sig, basis);
		for (int l : m.word().indices())
		{
			TensorElement prim =
			    TensorElement::simple(sig, basis, Monomial::alpha(l),
			                          Monomial::unit()) +
			    TensorElement::simple(sig, basis, Monomial::unit(),
			                          Monomial::alpha(l));
			t *= prim;
		}
		for (int l = sig.k; l <= sig.n; ++l)
		{
			int e = m.exp(l);
			if (e == 0)
				continue;
			TensorElement gen = detail::coproduct_even_gen(l, sig, basis);
			for (int i = 0; i < e; ++i)
				t *= gen;
		}
		out += c * t;
	}
	return out;
}

/// Counit composed on the left leg: (eps (x) 1) phi.
inline Element counit_left(const TensorElement &t)
{
	return t.left_slice(Monomial::unit());
}

} // namespace loopbv
