#pragma once

#include "loopbv/monomial.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

namespace loopbv {

/// A finite linear combination of basis monomials with exact rational
/// coefficients. All monomials share one Signature and one basis tag; terms
/// are kept sorted with no zero coefficients, so equality is structural.
class Element {
  public:
	using Term = std::pair<Monomial, Rational>;

	Element(Signature sig, Basis basis) : sig_(sig), basis_(basis) {}

	static Element zero(Signature sig, Basis basis) { return Element(sig, basis); }

	static Element unit(Signature sig, Basis basis)
	{
		return monomial(sig, basis, Monomial::unit());
	}

	static Element monomial(Signature sig, Basis basis, const Monomial &m,
	                        Rational c = Rational(1))
	{
		for (int l = 1; l <= kMaxRank; ++l)
			if (!sig.contains(l) && (m.exp(l) != 0 || m.word().contains(l)))
				throw Error("element: monomial uses generator " +
				            std::to_string(l) + " outside the signature");
		Element e(sig, basis);
		if (!c.is_zero())
			e.terms_.emplace_back(m, std::move(c));
		return e;
	}

	/// The odd generator alpha_{2l+1} (or x_{2l+1} in the Pontrjagin basis).
	static Element odd_gen(Signature sig, Basis basis, int l)
	{
		sig.require(l);
		return monomial(sig, basis, Monomial::alpha(l));
	}

	/// The even generator e_{2l} (or h_{2l} in the symplectic basis).
	static Element even_gen(Signature sig, Basis basis, int l)
	{
		sig.require(l);
		return monomial(sig, basis, Monomial::even(l));
	}

	static Element from_terms(Signature sig, Basis basis,
	                          std::vector<Term> terms)
	{
		Element e(sig, basis);
		e.terms_ = std::move(terms);
		e.normalize();
		return e;
	}

	Signature signature() const { return sig_; }
	Basis basis() const { return basis_; }
	const std::vector<Term> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t term_count() const { return terms_.size(); }

	/// True iff every coefficient has denominator 1.
	bool is_integral() const
	{
		for (const auto &[m, c] : terms_)
			if (!c.is_integer())
				return false;
		return true;
	}

	/// Parity (0 or 1) if all terms agree, -1 for mixed parity, 0 for zero.
	int parity() const
	{
		if (terms_.empty())
			return 0;
		int p = terms_.front().first.parity();
		for (const auto &[m, c] : terms_)
			if (m.parity() != p)
				return -1;
		return p;
	}

	/// Projection onto the terms of the given parity.
	Element parity_part(int p) const
	{
		Element out(sig_, basis_);
		for (const auto &[m, c] : terms_)
			if (m.parity() == p)
				out.terms_.emplace_back(m, c);
		return out;
	}

	Rational coefficient(const Monomial &m) const
	{
		auto it = std::lower_bound(
		    terms_.begin(), terms_.end(), m,
		    [](const Term &t, const Monomial &key) { return t.first < key; });
		if (it != terms_.end() && it->first == m)
			return it->second;
		return Rational(0);
	}

	Element operator-() const
	{
		Element out(sig_, basis_);
		out.terms_.reserve(terms_.size());
		for (const auto &[m, c] : terms_)
			out.terms_.emplace_back(m, -c);
		return out;
	}

	friend Element operator+(const Element &a, const Element &b)
	{
		a.require_compatible(b);
		Element out(a.sig_, a.basis_);
		out.terms_.reserve(a.terms_.size() + b.terms_.size());
		auto ia = a.terms_.begin(), ib = b.terms_.begin();
		while (ia != a.terms_.end() && ib != b.terms_.end())
		{
			if (ia->first < ib->first)
				out.terms_.push_back(*ia++);
			else if (ib->first < ia->first)
				out.terms_.push_back(*ib++);
			else
			{
				Rational c = ia->second + ib->second;
				if (!c.is_zero())
					out.terms_.emplace_back(ia->first, std::move(c));
				++ia;
				++ib;
			}
		}
		out.terms_.insert(out.terms_.end(), ia, a.terms_.end());
		out.terms_.insert(out.terms_.end(), ib, b.terms_.end());
		return out;
	}

	friend Element operator-(const Element &a, const Element &b)
	{
		return a + (-b);
	}

	friend Element operator*(const Rational &c, const Element &a)
	{
		Element out(a.sig_, a.basis_);
		if (c.is_zero())
			return out;
		out.terms_.reserve(a.terms_.size());
		for (const auto &[m, coeff] : a.terms_)
			out.terms_.emplace_back(m, c * coeff);
		return out;
	}

	/// Graded-commutative product: bilinear extension of the monomial
	/// product, Koszul signs from the exterior words.
	friend Element operator*(const Element &a, const Element &b)
	{
		a.require_compatible(b);
		Element out(a.sig_, a.basis_);
		out.terms_.reserve(a.terms_.size() * b.terms_.size());
		for (const auto &[ma, ca] : a.terms_)
			for (const auto &[mb, cb] : b.terms_)
			{
				auto prod = Monomial::mul(ma, mb);
				if (!prod)
					continue;
				Rational c = ca * cb;
				if (prod->first < 0)
					c = -c;
				out.terms_.emplace_back(prod->second, std::move(c));
			}
		out.normalize();
		return out;
	}

	Element &operator+=(const Element &o) { return *this = *this + o; }
	Element &operator-=(const Element &o) { return *this = *this - o; }
	Element &operator*=(const Element &o) { return *this = *this * o; }

	friend bool operator==(const Element &a, const Element &b)
	{
		return a.sig_ == b.sig_ && a.basis_ == b.basis_ &&
		       a.terms_ == b.terms_;
	}

	void require_compatible(const Element &o) const
	{
		if (!(sig_ == o.sig_))
			throw Error("element: signature mismatch");
		if (basis_ != o.basis_)
			throw Error(std::string("element: basis mismatch (") +
			            basis_name(basis_) + " vs " + basis_name(o.basis_) +
			            ")");
	}

	void require_basis(Basis b, const char *what) const
	{
		if (basis_ != b)
			throw Error(std::string(what) + ": expected " + basis_name(b) +
			            " basis, got " + basis_name(basis_));
	}

	/// Same terms viewed in another basis tag; only for conversions that are
	/// the identity on coefficients (e.g. relabeling e as h for n = k).
	Element retagged(Basis b) const
	{
		Element out(sig_, b);
		out.terms_ = terms_;
		return out;
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
			Monomial m = terms_[r].first;
			Rational c = std::move(terms_[r].second);
			for (++r; r < terms_.size() && terms_[r].first == m; ++r)
				c += terms_[r].second;
			if (!c.is_zero())
				terms_[w++] = {m, std::move(c)};
		}
		terms_.resize(w);
	}
};

// ---------------------------------------------------------------------------
// Derivations and differential operators of the core superalgebra.
// ---------------------------------------------------------------------------

/// The odd derivation d/d(alpha_{2l+1}): kills monomials not containing l,
/// otherwise removes l with the sign (-1)^{position-1}.
inline Element partial_alpha(int l, const Element &a)
{
	a.signature().require(l);
	if (a.basis() == Basis::pontrjagin)
		throw Error("partial_alpha: not defined on the Pontrjagin basis");
	std::vector<Element::Term> out;
	for (const auto &[m, c] : a.terms())
	{
		Word w = m.word();
		if (!w.contains(l))
			continue;
		int sign = (w.position(l) % 2 == 1) ? 1 : -1;
		out.emplace_back(m.with_word(w.without(l)), sign < 0 ? -c : c);
	}
	return Element::from_terms(a.signature(), a.basis(), std::move(out));
}

/// Plain per-variable derivative with respect to the even generator of index
/// l (e_{2l} in the e-presentations, h_{2l} in the symplectic one).
inline Element partial_even(int l, const Element &a)
{
	a.signature().require(l);
	std::vector<Element::Term> out;
	for (const auto &[m, c] : a.terms())
	{
		int e = m.exp(l);
		if (e == 0)
			continue;
		out.emplace_back(m.with_exp(l, e - 1), Rational(e) * c);
	}
	return Element::from_terms(a.signature(), a.basis(), std::move(out));
}

namespace detail {

/// Shared kernel for D_{2l} and its Stiefel variant D^{(k)}_{2l}: the terms
/// e_{2(m-l)} d/d(e_{2m}) for m = l..n, where e_0 = 1 and the factors
/// e_2,...,e_{2k-2} are specialized to zero when k > 1.
inline void d_operator_monomial(int l, const Monomial &m, const Rational &c,
                                const Signature &sig,
                                std::vector<Element::Term> &out)
{
	for (int g = l; g <= sig.n; ++g)
	{
		int e = m.exp(g);
		if (e == 0)
			continue;
		int factor = g - l;
		if (factor != 0 && factor < sig.k)
			continue; // specialized to zero in the quotient ring
		Monomial t = m.with_exp(g, e - 1);
		if (factor != 0)
			t = t.with_exp(factor, t.exp(factor) + 1);
		out.emplace_back(t, Rational(e) * c);
	}
}

inline Element d_operator(int l, const Element &p)
{
	// D^{(k)}_{2l} makes sense for any 1 <= l <= n (it is D_{2l} with
	// e_2,...,e_{2k-2} set to zero), even though Delta only sums l = k..n.
	if (l < 1 || l > p.signature().n)
		throw Error("D operator: index " + std::to_string(l) +
		            " outside 1.." + std::to_string(p.signature().n));
	std::vector<Element::Term> out;
	for (const auto &[m, c] : p.terms())
	{
		if (!m.word().empty())
			throw Error("D operator: element must be purely even");
		d_operator_monomial(l, m, c, p.signature(), out);
	}
	return Element::from_terms(p.signature(), p.basis(), std::move(out));
}

} // namespace detail

/// The differential operator D_{2l} = sum_{m=l}^{n} e_{2m-2l} d/d(e_{2m})
/// on the polynomial ring Z[e_2,...,e_{2n}] (with e_0 = 1).
inline Element d_op(int l, const Element &p)
{
	if (p.signature().k != 1)
		throw Error("d_op: requires the SU case (k = 1); use d_op_stiefel");
	return detail::d_operator(l, p);
}

/// The Stiefel operator D^{(k)}_{2l}: d/d(e_{2l}) plus
/// sum_{j=k}^{n-l} e_{2j} d/d(e_{2l+2j}) when l <= n-k, else d/d(e_{2l});
/// equal to D_{2l} with e_2,...,e_{2k-2} specialized to zero.
inline Element d_op_stiefel(int l, const Element &p)
{
	return detail::d_operator(l, p);
}

/// D_{2l} for k = 1 signatures, D^{(k)}_{2l} otherwise.
inline Element d_for_signature(int l, const Element &p)
{
	return detail::d_operator(l, p);
}

} // namespace loopbv
