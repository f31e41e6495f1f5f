#pragma once

#include "loopbv/element.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace loopbv {

namespace detail {

struct SignatureLess {
	bool operator()(const Signature &a, const Signature &b) const
	{
		return a.n != b.n ? a.n < b.n : a.k < b.k;
	}
};

} // namespace detail

/// The power sums s_{2l} defined inductively by Newton's formula
/// s_{2l} - e_2 s_{2l-2} + e_4 s_{2l-4} - ... + (-1)^l l e_{2l} = 0,
/// run inside the (possibly specialized) ring Z[e_{2k},...,e_{2n}].
inline Element newton_power_sum(int l, Signature sig)
{
	sig.require(l);
	std::vector<Element> s(l + 1, Element::zero(sig, Basis::intersection));
	for (int m = 1; m <= l; ++m)
	{
		Element acc = Element::zero(sig, Basis::intersection);
		for (int i = 1; i < m; ++i)
		{
			if (i < sig.k)
				continue; // e_{2i} is specialized to zero
			Element term = Element::even_gen(sig, Basis::intersection, i) *
			               s[m - i];
			acc += (i % 2 == 1) ? term : -term;
		}
		if (m >= sig.k && m <= sig.n)
		{
			Rational c = Rational((m % 2 == 1) ? m : -m);
			acc += Element::monomial(sig, Basis::intersection,
			                         Monomial::even(m), c);
		}
		s[m] = acc;
	}
	return s[l];
}

/// The primitive h_{2l} = (-1)^{l-1} s_{2l} / l = e_{2l} + (decomposables),
/// as an element of Q[e_{2k},...,e_{2n}].
inline Element newton_primitive(int l, Signature sig)
{
	Element s = newton_power_sum(l, sig);
	Rational c = Rational((l % 2 == 1) ? 1 : -1, l);
	return c * s;
}

/// The two triangular change-of-basis tables between the e- and h-coordinates
/// of a signature: h_{2l} written in the e's and e_{2l} written in the h's.
/// Built once per Signature and cached.
class BasisTables {
  public:
	explicit BasisTables(Signature sig) : sig_(sig)
	{
		h_in_e_.resize(sig.n + 1, Element::zero(sig, Basis::intersection));
		e_in_h_.resize(sig.n + 1, Element::zero(sig, Basis::symplectic));
		for (int l = sig.k; l <= sig.n; ++l)
			h_in_e_[l] = newton_primitive(l, sig);
		// invert the unitriangular relation h_{2l} = e_{2l} + decomposables:
		// the decomposable part only involves e_{2i} with i < l
		for (int l = sig.k; l <= sig.n; ++l)
		{
			Element decomp =
			    h_in_e_[l] -
			    Element::even_gen(sig, Basis::intersection, l);
			Element e_l = Element::even_gen(sig, Basis::symplectic, l) -
			              substitute_e_by_h(decomp);
			e_in_h_[l] = e_l;
		}
	}

	Signature signature() const { return sig_; }

	/// h_{2l} as a polynomial in the e's (intersection basis tag).
	const Element &h_in_e(int l) const
	{
		sig_.require(l);
		return h_in_e_[l];
	}

	/// e_{2l} as a polynomial in the h's (symplectic basis tag).
	const Element &e_in_h(int l) const
	{
		sig_.require(l);
		return e_in_h_[l];
	}

	/// Ring morphism substituting every even generator e_{2l} by its
	/// h-expression; odd generators are fixed. Intersection -> symplectic.
	Element substitute_e_by_h(const Element &a) const
	{
		a.require_basis(Basis::intersection, "to_h_basis");
		return substitute(a, e_in_h_, Basis::symplectic);
	}

	/// Ring morphism substituting every h_{2l} by its e-expression.
	/// Symplectic -> intersection.
	Element substitute_h_by_e(const Element &a) const
	{
		a.require_basis(Basis::symplectic, "from_h_basis");
		return substitute(a, h_in_e_, Basis::intersection);
	}

  private:
	Signature sig_;
	std::vector<Element> h_in_e_;
	std::vector<Element> e_in_h_;

	Element substitute(const Element &a, const std::vector<Element> &table,
	                   Basis out_basis) const
	{
		Element out = Element::zero(sig_, out_basis);
		for (const auto &[m, c] : a.terms())
		{
			Element term = Element::monomial(sig_, out_basis,
			                                 Monomial().with_word(m.word()), c);
			for (int l = sig_.k; l <= sig_.n; ++l)
			{
				int e = m.exp(l);
				for (int i = 0; i < e; ++i)
					term *= table[l];
			}
			out += term;
		}
		return out;
	}
};

/// Shared per-signature cache of the change-of-basis tables.
inline const BasisTables &basis_tables(Signature sig)
{
	static std::map<Signature, BasisTables, detail::SignatureLess> cache;
	static std::mutex mutex;
	std::lock_guard<std::mutex> lock(mutex);
	auto it = cache.find(sig);
	if (it == cache.end())
		it = cache.emplace(sig, BasisTables(sig)).first;
	return it->second;
}

/// e-presentation -> h-presentation (exact ring morphism over Q fixing the
/// odd generators). Symplectic input passes through unchanged.
inline Element to_h_basis(const Element &a)
{
	if (a.basis() == Basis::symplectic)
		return a;
	return basis_tables(a.signature()).substitute_e_by_h(a);
}

/// h-presentation -> e-presentation; inverse of to_h_basis.
inline Element from_h_basis(const Element &a)
{
	if (a.basis() == Basis::intersection)
		return a;
	return basis_tables(a.signature()).substitute_h_by_e(a);
}

/// The derivation d/d(h_{2l}) on the e-presentation. Computed two ways --
/// through the h-coordinates and as the operator D_{2l} -- and checked equal
/// before returning.
inline Element d_dh(int l, const Element &a)
{
	a.require_basis(Basis::intersection, "d_dh");
	Element via_d = d_for_signature(l, a);
	Element via_h = from_h_basis(partial_even(l, to_h_basis(a)));
	if (!(via_d == via_h))
		throw Error("d_dh: the D-operator route and the h-coordinate route "
		            "disagree");
	return via_d;
}

} // namespace loopbv
