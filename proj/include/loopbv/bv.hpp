#pragma once

#include "loopbv/enumerate.hpp"
#include "loopbv/hopf.hpp"
#include "loopbv/newton.hpp"

#include <vector>

namespace loopbv {

namespace detail {

/// Delta on a single intersection-basis monomial, appended to out:
/// Delta(alpha_I e^J) = sum_{l in I} (-1)^{pos(l)-1} alpha_{I\l} D_{2l}(e^J).
inline void bv_delta_monomial(const Monomial &m, const Rational &c,
                              const Signature &sig,
                              std::vector<Element::Term> &out)
{
	Word w = m.word();
	for (std::uint16_t b = w.bits(); b != 0; b &= (b - 1))
	{
		int l = std::countr_zero(b) + 1;
		int sign = (w.position(l) % 2 == 1) ? 1 : -1;
		Monomial base = m.with_word(w.without(l));
		d_operator_monomial(l, base, sign < 0 ? -c : c, sig, out);
	}
}

} // namespace detail

/// The BV operator on loop homology:
/// Delta(alpha_I e^J) = sum_l (d alpha_I / d alpha_{2l+1}) . D_{2l}(e^J),
/// with D^{(k)} in place of D for Stiefel signatures.
inline Element bv_delta(const Element &a)
{
	a.require_basis(Basis::intersection, "bv_delta");
	std::vector<Element::Term> out;
	for (const auto &[m, c] : a.terms())
		detail::bv_delta_monomial(m, c, a.signature(), out);
	return Element::from_terms(a.signature(), Basis::intersection,
	                           std::move(out));
}

/// The BV operator computed along the paper's derivation route: transport to
/// the Pontrjagin ring, apply the homological circle action, transport back.
/// SU case only.
inline Element bv_delta_via_pontrjagin(const Element &a)
{
	return to_intersection(delta_pontrjagin(to_pontrjagin(a)));
}

/// The BV Lie bracket as the deviation of Delta from being a derivation:
/// {a,b} = (-1)^{|a|} (Delta(a o b) - Delta(a) o b) - a o Delta(b),
/// extended bilinearly over parity-homogeneous parts. This is the oracle
/// definition every closed form is checked against.
inline Element bracket_deviation(const Element &a, const Element &b)
{
	a.require_compatible(b);
	a.require_basis(Basis::intersection, "bracket_deviation");
	Element out = Element::zero(a.signature(), a.basis());
	for (int pa = 0; pa <= 1; ++pa)
	{
		Element ap = a.parity_part(pa);
		if (ap.is_zero())
			continue;
		for (int pb = 0; pb <= 1; ++pb)
		{
			Element bp = b.parity_part(pb);
			if (bp.is_zero())
				continue;
			Element dev = bv_delta(ap * bp) - bv_delta(ap) * bp;
			if (pa == 1)
				dev = -dev;
			out += dev - ap * bv_delta(bp);
		}
	}
	return out;
}

/// The closed-form bracket of Theorem A(2):
/// {alpha_I e^J, alpha_K e^L} =
///   (-1)^{|I|} Delta(alpha_I e^L) o alpha_K e^J
///   + alpha_I e^L o Delta(alpha_K e^J)
/// (the e-terms switched), expanded bilinearly over monomials. Must agree
/// with bracket_deviation identically; that equality is the content of the
/// theorem and is asserted by the verification suites.
inline Element bracket_closed(const Element &a, const Element &b)
{
	a.require_compatible(b);
	a.require_basis(Basis::intersection, "bracket_closed");
	Signature sig = a.signature();
	Element out = Element::zero(sig, Basis::intersection);
	for (const auto &[ma, ca] : a.terms())
		for (const auto &[mb, cb] : b.terms())
		{
			// swap the even parts of the two monomials
			Element left = Element::monomial(sig, Basis::intersection,
			                                 mb.with_word(ma.word()));
			Element right = Element::monomial(sig, Basis::intersection,
			                                  ma.with_word(mb.word()));
			Element t = bv_delta(left) * right;
			if (ma.parity() == 1)
				t = -t;
			t += left * bv_delta(right);
			out += (ca * cb) * t;
		}
	return out;
}

/// Projection of an element onto the terms with exterior word length p
/// (the L(p) filtration component).
inline Element filtration_component(int p, const Element &a)
{
	if (p < 0)
		throw Error("filtration_component: negative word length");
	std::vector<Element::Term> out;
	for (const auto &[m, c] : a.terms())
		if (m.word().size() == p)
			out.emplace_back(m, c);
	return Element::from_terms(a.signature(), a.basis(), std::move(out));
}

// ---------------------------------------------------------------------------
// Sphere specialization (n = k): loop homology of S^{2n+1}.
// ---------------------------------------------------------------------------

/// The full Delta/bracket table of the loop homology of an odd sphere,
/// Lambda(alpha) (x) Z[h], for exponents up to lmax. Every entry is computed
/// by the general machinery on the n = k signature and checked against the
/// closed forms Delta(alpha h^l) = l h^{l-1},
/// {alpha h^{k+1}, alpha h^{l+1}} = (k-l) alpha h^{k+l+1} and
/// {alpha h^{k+1}, h^m} = -m h^{k+m}; a mismatch throws.
struct SphereTable {
	Signature sig;               ///< the n = k signature in use
	int lmax = 0;                ///< exponent bound
	std::vector<Element> delta_even; ///< Delta(h^l), l = 0..lmax
	std::vector<Element> delta_odd;  ///< Delta(alpha h^l), l = 0..lmax
	/// brackets {alpha h^a, alpha h^b} and {alpha h^a, h^m}, a,b,m <= lmax
	std::vector<std::vector<Element>> bracket_odd_odd;
	std::vector<std::vector<Element>> bracket_odd_even;
};

inline SphereTable sphere_bv(int lmax, int sphere_rank = 1)
{
	if (lmax < 0)
		throw Error("sphere_bv: negative exponent bound");
	Signature sig(sphere_rank, sphere_rank);
	const int g = sig.n;
	auto h_pow = [&](int e) {
		return Element::monomial(sig, Basis::intersection,
		                         Monomial().with_exp(g, e));
	};
	auto alpha_h = [&](int e) {
		return Element::monomial(sig, Basis::intersection,
		                         Monomial::alpha(g).with_exp(g, e));
	};
	SphereTable table{sig, lmax, {}, {}, {}, {}};
	for (int l = 0; l <= lmax; ++l)
	{
		Element de = bv_delta(h_pow(l));
		if (!de.is_zero())
			throw Error("sphere_bv: Delta(h^l) != 0");
		Element da = bv_delta(alpha_h(l));
		Element da_closed = l == 0 ? Element::zero(sig, Basis::intersection)
		                           : Rational(l) * h_pow(l - 1);
		if (!(da == da_closed))
			throw Error("sphere_bv: Delta(alpha h^l) != l h^{l-1}");
		table.delta_even.push_back(de.retagged(Basis::symplectic));
		table.delta_odd.push_back(da.retagged(Basis::symplectic));
	}
	table.bracket_odd_odd.resize(lmax + 1);
	table.bracket_odd_even.resize(lmax + 1);
	for (int a = 0; a <= lmax; ++a)
		for (int b = 0; b <= lmax; ++b)
		{
			Element oo = bracket_deviation(alpha_h(a), alpha_h(b));
			Element oo_closed =
			    a == b ? Element::zero(sig, Basis::intersection)
			           : Rational(a - b) * alpha_h(a + b - 1);
			if (!(oo == oo_closed))
				throw Error("sphere_bv: {alpha h^a, alpha h^b} mismatch");
			Element oe = bracket_deviation(alpha_h(a), h_pow(b));
			Element oe_closed =
			    b == 0 ? Element::zero(sig, Basis::intersection)
			           : Rational(-b) * h_pow(a + b - 1);
			if (!(oe == oe_closed))
				throw Error("sphere_bv: {alpha h^a, h^m} mismatch");
			table.bracket_odd_odd[a].push_back(oo.retagged(Basis::symplectic));
			table.bracket_odd_even[a].push_back(oe.retagged(Basis::symplectic));
		}
	return table;
}

// ---------------------------------------------------------------------------
// Rational splitting (Corollary C).
// ---------------------------------------------------------------------------

/// The pair-local operator of the tensor factor H(l) acting on an alpha/h
/// monomial: kill it unless l is in the word, otherwise strip alpha_{2l+1}
/// with the Koszul sign of its position and differentiate h_{2l} once.
inline Element pair_local_delta(int l, const Element &a)
{
	a.require_basis(Basis::symplectic, "pair_local_delta");
	return partial_even(l, partial_alpha(l, a));
}

/// True iff, in the alpha/h coordinates, Delta acts as the sum of the
/// pair-local operators of the factors H(1), ..., H(n) on every monomial of
/// weight <= bound; this pair-locality forces the tensor splitting of the
/// BV algebra over the rationals.
inline bool rational_splitting_check(Signature sig, int bound)
{
	if (sig.k != 1)
		throw Error("rational_splitting_check: requires k = 1");
	for (const Monomial &m : basis_monomials(sig, bound))
	{
		Element x = Element::monomial(sig, Basis::symplectic, m);
		Element lhs = to_h_basis(bv_delta(from_h_basis(x)));
		Element rhs = Element::zero(sig, Basis::symplectic);
		for (int l = sig.k; l <= sig.n; ++l)
			rhs += pair_local_delta(l, x);
		if (!(lhs == rhs))
			return false;
	}
	return true;
}

} // namespace loopbv
