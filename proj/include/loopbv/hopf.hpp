#pragma once

#include "loopbv/tensor.hpp"

#include <utility>
#include <vector>

namespace loopbv {

/// A strictly increasing word of cohomology generators y_{2l+1}.
struct CohomologyWord {
	Word word;
	explicit CohomologyWord(Word w) : word(w) {}
};

/// Kronecker pairing <y_I, x_J> = (-1)^{|I|(|I|-1)/2} delta_{I,J}.
inline Rational kronecker(const CohomologyWord &y, const Word &x)
{
	if (y.word != x)
		return Rational(0);
	int r = x.size();
	return (r * (r - 1) / 2) % 2 == 0 ? Rational(1) : Rational(-1);
}

namespace detail {

inline Word full_word(Signature sig)
{
	std::uint16_t bits = 0;
	for (int l = sig.k; l <= sig.n; ++l)
		bits |= static_cast<std::uint16_t>(1u << (l - 1));
	return Word::from_bits(bits);
}

/// Sign and complement word of the duality dictionary
/// alpha_I = (-1)^{|I|(|I|-1)/2} sgn(I, I^c) x_{I^c}, complement in U_k.
inline std::pair<int, Word> duality_word(Word I, Signature sig)
{
	Word full = full_word(sig);
	if ((I.bits() & ~full.bits()) != 0)
		throw Error("duality: word outside the signature's generators");
	Word comp = Word::from_bits(static_cast<std::uint16_t>(full.bits() & ~I.bits()));
	int r = I.size();
	int sign = (r * (r - 1) / 2) % 2 == 0 ? 1 : -1;
	auto merged = word_merge(I, comp);
	sign *= merged->first;
	return {sign, comp};
}

} // namespace detail

/// The Poincare-duality image of alpha_I as a signed Pontrjagin monomial.
inline Element alpha_to_x(Word I, Signature sig)
{
	auto [sign, comp] = detail::duality_word(I, sig);
	return Element::monomial(sig, Basis::pontrjagin,
	                         Monomial().with_word(comp), Rational(sign));
}

/// Inverse dictionary: x_J as a signed intersection monomial.
inline Element x_to_alpha(Word J, Signature sig)
{
	Word full = detail::full_word(sig);
	if ((J.bits() & ~full.bits()) != 0)
		throw Error("duality: word outside the signature's generators");
	Word I = Word::from_bits(static_cast<std::uint16_t>(full.bits() & ~J.bits()));
	auto [sign, comp] = detail::duality_word(I, sig);
	// sign is +-1, so the inverse coefficient equals the forward one
	return Element::monomial(sig, Basis::intersection, Monomial().with_word(I),
	                         Rational(sign));
}

/// Basis change of a whole element, intersection (alpha/e) -> Pontrjagin
/// (x/e); the even part is carried across unchanged.
inline Element to_pontrjagin(const Element &a)
{
	a.require_basis(Basis::intersection, "to_pontrjagin");
	std::vector<Element::Term> out;
	out.reserve(a.terms().size());
	for (const auto &[m, c] : a.terms())
	{
		auto [sign, comp] = detail::duality_word(m.word(), a.signature());
		out.emplace_back(m.with_word(comp), sign < 0 ? -c : c);
	}
	return Element::from_terms(a.signature(), Basis::pontrjagin,
	                           std::move(out));
}

/// Basis change Pontrjagin (x/e) -> intersection (alpha/e).
inline Element to_intersection(const Element &a)
{
	a.require_basis(Basis::pontrjagin, "to_intersection");
	Word full = detail::full_word(a.signature());
	std::vector<Element::Term> out;
	out.reserve(a.terms().size());
	for (const auto &[m, c] : a.terms())
	{
		Word I = Word::from_bits(
		    static_cast<std::uint16_t>(full.bits() & ~m.word().bits()));
		auto [sign, comp] = detail::duality_word(I, a.signature());
		out.emplace_back(m.with_word(I), sign < 0 ? -c : c);
	}
	return Element::from_terms(a.signature(), Basis::intersection,
	                           std::move(out));
}

/// The intersection product alpha_I o alpha_J = sgn(I,J) alpha_{I u J} on
/// disjoint words (zero otherwise), extended bilinearly. This is the graded
/// product of the alpha/e presentation.
inline Element intersection_mul(const Element &a, const Element &b)
{
	a.require_basis(Basis::intersection, "intersection_mul");
	b.require_basis(Basis::intersection, "intersection_mul");
	return a * b;
}

/// Pontrjagin action of x_{2i+1} on an intersection-basis element, computed
/// through the duality dictionary: convert, multiply on the left by x_{2i+1},
/// convert back. Coincides with partial_alpha; the equality is asserted by
/// the verification suites, not assumed here.
inline Element x_action(int i, const Element &a)
{
	a.signature().require(i);
	a.require_basis(Basis::intersection, "x_action");
	Element x = Element::odd_gen(a.signature(), Basis::pontrjagin, i);
	return to_intersection(x * to_pontrjagin(a));
}

/// The homological circle action on the Pontrjagin ring:
/// Delta(x_I e^J) = sum_l (x_{2l+1} . x_I) . (D_{2l} e^J).
inline Element delta_pontrjagin(const Element &z)
{
	z.require_basis(Basis::pontrjagin, "delta_pontrjagin");
	Signature sig = z.signature();
	if (sig.k != 1)
		throw Error("delta_pontrjagin: requires the SU case (k = 1)");
	std::vector<Element::Term> out;
	for (const auto &[m, c] : z.terms())
	{
		for (int l = 1; l <= sig.n; ++l)
		{
			auto merged = word_merge(Word::single(l), m.word());
			if (!merged)
				continue;
			Rational cl = merged->first < 0 ? -c : c;
			Monomial base = m.with_word(merged->second);
			detail::d_operator_monomial(l, base, cl, sig, out);
		}
	}
	return Element::from_terms(sig, Basis::pontrjagin, std::move(out));
}

/// Checks the coproduct characterization of the D operators: in phi(e^J),
/// the terms with single-generator left factor e_{2l} have right factor
/// exactly D_{2l} e^J, and the terms with left factor 1 give back e^J.
inline bool verify_D_characterization(const Monomial &evens, Signature sig)
{
	if (sig.k != 1)
		throw Error("verify_D_characterization: requires k = 1");
	if (!evens.word().empty())
		throw Error("verify_D_characterization: even monomials only");
	Element ej = Element::monomial(sig, Basis::pontrjagin, evens);
	TensorElement phi = coproduct(ej);
	if (!(phi.left_slice(Monomial::unit()) == ej))
		return false;
	for (int l = 1; l <= sig.n; ++l)
	{
		Element extracted = phi.left_slice(Monomial::even(l));
		if (!(extracted == d_op(l, ej)))
			return false;
	}
	return true;
}

/// Solves the unipotent upper-triangular system of the Theorem 3-5 proof for
/// the partial derivatives of the decomposable part Y of Delta(e_{2l}):
/// D_{2m}(Y) = Delta(e_{2l-2m}) for m < l and 0 for m >= l, with the
/// coefficient matrix M[r][c] = e_{2(c-r)} (e_0 = 1 on the diagonal), then
/// reconstructs Y from its partials and returns x_{2l+1} + Y.
inline Element delta_from_triangular_system(int l, Signature sig)
{
	if (sig.k != 1)
		throw Error("triangular system: requires k = 1");
	sig.require(l);
	const Basis basis = Basis::pontrjagin;
	auto e_poly = [&](int i) {
		return i == 0 ? Element::unit(sig, basis)
		              : Element::monomial(sig, basis, Monomial::even(i));
	};
	// right-hand side b_m = Delta(e_{2(l-m)}), zero for m >= l
	std::vector<Element> rhs;
	rhs.reserve(sig.n + 1);
	rhs.emplace_back(Element::zero(sig, basis)); // unused slot 0
	for (int m = 1; m <= sig.n; ++m)
	{
		if (m < l)
			rhs.push_back(delta_pontrjagin(e_poly(l - m)));
		else
			rhs.push_back(Element::zero(sig, basis));
	}
	// back substitution: p_r = b_r - sum_{c>r} e_{2(c-r)} p_c
	std::vector<Element> partials(sig.n + 1, Element::zero(sig, basis));
	for (int r = sig.n; r >= 1; --r)
	{
		Element p = rhs[r];
		for (int c = r + 1; c <= sig.n; ++c)
			p -= e_poly(c - r) * partials[c];
		partials[r] = p;
	}
	// Euler reconstruction: every term of Y has a nontrivial e-factor, so
	// Y = sum over terms of (e-degree)^{-1} * term of sum_m e_{2m} p_m
	Element z = Element::zero(sig, basis);
	for (int m = 1; m <= sig.n; ++m)
		z += e_poly(m) * partials[m];
	std::vector<Element::Term> y_terms;
	for (const auto &[m, c] : z.terms())
	{
		int d = m.exponent_sum();
		if (d == 0)
			throw Error("triangular system: term without e-factor");
		y_terms.emplace_back(m, c / Rational(d));
	}
	Element y = Element::from_terms(sig, basis, std::move(y_terms));
	return Element::odd_gen(sig, basis, l) + y;
}

} // namespace loopbv
