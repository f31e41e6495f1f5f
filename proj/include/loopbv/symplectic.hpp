#pragma once

#include "loopbv/newton.hpp"

#include <map>
#include <tuple>
#include <utility>
#include <vector>

namespace loopbv {

/// A super derivation of the alpha/h presentation: left coefficients of the
/// odd derivations d/d(alpha_{2l+1}) and of the even derivations d/d(h_{2l}).
/// All coefficients are symplectic-basis elements over one signature.
class VectorField {
  public:
	explicit VectorField(Signature sig) : sig_(sig) {}

	Signature signature() const { return sig_; }

	const std::map<int, Element> &odd_coeffs() const { return odd_; }
	const std::map<int, Element> &even_coeffs() const { return even_; }

	bool is_zero() const
	{
		for (const auto &[l, c] : odd_)
			if (!c.is_zero())
				return false;
		for (const auto &[l, c] : even_)
			if (!c.is_zero())
				return false;
		return true;
	}

	void add_odd(int l, const Element &c)
	{
		sig_.require(l);
		c.require_basis(Basis::symplectic, "vector field coefficient");
		insert(odd_, l, c);
	}
	void add_even(int l, const Element &c)
	{
		sig_.require(l);
		c.require_basis(Basis::symplectic, "vector field coefficient");
		insert(even_, l, c);
	}

	Element odd_coeff(int l) const { return get(odd_, l); }
	Element even_coeff(int l) const { return get(even_, l); }

	friend VectorField operator+(const VectorField &a, const VectorField &b)
	{
		if (!(a.sig_ == b.sig_))
			throw Error("vector field: signature mismatch");
		VectorField out = a;
		for (const auto &[l, c] : b.odd_)
			out.add_odd(l, c);
		for (const auto &[l, c] : b.even_)
			out.add_even(l, c);
		return out;
	}

	friend VectorField operator-(const VectorField &a, const VectorField &b)
	{
		return a + (Rational(-1) * b);
	}

	friend VectorField operator*(const Rational &c, const VectorField &a)
	{
		VectorField out(a.sig_);
		for (const auto &[l, coeff] : a.odd_)
			out.add_odd(l, c * coeff);
		for (const auto &[l, coeff] : a.even_)
			out.add_even(l, c * coeff);
		return out;
	}

	friend bool operator==(const VectorField &a, const VectorField &b)
	{
		if (!(a.sig_ == b.sig_))
			return false;
		for (int l = a.sig_.k; l <= a.sig_.n; ++l)
			if (!(a.odd_coeff(l) == b.odd_coeff(l)) ||
			    !(a.even_coeff(l) == b.even_coeff(l)))
				return false;
		return true;
	}

	/// Applies the derivation to a symplectic-basis element, coefficients
	/// multiplying from the left.
	Element apply(const Element &g) const
	{
		g.require_basis(Basis::symplectic, "vector field application");
		Element out = Element::zero(sig_, Basis::symplectic);
		for (const auto &[l, c] : odd_)
			out += c * partial_alpha(l, g);
		for (const auto &[l, c] : even_)
			out += c * partial_even(l, g);
		return out;
	}

	/// The part of the field of the given parity, where a term c d/d(alpha)
	/// has parity |c|+1 and a term c d/d(h) has parity |c|.
	VectorField parity_part(int p) const
	{
		VectorField out(sig_);
		for (const auto &[l, c] : odd_)
			out.add_odd(l, c.parity_part((p + 1) & 1));
		for (const auto &[l, c] : even_)
			out.add_even(l, c.parity_part(p));
		return out;
	}

  private:
	Signature sig_;
	std::map<int, Element> odd_;
	std::map<int, Element> even_;

	void insert(std::map<int, Element> &dst, int l, const Element &c)
	{
		auto it = dst.find(l);
		if (it == dst.end())
			dst.emplace(l, c);
		else
			it->second += c;
	}

	Element get(const std::map<int, Element> &src, int l) const
	{
		auto it = src.find(l);
		return it == src.end() ? Element::zero(sig_, Basis::symplectic)
		                       : it->second;
	}
};

/// The Hamiltonian vector field of F, defined by iota_X omega = dF for the
/// odd symplectic form omega = sum_l d(alpha_{2l+1}) ^ d(h_{2l}):
/// X_F = sum_l ((-1)^{|I|} (dF/d alpha_{2l+1}) d/d(h_{2l})
///              + (dF/d h_{2l}) d/d(alpha_{2l+1})),
/// per parity-homogeneous part of F. Intersection-basis input is converted
/// to the h-coordinates first; the kernel of F -> X_F is the constants.
inline VectorField hamiltonian_field(const Element &f)
{
	Element fh = to_h_basis(f);
	Signature sig = fh.signature();
	VectorField x(sig);
	for (int p = 0; p <= 1; ++p)
	{
		Element fp = fh.parity_part(p);
		if (fp.is_zero())
			continue;
		for (int l = sig.k; l <= sig.n; ++l)
		{
			Element da = partial_alpha(l, fp);
			if (!da.is_zero())
				x.add_even(l, p == 1 ? -da : da);
			Element dh = partial_even(l, fp);
			if (!dh.is_zero())
				x.add_odd(l, dh);
		}
	}
	return x;
}

/// The Poisson bracket [F,G] = X_F(G) of the odd symplectic form. Inputs in
/// the intersection basis are converted to the h-coordinates and the result
/// converted back, so integral inputs yield an integral result.
inline Element poisson_bracket(const Element &f, const Element &g)
{
	f.require_compatible(g);
	if (f.basis() == Basis::pontrjagin)
		throw Error("poisson_bracket: not defined on the Pontrjagin basis");
	bool convert = f.basis() == Basis::intersection;
	Element r = hamiltonian_field(f).apply(to_h_basis(g));
	return convert ? from_h_basis(r) : r;
}

/// Super commutator of derivations, [X,Y] = XY - (-1)^{|X||Y|} YX, assembled
/// from its action on the coordinate generators.
inline VectorField field_bracket(const VectorField &x, const VectorField &y)
{
	if (!(x.signature() == y.signature()))
		throw Error("field_bracket: signature mismatch");
	Signature sig = x.signature();
	VectorField out(sig);
	for (int px = 0; px <= 1; ++px)
	{
		VectorField xp = x.parity_part(px);
		if (xp.is_zero())
			continue;
		for (int py = 0; py <= 1; ++py)
		{
			VectorField yp = y.parity_part(py);
			if (yp.is_zero())
				continue;
			int sign = (px == 1 && py == 1) ? -1 : 1;
			for (int l = sig.k; l <= sig.n; ++l)
			{
				Element a = Element::odd_gen(sig, Basis::symplectic, l);
				Element h = Element::even_gen(sig, Basis::symplectic, l);
				Element ca = xp.apply(yp.apply(a)) -
				             Rational(sign) * yp.apply(xp.apply(a));
				Element ch = xp.apply(yp.apply(h)) -
				             Rational(sign) * yp.apply(xp.apply(h));
				if (!ca.is_zero())
					out.add_odd(l, ca);
				if (!ch.is_zero())
					out.add_even(l, ch);
			}
		}
	}
	return out;
}

// ---------------------------------------------------------------------------
// Linear symplectic maps and the quadratic span pi sp(n|n).
// ---------------------------------------------------------------------------

/// A linear map on the span V of {alpha_{2l+1}} u {h_{2l}}, stored as a
/// square rational matrix of size 2(n-k+1) over the ordered basis
/// (alpha_{2k+1}, ..., alpha_{2n+1}, h_{2k}, ..., h_{2n}); the first half of
/// the basis is odd, the second half even.
class LinearSymplecticMap {
  public:
	explicit LinearSymplecticMap(Signature sig)
	    : sig_(sig), dim_(2 * sig.generator_count()),
	      entries_(static_cast<std::size_t>(dim_) * dim_, Rational(0))
	{}

	Signature signature() const { return sig_; }
	int dim() const { return dim_; }

	/// Basis index of alpha_{2l+1} (odd block) or h_{2l} (even block).
	int alpha_index(int l) const { return l - sig_.k; }
	int h_index(int l) const { return sig_.generator_count() + l - sig_.k; }
	int basis_parity(int i) const { return i < sig_.generator_count() ? 1 : 0; }

	const Rational &at(int row, int col) const
	{
		return entries_[static_cast<std::size_t>(row) * dim_ + col];
	}
	Rational &at(int row, int col)
	{
		return entries_[static_cast<std::size_t>(row) * dim_ + col];
	}

	/// Image of the col-th basis vector as a symplectic-basis element.
	Element column(int col) const
	{
		int m = sig_.generator_count();
		Element out = Element::zero(sig_, Basis::symplectic);
		for (int row = 0; row < dim_; ++row)
		{
			const Rational &c = at(row, col);
			if (c.is_zero())
				continue;
			int l = sig_.k + (row < m ? row : row - m);
			Monomial g = row < m ? Monomial::alpha(l) : Monomial::even(l);
			out += Element::monomial(sig_, Basis::symplectic, g, c);
		}
		return out;
	}

	friend bool operator==(const LinearSymplecticMap &,
	                       const LinearSymplecticMap &) = default;

  private:
	Signature sig_;
	int dim_;
	std::vector<Rational> entries_;
};

namespace detail {

/// Extracts the linear part of an element as column entries; throws if a
/// term is not a single generator.
inline void linear_column(const Element &img, LinearSymplecticMap &m, int col)
{
	for (const auto &[mono, c] : img.terms())
	{
		int row = -1;
		if (mono.word().size() == 1 && !mono.has_even_part())
			row = m.alpha_index(mono.word().indices().front());
		else if (mono.word().empty() && mono.exponent_sum() == 1)
		{
			for (int l = 1; l <= kMaxRank; ++l)
				if (mono.exp(l) == 1)
					row = m.h_index(l);
		}
		if (row < 0)
			throw Error("linear map: image is not linear in the generators");
		m.at(row, col) = c;
	}
}

} // namespace detail

/// The linear map induced on V by a vector field whose coefficients are
/// linear in the generators (e.g. the Hamiltonian field of a quadratic).
inline LinearSymplecticMap linear_map_of(const VectorField &x)
{
	Signature sig = x.signature();
	LinearSymplecticMap m(sig);
	for (int l = sig.k; l <= sig.n; ++l)
	{
		detail::linear_column(
		    x.apply(Element::odd_gen(sig, Basis::symplectic, l)), m,
		    m.alpha_index(l));
		detail::linear_column(
		    x.apply(Element::even_gen(sig, Basis::symplectic, l)), m,
		    m.h_index(l));
	}
	return m;
}

/// Checks the omega-annihilation identity
/// sum_l { d(f(alpha_{2l+1})) ^ dh_{2l} + d(alpha_{2l+1}) ^ d(f(h_{2l})) } = 0
/// for the linear map f, expanding over the basis 2-forms with
/// d(alpha) ^ d(alpha') symmetric and dh ^ dh' antisymmetric.
inline bool annihilates_omega(const LinearSymplecticMap &f)
{
	Signature sig = f.signature();
	int m = sig.generator_count();
	// accumulated coefficients of the canonical basis 2-forms:
	// ("aa", i <= j), ("ah", i, j) and ("hh", i < j), indices 0-based in V
	std::map<std::tuple<char, int, int>, Rational> form;
	auto add = [&](char kind, int i, int j, const Rational &c) {
		if (c.is_zero())
			return;
		int sign = 1;
		if (kind == 'a' && i > j)
			std::swap(i, j); // symmetric
		if (kind == 'h')
		{
			if (i == j)
				return; // dh ^ dh = 0
			if (i > j)
			{
				std::swap(i, j); // antisymmetric
				sign = -1;
			}
		}
		auto key = std::make_tuple(kind, i, j);
		auto it = form.find(key);
		Rational v = sign < 0 ? -c : c;
		if (it == form.end())
			form.emplace(key, v);
		else
			it->second += v;
	};
	for (int l = 0; l < m; ++l)
	{
		// d(f(alpha_l)) ^ dh_l
		for (int r = 0; r < 2 * m; ++r)
		{
			const Rational &c = f.at(r, l);
			if (r < m)
				add('m', r, l, c); // d(alpha_r) ^ d(h_l), kind "ah"
			else
				add('h', r - m, l, c);
		}
		// d(alpha_l) ^ d(f(h_l))
		for (int r = 0; r < 2 * m; ++r)
		{
			const Rational &c = f.at(r, m + l);
			if (r < m)
				add('a', l, r, c);
			else
				add('m', l, r - m, c);
		}
	}
	for (const auto &[key, c] : form)
		if (!c.is_zero())
			return false;
	return true;
}

/// All quadratic basis elements of the span Q -- alpha_{2l+1} h_{2k'},
/// alpha_{2l+1} alpha_{2j+1} (l < j) and h_{2l} h_{2k'} (l <= k', squares
/// included) -- paired with their induced linear symplectic maps. The count
/// is 2(n-k+1)^2; each map annihilates omega and the span is closed under
/// the Poisson bracket (both asserted by the verification suites).
inline std::vector<std::pair<Element, LinearSymplecticMap>>
psp_basis(Signature sig)
{
	std::vector<std::pair<Element, LinearSymplecticMap>> out;
	auto push = [&](const Element &f) {
		out.emplace_back(f, linear_map_of(hamiltonian_field(f)));
	};
	for (int l = sig.k; l <= sig.n; ++l)
		for (int k2 = sig.k; k2 <= sig.n; ++k2)
			push(Element::monomial(sig, Basis::symplectic,
			                       Monomial::alpha(l).with_exp(k2, 1)));
	for (int l = sig.k; l <= sig.n; ++l)
		for (int j = l + 1; j <= sig.n; ++j)
			push(Element::monomial(
			    sig, Basis::symplectic,
			    Monomial().with_word(Word::single(l).with(j))));
	for (int l = sig.k; l <= sig.n; ++l)
		for (int k2 = l; k2 <= sig.n; ++k2)
		{
			Monomial q = Monomial::even(l);
			q = q.with_exp(k2, q.exp(k2) + 1);
			push(Element::monomial(sig, Basis::symplectic, q));
		}
	return out;
}

} // namespace loopbv
