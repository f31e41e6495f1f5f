#include "loopbv/bv.hpp"
#include "loopbv/render.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace loopbv;

namespace {

Element parse_mono(Signature sig, std::initializer_list<int> word,
                   std::initializer_list<std::pair<int, int>> exps)
{
	Monomial m;
	for (int l : word)
		m = m.with_word(m.word().with(l));
	for (auto [l, e] : exps)
		m = m.with_exp(l, e);
	return Element::monomial(sig, Basis::intersection, m);
}

} // namespace

TEST_CASE("BV operator examples")
{
	Signature s1(1, 1);
	// Delta(alpha_3 e_2) = 1
	CHECK(to_string(bv_delta(parse_mono(s1, {1}, {{1, 1}}))) == "1");
	// Delta(e_2^5) = 0
	CHECK(bv_delta(parse_mono(s1, {}, {{1, 5}})).is_zero());

	Signature s2(2, 1);
	// Delta(alpha_3 e_4) = e_2
	CHECK(to_string(bv_delta(parse_mono(s2, {1}, {{2, 1}}))) == "e2");
	// special cases: Delta(alpha_I) = 0, Delta(e^J) = 0,
	// Delta(alpha_{2l+1} e_{2l}) = 1
	CHECK(bv_delta(parse_mono(s2, {1, 2}, {})).is_zero());
	CHECK(bv_delta(parse_mono(s2, {}, {{1, 2}, {2, 1}})).is_zero());
	CHECK(to_string(bv_delta(parse_mono(s2, {2}, {{2, 1}}))) == "1");

	// Delta raises loop degree by one and flips parity
	for (const Monomial &m : basis_monomials(s2, 4))
	{
		Element d = bv_delta(Element::monomial(s2, Basis::intersection, m));
		auto dm = degree(m, Basis::intersection);
		for (const auto &[mm, c] : d.terms())
			CHECK(degree(mm, Basis::intersection).degree == dm.degree + 1);
	}
}

TEST_CASE("Delta squares to zero and matches the Pontrjagin route")
{
	for (int n = 1; n <= 3; ++n)
	{
		Signature sig(n, 1);
		for (const Monomial &m : basis_monomials(sig, 4))
		{
			Element a = Element::monomial(sig, Basis::intersection, m);
			CHECK(bv_delta(bv_delta(a)).is_zero());
			CHECK(bv_delta(a) == bv_delta_via_pontrjagin(a));
		}
	}
}

TEST_CASE("oracle bracket examples")
{
	Signature s1(1, 1);
	Element a3e2 = parse_mono(s1, {1}, {{1, 1}});
	Element e2 = parse_mono(s1, {}, {{1, 1}});
	CHECK(to_string(bracket_deviation(a3e2, e2)) == "-e2");
	Element a3 = parse_mono(s1, {1}, {});
	CHECK(to_string(bracket_deviation(a3, e2)) == "-1");

	Signature s2(2, 1);
	CHECK(bracket_deviation(parse_mono(s2, {}, {{1, 1}}),
	                        parse_mono(s2, {}, {{2, 1}}))
	          .is_zero());
	CHECK(bracket_deviation(parse_mono(s2, {1}, {}), parse_mono(s2, {2}, {}))
	          .is_zero());
}

TEST_CASE("closed-form bracket agrees with the oracle")
{
	Signature s1(1, 1);
	Element a3e2 = parse_mono(s1, {1}, {{1, 1}});
	Element e2 = parse_mono(s1, {}, {{1, 1}});
	CHECK(to_string(bracket_closed(a3e2, e2)) == "-e2");

	// sphere relations evaluated through the closed form at n = 1:
	// {alpha h^{k+1}, alpha h^{l+1}} = (k-l) alpha h^{k+l+1}
	auto alpha_h = [&](int e) { return parse_mono(s1, {1}, {{1, e}}); };
	auto h_pow = [&](int e) { return parse_mono(s1, {}, {{1, e}}); };
	for (int k = 0; k <= 4; ++k)
		for (int l = 0; l <= 4; ++l)
		{
			Element lhs = bracket_closed(alpha_h(k + 1), alpha_h(l + 1));
			Element rhs = Rational(k - l) * alpha_h(k + l + 1);
			CHECK(lhs == rhs);
		}
	// {alpha h^{k+1}, h^m} = -m h^{k+m}
	for (int k = 0; k <= 4; ++k)
		for (int m1 = 0; m1 <= 4; ++m1)
		{
			Element lhs = bracket_closed(alpha_h(k + 1), h_pow(m1));
			Element rhs = Rational(-m1) * h_pow(k + m1);
			CHECK(lhs == rhs);
		}

	// exhaustive agreement with the oracle at n <= 3, both routes bilinear
	for (int n = 2; n <= 3; ++n)
	{
		Signature sig(n, 1);
		auto monos = basis_monomials(sig, 3);
		for (const Monomial &ma : monos)
			for (const Monomial &mb : monos)
			{
				Element a = Element::monomial(sig, Basis::intersection, ma);
				Element b = Element::monomial(sig, Basis::intersection, mb);
				CHECK(bracket_closed(a, b) == bracket_deviation(a, b));
			}
	}
}

TEST_CASE("Newton primitives")
{
	Signature sig(3, 1);
	// h_2 = e_2, h_4 = e_4 - e_2^2/2
	CHECK(to_string(newton_primitive(1, sig)) == "e2");
	CHECK(to_string(newton_primitive(2, sig)) == "-1/2*e2^2 + e4");
	// h_6 = e_6 - e_2 e_4 + e_2^3/3
	CHECK(to_string(newton_primitive(3, sig)) == "1/3*e2^3 - e2*e4 + e6");

	// primitivity under the coproduct
	for (int l = 1; l <= 3; ++l)
	{
		Element h = newton_primitive(l, sig).retagged(Basis::pontrjagin);
		TensorElement phi = coproduct(h);
		TensorElement expected =
		    TensorElement::outer(h, Element::unit(sig, Basis::pontrjagin)) +
		    TensorElement::outer(Element::unit(sig, Basis::pontrjagin), h);
		CHECK(phi == expected);
	}
}

TEST_CASE("h-basis conversion")
{
	Signature sig(2, 1);
	Element e4 = Element::even_gen(sig, Basis::intersection, 2);
	// e_4 = h_4 + h_2^2/2
	CHECK(to_string(to_h_basis(e4)) == "1/2*h2^2 + h4");
	Element a3 = Element::odd_gen(sig, Basis::intersection, 1);
	CHECK(to_string(to_h_basis(a3)) == "a3");

	// round trips
	for (const Monomial &m : basis_monomials(sig, 5))
	{
		Element a = Element::monomial(sig, Basis::intersection, m);
		CHECK(from_h_basis(to_h_basis(a)) == a);
		Element s = Element::monomial(sig, Basis::symplectic, m);
		CHECK(to_h_basis(from_h_basis(s)) == s);
	}
}

TEST_CASE("d/dh examples and the Proposition 4-2 system")
{
	Signature s2(2, 1);
	Element e4 = Element::even_gen(s2, Basis::intersection, 2);
	CHECK(to_string(d_dh(1, e4)) == "e2");

	for (int n = 1; n <= 5; ++n)
	{
		Signature sig(n, 1);
		for (int l = 1; l <= n; ++l)
		{
			Element h = newton_primitive(l, sig);
			for (int k = 1; k <= n; ++k)
			{
				Element dkh = d_dh(k, h);
				if (k == l)
					CHECK(to_string(dkh) == "1");
				else
					CHECK(dkh.is_zero());
			}
			// integrality of all partial derivatives of h_{2l}
			for (int k = 1; k <= n; ++k)
				CHECK(partial_even(k, h).is_integral());
		}
	}
}

TEST_CASE("filtration components")
{
	Signature sig(2, 1);
	Element mix = parse_mono(sig, {1}, {{1, 1}}) + parse_mono(sig, {}, {{2, 1}});
	CHECK(to_string(filtration_component(1, mix)) == "a3*e2");
	CHECK(to_string(filtration_component(0, mix)) == "e4");
	CHECK(filtration_component(2, mix).is_zero());
	CHECK(filtration_component(0, mix) + filtration_component(1, mix) == mix);
	CHECK_THROWS_AS(filtration_component(-1, mix), Error);

	// {L(1),L(1)} lands in L(1): sample {a3 e2, a5}
	Element br = bracket_deviation(parse_mono(sig, {1}, {{1, 1}}),
	                               parse_mono(sig, {2}, {}));
	CHECK(filtration_component(1, br) == br);
}

TEST_CASE("sphere table")
{
	SphereTable t = sphere_bv(10);
	// Delta(alpha h^3) = 3 h^2
	CHECK(to_string(t.delta_odd[3]) == "3*h2^2");
	CHECK(t.delta_even[7].is_zero());
	// {alpha h^2, alpha h^3} = -alpha h^4 (k=1, l=2 in the paper's indexing)
	CHECK(to_string(t.bracket_odd_odd[2][3]) == "-a3*h2^4");
	// {h^2, h^3} = 0: even part is abelian (no odd/even entry needed;
	// brackets of two even powers vanish identically)
	Signature s1(1, 1);
	CHECK(bracket_deviation(parse_mono(s1, {}, {{1, 2}}),
	                        parse_mono(s1, {}, {{1, 3}}))
	          .is_zero());

	// a bigger sphere: S^7 via n = k = 3
	SphereTable t3 = sphere_bv(4, 3);
	CHECK(to_string(t3.delta_odd[2]) == "2*h6");
}

TEST_CASE("sphere bracket intertwines with derivations on Z[h]")
{
	// alpha h^{k+1} acts on Z[h] as -h^{k+1} d/dh; the bracket corresponds
	// to the commutator of these derivations
	Signature s1(1, 1);
	auto alpha_h = [&](int e) { return parse_mono(s1, {1}, {{1, e}}); };
	auto as_derivation = [&](int a, const Element &p) {
		// action of alpha h^a: -h^a dp/dh
		return Rational(-1) *
		       (parse_mono(s1, {}, {{1, a}}) * partial_even(1, p));
	};
	for (int a = 0; a <= 6; ++a)
		for (int b = 0; b <= 6; ++b)
			for (int m = 0; m <= 6; ++m)
			{
				Element p = parse_mono(s1, {}, {{1, m}});
				Element br = bracket_deviation(alpha_h(a), alpha_h(b));
				// br = (a-b) alpha h^{a+b-1}; apply its derivation to p
				Element lhs = Element::zero(s1, Basis::intersection);
				for (const auto &[mm, c] : br.terms())
					lhs += c * as_derivation(mm.exp(1), p);
				Element rhs = as_derivation(a, as_derivation(b, p)) -
				              as_derivation(b, as_derivation(a, p));
				CHECK(lhs == rhs);
			}
}

TEST_CASE("Stiefel Delta agrees with the specialized SU Delta")
{
	for (int n = 1; n <= 4; ++n)
		for (int k = 1; k <= n; ++k)
		{
			Signature st(n, k);
			Signature su(n, 1);
			for (const Monomial &m : basis_monomials(st, 5))
			{
				Element stiefel =
				    bv_delta(Element::monomial(st, Basis::intersection, m));
				// lift, apply the SU operator, set e_2..e_{2k-2} to zero
				Element lifted =
				    bv_delta(Element::monomial(su, Basis::intersection, m));
				std::vector<Element::Term> kept;
				for (const auto &[mm, c] : lifted.terms())
				{
					bool killed = false;
					for (int l = 1; l < k; ++l)
						if (mm.exp(l) > 0)
							killed = true;
					if (!killed)
						kept.emplace_back(mm, c);
				}
				Element specialized = Element::from_terms(
				    st, Basis::intersection, std::move(kept));
				CHECK(stiefel == specialized);
			}
		}
}

TEST_CASE("rational splitting")
{
	CHECK(rational_splitting_check(Signature(1, 1), 6));
	CHECK(rational_splitting_check(Signature(2, 1), 6));

	// Delta(alpha_3 h_4) = 0 in the h-coordinates at n = 2: D_2 kills h_4
	Signature s2(2, 1);
	Element a3h4 = Element::monomial(s2, Basis::symplectic,
	                                 Monomial::alpha(1).with_exp(2, 1));
	CHECK(to_h_basis(bv_delta(from_h_basis(a3h4))).is_zero());
	CHECK_THROWS_AS(rational_splitting_check(Signature(2, 2), 4), Error);
}
