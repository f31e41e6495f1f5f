#include "loopbv/element.hpp"
#include "loopbv/enumerate.hpp"
#include "loopbv/render.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace loopbv;

namespace {

// indices are the internal l with alpha-subscript 2l+1, e-subscript 2l
Element mono(Signature sig, Basis b, std::initializer_list<int> word,
             std::initializer_list<std::pair<int, int>> exps,
             Rational c = Rational(1))
{
	Monomial m;
	for (int l : word)
		m = m.with_word(m.word().with(l));
	for (auto [l, e] : exps)
		m = m.with_exp(l, e);
	return Element::monomial(sig, b, m, c);
}

} // namespace

TEST_CASE("word_merge signs")
{
	// ((3),(5)) -> (+1, (3,5)); subscripts 3,5,7 are indices 1,2,3
	auto r = word_merge(Word::single(1), Word::single(2));
	REQUIRE(r);
	CHECK(r->first == 1);
	CHECK(r->second == Word::single(1).with(2));

	// ((5),(3)) -> (-1, (3,5))
	r = word_merge(Word::single(2), Word::single(1));
	REQUIRE(r);
	CHECK(r->first == -1);

	// ((3,7),(5)) -> (-1, (3,5,7)): one inversion in (3,7,5)
	r = word_merge(Word::single(1).with(3), Word::single(2));
	REQUIRE(r);
	CHECK(r->first == -1);
	CHECK(r->second == Word::single(1).with(2).with(3));

	// overlap vanishes
	CHECK(!word_merge(Word::single(1), Word::single(1)));

	// sgn(I,J) = (-1)^{|I||J|} sgn(J,I)
	for (std::uint16_t i = 0; i < 16; ++i)
		for (std::uint16_t j = 0; j < 16; ++j)
		{
			Word wi = Word::from_bits(i), wj = Word::from_bits(j);
			auto ij = word_merge(wi, wj);
			auto ji = word_merge(wj, wi);
			REQUIRE(ij.has_value() == ji.has_value());
			if (ij)
			{
				int koszul = (wi.size() * wj.size()) % 2 == 0 ? 1 : -1;
				CHECK(ij->first == koszul * ji->first);
			}
		}
}

TEST_CASE("product examples")
{
	Signature sig(2, 1);
	Element a3 = Element::odd_gen(sig, Basis::intersection, 1);
	Element a5 = Element::odd_gen(sig, Basis::intersection, 2);
	Element e2 = Element::even_gen(sig, Basis::intersection, 1);

	CHECK(to_string(a3 * a5) == "a3*a5");
	CHECK((a3 * a3).is_zero());
	CHECK(to_string((a3 + e2) * a5) == "a5*e2 + a3*a5");

	// unit and bilinearity
	Element one = Element::unit(sig, Basis::intersection);
	CHECK(one * a3 == a3);
	CHECK((a3 + a5) * e2 == a3 * e2 + a5 * e2);
}

TEST_CASE("basis and signature mismatches are rejected")
{
	Signature sig(2, 1);
	Element a = Element::odd_gen(sig, Basis::intersection, 1);
	Element x = Element::odd_gen(sig, Basis::pontrjagin, 1);
	CHECK_THROWS_AS(a * x, Error);
	Element b = Element::odd_gen(Signature(3, 1), Basis::intersection, 1);
	CHECK_THROWS_AS(a + b, Error);
	CHECK_THROWS_AS(Element::odd_gen(Signature(3, 2), Basis::intersection, 1),
	                Error);
}

TEST_CASE("graded commutativity and associativity, exhaustive at n=2")
{
	Signature sig(2, 1);
	auto monos = basis_monomials(sig, 3);
	for (const Monomial &ma : monos)
		for (const Monomial &mb : monos)
		{
			Element a = Element::monomial(sig, Basis::intersection, ma);
			Element b = Element::monomial(sig, Basis::intersection, mb);
			Element ab = a * b;
			Element ba = b * a;
			int sign = (ma.parity() & mb.parity()) ? -1 : 1;
			CHECK(ab == Rational(sign) * ba);
		}
	// associativity on a sample of triples
	for (std::size_t i = 0; i < monos.size(); i += 3)
		for (std::size_t j = 0; j < monos.size(); j += 5)
			for (std::size_t k = 0; k < monos.size(); k += 7)
			{
				Element a = Element::monomial(sig, Basis::intersection, monos[i]);
				Element b = Element::monomial(sig, Basis::intersection, monos[j]);
				Element c = Element::monomial(sig, Basis::intersection, monos[k]);
				CHECK((a * b) * c == a * (b * c));
			}
}

TEST_CASE("partial_alpha examples and derivation property")
{
	Signature sig(2, 1);
	Element a3a5 = mono(sig, Basis::intersection, {1, 2}, {});
	CHECK(to_string(partial_alpha(1, a3a5)) == "a5");
	CHECK(to_string(partial_alpha(2, a3a5)) == "-a3");
	Element e2 = Element::even_gen(sig, Basis::intersection, 1);
	CHECK(partial_alpha(1, e2).is_zero());
	CHECK_THROWS_AS(partial_alpha(3, e2), Error);

	// odd derivation and anticommutation, exhaustively at small scale
	auto monos = basis_monomials(sig, 3);
	for (const Monomial &ma : monos)
		for (const Monomial &mb : monos)
		{
			Element a = Element::monomial(sig, Basis::intersection, ma);
			Element b = Element::monomial(sig, Basis::intersection, mb);
			for (int l = 1; l <= 2; ++l)
			{
				Element lhs = partial_alpha(l, a * b);
				Element rhs = partial_alpha(l, a) * b;
				Element second = a * partial_alpha(l, b);
				rhs += ma.parity() ? -second : second;
				CHECK(lhs == rhs);
			}
		}
	for (const Monomial &ma : monos)
	{
		Element a = Element::monomial(sig, Basis::intersection, ma);
		CHECK(partial_alpha(1, partial_alpha(1, a)).is_zero());
		CHECK(partial_alpha(1, partial_alpha(2, a)) ==
		      -partial_alpha(2, partial_alpha(1, a)));
	}
}

TEST_CASE("D operator examples")
{
	Signature sig(2, 1);
	Element e2 = Element::even_gen(sig, Basis::intersection, 1);
	Element e4 = Element::even_gen(sig, Basis::intersection, 2);
	CHECK(to_string(d_op(1, e2)) == "1");
	CHECK(to_string(d_op(1, e4)) == "e2");
	CHECK(to_string(d_op(1, e2 * e4)) == "e2^2 + e4");
	CHECK_THROWS_AS(d_op(3, e2), Error);
	CHECK_THROWS_AS(d_op(1, Element::odd_gen(sig, Basis::intersection, 1)),
	                Error);
}

TEST_CASE("Stiefel D operator examples (n=3, k=2)")
{
	Signature sig(3, 2);
	Element e4 = Element::even_gen(sig, Basis::intersection, 2);
	Element e6 = Element::even_gen(sig, Basis::intersection, 3);
	// D^{(2)}_4(e_4) = 1: the l > n-k branch is d/d(e_{2l})
	CHECK(to_string(d_op_stiefel(2, e4)) == "1");
	// D^{(2)}_2(e_6) = e_4: the j = 2 term
	CHECK(to_string(d_op_stiefel(1, e6)) == "e4");
	// D^{(2)}_2(e_4) = 0: the e_2-coefficient term is dropped
	CHECK(d_op_stiefel(1, e4).is_zero());
	// d_op proper requires k = 1
	CHECK_THROWS_AS(d_op(2, e4), Error);
}

TEST_CASE("D operators mutually commute")
{
	for (int n = 1; n <= 4; ++n)
	{
		Signature sig(n, 1);
		for (const Monomial &m : even_monomials(sig, 6))
		{
			Element p = Element::monomial(sig, Basis::intersection, m);
			for (int i = 1; i <= n; ++i)
				for (int j = i + 1; j <= n; ++j)
					CHECK(d_op(i, d_op(j, p)) == d_op(j, d_op(i, p)));
		}
	}
}

TEST_CASE("degree and parity")
{
	Signature sig(2, 1);
	auto dp = degree(Monomial::alpha(1), Basis::intersection);
	CHECK(dp.degree == -3);
	CHECK(dp.parity == 1);

	dp = degree(Monomial::even(1, 2), Basis::intersection);
	CHECK(dp.degree == 4);
	CHECK(dp.parity == 0);

	dp = degree(Monomial::alpha(1).with_exp(1, 1), Basis::pontrjagin);
	CHECK(dp.degree == 5);
	CHECK(dp.parity == 1);

	// additivity under the product, parity mod 2
	auto monos = basis_monomials(sig, 3);
	for (const Monomial &ma : monos)
		for (const Monomial &mb : monos)
		{
			auto prod = Monomial::mul(ma, mb);
			if (!prod)
				continue;
			for (Basis b : {Basis::intersection, Basis::pontrjagin})
			{
				auto da = degree(ma, b);
				auto db = degree(mb, b);
				auto dab = degree(prod->second, b);
				CHECK(dab.degree == da.degree + db.degree);
				CHECK(dab.parity == (da.parity + db.parity) % 2);
				CHECK((dab.degree % 2 + 2) % 2 == dab.parity);
			}
		}
}

TEST_CASE("integrality predicate")
{
	Signature sig(1, 1);
	Element e2 = Element::even_gen(sig, Basis::intersection, 1);
	CHECK(e2.is_integral());
	CHECK(!(Rational(1, 2) * e2).is_integral());
	CHECK((Rational(1, 2) * (e2 + e2)).is_integral());
}
