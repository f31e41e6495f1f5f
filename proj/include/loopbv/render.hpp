#pragma once

#include "loopbv/element.hpp"

#include <string>

namespace loopbv {

/// Symbol letter for the odd generators of a basis.
inline char odd_letter(Basis b)
{
	return b == Basis::pontrjagin ? 'x' : 'a';
}

/// Symbol letter for the even generators of a basis.
inline char even_letter(Basis b)
{
	return b == Basis::symplectic ? 'h' : 'e';
}

/// Generator subscripts follow the paper: odd index l renders as 2l+1, even
/// index l renders as 2l. So a3 is alpha_3, e4 is e_4, h2 is h_2, x5 is x_5.
inline std::string monomial_str(const Monomial &m, Basis basis)
{
	std::string out;
	for (int l : m.word().indices())
	{
		if (!out.empty())
			out += '*';
		out += odd_letter(basis);
		out += std::to_string(2 * l + 1);
	}
	for (int l = 1; l <= kMaxRank; ++l)
	{
		int e = m.exp(l);
		if (e == 0)
			continue;
		if (!out.empty())
			out += '*';
		out += even_letter(basis);
		out += std::to_string(2 * l);
		if (e > 1)
		{
			out += '^';
			out += std::to_string(e);
		}
	}
	return out.empty() ? "1" : out;
}

/// Canonical text rendering; parses back to the same element.
inline std::string to_string(const Element &a)
{
	if (a.is_zero())
		return "0";
	std::string out;
	for (const auto &[m, c] : a.terms())
	{
		Rational coeff = c;
		if (out.empty())
		{
			if (coeff.sign() < 0)
			{
				out += '-';
				coeff = -coeff;
			}
		}
		else
		{
			if (coeff.sign() < 0)
			{
				out += " - ";
				coeff = -coeff;
			}
			else
				out += " + ";
		}
		std::string ms = monomial_str(m, a.basis());
		if (coeff.is_one() && ms != "1")
			out += ms;
		else if (ms == "1")
			out += coeff.str();
		else
		{
			out += coeff.str();
			out += '*';
			out += ms;
		}
	}
	return out;
}

/// LaTeX rendering with the paper's symbol conventions.
inline std::string monomial_latex(const Monomial &m, Basis basis)
{
	std::string out;
	const char *odd = basis == Basis::pontrjagin ? "x" : "\\alpha";
	const char *even = basis == Basis::symplectic ? "h" : "e";
	for (int l : m.word().indices())
		out += std::string(odd) + "_{" + std::to_string(2 * l + 1) + "}";
	for (int l = 1; l <= kMaxRank; ++l)
	{
		int e = m.exp(l);
		if (e == 0)
			continue;
		out += std::string(even) + "_{" + std::to_string(2 * l) + "}";
		if (e > 1)
			out += "^{" + std::to_string(e) + "}";
	}
	return out.empty() ? "1" : out;
}

inline std::string rational_latex(const Rational &c)
{
	if (c.is_integer())
		return c.str();
	Rational a = c.sign() < 0 ? -c : c;
	auto num = boost::multiprecision::numerator(a.to_big());
	auto den = boost::multiprecision::denominator(a.to_big());
	std::string s = "\\tfrac{" + num.str() + "}{" + den.str() + "}";
	return c.sign() < 0 ? "-" + s : s;
}

inline std::string to_latex(const Element &a)
{
	if (a.is_zero())
		return "0";
	std::string out;
	for (const auto &[m, c] : a.terms())
	{
		Rational coeff = c;
		if (!out.empty())
		{
			if (coeff.sign() < 0)
			{
				out += " - ";
				coeff = -coeff;
			}
			else
				out += " + ";
		}
		else if (coeff.sign() < 0)
		{
			out += "-";
			coeff = -coeff;
		}
		std::string ms = monomial_latex(m, a.basis());
		if (coeff.is_one() && ms != "1")
			out += ms;
		else if (ms == "1")
			out += rational_latex(coeff);
		else
			out += rational_latex(coeff) + ms;
	}
	return out;
}

} // namespace loopbv
