#pragma once

#include "loopbv/bv.hpp"
#include "loopbv/render.hpp"
#include "loopbv/verify.hpp"

#include <json.hpp>

#include <fstream>
#include <string>

namespace loopbv {

namespace detail {

inline const char *odd_key(Basis b)
{
	return b == Basis::pontrjagin ? "x" : "alpha";
}
inline const char *even_key(Basis b)
{
	return b == Basis::symplectic ? "h" : "e";
}

} // namespace detail

/// Canonical JSON form of a monomial: the odd part as the list of paper
/// subscripts, the even part as a subscript -> exponent object with
/// numerically sorted keys.
inline nlohmann::ordered_json monomial_to_json(const Monomial &m, Basis basis)
{
	nlohmann::ordered_json j;
	auto alpha = nlohmann::ordered_json::array();
	for (int l : m.word().indices())
		alpha.push_back(2 * l + 1);
	j[detail::odd_key(basis)] = std::move(alpha);
	nlohmann::ordered_json evens(nlohmann::ordered_json::value_t::object);
	for (int l = 1; l <= kMaxRank; ++l)
		if (m.exp(l) != 0)
			evens[std::to_string(2 * l)] = m.exp(l);
	j[detail::even_key(basis)] = std::move(evens);
	return j;
}

/// Canonical JSON form of an element: a list of {monomial, coeff} objects in
/// canonical monomial order, rationals as exact "p/q" strings.
inline nlohmann::ordered_json element_to_json(const Element &a)
{
	auto value = nlohmann::ordered_json::array();
	for (const auto &[m, c] : a.terms())
	{
		nlohmann::ordered_json t;
		t["monomial"] = monomial_to_json(m, a.basis());
		t["coeff"] = c.str();
		value.push_back(std::move(t));
	}
	return value;
}

/// The Delta table and the full bracket table over the bounded monomial
/// basis, as a canonical JSON document (byte-stable for identical configs).
inline std::string build_table_json(const RunConfig &cfg)
{
	cfg.validate();
	Signature sig = cfg.signature();
	Basis basis = Basis::intersection;
	auto monos = basis_monomials(sig, cfg.bound);
	nlohmann::ordered_json doc;
	doc["signature"] = {{"n", cfg.n}, {"k", cfg.k}};
	doc["basis"] = basis_name(basis);
	doc["bound"] = cfg.bound;
	auto delta = nlohmann::ordered_json::array();
	for (const Monomial &m : monos)
	{
		nlohmann::ordered_json entry;
		entry["monomial"] = monomial_to_json(m, basis);
		entry["value"] = element_to_json(
		    bv_delta(Element::monomial(sig, basis, m)));
		delta.push_back(std::move(entry));
	}
	doc["delta"] = std::move(delta);
	auto bracket = nlohmann::ordered_json::array();
	for (const Monomial &ma : monos)
	{
		Element a = Element::monomial(sig, basis, ma);
		for (const Monomial &mb : monos)
		{
			Element b = Element::monomial(sig, basis, mb);
			nlohmann::ordered_json entry;
			entry["left"] = monomial_to_json(ma, basis);
			entry["right"] = monomial_to_json(mb, basis);
			entry["value"] = element_to_json(bracket_deviation(a, b));
			bracket.push_back(std::move(entry));
		}
	}
	doc["bracket"] = std::move(bracket);
	return doc.dump(2) + "\n";
}

/// The same tables as LaTeX, using the paper's symbol conventions.
inline std::string build_table_latex(const RunConfig &cfg)
{
	cfg.validate();
	Signature sig = cfg.signature();
	Basis basis = Basis::intersection;
	auto monos = basis_monomials(sig, cfg.bound);
	std::string out;
	out += "% Delta and bracket tables for SU(n+1)/SU(k), n=" +
	       std::to_string(cfg.n) + ", k=" + std::to_string(cfg.k) +
	       ", even-part weight <= " + std::to_string(cfg.bound) + "\n";
	out += "\\begin{align*}\n";
	for (const Monomial &m : monos)
	{
		Element d = bv_delta(Element::monomial(sig, basis, m));
		out += "\\Delta(" + monomial_latex(m, basis) + ") &= " +
		       to_latex(d) + " \\\\\n";
	}
	out += "\\end{align*}\n\\begin{align*}\n";
	for (const Monomial &ma : monos)
	{
		Element a = Element::monomial(sig, basis, ma);
		for (const Monomial &mb : monos)
		{
			Element b = Element::monomial(sig, basis, mb);
			out += "\\{" + monomial_latex(ma, basis) + ", " +
			       monomial_latex(mb, basis) + "\\} &= " +
			       to_latex(bracket_deviation(a, b)) + " \\\\\n";
		}
	}
	out += "\\end{align*}\n";
	return out;
}

/// Writes the table in the configured format to the configured path.
inline void emit_table(const RunConfig &cfg)
{
	std::string payload;
	if (cfg.format == "json")
		payload = build_table_json(cfg);
	else if (cfg.format == "latex")
		payload = build_table_latex(cfg);
	else
		throw Error("table: unknown format '" + cfg.format + "'");
	if (cfg.out_path.empty())
		throw Error("table: no output path");
	std::ofstream f(cfg.out_path, std::ios::binary);
	if (!f)
		throw Error("table: cannot open '" + cfg.out_path + "'");
	f << payload;
	if (!f)
		throw Error("table: write failed for '" + cfg.out_path + "'");
}

} // namespace loopbv
