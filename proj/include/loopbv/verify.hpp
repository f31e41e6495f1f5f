#pragma once

#include "loopbv/bv.hpp"
#include "loopbv/enumerate.hpp"
#include "loopbv/parse.hpp"
#include "loopbv/render.hpp"
#include "loopbv/symplectic.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace loopbv {

/// Configuration of a CLI run; shared by eval, table and verify.
struct RunConfig {
	int n = 2;
	int k = 1;
	int bound = 4;
	int workers = 1;
	Basis basis = Basis::intersection;
	std::string suite = "all";
	std::string format = "json";
	std::string out_path;
	std::string expr;

	Signature signature() const { return Signature(n, k); }
	void validate() const
	{
		Signature(n, k); // throws when out of range
		if (bound < 0)
			throw Error("config: bound must be >= 0");
		if (workers < 1)
			throw Error("config: workers must be >= 1");
	}
};

namespace verify {

struct SuiteResult {
	std::string name;
	bool applicable = true;
	bool pass = true;
	std::uint64_t instances = 0;
	std::string counterexample;
	std::string note;
	double seconds = 0.0;
};

namespace detail {

struct MonomialHash {
	std::size_t operator()(const Monomial &m) const { return m.hash(); }
};

/// Precomputed deviation brackets of all pairs (a, m) with a in the bounded
/// monomial set S and m in the extended set E (weight <= 2 * bound), packed
/// as integer-coefficient term lists. Every entry is produced by the public
/// bracket_deviation, so the fast identity checks below exercise the real
/// implementation on every instance.
class BracketTable {
  public:
	struct Term {
		Monomial m;
		std::int64_t c;
	};

	BracketTable(Signature sig, int bound, int workers) : sig_(sig)
	{
		base = basis_monomials(sig, bound);
		ext = basis_monomials(sig, 2 * bound);
		ext_index_.reserve(ext.size() * 2);
		for (std::uint32_t i = 0; i < ext.size(); ++i)
			ext_index_.emplace(ext[i], i);
		base_in_ext_.reserve(base.size());
		for (const Monomial &m : base)
			base_in_ext_.push_back(ext_index_.at(m));
		parity_ext_.reserve(ext.size());
		for (const Monomial &m : ext)
			parity_ext_.push_back(static_cast<std::uint8_t>(m.parity()));

		const std::size_t cols = ext.size();
		std::vector<std::vector<Term>> row_terms(base.size());
		std::vector<std::vector<std::uint32_t>> row_offsets(base.size());
		parallel_ranges(base.size(), workers, [&](std::size_t lo, std::size_t hi) {
			for (std::size_t i = lo; i < hi; ++i)
			{
				Element a = Element::monomial(sig_, Basis::intersection,
				                              base[i]);
				auto &terms = row_terms[i];
				auto &offs = row_offsets[i];
				offs.reserve(cols + 1);
				offs.push_back(0);
				for (std::size_t j = 0; j < cols; ++j)
				{
					Element b = Element::monomial(sig_, Basis::intersection,
					                              ext[j]);
					Element br = bracket_deviation(a, b);
					for (const auto &[m, c] : br.terms())
					{
						if (!c.is_integer())
							throw Error("bracket table: non-integral "
							            "coefficient");
						terms.push_back({m, c.num_small()});
					}
					offs.push_back(static_cast<std::uint32_t>(terms.size()));
				}
			}
		});
		offsets_.resize(base.size());
		for (std::size_t i = 0; i < base.size(); ++i)
		{
			std::uint64_t begin = terms_.size();
			terms_.insert(terms_.end(), row_terms[i].begin(),
			              row_terms[i].end());
			offsets_[i].reserve(row_offsets[i].size());
			for (std::uint32_t o : row_offsets[i])
				offsets_[i].push_back(begin + o);
			row_terms[i].clear();
			row_terms[i].shrink_to_fit();
		}
	}

	Signature signature() const { return sig_; }

	/// {base[i], ext[j]} as a packed span.
	std::pair<const Term *, const Term *> bracket(std::size_t i,
	                                              std::size_t j) const
	{
		return {terms_.data() + offsets_[i][j],
		        terms_.data() + offsets_[i][j + 1]};
	}

	std::uint32_t ext_index(const Monomial &m) const
	{
		return ext_index_.at(m);
	}
	std::uint32_t base_to_ext(std::size_t i) const { return base_in_ext_[i]; }
	int parity_ext(std::size_t j) const { return parity_ext_[j]; }

	std::vector<Monomial> base; ///< weight <= bound
	std::vector<Monomial> ext;  ///< weight <= 2 * bound

  private:
	Signature sig_;
	std::vector<Term> terms_;
	std::vector<std::vector<std::uint64_t>> offsets_;
	std::unordered_map<Monomial, std::uint32_t, MonomialHash> ext_index_;
	std::vector<std::uint32_t> base_in_ext_;
	std::vector<std::uint8_t> parity_ext_;
};

/// Open-addressed integer accumulator over monomial keys; cleared in O(1)
/// via generation stamps. Used to evaluate linear identities over packed
/// bracket spans without allocating.
class Accumulator {
  public:
	Accumulator() : slots_(kCapacity) {}

	void clear()
	{
		++generation_;
		touched_.clear();
	}

	void add(const Monomial &m, std::int64_t c)
	{
		if (c == 0)
			return;
		std::size_t i = m.hash() & (kCapacity - 1);
		for (;;)
		{
			Slot &s = slots_[i];
			if (s.stamp != generation_)
			{
				s.stamp = generation_;
				s.key = m;
				s.value = c;
				touched_.push_back(static_cast<std::uint32_t>(i));
				return;
			}
			if (s.key == m)
			{
				s.value += c;
				return;
			}
			i = (i + 1) & (kCapacity - 1);
		}
	}

	bool all_zero() const
	{
		for (std::uint32_t i : touched_)
			if (slots_[i].value != 0)
				return false;
		return true;
	}

  private:
	static constexpr std::size_t kCapacity = 4096;
	struct Slot {
		Monomial key;
		std::int64_t value = 0;
		std::uint64_t stamp = 0;
	};
	std::vector<Slot> slots_;
	std::vector<std::uint32_t> touched_;
	std::uint64_t generation_ = 0;
};

using Clock = std::chrono::steady_clock;

inline double elapsed(Clock::time_point start)
{
	return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Runs fn(index, failure_out) over [0, count) in parallel; collects the
/// instance count and the counterexample with the smallest index.
struct ParallelCheck {
	std::uint64_t instances = 0;
	bool pass = true;
	std::string counterexample;

	template <class Fn>
	void run(std::size_t count, int workers, Fn &&fn)
	{
		std::mutex m;
		std::size_t first_fail = count;
		std::string first_msg;
		std::atomic<std::uint64_t> total{0};
		parallel_ranges(count, workers, [&](std::size_t lo, std::size_t hi) {
			std::uint64_t local = 0;
			std::size_t fail_at = count;
			std::string msg;
			for (std::size_t i = lo; i < hi; ++i)
			{
				std::string why;
				std::uint64_t done = fn(i, why);
				local += done;
				if (!why.empty())
				{
					fail_at = i;
					msg = std::move(why);
					break;
				}
			}
			total += local;
			if (fail_at < count)
			{
				std::lock_guard<std::mutex> lock(m);
				if (fail_at < first_fail)
				{
					first_fail = fail_at;
					first_msg = std::move(msg);
				}
			}
		});
		instances += total.load();
		if (first_fail < count)
		{
			pass = false;
			counterexample = first_msg;
		}
	}
};

inline std::string describe(const Monomial &m, Basis b = Basis::intersection)
{
	return monomial_str(m, b);
}

} // namespace detail

// ---------------------------------------------------------------------------
// Individual suites. Each returns instances checked and a counterexample
// description on failure.
// ---------------------------------------------------------------------------

/// Graded commutativity on all pairs and associativity on all unordered
/// triples of bounded monomials.
inline SuiteResult suite_mul_assoc_comm(const RunConfig &cfg)
{
	SuiteResult r{"mul-assoc-comm"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto monos = basis_monomials(sig, cfg.bound);
	const std::size_t n = monos.size();
	detail::ParallelCheck check;
	check.run(n, cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		const Monomial &a = monos[i];
		for (std::size_t j = 0; j < n; ++j)
		{
			const Monomial &b = monos[j];
			auto ab = Monomial::mul(a, b);
			auto ba = Monomial::mul(b, a);
			++done;
			int koszul = (a.parity() & b.parity()) ? -1 : 1;
			bool ok = ab.has_value() == ba.has_value() &&
			          (!ab || (ab->second == ba->second &&
			                   ab->first == koszul * ba->first));
			if (!ok)
			{
				why = "commutativity fails for (" + detail::describe(a) +
				      ", " + detail::describe(b) + ")";
				return done;
			}
			if (j < i)
				continue;
			for (std::size_t k2 = j; k2 < n; ++k2)
			{
				++done;
				const Monomial &c = monos[k2];
				auto bc = Monomial::mul(b, c);
				std::optional<std::pair<int, Monomial>> left, right;
				if (ab)
					left = Monomial::mul(ab->second, c);
				if (bc)
					right = Monomial::mul(a, bc->second);
				int ls = ab && left ? ab->first * left->first : 0;
				int rs = bc && right ? bc->first * right->first : 0;
				bool lz = !ab || !left;
				bool rz = !bc || !right;
				if (lz != rz || (!lz && (ls != rs ||
				                         !(left->second == right->second))))
				{
					why = "associativity fails for (" + detail::describe(a) +
					      ", " + detail::describe(b) + ", " +
					      detail::describe(c) + ")";
					return done;
				}
			}
		}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// partial_alpha squares to zero, anticommutes, and is an odd derivation.
inline SuiteResult suite_partial_alpha(const RunConfig &cfg)
{
	SuiteResult r{"partial-alpha"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto monos = basis_monomials(sig, cfg.bound);
	detail::ParallelCheck check;
	check.run(monos.size(), cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		Element a = Element::monomial(sig, Basis::intersection, monos[i]);
		for (int l = sig.k; l <= sig.n; ++l)
		{
			++done;
			if (!partial_alpha(l, partial_alpha(l, a)).is_zero())
			{
				why = "d/d(alpha) does not square to zero on " +
				      detail::describe(monos[i]);
				return done;
			}
			for (int m = l + 1; m <= sig.n; ++m)
			{
				++done;
				if (!(partial_alpha(l, partial_alpha(m, a)) ==
				      -partial_alpha(m, partial_alpha(l, a))))
				{
					why = "anticommutation fails on " +
					      detail::describe(monos[i]);
					return done;
				}
			}
		}
		for (std::size_t j = 0; j < monos.size(); ++j)
		{
			Element b = Element::monomial(sig, Basis::intersection, monos[j]);
			for (int l = sig.k; l <= sig.n; ++l)
			{
				++done;
				Element lhs = partial_alpha(l, a * b);
				Element second = a * partial_alpha(l, b);
				Element rhs = partial_alpha(l, a) * b +
				              (monos[i].parity() ? -second : second);
				if (!(lhs == rhs))
				{
					why = "derivation identity fails for (" +
					      detail::describe(monos[i]) + ", " +
					      detail::describe(monos[j]) + ")";
					return done;
				}
			}
		}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// [D_{2i}, D_{2j}] = 0 on all bounded even monomials.
inline SuiteResult suite_d_commute(const RunConfig &cfg)
{
	SuiteResult r{"d-commute"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto evens = even_monomials(sig, cfg.bound);
	detail::ParallelCheck check;
	check.run(evens.size(), cfg.workers, [&](std::size_t t, std::string &why) {
		std::uint64_t done = 0;
		Element p = Element::monomial(sig, Basis::intersection, evens[t]);
		for (int i = 1; i <= sig.n; ++i)
			for (int j = i + 1; j <= sig.n; ++j)
			{
				++done;
				if (!(d_for_signature(i, d_for_signature(j, p)) ==
				      d_for_signature(j, d_for_signature(i, p))))
				{
					why = "[D_" + std::to_string(2 * i) + ", D_" +
					      std::to_string(2 * j) + "] != 0 on " +
					      detail::describe(evens[t]);
					return done;
				}
			}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// Degree additivity and parity consistency under the product.
inline SuiteResult suite_degree_additive(const RunConfig &cfg)
{
	SuiteResult r{"degree-additive"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto monos = basis_monomials(sig, cfg.bound);
	detail::ParallelCheck check;
	check.run(monos.size(), cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		for (const Monomial &b : monos)
		{
			auto prod = Monomial::mul(monos[i], b);
			if (!prod)
				continue;
			++done;
			for (Basis bas : {Basis::intersection, Basis::pontrjagin})
			{
				auto da = degree(monos[i], bas);
				auto db = degree(b, bas);
				auto dab = degree(prod->second, bas);
				if (dab.degree != da.degree + db.degree ||
				    dab.parity != (da.parity + db.parity) % 2 ||
				    ((dab.degree % 2 + 2) % 2) != dab.parity)
				{
					why = "degree additivity fails for (" +
					      detail::describe(monos[i]) + ", " +
					      detail::describe(b) + ")";
					return done;
				}
			}
		}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// Cocommutativity, coassociativity and counit compatibility of the
/// coproduct on all bounded monomials (k = 1).
inline SuiteResult suite_coproduct(const RunConfig &cfg)
{
	SuiteResult r{"coproduct"};
	if (cfg.k != 1)
	{
		r.applicable = false;
		r.note = "requires k=1";
		return r;
	}
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto monos = basis_monomials(sig, cfg.bound);
	detail::ParallelCheck check;
	check.run(monos.size(), cfg.workers, [&](std::size_t i, std::string &why) {
		Element z = Element::monomial(sig, Basis::pontrjagin, monos[i]);
		TensorElement phi = coproduct(z);
		if (!(phi.flip() == phi))
		{
			why = "cocommutativity fails on " + detail::describe(monos[i]);
			return std::uint64_t{1};
		}
		if (!(counit_left(phi) == z))
		{
			why = "counit fails on " + detail::describe(monos[i]);
			return std::uint64_t{1};
		}
		std::map<std::tuple<Monomial, Monomial, Monomial>, Rational> diff;
		for (const auto &[key, c] : phi.terms())
		{
			TensorElement left = coproduct(
			    Element::monomial(sig, Basis::pontrjagin, key.first));
			for (const auto &[k2, c2] : left.terms())
				diff[std::make_tuple(k2.first, k2.second, key.second)] +=
				    c * c2;
			TensorElement right = coproduct(
			    Element::monomial(sig, Basis::pontrjagin, key.second));
			for (const auto &[k2, c2] : right.terms())
				diff[std::make_tuple(key.first, k2.first, k2.second)] -=
				    c * c2;
		}
		for (const auto &[k2, c] : diff)
			if (!c.is_zero())
			{
				why = "coassociativity fails on " +
				      detail::describe(monos[i]);
				return std::uint64_t{1};
			}
		return std::uint64_t{1};
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// Delta on the Pontrjagin ring: derivation property on all pairs and
/// compatibility with the coproduct on all bounded monomials (k = 1).
inline SuiteResult suite_delta_pontrjagin(const RunConfig &cfg)
{
	SuiteResult r{"delta-pontrjagin"};
	if (cfg.k != 1)
	{
		r.applicable = false;
		r.note = "requires k=1";
		return r;
	}
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto monos = basis_monomials(sig, cfg.bound);
	detail::ParallelCheck check;
	check.run(monos.size(), cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		Element a = Element::monomial(sig, Basis::pontrjagin, monos[i]);
		for (const Monomial &mb : monos)
		{
			++done;
			Element b = Element::monomial(sig, Basis::pontrjagin, mb);
			Element second = a * delta_pontrjagin(b);
			Element rhs = delta_pontrjagin(a) * b +
			              (monos[i].parity() ? -second : second);
			if (!(delta_pontrjagin(a * b) == rhs))
			{
				why = "Delta derivation fails for (" +
				      detail::describe(monos[i], Basis::pontrjagin) + ", " +
				      detail::describe(mb, Basis::pontrjagin) + ")";
				return done;
			}
		}
		++done;
		TensorElement lhs = coproduct(delta_pontrjagin(a));
		TensorElement rhs = TensorElement::zero(sig, Basis::pontrjagin);
		TensorElement phi = coproduct(a);
		for (const auto &[key, c] : phi.terms())
		{
			Element zl = Element::monomial(sig, Basis::pontrjagin, key.first);
			Element zr = Element::monomial(sig, Basis::pontrjagin,
			                               key.second);
			rhs += c * TensorElement::outer(delta_pontrjagin(zl), zr);
			TensorElement t = TensorElement::outer(zl, delta_pontrjagin(zr));
			rhs += key.first.parity() ? -c * t : c * t;
		}
		if (!(lhs == rhs))
			why = "Delta/coproduct compatibility fails on " +
			      detail::describe(monos[i], Basis::pontrjagin);
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// x-action equals the odd derivation through the duality dictionary, and
/// satisfies the Leibniz rule over the intersection product (k = 1 not
/// required; the dictionary exists for all signatures).
inline SuiteResult suite_x_action(const RunConfig &cfg)
{
	SuiteResult r{"x-action-duality"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto monos = basis_monomials(sig, cfg.bound);
	detail::ParallelCheck check;
	check.run(monos.size(), cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		Element a = Element::monomial(sig, Basis::intersection, monos[i]);
		for (int l = sig.k; l <= sig.n; ++l)
		{
			++done;
			if (!(x_action(l, a) == partial_alpha(l, a)))
			{
				why = "x-action differs from d/d(alpha_" +
				      std::to_string(2 * l + 1) + ") on " +
				      detail::describe(monos[i]);
				return done;
			}
		}
		for (const Monomial &mb : monos)
		{
			Element b = Element::monomial(sig, Basis::intersection, mb);
			for (int l = sig.k; l <= sig.n; ++l)
			{
				++done;
				Element second = a * x_action(l, b);
				Element rhs = x_action(l, a) * b +
				              (monos[i].parity() ? -second : second);
				if (!(x_action(l, a * b) == rhs))
				{
					why = "x-action Leibniz rule fails for (" +
					      detail::describe(monos[i]) + ", " +
					      detail::describe(mb) + ")";
					return done;
				}
			}
		}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// The coproduct characterization of the D operators on all bounded even
/// monomials (k = 1).
inline SuiteResult suite_d_characterization(const RunConfig &cfg)
{
	SuiteResult r{"d-characterization"};
	if (cfg.k != 1)
	{
		r.applicable = false;
		r.note = "requires k=1";
		return r;
	}
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto evens = even_monomials(sig, cfg.bound);
	detail::ParallelCheck check;
	check.run(evens.size(), cfg.workers, [&](std::size_t i, std::string &why) {
		if (!verify_D_characterization(evens[i], sig))
			why = "coproduct extraction differs from D on " +
			      detail::describe(evens[i]);
		return std::uint64_t{1};
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// The triangular-system reconstruction reproduces Delta(e_{2l}) (k = 1).
inline SuiteResult suite_triangular(const RunConfig &cfg)
{
	SuiteResult r{"triangular-reconstruction"};
	if (cfg.k != 1)
	{
		r.applicable = false;
		r.note = "requires k=1";
		return r;
	}
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	for (int l = 1; l <= sig.n; ++l)
	{
		++r.instances;
		Element expected = delta_pontrjagin(
		    Element::even_gen(sig, Basis::pontrjagin, l));
		if (!(delta_from_triangular_system(l, sig) == expected))
		{
			r.pass = false;
			r.counterexample = "reconstruction differs on e" +
			                   std::to_string(2 * l);
			break;
		}
	}
	r.seconds = detail::elapsed(start);
	return r;
}

/// Delta squares to zero on all bounded monomials; for k = 1 it also has to
/// match the transport of the Pontrjagin-ring circle action through the
/// duality dictionary (Theorem A(1)).
inline SuiteResult suite_delta_squared(const RunConfig &cfg)
{
	SuiteResult r{"delta-squared"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto monos = basis_monomials(sig, cfg.bound);
	detail::ParallelCheck check;
	check.run(monos.size(), cfg.workers, [&](std::size_t i, std::string &why) {
		Element a = Element::monomial(sig, Basis::intersection, monos[i]);
		if (!bv_delta(bv_delta(a)).is_zero())
		{
			why = "Delta^2 != 0 on " + detail::describe(monos[i]);
			return std::uint64_t{1};
		}
		if (sig.k == 1 && !(bv_delta(a) == bv_delta_via_pontrjagin(a)))
		{
			why = "Delta differs from the Pontrjagin-route transport on " +
			      detail::describe(monos[i]);
			return std::uint64_t{1};
		}
		return std::uint64_t{1};
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

namespace detail {

/// Shared context for the bracket-identity suites.
inline const BracketTable &bracket_table(const RunConfig &cfg)
{
	static std::map<std::tuple<int, int, int>, std::unique_ptr<BracketTable>>
	    cache;
	static std::mutex m;
	std::lock_guard<std::mutex> lock(m);
	auto key = std::make_tuple(cfg.n, cfg.k, cfg.bound);
	auto it = cache.find(key);
	if (it == cache.end())
		it = cache
		         .emplace(key, std::make_unique<BracketTable>(
		                           cfg.signature(), cfg.bound, cfg.workers))
		         .first;
	return *it->second;
}

} // namespace detail

/// Graded antisymmetry {a,b} = -(-1)^{(|a|+1)(|b|+1)} {b,a} on all ordered
/// pairs of bounded monomials.
inline SuiteResult suite_antisymmetry(const RunConfig &cfg)
{
	SuiteResult r{"bv-antisymmetry"};
	auto start = detail::Clock::now();
	const auto &table = detail::bracket_table(cfg);
	const std::size_t n = table.base.size();
	detail::ParallelCheck check;
	check.run(n, cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		detail::Accumulator acc;
		int pa = table.base[i].parity();
		std::uint32_t ei = table.base_to_ext(i);
		for (std::size_t j = 0; j < n; ++j)
		{
			++done;
			int pb = table.base[j].parity();
			// {a,b} + (-1)^{(|a|+1)(|b|+1)} {b,a} = 0
			std::int64_t sign =
			    ((pa + 1) * (pb + 1)) % 2 == 0 ? 1 : -1;
			acc.clear();
			auto [f1, l1] = table.bracket(i, table.base_to_ext(j));
			for (auto *t = f1; t != l1; ++t)
				acc.add(t->m, t->c);
			auto [f2, l2] = table.bracket(j, ei);
			for (auto *t = f2; t != l2; ++t)
				acc.add(t->m, sign * t->c);
			if (!acc.all_zero())
			{
				why = "antisymmetry fails for {" +
				      detail::describe(table.base[i]) + ", " +
				      detail::describe(table.base[j]) + "}";
				return done;
			}
		}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// Graded Jacobi identity on all unordered triples of bounded monomials
/// (with antisymmetry verified separately, one ordering per triple spans
/// all orderings).
inline SuiteResult suite_jacobi(const RunConfig &cfg)
{
	SuiteResult r{"bv-jacobi"};
	auto start = detail::Clock::now();
	const auto &table = detail::bracket_table(cfg);
	const std::size_t n = table.base.size();
	detail::ParallelCheck check;
	check.run(n, cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		detail::Accumulator acc;
		int pa = table.base[i].parity();
		for (std::size_t j = i; j < n; ++j)
		{
			int pb = table.base[j].parity();
			std::int64_t jacobi_sign =
			    ((pa + 1) * (pb + 1)) % 2 == 0 ? 1 : -1;
			std::uint32_t ej = table.base_to_ext(j);
			for (std::size_t k2 = j; k2 < n; ++k2)
			{
				++done;
				acc.clear();
				// {a, {b, c}}
				auto [f1, l1] = table.bracket(j, table.base_to_ext(k2));
				for (auto *t = f1; t != l1; ++t)
				{
					auto [g1, g2] = table.bracket(i, table.ext_index(t->m));
					for (auto *u = g1; u != g2; ++u)
						acc.add(u->m, t->c * u->c);
				}
				// -{{a, b}, c}: through antisymmetry {m, c} = s {c, m}
				auto [f2, l2] = table.bracket(i, ej);
				int pc = table.base[k2].parity();
				for (auto *t = f2; t != l2; ++t)
				{
					std::int64_t s =
					    ((t->m.parity() + 1) * (pc + 1)) % 2 == 0 ? -1 : 1;
					auto [g1, g2] = table.bracket(k2, table.ext_index(t->m));
					for (auto *u = g1; u != g2; ++u)
						acc.add(u->m, -s * t->c * u->c);
				}
				// -(-1)^{(|a|+1)(|b|+1)} {b, {a, c}}
				auto [f3, l3] = table.bracket(i, table.base_to_ext(k2));
				for (auto *t = f3; t != l3; ++t)
				{
					auto [g1, g2] = table.bracket(j, table.ext_index(t->m));
					for (auto *u = g1; u != g2; ++u)
						acc.add(u->m, -jacobi_sign * t->c * u->c);
				}
				if (!acc.all_zero())
				{
					why = "Jacobi fails for (" +
					      detail::describe(table.base[i]) + ", " +
					      detail::describe(table.base[j]) + ", " +
					      detail::describe(table.base[k2]) + ")";
					return done;
				}
			}
		}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// Both Leibniz identities of the BV definition on bounded monomial triples:
/// {a, bc} over all a and unordered (b, c), and {ab, c} over all ordered
/// (a, b) and all c.
inline SuiteResult suite_leibniz(const RunConfig &cfg)
{
	SuiteResult r{"bv-leibniz"};
	auto start = detail::Clock::now();
	const auto &table = detail::bracket_table(cfg);
	const std::size_t n = table.base.size();
	detail::ParallelCheck check;
	// first identity: {a, b.c} = {a,b}.c + (-1)^{|b|(|a|+1)} b.{a,c}
	check.run(n, cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		detail::Accumulator acc;
		int pa = table.base[i].parity();
		for (std::size_t j = 0; j < n; ++j)
		{
			const Monomial &b = table.base[j];
			int pb = b.parity();
			std::int64_t kappa = (pb * (pa + 1)) % 2 == 0 ? 1 : -1;
			for (std::size_t k2 = j; k2 < n; ++k2)
			{
				++done;
				const Monomial &c = table.base[k2];
				acc.clear();
				auto bc = Monomial::mul(b, c);
				if (bc)
				{
					auto [f, l] =
					    table.bracket(i, table.ext_index(bc->second));
					for (auto *t = f; t != l; ++t)
						acc.add(t->m, bc->first * t->c);
				}
				auto [f1, l1] = table.bracket(i, table.base_to_ext(j));
				for (auto *t = f1; t != l1; ++t)
					if (auto p = Monomial::mul(t->m, c))
						acc.add(p->second, -p->first * t->c);
				auto [f2, l2] = table.bracket(i, table.base_to_ext(k2));
				for (auto *t = f2; t != l2; ++t)
					if (auto p = Monomial::mul(b, t->m))
						acc.add(p->second, -kappa * p->first * t->c);
				if (!acc.all_zero())
				{
					why = "first Leibniz identity fails for (" +
					      detail::describe(table.base[i]) + ", " +
					      detail::describe(b) + ", " + detail::describe(c) +
					      ")";
					return done;
				}
			}
		}
		return done;
	});
	// second identity: {a.b, c} = a.{b,c} + (-1)^{|b|(|c|+1)} {a,c}.b
	check.run(n, cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		detail::Accumulator acc;
		const Monomial &a = table.base[i];
		for (std::size_t j = 0; j < n; ++j)
		{
			const Monomial &b = table.base[j];
			int pb = b.parity();
			auto ab = Monomial::mul(a, b);
			for (std::size_t k2 = 0; k2 < n; ++k2)
			{
				++done;
				const Monomial &c = table.base[k2];
				int pc = c.parity();
				acc.clear();
				if (ab)
				{
					// {ab, c} = -(-1)^{(|ab|+1)(|c|+1)} {c, ab}
					std::int64_t s =
					    ((ab->second.parity() + 1) * (pc + 1)) % 2 == 0 ? -1
					                                                    : 1;
					auto [f, l] =
					    table.bracket(k2, table.ext_index(ab->second));
					for (auto *t = f; t != l; ++t)
						acc.add(t->m, s * ab->first * t->c);
				}
				auto [f1, l1] = table.bracket(j, table.base_to_ext(k2));
				for (auto *t = f1; t != l1; ++t)
					if (auto p = Monomial::mul(a, t->m))
						acc.add(p->second, -p->first * t->c);
				std::int64_t kappa = (pb * (pc + 1)) % 2 == 0 ? 1 : -1;
				auto [f2, l2] = table.bracket(i, table.base_to_ext(k2));
				for (auto *t = f2; t != l2; ++t)
					if (auto p = Monomial::mul(t->m, b))
						acc.add(p->second, -kappa * p->first * t->c);
				if (!acc.all_zero())
				{
					why = "second Leibniz identity fails for (" +
					      detail::describe(a) + ", " + detail::describe(b) +
					      ", " + detail::describe(c) + ")";
					return done;
				}
			}
		}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// Theorem A: the closed-form bracket equals the deviation bracket on all
/// ordered pairs of bounded monomials.
inline SuiteResult suite_theorem_a(const RunConfig &cfg)
{
	SuiteResult r{"theoremA-closed-vs-oracle"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	const auto &table = detail::bracket_table(cfg);
	const std::size_t n = table.base.size();
	detail::ParallelCheck check;
	check.run(n, cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		Element a = Element::monomial(sig, Basis::intersection,
		                              table.base[i]);
		for (std::size_t j = 0; j < n; ++j)
		{
			++done;
			Element b = Element::monomial(sig, Basis::intersection,
			                              table.base[j]);
			Element closed = bracket_closed(a, b);
			auto [f, l] = table.bracket(i, table.base_to_ext(j));
			std::vector<Element::Term> terms;
			for (auto *t = f; t != l; ++t)
				terms.emplace_back(t->m, Rational(t->c));
			Element oracle = Element::from_terms(sig, Basis::intersection,
			                                     std::move(terms));
			if (!(closed == oracle))
			{
				why = "closed form differs from the oracle for {" +
				      detail::describe(table.base[i]) + ", " +
				      detail::describe(table.base[j]) + "}";
				return done;
			}
		}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// Theorem B: the Poisson bracket of the odd symplectic form equals the
/// deviation bracket on all ordered pairs, and preserves integrality.
inline SuiteResult suite_theorem_b(const RunConfig &cfg)
{
	SuiteResult r{"theoremB-poisson-vs-oracle"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	const auto &table = detail::bracket_table(cfg);
	const std::size_t n = table.base.size();
	// cache per-monomial h-forms and Hamiltonian fields
	std::vector<Element> h_forms;
	std::vector<VectorField> fields;
	h_forms.reserve(n);
	fields.reserve(n);
	for (const Monomial &m : table.base)
	{
		Element a = Element::monomial(sig, Basis::intersection, m);
		h_forms.push_back(to_h_basis(a));
		fields.push_back(hamiltonian_field(h_forms.back()));
	}
	detail::ParallelCheck check;
	check.run(n, cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		for (std::size_t j = 0; j < n; ++j)
		{
			++done;
			Element pb = from_h_basis(fields[i].apply(h_forms[j]));
			auto [f, l] = table.bracket(i, table.base_to_ext(j));
			std::vector<Element::Term> terms;
			for (auto *t = f; t != l; ++t)
				terms.emplace_back(t->m, Rational(t->c));
			Element oracle = Element::from_terms(sig, Basis::intersection,
			                                     std::move(terms));
			if (!(pb == oracle))
			{
				why = "Poisson bracket differs from the oracle for [" +
				      detail::describe(table.base[i]) + ", " +
				      detail::describe(table.base[j]) + "]";
				return done;
			}
			if (!pb.is_integral())
			{
				why = "Poisson bracket not integral for [" +
				      detail::describe(table.base[i]) + ", " +
				      detail::describe(table.base[j]) + "]";
				return done;
			}
		}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// Proposition 4-2: D_{2k} h_{2l} = delta_{k,l} and integrality of all
/// partial derivatives of the primitives.
inline SuiteResult suite_prop42(const RunConfig &cfg)
{
	SuiteResult r{"prop4-2"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	for (int l = sig.k; l <= sig.n; ++l)
	{
		Element h = newton_primitive(l, sig);
		for (int k2 = sig.k; k2 <= sig.n; ++k2)
		{
			++r.instances;
			Element d = d_dh(k2, h);
			Element expected = k2 == l
			                       ? Element::unit(sig, Basis::intersection)
			                       : Element::zero(sig, Basis::intersection);
			if (!(d == expected))
			{
				r.pass = false;
				r.counterexample = "D_" + std::to_string(2 * k2) + " h_" +
				                   std::to_string(2 * l) +
				                   " != " + (k2 == l ? "1" : "0");
				break;
			}
			++r.instances;
			if (!partial_even(k2, h).is_integral())
			{
				r.pass = false;
				r.counterexample = "dh_" + std::to_string(2 * l) + "/de_" +
				                   std::to_string(2 * k2) +
				                   " is not integral";
				break;
			}
		}
		if (!r.pass)
			break;
	}
	r.seconds = detail::elapsed(start);
	return r;
}

/// Round trip of the e- and h-presentations on all bounded monomials, and
/// primitivity of the Newton elements under the coproduct.
inline SuiteResult suite_h_basis(const RunConfig &cfg)
{
	SuiteResult r{"h-basis"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto monos = basis_monomials(sig, cfg.bound);
	detail::ParallelCheck check;
	check.run(monos.size(), cfg.workers, [&](std::size_t i, std::string &why) {
		Element a = Element::monomial(sig, Basis::intersection, monos[i]);
		if (!(from_h_basis(to_h_basis(a)) == a))
		{
			why = "h-basis round trip fails on " +
			      detail::describe(monos[i]);
			return std::uint64_t{1};
		}
		Element s = Element::monomial(sig, Basis::symplectic, monos[i]);
		if (!(to_h_basis(from_h_basis(s)) == s))
		{
			why = "e-basis round trip fails on " +
			      detail::describe(monos[i], Basis::symplectic);
			return std::uint64_t{1};
		}
		return std::uint64_t{1};
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	for (int l = sig.k; l <= sig.n; ++l)
	{
		++r.instances;
		Element h = newton_primitive(l, sig).retagged(Basis::pontrjagin);
		TensorElement phi = coproduct(h);
		TensorElement expected =
		    TensorElement::outer(h, Element::unit(sig, Basis::pontrjagin)) +
		    TensorElement::outer(Element::unit(sig, Basis::pontrjagin), h);
		if (!(phi == expected))
		{
			r.pass = false;
			r.counterexample = "h_" + std::to_string(2 * l) +
			                   " is not primitive";
			break;
		}
	}
	r.seconds = detail::elapsed(start);
	return r;
}

/// The sphere table (Theorem 5-2): the closed forms match the general
/// machinery entry for entry, and the odd part acts on Z[h] as the stated
/// derivations.
inline SuiteResult suite_sphere(const RunConfig &cfg)
{
	SuiteResult r{"sphere-table"};
	auto start = detail::Clock::now();
	int lmax = cfg.bound;
	for (int rank : {1, 2, 3})
	{
		try
		{
			SphereTable t = sphere_bv(lmax, rank);
			r.instances += 2 * (lmax + 1) +
			               2 * (lmax + 1) * (lmax + 1);
			// intertwining with derivations on Z[h]
			Signature sig = t.sig;
			auto h_pow = [&](int e) {
				return Element::monomial(sig, Basis::intersection,
				                         Monomial().with_exp(rank, e));
			};
			auto act = [&](int a, const Element &p) {
				return Rational(-1) * (h_pow(a) * partial_even(rank, p));
			};
			for (int a = 0; a <= lmax; ++a)
				for (int b = 0; b <= lmax; ++b)
					for (int m = 0; m <= lmax; ++m)
					{
						++r.instances;
						Element p = h_pow(m);
						Element br =
						    t.bracket_odd_odd[a][b].retagged(
						        Basis::intersection);
						Element lhs = Element::zero(sig, Basis::intersection);
						for (const auto &[mm, c] : br.terms())
							lhs += c * act(mm.exp(rank), p);
						Element rhs = act(a, act(b, p)) - act(b, act(a, p));
						if (!(lhs == rhs))
						{
							r.pass = false;
							r.counterexample =
							    "derivation intertwining fails at rank " +
							    std::to_string(rank);
							r.seconds = detail::elapsed(start);
							return r;
						}
					}
		}
		catch (const Error &e)
		{
			r.pass = false;
			r.counterexample = e.what();
			break;
		}
	}
	r.seconds = detail::elapsed(start);
	return r;
}

/// Theorem 5-1 consistency: the Stiefel Delta computed with D^{(k)} agrees
/// with the e_2..e_{2k-2} -> 0 specialization of the SU-case Delta, for
/// every k of the configured n.
inline SuiteResult suite_stiefel(const RunConfig &cfg)
{
	SuiteResult r{"stiefel-consistency"};
	auto start = detail::Clock::now();
	for (int k2 = 1; k2 <= cfg.n; ++k2)
	{
		Signature st(cfg.n, k2);
		Signature su(cfg.n, 1);
		for (const Monomial &m : basis_monomials(st, cfg.bound))
		{
			++r.instances;
			Element stiefel =
			    bv_delta(Element::monomial(st, Basis::intersection, m));
			Element lifted =
			    bv_delta(Element::monomial(su, Basis::intersection, m));
			std::vector<Element::Term> kept;
			for (const auto &[mm, c] : lifted.terms())
			{
				bool killed = false;
				for (int l = 1; l < k2; ++l)
					if (mm.exp(l) > 0)
						killed = true;
				if (!killed)
					kept.emplace_back(mm, c);
			}
			if (!(stiefel == Element::from_terms(st, Basis::intersection,
			                                     std::move(kept))))
			{
				r.pass = false;
				r.counterexample =
				    "specialization mismatch at k=" + std::to_string(k2) +
				    " on " + detail::describe(m);
				r.seconds = detail::elapsed(start);
				return r;
			}
		}
	}
	r.seconds = detail::elapsed(start);
	return r;
}

/// Corollary C: pair-locality of Delta in the h-coordinates (k = 1).
inline SuiteResult suite_splitting(const RunConfig &cfg)
{
	SuiteResult r{"rational-splitting"};
	if (cfg.k != 1)
	{
		r.applicable = false;
		r.note = "requires k=1";
		return r;
	}
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto monos = basis_monomials(sig, cfg.bound);
	detail::ParallelCheck check;
	check.run(monos.size(), cfg.workers, [&](std::size_t i, std::string &why) {
		Element x = Element::monomial(sig, Basis::symplectic, monos[i]);
		Element lhs = to_h_basis(bv_delta(from_h_basis(x)));
		Element rhs = Element::zero(sig, Basis::symplectic);
		for (int l = sig.k; l <= sig.n; ++l)
			rhs += pair_local_delta(l, x);
		if (!(lhs == rhs))
			why = "Delta is not pair-local on " +
			      detail::describe(monos[i], Basis::symplectic);
		return std::uint64_t{1};
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;
	r.seconds = detail::elapsed(start);
	return r;
}

/// Corollary D: the quadratic span has dimension 2(n-k+1)^2, every induced
/// linear map annihilates omega, the span is closed under the bracket, and
/// the Hamiltonian-field map intertwines brackets on samples.
inline SuiteResult suite_psp(const RunConfig &cfg)
{
	SuiteResult r{"psp-quadratics"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	auto q = psp_basis(sig);
	int m = sig.generator_count();
	++r.instances;
	if (static_cast<int>(q.size()) != 2 * m * m)
	{
		r.pass = false;
		r.counterexample = "expected " + std::to_string(2 * m * m) +
		                   " quadratics, got " + std::to_string(q.size());
		r.seconds = detail::elapsed(start);
		return r;
	}
	for (std::size_t i = 0; i < q.size() && r.pass; ++i)
	{
		++r.instances;
		if (q[i].first.term_count() != 1)
		{
			r.pass = false;
			r.counterexample = "quadratic is not a monomial";
			break;
		}
		for (std::size_t j = i + 1; j < q.size(); ++j)
			if (q[i].first.terms().front().first ==
			    q[j].first.terms().front().first)
			{
				r.pass = false;
				r.counterexample = "repeated quadratic monomial";
				break;
			}
		if (!annihilates_omega(q[i].second))
		{
			r.pass = false;
			r.counterexample = "map of " + to_string(q[i].first) +
			                   " does not annihilate omega";
			break;
		}
	}
	if (r.pass)
	{
		for (const auto &[f, mf] : q)
		{
			for (const auto &[g, mg] : q)
			{
				++r.instances;
				Element br = poisson_bracket(f, g);
				for (const auto &[mono, c] : br.terms())
					if (mono.word().size() + mono.exponent_sum() != 2)
					{
						r.pass = false;
						r.counterexample =
						    "bracket {" + to_string(f) + ", " + to_string(g) +
						    "} leaves the quadratic span";
						break;
					}
				if (!r.pass)
					break;
				// the Hamiltonian-field map is a Lie homomorphism
				if (!(field_bracket(hamiltonian_field(f),
				                    hamiltonian_field(g)) ==
				      hamiltonian_field(br)))
				{
					r.pass = false;
					r.counterexample = "X_{F,G} != [X_F, X_G] for F=" +
					                   to_string(f) + ", G=" + to_string(g);
					break;
				}
			}
			if (!r.pass)
				break;
		}
	}
	r.seconds = detail::elapsed(start);
	return r;
}

/// The L(p) filtration: {L(p),L(q)} c L(p+q-1) on all bounded pairs, L(0)
/// abelian, L(1) closed, and the action of L(1) on L(0) realizes the stated
/// derivations -e^J D_{2l} as a Lie homomorphism.
inline SuiteResult suite_filtration(const RunConfig &cfg)
{
	SuiteResult r{"filtration"};
	auto start = detail::Clock::now();
	Signature sig = cfg.signature();
	const auto &table = detail::bracket_table(cfg);
	const std::size_t n = table.base.size();
	detail::ParallelCheck check;
	check.run(n, cfg.workers, [&](std::size_t i, std::string &why) {
		std::uint64_t done = 0;
		int p = table.base[i].word().size();
		for (std::size_t j = 0; j < n; ++j)
		{
			++done;
			int q = table.base[j].word().size();
			auto [f, l] = table.bracket(i, table.base_to_ext(j));
			for (auto *t = f; t != l; ++t)
				if (static_cast<int>(t->m.word().size()) != p + q - 1)
				{
					why = "{L(" + std::to_string(p) + "), L(" +
					      std::to_string(q) + ")} escapes L(p+q-1) for {" +
					      detail::describe(table.base[i]) + ", " +
					      detail::describe(table.base[j]) + "}";
					return done;
				}
		}
		return done;
	});
	r.pass = check.pass;
	r.instances = check.instances;
	r.counterexample = check.counterexample;

	if (r.pass)
	{
		// L(1) acts on L(0) by alpha_{2l+1} e^J |-> -e^J D_{2l}; check the
		// action values and the homomorphism property on bounded data
		auto evens = even_monomials(sig, cfg.bound);
		std::vector<std::pair<int, Monomial>> l1; // (l, e^J)
		for (int l = sig.k; l <= sig.n; ++l)
			for (const Monomial &e : evens)
				l1.emplace_back(l, e.with_word(Word::single(l)));
		auto as_derivation = [&](const Element &u, const Element &p0) {
			// u in L(1): apply sum of -e^J D_{2l} per term
			Element out = Element::zero(sig, Basis::intersection);
			for (const auto &[mu, cu] : u.terms())
			{
				int l = mu.word().indices().front();
				Element ej = Element::monomial(sig, Basis::intersection,
				                               mu.with_word(Word()), cu);
				out -= ej * d_for_signature(l, p0);
			}
			return out;
		};
		for (const auto &[la, ma] : l1)
		{
			Element u = Element::monomial(sig, Basis::intersection, ma);
			for (const Monomial &me : evens)
			{
				++r.instances;
				Element p0 = Element::monomial(sig, Basis::intersection, me);
				Element lhs = bracket_deviation(u, p0);
				if (!(lhs == as_derivation(u, p0)))
				{
					r.pass = false;
					r.counterexample =
					    "{alpha e^J, e^L} != -e^J D e^L for " +
					    detail::describe(ma);
					break;
				}
			}
			if (!r.pass)
				break;
			for (const auto &[lb, mb] : l1)
			{
				Element v = Element::monomial(sig, Basis::intersection, mb);
				Element br = bracket_deviation(u, v);
				for (const Monomial &me : evens)
				{
					++r.instances;
					Element p0 =
					    Element::monomial(sig, Basis::intersection, me);
					Element lhs = as_derivation(br, p0);
					Element rhs = as_derivation(u, as_derivation(v, p0)) -
					              as_derivation(v, as_derivation(u, p0));
					if (!(lhs == rhs))
					{
						r.pass = false;
						r.counterexample =
						    "L(1) -> Der(L(0)) homomorphism fails for (" +
						    detail::describe(ma) + ", " +
						    detail::describe(mb) + ")";
						break;
					}
				}
				if (!r.pass)
					break;
			}
			if (!r.pass)
				break;
		}
	}
	r.seconds = detail::elapsed(start);
	return r;
}

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------

using SuiteFn = SuiteResult (*)(const RunConfig &);

inline const std::vector<std::pair<std::string, SuiteFn>> &suite_registry()
{
	static const std::vector<std::pair<std::string, SuiteFn>> suites = {
	    {"mul-assoc-comm", &suite_mul_assoc_comm},
	    {"partial-alpha", &suite_partial_alpha},
	    {"d-commute", &suite_d_commute},
	    {"degree-additive", &suite_degree_additive},
	    {"coproduct", &suite_coproduct},
	    {"delta-pontrjagin", &suite_delta_pontrjagin},
	    {"x-action-duality", &suite_x_action},
	    {"d-characterization", &suite_d_characterization},
	    {"triangular-reconstruction", &suite_triangular},
	    {"delta-squared", &suite_delta_squared},
	    {"bv-antisymmetry", &suite_antisymmetry},
	    {"bv-jacobi", &suite_jacobi},
	    {"bv-leibniz", &suite_leibniz},
	    {"theoremA-closed-vs-oracle", &suite_theorem_a},
	    {"theoremB-poisson-vs-oracle", &suite_theorem_b},
	    {"prop4-2", &suite_prop42},
	    {"h-basis", &suite_h_basis},
	    {"sphere-table", &suite_sphere},
	    {"stiefel-consistency", &suite_stiefel},
	    {"rational-splitting", &suite_splitting},
	    {"psp-quadratics", &suite_psp},
	    {"filtration", &suite_filtration},
	};
	return suites;
}

inline std::vector<std::string> suite_names()
{
	std::vector<std::string> names;
	for (const auto &[name, fn] : suite_registry())
		names.push_back(name);
	return names;
}

/// Runs the selected suite ("all" for every one) under the configuration.
inline std::vector<SuiteResult> run_suites(const RunConfig &cfg)
{
	cfg.validate();
	std::vector<SuiteResult> results;
	bool found = false;
	for (const auto &[name, fn] : suite_registry())
	{
		if (cfg.suite != "all" && cfg.suite != name)
			continue;
		found = true;
		results.push_back(fn(cfg));
	}
	if (!found)
		throw Error("unknown suite '" + cfg.suite + "'; available: all, " +
		            [] {
			            std::string s;
			            for (const auto &[name, fn] : suite_registry())
			            {
				            if (!s.empty())
					            s += ", ";
				            s += name;
			            }
			            return s;
		            }());
	return results;
}

} // namespace verify
} // namespace loopbv
