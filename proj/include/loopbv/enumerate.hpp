#pragma once

#include "loopbv/monomial.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace loopbv {

/// All purely even monomials e^J over the signature with weighted exponent
/// sum (sum of l * j_l, i.e. half the homological degree) at most bound,
/// in canonical order.
inline std::vector<Monomial> even_monomials(Signature sig, int bound)
{
	std::vector<Monomial> out;
	std::function<void(int, Monomial, int)> rec = [&](int l, Monomial m,
	                                                  int left) {
		if (l > sig.n)
		{
			out.push_back(m);
			return;
		}
		for (int e = 0; e * l <= left; ++e)
			rec(l + 1, m.with_exp(l, e), left - e * l);
	};
	rec(sig.k, Monomial(), bound);
	std::sort(out.begin(), out.end());
	return out;
}

/// All basis monomials alpha_I e^J over the signature with even-part weight
/// at most bound: every exterior word crossed with every bounded even
/// monomial, in canonical order.
inline std::vector<Monomial> basis_monomials(Signature sig, int bound)
{
	std::vector<Monomial> evens = even_monomials(sig, bound);
	std::vector<Monomial> out;
	out.reserve(evens.size() << sig.generator_count());
	std::uint16_t full = 0;
	for (int l = sig.k; l <= sig.n; ++l)
		full |= static_cast<std::uint16_t>(1u << (l - 1));
	for (std::uint16_t sub = full;; sub = (sub - 1) & full)
	{
		Word w = Word::from_bits(sub);
		for (const Monomial &m : evens)
			out.push_back(m.with_word(w));
		if (sub == 0)
			break;
	}
	std::sort(out.begin(), out.end());
	return out;
}

/// Splits [0, count) into contiguous chunks and runs fn(begin, end) on each,
/// using the requested number of worker threads (<= 1 runs inline). fn must
/// be safe to call concurrently on disjoint ranges.
inline void parallel_ranges(std::size_t count, int workers,
                            const std::function<void(std::size_t, std::size_t)> &fn)
{
	if (count == 0)
		return;
	if (workers <= 1 || count < 2)
	{
		fn(0, count);
		return;
	}
	std::size_t nthreads = std::min<std::size_t>(workers, count);
	std::vector<std::thread> threads;
	threads.reserve(nthreads);
	std::size_t chunk = (count + nthreads - 1) / nthreads;
	for (std::size_t t = 0; t < nthreads; ++t)
	{
		std::size_t begin = t * chunk;
		std::size_t end = std::min(count, begin + chunk);
		if (begin >= end)
			break;
		threads.emplace_back([&fn, begin, end] { fn(begin, end); });
	}
	for (auto &th : threads)
		th.join();
}

inline int default_workers()
{
	unsigned hw = std::thread::hardware_concurrency();
	return hw == 0 ? 1 : static_cast<int>(hw);
}

} // namespace loopbv
