#pragma once

#include "dtj/knots.hpp"
#include "dtj/laurent.hpp"

#include <vector>

namespace dtj {

/// Exponent pieces of the general 2-bridge nested sum, exposed for the
/// table-identity tests. nbar is the weakly increasing tuple (n_1..n_pprime),
/// 0-based storage, with the convention n_s = 0 for s <= 0.
long long takata_a(const TakataTables& tab, const std::vector<int>& nbar);
long long takata_b1(const TwoBridge& tb, const TakataTables& tab, const std::vector<int>& nbar);
long long takata_b2(const TwoBridge& tb, const TakataTables& tab, const std::vector<int>& nbar);

/// Closed form of a(nbar) for the family b(10p+1, 8p+1): the whole
/// coefficient of N collapses to -sum_j n_{5j-2} - sum_{j<p} n_{5j} - p.
/// nbar must have length 5p. Checked against the raw a(nbar) by tests.
long long takata_a_closed_m2(int p, const std::vector<int>& nbar);

/// Colored Jones polynomial of the mirrored 2-bridge knot b(l,t)* via the
/// nested-sum formula over weakly increasing tuples bounded by N-1. The
/// division-free assembly uses (q)_{N-1}/(q)_{N-n-1} = (q^{N-n};q)_n and a
/// q-multinomial over the difference vector, so no rational arithmetic
/// enters the loop.
LaurentPoly takata_colored_jones(const TwoBridge& tb, int N);

/// Straightforward single-threaded enumeration, kept as the reference
/// implementation for the parallel kernel.
LaurentPoly takata_colored_jones_serial(const TwoBridge& tb, int N);

}  // namespace dtj
