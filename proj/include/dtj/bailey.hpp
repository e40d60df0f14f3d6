#pragma once

#include "dtj/rational.hpp"

#include <functional>
#include <string>

namespace dtj {

/// A Bailey pair relative to a = q: sequences (alpha_n, beta_n) of rational
/// functions satisfying beta_n = sum_k alpha_k / ((q)_{n-k} (q^2)_{n+k}).
struct BaileyPair {
    std::string name;
    std::function<RationalFn(int)> alpha;
    std::function<RationalFn(int)> beta;
};

BaileyPair base_pair_slater();  // alpha = (-1)^n q^{n(3n+1)/2}(1-q^{2n+1})/(1-q), beta = 1/(q)_n
BaileyPair base_pair_walsh();   // alpha = q^{n^2}(1-q^{2n+1})/(1-q),           beta = 1/(q)_n^2

/// Checks the defining relation for 0 <= n <= n_max with denominators
/// cleared: beta_n (q)_n (q^2)_{2n} = sum_k alpha_k (q^{n-k+1})_k
/// (q^{n+k+2})_{n-k}, both Pochhammer tails being polynomials.
bool verify_bailey_pair(const BaileyPair& bp, int n_max);

/// One Bailey-lemma step in the rho1, rho2 -> infinity limit (a = q):
/// alpha'_n = q^{n^2+n} alpha_n, beta'_n = sum_k q^{k^2+k} beta_k / (q)_{n-k}.
/// The limit form is derived, not displayed, so it is gated behind the
/// closed-form equivalence checks in the test suite.
BaileyPair bailey_step_limit(const BaileyPair& bp);

/// The displayed finite-rho Bailey lemma step (a = q), with rho1 and rho2
/// specialised to concrete rational values; used as a small-n property test.
BaileyPair bailey_step_finite(const BaileyPair& bp, const RationalFn& rho1,
                              const RationalFn& rho2);

/// Closed forms of the (p-1)-fold iterated pairs.
BaileyPair iterated_pair_slater(int p);  // beta_n = c_{p,n}/(q)_n
BaileyPair iterated_pair_walsh(int p);   // beta_n = d_{p,n}/(q)_n

}  // namespace dtj
