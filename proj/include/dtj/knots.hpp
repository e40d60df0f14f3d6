#pragma once

#include <string>
#include <vector>

namespace dtj {

/// Double twist knot K_(m,p): the two twist regions hold 2m-1 and 2p
/// half-twists, positive counts meaning right-handed ones. The four sign
/// quadrants of (m,p) are the four evaluator families.
struct KnotSpec {
    int m = 0;
    int p = 0;

    bool operator==(const KnotSpec&) const = default;
};

/// Mirror image: K_(m,p) <-> K_(1-m,-p). This single rule is an involution
/// and covers both pairings K_(-m,-p) <-> K_(m+1,p) and
/// K_(-m,p) <-> K_(m+1,-p).
KnotSpec mirror(const KnotSpec& k);

std::string knot_name(const KnotSpec& k);

/// 2-bridge knot b(l,t): l, t coprime odd, l > t >= 1. pprime = (l-1)/2 is
/// the number of summation indices in the general colored Jones formula.
struct TwoBridge {
    int l = 0;
    int t = 0;

    TwoBridge(int l_, int t_);

    int pprime() const { return (l - 1) / 2; }

    bool operator==(const TwoBridge&) const = default;
};

/// The two double twist families with an odd half-twist region, indexed by
/// which mirror pair they realise:
///   MinusMinus: b(4mp+2p-1, 4mp-1)* = K_(-m,-p)
///   MinusPlus:  b(4mp+2p+1, 4mp+1)* = K_(-m,p)
enum class TwistFamily { MinusMinus, MinusPlus };

TwoBridge two_bridge_params(int m, int p, TwistFamily family);

/// Index tables entering the general 2-bridge formula: the sign sequence
/// sigma_j, the permutation i_k with its inverse rprime, and sigma evaluated
/// along the permutation. All vectors are 1-based in spirit; entry j lives
/// at position j-1.
struct TakataTables {
    std::vector<int> sigma;     // sigma_j, j = 1..pprime
    std::vector<int> ik;        // i_k,     k = 1..pprime (permutation)
    std::vector<int> sigma_ik;  // sigma_{i_k}
    std::vector<int> rprime;    // r'(j); i_{r'(j)} = j

    bool operator==(const TakataTables&) const = default;
};

/// Tables from the defining congruences: r(j) = (2j-1)t mod 2l in (-l,l),
/// sigma_j = (-1)^floor((2j-1)t/l), r'(j) = (|r(j)|+1)/2, i inverse to r'.
/// Throws if r' fails to be a bijection (invalid l,t). This is the source
/// of truth; the interval fast path below exists to test it.
TakataTables takata_tables_general(const TwoBridge& tb);

/// Tables from the interval algorithms for the two double twist families.
TakataTables takata_tables_lemma(int m, int p, TwistFamily family);

}  // namespace dtj
