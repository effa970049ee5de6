#pragma once
//
// Building blocks: small linear realizations with known slot words, and the
// composition algebra that concatenates them.
//
// Writing linear realizations as slot words, a perfect word (zero in the
// last slot) can be glued to any other word: drop the perfect word's zero
// and append the second word.  The grade of the result follows the second
// operand:
//
//     p + p  = p        p + ap = ap        p + r = r
//     ap + ap = p   (exists by the classical gluing result; produced here
//                    by the exhaustive search with the isolated vertex
//                    pinned to v-1, so it can be slow for large operands)
//
// Every other combination (anything after an ap except another ap, linear
// as a prefix, cyclic operands) is undefined and rejected.

#include <map>

#include "mpp/core.hpp"

namespace mpp {

// The vacuous realization of the empty list on K_1 (word "0"); the neutral
// element of composition.
Realization empty_realization();

// p{x^x}: edges [i, i+x] for i = 0..x-1 on v = 2x+1; perfect.
Realization perfect_xx(int x);

// p{1^a}: a adjacent dominoes (word 1,1,...,1,1,0); perfect.  a = 0 gives
// the empty realization.
Realization perfect_ones(long long a);

// {x^{x-1}} on v = 2x-1: edges [i, i+x] for i = 0..x-2, isolated x-1.
// Perfect only for x = 1 (vacuous), almost perfect only for x = 2.
Realization block_x_xminus1(int x);

// S_k = (2k+1, 2k-1, ..., 3, 1, 1, 3, ..., 2k+1, 0): perfect realization of
// {1, 3, 5, ..., 2k+1}.
Realization perfect_odd_chain(int k);

// Perfect realization of {1^{a_0}, 3^{a_1}, ..., (2m+1)^{a_m}} for
// non-increasing multiplicities a_0 >= a_1 >= ... >= a_m >= 1, by chaining
// a_m copies of S_m and (a_i - a_{i+1}) copies of each shorter S_i.
Realization perfect_odd_list(const std::vector<long long>& mults);

// Concatenation per the table above.  invalid_input on undefined kind
// combinations; internal_error if the guaranteed ap+ap gluing is not found.
Realization compose(const Realization& first, const Realization& second);

// Prefix k_l copies of p{l^l} for each length l (ascending); the grade of r
// is preserved.  New lengths (k_l > 0, l not in r's list) are fine.  With
// all-zero k this is the identity, even on cyclic input.
Realization inflate(const Realization& r, const std::map<int, int>& k);

// Linear realization of {1^a, y^b} for a >= floor((y-1)/2) (the two-block
// construction; grade: perfect when the trailing block is, almost perfect
// exactly when b mod y = 1 with the odd-straddle block).
Realization realize_1y(long long a, int y, long long b);

// Linear realization of {1^a, 2^b} for any a, b >= 0 not both zero:
// perfect when b is even, almost perfect when b is odd.
Realization realize_12(long long a, long long b);

// The cyclic {1^n} factor {[2i, 2i+1] : i < n} with isolated 2n.
Realization all_ones_factor(long long n);

// Cyclic realization of {x^n} on K_{2n+1} by multiplying the all-ones
// factor by x; requires gcd(x, 2n+1) = 1, which is exactly the divisor
// condition for a constant list.
Realization realize_constant(int x, long long n);

// Cyclic realization of {1, 2, ..., n}: edges [i, 2n-1-i] for i < n,
// isolated 2n.
Realization patterned_starter(int n);

}  // namespace mpp
