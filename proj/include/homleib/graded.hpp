#ifndef HOMLEIB_GRADED_HPP
#define HOMLEIB_GRADED_HPP

#include <vector>

#include <homleib/cochain.hpp>

namespace homleib {

// A (q, r)-shuffle of q + r positions: order[t] is the 0-based source
// position routed to slot t, with order[0..q-1] ascending and
// order[q..q+r-1] ascending. sign is the permutation parity.
struct Shuffle {
  std::vector<int> order;
  int sign = 1;
};

// All (q, r)-shuffles, ordered lexicographically by the first q entries.
std::vector<Shuffle> shuffles(int q, int r);

// The operations below act on self-coefficient cochains (values in the
// algebra itself), graded by weight: a cochain of degree p+1 has weight p.
// They need a uniform twist alpha; abar is its (n-1)-fold tensor power on
// the block space.

// Insertion of g (weight q) into slot k of f (weight p), shaped by a
// (q, p-k)-shuffle sigma of the trailing argument positions:
//   k = 0:       f(g(z, X_{s1}, .., X_{sq}), abar^q X_{s(q+1)}, ..)
//   1 <= k <= p: sum over the n-1 factors of block X_k of
//                f(alpha^q z, abar^q X_1, .., abar^q X_{k-1},
//                  alpha^q X_k^1 x .. x g(X_k^s, X_{s(k+1)}, ..) at s x ..,
//                  abar^q X_{s(k+q+1)}, .., abar^q X_{s(p+q)}).
// At arity 2 a block is a single factor, so every slot inserts g's value
// directly with all spectators twisted by alpha^q.
Cochain compose(const Algebra& a, const Cochain& f, const Cochain& g, int k,
                const Shuffle& sigma);

// i_f(g) = sum_{k=0}^p (-1)^{kq} sum_{sigma in Sh(q, p-k)} sign(sigma) f o_k^sigma g
Cochain insertion(const Algebra& a, const Cochain& f, const Cochain& g);

// [f, g] = i_f(g) + (-1)^{pq+1} i_g(f). Antisymmetry
// [f, g] = -(-1)^{pq} [g, f] holds by construction; for weights p = q = 0
// this is the commutator of linear maps.
Cochain graded_bracket(const Algebra& a, const Cochain& f, const Cochain& g);

// The bracket as a weight-1 cochain: pi(z, X) = [z, X^1, .., X^{n-1}].
// pi is twist-compatible exactly when the algebra is multiplicative, and
// [pi, pi] vanishes exactly when the defining identity holds; the identity
// residual at a basis tuple is i_pi(pi) read at the matching argument.
Cochain pi_cochain(const Algebra& a);

}  // namespace homleib

#endif
