#ifndef HOMLEIB_EMBEDDING_HPP
#define HOMLEIB_EMBEDDING_HPP

#include <homleib/cochain.hpp>

namespace homleib {

// Slotwise tensor expansion of a self-coefficient degree-p cochain on the
// algebra into a degree-p cochain on the block algebra D (self coefficients):
// with X_1 = x^1 x ... x x^{n-1},
//   (E f)(X_1, .., X_p) = sum_{i=1}^{n-1}
//     alpha^{p-1}(x^1) x .. x f(x^i, X_2, .., X_p) at i .. x alpha^{p-1}(x^{n-1}).
// At arity 2 this is the identity on coefficient tensors. The input must be
// compatible with module = algebra (adjoint coefficients).
Cochain delta_embed(const Algebra& a, const Cochain& f);

// Matrix of delta_embed from compatible degree-p coordinates on the algebra
// side to compatible degree-p coordinates on the block side.
Matrix delta_embed_matrix(const Algebra& a, int degree);

struct CommutingSquareReport {
  bool holds = true;
  int max_degree_checked = 0;  // on failure, the first degree that broke
};

// Verifies (block differential) o embed = embed o coboundary as matrices for
// every degree up to max_degree; stops at the first failure.
CommutingSquareReport check_commuting_square(const Algebra& a, int max_degree);

// True iff the embedding matrix has a zero kernel at this degree. The twist
// must be injective.
bool check_injectivity(const Algebra& a, int degree);

}  // namespace homleib

#endif
