#ifndef HOMLEIB_DEFORMATION_HPP
#define HOMLEIB_DEFORMATION_HPP

#include <optional>
#include <vector>

#include <homleib/graded.hpp>

namespace homleib {

// One-parameter deformation of the bracket truncated at a finite order:
//   f_t = F_0 + t F_1 + ... + t^s F_s,
// F_0 the bracket of the base algebra, every higher term a degree-2 self
// cochain. Construction checks shapes and twist-compatibility of the terms;
// the order-by-order equations are not checked here, so a freshly built
// value is a candidate until deformation_residual says otherwise.
struct TruncatedDeformation {
  Algebra base;
  std::vector<Cochain> terms;  // terms[i] is F_{i+1}

  int order() const { return static_cast<int>(terms.size()); }
};

TruncatedDeformation make_deformation(const Algebra& a, std::vector<Cochain> terms);

// Truncated formal automorphism phi_t = id + t phi_1 + ... + t^s phi_s.
// Admissibility (each phi_i commuting with the twist) is part of what
// check_equivalence verifies, not a construction invariant.
struct TruncatedAutomorphism {
  std::vector<Matrix> phi;  // phi[i] is phi_{i+1}

  int order() const { return static_cast<int>(phi.size()); }
};

// Left minus right side of the order-s equation
//   sum_{j+k=s} F_j(F_k(x_1..x_n), alpha(y_1), .., alpha(y_{n-1}))
//     = sum_{i=1}^n sum_{j+k=s} F_j(alpha(x_1), .., F_k(x_i, y_1, ..), ..),
// collected as the degree-3 cochain sum_{j+k=s} i_{F_j}(F_k). At s = 0 this
// is the defining-identity defect i_pi(pi) of the base; at s >= 1 it equals
//   -delta F_s + sum_{j+k=s, j,k>0} i_{F_j}(F_k),
// so the deformation is valid at order s exactly when the residual is zero.
Cochain deformation_residual(const TruncatedDeformation& d, int s);

// True iff the order-1 equation holds. The order-1 residual is -delta F_1,
// so this is the cocycle condition on the leading term.
bool check_first_order(const TruncatedDeformation& d);

// Obstruction cochain G_s = sum_{i+j=s, i,j>0} [F_i, F_j] for s >= 2, the
// degree-3 cochain whose class decides whether a deformation valid through
// order s-1 extends to order s: the order-s equation reads
// delta F_s = 1/2 G_s. Only the terms below s enter, so s may exceed the
// stored order by one. Needs a multiplicative twist and the equations
// through order s-1 (both verified here); [G_s, pi] = 0 is asserted.
Cochain obstruction(const TruncatedDeformation& d, int s);

// Result of a one-order extension attempt at order s+1. On success
// `extended` holds the input deformation with the solved term appended and
// `obstruction_class` is empty. Otherwise the class of the obstruction
// cocycle in degree-3 cohomology is nonzero; its coordinates in the
// representative basis of cohomology(.., 3) are reported for diagnosis.
struct ExtensionOutcome {
  std::optional<TruncatedDeformation> extended;
  Cochain obstruction_cocycle;  // G_{s+1}
  Vec obstruction_class;
};

// Solves delta F_{s+1} = 1/2 G_{s+1} over the compatible degree-2 cochains
// (particular solution, free coordinates zero). The base algebra must
// satisfy the defining identity with a multiplicative twist and the
// deformation must be valid through its stored order.
ExtensionOutcome extend_one_order(const TruncatedDeformation& d);

// Whether phi_t carries d into e: expands
//   phi_t(f_t(x_1, .., x_n)) = g_t(phi_t(x_1), .., phi_t(x_n))
// on all basis tuples, comparing the coefficient of t^m for m = 0..s, and
// checks phi_i o alpha = alpha o phi_i for every i. All three inputs must
// share the base algebra and the truncation order. At order 1 the match
// forces F_1 - G_1 = delta phi_1, so first terms matter only through their
// cohomology class.
bool check_equivalence(const TruncatedDeformation& d, const TruncatedDeformation& e,
                       const TruncatedAutomorphism& phi);

}  // namespace homleib

#endif
