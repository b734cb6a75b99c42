#ifndef HOMLEIB_REPRESENTATION_HPP
#define HOMLEIB_REPRESENTATION_HPP

#include <vector>

#include <homleib/algebra.hpp>

namespace homleib {

// Module (M, alpha_M) over a multiplicative n-ary algebra, given by n action
// tensors. Action k takes k algebra arguments, then the module argument, then
// n-1-k algebra arguments, and lands in M.
class Representation {
 public:
  Representation(int algebra_dim, int arity, int module_dim, const Field& f);

  int algebra_dim() const { return alg_dim_; }
  int arity() const { return arity_; }
  int module_dim() const { return mod_dim_; }
  const Field& field() const { return field_; }

  const Matrix& alpha_m() const { return alpha_m_; }
  void set_alpha_m(const Matrix& m);

  // structure constants of action k on basis elements; l_idx lists the n-1
  // algebra indices in argument order (the module slot excluded)
  Scalar& action_coeff(int k, const std::vector<int>& l_idx, int m_idx, int target);
  const Vec& action_basis(int k, std::int64_t l_rank, int m_idx) const;
  Vec& action_basis(int k, std::int64_t l_rank, int m_idx);

  // multilinear evaluation; l_args holds n-1 algebra coordinate vectors
  Vec action(int k, const std::vector<Vec>& l_args, const Vec& m_arg) const;

 private:
  int alg_dim_, arity_, mod_dim_;
  Field field_;
  Matrix alpha_m_;
  std::vector<std::vector<Vec>> actions_;  // [k][l_rank * mod_dim + m_idx]
};

// Report from the defining-relation scan. Relation ids:
//   0 .. n-1        the identity with x_{r+1} placed in M
//   n .. 2n-2       the identity with y_{r-n+1} placed in M
//   2n-1 .. 3n-2    twist equivariance of action r-(2n-1)
// The witness lists basis indices for (x_1..x_n, y_1..y_{n-1}) in order for
// relation ids < 2n-1 (the typed slot holding the module index), and
// (l_1..l_{n-1}, m) for equivariance ids.
struct RepReport {
  bool holds = true;
  int relation = -1;
  std::vector<int> witness;
};

// LHS - RHS of one defining relation on one basis assignment.
Vec relation_residual(const Algebra& a, const Representation& r, int relation,
                      const std::vector<int>& assign);

// Scans all 2n-1 relations plus equivariance of each action over all basis
// assignments; requires a uniform multiplicative twist on a.
RepReport check_representation(const Algebra& a, const Representation& r);

// M = L, alpha_M = alpha, action k = the bracket with its module slot at
// position k+1. Requires a valid uniform multiplicative algebra.
Representation adjoint_representation(const Algebra& a);

// All actions zero; any alpha_m satisfies the relations.
Representation trivial_representation(const Algebra& a, const Matrix& alpha_m);

}  // namespace homleib

#endif
