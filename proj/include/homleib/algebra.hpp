#ifndef HOMLEIB_ALGEBRA_HPP
#define HOMLEIB_ALGEBRA_HPP

#include <cstdint>
#include <vector>

#include <homleib/matrix.hpp>

namespace homleib {

// Mixed-radix helpers for basis tuples: digit 0 is most significant, so
// lexicographic order on tuples equals numeric order on ranks.
std::int64_t power_i64(int base, int exp);
std::int64_t tuple_rank(const std::vector<int>& t, int base);
std::vector<int> tuple_unrank(std::int64_t r, int digits, int base);

Vec basis_vec(int n, int i, const Field& f);

// n-ary Hom-Leibniz algebra given by structure constants: an n-linear bracket
// on K^d together with n-1 twist maps. The bracket stores one coefficient
// vector per basis n-tuple; the defining identity is
//   [[x_1..x_n], a_1(y_1), ..., a_{n-1}(y_{n-1})]
//     = sum_i [a_1(x_1), .., a_{i-1}(x_{i-1}), [x_i, y_1..y_{n-1}],
//              a_i(x_{i+1}), .., a_{n-1}(x_n)].
// Binary (arity 2) instances carry a single twist.
class Algebra {
 public:
  Algebra(int dim, int arity, const Field& f);  // zero bracket, identity twists

  int dim() const { return dim_; }
  int arity() const { return arity_; }
  const Field& field() const { return field_; }
  std::int64_t tuple_count() const { return static_cast<std::int64_t>(bracket_.size()); }

  // structure constants: coefficient of e_target in the bracket of basis tuple
  Scalar& coeff(const std::vector<int>& tuple, int target);
  const Scalar& coeff(const std::vector<int>& tuple, int target) const;
  const Vec& bracket_basis(std::int64_t tuple) const { return bracket_[tuple]; }
  Vec& bracket_basis(std::int64_t tuple) { return bracket_[tuple]; }
  // multilinear evaluation on arbitrary coordinate vectors
  Vec bracket(const std::vector<Vec>& args) const;

  const Matrix& twist(int k) const { return twists_[k]; }  // k in 0..arity-2
  void set_twist(int k, const Matrix& m);
  void set_uniform_twist(const Matrix& m);
  bool uniform_twist() const;
  const Matrix& alpha() const;  // the uniform twist; error when twists differ
  Vec twist_col(int k, int j) const;  // image of e_j under twist k

  bool same_shape(const Algebra& o) const {
    return dim_ == o.dim_ && arity_ == o.arity_ && field_ == o.field_;
  }
  bool operator==(const Algebra& o) const;
  bool operator!=(const Algebra& o) const { return !(*this == o); }

 private:
  int dim_, arity_;
  Field field_;
  std::vector<Vec> bracket_;    // indexed by tuple rank; each entry length dim
  std::vector<Matrix> twists_;  // arity-1 matrices, each dim x dim
};

struct IdentityReport {
  bool holds = true;
  std::vector<int> witness;  // first violating (x_1..x_n, y_1..y_{n-1}), lex order
};

// Evaluates the defining identity on every basis tuple.
IdentityReport check_n_hom_leibniz(const Algebra& a);

// True iff m([x_1..x_n]) = [m(x_1)..m(x_n)] on all basis tuples. Optional
// witness receives the first violating tuple.
bool is_bracket_morphism(const Algebra& a, const Matrix& m, std::vector<int>* witness = nullptr);

// m is a to.dim() x from.dim() matrix over the shared field. True iff
// m([u_1..u_n]_from) = [m u_1, .., m u_n]_to on all basis tuples and
// m o twist_from(k) = twist_to(k) o m for every k. A violating bracket tuple
// is written to witness; twist failures leave it empty.
bool is_algebra_morphism(const Algebra& from, const Algebra& to, const Matrix& m,
                         std::vector<int>* witness = nullptr);

// alpha o bracket = bracket o alpha^{tensor n}; requires a uniform twist.
bool check_multiplicative(const Algebra& a);

// From an untwisted algebra (identity twists, identity holds) and an algebra
// morphism alpha, builds (L, alpha o bracket, alpha). The result is checked.
Algebra yau_twist(const Algebra& a, const Matrix& alpha);

// The binary Hom-Leibniz algebra on the (n-1)-fold tensor power:
//   [A, B] = sum_i alpha(a_1) x ... x [a_i, b_1..b_{n-1}] x ... x alpha(a_{n-1})
// with twist alpha^{tensor n-1}. Requires uniform multiplicative twist.
Algebra d_n_minus_one(const Algebra& a);

}  // namespace homleib

#endif
