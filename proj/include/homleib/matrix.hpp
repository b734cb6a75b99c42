#ifndef HOMLEIB_MATRIX_HPP
#define HOMLEIB_MATRIX_HPP

#include <optional>
#include <vector>

#include <homleib/scalar.hpp>

namespace homleib {

using Vec = std::vector<Scalar>;

Vec zero_vec(int n, const Field& f);
bool is_zero_vec(const Vec& v);
void add_scaled(Vec& dst, const Scalar& c, const Vec& src);  // dst += c*src
Vec scaled(const Scalar& c, const Vec& src);
Vec vec_sub(const Vec& a, const Vec& b);

// Dense row-major matrix over an exact field. Elimination is deterministic:
// pivots are the first nonzero entry scanning rows top-down, columns
// left-to-right. No pivot-size heuristics.
class Matrix {
 public:
  Matrix() : Matrix(0, 0, Field::rationals()) {}
  Matrix(int rows, int cols, const Field& f);
  static Matrix identity(int n, const Field& f);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix transpose() const;
  Matrix pow(int k) const;  // square matrices, k >= 0
  Vec apply(const Vec& v) const;
  bool is_zero() const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  // Reduced row echelon form, Gaussian path. Pivot column indices appended to
  // *pivots when non-null.
  Matrix rref(std::vector<int>* pivots = nullptr) const;
  // Fraction-free (Bareiss) forward elimination, then normalization to RREF.
  // Produces output identical to rref(): RREF is canonical and both paths pick
  // the same pivots.
  Matrix rref_fraction_free(std::vector<int>* pivots = nullptr) const;

  int rank() const;
  class Subspace kernel() const;  // canonical basis of {v : Mv = 0}
  class Subspace image() const;   // column space
  // Particular solution of Mx = b with free variables set to zero.
  std::optional<Vec> solve(const Vec& b) const;

 private:
  int rows_, cols_;
  Field field_;
  std::vector<Scalar> e_;
};

// Subspace of K^ambient, stored as RREF rows (the canonical representative).
class Subspace {
 public:
  Subspace(int ambient, const Field& f) : ambient_(ambient), field_(f) {}
  static Subspace from_span(int ambient, const Field& f, const std::vector<Vec>& vecs);

  int ambient_dim() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const Field& field() const { return field_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<int>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v in the RREF basis, or nullopt if v is outside.
  std::optional<Vec> coordinates(const Vec& v) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& o) const;

 private:
  int ambient_;
  Field field_;
  std::vector<Vec> basis_;   // RREF rows, no zero rows
  std::vector<int> pivots_;  // pivot column of each basis row
};

// dim Z - dim B; requires B to be contained in Z.
int quotient_dim(const Subspace& Z, const Subspace& B);

// Kronecker products, first factor most significant: index (i,j) -> i*nb + j.
Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron_power(const Matrix& a, int k);  // k = 0 gives the 1x1 identity
Vec kron_vec(const Vec& a, const Vec& b);

}  // namespace homleib

#endif
