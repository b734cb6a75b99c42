// Dense exact linear algebra: deterministic Gaussian and Bareiss elimination,
// kernel/image/solve, canonical subspaces.

#include <homleib/matrix.hpp>

#include <homleib/errors.hpp>

namespace homleib {

Vec zero_vec(int n, const Field& f) { return Vec(n, Scalar::zero(f)); }

bool is_zero_vec(const Vec& v) {
  for (const Scalar& s : v)
    if (!s.is_zero()) return false;
  return true;
}

void add_scaled(Vec& dst, const Scalar& c, const Vec& src) {
  if (c.is_zero()) return;
  for (size_t i = 0; i < dst.size(); ++i) {
    if (src[i].is_zero()) continue;
    dst[i] += c * src[i];
  }
}

Vec scaled(const Scalar& c, const Vec& src) {
  Vec out(src.size(), Scalar::zero(c.field()));
  add_scaled(out, c, src);
  return out;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec out = a;
  for (size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Matrix::Matrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f),
      e_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {
  if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
}

Matrix Matrix::identity(int n, const Field& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw input_error("matrix product shape mismatch");
  Matrix out(rows_, o.cols_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        out.at(i, j) += a * o.at(k, j);
      }
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix sum shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] += o.e_[i];
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw input_error("matrix diff shape mismatch");
  Matrix out = *this;
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] -= o.e_[i];
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

Matrix Matrix::pow(int k) const {
  if (rows_ != cols_) throw input_error("pow of non-square matrix");
  if (k < 0) throw input_error("negative matrix power");
  Matrix out = identity(rows_, field_);
  for (int i = 0; i < k; ++i) out = out * *this;
  return out;
}

Vec Matrix::apply(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw input_error("matrix apply shape mismatch");
  Vec out = zero_vec(rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      out[i] += at(i, j) * v[j];
    }
  return out;
}

bool Matrix::is_zero() const {
  for (const Scalar& s : e_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_) return false;
  for (size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

Matrix Matrix::rref(std::vector<int>* pivots) const {
  Matrix m = *this;
  std::vector<int> piv;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int sel = -1;
    for (int i = r; i < rows_; ++i)
      if (!m.at(i, c).is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
    Scalar inv = m.at(r, c).inverse();
    for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < rows_; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar factor = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.at(i, j) -= factor * m.at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  if (pivots) *pivots = piv;
  return m;
}

Matrix Matrix::rref_fraction_free(std::vector<int>* pivots) const {
  Matrix m = *this;
  std::vector<int> piv;
  Scalar prev = Scalar::one(field_);
  int r = 0;
  // Bareiss forward sweep: rows below the pivot row stay fraction-free
  // (each division is exact over Z; over a field it is just a rescaling).
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int sel = -1;
    for (int i = r; i < rows_; ++i)
      if (!m.at(i, c).is_zero()) { sel = i; break; }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(r, j));
    const Scalar pivot = m.at(r, c);
    for (int i = r + 1; i < rows_; ++i) {
      const Scalar lead = m.at(i, c);
      for (int j = 0; j < cols_; ++j)
        m.at(i, j) = (pivot * m.at(i, j) - lead * m.at(r, j)) / prev;
    }
    prev = pivot;
    piv.push_back(c);
    ++r;
  }
  // Normalize to the canonical RREF: unit pivots, zeros above.
  for (int k = static_cast<int>(piv.size()) - 1; k >= 0; --k) {
    int c = piv[k];
    Scalar inv = m.at(k, c).inverse();
    for (int j = c; j < cols_; ++j) m.at(k, j) *= inv;
    for (int i = 0; i < k; ++i) {
      if (m.at(i, c).is_zero()) continue;
      Scalar factor = m.at(i, c);
      for (int j = c; j < cols_; ++j) m.at(i, j) -= factor * m.at(k, j);
    }
  }
  if (pivots) *pivots = piv;
  return m;
}

int Matrix::rank() const {
  std::vector<int> piv;
  rref(&piv);
  return static_cast<int>(piv.size());
}

Subspace Matrix::kernel() const {
  std::vector<int> piv;
  Matrix r = rref(&piv);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<Vec> gens;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    Vec v = zero_vec(cols_, field_);
    v[c] = Scalar::one(field_);
    for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -r.at(static_cast<int>(k), c);
    gens.push_back(std::move(v));
  }
  return Subspace::from_span(cols_, field_, gens);
}

Subspace Matrix::image() const {
  std::vector<Vec> cols;
  for (int j = 0; j < cols_; ++j) {
    Vec v = zero_vec(rows_, field_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
    cols.push_back(std::move(v));
  }
  return Subspace::from_span(rows_, field_, cols);
}

std::optional<Vec> Matrix::solve(const Vec& b) const {
  if (static_cast<int>(b.size()) != rows_) throw input_error("solve: rhs length mismatch");
  Matrix aug(rows_, cols_ + 1, field_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<int> piv;
  Matrix r = aug.rref(&piv);
  for (int c : piv)
    if (c == cols_) return std::nullopt;  // pivot in the augmented column
  Vec x = zero_vec(cols_, field_);
  for (size_t k = 0; k < piv.size(); ++k) x[piv[k]] = r.at(static_cast<int>(k), cols_);
  return x;
}

Subspace Subspace::from_span(int ambient, const Field& f, const std::vector<Vec>& vecs) {
  Matrix m(static_cast<int>(vecs.size()), ambient, f);
  for (size_t i = 0; i < vecs.size(); ++i) {
    if (static_cast<int>(vecs[i].size()) != ambient)
      throw input_error("span vector length mismatch");
    for (int j = 0; j < ambient; ++j) m.at(static_cast<int>(i), j) = vecs[i][j];
  }
  std::vector<int> piv;
  Matrix r = m.rref(&piv);
  Subspace s(ambient, f);
  for (size_t k = 0; k < piv.size(); ++k) {
    Vec row = zero_vec(ambient, f);
    for (int j = 0; j < ambient; ++j) row[j] = r.at(static_cast<int>(k), j);
    s.basis_.push_back(std::move(row));
  }
  s.pivots_ = piv;
  return s;
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (static_cast<int>(v.size()) != ambient_) throw input_error("vector length mismatch");
  // RREF basis: the coordinate along row k is just v[pivot_k].
  Vec coords(dim(), Scalar::zero(field_));
  Vec rem = v;
  for (int k = 0; k < dim(); ++k) {
    coords[k] = rem[pivots_[k]];
    add_scaled(rem, -coords[k], basis_[k]);
  }
  if (!is_zero_vec(rem)) return std::nullopt;
  return coords;
}

bool Subspace::contains(const Vec& v) const { return coordinates(v).has_value(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw input_error("ambient dimension mismatch");
  for (const Vec& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw input_error("ambient dimension mismatch");
  // Solve u over this, w over other with u = w: kernel of [A^T | -B^T].
  int da = dim(), db = other.dim();
  Matrix m(ambient_, da + db, field_);
  for (int j = 0; j < da; ++j)
    for (int i = 0; i < ambient_; ++i) m.at(i, j) = basis_[j][i];
  for (int j = 0; j < db; ++j)
    for (int i = 0; i < ambient_; ++i) m.at(i, da + j) = -other.basis_[j][i];
  Subspace ker = m.kernel();
  std::vector<Vec> gens;
  for (const Vec& k : ker.basis()) {
    Vec v = zero_vec(ambient_, field_);
    for (int j = 0; j < da; ++j) add_scaled(v, k[j], basis_[j]);
    gens.push_back(std::move(v));
  }
  return from_span(ambient_, field_, gens);
}

bool Subspace::operator==(const Subspace& o) const {
  return ambient_ == o.ambient_ && field_ == o.field_ && pivots_ == o.pivots_ &&
         basis_ == o.basis_;
}

int quotient_dim(const Subspace& Z, const Subspace& B) {
  if (!Z.contains(B))
    throw precondition_error("quotient_dim: B is not contained in Z");
  return Z.dim() - B.dim();
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (int ia = 0; ia < a.rows(); ++ia)
    for (int ja = 0; ja < a.cols(); ++ja) {
      const Scalar& s = a.at(ia, ja);
      if (s.is_zero()) continue;
      for (int ib = 0; ib < b.rows(); ++ib)
        for (int jb = 0; jb < b.cols(); ++jb) {
          if (b.at(ib, jb).is_zero()) continue;
          out.at(ia * b.rows() + ib, ja * b.cols() + jb) = s * b.at(ib, jb);
        }
    }
  return out;
}

Matrix kron_power(const Matrix& a, int k) {
  Matrix out = Matrix::identity(1, a.field());
  for (int i = 0; i < k; ++i) out = kron(out, a);
  return out;
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Field f = a.empty() ? (b.empty() ? Field::rationals() : b[0].field()) : a[0].field();
  Vec out(a.size() * b.size(), Scalar::zero(f));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  }
  return out;
}

}  // namespace homleib
