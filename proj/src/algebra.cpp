#include <homleib/algebra.hpp>

#include <string>

#include <homleib/errors.hpp>

namespace homleib {

std::int64_t power_i64(int base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > (1LL << 40)) throw input_error("index space too large");
    out *= base;
  }
  return out;
}

std::int64_t tuple_rank(const std::vector<int>& t, int base) {
  std::int64_t r = 0;
  for (int d : t) r = r * base + d;
  return r;
}

std::vector<int> tuple_unrank(std::int64_t r, int digits, int base) {
  std::vector<int> t(digits);
  for (int i = digits - 1; i >= 0; --i) {
    t[i] = static_cast<int>(r % base);
    r /= base;
  }
  return t;
}

Vec basis_vec(int n, int i, const Field& f) {
  Vec v = zero_vec(n, f);
  v[i] = Scalar::one(f);
  return v;
}

Algebra::Algebra(int dim, int arity, const Field& f) : dim_(dim), arity_(arity), field_(f) {
  if (dim < 1) throw input_error("algebra dimension must be at least 1");
  if (arity < 2) throw input_error("bracket arity must be at least 2");
  bracket_.assign(power_i64(dim, arity), zero_vec(dim, f));
  twists_.assign(arity - 1, Matrix::identity(dim, f));
}

Scalar& Algebra::coeff(const std::vector<int>& tuple, int target) {
  return bracket_[tuple_rank(tuple, dim_)][target];
}

const Scalar& Algebra::coeff(const std::vector<int>& tuple, int target) const {
  return bracket_[tuple_rank(tuple, dim_)][target];
}

Vec Algebra::bracket(const std::vector<Vec>& args) const {
  if (static_cast<int>(args.size()) != arity_) throw input_error("bracket arity mismatch");
  std::vector<std::vector<int>> sup(arity_);
  for (int k = 0; k < arity_; ++k) {
    if (static_cast<int>(args[k].size()) != dim_) throw input_error("bracket argument length");
    for (int i = 0; i < dim_; ++i)
      if (!args[k][i].is_zero()) sup[k].push_back(i);
    if (sup[k].empty()) return zero_vec(dim_, field_);
  }
  Vec out = zero_vec(dim_, field_);
  std::vector<size_t> pos(arity_, 0);
  while (true) {
    Scalar c = Scalar::one(field_);
    std::int64_t t = 0;
    for (int k = 0; k < arity_; ++k) {
      int idx = sup[k][pos[k]];
      c *= args[k][idx];
      t = t * dim_ + idx;
    }
    add_scaled(out, c, bracket_[t]);
    int k = arity_ - 1;
    while (k >= 0 && ++pos[k] == sup[k].size()) pos[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

void Algebra::set_twist(int k, const Matrix& m) {
  if (m.rows() != dim_ || m.cols() != dim_ || m.field() != field_)
    throw input_error("twist shape mismatch");
  twists_[k] = m;
}

void Algebra::set_uniform_twist(const Matrix& m) {
  for (int k = 0; k + 1 < arity_; ++k) set_twist(k, m);
}

bool Algebra::uniform_twist() const {
  for (size_t k = 1; k < twists_.size(); ++k)
    if (twists_[k] != twists_[0]) return false;
  return true;
}

const Matrix& Algebra::alpha() const {
  if (!uniform_twist()) throw precondition_error("twist maps are not uniform");
  return twists_[0];
}

Vec Algebra::twist_col(int k, int j) const {
  Vec v = zero_vec(dim_, field_);
  for (int i = 0; i < dim_; ++i) v[i] = twists_[k].at(i, j);
  return v;
}

bool Algebra::operator==(const Algebra& o) const {
  return same_shape(o) && bracket_ == o.bracket_ && twists_ == o.twists_;
}

IdentityReport check_n_hom_leibniz(const Algebra& a) {
  const int n = a.arity();
  const int d = a.dim();
  const std::int64_t total = power_i64(d, 2 * n - 1);
  for (std::int64_t r = 0; r < total; ++r) {
    std::vector<int> t = tuple_unrank(r, 2 * n - 1, d);
    std::vector<int> x(t.begin(), t.begin() + n);
    std::vector<int> y(t.begin() + n, t.end());

    std::vector<Vec> lhs_args;
    lhs_args.push_back(a.bracket_basis(tuple_rank(x, d)));
    for (int k = 0; k < n - 1; ++k) lhs_args.push_back(a.twist_col(k, y[k]));
    Vec lhs = a.bracket(lhs_args);

    Vec rhs = zero_vec(d, a.field());
    for (int i = 0; i < n; ++i) {
      std::vector<int> inner = {x[i]};
      inner.insert(inner.end(), y.begin(), y.end());
      std::vector<Vec> args;
      for (int j = 0; j < n; ++j) {
        if (j < i)
          args.push_back(a.twist_col(j, x[j]));  // alpha_{j+1}(x_{j+1}), 1-based alpha_j(x_j)
        else if (j == i)
          args.push_back(a.bracket_basis(tuple_rank(inner, d)));
        else
          args.push_back(a.twist_col(j - 1, x[j]));
      }
      Vec term = a.bracket(args);
      for (int c = 0; c < d; ++c) rhs[c] += term[c];
    }
    if (lhs != rhs) return {false, t};
  }
  return {true, {}};
}

bool is_bracket_morphism(const Algebra& a, const Matrix& m, std::vector<int>* witness) {
  const int n = a.arity();
  const int d = a.dim();
  const std::int64_t total = power_i64(d, n);
  for (std::int64_t r = 0; r < total; ++r) {
    std::vector<int> t = tuple_unrank(r, n, d);
    Vec lhs = m.apply(a.bracket_basis(r));
    std::vector<Vec> args;
    for (int k = 0; k < n; ++k) {
      Vec col = zero_vec(d, a.field());
      for (int i = 0; i < d; ++i) col[i] = m.at(i, t[k]);
      args.push_back(std::move(col));
    }
    if (lhs != a.bracket(args)) {
      if (witness) *witness = t;
      return false;
    }
  }
  return true;
}

bool check_multiplicative(const Algebra& a) {
  return is_bracket_morphism(a, a.alpha());
}

bool is_algebra_morphism(const Algebra& from, const Algebra& to, const Matrix& m,
                         std::vector<int>* witness) {
  if (from.arity() != to.arity() || from.field() != to.field())
    throw input_error("is_algebra_morphism: incompatible algebras");
  if (m.rows() != to.dim() || m.cols() != from.dim())
    throw input_error("is_algebra_morphism: map has the wrong shape");
  if (witness) witness->clear();
  const int n = from.arity();
  for (int k = 0; k < n - 1; ++k)
    if (m * from.twist(k) != to.twist(k) * m) return false;
  const std::int64_t total = power_i64(from.dim(), n);
  for (std::int64_t r = 0; r < total; ++r) {
    std::vector<int> t = tuple_unrank(r, n, from.dim());
    Vec lhs = m.apply(from.bracket_basis(r));
    std::vector<Vec> args;
    for (int k = 0; k < n; ++k) {
      Vec col = zero_vec(to.dim(), to.field());
      for (int i = 0; i < to.dim(); ++i) col[i] = m.at(i, t[k]);
      args.push_back(std::move(col));
    }
    if (lhs != to.bracket(args)) {
      if (witness) *witness = t;
      return false;
    }
  }
  return true;
}

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i] + 1);
  }
  return s + ")";
}

}  // namespace

Algebra yau_twist(const Algebra& a, const Matrix& alpha) {
  for (int k = 0; k + 1 < a.arity(); ++k)
    if (a.twist(k) != Matrix::identity(a.dim(), a.field()))
      throw precondition_error("yau_twist requires an untwisted algebra");
  IdentityReport rep = check_n_hom_leibniz(a);
  if (!rep.holds)
    throw precondition_error("yau_twist: the defining identity fails at basis tuple " +
                             tuple_str(rep.witness));
  std::vector<int> w;
  if (!is_bracket_morphism(a, alpha, &w))
    throw precondition_error("yau_twist: the map is not an algebra morphism; fails at basis tuple " +
                             tuple_str(w));
  Algebra out(a.dim(), a.arity(), a.field());
  for (std::int64_t t = 0; t < a.tuple_count(); ++t)
    out.bracket_basis(t) = alpha.apply(a.bracket_basis(t));
  out.set_uniform_twist(alpha);
  if (!check_n_hom_leibniz(out).holds)
    throw std::logic_error("yau_twist: twisted algebra failed the identity scan");
  return out;
}

Algebra d_n_minus_one(const Algebra& a) {
  if (!a.uniform_twist())
    throw precondition_error("tensor construction requires a uniform twist");
  if (!check_multiplicative(a))
    throw precondition_error("tensor construction requires a multiplicative twist");
  const int n = a.arity();
  const int d = a.dim();
  const Matrix& al = a.alpha();
  const int D = static_cast<int>(power_i64(d, n - 1));
  Algebra out(D, 2, a.field());
  out.set_uniform_twist(kron_power(al, n - 1));
  for (int A = 0; A < D; ++A) {
    std::vector<int> at = tuple_unrank(A, n - 1, d);
    for (int B = 0; B < D; ++B) {
      std::vector<int> bt = tuple_unrank(B, n - 1, d);
      Vec acc = zero_vec(D, a.field());
      for (int i = 0; i < n - 1; ++i) {
        std::vector<int> inner = {at[i]};
        inner.insert(inner.end(), bt.begin(), bt.end());
        Vec term(1, Scalar::one(a.field()));
        for (int j = 0; j < n - 1; ++j) {
          Vec factor = (j == i) ? a.bracket_basis(tuple_rank(inner, d)) : al.apply(basis_vec(d, at[j], a.field()));
          term = kron_vec(term, factor);
        }
        for (int c = 0; c < D; ++c) acc[c] += term[c];
      }
      out.bracket_basis(static_cast<std::int64_t>(A) * D + B) = acc;
    }
  }
  return out;
}

}  // namespace homleib
