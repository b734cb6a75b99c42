#include <homleib/representation.hpp>

#include <homleib/errors.hpp>

namespace homleib {

Representation::Representation(int algebra_dim, int arity, int module_dim, const Field& f)
    : alg_dim_(algebra_dim), arity_(arity), mod_dim_(module_dim), field_(f),
      alpha_m_(Matrix::identity(module_dim, f)) {
  if (algebra_dim < 1 || module_dim < 1) throw input_error("dimensions must be at least 1");
  if (arity < 2) throw input_error("arity must be at least 2");
  std::int64_t l_count = power_i64(alg_dim_, arity_ - 1);
  actions_.assign(arity_, std::vector<Vec>(l_count * mod_dim_, zero_vec(mod_dim_, f)));
}

void Representation::set_alpha_m(const Matrix& m) {
  if (m.rows() != mod_dim_ || m.cols() != mod_dim_ || m.field() != field_)
    throw input_error("alpha_m shape mismatch");
  alpha_m_ = m;
}

Scalar& Representation::action_coeff(int k, const std::vector<int>& l_idx, int m_idx,
                                     int target) {
  return actions_[k][tuple_rank(l_idx, alg_dim_) * mod_dim_ + m_idx][target];
}

const Vec& Representation::action_basis(int k, std::int64_t l_rank, int m_idx) const {
  return actions_[k][l_rank * mod_dim_ + m_idx];
}

Vec& Representation::action_basis(int k, std::int64_t l_rank, int m_idx) {
  return actions_[k][l_rank * mod_dim_ + m_idx];
}

Vec Representation::action(int k, const std::vector<Vec>& l_args, const Vec& m_arg) const {
  if (static_cast<int>(l_args.size()) != arity_ - 1)
    throw input_error("action expects arity-1 algebra arguments");
  if (static_cast<int>(m_arg.size()) != mod_dim_) throw input_error("module argument length");
  std::vector<std::vector<int>> sup(arity_ - 1);
  for (int j = 0; j + 1 < arity_; ++j) {
    if (static_cast<int>(l_args[j].size()) != alg_dim_)
      throw input_error("algebra argument length");
    for (int i = 0; i < alg_dim_; ++i)
      if (!l_args[j][i].is_zero()) sup[j].push_back(i);
    if (sup[j].empty()) return zero_vec(mod_dim_, field_);
  }
  Vec out = zero_vec(mod_dim_, field_);
  std::vector<size_t> pos(arity_ - 1, 0);
  while (true) {
    Scalar c = Scalar::one(field_);
    std::int64_t lr = 0;
    for (int j = 0; j + 1 < arity_; ++j) {
      int idx = sup[j][pos[j]];
      c *= l_args[j][idx];
      lr = lr * alg_dim_ + idx;
    }
    for (int m = 0; m < mod_dim_; ++m) {
      if (m_arg[m].is_zero()) continue;
      add_scaled(out, c * m_arg[m], actions_[k][lr * mod_dim_ + m]);
    }
    int j = arity_ - 2;
    while (j >= 0 && ++pos[j] == sup[j].size()) pos[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

namespace {

Vec alpha_col(const Algebra& a, int j) { return a.twist_col(0, j); }

Vec alpha_m_col(const Representation& r, int m) {
  Vec v = zero_vec(r.module_dim(), r.field());
  for (int i = 0; i < r.module_dim(); ++i) v[i] = r.alpha_m().at(i, m);
  return v;
}

void require_shapes(const Algebra& a, const Representation& r) {
  if (a.dim() != r.algebra_dim() || a.arity() != r.arity() || a.field() != r.field())
    throw input_error("representation does not match the algebra's shape");
}

}  // namespace

Vec relation_residual(const Algebra& a, const Representation& r, int relation,
                      const std::vector<int>& assign) {
  require_shapes(a, r);
  const int n = a.arity();
  const int d = a.dim();
  const Field& f = a.field();

  if (relation < 0 || relation > 3 * n - 2) throw input_error("relation id out of range");
  if (static_cast<int>(assign.size()) != (relation < 2 * n - 1 ? 2 * n - 1 : n))
    throw input_error("relation assignment length mismatch");

  if (relation >= 2 * n - 1) {
    // equivariance of action k on (l_1..l_{n-1}, m)
    int k = relation - (2 * n - 1);
    std::vector<Vec> tw, plain;
    for (int j = 0; j + 1 < n; ++j) {
      tw.push_back(alpha_col(a, assign[j]));
      plain.push_back(basis_vec(d, assign[j], f));
    }
    Vec m = basis_vec(r.module_dim(), assign[n - 1], f);
    Vec lhs = r.action(k, tw, alpha_m_col(r, assign[n - 1]));
    return vec_sub(lhs, r.alpha_m().apply(r.action(k, plain, m)));
  }

  std::vector<int> x(assign.begin(), assign.begin() + n);
  std::vector<int> y(assign.begin() + n, assign.end());

  if (relation < n) {
    // x_{t+1} in M, 0-based slot t
    const int t = relation;
    const int mi = x[t];
    Vec mbasis = basis_vec(r.module_dim(), mi, f);

    std::vector<Vec> inner_l;
    for (int j = 0; j < n; ++j)
      if (j != t) inner_l.push_back(basis_vec(d, x[j], f));
    Vec inner = r.action(t, inner_l, mbasis);
    std::vector<Vec> outer_l;
    for (int k = 0; k + 1 < n; ++k) outer_l.push_back(alpha_col(a, y[k]));
    Vec lhs = r.action(0, outer_l, inner);

    Vec rhs = zero_vec(r.module_dim(), f);
    for (int i = 0; i < n; ++i) {
      Vec term;
      if (i == t) {
        std::vector<Vec> ybasis;
        for (int k = 0; k + 1 < n; ++k) ybasis.push_back(basis_vec(d, y[k], f));
        Vec inner0 = r.action(0, ybasis, mbasis);
        std::vector<Vec> largs;
        for (int j = 0; j < n; ++j)
          if (j != t) largs.push_back(alpha_col(a, x[j]));
        term = r.action(t, largs, inner0);
      } else {
        std::vector<int> itup = {x[i]};
        itup.insert(itup.end(), y.begin(), y.end());
        Vec innerL = a.bracket_basis(tuple_rank(itup, d));
        std::vector<Vec> largs;
        for (int j = 0; j < n; ++j) {
          if (j == t) continue;
          largs.push_back(j == i ? innerL : alpha_col(a, x[j]));
        }
        term = r.action(t, largs, alpha_m_col(r, mi));
      }
      for (int c = 0; c < r.module_dim(); ++c) rhs[c] += term[c];
    }
    return vec_sub(lhs, rhs);
  }

  // y_{t+1} in M, 0-based slot t within the y block
  const int t = relation - n;
  const int mi = y[t];
  Vec mbasis = basis_vec(r.module_dim(), mi, f);

  std::vector<Vec> outer_l;
  outer_l.push_back(a.bracket_basis(tuple_rank(x, d)));
  for (int k = 0; k + 1 < n; ++k)
    if (k != t) outer_l.push_back(alpha_col(a, y[k]));
  Vec lhs = r.action(t + 1, outer_l, alpha_m_col(r, mi));

  Vec rhs = zero_vec(r.module_dim(), f);
  for (int i = 0; i < n; ++i) {
    std::vector<Vec> inner_l;
    inner_l.push_back(basis_vec(d, x[i], f));
    for (int k = 0; k + 1 < n; ++k)
      if (k != t) inner_l.push_back(basis_vec(d, y[k], f));
    Vec inner = r.action(t + 1, inner_l, mbasis);
    std::vector<Vec> largs;
    for (int j = 0; j < n; ++j)
      if (j != i) largs.push_back(alpha_col(a, x[j]));
    Vec term = r.action(i, largs, inner);
    for (int c = 0; c < r.module_dim(); ++c) rhs[c] += term[c];
  }
  return vec_sub(lhs, rhs);
}

RepReport check_representation(const Algebra& a, const Representation& r) {
  require_shapes(a, r);
  if (!a.uniform_twist() || !check_multiplicative(a))
    throw precondition_error("representations require a uniform multiplicative twist");
  const int n = a.arity();
  const int d = a.dim();
  const int m = r.module_dim();

  for (int rel = 0; rel < 2 * n - 1; ++rel) {
    // the typed slot (assign position == relation id) ranges over M's basis
    const int mslot = rel;
    std::int64_t total = power_i64(d, 2 * n - 2) * m;
    for (std::int64_t c = 0; c < total; ++c) {
      std::int64_t rest = c;
      std::vector<int> assign(2 * n - 1);
      for (int pos = 2 * n - 2; pos >= 0; --pos) {
        int base = pos == mslot ? m : d;
        assign[pos] = static_cast<int>(rest % base);
        rest /= base;
      }
      if (!is_zero_vec(relation_residual(a, r, rel, assign))) return {false, rel, assign};
    }
  }
  for (int k = 0; k < n; ++k) {
    std::int64_t total = power_i64(d, n - 1) * m;
    for (std::int64_t c = 0; c < total; ++c) {
      std::vector<int> assign = tuple_unrank(c / m, n - 1, d);
      assign.push_back(static_cast<int>(c % m));
      if (!is_zero_vec(relation_residual(a, r, 2 * n - 1 + k, assign)))
        return {false, 2 * n - 1 + k, assign};
    }
  }
  return {true, -1, {}};
}

Representation adjoint_representation(const Algebra& a) {
  if (!a.uniform_twist() || !check_multiplicative(a))
    throw precondition_error("adjoint representation requires a uniform multiplicative twist");
  if (!check_n_hom_leibniz(a).holds)
    throw precondition_error("adjoint representation requires a valid algebra");
  const int n = a.arity();
  const int d = a.dim();
  Representation r(d, n, d, a.field());
  r.set_alpha_m(a.alpha());
  for (int k = 0; k < n; ++k) {
    std::int64_t l_count = power_i64(d, n - 1);
    for (std::int64_t lr = 0; lr < l_count; ++lr) {
      std::vector<int> l_idx = tuple_unrank(lr, n - 1, d);
      for (int mi = 0; mi < d; ++mi) {
        std::vector<int> tup(l_idx.begin(), l_idx.begin() + k);
        tup.push_back(mi);
        tup.insert(tup.end(), l_idx.begin() + k, l_idx.end());
        r.action_basis(k, lr, mi) = a.bracket_basis(tuple_rank(tup, d));
      }
    }
  }
  return r;
}

Representation trivial_representation(const Algebra& a, const Matrix& alpha_m) {
  Representation r(a.dim(), a.arity(), alpha_m.rows(), a.field());
  r.set_alpha_m(alpha_m);
  return r;
}

}  // namespace homleib
