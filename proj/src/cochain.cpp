#include <homleib/cochain.hpp>

#include <stdexcept>

#include <homleib/errors.hpp>

namespace homleib {

namespace {

Scalar sign_pow(const Field& f, int e) {
  return (e & 1) ? Scalar::from_int(f, -1) : Scalar::one(f);
}

void require_match(const CochainContext& c, const Cochain& f, const char* who) {
  if (f.alg_dim() != c.algebra.dim() || f.arity() != c.algebra.arity() ||
      f.mod_dim() != c.rep.module_dim() || !(f.field() == c.algebra.field()))
    throw input_error(std::string(who) + ": cochain shape does not match the complex");
}

Vec matrix_col(const Matrix& m, int j) {
  Vec v = zero_vec(m.rows(), m.field());
  for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

// arg rank -> (z, block ranks)
int split_arg(std::int64_t arg, std::int64_t D, int blocks, std::vector<std::int64_t>& out) {
  out.assign(blocks, 0);
  for (int k = blocks - 1; k >= 0; --k) {
    out[k] = arg % D;
    arg /= D;
  }
  return static_cast<int>(arg);
}

}  // namespace

Cochain::Cochain(int alg_dim, int arity, int mod_dim, const Field& f, int degree)
    : alg_dim_(alg_dim), arity_(arity), mod_dim_(mod_dim), degree_(degree), field_(f) {
  if (alg_dim < 1 || mod_dim < 1) throw input_error("cochain dimensions must be at least 1");
  if (arity < 2) throw input_error("cochain arity must be at least 2");
  if (degree < 1) throw input_error("cochain degree must be at least 1");
  coeffs_.assign(power_i64(alg_dim, 1 + (arity - 1) * (degree - 1)), zero_vec(mod_dim, f));
}

std::int64_t Cochain::block_count() const { return power_i64(alg_dim_, arity_ - 1); }

std::int64_t Cochain::arg_rank(int z, const std::vector<std::int64_t>& blocks) const {
  if (static_cast<int>(blocks.size()) != degree_ - 1)
    throw input_error("cochain argument count mismatch");
  const std::int64_t D = block_count();
  std::int64_t r = z;
  for (std::int64_t b : blocks) r = r * D + b;
  return r;
}

Vec Cochain::eval(const Vec& z, const std::vector<Vec>& blocks) const {
  const std::int64_t D = block_count();
  if (static_cast<int>(z.size()) != alg_dim_ ||
      static_cast<int>(blocks.size()) != degree_ - 1)
    throw input_error("cochain argument shape mismatch");
  for (const Vec& b : blocks)
    if (static_cast<std::int64_t>(b.size()) != D)
      throw input_error("cochain block length mismatch");

  Vec out = zero_vec(mod_dim_, field_);
  std::vector<std::int64_t> sup0;
  for (int i = 0; i < alg_dim_; ++i)
    if (!z[i].is_zero()) sup0.push_back(i);
  if (sup0.empty()) return out;
  std::vector<std::vector<std::int64_t>> sup(blocks.size());
  for (size_t k = 0; k < blocks.size(); ++k) {
    for (std::int64_t b = 0; b < D; ++b)
      if (!blocks[k][b].is_zero()) sup[k].push_back(b);
    if (sup[k].empty()) return out;
  }

  std::vector<size_t> pos(1 + blocks.size(), 0);
  while (true) {
    Scalar c = z[sup0[pos[0]]];
    std::int64_t arg = sup0[pos[0]];
    for (size_t k = 0; k < blocks.size(); ++k) {
      std::int64_t b = sup[k][pos[k + 1]];
      c *= blocks[k][b];
      arg = arg * D + b;
    }
    add_scaled(out, c, coeffs_[arg]);
    int k = static_cast<int>(pos.size()) - 1;
    while (k >= 0) {
      size_t limit = k == 0 ? sup0.size() : sup[k - 1].size();
      if (++pos[k] < limit) break;
      pos[k--] = 0;
    }
    if (k < 0) break;
  }
  return out;
}

Vec Cochain::flatten() const {
  Vec out = zero_vec(static_cast<int>(arg_count()) * mod_dim_, field_);
  for (std::int64_t a = 0; a < arg_count(); ++a)
    for (int t = 0; t < mod_dim_; ++t) out[a * mod_dim_ + t] = coeffs_[a][t];
  return out;
}

Cochain Cochain::from_flat(int alg_dim, int arity, int mod_dim, const Field& f, int degree,
                           const Vec& flat) {
  Cochain out(alg_dim, arity, mod_dim, f, degree);
  if (static_cast<std::int64_t>(flat.size()) != out.arg_count() * mod_dim)
    throw input_error("cochain coefficient vector has the wrong length");
  for (std::int64_t a = 0; a < out.arg_count(); ++a)
    for (int t = 0; t < mod_dim; ++t) out.coeffs_[a][t] = flat[a * mod_dim + t];
  return out;
}

bool Cochain::same_shape(const Cochain& o) const {
  return alg_dim_ == o.alg_dim_ && arity_ == o.arity_ && mod_dim_ == o.mod_dim_ &&
         degree_ == o.degree_ && field_ == o.field_;
}

bool Cochain::operator==(const Cochain& o) const {
  return same_shape(o) && coeffs_ == o.coeffs_;
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  if (!a.same_shape(b)) throw input_error("cochain shape mismatch");
  Cochain out = a;
  for (std::int64_t r = 0; r < out.arg_count(); ++r)
    add_scaled(out.value(r), Scalar::one(a.field()), b.value(r));
  return out;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  if (!a.same_shape(b)) throw input_error("cochain shape mismatch");
  Cochain out = a;
  for (std::int64_t r = 0; r < out.arg_count(); ++r)
    add_scaled(out.value(r), Scalar::from_int(a.field(), -1), b.value(r));
  return out;
}

Cochain scaled(const Scalar& c, const Cochain& f) {
  Cochain out = f;
  for (std::int64_t r = 0; r < out.arg_count(); ++r) out.value(r) = scaled(c, f.value(r));
  return out;
}

CochainContext::CochainContext(const Algebra& a, const Representation& r)
    : algebra(a), rep(r), blocks(a) {
  if (r.algebra_dim() != a.dim() || r.arity() != a.arity() || !(r.field() == a.field()))
    throw input_error("cochain complex: representation does not match the algebra");
  if (!a.uniform_twist() || !check_multiplicative(a))
    throw precondition_error("cochain complex requires a uniform multiplicative twist");
  if (!check_n_hom_leibniz(a).holds)
    throw precondition_error("cochain complex requires a valid algebra");
  if (!check_representation(a, r).holds)
    throw precondition_error("cochain complex requires a valid representation");
  blocks = d_n_minus_one(algebra);
}

bool is_compatible(const CochainContext& c, const Cochain& f) {
  require_match(c, f, "compatibility");
  const std::int64_t D = f.block_count();
  std::vector<std::int64_t> bl;
  for (std::int64_t a = 0; a < f.arg_count(); ++a) {
    int z = split_arg(a, D, f.degree() - 1, bl);
    Vec lhs = c.rep.alpha_m().apply(f.value(a));
    std::vector<Vec> blocks;
    blocks.reserve(bl.size());
    for (std::int64_t b : bl) blocks.push_back(c.blocks.twist_col(0, static_cast<int>(b)));
    Vec rhs = f.eval(c.algebra.twist_col(0, z), blocks);
    if (lhs != rhs) return false;
  }
  return true;
}

Subspace compatible_subspace(const CochainContext& c, int degree) {
  if (degree < 1) throw input_error("cochain degree must be at least 1");
  const int m = c.rep.module_dim();
  const std::int64_t A =
      power_i64(c.algebra.dim(), 1 + (c.algebra.arity() - 1) * (degree - 1));
  const Field& fld = c.algebra.field();
  Matrix T = kron(c.algebra.alpha(), kron_power(c.blocks.alpha(), degree - 1));
  const int N = static_cast<int>(A) * m;
  Matrix con(N, N, fld);
  for (std::int64_t a = 0; a < A; ++a)
    for (int t = 0; t < m; ++t) {
      const int row = static_cast<int>(a) * m + t;
      for (int j = 0; j < m; ++j) {
        const Scalar& e = c.rep.alpha_m().at(t, j);
        if (!e.is_zero()) con.at(row, static_cast<int>(a) * m + j) += e;
      }
      for (std::int64_t a2 = 0; a2 < A; ++a2) {
        const Scalar& e = T.at(static_cast<int>(a2), static_cast<int>(a));
        if (!e.is_zero()) con.at(row, static_cast<int>(a2) * m + t) -= e;
      }
    }
  return con.kernel();
}

Cochain coboundary(const CochainContext& c, const Cochain& f) {
  require_match(c, f, "coboundary");
  if (!is_compatible(c, f))
    throw precondition_error("coboundary requires a compatible cochain");
  const int p = f.degree();
  const int n = c.algebra.arity();
  const int d = c.algebra.dim();
  const int m = c.rep.module_dim();
  const std::int64_t D = f.block_count();
  const Field& fld = c.algebra.field();

  Matrix apow = c.algebra.alpha().pow(p - 1);
  std::vector<Vec> apow_col(d), alpha_col(d), abar_col(D);
  for (int z = 0; z < d; ++z) {
    apow_col[z] = matrix_col(apow, z);
    alpha_col[z] = c.algebra.twist_col(0, z);
  }
  for (std::int64_t b = 0; b < D; ++b)
    abar_col[b] = c.blocks.twist_col(0, static_cast<int>(b));

  Cochain out(d, n, m, fld, p + 1);
  std::vector<std::int64_t> X;
  for (std::int64_t oa = 0; oa < out.arg_count(); ++oa) {
    int z = split_arg(oa, D, p, X);
    std::vector<std::vector<int>> xd(p);
    for (int i = 0; i < p; ++i) xd[i] = tuple_unrank(X[i], n - 1, d);
    Vec val = zero_vec(m, fld);

    // blocks bracketed into each other, one spectator dropped
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j) {
        std::vector<Vec> blks;
        blks.reserve(p - 1);
        for (int k = 0; k < p; ++k) {
          if (k == j) continue;
          if (k == i)
            blks.push_back(c.blocks.bracket_basis(X[i] * D + X[j]));
          else
            blks.push_back(abar_col[X[k]]);
        }
        add_scaled(val, sign_pow(fld, j + 1), f.eval(alpha_col[z], blks));
      }

    // each block bracketed into the leading argument
    for (int i = 0; i < p; ++i) {
      std::vector<int> tup;
      tup.reserve(n);
      tup.push_back(z);
      tup.insert(tup.end(), xd[i].begin(), xd[i].end());
      std::vector<Vec> blks;
      blks.reserve(p - 1);
      for (int k = 0; k < p; ++k)
        if (k != i) blks.push_back(abar_col[X[k]]);
      add_scaled(val, sign_pow(fld, i + 1),
                 f.eval(c.algebra.bracket_basis(tuple_rank(tup, d)), blks));
    }

    // value of f acted on from the right by each dropped block
    for (int i = 0; i < p; ++i) {
      std::int64_t r = z;
      for (int k = 0; k < p; ++k)
        if (k != i) r = r * D + X[k];
      std::vector<Vec> l_args;
      l_args.reserve(n - 1);
      for (int s = 0; s < n - 1; ++s) l_args.push_back(apow_col[xd[i][s]]);
      add_scaled(val, sign_pow(fld, i), c.rep.action(0, l_args, f.value(r)));
    }

    // value of f on each factor of the first block, acted on in its slot
    for (int s = 1; s <= n - 1; ++s) {
      std::int64_t r = xd[0][s - 1];
      for (int k = 1; k < p; ++k) r = r * D + X[k];
      std::vector<Vec> l_args;
      l_args.reserve(n - 1);
      l_args.push_back(apow_col[z]);
      for (int k = 0; k < n - 1; ++k)
        if (k != s - 1) l_args.push_back(apow_col[xd[0][k]]);
      add_scaled(val, Scalar::one(fld), c.rep.action(s, l_args, f.value(r)));
    }

    out.value(oa) = val;
  }
  if (!is_compatible(c, out))
    throw std::logic_error("coboundary output failed the compatibility check");
  return out;
}

Matrix coboundary_matrix(const CochainContext& c, int degree, const Subspace& dom,
                         const Subspace& cod) {
  const Field& fld = c.algebra.field();
  Matrix out(cod.dim(), dom.dim(), fld);
  for (int j = 0; j < dom.dim(); ++j) {
    Cochain f = Cochain::from_flat(c.algebra.dim(), c.algebra.arity(), c.rep.module_dim(),
                                   fld, degree, dom.basis()[j]);
    std::optional<Vec> coords = cod.coordinates(coboundary(c, f).flatten());
    if (!coords) throw std::logic_error("coboundary left the compatible subspace");
    for (int i = 0; i < cod.dim(); ++i) out.at(i, j) = (*coords)[i];
  }
  return out;
}

Matrix coboundary_matrix(const CochainContext& c, int degree) {
  return coboundary_matrix(c, degree, compatible_subspace(c, degree),
                           compatible_subspace(c, degree + 1));
}

CohomologyReport cohomology(const CochainContext& c, int degree) {
  if (degree < 1) throw input_error("cohomology degree must be at least 1");
  const Field& fld = c.algebra.field();
  Subspace comp = compatible_subspace(c, degree);
  Subspace comp_next = compatible_subspace(c, degree + 1);
  Matrix dp = coboundary_matrix(c, degree, comp, comp_next);
  Subspace Z = dp.kernel();
  Subspace B(comp.dim(), fld);
  if (degree > 1) {
    Subspace comp_prev = compatible_subspace(c, degree - 1);
    B = coboundary_matrix(c, degree - 1, comp_prev, comp).image();
  }
  CohomologyReport rep;
  rep.degree = degree;
  rep.dim_cochains = comp.dim();
  rep.dim_cocycles = Z.dim();
  rep.dim_coboundaries = B.dim();
  rep.dim_h = quotient_dim(Z, B);
  Subspace span = B;
  for (const Vec& zrow : Z.basis()) {
    if (span.contains(zrow)) continue;
    std::vector<Vec> next = span.basis();
    next.push_back(zrow);
    span = Subspace::from_span(comp.dim(), fld, next);
    Vec full = zero_vec(comp.ambient_dim(), fld);
    for (int k = 0; k < comp.dim(); ++k) add_scaled(full, zrow[k], comp.basis()[k]);
    rep.representatives.push_back(Cochain::from_flat(
        c.algebra.dim(), c.algebra.arity(), c.rep.module_dim(), fld, degree, full));
  }
  if (static_cast<int>(rep.representatives.size()) != rep.dim_h)
    throw std::logic_error("cohomology representative extraction mismatch");
  return rep;
}

Subspace derivation_space(const CochainContext& c) {
  const int n = c.algebra.arity();
  const int d = c.algebra.dim();
  const int m = c.rep.module_dim();
  const Field& fld = c.algebra.field();
  const std::int64_t tuples = c.algebra.tuple_count();
  const int cols = d * m;
  Matrix sys(static_cast<int>(tuples) * m + cols, cols, fld);
  for (std::int64_t r = 0; r < tuples; ++r) {
    std::vector<int> x = tuple_unrank(r, n, d);
    const Vec& brk = c.algebra.bracket_basis(r);
    for (int t = 0; t < m; ++t) {
      const int row = static_cast<int>(r) * m + t;
      for (int z = 0; z < d; ++z)
        if (!brk[z].is_zero()) sys.at(row, z * m + t) += brk[z];
      for (int i = 0; i < n; ++i) {
        std::vector<int> l;
        l.reserve(n - 1);
        for (int k = 0; k < n; ++k)
          if (k != i) l.push_back(x[k]);
        const std::int64_t lr = tuple_rank(l, d);
        for (int j = 0; j < m; ++j) {
          const Scalar& e = c.rep.action_basis(i, lr, j)[t];
          if (!e.is_zero()) sys.at(row, x[i] * m + j) -= e;
        }
      }
    }
  }
  const int base = static_cast<int>(tuples) * m;
  for (int z = 0; z < d; ++z)
    for (int t = 0; t < m; ++t) {
      const int row = base + z * m + t;
      for (int j = 0; j < m; ++j) {
        const Scalar& e = c.rep.alpha_m().at(t, j);
        if (!e.is_zero()) sys.at(row, z * m + j) += e;
      }
      for (int z2 = 0; z2 < d; ++z2) {
        const Scalar& e = c.algebra.alpha().at(z2, z);
        if (!e.is_zero()) sys.at(row, z2 * m + t) -= e;
      }
    }
  return sys.kernel();
}

Matrix AbelianExtension::inclusion() const {
  Matrix out(module_dim + algebra_dim, module_dim, total.field());
  for (int i = 0; i < module_dim; ++i) out.at(i, i) = Scalar::one(total.field());
  return out;
}

Matrix AbelianExtension::projection() const {
  Matrix out(algebra_dim, module_dim + algebra_dim, total.field());
  for (int i = 0; i < algebra_dim; ++i)
    out.at(i, module_dim + i) = Scalar::one(total.field());
  return out;
}

Matrix AbelianExtension::section() const {
  Matrix out(module_dim + algebra_dim, algebra_dim, total.field());
  for (int i = 0; i < algebra_dim; ++i)
    out.at(module_dim + i, i) = Scalar::one(total.field());
  return out;
}

AbelianExtension build_extension(const CochainContext& c, const Cochain& f) {
  require_match(c, f, "extension");
  if (f.degree() != 2) throw input_error("extension requires a degree-2 cochain");
  if (!is_compatible(c, f))
    throw precondition_error("extension requires a compatible cochain");
  const int n = c.algebra.arity();
  const int d = c.algebra.dim();
  const int m = c.rep.module_dim();
  const Field& fld = c.algebra.field();
  Algebra total(m + d, n, fld);
  for (std::int64_t r = 0; r < total.tuple_count(); ++r) {
    std::vector<int> k = tuple_unrank(r, n, m + d);
    int mod_slots = 0, mod_pos = -1;
    for (int i = 0; i < n; ++i)
      if (k[i] < m) {
        ++mod_slots;
        mod_pos = i;
      }
    if (mod_slots >= 2) continue;
    Vec& target = total.bracket_basis(r);
    if (mod_slots == 0) {
      std::vector<int> x(n);
      for (int i = 0; i < n; ++i) x[i] = k[i] - m;
      std::vector<int> tail(x.begin() + 1, x.end());
      const Vec& fM = f.value(f.arg_rank(x[0], {tuple_rank(tail, d)}));
      const Vec& bL = c.algebra.bracket_basis(tuple_rank(x, d));
      for (int t = 0; t < m; ++t) target[t] = fM[t];
      for (int t = 0; t < d; ++t) target[m + t] = bL[t];
    } else {
      std::vector<int> l;
      l.reserve(n - 1);
      for (int i = 0; i < n; ++i)
        if (i != mod_pos) l.push_back(k[i] - m);
      const Vec& aM = c.rep.action_basis(mod_pos, tuple_rank(l, d), k[mod_pos]);
      for (int t = 0; t < m; ++t) target[t] = aM[t];
    }
  }
  Matrix ak(m + d, m + d, fld);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ak.at(i, j) = c.rep.alpha_m().at(i, j);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) ak.at(m + i, m + j) = c.algebra.alpha().at(i, j);
  total.set_uniform_twist(ak);
  return {total, m, d};
}

std::optional<Matrix> extensions_isomorphic(const CochainContext& c, const Cochain& f,
                                            const Cochain& g) {
  require_match(c, f, "extension comparison");
  require_match(c, g, "extension comparison");
  if (f.degree() != 2 || g.degree() != 2)
    throw input_error("extension comparison requires degree-2 cochains");
  if (!is_compatible(c, f) || !is_compatible(c, g))
    throw precondition_error("extension comparison requires compatible cochains");
  if (!is_zero_vec(coboundary(c, f).flatten()) || !is_zero_vec(coboundary(c, g).flatten()))
    throw precondition_error("extension comparison requires 2-cocycles");
  const int d = c.algebra.dim();
  const int m = c.rep.module_dim();
  const Field& fld = c.algebra.field();
  Subspace comp1 = compatible_subspace(c, 1);
  Subspace comp2 = compatible_subspace(c, 2);
  Matrix d1 = coboundary_matrix(c, 1, comp1, comp2);
  std::optional<Vec> target = comp2.coordinates(vec_sub(f.flatten(), g.flatten()));
  if (!target) throw std::logic_error("cocycle difference left the compatible subspace");
  std::optional<Vec> sol = d1.solve(*target);
  if (!sol) return std::nullopt;
  Vec hflat = zero_vec(comp1.ambient_dim(), fld);
  for (int k = 0; k < comp1.dim(); ++k) add_scaled(hflat, (*sol)[k], comp1.basis()[k]);
  Cochain h = Cochain::from_flat(d, c.algebra.arity(), m, fld, 1, hflat);
  Matrix phi = Matrix::identity(m + d, fld);
  for (int t = 0; t < m; ++t)
    for (int z = 0; z < d; ++z) phi.at(t, m + z) = h.value(z)[t];
  AbelianExtension kf = build_extension(c, f);
  AbelianExtension kg = build_extension(c, g);
  if (!is_algebra_morphism(kf.total, kg.total, phi))
    throw std::logic_error("extension isomorphism failed the morphism check");
  return phi;
}

Cochain ce_differential(const CochainContext& c, const Cochain& f) {
  if (c.algebra.arity() != 2)
    throw input_error("the tensor-power differential needs a binary algebra");
  require_match(c, f, "differential");
  if (!is_compatible(c, f))
    throw precondition_error("the differential requires a compatible cochain");
  const int q = f.degree();
  const int d = c.algebra.dim();
  const int m = c.rep.module_dim();
  const Field& fld = c.algebra.field();
  Matrix apow = c.algebra.alpha().pow(q - 1);
  std::vector<Vec> apow_col(d), alpha_col(d);
  for (int z = 0; z < d; ++z) {
    apow_col[z] = matrix_col(apow, z);
    alpha_col[z] = c.algebra.twist_col(0, z);
  }
  Cochain out(d, 2, m, fld, q + 1);
  for (std::int64_t oa = 0; oa < out.arg_count(); ++oa) {
    std::vector<int> y = tuple_unrank(oa, q + 1, d);
    Vec val = zero_vec(m, fld);

    std::int64_t head = 0;
    for (int k = 1; k <= q; ++k) head = head * d + y[k];
    add_scaled(val, Scalar::one(fld), c.rep.action(1, {apow_col[y[0]]}, f.value(head)));

    for (int i = 1; i <= q; ++i) {
      std::int64_t r = 0;
      for (int k = 0; k <= q; ++k)
        if (k != i) r = r * d + y[k];
      add_scaled(val, sign_pow(fld, i + 1),
                 c.rep.action(0, {apow_col[y[i]]}, f.value(r)));
    }

    for (int i = 0; i <= q; ++i)
      for (int j = i + 1; j <= q; ++j) {
        Vec zv = i == 0 ? c.algebra.bracket_basis(static_cast<std::int64_t>(y[0]) * d + y[j])
                        : alpha_col[y[0]];
        std::vector<Vec> blks;
        blks.reserve(q - 1);
        for (int k = 1; k <= q; ++k) {
          if (k == j) continue;
          if (k == i)
            blks.push_back(c.algebra.bracket_basis(static_cast<std::int64_t>(y[i]) * d + y[j]));
          else
            blks.push_back(alpha_col[y[k]]);
        }
        add_scaled(val, sign_pow(fld, j), f.eval(zv, blks));
      }

    out.value(oa) = val;
  }
  if (!is_compatible(c, out))
    throw std::logic_error("differential output failed the compatibility check");
  return out;
}

}  // namespace homleib
