#include <homleib/embedding.hpp>

#include <stdexcept>

#include <homleib/errors.hpp>

namespace homleib {

namespace {

Vec matrix_col(const Matrix& m, int j) {
  Vec v = zero_vec(m.rows(), m.field());
  for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

Cochain embed_in(const CochainContext& cl, const Cochain& f) {
  if (f.alg_dim() != cl.algebra.dim() || f.arity() != cl.algebra.arity() ||
      f.mod_dim() != cl.algebra.dim() || !(f.field() == cl.algebra.field()))
    throw input_error("embedding: cochain must be a self-coefficient cochain on the algebra");
  if (!is_compatible(cl, f))
    throw precondition_error("embedding requires a compatible cochain");
  const int n = cl.algebra.arity();
  const int d = cl.algebra.dim();
  const int p = f.degree();
  const std::int64_t D = cl.blocks.dim();
  const Field& fld = cl.algebra.field();

  Matrix apow = cl.algebra.alpha().pow(p - 1);
  std::vector<Vec> apow_col(d);
  for (int z = 0; z < d; ++z) apow_col[z] = matrix_col(apow, z);

  Cochain out(static_cast<int>(D), 2, static_cast<int>(D), fld, p);
  for (std::int64_t oa = 0; oa < out.arg_count(); ++oa) {
    std::int64_t r = oa;
    std::vector<std::int64_t> X(p);
    for (int k = p - 1; k >= 0; --k) {
      X[k] = r % D;
      r /= D;
    }
    std::vector<int> x = tuple_unrank(X[0], n - 1, d);
    std::vector<std::int64_t> tail(X.begin() + 1, X.end());
    Vec val = zero_vec(static_cast<int>(D), fld);
    for (int i = 0; i < n - 1; ++i) {
      const Vec& fv = f.value(f.arg_rank(x[i], tail));
      Vec factor = i == 0 ? fv : apow_col[x[0]];
      for (int s = 1; s < n - 1; ++s)
        factor = kron_vec(factor, s == i ? fv : apow_col[x[s]]);
      add_scaled(val, Scalar::one(fld), factor);
    }
    out.value(oa) = val;
  }
  return out;
}

// columns of the arity-2 block differential in the compatible bases
Matrix block_differential_matrix(const CochainContext& cd, int degree, const Subspace& dom,
                                 const Subspace& cod) {
  const Field& fld = cd.algebra.field();
  Matrix out(cod.dim(), dom.dim(), fld);
  for (int j = 0; j < dom.dim(); ++j) {
    Cochain f = Cochain::from_flat(cd.algebra.dim(), 2, cd.rep.module_dim(), fld, degree,
                                   dom.basis()[j]);
    std::optional<Vec> coords = cod.coordinates(ce_differential(cd, f).flatten());
    if (!coords) throw std::logic_error("block differential left the compatible subspace");
    for (int i = 0; i < cod.dim(); ++i) out.at(i, j) = (*coords)[i];
  }
  return out;
}

Matrix embed_matrix(const CochainContext& cl, const CochainContext& cd, int degree,
                    const Subspace& dom, const Subspace& cod) {
  const Field& fld = cl.algebra.field();
  Matrix out(cod.dim(), dom.dim(), fld);
  for (int j = 0; j < dom.dim(); ++j) {
    Cochain f = Cochain::from_flat(cl.algebra.dim(), cl.algebra.arity(), cl.algebra.dim(),
                                   fld, degree, dom.basis()[j]);
    Cochain ef = embed_in(cl, f);
    if (!is_compatible(cd, ef))
      throw std::logic_error("embedded cochain failed the compatibility check");
    std::optional<Vec> coords = cod.coordinates(ef.flatten());
    if (!coords) throw std::logic_error("embedded cochain left the compatible subspace");
    for (int i = 0; i < cod.dim(); ++i) out.at(i, j) = (*coords)[i];
  }
  return out;
}

}  // namespace

Cochain delta_embed(const Algebra& a, const Cochain& f) {
  CochainContext cl(a, adjoint_representation(a));
  Cochain out = embed_in(cl, f);
  CochainContext cd(cl.blocks, adjoint_representation(cl.blocks));
  if (!is_compatible(cd, out))
    throw std::logic_error("embedded cochain failed the compatibility check");
  return out;
}

Matrix delta_embed_matrix(const Algebra& a, int degree) {
  CochainContext cl(a, adjoint_representation(a));
  CochainContext cd(cl.blocks, adjoint_representation(cl.blocks));
  return embed_matrix(cl, cd, degree, compatible_subspace(cl, degree),
                      compatible_subspace(cd, degree));
}

CommutingSquareReport check_commuting_square(const Algebra& a, int max_degree) {
  if (max_degree < 1) throw input_error("the square needs a degree of at least 1");
  CochainContext cl(a, adjoint_representation(a));
  CochainContext cd(cl.blocks, adjoint_representation(cl.blocks));
  CommutingSquareReport rep;
  Subspace doml = compatible_subspace(cl, 1);
  Subspace domd = compatible_subspace(cd, 1);
  for (int q = 1; q <= max_degree; ++q) {
    Subspace codl = compatible_subspace(cl, q + 1);
    Subspace codd = compatible_subspace(cd, q + 1);
    Matrix down = embed_matrix(cl, cd, q, doml, domd);
    Matrix up = embed_matrix(cl, cd, q + 1, codl, codd);
    Matrix dq = coboundary_matrix(cl, q, doml, codl);
    Matrix dd = block_differential_matrix(cd, q, domd, codd);
    rep.max_degree_checked = q;
    if (dd * down != up * dq) {
      rep.holds = false;
      return rep;
    }
    doml = codl;
    domd = codd;
  }
  return rep;
}

bool check_injectivity(const Algebra& a, int degree) {
  if (a.alpha().rank() != a.dim())
    throw precondition_error("the embedding statement needs an injective twist");
  return delta_embed_matrix(a, degree).kernel().dim() == 0;
}

}  // namespace homleib
