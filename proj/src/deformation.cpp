#include <homleib/deformation.hpp>

#include <stdexcept>
#include <string>
#include <utility>

#include <homleib/errors.hpp>

namespace homleib {

namespace {

Vec matrix_col(const Matrix& m, int j) {
  Vec v = zero_vec(m.rows(), m.field());
  for (int i = 0; i < m.rows(); ++i) v[i] = m.at(i, j);
  return v;
}

Cochain zero_cochain(const Algebra& a, int degree) {
  return Cochain(a.dim(), a.arity(), a.dim(), a.field(), degree);
}

bool term_shape_ok(const Algebra& a, const Cochain& f) {
  return f.degree() == 2 && f.alg_dim() == a.dim() && f.arity() == a.arity() &&
         f.mod_dim() == a.dim() && f.field() == a.field();
}

void require_deformation(const TruncatedDeformation& d, const char* who) {
  if (!d.base.uniform_twist())
    throw precondition_error(std::string(who) + ": deformations need a uniform twist");
  for (const Cochain& f : d.terms)
    if (!term_shape_ok(d.base, f))
      throw input_error(std::string(who) + ": term shape does not match the algebra");
}

// alpha o f = f o (alpha x abar), checked directly so that candidate terms do
// not need the full cochain complex (whose context demands a valid algebra)
bool term_compatible(const Algebra& a, const Cochain& f) {
  const Matrix& al = a.alpha();
  const Matrix ab = kron_power(al, a.arity() - 1);
  for (int z = 0; z < a.dim(); ++z) {
    for (std::int64_t b = 0; b < f.block_count(); ++b) {
      const Vec lhs = al.apply(f.value(f.arg_rank(z, {b})));
      const Vec rhs = f.eval(matrix_col(al, z), {matrix_col(ab, static_cast<int>(b))});
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace

TruncatedDeformation make_deformation(const Algebra& a, std::vector<Cochain> terms) {
  if (!a.uniform_twist())
    throw precondition_error("deformations need a uniform twist");
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (!term_shape_ok(a, terms[i]))
      throw input_error("deformation term " + std::to_string(i + 1) +
                        " is not a degree-2 self cochain on the algebra");
    if (!term_compatible(a, terms[i]))
      throw input_error("deformation term " + std::to_string(i + 1) +
                        " is not twist-compatible");
  }
  return {a, std::move(terms)};
}

Cochain deformation_residual(const TruncatedDeformation& d, int s) {
  require_deformation(d, "deformation_residual");
  if (s < 0 || s > d.order())
    throw input_error("deformation_residual: no such order in this truncation");
  const Cochain pi = pi_cochain(d.base);
  auto at = [&](int i) -> const Cochain& { return i == 0 ? pi : d.terms[i - 1]; };
  Cochain out = zero_cochain(d.base, 3);
  for (int j = 0; j <= s; ++j) out = out + insertion(d.base, at(j), at(s - j));
  return out;
}

bool check_first_order(const TruncatedDeformation& d) {
  if (d.order() < 1) throw input_error("check_first_order needs at least one term");
  return deformation_residual(d, 1) == zero_cochain(d.base, 3);
}

Cochain obstruction(const TruncatedDeformation& d, int s) {
  require_deformation(d, "obstruction");
  if (s < 2) throw input_error("obstruction: the order must be at least 2");
  if (s > d.order() + 1)
    throw input_error("obstruction: terms through the preceding order are required");
  if (!check_multiplicative(d.base))
    throw precondition_error("obstruction needs a multiplicative twist");
  const Cochain zero3 = zero_cochain(d.base, 3);
  for (int m = 1; m < s; ++m)
    if (deformation_residual(d, m) != zero3)
      throw precondition_error("obstruction: the deformation equation fails at order " +
                               std::to_string(m));
  Cochain g = zero3;
  for (int i = 1; i < s; ++i)
    g = g + graded_bracket(d.base, d.terms[i - 1], d.terms[s - i - 1]);
  if (graded_bracket(d.base, g, pi_cochain(d.base)) != zero_cochain(d.base, 4))
    throw std::logic_error("obstruction cochain failed the cocycle check");
  return g;
}

ExtensionOutcome extend_one_order(const TruncatedDeformation& d) {
  require_deformation(d, "extend_one_order");
  const Algebra& a = d.base;
  const CochainContext ctx(a, adjoint_representation(a));
  const int next = d.order() + 1;
  Cochain g = next >= 2 ? obstruction(d, next) : zero_cochain(a, 3);
  const Subspace dom = compatible_subspace(ctx, 2);
  const Subspace cod = compatible_subspace(ctx, 3);
  const Matrix delta = coboundary_matrix(ctx, 2, dom, cod);
  const Scalar half = Scalar::from_fraction(a.field(), 1, 2);
  const auto rhs = cod.coordinates(scaled(half, g).flatten());
  if (!rhs) throw std::logic_error("obstruction cochain left the compatible subspace");
  if (const auto x = delta.solve(*rhs)) {
    Vec flat = zero_vec(dom.ambient_dim(), a.field());
    for (int i = 0; i < dom.dim(); ++i) add_scaled(flat, (*x)[i], dom.basis()[i]);
    TruncatedDeformation out = d;
    out.terms.push_back(
        Cochain::from_flat(a.dim(), a.arity(), a.dim(), a.field(), 2, flat));
    if (deformation_residual(out, next) != zero_cochain(a, 3))
      throw std::logic_error("extension failed the order equation it solved");
    return {std::move(out), std::move(g), {}};
  }
  const CohomologyReport h = cohomology(ctx, 3);
  Matrix span(cod.dim(), h.dim_h + delta.cols(), a.field());
  for (int c = 0; c < h.dim_h; ++c) {
    const auto rc = cod.coordinates(h.representatives[c].flatten());
    if (!rc) throw std::logic_error("cohomology representative left the compatible subspace");
    for (int r = 0; r < cod.dim(); ++r) span.at(r, c) = (*rc)[r];
  }
  for (int c = 0; c < delta.cols(); ++c)
    for (int r = 0; r < cod.dim(); ++r) span.at(r, h.dim_h + c) = delta.at(r, c);
  const auto gc = cod.coordinates(g.flatten());
  if (!gc) throw std::logic_error("obstruction cochain left the compatible subspace");
  const auto y = span.solve(*gc);
  if (!y) throw std::logic_error("obstruction cocycle escaped the cocycle space");
  Vec cls(y->begin(), y->begin() + h.dim_h);
  return {std::nullopt, std::move(g), std::move(cls)};
}

bool check_equivalence(const TruncatedDeformation& d, const TruncatedDeformation& e,
                       const TruncatedAutomorphism& phi) {
  require_deformation(d, "check_equivalence");
  require_deformation(e, "check_equivalence");
  const Algebra& a = d.base;
  if (!(a == e.base))
    throw input_error("check_equivalence: the deformations have different base algebras");
  const int s = d.order();
  if (e.order() != s || phi.order() != s)
    throw input_error("check_equivalence: the inputs must share one truncation order");
  for (const Matrix& m : phi.phi)
    if (m.rows() != a.dim() || m.cols() != a.dim() || !(m.field() == a.field()))
      throw input_error("check_equivalence: automorphism term shape mismatch");

  const Matrix& al = a.alpha();
  for (const Matrix& m : phi.phi)
    if (!(m * al == al * m)) return false;

  const int n = a.arity();
  const int dim = a.dim();
  const Scalar one = Scalar::one(a.field());
  std::vector<std::vector<Vec>> col(s + 1);  // col[i][j]: phi_i applied to e_j
  col[0].reserve(dim);
  for (int j = 0; j < dim; ++j) col[0].push_back(basis_vec(dim, j, a.field()));
  for (int i = 1; i <= s; ++i) {
    col[i].reserve(dim);
    for (int j = 0; j < dim; ++j) col[i].push_back(matrix_col(phi.phi[i - 1], j));
  }

  for (std::int64_t r = 0; r < a.tuple_count(); ++r) {
    const std::vector<int> t = tuple_unrank(r, n, dim);
    for (int m = 1; m <= s; ++m) {
      Vec lhs = zero_vec(dim, a.field());
      for (int i = 0; i <= m; ++i) {
        const int j = m - i;
        const Vec& fv = j == 0 ? a.bracket_basis(r) : d.terms[j - 1].value(r);
        if (i == 0)
          add_scaled(lhs, one, fv);
        else
          add_scaled(lhs, one, phi.phi[i - 1].apply(fv));
      }
      Vec rhs = zero_vec(dim, a.field());
      std::vector<int> iv(n, 0);  // odometer over phi orders per slot
      while (true) {
        int sum = 0;
        for (int k = 0; k < n; ++k) sum += iv[k];
        if (sum <= m) {
          const int j = m - sum;
          if (j == 0) {
            std::vector<Vec> args(n);
            for (int k = 0; k < n; ++k) args[k] = col[iv[k]][t[k]];
            add_scaled(rhs, one, a.bracket(args));
          } else {
            Vec block = col[iv[1]][t[1]];
            for (int k = 2; k < n; ++k) block = kron_vec(block, col[iv[k]][t[k]]);
            add_scaled(rhs, one, e.terms[j - 1].eval(col[iv[0]][t[0]], {block}));
          }
        }
        int p = n - 1;
        while (p >= 0 && iv[p] == m) iv[p--] = 0;
        if (p < 0) break;
        ++iv[p];
      }
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

}  // namespace homleib
