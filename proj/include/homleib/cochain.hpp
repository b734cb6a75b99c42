#ifndef HOMLEIB_COCHAIN_HPP
#define HOMLEIB_COCHAIN_HPP

#include <optional>
#include <vector>

#include <homleib/representation.hpp>

namespace homleib {

// Degree-p cochain with module values: a multilinear map taking one algebra
// argument z and p-1 blocks, where a block is a vector on the (n-1)-fold
// tensor power of the algebra (block index space D = d^{n-1}). Coefficients
// are stored per basis argument: arg rank = ((z*D + B_1)*D + ...)*D + B_{p-1}.
class Cochain {
 public:
  Cochain(int alg_dim, int arity, int mod_dim, const Field& f, int degree);  // zero map

  int alg_dim() const { return alg_dim_; }
  int arity() const { return arity_; }
  int mod_dim() const { return mod_dim_; }
  int degree() const { return degree_; }
  const Field& field() const { return field_; }
  std::int64_t block_count() const;  // D = d^{n-1}
  std::int64_t arg_count() const { return static_cast<std::int64_t>(coeffs_.size()); }

  std::int64_t arg_rank(int z, const std::vector<std::int64_t>& blocks) const;
  const Vec& value(std::int64_t arg) const { return coeffs_[arg]; }
  Vec& value(std::int64_t arg) { return coeffs_[arg]; }

  // multilinear evaluation: z has length d, each of the degree-1 blocks length D
  Vec eval(const Vec& z, const std::vector<Vec>& blocks) const;

  // coefficients in (arg, target) order, length arg_count * mod_dim
  Vec flatten() const;
  static Cochain from_flat(int alg_dim, int arity, int mod_dim, const Field& f,
                           int degree, const Vec& flat);

  bool same_shape(const Cochain& o) const;
  bool operator==(const Cochain& o) const;
  bool operator!=(const Cochain& o) const { return !(*this == o); }

 private:
  int alg_dim_, arity_, mod_dim_, degree_;
  Field field_;
  std::vector<Vec> coeffs_;
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain scaled(const Scalar& c, const Cochain& f);

// Everything the cochain complex of (L, M) depends on: a valid algebra with a
// uniform multiplicative twist, a valid module over it, and the induced binary
// algebra on the (n-1)-fold tensor power (the block space, twist abar).
struct CochainContext {
  CochainContext(const Algebra& a, const Representation& r);
  Algebra algebra;
  Representation rep;
  Algebra blocks;
};

// alpha_M o f = f o (alpha x abar^{x(p-1)}), checked on all basis arguments.
bool is_compatible(const CochainContext& c, const Cochain& f);

// Canonical basis of the compatible degree-p cochains inside the full
// coefficient space K^{arg_count * mod_dim}.
Subspace compatible_subspace(const CochainContext& c, int degree);

// The coboundary of a compatible degree-p cochain: with blocks X_k, block
// bracket [.,.] on D, n-bracket [z, X] into the z slot, and actions [..]_s,
//   (delta f)(z, X_1..X_p) =
//       sum_{1<=i<j<=p} (-1)^j  f(alpha z, abar X_1, .., [X_i, X_j] at i, ..,
//                               X_j dropped, .., abar X_p)
//     + sum_{i=1}^p    (-1)^i  f([z, X_i], abar X_1, .., X_i dropped, ..)
//     + sum_{i=1}^p  (-1)^{i+1} [f(z, .., X_i dropped, ..), alpha^{p-1} X_i]_0
//     + sum_{s=1}^{n-1} [alpha^{p-1} z, alpha^{p-1} X_1^1, ..,
//                        f(X_1^s, X_2, .., X_p) at slot s, ..,
//                        alpha^{p-1} X_1^{n-1}]_s.
// The output is again compatible (verified; failure is a logic error).
Cochain coboundary(const CochainContext& c, const Cochain& f);

// Matrix of the coboundary from compatible degree-p coordinates (dom) to
// compatible degree-(p+1) coordinates (cod); the overload computes both bases.
Matrix coboundary_matrix(const CochainContext& c, int degree, const Subspace& dom,
                         const Subspace& cod);
Matrix coboundary_matrix(const CochainContext& c, int degree);

struct CohomologyReport {
  int degree = 0;
  int dim_cochains = 0;      // compatible degree-p cochains
  int dim_cocycles = 0;      // kernel of delta^p
  int dim_coboundaries = 0;  // image of delta^{p-1}; zero by definition at p = 1
  int dim_h = 0;
  std::vector<Cochain> representatives;  // lifts of a basis of the quotient
};

CohomologyReport cohomology(const CochainContext& c, int degree);

// Solution space of f([x_1..x_n]) = sum_i [x_1, .., f(x_i), .., x_n]_i
// together with the degree-1 compatibility constraint, inside K^{d * m} with
// coefficient order (argument, target). Coincides with the degree-1 cocycles.
Subspace derivation_space(const CochainContext& c);

// Split extension of the algebra by the module along a degree-2 cochain f:
// the total space is M + L with the module basis first,
//   [(m_1, x_1), .., (m_n, x_n)] =
//     (sum_i [x_1, .., m_i, .., x_n]_{i-1} + f(x_1, .., x_n), [x_1, .., x_n])
// and block-diagonal twist. Brackets with two or more module slots vanish.
// The total algebra satisfies the defining identity iff f is a 2-cocycle.
struct AbelianExtension {
  Algebra total;
  int module_dim;
  int algebra_dim;
  Matrix inclusion() const;   // module into the total space
  Matrix projection() const;  // total space onto the algebra
  Matrix section() const;     // coordinate splitting of the projection
};

AbelianExtension build_extension(const CochainContext& c, const Cochain& f);

// For 2-cocycles f, g: solves f - g = delta h over compatible degree-1
// cochains. On success returns the isomorphism (m, x) -> (m + h(x), x) of the
// two extensions as a matrix on M + L coordinates; nullopt when f and g lie
// in distinct cohomology classes.
std::optional<Matrix> extensions_isomorphic(const CochainContext& c, const Cochain& f,
                                            const Cochain& g);

// Differential of the binary Hom-Leibniz complex on plain tensor powers
// (arity 2 contexts only, where blocks are single algebra arguments):
//   (d f)(x_1..x_{q+1}) = [alpha^{q-1} x_1, f(x_2, .., x_{q+1})]_1
//     + sum_{i=2}^{q+1} (-1)^i [f(x_1, .., x_i dropped, ..), alpha^{q-1} x_i]_0
//     + sum_{1<=i<j<=q+1} (-1)^{j+1} f(alpha x_1, .., [x_i, x_j] at i, ..,
//                                      x_j dropped, .., alpha x_{q+1}).
// Agrees with coboundary() on every arity-2 context.
Cochain ce_differential(const CochainContext& c, const Cochain& f);

}  // namespace homleib

#endif
