#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <homleib/embedding.hpp>
#include <homleib/errors.hpp>

#include "fixtures.hpp"

using namespace homleib;
using namespace homleib::fixtures;

namespace {

const Field QQ = Field::rationals();

Cochain random_self_cochain(const Algebra& a, int degree, std::mt19937_64& rng) {
  CochainContext c(a, adjoint_representation(a));
  Subspace comp = compatible_subspace(c, degree);
  std::uniform_int_distribution<int> pick(-3, 3);
  Vec flat = zero_vec(comp.ambient_dim(), QQ);
  for (const Vec& b : comp.basis()) add_scaled(flat, Scalar::from_int(QQ, pick(rng)), b);
  return Cochain::from_flat(a.dim(), a.arity(), a.dim(), QQ, degree, flat);
}

}  // namespace

TEST_CASE("embedding at arity two is the identity") {
  std::mt19937_64 rng(311);
  for (const Algebra& a : {lie2(QQ), sq2(QQ), yau_twist(sq2(QQ), mat2(QQ, 9, 0, 0, 3))})
    for (int p = 1; p <= 3; ++p) {
      Cochain f = random_self_cochain(a, p, rng);
      CHECK(delta_embed(a, f) == f);
    }
}

TEST_CASE("embedded cochains expand slotwise") {
  for (const Algebra& a : {tern2(QQ), yau_twist(tern2(QQ), mat2(QQ, 2, 0, 0, -1))}) {
    // degree 1: no twist powers survive, so the identity goes to twice the
    // block identity
    Cochain id(2, 3, 2, QQ, 1);
    id.value(0)[0] = Scalar::one(QQ);
    id.value(1)[1] = Scalar::one(QQ);
    Cochain e = delta_embed(a, id);
    CHECK(e.alg_dim() == 4);
    CHECK(e.mod_dim() == 4);
    for (int X = 0; X < 4; ++X) {
      Vec want = zero_vec(4, QQ);
      want[X] = Scalar::from_int(QQ, 2);
      CHECK(e.value(X) == want);
    }
  }

  // f(e1) = e2, f(e2) = 0 lands e1 x e1 on e2 x e1 + e1 x e2
  Cochain f(2, 3, 2, QQ, 1);
  f.value(0)[1] = Scalar::one(QQ);
  Cochain e = delta_embed(tern2(QQ), f);
  Vec got = e.value(0);  // block e1 x e1
  CHECK(got[1].is_one());
  CHECK(got[2].is_one());
  CHECK(got[0].is_zero());
  CHECK(got[3].is_zero());
}

TEST_CASE("the square commutes") {
  for (const Algebra& a : {abelian(2, 2, QQ), lie2(QQ), sq2(QQ),
                           yau_twist(sq2(QQ), mat2(QQ, 9, 0, 0, 3)),
                           yau_twist(lie2(QQ), mat2(QQ, 5, 7, 0, 1))}) {
    CommutingSquareReport r = check_commuting_square(a, 3);
    CHECK(r.holds);
    CHECK(r.max_degree_checked == 3);
  }
  for (const Algebra& a : {abelian(2, 3, QQ), tern2(QQ),
                           yau_twist(tern2(QQ), mat2(QQ, 2, 0, 0, -1))}) {
    CommutingSquareReport r = check_commuting_square(a, 2);
    CHECK(r.holds);
    CHECK(r.max_degree_checked == 2);
  }
}

TEST_CASE("embedding kernels") {
  for (int p = 1; p <= 2; ++p) {
    CHECK(check_injectivity(lie2(QQ), p));
    CHECK(check_injectivity(sq2(QQ), p));
    CHECK(check_injectivity(yau_twist(sq2(QQ), mat2(QQ, 9, 0, 0, 3)), p));
    CHECK(check_injectivity(tern2(QQ), p));
    CHECK(check_injectivity(yau_twist(tern2(QQ), mat2(QQ, 2, 0, 0, -1)), p));
  }

  Algebra z(2, 3, QQ);
  z.set_uniform_twist(mat2(QQ, 0, 1, 0, 0));  // singular twist on the zero bracket
  CHECK_THROWS_AS(check_injectivity(z, 1), precondition_error);
}

TEST_CASE("embedding preconditions") {
  Algebra nm = sq2(QQ);
  nm.set_uniform_twist(mat2(QQ, 1, 0, 0, 2));
  CHECK_THROWS_AS(delta_embed(nm, Cochain(2, 2, 2, QQ, 1)), precondition_error);

  // module-valued cochains have no embedding
  CHECK_THROWS_AS(delta_embed(tern2(QQ), Cochain(2, 3, 3, QQ, 1)), input_error);

  // incompatible self cochain on a twisted algebra
  Algebra tw = yau_twist(sq2(QQ), mat2(QQ, 9, 0, 0, 3));
  Cochain inc(2, 2, 2, QQ, 1);
  inc.value(0)[1] = Scalar::one(QQ);
  CHECK_THROWS_AS(delta_embed(tw, inc), precondition_error);

  CHECK_THROWS_AS(check_commuting_square(lie2(QQ), 0), input_error);
}
