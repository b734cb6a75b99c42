#ifndef HOMLEIB_TEST_FIXTURES_HPP
#define HOMLEIB_TEST_FIXTURES_HPP

// Small algebras reused across test binaries. All identities behind these
// constructions were checked by hand before being frozen here.

#include <homleib/algebra.hpp>

namespace homleib::fixtures {

inline Matrix mat2(const Field& f, std::int64_t a, std::int64_t b, std::int64_t c,
                   std::int64_t d) {
  Matrix m(2, 2, f);
  m.at(0, 0) = Scalar::from_int(f, a);
  m.at(0, 1) = Scalar::from_int(f, b);
  m.at(1, 0) = Scalar::from_int(f, c);
  m.at(1, 1) = Scalar::from_int(f, d);
  return m;
}

inline Algebra abelian(int dim, int arity, const Field& f) { return Algebra(dim, arity, f); }

// 2-dim Lie algebra as a binary Leibniz algebra: [e1,e2] = e1 = -[e2,e1]
inline Algebra lie2(const Field& f) {
  Algebra a(2, 2, f);
  a.coeff({0, 1}, 0) = Scalar::one(f);
  a.coeff({1, 0}, 0) = -Scalar::one(f);
  return a;
}

// nilpotent non-Lie Leibniz algebra: [e2,e2] = e1
inline Algebra sq2(const Field& f) {
  Algebra a(2, 2, f);
  a.coeff({1, 1}, 0) = Scalar::one(f);
  return a;
}

// ternary bracket [e1,e2,e2] = e1 on a 2-dim space
inline Algebra tern2(const Field& f) {
  Algebra a(2, 3, f);
  a.coeff({0, 1, 1}, 0) = Scalar::one(f);
  return a;
}

}  // namespace homleib::fixtures

#endif
