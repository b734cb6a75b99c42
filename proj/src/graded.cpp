#include <homleib/graded.hpp>

#include <string>
#include <utility>

#include <homleib/errors.hpp>

namespace homleib {

namespace {

Scalar sign_pow(const Field& f, int e) {
  return (e & 1) ? Scalar::from_int(f, -1) : Scalar::one(f);
}

void require_self_cochain(const Algebra& a, const Cochain& f, const char* who) {
  if (f.alg_dim() != a.dim() || f.arity() != a.arity() || f.mod_dim() != a.dim() ||
      !(f.field() == a.field()))
    throw input_error(std::string(who) + ": cochain shape does not match the algebra");
}

void require_uniform(const Algebra& a) {
  if (!a.uniform_twist())
    throw precondition_error("graded cochain operations need a uniform twist");
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

int permutation_sign(const std::vector<int>& order) {
  int inv = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = i + 1; j < order.size(); ++j)
      if (order[i] > order[j]) ++inv;
  return (inv & 1) ? -1 : 1;
}

}  // namespace

std::vector<Shuffle> shuffles(int q, int r) {
  if (q < 0 || r < 0) throw input_error("shuffle part sizes must be nonnegative");
  const int m = q + r;
  std::vector<Shuffle> out;
  std::vector<int> pick(q);
  for (int i = 0; i < q; ++i) pick[i] = i;
  while (true) {
    Shuffle s;
    s.order.reserve(m);
    std::vector<char> used(m, 0);
    for (int v : pick) {
      s.order.push_back(v);
      used[v] = 1;
    }
    for (int v = 0; v < m; ++v)
      if (!used[v]) s.order.push_back(v);
    s.sign = permutation_sign(s.order);
    out.push_back(std::move(s));
    int i = q - 1;
    while (i >= 0 && pick[i] == m - q + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < q; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

Cochain compose(const Algebra& a, const Cochain& f, const Cochain& g, int k,
                const Shuffle& sigma) {
  require_self_cochain(a, f, "compose");
  require_self_cochain(a, g, "compose");
  require_uniform(a);
  const int p = f.degree() - 1;
  const int q = g.degree() - 1;
  if (k < 0 || k > p) throw input_error("compose: slot index out of range");
  const int window = p + q - k;
  if (static_cast<int>(sigma.order.size()) != window)
    throw input_error("compose: shuffle does not fit the open positions");
  {
    std::vector<char> seen(window, 0);
    for (int v : sigma.order) {
      if (v < 0 || v >= window || seen[v])
        throw input_error("compose: shuffle is not a permutation of the open positions");
      seen[v] = 1;
    }
  }

  const int d = a.dim();
  const int n = a.arity();
  const std::int64_t D = f.block_count();
  const Field& field = a.field();

  const Matrix alpha_q = a.alpha().pow(q);
  const Matrix abar_q = kron_power(alpha_q, n - 1);
  std::vector<Vec> aq_col(d), abarq_col(D);
  for (int j = 0; j < d; ++j) aq_col[j] = matrix_col(alpha_q, j);
  for (std::int64_t b = 0; b < D; ++b) abarq_col[b] = matrix_col(abar_q, static_cast<int>(b));

  Cochain out(d, n, d, field, p + q + 1);
  std::vector<std::int64_t> blocks, gblocks(q);
  std::vector<Vec> fargs;
  for (std::int64_t arg = 0; arg < out.arg_count(); ++arg) {
    const int z = split_arg(arg, D, p + q, blocks);
    if (k == 0) {
      for (int t = 0; t < q; ++t) gblocks[t] = blocks[sigma.order[t]];
      const Vec& w = g.value(g.arg_rank(z, gblocks));
      fargs.clear();
      for (int t = q; t < window; ++t) fargs.push_back(abarq_col[blocks[sigma.order[t]]]);
      out.value(arg) = f.eval(w, fargs);
      continue;
    }
    for (int t = 0; t < q; ++t) gblocks[t] = blocks[k + sigma.order[t]];
    const std::vector<int> digits =
        tuple_unrank(blocks[k - 1], n - 1, d);
    Vec acc = zero_vec(d, field);
    for (int s = 0; s < n - 1; ++s) {
      const Vec& w = g.value(g.arg_rank(digits[s], gblocks));
      Vec block = s == 0 ? w : aq_col[digits[0]];
      for (int t = 1; t < n - 1; ++t) block = kron_vec(block, t == s ? w : aq_col[digits[t]]);
      fargs.clear();
      for (int t = 0; t < k - 1; ++t) fargs.push_back(abarq_col[blocks[t]]);
      fargs.push_back(std::move(block));
      for (int t = q; t < window; ++t) fargs.push_back(abarq_col[blocks[k + sigma.order[t]]]);
      add_scaled(acc, Scalar::one(field), f.eval(aq_col[z], fargs));
    }
    out.value(arg) = std::move(acc);
  }
  return out;
}

Cochain insertion(const Algebra& a, const Cochain& f, const Cochain& g) {
  require_self_cochain(a, f, "insertion");
  require_self_cochain(a, g, "insertion");
  require_uniform(a);
  const int p = f.degree() - 1;
  const int q = g.degree() - 1;
  Cochain out(a.dim(), a.arity(), a.dim(), a.field(), p + q + 1);
  for (int k = 0; k <= p; ++k) {
    const int lead = (k * q) & 1 ? -1 : 1;
    for (const Shuffle& s : shuffles(q, p - k))
      out = out + scaled(Scalar::from_int(a.field(), lead * s.sign), compose(a, f, g, k, s));
  }
  return out;
}

Cochain graded_bracket(const Algebra& a, const Cochain& f, const Cochain& g) {
  const int p = f.degree() - 1;
  const int q = g.degree() - 1;
  return insertion(a, f, g) + scaled(sign_pow(a.field(), p * q + 1), insertion(a, g, f));
}

Cochain pi_cochain(const Algebra& a) {
  require_uniform(a);
  Cochain out(a.dim(), a.arity(), a.dim(), a.field(), 2);
  for (std::int64_t arg = 0; arg < out.arg_count(); ++arg)
    out.value(arg) = a.bracket_basis(arg);
  return out;
}

}  // namespace homleib
