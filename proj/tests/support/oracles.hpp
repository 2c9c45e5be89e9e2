#pragma once

// Independent reference implementations used by the unit and acceptance
// tests. Nothing here calls the core linear algebra: ranks go through a
// fraction-free elimination over mpz, products are read straight off the
// structure table.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "antiassoc/algebra.hpp"
#include "antiassoc/multilinear.hpp"
#include "antiassoc/operators.hpp"

namespace oracle {

using antiassoc::Algebra;
using antiassoc::Rational;
using antiassoc::Vector;
using Rows = std::vector<std::vector<Rational>>;

// Bareiss elimination on rows scaled to integers.
inline std::size_t rank(const Rows& rows_in) {
  if (rows_in.empty()) return 0;
  const std::size_t cols = rows_in.front().size();
  std::vector<std::vector<mpz_class>> m;
  for (const auto& r : rows_in) {
    mpz_class l = 1;
    for (const auto& x : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    std::vector<mpz_class> row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = r[c].get_num() * (l / r[c].get_den());
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  mpz_class prev = 1;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      for (std::size_t k = c + 1; k < cols; ++k) {
        m[r][k] = (m[rank][c] * m[r][k] - m[r][c] * m[rank][k]) / prev;
      }
      m[r][c] = 0;
    }
    prev = m[rank][c];
    ++rank;
  }
  return rank;
}

inline bool in_span(const Rows& rows, const std::vector<Rational>& v) {
  Rows with = rows;
  with.push_back(v);
  return rank(with) == rank(rows);
}

inline Vector mul(const Algebra& a, const Vector& x, const Vector& y) {
  const std::size_t n = a.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] += x[i] * y[j] * a.table()[i][j][k];
    }
  }
  return out;
}

inline Vector basis(std::size_t n, std::size_t i) {
  Vector v(n);
  v[i] = 1;
  return v;
}

inline Vector plus(Vector a, const Vector& b, const Rational& s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

inline bool zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

// f as an n x n coefficient array, column j = f(e_j).
using Map = std::vector<std::vector<Rational>>;

inline Vector apply_map(const Map& f, const Vector& x) {
  Vector out(x.size());
  for (std::size_t r = 0; r < x.size(); ++r) {
    for (std::size_t c = 0; c < x.size(); ++c) out[r] += f[r][c] * x[c];
  }
  return out;
}

// Dimension of {f : f(e_i e_j) + s e_i f(e_j) + s f(e_i) e_j = 0}; s = -1 gives
// derivations, s = +1 anti-derivations. Unknown f[r][c] sits at r*n + c.
inline std::size_t operator_space_dim(const Algebra& a, int s) {
  const std::size_t n = a.dim();
  Rows rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        std::vector<Rational> row(n * n);
        // f(e_i e_j)_k = sum_m c_ij^m f[k][m]
        for (std::size_t m = 0; m < n; ++m) row[k * n + m] += a.table()[i][j][m];
        // (e_i f(e_j))_k = sum_m f[m][j] c_im^k
        for (std::size_t m = 0; m < n; ++m) row[m * n + j] += s * a.table()[i][m][k];
        // (f(e_i) e_j)_k = sum_m f[m][i] c_mj^k
        for (std::size_t m = 0; m < n; ++m) row[m * n + i] += s * a.table()[m][j][k];
        rows.push_back(std::move(row));
      }
    }
  }
  return n * n - rank(rows);
}

// g evaluated by multilinear expansion over its basis values.
inline Vector eval(const antiassoc::MultilinearMap& g, const std::vector<Vector>& args) {
  const std::size_t n = g.dim();
  Vector out(n);
  std::vector<std::size_t> idx(args.size(), 0);
  std::function<void(std::size_t, Rational)> rec = [&](std::size_t pos, Rational coeff) {
    if (pos == args.size()) {
      const Vector& v = g.value(idx);
      for (std::size_t k = 0; k < n; ++k) out[k] += coeff * v[k];
      return;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (args[pos][i] == 0) continue;
      idx[pos] = i;
      rec(pos + 1, coeff * args[pos][i]);
    }
  };
  rec(0, Rational(1));
  return out;
}

// Coboundary formulas of the anti-associative complex, evaluated pointwise.
inline Vector delta1_at(const Algebra& a, const Map& f, const Vector& x, const Vector& y) {
  Vector out = mul(a, x, apply_map(f, y));
  out = plus(out, apply_map(f, mul(a, x, y)), -1);
  return plus(out, mul(a, apply_map(f, x), y));
}

inline Vector delta2_at(const Algebra& a, const antiassoc::MultilinearMap& phi, const Vector& x,
                        const Vector& y, const Vector& z) {
  Vector out = mul(a, x, eval(phi, {y, z}));
  out = plus(out, eval(phi, {mul(a, x, y), z}));
  out = plus(out, eval(phi, {x, mul(a, y, z)}));
  return plus(out, mul(a, eval(phi, {x, y}), z));
}

// The four degree-4 components on (x, y, z, t, u), written out term by term.
inline std::array<Vector, 4> delta3_at(const Algebra& a, const antiassoc::MultilinearMap& g, const Vector& x,
                                       const Vector& y, const Vector& z, const Vector& t, const Vector& u) {
  auto m = [&](const Vector& p, const Vector& q) { return mul(a, p, q); };
  auto G = [&](const Vector& p, const Vector& q, const Vector& r) { return eval(g, {p, q, r}); };
  const std::size_t n = a.dim();
  std::array<Vector, 4> out{Vector(n), Vector(n), Vector(n), Vector(n)};
  auto add = [](Vector& acc, const Vector& v, int s) { acc = oracle::plus(acc, v, s); };
  const Vector xy = m(x, y), yz = m(y, z), zt = m(z, t), tu = m(t, u);

  add(out[0], m(x, G(y, z, tu)), 1);
  add(out[0], G(x, y, m(z, tu)), -1);
  add(out[0], m(xy, G(z, t, u)), 1);
  add(out[0], G(xy, zt, u), -1);
  add(out[0], m(G(xy, z, t), u), 1);
  add(out[0], G(m(xy, z), t, u), -1);
  add(out[0], m(G(x, y, z), tu), 1);
  add(out[0], G(x, yz, tu), -1);

  add(out[1], G(m(xy, z), t, u), 1);
  add(out[1], m(G(xy, z, t), u), -1);
  add(out[1], m(G(x, y, zt), u), 1);
  add(out[1], G(x, m(y, zt), u), -1);
  add(out[1], m(x, G(y, zt, u)), 1);
  add(out[1], G(x, y, m(zt, u)), -1);
  add(out[1], m(xy, G(z, t, u)), 1);
  add(out[1], G(xy, z, tu), -1);

  add(out[2], G(x, yz, tu), 1);
  add(out[2], m(x, G(yz, t, u)), -1);
  add(out[2], G(x, m(yz, t), u), 1);
  add(out[2], m(x, m(G(y, z, t), u)), -1);
  add(out[2], m(G(x, y, zt), u), 1);
  add(out[2], m(G(xy, z, t), u), -1);
  add(out[2], m(m(G(x, y, z), t), u), 1);
  add(out[2], G(m(x, yz), t, u), -1);

  add(out[3], G(xy, zt, u), 1);
  add(out[3], G(x, y, m(zt, u)), -1);
  add(out[3], m(x, G(y, zt, u)), 1);
  add(out[3], G(x, m(y, zt), u), -1);
  add(out[3], m(m(x, G(y, z, t)), u), 1);
  add(out[3], m(G(x, yz, t), u), -1);
  add(out[3], m(m(G(x, y, z), t), u), 1);
  add(out[3], m(G(xy, z, t), u), -1);
  return out;
}

// Symmetric chains: sorted words a_0 ^ ... ^ a_q, boundary terms
// b_1(a0^a1) = a0a1 + a1a0, b_2 = (a0a1)^a2 + (a1a2)^a0 + (a2a0)^a1.
using Chain = std::map<std::vector<std::size_t>, Rational>;

inline Chain b_symmetric(const Algebra& a, const std::vector<std::size_t>& w) {
  Chain out;
  auto emit = [&](std::size_t i, std::size_t j, std::vector<std::size_t> rest) {
    const Vector& p = a.table()[w[i]][w[j]];
    for (std::size_t s = 0; s < p.size(); ++s) {
      if (p[s] == 0) continue;
      std::vector<std::size_t> word{s};
      for (auto r : rest) word.push_back(w[r]);
      std::sort(word.begin(), word.end());
      out[word] += p[s];
    }
  };
  if (w.size() == 2) {
    emit(0, 1, {});
    emit(1, 0, {});
  } else if (w.size() == 3) {
    emit(0, 1, {2});
    emit(1, 2, {0});
    emit(2, 0, {1});
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// Compositional inverse by Lagrange inversion: [t^n] h = (1/n) [u^(n-1)] (u/g(u))^n.
// g[i] is the coefficient of t^(i+1).
inline std::vector<Rational> lagrange_inverse(const std::vector<Rational>& g, std::size_t order) {
  std::vector<Rational> q(order);  // u/g(u) = 1 / (g1 + g2 u + ...)
  for (std::size_t k = 0; k < order; ++k) {
    Rational s = k == 0 ? Rational(1) : Rational(0);
    for (std::size_t j = 1; j <= k; ++j) {
      if (j < g.size()) s -= g[j] * q[k - j];
    }
    q[k] = s / g[0];
  }
  std::vector<Rational> h(order);
  std::vector<Rational> power{1};
  for (std::size_t n = 1; n <= order; ++n) {
    std::vector<Rational> next(order);
    for (std::size_t i = 0; i < power.size() && i < order; ++i) {
      for (std::size_t j = 0; i + j < order; ++j) next[i + j] += power[i] * q[j];
    }
    power = std::move(next);
    h[n - 1] = power[n - 1] / n;
    h[n - 1].canonicalize();
  }
  return h;
}

// Fixed-seed generator for property tests.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }

  Rational rational() {
    Rational r(integer(-4, 4), integer(1, 3));
    r.canonicalize();
    return r;
  }

  Vector vector(std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = rational();
    return v;
  }

  antiassoc::Matrix matrix(std::size_t n) {
    antiassoc::Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = rational();
    }
    return m;
  }

  // Unit lower-triangular times unit upper-triangular: always invertible.
  antiassoc::Matrix invertible(std::size_t n) {
    antiassoc::Matrix l = antiassoc::Matrix::identity(n), u = antiassoc::Matrix::identity(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < r; ++c) {
        l(r, c) = integer(-2, 2);
        u(c, r) = integer(-2, 2);
      }
    }
    return l * u;
  }

  antiassoc::MultilinearMap multilinear(std::size_t arity, std::size_t n) {
    return antiassoc::tabulate(arity, n, [&](const std::vector<std::size_t>&) { return vector(n); });
  }

 private:
  std::mt19937_64 engine_;
};

// Inverse of an invertible matrix by Gauss-Jordan on [m | I].
inline antiassoc::Matrix inverse(const antiassoc::Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> w(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) w[r][c] = m(r, c);
    w[r][n + r] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (w[p][c] == 0) ++p;
    std::swap(w[p], w[c]);
    const Rational pivot = w[c][c];
    for (auto& x : w[c]) x /= pivot;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || w[r][c] == 0) continue;
      const Rational s = w[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) w[r][k] -= s * w[c][k];
    }
  }
  antiassoc::Matrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = w[r][n + c];
  }
  return out;
}

// The algebra transported along the basis change T: x * y = T^-1 ((T x)(T y)).
inline Algebra change_basis(const Algebra& a, const antiassoc::Matrix& t) {
  const std::size_t n = a.dim();
  const antiassoc::Matrix ti = inverse(t);
  antiassoc::StructureTable table(n, std::vector<Vector>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      table[i][j] = ti.apply(mul(a, t.column(i), t.column(j)));
    }
  }
  return Algebra(table);
}

// Block sum of two algebras.
inline Algebra direct_sum(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim() + b.dim();
  antiassoc::StructureTable table(n, std::vector<Vector>(n, Vector(n)));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) table[i][j][k] = a.table()[i][j][k];
    }
  }
  const std::size_t o = a.dim();
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t j = 0; j < b.dim(); ++j) {
      for (std::size_t k = 0; k < b.dim(); ++k) table[o + i][o + j][o + k] = b.table()[i][j][k];
    }
  }
  return Algebra(table);
}

}  // namespace oracle
