#pragma once

// Slow reference implementations used to cross-check the library. They share
// no code with it: plain vectors of long long, textbook elimination.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "assocloc/algebra.hpp"
#include "assocloc/error.hpp"
#include "assocloc/module.hpp"

#ifndef ASSOCLOC_CORPUS_DIR
#define ASSOCLOC_CORPUS_DIR "corpus"
#endif

namespace naive {

using Row = std::vector<long long>;
using M = std::vector<Row>;

inline long long md(long long x, long long p) { return ((x % p) + p) % p; }

inline long long pw(long long a, long long e, long long p) {
  long long r = 1;
  a = md(a, p);
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline long long inv(long long a, long long p) { return pw(a, p - 2, p); }

inline M from(const assocloc::Mat& m) {
  M out(m.rows(), Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline M identity(std::size_t n) {
  M out(n, Row(n, 0));
  for (std::size_t i = 0; i < n; ++i) out[i][i] = 1;
  return out;
}

inline M mul(const M& a, const M& b, long long p) {
  const std::size_t n = a.size(), k = b.empty() ? 0 : b[0].size();
  M out(n, Row(k, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      long long s = 0;
      for (std::size_t t = 0; t < b.size(); ++t) s += a[i][t] * b[t][j];
      out[i][j] = md(s, p);
    }
  return out;
}

inline Row vmul(const Row& v, const M& m, long long p) { return mul(M{v}, m, p)[0]; }

// Column-by-column elimination.
inline std::size_t rank(M a, long long p) {
  std::size_t r = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && md(a[piv][c], p) == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    const long long iv = inv(a[r][c], p);
    for (auto& x : a[r]) x = md(x * iv, p);
    for (std::size_t i = 0; i < a.size(); ++i)
      if (i != r && md(a[i][c], p) != 0) {
        const long long f = a[i][c];
        for (std::size_t j = 0; j < cols; ++j) a[i][j] = md(a[i][j] - f * a[r][j], p);
      }
    ++r;
  }
  return r;
}

inline bool in_span(const M& rows, const Row& v, long long p) {
  M a = rows;
  const std::size_t r0 = rank(a, p);
  a.push_back(v);
  return rank(a, p) == r0;
}

// Dimension of the smallest subspace containing v and stable under `acts`.
inline std::size_t spin_dim(const std::vector<M>& acts, const Row& v, long long p) {
  M basis;
  std::vector<Row> todo{v};
  while (!todo.empty()) {
    Row w = todo.back();
    todo.pop_back();
    bool zero = true;
    for (auto x : w) zero = zero && md(x, p) == 0;
    if (zero || (!basis.empty() && in_span(basis, w, p))) continue;
    basis.push_back(w);
    for (const auto& a : acts) todo.push_back(vmul(w, a, p));
  }
  return basis.size();
}

inline std::vector<Row> all_vectors(std::size_t n, long long p) {
  std::vector<Row> out;
  Row v(n, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(p);
  for (std::uint64_t k = 0; k < total; ++k) {
    std::uint64_t t = k;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = static_cast<long long>(t % static_cast<std::uint64_t>(p));
      t /= static_cast<std::uint64_t>(p);
    }
    out.push_back(v);
  }
  return out;
}

// Simple iff every nonzero vector spins to the whole space.
inline bool exhaustive_simple(const assocloc::ModuleRep& m) {
  const long long p = m.field().p();
  std::vector<M> acts;
  for (const auto& a : m.action) acts.push_back(from(a));
  for (const auto& v : all_vectors(m.dim, p)) {
    bool zero = true;
    for (auto x : v) zero = zero && x == 0;
    if (!zero && spin_dim(acts, v, p) != m.dim) return false;
  }
  return true;
}

inline Row flat(const M& m) {
  Row out;
  for (const auto& r : m) out.insert(out.end(), r.begin(), r.end());
  return out;
}

inline M sum(const M& a, const M& b, long long p) {
  M out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = md(a[i][j] + b[i][j], p);
  return out;
}

// dim {X : A X = X A for every A}: m^2 minus the rank of the linear system.
inline std::size_t commutant_dim(const std::vector<M>& acts, std::size_t m, long long p) {
  M sys;
  for (const auto& a : acts)
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        Row eq(m * m, 0);
        for (std::size_t k = 0; k < m; ++k) {
          eq[k * m + j] = md(eq[k * m + j] + a[i][k], p);
          eq[i * m + k] = md(eq[i * m + k] - a[k][j], p);
        }
        sys.push_back(eq);
      }
  return m * m - (sys.empty() ? 0 : rank(sys, p));
}

// Span of all products of the generators (with the identity), by repeated
// multiplication of every pair until nothing new appears.
inline std::vector<M> subring(const std::vector<M>& gens, std::size_t m, long long p) {
  std::vector<M> basis;
  M flats;
  auto add = [&](const M& x) {
    const Row f = flat(x);
    if (!flats.empty() && in_span(flats, f, p)) return false;
    if (flats.empty() && rank(M{f}, p) == 0) return false;
    flats.push_back(f);
    basis.push_back(x);
    return true;
  };
  add(identity(m));
  for (const auto& g : gens) add(g);
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = basis.size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) grew = add(mul(basis[i], basis[j], p)) || grew;
  }
  return basis;
}

// x * y from the structure constants.
inline Row alg_mul(const assocloc::Algebra& a, const Row& x, const Row& y) {
  const long long p = a.field().p();
  const std::size_t n = a.dim();
  Row out(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long long c = x[i] * y[j] % p;
      if (!c) continue;
      for (std::size_t k = 0; k < n; ++k) out[k] = md(out[k] + c * a.product(i, j)[k], p);
    }
  return out;
}

inline bool alg_is_unit(const assocloc::Algebra& a, const Row& x) {
  const std::size_t n = a.dim();
  M r(n);
  for (std::size_t i = 0; i < n; ++i) {
    Row e(n, 0);
    e[i] = 1;
    r[i] = alg_mul(a, e, x);
  }
  return rank(r, a.field().p()) == n;
}

inline Row row(const std::vector<assocloc::Elem>& v) { return Row(v.begin(), v.end()); }

}  // namespace naive

inline std::string corpus(const std::string& name) {
  return std::string(ASSOCLOC_CORPUS_DIR) + "/" + name;
}

inline const std::vector<std::string>& corpus_algebras() {
  static const std::vector<std::string> names = {
      "f2",   "f3",   "f2xf2", "f5xf5", "m2f2", "m2f3",   "m3f2", "ut2f2", "ut3f2", "f4",
      "f9",   "f2x2", "f3x2",  "f2x3",  "f3x3", "f3x2m1", "f2c2", "f3c3",  "f2c3",  "f2s3"};
  return names;
}

// Code of the assocloc::Error thrown by fn, or nullopt if none was thrown.
template <class Fn>
std::optional<assocloc::ErrorCode> thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const assocloc::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
