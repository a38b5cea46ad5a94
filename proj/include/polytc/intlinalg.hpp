#pragma once

// Exact integer matrix and lattice computations: Hermite and Smith normal
// forms, affine congruence solving, and quasi-unipotence tests. All entries
// are arbitrary-precision integers; vectors act on the left (x*A), so
// lattices are row spans throughout.

#include <gmpxx.h>

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polytc {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;

class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (auto& r : init) {
      if (r.size() != cols_) throw std::invalid_argument("ragged matrix");
      for (long v : r) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static IntMatrix from_rows(std::vector<IntVec> rows) {
    IntMatrix m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows.front().size();
    m.data_.reserve(m.rows_ * m.cols_);
    for (auto& r : rows) {
      if (r.size() != m.cols_) throw std::invalid_argument("ragged matrix");
      for (auto& v : r) m.data_.push_back(std::move(v));
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  IntVec row(std::size_t i) const {
    return IntVec(data_.begin() + static_cast<long>(i * cols_),
                  data_.begin() + static_cast<long>((i + 1) * cols_));
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c)
      std::swap((*this)(i, c), (*this)(j, c));
  }
  // row i += f * row j
  void add_row(std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += f * (*this)(j, c);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c)
      (*this)(i, c) = -(*this)(i, c);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r)
      std::swap((*this)(r, i), (*this)(r, j));
  }
  void add_col(std::size_t i, std::size_t j, const Int& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += f * (*this)(r, j);
  }
  void negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r)
      (*this)(r, i) = -(*this)(r, i);
  }

  bool is_zero_row(std::size_t i) const {
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(i, c) != 0) return false;
    return true;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> data_;
};

inline IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dim mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline IntVec operator*(const IntVec& x, const IntMatrix& a) {
  if (x.size() != a.rows()) throw std::invalid_argument("vector dim mismatch");
  IntVec y(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) y[j] += x[i] * a(i, j);
  }
  return y;
}

inline int cmpabs(const Int& a, const Int& b) {
  return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t());
}

// floor division: q = floor(a/b), b != 0
inline Int fdiv(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}
inline Int fmod(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

struct HnfResult {
  IntMatrix h;  // row Hermite normal form
  IntMatrix u;  // unimodular, u * m == h
  std::vector<std::size_t> pivot_cols;  // one per nonzero row of h, increasing
};

// Row Hermite normal form: positive pivots, entries above each pivot reduced
// into [0, pivot), zero rows last.
inline HnfResult hnf(const IntMatrix& m) {
  HnfResult res{m, IntMatrix::identity(m.rows()), {}};
  IntMatrix& h = res.h;
  IntMatrix& u = res.u;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    // gcd-eliminate column c among rows >= r
    for (;;) {
      std::size_t best = m.rows();
      for (std::size_t k = r; k < m.rows(); ++k) {
        if (h(k, c) == 0) continue;
        if (best == m.rows() || cmpabs(h(k, c), h(best, c)) < 0) best = k;
      }
      if (best == m.rows()) break;  // column clear below r
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool clean = true;
      for (std::size_t k = r + 1; k < m.rows(); ++k) {
        if (h(k, c) == 0) continue;
        Int q = fdiv(h(k, c), h(r, c));
        h.add_row(k, r, -q);
        u.add_row(k, r, -q);
        if (h(k, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(r, c) == 0) continue;
    if (h(r, c) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Int q = fdiv(h(k, c), h(r, c));
      h.add_row(k, r, -q);
      u.add_row(k, r, -q);
    }
    res.pivot_cols.push_back(c);
    ++r;
  }
  return res;
}

struct SnfResult {
  IntMatrix s;  // diagonal, d1 | d2 | ..., di >= 0
  IntMatrix u;  // unimodular
  IntMatrix v;  // unimodular, u * m * v == s
};

inline SnfResult snf(const IntMatrix& m) {
  SnfResult res{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols())};
  IntMatrix& s = res.s;
  IntMatrix& u = res.u;
  IntMatrix& v = res.v;
  std::size_t n = std::min(m.rows(), m.cols());
  for (std::size_t t = 0; t < n; ++t) {
    // move a minimal nonzero entry of the trailing block to (t,t)
    std::size_t pi = m.rows(), pj = 0;
    for (std::size_t i = t; i < m.rows(); ++i)
      for (std::size_t j = t; j < m.cols(); ++j)
        if (s(i, j) != 0 &&
            (pi == m.rows() || cmpabs(s(i, j), s(pi, pj)) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi == m.rows()) break;  // trailing block is zero
    s.swap_rows(t, pi);
    u.swap_rows(t, pi);
    s.swap_cols(t, pj);
    v.swap_cols(t, pj);
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Int q = fdiv(s(i, t), s(t, t));
        s.add_row(i, t, -q);
        u.add_row(i, t, -q);
        if (s(i, t) != 0) {
          s.swap_rows(t, i);
          u.swap_rows(t, i);
          dirty = true;
        }
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Int q = fdiv(s(t, j), s(t, t));
        s.add_col(j, t, -q);
        v.add_col(j, t, -q);
        if (s(t, j) != 0) {
          s.swap_cols(t, j);
          v.swap_cols(t, j);
          dirty = true;
        }
      }
      if (!dirty) break;
    }
    if (s(t, t) < 0) {
      s.negate_row(t);
      u.negate_row(t);
    }
    // divisibility: fold any non-multiple into the pivot and redo
    bool redo = false;
    for (std::size_t i = t + 1; i < m.rows() && !redo; ++i)
      for (std::size_t j = t + 1; j < m.cols() && !redo; ++j)
        if (s(i, j) % s(t, t) != 0) {
          s.add_row(t, i, 1);
          u.add_row(t, i, 1);
          redo = true;
        }
    if (redo) --t;
  }
  return res;
}

// Solutions of x*A == b with coordinate j of the product taken modulo
// moduli[j] (0 means exact equality over Z). Empty particular means no
// solution; otherwise lattice_basis generates all homogeneous solutions and
// is in Hermite form.
struct AffineSolutionSet {
  std::optional<IntVec> particular;
  std::vector<IntVec> lattice_basis;
};

inline AffineSolutionSet solve_affine(const IntMatrix& a, const IntVec& b,
                                      const IntVec& moduli) {
  if (b.size() != a.cols() || moduli.size() != a.cols())
    throw std::invalid_argument("solve_affine: dim mismatch");
  std::vector<IntVec> stacked;
  for (std::size_t i = 0; i < a.rows(); ++i) stacked.push_back(a.row(i));
  for (std::size_t j = 0; j < moduli.size(); ++j) {
    if (moduli[j] == 0) continue;
    IntVec e(a.cols());
    e[j] = moduli[j];
    stacked.push_back(std::move(e));
  }
  IntMatrix bm = IntMatrix::from_rows(std::move(stacked));
  HnfResult hr = hnf(bm);

  AffineSolutionSet out;
  // forward-substitute z * H = b
  IntVec residual = b;
  IntVec z(bm.rows());
  std::size_t piv = 0;
  bool ok = true;
  for (std::size_t c = 0; c < a.cols() && ok; ++c) {
    if (piv < hr.pivot_cols.size() && hr.pivot_cols[piv] == c) {
      Int q = residual[c] / hr.h(piv, c);
      if (q * hr.h(piv, c) != residual[c]) {
        ok = false;
        break;
      }
      z[piv] = q;
      for (std::size_t j = c; j < a.cols(); ++j)
        residual[j] -= q * hr.h(piv, j);
      ++piv;
    } else if (residual[c] != 0) {
      ok = false;
    }
  }
  if (ok) {
    IntVec w = z * hr.u;
    out.particular = IntVec(w.begin(), w.begin() + static_cast<long>(a.rows()));
  } else {
    return out;  // empty, no basis by contract
  }
  // homogeneous part: rows of U under zero rows of H, projected to x-coords
  std::vector<IntVec> hom;
  for (std::size_t i = hr.pivot_cols.size(); i < bm.rows(); ++i) {
    IntVec r = hr.u.row(i);
    hom.emplace_back(r.begin(), r.begin() + static_cast<long>(a.rows()));
  }
  if (!hom.empty()) {
    HnfResult canon = hnf(IntMatrix::from_rows(std::move(hom)));
    for (std::size_t i = 0; i < canon.pivot_cols.size(); ++i)
      out.lattice_basis.push_back(canon.h.row(i));
  }
  return out;
}

// ---- polynomial helpers (dense, lowest degree first) ----
namespace poly {

using Poly = std::vector<Int>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// exact division a / b; returns nullopt if not exact
inline std::optional<Poly> divide_exact(Poly a, const Poly& b) {
  trim(a);
  if (b.empty() || b.back() == 0) throw std::invalid_argument("poly div by 0");
  if (a.empty()) return Poly{};
  if (a.size() < b.size()) return std::nullopt;
  Poly q(a.size() - b.size() + 1);
  for (std::size_t i = q.size(); i-- > 0;) {
    Int top = a[i + b.size() - 1];
    if (top == 0) continue;
    if (top % b.back() != 0) return std::nullopt;
    Int f = top / b.back();
    q[i] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= f * b[j];
  }
  trim(a);
  if (!a.empty()) return std::nullopt;
  return q;
}

// characteristic polynomial of a square matrix, monic, via Faddeev-LeVerrier
inline Poly charpoly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("charpoly: not square");
  std::size_t n = m.rows();
  // p(x) = x^n + c1 x^{n-1} + ... + cn
  std::vector<Int> c(n + 1);
  c[0] = 1;
  IntMatrix mk = m;
  for (std::size_t k = 1; k <= n; ++k) {
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    c[k] = -tr / Int(static_cast<long>(k));
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += c[k];
    mk = m * mk;
  }
  Poly p(n + 1);
  for (std::size_t k = 0; k <= n; ++k) p[n - k] = c[k];
  return p;
}

inline unsigned long euler_phi(unsigned long d) {
  unsigned long result = d, x = d;
  for (unsigned long p = 2; p * p <= x; ++p)
    if (x % p == 0) {
      result -= result / p;
      while (x % p == 0) x /= p;
    }
  if (x > 1) result -= result / x;
  return result;
}

// cyclotomic polynomial Phi_d via x^d - 1 = prod_{e | d} Phi_e
inline Poly cyclotomic(unsigned long d) {
  Poly num(d + 1);
  num[0] = -1;
  num[d] = 1;
  for (unsigned long e = 1; e < d; ++e) {
    if (d % e != 0) continue;
    auto q = divide_exact(num, cyclotomic(e));
    num = std::move(*q);
  }
  return num;
}

}  // namespace poly

// True iff every eigenvalue of the square matrix is a root of unity, decided
// exactly: the characteristic polynomial must be a product of cyclotomic
// polynomials Phi_d with phi(d) <= n.
inline bool is_quasi_unipotent(const IntMatrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("is_quasi_unipotent: not square");
  std::size_t n = m.rows();
  if (n == 0) return true;
  poly::Poly f = poly::charpoly(m);
  for (unsigned long d = 1; d <= 2 * n * n + 4; ++d) {
    if (poly::euler_phi(d) > n) continue;
    poly::Poly phi = poly::cyclotomic(d);
    for (;;) {
      auto q = poly::divide_exact(f, phi);
      if (!q) break;
      f = std::move(*q);
      if (f.size() <= 1) return true;  // constant 1 (monic)
    }
  }
  return f.size() <= 1;
}

// For a quasi-unipotent matrix: the least m0 >= 1 with M^m0 unipotent
// (lcm of the orders d of the cyclotomic factors).
inline std::optional<unsigned long> unipotent_power(const IntMatrix& m) {
  std::size_t n = m.rows();
  if (n == 0) return 1;
  poly::Poly f = poly::charpoly(m);
  unsigned long m0 = 1;
  for (unsigned long d = 1; d <= 2 * n * n + 4; ++d) {
    if (poly::euler_phi(d) > n) continue;
    poly::Poly phi = poly::cyclotomic(d);
    bool used = false;
    for (;;) {
      auto q = poly::divide_exact(f, phi);
      if (!q) break;
      f = std::move(*q);
      used = true;
    }
    if (used) m0 = std::lcm(m0, d);
    if (f.size() <= 1) return m0;
  }
  if (f.size() <= 1) return m0;
  return std::nullopt;  // not quasi-unipotent
}

}  // namespace polytc
