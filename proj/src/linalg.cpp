#include "gldirac/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace gldirac {

namespace {

// Dense integer working form of a rational matrix: each row multiplied by the
// lcm of its denominators.  Row scaling preserves rank, kernel and row space.
struct IntRows {
  std::vector<std::vector<Int>> a;
  std::vector<Int> scale;  // per original row
  int cols = 0;
};

IntRows clear_denominators(const RatMatrix& m) {
  IntRows w;
  w.cols = m.cols();
  w.a.assign(m.rows(), std::vector<Int>(m.cols(), Int(0)));
  w.scale.assign(m.rows(), Int(1));
  for (int r = 0; r < m.rows(); ++r) {
    Int l = 1;
    for (const auto& [c, v] : m.row(r)) l = lcm(l, Int(v.get_den()));
    w.scale[r] = l;
    for (const auto& [c, v] : m.row(r)) {
      Rat s = v * Rat(l);
      w.a[r][c] = s.get_num();  // exact: l kills the denominator
    }
  }
  return w;
}

struct BareissResult {
  std::vector<std::vector<Int>> rows;  // echelon, integer entries
  std::vector<int> pivot_col;          // per echelon row, increasing
  int rank = 0;
  int swap_sign = 1;
  std::vector<Int> row_scale;          // denominator clearing factors
};

// Fraction-free forward elimination.  Pivot choice inside the active column:
// minimal bit length, then smallest row index; this keeps runs reproducible
// and the echelon form canonical for a given input.
BareissResult bareiss(const RatMatrix& m) {
  IntRows w = clear_denominators(m);
  BareissResult res;
  res.row_scale = w.scale;
  const int nr = static_cast<int>(w.a.size());
  const int nc = w.cols;
  Int prev = 1;
  int top = 0;
  for (int col = 0; col < nc && top < nr; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = top; r < nr; ++r) {
      if (w.a[r][col] == 0) continue;
      std::size_t bl = bit_length(w.a[r][col]);
      if (pivot < 0 || bl < best) {
        pivot = r;
        best = bl;
      }
    }
    if (pivot < 0) continue;
    if (pivot != top) {
      std::swap(w.a[pivot], w.a[top]);
      res.swap_sign = -res.swap_sign;
    }
    const Int p = w.a[top][col];
    for (int r = top + 1; r < nr; ++r) {
      const Int f = w.a[r][col];
      for (int c = col; c < nc; ++c) {
        Int t = w.a[r][c] * p - f * w.a[top][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        w.a[r][c] = t;
      }
    }
    res.pivot_col.push_back(col);
    prev = p;
    ++top;
  }
  res.rank = top;
  res.rows.assign(w.a.begin(), w.a.begin() + top);
  return res;
}

std::vector<Rat> eval_free_column(const BareissResult& e, int free_col, int nc,
                                  const std::vector<int>& is_pivot) {
  // Back-substitute x_{free_col} = 1, other free variables 0.
  std::vector<Rat> x(nc, Rat(0));
  x[free_col] = 1;
  for (int i = e.rank - 1; i >= 0; --i) {
    const int pc = e.pivot_col[i];
    Rat s = 0;
    for (int c = pc + 1; c < nc; ++c)
      if (e.rows[i][c] != 0 && x[c] != 0) s += Rat(e.rows[i][c]) * x[c];
    x[pc] = -s / Rat(e.rows[i][pc]);
  }
  (void)is_pivot;
  return x;
}

std::vector<Rat> poly_mul_linear(const std::vector<Rat>& p, const Rat& root) {
  // p(x) * (x - root)
  std::vector<Rat> q(p.size() + 1, Rat(0));
  for (std::size_t i = 0; i < p.size(); ++i) {
    q[i + 1] += p[i];
    q[i] -= root * p[i];
  }
  return q;
}

Rat poly_eval(const std::vector<Rat>& p, const Rat& x) {
  Rat v = 0;
  for (std::size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// p(x) / (x - root), exact; pre: p(root) == 0.
std::vector<Rat> poly_deflate(const std::vector<Rat>& p, const Rat& root) {
  std::vector<Rat> q(p.size() - 1, Rat(0));
  Rat carry = 0;
  for (std::size_t i = p.size(); i-- > 1;) {
    carry = p[i] + carry * root;
    q[i - 1] = carry;
  }
  return q;
}

// Positive divisors via trial division.  Intended for the modest constants
// that arise from Casimir spectra; bails out with what it has if a huge prime
// cofactor survives (the cofactor itself is still offered as a divisor).
std::vector<Int> divisors(Int n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Int, int>> fac;
  Int d = 2;
  while (d * d <= n && d < 1000000) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<Int> out{Int(1)};
  for (const auto& [p, e] : fac) {
    const std::size_t base = out.size();
    Int pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Echelon echelon(const RatMatrix& a) {
  BareissResult e = bareiss(a);
  return Echelon{e.rank, e.pivot_col};
}

int rank(const RatMatrix& a) { return bareiss(a).rank; }

Subspace kernel(const RatMatrix& a) {
  BareissResult e = bareiss(a);
  const int nc = a.cols();
  std::vector<int> is_pivot(nc, 0);
  for (int c : e.pivot_col) is_pivot[c] = 1;
  RatMatrix basis(nc, nc - e.rank);
  int j = 0;
  for (int c = 0; c < nc; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rat> x = eval_free_column(e, c, nc, is_pivot);
    for (int r = 0; r < nc; ++r)
      if (x[r] != 0) basis.set(r, j, x[r]);
    ++j;
  }
  return Subspace{nc, basis};
}

Subspace column_space(const RatMatrix& a) {
  Echelon e = echelon(a);
  return Subspace{a.rows(), a.columns(e.pivot_cols)};
}

RatMatrix canonical_basis(const Subspace& s) {
  RowReduced rr = rref(s.basis.transpose());
  std::vector<int> keep(rr.rank);
  for (int i = 0; i < rr.rank; ++i) keep[i] = i;
  std::vector<int> cols(rr.r.cols());
  for (int c = 0; c < rr.r.cols(); ++c) cols[c] = c;
  return rr.r.submatrix(keep, cols).transpose();
}

bool in_span(const Subspace& s, const RatMatrix& vectors) {
  if (s.ambient != vectors.rows())
    throw std::invalid_argument("in_span: ambient mismatch");
  return rank(RatMatrix::hstack(s.basis, vectors)) == s.dim();
}

bool subspace_eq(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient) return false;
  return a.dim() == b.dim() && in_span(a, b.basis);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("intersect: ambient mismatch");
  Subspace k = kernel(RatMatrix::hstack(a.basis, b.basis.scaled(-1)));
  std::vector<int> top(a.dim());
  for (int i = 0; i < a.dim(); ++i) top[i] = i;
  std::vector<int> all(k.dim());
  for (int i = 0; i < k.dim(); ++i) all[i] = i;
  return Subspace{a.ambient, a.basis * k.basis.submatrix(top, all)};
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient != b.ambient)
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  return column_space(RatMatrix::hstack(a.basis, b.basis));
}

Subspace quotient_basis(const Subspace& whole, const Subspace& sub) {
  if (whole.ambient != sub.ambient)
    throw std::invalid_argument("quotient_basis: ambient mismatch");
  if (!in_span(whole, sub.basis))
    throw std::invalid_argument("quotient_basis: sub not contained in whole");
  Echelon e = echelon(RatMatrix::hstack(sub.basis, whole.basis));
  std::vector<int> reps;
  for (int c : e.pivot_cols)
    if (c >= sub.dim()) reps.push_back(c - sub.dim());
  if (static_cast<int>(reps.size()) != whole.dim() - sub.dim())
    throw std::logic_error("quotient_basis: dimension bookkeeping failed");
  return Subspace{whole.ambient, whole.basis.columns(reps)};
}

bool solve(const RatMatrix& a, const RatMatrix& b, RatMatrix* x) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: shape mismatch");
  RowReduced rr = rref(RatMatrix::hstack(a, b));
  int apivots = 0;
  for (int c : rr.pivot_cols) {
    if (c >= a.cols()) return false;  // pivot in the augmented part
    ++apivots;
  }
  if (apivots != a.cols())
    throw std::invalid_argument("solve: columns of a are dependent");
  RatMatrix out(a.cols(), b.cols());
  for (int i = 0; i < rr.rank; ++i) {
    const int var = rr.pivot_cols[i];
    for (const auto& [c, v] : rr.r.row(i))
      if (c >= a.cols()) out.set(var, c - a.cols(), v);
  }
  if (x) *x = out;
  return true;
}

Rat det(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("det: non-square");
  if (a.rows() == 0) return 1;
  BareissResult e = bareiss(a);
  if (e.rank < a.rows()) return 0;
  Rat d(e.rows[a.rows() - 1][a.cols() - 1]);
  d *= e.swap_sign;
  for (const Int& s : e.row_scale) d /= Rat(s);
  return d;
}

std::vector<Rat> symmetric_pivots(const RatMatrix& g) {
  if (g.rows() != g.cols())
    throw std::invalid_argument("symmetric_pivots: non-square");
  if (g != g.transpose())
    throw std::invalid_argument("symmetric_pivots: not symmetric");
  const int n = g.rows();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n, Rat(0)));
  for (int r = 0; r < n; ++r)
    for (const auto& [c, v] : g.row(r)) a[r][c] = v;
  std::vector<Rat> pivots;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int j = -1;
      for (int c = k + 1; c < n && j < 0; ++c)
        if (a[c][c] != 0) j = c;
      if (j >= 0) {
        std::swap(a[k], a[j]);
        for (int r = 0; r < n; ++r) std::swap(a[r][k], a[r][j]);
      } else {
        for (int c = k + 1; c < n && j < 0; ++c)
          if (a[k][c] != 0) j = c;
        if (j < 0) {
          pivots.push_back(0);  // whole row (and column) is zero
          continue;
        }
        // Zero diagonal block: e_k += e_j makes the corner 2*a[k][j] != 0.
        for (int c = 0; c < n; ++c) a[k][c] += a[j][c];
        for (int r = 0; r < n; ++r) a[r][k] += a[r][j];
      }
    }
    const Rat p = a[k][k];
    pivots.push_back(p);
    for (int r = k + 1; r < n; ++r) {
      if (a[r][k] == 0) continue;
      const Rat f = a[r][k] / p;
      for (int c = k; c < n; ++c) a[r][c] -= f * a[k][c];
    }
    for (int r = k + 1; r < n; ++r) {
      if (a[k][r] == 0) continue;
      const Rat f = a[k][r] / p;
      for (int c = k; c < n; ++c) a[c][r] -= f * a[c][k];
    }
  }
  return pivots;
}

std::vector<Rat> charpoly(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("charpoly: non-square");
  const int n = a.rows();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMatrix m = RatMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    m = a * m;
    Rat ck = -m.trace() / k;
    c[n - k] = ck;
    for (int i = 0; i < n; ++i) m.add_to(i, i, ck);
  }
  return c;
}

std::vector<std::pair<Rat, int>> rational_roots(const std::vector<Rat>& poly) {
  std::vector<Rat> p = poly;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw std::invalid_argument("rational_roots: zero polynomial");
  std::vector<std::pair<Rat, int>> out;
  int zero_mult = 0;
  while (p.size() > 1 && p[0] == 0) {
    p.erase(p.begin());
    ++zero_mult;
  }
  if (zero_mult > 0) out.emplace_back(Rat(0), zero_mult);
  if (p.size() > 1) {
    // Clear denominators; candidates num/den from constant and leading terms.
    Int l = 1;
    for (const Rat& q : p) l = lcm(l, Int(q.get_den()));
    std::vector<Int> ip(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) ip[i] = Rat(p[i] * Rat(l)).get_num();
    for (const Int& num : divisors(ip.front()))
      for (const Int& den : divisors(ip.back())) {
        for (int s : {1, -1}) {
          Rat cand(num * s, den);
          cand.canonicalize();
          if (poly_eval(p, cand) != 0) continue;
          int mult = 0;
          while (p.size() > 1 && poly_eval(p, cand) == 0) {
            p = poly_deflate(p, cand);
            ++mult;
          }
          out.emplace_back(cand, mult);
        }
        if (p.size() <= 1) break;
      }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  return out;
}

std::vector<std::pair<Rat, int>> rational_eigenvalues(const RatMatrix& a) {
  std::vector<std::pair<Rat, int>> roots = rational_roots(charpoly(a));
  int total = 0;
  for (const auto& [r, m] : roots) total += m;
  if (total != a.rows())
    throw std::domain_error("rational_eigenvalues: irrational eigenvalue present");
  return roots;
}

RowReduced rref(const RatMatrix& a) {
  const int nr = a.rows(), nc = a.cols();
  std::vector<std::vector<Rat>> w(nr, std::vector<Rat>(nc, Rat(0)));
  for (int r = 0; r < nr; ++r)
    for (const auto& [c, v] : a.row(r)) w[r][c] = v;
  RowReduced out;
  int top = 0;
  for (int col = 0; col < nc && top < nr; ++col) {
    int pivot = -1;
    std::size_t best = 0;
    for (int r = top; r < nr; ++r) {
      if (w[r][col] == 0) continue;
      std::size_t bl = bit_length(w[r][col]);
      if (pivot < 0 || bl < best) {
        pivot = r;
        best = bl;
      }
    }
    if (pivot < 0) continue;
    std::swap(w[pivot], w[top]);
    const Rat p = w[top][col];
    for (int c = col; c < nc; ++c) w[top][c] /= p;
    for (int r = 0; r < nr; ++r) {
      if (r == top || w[r][col] == 0) continue;
      const Rat f = w[r][col];
      for (int c = col; c < nc; ++c) w[r][c] -= f * w[top][c];
    }
    out.pivot_cols.push_back(col);
    ++top;
  }
  out.rank = top;
  out.r = RatMatrix::from_rows(w);
  return out;
}

}  // namespace gldirac
