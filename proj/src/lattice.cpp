#include "ut4/lattice.hpp"

#include <stdexcept>
#include <utility>

namespace ut4 {

IntMat identity_matrix(size_t n) {
  IntMat m(n, IntVec(n, Int(0)));
  for (size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat transpose(const IntMat& m, size_t cols) {
  IntMat t(cols, IntVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

IntMat matmul(const IntMat& a, const IntMat& b, size_t inner, size_t cols) {
  IntMat r(a.size(), IntVec(cols, Int(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < inner; ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < cols; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

namespace {

void row_axpy(IntVec& dst, const IntVec& src, const Int& q) {
  // dst -= q * src
  for (size_t j = 0; j < dst.size(); ++j)
    if (!src[j].is_zero()) dst[j] -= q * src[j];
}

void row_neg(IntVec& r) {
  for (auto& x : r) x = -x;
}

}  // namespace

RowEchelon hnf(const IntMat& m, size_t cols, bool with_transform) {
  RowEchelon out;
  IntMat h = m;
  for (auto& r : h)
    if (r.size() != cols) throw std::invalid_argument("hnf: ragged matrix");
  const size_t rows = h.size();
  IntMat u = with_transform ? identity_matrix(rows) : IntMat{};
  size_t top = 0;
  for (size_t col = 0; col < cols && top < rows; ++col) {
    // Euclid on column col among rows top..rows-1.
    while (true) {
      size_t best = rows;
      for (size_t i = top; i < rows; ++i)
        if (!h[i][col].is_zero() && (best == rows || abs(h[i][col]) < abs(h[best][col])))
          best = i;
      if (best == rows) break;
      std::swap(h[top], h[best]);
      if (with_transform) std::swap(u[top], u[best]);
      bool done = true;
      for (size_t i = top + 1; i < rows; ++i) {
        if (h[i][col].is_zero()) continue;
        Int q = trunc_div(h[i][col], h[top][col]);
        row_axpy(h[i], h[top], q);
        if (with_transform) row_axpy(u[i], u[top], q);
        if (!h[i][col].is_zero()) done = false;
      }
      if (done) break;
    }
    if (h[top][col].is_zero()) continue;
    if (h[top][col].sign() < 0) {
      row_neg(h[top]);
      if (with_transform) row_neg(u[top]);
    }
    for (size_t i = 0; i < top; ++i) {
      Int q = floor_div(h[i][col], h[top][col]);
      if (q.is_zero()) continue;
      row_axpy(h[i], h[top], q);
      if (with_transform) row_axpy(u[i], u[top], q);
    }
    out.pivots.push_back(col);
    ++top;
  }
  out.rank = top;
  out.H = std::move(h);
  out.U = std::move(u);
  return out;
}

IntMat lattice_basis(const IntMat& m, size_t cols) {
  RowEchelon e = hnf(m, cols);
  e.H.resize(e.rank);
  return e.H;
}

IntMat left_kernel(const IntMat& m, size_t cols) {
  RowEchelon e = hnf(m, cols, true);
  IntMat k(e.U.begin() + static_cast<long>(e.rank), e.U.end());
  return lattice_basis(k, m.size());
}

IntMat lattice_intersection(const IntMat& a, const IntMat& b, size_t cols) {
  if (a.empty() || b.empty()) return {};
  IntMat stacked = a;
  stacked.insert(stacked.end(), b.begin(), b.end());
  IntMat k = left_kernel(stacked, cols);
  IntMat vecs;
  for (const auto& x : k) {
    IntVec v(cols, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
      if (!x[i].is_zero())
        for (size_t j = 0; j < cols; ++j) v[j] += x[i] * a[i][j];
    vecs.push_back(std::move(v));
  }
  return lattice_basis(vecs, cols);
}

IntMat saturation(const IntMat& m, size_t cols) {
  IntMat basis = lattice_basis(m, cols);
  if (basis.empty()) return basis;
  // Right kernel K of basis (as columns), then the left kernel of K.
  IntMat rk = left_kernel(transpose(basis, cols), basis.size());
  if (rk.empty()) return identity_matrix(cols);
  IntMat kt = transpose(rk, cols);  // cols x k
  return left_kernel(kt, rk.size());
}

bool lattice_coords(const IntMat& basis, const std::vector<size_t>& pivots, const IntVec& v,
                    IntVec& coords) {
  IntVec r = v;
  coords.assign(basis.size(), Int(0));
  for (size_t i = 0; i < basis.size(); ++i) {
    const size_t p = pivots[i];
    if (!divides(basis[i][p], r[p])) return false;
    Int q = exact_div(r[p], basis[i][p]);
    coords[i] = q;
    if (!q.is_zero()) row_axpy(r, basis[i], q);
  }
  for (const auto& x : r)
    if (!x.is_zero()) return false;
  return true;
}

Int lattice_index(const IntMat& super, const IntMat& sub, size_t cols) {
  RowEchelon a = hnf(super, cols), b = hnf(sub, cols);
  if (a.rank != b.rank) return 0;
  // |det| of the sub basis written in super coordinates.
  Int db = 1;
  IntMat coords;
  for (size_t i = 0; i < b.rank; ++i) {
    IntVec c;
    if (!lattice_coords(a.H, a.pivots, b.H[i], c)) throw std::invalid_argument("not a sublattice");
    c.resize(a.rank);
    coords.push_back(std::move(c));
  }
  RowEchelon e = hnf(coords, a.rank);
  for (size_t i = 0; i < e.rank; ++i) db *= e.H[i][e.pivots[i]];
  return db;
}

Smith smith(const IntMat& m, size_t rows, size_t cols) {
  Smith s;
  IntMat d = m;
  IntMat p = identity_matrix(rows), q = identity_matrix(cols);
  size_t t = 0;
  while (t < rows && t < cols) {
    // Find a nonzero entry of minimal absolute value in the trailing block.
    size_t bi = rows, bj = cols;
    for (size_t i = t; i < rows; ++i)
      for (size_t j = t; j < cols; ++j)
        if (!d[i][j].is_zero() && (bi == rows || abs(d[i][j]) < abs(d[bi][bj]))) {
          bi = i;
          bj = j;
        }
    if (bi == rows) break;
    std::swap(d[t], d[bi]);
    std::swap(p[t], p[bi]);
    for (size_t i = 0; i < rows; ++i) std::swap(d[i][t], d[i][bj]);
    for (size_t i = 0; i < cols; ++i) std::swap(q[i][t], q[i][bj]);
    bool clean = true;
    for (size_t i = t + 1; i < rows; ++i) {
      if (d[i][t].is_zero()) continue;
      Int k = trunc_div(d[i][t], d[t][t]);
      row_axpy(d[i], d[t], k);
      row_axpy(p[i], p[t], k);
      if (!d[i][t].is_zero()) clean = false;
    }
    for (size_t j = t + 1; j < cols; ++j) {
      if (d[t][j].is_zero()) continue;
      Int k = trunc_div(d[t][j], d[t][t]);
      for (size_t i = 0; i < rows; ++i) d[i][j] -= k * d[i][t];
      for (size_t i = 0; i < cols; ++i) q[i][j] -= k * q[i][t];
      if (!d[t][j].is_zero()) clean = false;
    }
    if (!clean) continue;
    // Enforce divisibility of the trailing block by the pivot.
    bool fixed = false;
    for (size_t i = t + 1; i < rows && !fixed; ++i)
      for (size_t j = t + 1; j < cols && !fixed; ++j)
        if (!divides(d[t][t], d[i][j])) {
          // add row i to row t
          for (size_t c = 0; c < cols; ++c) d[t][c] += d[i][c];
          for (size_t c = 0; c < rows; ++c) p[t][c] += p[i][c];
          fixed = true;
        }
    if (fixed) continue;
    if (d[t][t].sign() < 0) {
      row_neg(d[t]);
      row_neg(p[t]);
    }
    ++t;
  }
  s.P = std::move(p);
  s.Q = std::move(q);
  s.D = d;
  for (size_t i = 0; i < rows && i < cols; ++i) s.diag.push_back(d[i][i]);
  return s;
}

IntVec reduce_mod(const IntMat& basis, const std::vector<size_t>& pivots, IntVec v) {
  for (size_t i = 0; i < basis.size(); ++i) {
    const size_t p = pivots[i];
    Int q = floor_div(v[p], basis[i][p]);
    if (!q.is_zero()) row_axpy(v, basis[i], q);
  }
  return v;
}

}  // namespace ut4
