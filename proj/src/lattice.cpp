#include "weyl27/lattice.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>
#include <stdexcept>
#include <utility>

namespace weyl27 {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

namespace {

Int checked_neg(Int a) {
  if (a == std::numeric_limits<Int>::min()) throw std::overflow_error("integer overflow in negation");
  return -a;
}


}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<Int>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c)
    (*this)(dst, c) = checked_add((*this)(dst, c), checked_mul(k, (*this)(src, c)));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Int k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r)
    (*this)(r, dst) = checked_add((*this)(r, dst), checked_mul(k, (*this)(r, src)));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = checked_neg((*this)(r, c));
}

void IntMatrix::negate_col(std::size_t c) {
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = checked_neg((*this)(r, c));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  IntMatrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Int aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) p(i, j) = checked_add(p(i, j), checked_mul(aik, b(k, j)));
    }
  return p;
}

IntVector operator*(const IntVector& x, const IntMatrix& m) {
  if (x.size() != m.rows()) throw std::invalid_argument("vector-matrix dimension mismatch");
  IntVector y(m.cols(), 0);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) y[j] = checked_add(y[j], checked_mul(x[k], m(k, j)));
  }
  return y;
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        const Int num = checked_add(checked_mul(a(i, j), a(k, k)), checked_neg(checked_mul(a(i, k), a(k, j))));
        a(i, j) = num / prev;  // exact by Sylvester's identity
      }
    prev = a(k, k);
  }
  return checked_mul(sign, a(n - 1, n - 1));
}

std::size_t rank(const IntMatrix& m) { return smith_normal_form(m).rank; }

std::string to_json(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) os << ',';
      os << m(r, c);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

GramLattice::GramLattice(IntMatrix g) : rank(g.rows()), gram(std::move(g)) {
  if (!gram.is_symmetric()) throw std::invalid_argument("Gram matrix must be square and symmetric");
}

Int inner_product(const IntVector& x, const IntVector& y, const GramLattice& lattice) {
  if (x.size() != lattice.rank || y.size() != lattice.rank)
    throw std::invalid_argument("inner_product: vector length does not match lattice rank");
  Int total = 0;
  for (std::size_t i = 0; i < lattice.rank; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < lattice.rank; ++j) {
      const Int g = lattice.gram(i, j);
      if (g == 0 || y[j] == 0) continue;
      total = checked_add(total, checked_mul(checked_mul(x[i], g), y[j]));
    }
  }
  return total;
}

IntVector SNFResult::elementary_divisors() const {
  IntVector out;
  for (std::size_t i = 0; i < rank; ++i) out.push_back(d(i, i));
  return out;
}

namespace {

// The Smith and Hermite reductions run on 128-bit entries: intermediate
// values can exceed 64 bits even when the results do not. Results are
// narrowed back with an overflow check.
using Wide = __int128;

[[noreturn]] void wide_overflow() { throw std::overflow_error("integer overflow in lattice reduction"); }

Wide wide_add(Wide a, Wide b) {
  Wide r;
  if (__builtin_add_overflow(a, b, &r)) wide_overflow();
  return r;
}

Wide wide_mul(Wide a, Wide b) {
  Wide r;
  if (__builtin_mul_overflow(a, b, &r)) wide_overflow();
  return r;
}

Wide wide_abs(Wide a) { return a < 0 ? -a : a; }

// Rounded to nearest, so remainders satisfy |r| <= |p| / 2.
Wide nearest_quotient(Wide x, Wide p) {
  Wide q = x / p;
  const Wide r = x - q * p;
  if (2 * wide_abs(r) > wide_abs(p)) q += ((r < 0) == (p < 0)) ? 1 : -1;
  return q;
}

Wide wide_floor_div(Wide a, Wide b) {
  Wide q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// x * a + y * b = g > 0 with |y| as small as the solution set allows.
void extended_gcd(Wide a, Wide b, Wide& g, Wide& x, Wide& y) {
  Wide r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    const Wide q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, wide_add(s0, -wide_mul(q, s1)));
    std::tie(t0, t1) = std::make_pair(t1, wide_add(t0, -wide_mul(q, t1)));
  }
  if (r0 < 0) {
    r0 = -r0;
    s0 = -s0;
    t0 = -t0;
  }
  g = r0;
  x = s0;
  y = t0;
  // Shift along the solution line (x + k b/g, y - k a/g) to minimise |y|.
  if (a != 0) {
    const Wide step = a / g;
    const Wide k = nearest_quotient(y, step);
    y = wide_add(y, -wide_mul(k, step));
    x = wide_add(x, wide_mul(k, b / g));
  }
}

class WideMatrix {
 public:
  explicit WideMatrix(const IntMatrix& m) : rows_(m.rows()), cols_(m.cols()), data_(rows_ * cols_) {
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = m(i, j);
  }
  static WideMatrix identity(std::size_t n) { return WideMatrix(IntMatrix::identity(n)); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Wide& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Wide operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  WideMatrix transpose() const {
    WideMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  IntMatrix narrow() const {
    IntMatrix m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        const Wide x = (*this)(i, j);
        if (x > std::numeric_limits<Int>::max() || x < std::numeric_limits<Int>::min()) wide_overflow();
        m(i, j) = static_cast<Int>(x);
      }
    return m;
  }

  Wide max_abs() const {
    Wide m = 0;
    for (Wide x : data_) m = std::max(m, wide_abs(x));
    return m;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  void add_row_multiple(std::size_t dst, std::size_t src, Wide k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) = wide_add((*this)(dst, c), wide_mul(k, (*this)(src, c)));
  }
  void add_col_multiple(std::size_t dst, std::size_t src, Wide k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) = wide_add((*this)(r, dst), wide_mul(k, (*this)(r, src)));
  }
  void negate_row(std::size_t r) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
  }
  // (row a, row b) <- (p row a + q row b, r row a + s row b)
  void combine_rows(std::size_t a, std::size_t b, Wide p, Wide q, Wide r, Wide s) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Wide x = (*this)(a, c), y = (*this)(b, c);
      (*this)(a, c) = wide_add(wide_mul(p, x), wide_mul(q, y));
      (*this)(b, c) = wide_add(wide_mul(r, x), wide_mul(s, y));
    }
  }
  // (col a, col b) <- (p col a + q col b, r col a + s col b)
  void combine_cols(std::size_t a, std::size_t b, Wide p, Wide q, Wide r, Wide s) {
    for (std::size_t i = 0; i < rows_; ++i) {
      const Wide x = (*this)(i, a), y = (*this)(i, b);
      (*this)(i, a) = wide_add(wide_mul(p, x), wide_mul(q, y));
      (*this)(i, b) = wide_add(wide_mul(r, x), wide_mul(s, y));
    }
  }

 private:
  WideMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows_;
  std::size_t cols_;
  std::vector<Wide> data_;
};

// Row Hermite form in place, applying the same row operations to *u when
// given. Returns the number of nonzero rows, which come first.
std::size_t hnf_in_place(WideMatrix& h, WideMatrix* u) {
  const std::size_t rows = h.rows();
  const std::size_t cols = h.cols();
  auto add = [&](std::size_t dst, std::size_t src, Wide k) {
    h.add_row_multiple(dst, src, k);
    if (u) u->add_row_multiple(dst, src, k);
  };
  std::size_t cur = 0;
  for (std::size_t c = 0; c < cols && cur < rows; ++c) {
    // Euclid on column c over rows cur.. until a single nonzero remains.
    for (;;) {
      std::size_t piv = rows;
      for (std::size_t r = cur; r < rows; ++r)
        if (h(r, c) != 0 && (piv == rows || wide_abs(h(r, c)) < wide_abs(h(piv, c)))) piv = r;
      if (piv == rows) break;
      h.swap_rows(cur, piv);
      if (u) u->swap_rows(cur, piv);
      bool done = true;
      for (std::size_t r = cur + 1; r < rows; ++r) {
        if (h(r, c) == 0) continue;
        add(r, cur, -nearest_quotient(h(r, c), h(cur, c)));
        if (h(r, c) != 0) done = false;
      }
      if (done) break;
    }
    if (h(cur, c) == 0) continue;
    if (h(cur, c) < 0) {
      h.negate_row(cur);
      if (u) u->negate_row(cur);
    }
    const Wide p = h(cur, c);
    for (std::size_t r = 0; r < cur; ++r) add(r, cur, -wide_floor_div(h(r, c), p));
    ++cur;
  }
  return cur;
}

// Replace rows [first, rows) of u by their Hermite basis and size-reduce
// rows [0, first) against it.
void reduce_tail_rows(WideMatrix& u, std::size_t first) {
  if (first >= u.rows()) return;
  const std::size_t k = u.rows() - first;
  IntMatrix shape(k, u.cols());
  WideMatrix tail(shape);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) tail(i, j) = u(first + i, j);
  hnf_in_place(tail, nullptr);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) u(first + i, j) = tail(i, j);
  for (std::size_t kr = first; kr < u.rows(); ++kr) {
    std::size_t pc = 0;
    while (pc < u.cols() && u(kr, pc) == 0) ++pc;
    if (pc == u.cols()) continue;
    for (std::size_t i = 0; i < first; ++i) u.add_row_multiple(i, kr, -nearest_quotient(u(i, pc), u(kr, pc)));
  }
}

}  // namespace

namespace {

SNFResult smith_reduce(const IntMatrix& a) {
  WideMatrix d(a);
  WideMatrix u = WideMatrix::identity(a.rows());
  WideMatrix v = WideMatrix::identity(a.cols());
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();

  // Column Hermite form, then clear what lies below each pivot modulo that
  // pivot. The elimination below then starts from small, nearly diagonal
  // entries instead of raw ones, which keeps u and v from swelling.
  {
    WideMatrix dt = d.transpose();
    WideMatrix vt = v.transpose();
    hnf_in_place(dt, &vt);
    d = dt.transpose();
    v = vt.transpose();
    std::vector<std::size_t> pivot_row;
    for (std::size_t j = 0; j < cols; ++j) {
      std::size_t i = 0;
      while (i < rows && d(i, j) == 0) ++i;
      if (i == rows) break;
      pivot_row.push_back(i);
    }
    for (std::size_t j = pivot_row.size(); j-- > 0;) {
      const std::size_t p = pivot_row[j];
      for (std::size_t i = p + 1; i < rows; ++i) {
        const Wide q = wide_floor_div(d(i, j), d(p, j));
        d.add_row_multiple(i, p, -q);
        u.add_row_multiple(i, p, -q);
      }
    }
  }

  // Diagonalise. Pivot: smallest nonzero |entry| in the trailing block,
  // lowest (row, col) on ties.
  std::size_t rank = 0;
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool found = false;
    for (;;) {
      std::size_t pr = rows, pc = cols;
      Wide best = 0;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          const Wide x = wide_abs(d(i, j));
          if (x != 0 && (best == 0 || x < best)) {
            best = x;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) break;
      found = true;
      d.swap_rows(t, pr);
      u.swap_rows(t, pr);
      d.swap_cols(t, pc);
      v.swap_cols(t, pc);

      const Wide p = d(t, t);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Wide q = nearest_quotient(d(i, t), p);
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Wide q = nearest_quotient(d(t, j), p);
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (!found) break;
    if (d(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
    rank = t + 1;
  }

  // Divisibility chain on the diagonal: (d_i, d_j) -> (gcd, lcm), folding
  // everything into the last entry first so each large entry is combined
  // as few times as possible.
  for (std::size_t j = rank; j-- > 1;)
    for (std::size_t i = j; i-- > 0;) {
      const Wide di = d(i, i), dj = d(j, j);
      if (dj % di == 0) continue;
      Wide g, x, y;
      extended_gcd(di, dj, g, x, y);
      const Wide ai = di / g, bj = dj / g;
      // U diag(di, dj) V = diag(g, di dj / g) for
      //   U = [[x, y], [-bj, ai]],  V = [[1, -y bj], [1, x ai]]
      // and for the mirrored pair (V^T, U^T). Take whichever keeps u and v smaller.
      const Wide ybj = wide_mul(-y, bj), xai = wide_mul(x, ai);
      WideMatrix u1 = u, v1 = v;
      u1.combine_rows(i, j, x, y, -bj, ai);
      v1.combine_cols(i, j, 1, 1, ybj, xai);
      WideMatrix u2 = u, v2 = v;
      u2.combine_rows(i, j, 1, 1, ybj, xai);
      v2.combine_cols(i, j, x, y, -bj, ai);
      if (std::max(u2.max_abs(), v2.max_abs()) < std::max(u1.max_abs(), v1.max_abs())) {
        u = std::move(u2);
        v = std::move(v2);
      } else {
        u = std::move(u1);
        v = std::move(v1);
      }
      d(i, i) = g;
      d(j, j) = wide_mul(di, bj);
    }

  reduce_tail_rows(u, rank);
  WideMatrix vt = v.transpose();
  reduce_tail_rows(vt, rank);
  v = vt.transpose();

  SNFResult res;
  res.d = d.narrow();
  res.u = u.narrow();
  res.v = v.narrow();
  res.rank = rank;
  return res;
}

}  // namespace

SNFResult smith_normal_form(const IntMatrix& a) {
  try {
    return smith_reduce(a);
  } catch (const std::overflow_error&) {
    // The two sides grow differently; v^T a^T u^T = d^T gives the same form.
    SNFResult t = smith_reduce(a.transpose());
    SNFResult res;
    res.d = t.d.transpose();
    res.u = t.v.transpose();
    res.v = t.u.transpose();
    res.rank = t.rank;
    return res;
  }
}

IntMatrix hermite_normal_form(const IntMatrix& m) {
  WideMatrix h(m);
  const std::size_t nonzero = hnf_in_place(h, nullptr);
  const IntMatrix full = h.narrow();
  IntMatrix out(nonzero, m.cols());
  for (std::size_t r = 0; r < nonzero; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = full(r, c);
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  SNFResult snf = smith_normal_form(m);
  if (snf.d != IntMatrix::identity(m.rows())) throw std::invalid_argument("matrix is not unimodular");
  // u m v = 1  =>  m^-1 = v u
  return snf.v * snf.u;
}

std::vector<IntVector> left_kernel(const IntMatrix& m) {
  SNFResult snf = smith_normal_form(m);
  // x m = 0  <=>  (x u^-1) d = 0, so the trailing rows of u span the kernel.
  IntMatrix tail(m.rows() - snf.rank, m.rows());
  for (std::size_t r = snf.rank; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.rows(); ++c) tail(r - snf.rank, c) = snf.u(r, c);
  return hermite_normal_form(tail).row_list();
}

OrthogonalComplement orthogonal_complement(const std::vector<IntVector>& gens, const GramLattice& lattice) {
  for (const auto& g : gens)
    if (g.size() != lattice.rank) throw std::invalid_argument("orthogonal_complement: generator length mismatch");
  IntMatrix pairing = lattice.gram * IntMatrix::from_rows(gens, lattice.rank).transpose();

  OrthogonalComplement out;
  out.basis = left_kernel(pairing);
  const IntMatrix b = IntMatrix::from_rows(out.basis, lattice.rank);
  out.gram_restricted = b * lattice.gram * b.transpose();
  return out;
}

bool is_even(const IntMatrix& gram) {
  if (!gram.is_symmetric()) throw std::invalid_argument("is_even: Gram matrix must be symmetric");
  for (std::size_t i = 0; i < gram.rows(); ++i)
    if (gram(i, i) % 2 != 0) return false;
  return true;
}

CokernelInvariants cokernel_invariants(const IntMatrix& a, std::size_t target_rank) {
  if (a.rows() != target_rank) throw std::invalid_argument("cokernel_invariants: row count must equal target rank");
  const SNFResult snf = smith_normal_form(a);
  CokernelInvariants out;
  for (Int dv : snf.elementary_divisors())
    if (dv > 1) out.torsion.push_back(dv);
  out.free_rank = target_rank - snf.rank;
  return out;
}

}  // namespace weyl27
