#include "cartankit/dense_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cartankit {

DenseMatrix DenseMatrix::identity(int n) {
  DenseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return DenseMatrix(0, 0);
  DenseMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (rows[i].size() != rows[0].size())
      throw std::invalid_argument("from_rows: ragged row lengths");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

DenseMatrix DenseMatrix::operator+(const DenseMatrix& rhs) const {
  DenseMatrix out(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + rhs.entries_[k];
  return out;
}

DenseMatrix DenseMatrix::operator-(const DenseMatrix& rhs) const {
  DenseMatrix out(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - rhs.entries_[k];
  return out;
}

DenseMatrix DenseMatrix::operator*(const DenseMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  DenseMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const ExactScalar& a = at(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        const ExactScalar& b = rhs.at(k, j);
        if (sgn(b) != 0) out.at(i, j) += a * b;
      }
    }
  return out;
}

DenseMatrix DenseMatrix::operator*(const ExactScalar& c) const {
  DenseMatrix out(rows_, cols_);
  for (size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * c;
  return out;
}

bool DenseMatrix::operator==(const DenseMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
  return out;
}

ExactScalar DenseMatrix::trace() const {
  ExactScalar t = 0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

bool DenseMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (sgn(e) != 0) return false;
  return true;
}

Vec DenseMatrix::row(int i) const {
  Vec out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = at(i, j);
  return out;
}

namespace {

// Fraction-free echelon form.  Rows are first scaled to integers (scaling a
// row by a nonzero rational changes neither rank nor kernel), then reduced by
// one-step Bareiss elimination, whose interior divisions are exact.
struct Echelon {
  std::vector<std::vector<mpz_class>> m;
  std::vector<int> pivot_cols;
  int rank = 0;
  int swap_sign = 1;
  mpq_class row_scaling = 1;  // product of the factors applied to rows
};

Echelon bareiss_echelon(const DenseMatrix& a) {
  Echelon e;
  const int rows = a.rows(), cols = a.cols();
  e.m.assign(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm_den = 1;
    for (int j = 0; j < cols; ++j) {
      mpz_class den = a.at(i, j).get_den();
      mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), den.get_mpz_t());
    }
    e.row_scaling *= mpq_class(lcm_den);
    for (int j = 0; j < cols; ++j) {
      mpq_class scaled = a.at(i, j) * mpq_class(lcm_den);
      e.m[i][j] = scaled.get_num();  // integral by construction
    }
  }

  mpz_class prev = 1;
  for (int col = 0; col < cols && e.rank < rows; ++col) {
    int pivot = -1;
    for (int i = e.rank; i < rows; ++i)
      if (sgn(e.m[i][col]) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != e.rank) {
      std::swap(e.m[pivot], e.m[e.rank]);
      e.swap_sign = -e.swap_sign;
    }
    for (int i = e.rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        mpz_class num = e.m[i][j] * e.m[e.rank][col] - e.m[i][col] * e.m[e.rank][j];
        mpz_divexact(e.m[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      e.m[i][col] = 0;
    }
    prev = e.m[e.rank][col];
    e.pivot_cols.push_back(col);
    ++e.rank;
  }
  return e;
}

}  // namespace

int matrix_rank(const DenseMatrix& m) { return bareiss_echelon(m).rank; }

ExactScalar determinant(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: non-square");
  if (m.rows() == 0) return 1;
  Echelon e = bareiss_echelon(m);
  if (e.rank < m.rows()) return 0;
  // After full Bareiss elimination the determinant of the integer matrix is
  // the last pivot entry (times the swap sign).
  mpq_class det_int(e.m[m.rows() - 1][e.pivot_cols.back()]);
  return ExactScalar(e.swap_sign * det_int / e.row_scaling);
}

std::vector<Vec> kernel_basis(const DenseMatrix& m) {
  Echelon e = bareiss_echelon(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Vec> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vec x(cols, ExactScalar(0));
    x[f] = 1;
    // Back-substitute through the echelon rows from the bottom up.
    for (int r = e.rank - 1; r >= 0; --r) {
      int pc = e.pivot_cols[r];
      mpq_class acc = 0;
      for (int j = pc + 1; j < cols; ++j)
        if (sgn(x[j]) != 0) acc += mpq_class(e.m[r][j]) * x[j];
      if (sgn(acc) != 0) {
        mpq_class val = -acc / mpq_class(e.m[r][pc]);
        val.canonicalize();
        x[pc] = val;
      }
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<Vec> solve_linear(const DenseMatrix& m, const Vec& b) {
  if (static_cast<int>(b.size()) != m.rows())
    throw std::invalid_argument("solve_linear: rhs length mismatch");
  DenseMatrix aug(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  Echelon e = bareiss_echelon(aug);
  for (int c : e.pivot_cols)
    if (c == m.cols()) return std::nullopt;  // pivot in the rhs column

  Vec x(m.cols(), ExactScalar(0));
  for (int r = e.rank - 1; r >= 0; --r) {
    int pc = e.pivot_cols[r];
    mpq_class acc = mpq_class(e.m[r][m.cols()]);
    for (int j = pc + 1; j < m.cols(); ++j)
      if (sgn(x[j]) != 0) acc -= mpq_class(e.m[r][j]) * x[j];
    mpq_class val = acc / mpq_class(e.m[r][pc]);
    val.canonicalize();
    x[pc] = val;
  }
  return x;
}

std::pair<int, int> symmetric_signature(const DenseMatrix& sym) {
  if (sym.rows() != sym.cols()) throw std::invalid_argument("signature: non-square");
  const int n = sym.rows();
  DenseMatrix m = sym;
  if (!(m == m.transpose())) throw std::invalid_argument("signature: matrix not symmetric");

  int pos = 0, neg = 0;
  for (int k = 0; k < n; ++k) {
    if (sgn(m.at(k, k)) == 0) {
      int swap_j = -1;
      for (int j = k + 1; j < n; ++j)
        if (sgn(m.at(j, j)) != 0) {
          swap_j = j;
          break;
        }
      if (swap_j >= 0) {
        for (int t = 0; t < n; ++t) std::swap(m.at(k, t), m.at(swap_j, t));
        for (int t = 0; t < n; ++t) std::swap(m.at(t, k), m.at(t, swap_j));
      } else {
        int mix_j = -1;
        for (int j = k + 1; j < n; ++j)
          if (sgn(m.at(k, j)) != 0) {
            mix_j = j;
            break;
          }
        if (mix_j < 0) continue;  // row/column k vanishes on the remaining block
        // Congruence by (row k += row j, col k += col j): diagonal entry
        // becomes 2 m[k][j] != 0 since both diagonal entries vanish.
        for (int t = 0; t < n; ++t) m.at(k, t) += m.at(mix_j, t);
        for (int t = 0; t < n; ++t) m.at(t, k) += m.at(t, mix_j);
      }
    }
    const ExactScalar d = m.at(k, k);
    if (sgn(d) == 0) continue;
    (sgn(d) > 0 ? pos : neg) += 1;
    for (int i = k + 1; i < n; ++i) {
      if (sgn(m.at(i, k)) == 0) continue;
      ExactScalar f = m.at(i, k) / d;
      for (int t = 0; t < n; ++t) m.at(i, t) -= f * m.at(k, t);
      for (int t = 0; t < n; ++t) m.at(t, i) -= f * m.at(t, k);
    }
  }
  return {pos, neg};
}

std::optional<DenseMatrix> inverse(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: non-square");
  const int n = m.rows();
  DenseMatrix work = m;
  DenseMatrix inv = DenseMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (sgn(work.at(i, col)) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return std::nullopt;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) {
        std::swap(work.at(pivot, j), work.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    ExactScalar d = work.at(col, col);
    for (int j = 0; j < n; ++j) {
      work.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || sgn(work.at(i, col)) == 0) continue;
      ExactScalar f = work.at(i, col);
      for (int j = 0; j < n; ++j) {
        work.at(i, j) -= f * work.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

int rank_of_vectors(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  return matrix_rank(DenseMatrix::from_rows(vectors));
}

void SpanAccumulator::reduce(Vec& v) const {
  for (size_t r = 0; r < rows_.size(); ++r) {
    const ExactScalar& c = v[lead_cols_[r]];
    if (sgn(c) == 0) continue;
    ExactScalar f = c;
    for (int j = lead_cols_[r]; j < ambient_; ++j) v[j] -= f * rows_[r][j];
  }
}

bool SpanAccumulator::add(Vec v) {
  if (static_cast<int>(v.size()) != ambient_)
    throw std::invalid_argument("SpanAccumulator: wrong vector length");
  reduce(v);
  int lead = -1;
  for (int j = 0; j < ambient_; ++j)
    if (sgn(v[j]) != 0) {
      lead = j;
      break;
    }
  if (lead < 0) return false;
  ExactScalar inv = v[lead];
  for (int j = lead; j < ambient_; ++j) v[j] /= inv;
  // Keep rows sorted by leading column so reduce() stays a single pass.
  size_t pos = 0;
  while (pos < lead_cols_.size() && lead_cols_[pos] < lead) ++pos;
  rows_.insert(rows_.begin() + pos, std::move(v));
  lead_cols_.insert(lead_cols_.begin() + pos, lead);
  return true;
}

bool SpanAccumulator::contains(Vec v) const {
  reduce(v);
  for (const auto& c : v)
    if (sgn(c) != 0) return false;
  return true;
}

bool SpanAccumulator::same_span_as(const SpanAccumulator& other) const {
  if (dim() != other.dim()) return false;
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

}  // namespace cartankit
