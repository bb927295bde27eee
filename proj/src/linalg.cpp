#include "kslogic/linalg.hpp"

#include <string>
#include <utility>

#include "kslogic/error.hpp"

namespace kslogic {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

// In-place reduced row-echelon form. Zero rows are dropped; the returned
// vector holds the pivot column of each surviving row.
std::vector<std::size_t> reduce(std::vector<ExactVector>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    const GaussianRational scale = GaussianRational(1) / rows[r][c];
    for (std::size_t j = c; j < cols; ++j) {
      if (!rows[r][j].is_zero()) rows[r][j] *= scale;
    }
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      const GaussianRational factor = rows[k][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!rows[r][j].is_zero()) rows[k][j] -= factor * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

std::vector<ExactVector> rows_of(const ExactMatrix& m) {
  std::vector<ExactVector> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

}  // namespace

ExactVector::ExactVector(std::size_t dim) : entries_(dim) {}

ExactVector::ExactVector(std::vector<GaussianRational> entries) : entries_(std::move(entries)) {}

ExactVector::ExactVector(std::initializer_list<GaussianRational> entries) : entries_(entries) {}

bool ExactVector::is_zero() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

ExactVector& ExactVector::operator+=(const ExactVector& rhs) {
  require_same_dim(dim(), rhs.dim(), "vector addition");
  for (std::size_t k = 0; k < dim(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ExactVector& ExactVector::operator-=(const ExactVector& rhs) {
  require_same_dim(dim(), rhs.dim(), "vector subtraction");
  for (std::size_t k = 0; k < dim(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ExactVector& ExactVector::operator*=(const GaussianRational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

GaussianRational inner(const ExactVector& x, const ExactVector& y) {
  require_same_dim(x.dim(), y.dim(), "inner product");
  GaussianRational acc;
  for (std::size_t k = 0; k < x.dim(); ++k) acc += conjugate(x[k]) * y[k];
  return acc;
}

Rational norm_sq(const ExactVector& x) {
  Rational acc;
  for (const auto& e : x.entries()) acc += e.norm_sq();
  return acc;
}

ExactVector tensor(const ExactVector& a, const ExactVector& b) {
  std::vector<GaussianRational> out;
  out.reserve(a.dim() * b.dim());
  for (const auto& x : a.entries()) {
    for (const auto& y : b.entries()) out.push_back(x * y);
  }
  return ExactVector(std::move(out));
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) throw InvalidOperand("matrix dimensions must be positive");
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows == 0 || cols == 0) throw InvalidOperand("matrix dimensions must be positive");
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("matrix needs " + std::to_string(rows * cols) + " entries, got " +
                            std::to_string(entries_.size()));
  }
}

ExactMatrix::ExactMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  if (rows_ == 0 || cols_ == 0) throw InvalidOperand("matrix dimensions must be positive");
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    require_same_dim(row.size(), cols_, "ragged matrix literal");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_columns(std::span<const ExactVector> columns) {
  if (columns.empty()) throw InvalidOperand("matrix needs at least one column");
  ExactMatrix m(columns.front().dim(), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    require_same_dim(columns[c].dim(), m.rows(), "column length");
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ExactVector ExactMatrix::row(std::size_t r) const {
  return ExactVector(std::vector<GaussianRational>(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                                                   entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)));
}

ExactVector ExactMatrix::column(std::size_t c) const {
  ExactVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool ExactMatrix::is_zero() const noexcept {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& rhs) {
  require_same_dim(rows_, rhs.rows_, "matrix addition rows");
  require_same_dim(cols_, rhs.cols_, "matrix addition cols");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& rhs) {
  require_same_dim(rows_, rhs.rows_, "matrix subtraction rows");
  require_same_dim(cols_, rhs.cols_, "matrix subtraction cols");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
  return *this;
}

ExactMatrix& ExactMatrix::operator*=(const GaussianRational& s) {
  for (auto& e : entries_) e *= s;
  return *this;
}

ExactMatrix matmul(const ExactMatrix& a, const ExactMatrix& b) {
  require_same_dim(a.cols(), b.rows(), "matmul inner dimension");
  ExactMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return matmul(a, b); }

ExactVector apply(const ExactMatrix& m, const ExactVector& x) {
  require_same_dim(m.cols(), x.dim(), "matrix-vector product");
  ExactVector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(i, j).is_zero() && !x[j].is_zero()) out[i] += m(i, j) * x[j];
    }
  }
  return out;
}

ExactMatrix adjoint(const ExactMatrix& m) {
  ExactMatrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = conjugate(m(i, j));
  }
  return out;
}

ExactMatrix tensor(const ExactMatrix& a, const ExactMatrix& b) {
  ExactMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

ExactMatrix outer(const ExactVector& x, const ExactVector& y) {
  ExactMatrix out(x.dim(), y.dim());
  for (std::size_t i = 0; i < x.dim(); ++i) {
    for (std::size_t j = 0; j < y.dim(); ++j) out(i, j) = x[i] * conjugate(y[j]);
  }
  return out;
}

ExactMatrix sum(std::span<const ExactMatrix> terms) {
  if (terms.empty()) throw InvalidOperand("sum of no matrices");
  ExactMatrix acc = terms.front();
  for (std::size_t k = 1; k < terms.size(); ++k) acc += terms[k];
  return acc;
}

std::size_t rank(const ExactMatrix& m) {
  auto rows = rows_of(m);
  return reduce(rows, m.cols()).size();
}

ExactMatrix inverse(const ExactMatrix& m) {
  if (!m.is_square()) throw InvalidOperand("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<ExactVector> rows;
  rows.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    ExactVector aug(2 * n);
    for (std::size_t c = 0; c < n; ++c) aug[c] = m(r, c);
    aug[n + r] = 1;
    rows.push_back(std::move(aug));
  }
  const auto pivots = reduce(rows, 2 * n);
  if (pivots.size() < n || pivots[n - 1] >= n) throw InvalidOperand("matrix is singular");
  ExactMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = rows[r][n + c];
  }
  return out;
}

bool is_projector(const ExactMatrix& m) {
  return m.is_square() && adjoint(m) == m && matmul(m, m) == m;
}

bool commute(const ExactMatrix& a, const ExactMatrix& b) { return matmul(a, b) == matmul(b, a); }

SubspaceBasis::SubspaceBasis(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {
  if (ambient_dim == 0) throw InvalidOperand("ambient dimension must be positive");
}

SubspaceBasis SubspaceBasis::span(std::size_t ambient_dim, std::span<const ExactVector> vectors) {
  SubspaceBasis out(ambient_dim);
  std::vector<ExactVector> rows(vectors.begin(), vectors.end());
  for (const auto& v : rows) require_same_dim(v.dim(), ambient_dim, "spanning vector");
  out.pivots_ = reduce(rows, ambient_dim);
  out.vectors_ = std::move(rows);
  return out;
}

SubspaceBasis SubspaceBasis::whole(std::size_t ambient_dim) {
  std::vector<ExactVector> unit;
  for (std::size_t k = 0; k < ambient_dim; ++k) {
    ExactVector e(ambient_dim);
    e[k] = 1;
    unit.push_back(std::move(e));
  }
  return span(ambient_dim, unit);
}

SubspaceBasis kernel_basis(const ExactMatrix& a) {
  auto rows = rows_of(a);
  const auto pivots = reduce(rows, a.cols());
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<ExactVector> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    ExactVector x(a.cols());
    x[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(x));
  }
  return SubspaceBasis::span(a.cols(), basis);
}

SubspaceBasis range_basis(const ExactMatrix& a) {
  std::vector<ExactVector> cols;
  cols.reserve(a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) cols.push_back(a.column(c));
  return SubspaceBasis::span(a.rows(), cols);
}

bool member(const ExactVector& x, const SubspaceBasis& s) {
  require_same_dim(x.dim(), s.ambient_dim(), "membership test");
  ExactVector rest = x;
  for (std::size_t k = 0; k < s.vectors_.size(); ++k) {
    const auto coeff = rest[s.pivots_[k]];
    if (!coeff.is_zero()) rest -= coeff * s.vectors_[k];
  }
  return rest.is_zero();
}

bool is_subspace(const SubspaceBasis& inner, const SubspaceBasis& outer) {
  require_same_dim(inner.ambient_dim(), outer.ambient_dim(), "subspace inclusion");
  for (const auto& v : inner.vectors()) {
    if (!member(v, outer)) return false;
  }
  return true;
}

SubspaceBasis intersect(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "subspace intersection");
  if (a.empty() || b.empty()) return SubspaceBasis(a.ambient_dim());
  // Solve sum_i s_i a_i - sum_j t_j b_j = 0; every solution gives
  // sum_i s_i a_i in the intersection, and all of it arises this way.
  std::vector<ExactVector> columns(a.vectors().begin(), a.vectors().end());
  for (const auto& v : b.vectors()) columns.push_back(GaussianRational(-1) * v);
  const auto solutions = kernel_basis(ExactMatrix::from_columns(columns));

  std::vector<ExactVector> common;
  for (const auto& s : solutions.vectors()) {
    ExactVector v(a.ambient_dim());
    for (std::size_t i = 0; i < a.dimension(); ++i) {
      if (!s[i].is_zero()) v += s[i] * a.vectors()[i];
    }
    common.push_back(std::move(v));
  }
  return SubspaceBasis::span(a.ambient_dim(), common);
}

SubspaceBasis join(const SubspaceBasis& a, const SubspaceBasis& b) {
  require_same_dim(a.ambient_dim(), b.ambient_dim(), "subspace join");
  std::vector<ExactVector> all(a.vectors().begin(), a.vectors().end());
  all.insert(all.end(), b.vectors().begin(), b.vectors().end());
  return SubspaceBasis::span(a.ambient_dim(), all);
}

ExactMatrix ray_projector(const ExactVector& v) {
  if (v.is_zero()) throw InvalidOperand("projector onto the null vector");
  ExactMatrix p = outer(v, v);
  p *= GaussianRational(Rational(1) / norm_sq(v));
  return p;
}

ExactMatrix subspace_projector(const SubspaceBasis& s) {
  if (s.empty()) return ExactMatrix::zero(s.ambient_dim());
  const ExactMatrix b = ExactMatrix::from_columns(s.vectors());
  const ExactMatrix b_adj = adjoint(b);
  return b * inverse(b_adj * b) * b_adj;
}

}  // namespace kslogic
