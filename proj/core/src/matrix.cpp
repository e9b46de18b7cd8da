#include "hcell/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace hcell {

SparseVec sparse_normalize(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, c);
  }
  SparseVec res;
  for (auto& [i, c] : out)
    if (!c.is_zero()) res.emplace_back(i, c);
  return res;
}

SparseVec sparse_add(const SparseVec& a, const SparseVec& b) {
  SparseVec out;
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar c = a[i].second + b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, c);
      ++i; ++j;
    }
  }
  return out;
}

SparseVec sparse_scale(const SparseVec& a, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVec out;
  out.reserve(a.size());
  for (auto& [i, x] : a) {
    Scalar y = x * c;
    if (!y.is_zero()) out.emplace_back(i, y);
  }
  return out;
}

Matrix::Matrix(int rows, int cols, const Field& f)
    : rows_(rows), cols_(cols), field_(f),
      data_(static_cast<size_t>(rows) * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(int n, const Field& f) {
  Matrix m(n, n, f);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error("ShapeMismatch", "matrix product shapes");
  Matrix r(rows_, o.cols_, field_);
  if (field_.is_fp() && o.field_ == field_) {
    const std::uint64_t p = field_.p;
    std::vector<std::uint64_t> a(static_cast<size_t>(rows_) * cols_),
        b(static_cast<size_t>(o.rows_) * o.cols_);
    for (size_t k = 0; k < a.size(); ++k) a[k] = data_[k].is_untyped() ? 0 : data_[k].fp_value();
    for (size_t k = 0; k < b.size(); ++k) b[k] = o.data_[k].is_untyped() ? 0 : o.data_[k].fp_value();
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < o.cols_; ++j) {
        std::uint64_t acc = 0;
        const std::uint64_t* ai = &a[static_cast<size_t>(i) * cols_];
        for (int k = 0; k < cols_; ++k) acc += ai[k] * b[static_cast<size_t>(k) * o.cols_ + j] % p;
        r.at(i, j) = Scalar::from_int(static_cast<long long>(acc % p), field_);
      }
    return r;
  }
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < o.cols_; ++j) {
        const Scalar& y = o.at(k, j);
        if (!y.is_zero()) r.at(i, j) += x * y;
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  Matrix r = *this;
  for (size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
  return r;
}

Matrix Matrix::operator-() const {
  Matrix r = *this;
  for (auto& x : r.data_) x = -x;
  return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= c;
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_, field_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t k = 0; k < data_.size(); ++k)
    if (data_[k] != o.data_[k]) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) {
      if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
    }
  return true;
}

Scalar Matrix::trace() const {
  Scalar t = Scalar::zero(field_);
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += at(i, i);
  return t;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  Matrix r(nr, nc, field_);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r.at(i, j) = at(r0 + i, c0 + j);
  return r;
}

void Matrix::set_block(int r0, int c0, const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) at(r0 + i, c0 + j) = m.at(i, j);
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero() && !v[j].is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

SparseVec Matrix::apply_sparse(const SparseVec& v) const {
  std::vector<Scalar> r(rows_, Scalar::zero(field_));
  for (auto& [j, c] : v)
    for (int i = 0; i < rows_; ++i)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * c;
  SparseVec out;
  for (int i = 0; i < rows_; ++i)
    if (!r[i].is_zero()) out.emplace_back(i, r[i]);
  return out;
}

Matrix Matrix::col_matrix(const std::vector<Scalar>& v) const {
  Matrix r(static_cast<int>(v.size()), 1, field_);
  for (size_t i = 0; i < v.size(); ++i) r.at(static_cast<int>(i), 0) = v[i];
  return r;
}

std::vector<Scalar> Matrix::column(int j) const {
  std::vector<Scalar> v(rows_, Scalar::zero(field_));
  for (int i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::vector<Scalar> Matrix::row_vec(int i) const {
  std::vector<Scalar> v(cols_, Scalar::zero(field_));
  for (int j = 0; j < cols_; ++j) v[j] = at(i, j);
  return v;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      for (int k = 0; k < b.rows(); ++k)
        for (int l = 0; l < b.cols(); ++l) {
          if (b.at(k, l).is_zero()) continue;
          r.at(i * b.rows() + k, j * b.cols() + l) = a.at(i, j) * b.at(k, l);
        }
    }
  return r;
}

Matrix Matrix::hcat(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows(), a.cols() + b.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Matrix Matrix::vcat(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Matrix Matrix::dsum(const Matrix& a, const Matrix& b) {
  Matrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

namespace {

// F_p fast-path RREF on a raw buffer. Returns pivot columns.
std::vector<int> rref_fp(std::vector<std::uint64_t>& a, int rows, int cols, std::uint64_t p,
                         std::vector<std::uint64_t>* t, int tcols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pr = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<size_t>(i) * cols + c] != 0) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j < cols; ++j)
        std::swap(a[static_cast<size_t>(pr) * cols + j], a[static_cast<size_t>(r) * cols + j]);
      if (t)
        for (int j = 0; j < tcols; ++j)
          std::swap((*t)[static_cast<size_t>(pr) * tcols + j], (*t)[static_cast<size_t>(r) * tcols + j]);
    }
    std::uint64_t inv = fp_inv(a[static_cast<size_t>(r) * cols + c], p);
    for (int j = 0; j < cols; ++j)
      a[static_cast<size_t>(r) * cols + j] = a[static_cast<size_t>(r) * cols + j] * inv % p;
    if (t)
      for (int j = 0; j < tcols; ++j)
        (*t)[static_cast<size_t>(r) * tcols + j] = (*t)[static_cast<size_t>(r) * tcols + j] * inv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      std::uint64_t f = a[static_cast<size_t>(i) * cols + c];
      if (f == 0) continue;
      std::uint64_t fneg = p - f;
      for (int j = 0; j < cols; ++j)
        a[static_cast<size_t>(i) * cols + j] =
            (a[static_cast<size_t>(i) * cols + j] + fneg * a[static_cast<size_t>(r) * cols + j]) % p;
      if (t)
        for (int j = 0; j < tcols; ++j)
          (*t)[static_cast<size_t>(i) * tcols + j] =
              ((*t)[static_cast<size_t>(i) * tcols + j] + fneg * (*t)[static_cast<size_t>(r) * tcols + j]) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<int> rref(Matrix& m, Matrix* transform) {
  const Field f = m.field();
  if (transform) *transform = Matrix::identity(m.rows(), f);
  if (f.is_fp()) {
    const std::uint64_t p = f.p;
    std::vector<std::uint64_t> a(static_cast<size_t>(m.rows()) * m.cols());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        a[static_cast<size_t>(i) * m.cols() + j] =
            m.at(i, j).is_untyped() ? 0 : m.at(i, j).fp_value();
    std::vector<std::uint64_t> t;
    if (transform) {
      t.assign(static_cast<size_t>(m.rows()) * m.rows(), 0);
      for (int i = 0; i < m.rows(); ++i) t[static_cast<size_t>(i) * m.rows() + i] = 1 % p;
    }
    auto pivots = rref_fp(a, m.rows(), m.cols(), p, transform ? &t : nullptr, m.rows());
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j)
        m.at(i, j) = Scalar::from_int(static_cast<long long>(a[static_cast<size_t>(i) * m.cols() + j]), f);
    if (transform)
      for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.rows(); ++j)
          transform->at(i, j) =
              Scalar::from_int(static_cast<long long>(t[static_cast<size_t>(i) * m.rows() + j]), f);
    return pivots;
  }
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) { pr = i; break; }
    if (pr < 0) continue;
    if (pr != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pr, j), m.at(r, j));
      if (transform)
        for (int j = 0; j < transform->cols(); ++j) std::swap(transform->at(pr, j), transform->at(r, j));
    }
    Scalar inv = m.at(r, c).inv();
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    if (transform)
      for (int j = 0; j < transform->cols(); ++j) transform->at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar fac = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= fac * m.at(r, j);
      if (transform)
        for (int j = 0; j < transform->cols(); ++j)
          transform->at(i, j) -= fac * transform->at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int Matrix::rank() const {
  Matrix m = *this;
  return static_cast<int>(rref(m).size());
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) return std::nullopt;
  Matrix m = *this, t;
  auto pivots = rref(m, &t);
  if (static_cast<int>(pivots.size()) != rows_) return std::nullopt;
  return t;
}

Matrix Matrix::nullspace() const {
  Matrix m = *this;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(cols_, static_cast<int>(free_cols.size()), field_);
  for (size_t k = 0; k < free_cols.size(); ++k) {
    int fc = free_cols[k];
    basis.at(fc, static_cast<int>(k)) = Scalar::one(field_);
    for (size_t r = 0; r < pivots.size(); ++r)
      basis.at(pivots[r], static_cast<int>(k)) = -m.at(static_cast<int>(r), fc);
  }
  return basis;
}

std::optional<Matrix> Matrix::solve(const Matrix& b) const {
  Matrix aug = hcat(*this, b);
  auto pivots = rref(aug);
  for (int c : pivots)
    if (c >= cols_) return std::nullopt;  // inconsistent
  Matrix x(cols_, b.cols(), field_);
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < b.cols(); ++j)
      x.at(pivots[r], j) = aug.at(static_cast<int>(r), cols_ + j);
  return x;
}

std::pair<Matrix, std::vector<int>> Matrix::column_space() const {
  Matrix m = *this;
  auto pivots = rref(m);
  Matrix basis(rows_, static_cast<int>(pivots.size()), field_);
  for (size_t k = 0; k < pivots.size(); ++k)
    for (int i = 0; i < rows_; ++i) basis.at(i, static_cast<int>(k)) = at(i, pivots[k]);
  return {basis, pivots};
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << (i == 0 ? "[" : " ");
    for (int j = 0; j < cols_; ++j) os << at(i, j).str() << (j + 1 < cols_ ? " " : "");
    os << (i + 1 < rows_ ? ";\n" : "]");
  }
  return os.str();
}

bool Echelon::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  int piv = v[0].first;
  Scalar inv = v[0].second.inv();
  v = sparse_scale(v, inv);
  // eliminate the new pivot from existing rows
  for (size_t r = 0; r < rows_.size(); ++r) {
    Scalar c = Scalar::zero(field_);
    bool found = false;
    for (auto& [i, x] : rows_[r])
      if (i == piv) { c = x; found = true; break; }
    if (found) rows_[r] = sparse_add(rows_[r], sparse_scale(v, -c));
  }
  pivot_of_[piv] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  pivots_.push_back(piv);
  return true;
}

SparseVec Echelon::reduce(SparseVec v) const {
  v = sparse_normalize(std::move(v));
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [i, c] : v) {
      auto it = pivot_of_.find(i);
      if (it != pivot_of_.end()) {
        v = sparse_add(v, sparse_scale(rows_[it->second], -c));
        changed = true;
        break;
      }
    }
  }
  return v;
}

std::vector<int> Echelon::free_coordinates() const {
  std::vector<int> out;
  for (int i = 0; i < dim_; ++i)
    if (!pivot_of_.count(i)) out.push_back(i);
  return out;
}

SparseVec SparseMat::apply(const SparseVec& v) const {
  SparseVec acc;
  for (auto& [j, c] : v) acc = sparse_add(acc, sparse_scale(cols_[j], c));
  return acc;
}

std::vector<Scalar> SparseMat::apply_dense(const std::vector<Scalar>& v, const Field& f) const {
  std::vector<Scalar> r(rows_, Scalar::zero(f));
  for (size_t j = 0; j < cols_.size(); ++j) {
    if (v[j].is_zero()) continue;
    for (auto& [i, c] : cols_[j]) r[i] += c * v[j];
  }
  return r;
}

Matrix SparseMat::to_dense(const Field& f) const {
  Matrix m(rows_, static_cast<int>(cols_.size()), f);
  for (size_t j = 0; j < cols_.size(); ++j)
    for (auto& [i, c] : cols_[j]) m.at(i, static_cast<int>(j)) = c;
  return m;
}

SparseMat SparseMat::from_dense(const Matrix& m) {
  SparseMat s(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    SparseVec col;
    for (int i = 0; i < m.rows(); ++i)
      if (!m.at(i, j).is_zero()) col.emplace_back(i, m.at(i, j));
    s.set_col(j, std::move(col));
  }
  return s;
}

}  // namespace hcell
