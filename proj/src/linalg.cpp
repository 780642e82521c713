#include "loophw/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace loophw {

Vec zero_vec(std::size_t n) { return Vec(n); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

Vec scaled(Vec v, const Scalar& c) {
  for (auto& x : v) x *= c;
  return v;
}

Vec operator+(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec operator-(Vec a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i].emplace_back(i, Scalar(1));
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
  return (it != r.end() && it->first == j) ? it->second : Scalar(0);
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Scalar& v) {
  if (v.is_zero()) return;
  if (j >= cols_) throw std::out_of_range("SparseMatrix::add column");
  auto& r = rows_.at(i);
  auto it = std::lower_bound(r.begin(), r.end(), j, [](const Entry& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == j) {
    it->second += v;
    if (it->second.is_zero()) r.erase(it);
  } else {
    r.insert(it, Entry{j, v});
  }
}

void SparseMatrix::set_row(std::size_t i, std::vector<Entry> entries) { rows_.at(i) = std::move(entries); }

Vec SparseMatrix::apply(const Vec& v) const {
  Vec out(rows_.size());
  apply_add(v, Scalar(1), out);
  return out;
}

void SparseMatrix::apply_add(const Vec& v, const Scalar& c, Vec& out) const {
  if (c.is_zero()) return;
  const bool unit = c == Scalar(1);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].empty()) continue;
    Scalar acc;
    bool any = false;
    for (const auto& [j, x] : rows_[i]) {
      if (v[j].is_zero()) continue;
      acc += x * v[j];
      any = true;
    }
    if (!any) continue;
    if (unit) out[i] += acc; else out[i] += c * acc;
  }
}

Vec SparseMatrix::column(std::size_t j) const {
  Vec out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = at(i, j);
  return out;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const auto& r) { return r.empty(); });
}

namespace {

std::vector<SparseMatrix::Entry> merge_rows(const std::vector<SparseMatrix::Entry>& a,
                                            const std::vector<SparseMatrix::Entry>& b, bool subtract) {
  std::vector<SparseMatrix::Entry> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, subtract ? -b[j].second : b[j].second);
      ++j;
    } else {
      Scalar s = subtract ? a[i].second - b[j].second : a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, s);
      ++i;
      ++j;
    }
  }
  return out;
}

void check_same_shape(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}

}  // namespace

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!o.rows_[i].empty()) rows_[i] = merge_rows(rows_[i], o.rows_[i], false);
  return *this;
}

SparseMatrix& SparseMatrix::operator-=(const SparseMatrix& o) {
  check_same_shape(*this, o);
  for (std::size_t i = 0; i < rows_.size(); ++i)
    if (!o.rows_[i].empty()) rows_[i] = merge_rows(rows_[i], o.rows_[i], true);
  return *this;
}

SparseMatrix& SparseMatrix::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& e : r) e.second *= c;
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  SparseMatrix out(a.rows(), b.cols());
  std::vector<Scalar> acc(b.cols());
  std::vector<char> touched(b.cols(), 0);
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cols.clear();
    for (const auto& [k, x] : a.rows_[i]) {
      for (const auto& [j, y] : b.rows_[k]) {
        if (!touched[j]) {
          touched[j] = 1;
          cols.push_back(j);
          acc[j] = x * y;
        } else {
          acc[j] += x * y;
        }
      }
    }
    std::sort(cols.begin(), cols.end());
    auto& row = out.rows_[i];
    for (std::size_t j : cols) {
      if (!acc[j].is_zero()) row.emplace_back(j, acc[j]);
      touched[j] = 0;
    }
  }
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < b.rows(); ++k) {
      auto& row = out.rows_[i * b.rows() + k];
      for (const auto& [j, x] : a.rows_[i])
        for (const auto& [l, y] : b.rows_[k]) row.emplace_back(j * b.cols() + l, x * y);
    }
  return out;
}

SparseMatrix commutator(const SparseMatrix& a, const SparseMatrix& b) { return a * b - b * a; }

SparseMatrix matrix_power(const SparseMatrix& a, int n) {
  SparseMatrix out = SparseMatrix::identity(a.rows());
  for (int i = 0; i < n; ++i) out = out * a;
  return out;
}

SparseMatrix divided_power(const SparseMatrix& a, int n) {
  if (n < 0) return SparseMatrix(a.rows(), a.cols());
  SparseMatrix out = SparseMatrix::identity(a.rows());
  for (int i = 1; i <= n; ++i) {
    out = out * a;
    out *= Scalar(1, i);
  }
  return out;
}

Vec Subspace::reduce(Vec v) const {
  if (v.size() != n_) throw std::invalid_argument("Subspace::reduce dimension mismatch");
  // In RREF the coefficient of row i is just v[pivot_i]; read them all first.
  std::vector<Scalar> coeff(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) coeff[i] = v[pivots_[i]];
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (coeff[i].is_zero()) continue;
    for (std::size_t j : support_[i]) v[j] -= coeff[i] * rows_[i][j];
  }
  return v;
}

bool Subspace::contains(const Vec& v) const { return is_zero(reduce(v)); }

bool Subspace::insert(const Vec& v) {
  Vec res = reduce(v);
  std::size_t p = 0;
  while (p < n_ && res[p].is_zero()) ++p;
  if (p == n_) return false;
  Scalar inv = res[p].inverse();
  std::vector<std::size_t> sup;
  for (std::size_t j = p; j < n_; ++j)
    if (!res[j].is_zero()) {
      res[j] *= inv;
      sup.push_back(j);
    }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Scalar c = rows_[i][p];
    if (c.is_zero()) continue;
    for (std::size_t j : sup) rows_[i][j] -= c * res[j];
    std::vector<std::size_t> s;
    for (std::size_t j = pivots_[i]; j < n_; ++j)
      if (!rows_[i][j].is_zero()) s.push_back(j);
    support_[i] = std::move(s);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(res));
  support_.insert(support_.begin() + pos, std::move(sup));
  return true;
}

Vec Subspace::coordinates(const Vec& v) const {
  Vec out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) out[i] = v[pivots_[i]];
  return out;
}

std::vector<std::size_t> Subspace::free_columns() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    if (k < pivots_.size() && pivots_[k] == j) {
      ++k;
      continue;
    }
    out.push_back(j);
  }
  return out;
}

Subspace Subspace::sum(const Subspace& a, const Subspace& b) {
  Subspace out = a.dim() >= b.dim() ? a : b;
  const Subspace& other = a.dim() >= b.dim() ? b : a;
  for (const auto& v : other.basis()) out.insert(v);
  return out;
}

Subspace span_of(std::size_t n, const std::vector<Vec>& vs) {
  Subspace s(n);
  for (const auto& v : vs) s.insert(v);
  return s;
}

Subspace kernel(std::size_t n, const std::vector<Vec>& rows) {
  Subspace rs = span_of(n, rows);
  Subspace out(n);
  for (std::size_t f : rs.free_columns()) {
    Vec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < rs.dim(); ++i) v[rs.pivots()[i]] = -rs.basis()[i][f];
    out.insert(v);
  }
  return out;
}

}  // namespace loophw
