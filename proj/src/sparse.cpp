#include "rttkit/sparse.hpp"

#include <algorithm>
#include <string>

#include "rttkit/errors.hpp"

namespace rttkit {

namespace {

void require_same(const SpaceShape& a, const SpaceShape& b, const char* what) {
  if (a != b) throw ShapeError(std::string(what) + ": operands live on different spaces");
}

// Merges two sorted rows as a + s*b, dropping cancellations.
SparseOperator::Row merge_rows(const SparseOperator::Row& a, const SparseOperator::Row& b,
                               int sign) {
  SparseOperator::Row out;
  out.reserve(a.size() + b.size());
  std::size_t p = 0, q = 0;
  while (p < a.size() || q < b.size()) {
    if (q == b.size() || (p < a.size() && a[p].col < b[q].col)) {
      out.push_back(a[p++]);
    } else if (p == a.size() || b[q].col < a[p].col) {
      out.push_back({b[q].col, sign > 0 ? b[q].value : Scalar(-b[q].value)});
      ++q;
    } else {
      Scalar v = sign > 0 ? Scalar(a[p].value + b[q].value) : Scalar(a[p].value - b[q].value);
      if (v != 0) out.push_back({a[p].col, std::move(v)});
      ++p;
      ++q;
    }
  }
  return out;
}

}  // namespace

StateVector StateVector::basis(SpaceShape shape, std::size_t index) {
  if (index >= shape.dim) throw IndexError("basis index out of range");
  StateVector v(shape);
  v.entries_.emplace(index, Scalar(1));
  return v;
}

Scalar StateVector::at(std::size_t index) const {
  auto it = entries_.find(index);
  return it == entries_.end() ? Scalar(0) : it->second;
}

void StateVector::add_to(std::size_t index, const Scalar& value) {
  if (index >= shape_.dim) throw IndexError("state index out of range");
  if (value == 0) return;
  auto [it, inserted] = entries_.emplace(index, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) entries_.erase(it);
  }
}

StateVector& StateVector::operator+=(const StateVector& other) {
  require_same(shape_, other.shape_, "StateVector +");
  for (const auto& [k, v] : other.entries_) add_to(k, v);
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  require_same(shape_, other.shape_, "StateVector -");
  for (const auto& [k, v] : other.entries_) add_to(k, -v);
  return *this;
}

StateVector& StateVector::operator*=(const Scalar& s) {
  if (s == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& kv : entries_) kv.second *= s;
  return *this;
}

bool StateVector::operator==(const StateVector& other) const {
  return shape_ == other.shape_ && entries_ == other.entries_;
}

Scalar dot(const StateVector& left, const StateVector& right) {
  require_same(left.shape(), right.shape(), "dot");
  Scalar s = 0;
  const auto& small = left.nnz() <= right.nnz() ? left : right;
  const auto& big = left.nnz() <= right.nnz() ? right : left;
  for (const auto& [k, v] : small.entries()) {
    auto it = big.entries().find(k);
    if (it != big.entries().end()) s += v * it->second;
  }
  return s;
}

SparseOperator::SparseOperator(SpaceShape shape) : shape_(shape), rows_(shape.dim) {}

SparseOperator SparseOperator::identity(SpaceShape shape) {
  return multiple_of_identity(shape, Scalar(1));
}

SparseOperator SparseOperator::multiple_of_identity(SpaceShape shape, const Scalar& s) {
  SparseOperator op(shape);
  if (s == 0) return op;
  for (std::size_t r = 0; r < shape.dim; ++r)
    op.rows_[r].push_back({static_cast<std::uint32_t>(r), s});
  return op;
}

SparseOperator SparseOperator::from_triplets(SpaceShape shape, std::vector<Triplet> triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return std::get<0>(a) != std::get<0>(b) ? std::get<0>(a) < std::get<0>(b)
                                            : std::get<1>(a) < std::get<1>(b);
  });
  SparseOperator op(shape);
  for (std::size_t k = 0; k < triplets.size();) {
    const auto r = std::get<0>(triplets[k]);
    const auto c = std::get<1>(triplets[k]);
    if (r >= shape.dim || c >= shape.dim) throw IndexError("from_triplets: index out of range");
    Scalar v = 0;
    while (k < triplets.size() && std::get<0>(triplets[k]) == r && std::get<1>(triplets[k]) == c)
      v += std::get<2>(triplets[k++]);
    if (v != 0) op.rows_[r].push_back({static_cast<std::uint32_t>(c), std::move(v)});
  }
  return op;
}

SparseOperator SparseOperator::from_rows(SpaceShape shape, std::vector<Row> rows) {
  if (rows.size() != shape.dim) throw ShapeError("from_rows: row count does not match dimension");
  SparseOperator op;
  op.shape_ = shape;
  op.rows_ = std::move(rows);
  return op;
}

Scalar SparseOperator::at(std::size_t r, std::size_t c) const {
  if (r >= dim() || c >= dim()) throw IndexError("operator index out of range");
  const auto& row = rows_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const Entry& e, std::size_t col) { return e.col < col; });
  return (it != row.end() && it->col == c) ? it->value : Scalar(0);
}

std::size_t SparseOperator::nnz() const {
  std::size_t n = 0;
  for (const auto& r : rows_) n += r.size();
  return n;
}

bool SparseOperator::is_zero() const {
  return std::all_of(rows_.begin(), rows_.end(), [](const Row& r) { return r.empty(); });
}

bool SparseOperator::is_multiple_of_identity() const {
  if (rows_.empty()) return true;
  const Scalar d = at(0, 0);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (d == 0) {
      if (!rows_[r].empty()) return false;
    } else if (rows_[r].size() != 1 || rows_[r][0].col != r || rows_[r][0].value != d) {
      return false;
    }
  }
  return true;
}

StateVector SparseOperator::apply(const StateVector& v) const {
  require_same(shape_, v.shape(), "apply");
  StateVector out(shape_);
  if (v.is_zero()) return out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar s = 0;
    for (const auto& e : rows_[r]) {
      auto it = v.entries().find(e.col);
      if (it != v.entries().end()) s += e.value * it->second;
    }
    out.add_to(r, s);
  }
  return out;
}

StateVector SparseOperator::apply_left(const StateVector& v) const {
  require_same(shape_, v.shape(), "apply_left");
  StateVector out(shape_);
  for (const auto& [r, x] : v.entries())
    for (const auto& e : rows_[r]) out.add_to(e.col, x * e.value);
  return out;
}

SparseOperator& SparseOperator::operator+=(const SparseOperator& other) {
  require_same(shape_, other.shape_, "operator +");
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (!other.rows_[r].empty()) rows_[r] = merge_rows(rows_[r], other.rows_[r], +1);
  return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& other) {
  require_same(shape_, other.shape_, "operator -");
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (!other.rows_[r].empty()) rows_[r] = merge_rows(rows_[r], other.rows_[r], -1);
  return *this;
}

SparseOperator& SparseOperator::operator*=(const Scalar& s) {
  if (s == 0) {
    for (auto& r : rows_) r.clear();
    return *this;
  }
  for (auto& r : rows_)
    for (auto& e : r) e.value *= s;
  return *this;
}

SparseOperator SparseOperator::operator-() const { return *this * Scalar(-1); }

bool SparseOperator::operator==(const SparseOperator& other) const {
  if (shape_ != other.shape_) return false;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const auto& a = rows_[r];
    const auto& b = other.rows_[r];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (a[k].col != b[k].col || a[k].value != b[k].value) return false;
  }
  return true;
}

SparseOperator elementary(SpaceShape shape, int site, int i, int j) {
  if (site < 1 || site > shape.l) throw IndexError("elementary: site out of range");
  if (i < 1 || i > shape.n || j < 1 || j > shape.n)
    throw IndexError("elementary: color index out of range");
  std::vector<SparseOperator::Row> rows(shape.dim);
  for (std::size_t col = 0; col < shape.dim; ++col) {
    if (shape.color(col, site) != j) continue;
    rows[shape.with_color(col, site, i)].push_back({static_cast<std::uint32_t>(col), Scalar(1)});
  }
  return SparseOperator::from_rows(shape, std::move(rows));
}

SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
  require_same(a.shape(), b.shape(), "compose");
  const std::size_t n = a.dim();
  std::vector<SparseOperator::Row> rows(n);
  // Gustavson row-by-row product with a dense accumulator.
  std::vector<Scalar> acc(n);
  std::vector<char> used(n, 0);
  std::vector<std::uint32_t> touched;
  Scalar tmp;
  for (std::size_t r = 0; r < n; ++r) {
    touched.clear();
    for (const auto& ea : a.row(r)) {
      for (const auto& eb : b.row(ea.col)) {
        mpq_mul(tmp.get_mpq_t(), ea.value.get_mpq_t(), eb.value.get_mpq_t());
        if (!used[eb.col]) {
          used[eb.col] = 1;
          touched.push_back(eb.col);
          acc[eb.col] = tmp;
        } else {
          acc[eb.col] += tmp;
        }
      }
    }
    std::sort(touched.begin(), touched.end());
    auto& out = rows[r];
    out.reserve(touched.size());
    for (auto c : touched) {
      used[c] = 0;
      if (acc[c] != 0) out.push_back({c, std::move(acc[c])});
    }
  }
  return SparseOperator::from_rows(a.shape(), std::move(rows));
}

SparseOperator operator*(const SparseOperator& a, const SparseOperator& b) { return compose(a, b); }

SparseOperator compose_all(const std::vector<const SparseOperator*>& factors) {
  if (factors.empty()) throw ShapeError("compose_all: empty product");
  SparseOperator out = *factors.front();
  for (std::size_t k = 1; k < factors.size(); ++k) out = compose(out, *factors[k]);
  return out;
}

SparseOperator add(const SparseOperator& a, const SparseOperator& b) { return a + b; }
SparseOperator scale(const SparseOperator& a, const Scalar& s) { return a * s; }
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
  return compose(a, b) - compose(b, a);
}

SparseOperator invert(const SparseOperator& a) {
  const std::size_t n = a.dim();
  if (a.is_multiple_of_identity()) {
    const Scalar d = n ? a.at(0, 0) : Scalar(1);
    if (d == 0) throw SingularError("invert: operator is not invertible at this point");
    return SparseOperator::multiple_of_identity(a.shape(), 1 / d);
  }
  // Augmented rows [A | I]; column ids >= n address the identity block.
  std::vector<SparseOperator::Row> m(n);
  for (std::size_t r = 0; r < n; ++r) {
    m[r] = a.row(r);
    m[r].push_back({static_cast<std::uint32_t>(n + r), Scalar(1)});
  }
  std::vector<char> done(n, 0);
  std::vector<std::size_t> pivot_row_of(n);
  // Column occupancy is recomputed lazily via a scan; n <= kMaxDim keeps this cheap.
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = n;
    for (std::size_t r = 0; r < n; ++r) {
      if (done[r] || m[r].empty() || m[r][0].col != col) continue;
      if (best == n || m[r].size() < m[best].size()) best = r;
    }
    if (best == n) throw SingularError("invert: operator is not invertible at this point");
    done[best] = 1;
    pivot_row_of[col] = best;
    const Scalar inv_p = 1 / m[best][0].value;
    for (auto& e : m[best]) e.value *= inv_p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == best || m[r].empty()) continue;
      auto it = std::lower_bound(m[r].begin(), m[r].end(), col,
                                 [](const SparseOperator::Entry& e, std::size_t c) { return e.col < c; });
      if (it == m[r].end() || it->col != col) continue;
      const Scalar factor = it->value;
      SparseOperator::Row scaled = m[best];
      for (auto& e : scaled) e.value *= factor;
      m[r] = merge_rows(m[r], scaled, -1);
    }
  }
  std::vector<SparseOperator::Row> rows(n);
  for (std::size_t col = 0; col < n; ++col) {
    auto& src = m[pivot_row_of[col]];
    auto& out = rows[col];
    for (auto& e : src)
      if (e.col >= n) out.push_back({static_cast<std::uint32_t>(e.col - n), std::move(e.value)});
  }
  return SparseOperator::from_rows(a.shape(), std::move(rows));
}

DenseMatrix to_dense(const SparseOperator& a) {
  DenseMatrix m(a.dim(), std::vector<Scalar>(a.dim()));
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (const auto& e : a.row(r)) m[r][e.col] = e.value;
  return m;
}

SparseOperator from_dense(SpaceShape shape, const DenseMatrix& m) {
  if (m.size() != shape.dim) throw ShapeError("from_dense: size mismatch");
  std::vector<SparseOperator::Row> rows(shape.dim);
  for (std::size_t r = 0; r < shape.dim; ++r) {
    if (m[r].size() != shape.dim) throw ShapeError("from_dense: ragged matrix");
    for (std::size_t c = 0; c < shape.dim; ++c)
      if (m[r][c] != 0) rows[r].push_back({static_cast<std::uint32_t>(c), m[r][c]});
  }
  return SparseOperator::from_rows(shape, std::move(rows));
}

}  // namespace rttkit
