#include "rttkit/qdet.hpp"

#include <algorithm>
#include <numeric>

#include "rttkit/errors.hpp"

namespace rttkit {

namespace {

void check_index_list(const std::vector<int>& idx, int n, const char* what) {
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 1 || idx[k] > n) throw IndexError(std::string(what) + ": index out of range");
    if (k > 0 && idx[k] <= idx[k - 1])
      throw DomainError(std::string(what) + ": index list must be strictly increasing");
  }
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) sign = -sign;
  return sign;
}

std::vector<int> complement(int n, int omit) {
  std::vector<int> out;
  for (int k = 1; k <= n; ++k)
    if (k != omit) out.push_back(k);
  return out;
}

}  // namespace

SparseOperator quantum_minor(const MonodromySource& source, const std::vector<int>& rows,
                             const std::vector<int>& cols, const Scalar& u) {
  const int n = source.n();
  if (rows.size() != cols.size() || rows.empty())
    throw DomainError("quantum_minor: row and column lists must be nonempty and of equal length");
  if (rows.size() > static_cast<std::size_t>(n)) throw DomainError("quantum_minor: minor larger than N");
  check_index_list(rows, n, "quantum_minor rows");
  check_index_list(cols, n, "quantum_minor cols");
  const std::size_t m = rows.size();
  std::vector<std::shared_ptr<const OperatorMatrix>> t(m);
  for (std::size_t k = 0; k < m; ++k) t[k] = source.matrix(u - static_cast<long>(k) * source.c());
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  SparseOperator out(source.shape());
  do {
    SparseOperator term = t[0]->at(rows[0], cols[static_cast<std::size_t>(p[0])]);
    for (std::size_t k = 1; k < m && !term.is_zero(); ++k)
      term = term * t[k]->at(rows[k], cols[static_cast<std::size_t>(p[k])]);
    if (permutation_sign(p) > 0)
      out += term;
    else
      out -= term;
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

SparseOperator qdet(const MonodromySource& source, const Scalar& u) {
  std::vector<int> all(static_cast<std::size_t>(source.n()));
  std::iota(all.begin(), all.end(), 1);
  return quantum_minor(source, all, all, u);
}

SparseOperator inverse_entry(const MonodromySource& source, int i, int j, const Scalar& u) {
  const int n = source.n();
  if (i < 1 || i > n || j < 1 || j > n) throw IndexError("inverse_entry: index out of range");
  const auto qinv = invert(qdet(source, u));
  auto m = quantum_minor(source, complement(n, j), complement(n, i), u - source.c()) * qinv;
  return (i + j) % 2 == 0 ? m : -m;
}

HattedSource::HattedSource(std::shared_ptr<const MonodromySource> base) : base_(std::move(base)) {
  if (!base_) throw DomainError("HattedSource: null base");
}

std::shared_ptr<HattedSource> hatted_source(std::shared_ptr<const MonodromySource> base) {
  return std::make_shared<HattedSource>(std::move(base));
}

SparseOperator HattedSource::minor(const std::vector<int>& rows, const std::vector<int>& cols,
                                   const Scalar& u) const {
  MinorKey key{rows, cols, u};
  {
    std::lock_guard<std::mutex> lock(minor_mutex_);
    auto it = minors_.find(key);
    if (it != minors_.end()) return it->second;
  }
  auto value = quantum_minor(*base_, rows, cols, u);
  std::lock_guard<std::mutex> lock(minor_mutex_);
  return minors_.emplace(std::move(key), std::move(value)).first->second;
}

std::shared_ptr<const SparseOperator> HattedSource::qdet_at(const Scalar& u) const {
  return qdet_cache_.get(u, [&] {
    std::vector<int> all(static_cast<std::size_t>(n()));
    std::iota(all.begin(), all.end(), 1);
    return minor(all, all, u);
  });
}

std::shared_ptr<const OperatorMatrix> HattedSource::tilde(const Scalar& u) const {
  return tilde_cache_.get(u, [&] {
    const int nn = n();
    const auto qinv = invert(*qdet_at(u));
    OperatorMatrix m(nn, shape());
    for (int i = 1; i <= nn; ++i)
      for (int j = 1; j <= nn; ++j) {
        auto e = minor(complement(nn, j), complement(nn, i), u - c()) * qinv;
        m.at(i, j) = (i + j) % 2 == 0 ? std::move(e) : -e;
      }
    return m;
  });
}

std::shared_ptr<const OperatorMatrix> HattedSource::matrix(const Scalar& u) const {
  return hat_cache_.get(u, [&] {
    const int nn = n();
    const auto t = tilde(u);
    OperatorMatrix m(nn, shape());
    for (int i = 1; i <= nn; ++i)
      for (int j = 1; j <= nn; ++j) m.at(i, j) = t->at(nn + 1 - j, nn + 1 - i);
    return m;
  });
}

Scalar HattedSource::lambda(int i, const Scalar& u) const { return hat_lambda(*base_, i, u); }

SparseOperator HattedSource::zero_mode(int i, int j) const {
  check_indices(i, j);
  return -base_->zero_mode(n() + 1 - j, n() + 1 - i);
}

std::vector<Scalar> HattedSource::singular_points() const {
  std::vector<Scalar> out;
  for (const auto& a : base_->singular_points())
    for (int m = 0; m < n(); ++m) out.push_back(a + m * c());
  return out;
}

std::string HattedSource::describe() const { return "hat(" + base_->describe() + ")"; }

Scalar hat_lambda(const MonodromySource& base, int i, const Scalar& u) {
  const int n = base.n();
  if (i < 1 || i > n) throw IndexError("hat_lambda: index out of range");
  const Scalar c = base.c();
  const Scalar d = base.lambda(n - i + 1, u - (n - i) * c);
  if (d == 0) throw GenericityError("hat_lambda: vanishing eigenvalue at " + to_string(u));
  Scalar r = 1 / d;
  for (int l = 1; l <= n - i; ++l) {
    const Scalar den = base.lambda(l, u - (l - 1) * c);
    if (den == 0) throw GenericityError("hat_lambda: vanishing eigenvalue at " + to_string(u));
    r *= base.lambda(l, u - l * c) / den;
  }
  return r;
}

SparseOperator bg_operator(const HattedSource& hatted, const Scalar& u) {
  if (hatted.n() != 3) throw DomainError("bg_operator is defined for N = 3 only");
  const auto t = hatted.base().matrix(u);
  const auto th = hatted.matrix(u);
  return t->at(2, 3) * th->at(1, 3) - t->at(1, 3) * th->at(1, 2);
}

}  // namespace rttkit
