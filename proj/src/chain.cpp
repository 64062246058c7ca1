#include "rttkit/chain.hpp"

#include <map>
#include <utility>

#include "rttkit/errors.hpp"

namespace rttkit {

ChainRealization::ChainRealization(int n, Scalar c, std::vector<Scalar> z, std::vector<Scalar> twist,
                                   std::vector<SiteKind> kinds)
    : shape_(n, static_cast<int>(z.size())), c_(std::move(c)), z_(std::move(z)),
      twist_(std::move(twist)), kinds_(std::move(kinds)) {
  if (twist_.empty()) twist_.assign(static_cast<std::size_t>(n), Scalar(1));
  if (kinds_.empty()) kinds_.assign(z_.size(), SiteKind::Fundamental);
  if (twist_.size() != static_cast<std::size_t>(n))
    throw ShapeError("ChainRealization: twist must have N entries");
  if (kinds_.size() != z_.size()) throw ShapeError("ChainRealization: one kind per site required");
  for (const auto& k : twist_)
    if (k == 0) throw DomainError("ChainRealization: twist entries must be nonzero");
  for (std::size_t a = 0; a < z_.size(); ++a)
    for (std::size_t b = a + 1; b < z_.size(); ++b)
      if (z_[a] == z_[b]) throw GenericityError("ChainRealization: inhomogeneities must be distinct");
}

bool ChainRealization::twisted() const {
  for (const auto& k : twist_)
    if (k != 1) return true;
  return false;
}

std::shared_ptr<const OperatorMatrix> ChainRealization::matrix(const Scalar& u) const {
  for (const auto& z : z_)
    if (u == z) throw PoleError("chain entry has a pole at u = " + to_string(u));
  return cache_.get(u, [&] { return compute(u); });
}

OperatorMatrix ChainRealization::compute(const Scalar& u) const {
  const int n = shape_.n;
  const std::size_t dim = shape_.dim;
  // triplets[x][j]: entries of T_{x+1, j+1}
  std::vector<std::vector<std::vector<SparseOperator::Triplet>>> triplets(
      static_cast<std::size_t>(n), std::vector<std::vector<SparseOperator::Triplet>>(static_cast<std::size_t>(n)));
  using Key = std::pair<int, std::size_t>;  // (aux color 0-based, quantum basis index)
  for (std::size_t col = 0; col < dim; ++col) {
    for (int j = 0; j < n; ++j) {
      std::map<Key, Scalar> vec{{{j, col}, Scalar(1)}};
      for (int a = 1; a <= shape_.l; ++a) {
        const Scalar g = c_ / (u - z_[static_cast<std::size_t>(a - 1)]);
        const std::size_t stride = shape_.stride(a);
        std::map<Key, Scalar> next;
        auto push = [&next](int x, std::size_t st, const Scalar& v) {
          auto [it, ins] = next.emplace(Key{x, st}, v);
          if (!ins) it->second += v;
        };
        for (const auto& [key, cf] : vec) {
          const auto [x, st] = key;
          push(x, st, cf);
          const int q = static_cast<int>((st / stride) % static_cast<std::size_t>(n));
          if (kinds_[static_cast<std::size_t>(a - 1)] == SiteKind::Fundamental) {
            // P swaps auxiliary and site colors.
            const std::size_t st2 = st + static_cast<std::size_t>(x) * stride - static_cast<std::size_t>(q) * stride;
            push(q, st2, g * cf);
          } else if (q == n - 1 - x) {
            for (int i = 0; i < n; ++i) {
              const std::size_t st2 = st - static_cast<std::size_t>(q) * stride +
                                      static_cast<std::size_t>(n - 1 - i) * stride;
              push(i, st2, -g * cf);
            }
          }
        }
        vec = std::move(next);
      }
      for (const auto& [key, cf] : vec) {
        if (cf == 0) continue;
        triplets[static_cast<std::size_t>(key.first)][static_cast<std::size_t>(j)].emplace_back(
            key.second, col, cf * twist_[static_cast<std::size_t>(key.first)]);
      }
    }
  }
  OperatorMatrix m(n, shape_);
  for (int x = 0; x < n; ++x)
    for (int j = 0; j < n; ++j)
      m.at(x + 1, j + 1) = SparseOperator::from_triplets(
          shape_, std::move(triplets[static_cast<std::size_t>(x)][static_cast<std::size_t>(j)]));
  return m;
}

Scalar ChainRealization::lambda(int i, const Scalar& u) const {
  check_indices(i, i);
  Scalar r = twist_[static_cast<std::size_t>(i - 1)];
  for (std::size_t a = 0; a < z_.size(); ++a) {
    const Scalar w = u - z_[a];
    if (w == 0) throw PoleError("lambda has a pole at u = " + to_string(u));
    if (kinds_[a] == SiteKind::Fundamental && i == 1) r *= (w + c_) / w;
    if (kinds_[a] == SiteKind::Conjugate && i == shape_.n) r *= (w - c_) / w;
  }
  return r;
}

SparseOperator ChainRealization::zero_mode(int i, int j) const {
  check_indices(i, j);
  if (twisted()) throw DomainError("zero modes unavailable: twisted chain is not normalized to T(u) -> I");
  const int n = shape_.n;
  SparseOperator out(shape_);
  for (int a = 1; a <= shape_.l; ++a) {
    if (kinds_[static_cast<std::size_t>(a - 1)] == SiteKind::Fundamental)
      out += elementary(shape_, a, j, i);
    else
      out -= elementary(shape_, a, n + 1 - i, n + 1 - j);
  }
  return out * c_;
}

std::string ChainRealization::describe() const {
  std::string s = "chain(N=" + std::to_string(shape_.n) + ", L=" + std::to_string(shape_.l) +
                  ", c=" + to_string(c_) + ", z=" + to_string(z_);
  std::string kinds;
  for (auto k : kinds_) kinds += k == SiteKind::Fundamental ? 'f' : 'd';
  s += ", sites=" + kinds;
  if (twisted()) s += ", twist=" + to_string(twist_);
  return s + ")";
}

CorruptedSource::CorruptedSource(std::shared_ptr<const MonodromySource> base, int i, int j, Scalar factor)
    : base_(std::move(base)), i_(i), j_(j), factor_(std::move(factor)) {
  check_indices(i, j);
}

std::shared_ptr<const OperatorMatrix> CorruptedSource::matrix(const Scalar& u) const {
  return cache_.get(u, [&] {
    OperatorMatrix m = *base_->matrix(u);
    m.at(i_, j_) *= factor_;
    return m;
  });
}

Scalar CorruptedSource::lambda(int i, const Scalar& u) const {
  Scalar l = base_->lambda(i, u);
  return (i == i_ && i == j_) ? Scalar(l * factor_) : l;
}

std::string CorruptedSource::describe() const {
  return "corrupted(T_" + std::to_string(i_) + std::to_string(j_) + " *= " + to_string(factor_) + ", " +
         base_->describe() + ")";
}

}  // namespace rttkit
