#include "rttkit/gauss.hpp"

#include <functional>
#include <string>

#include "rttkit/errors.hpp"
#include "rttkit/rmatrix.hpp"

namespace rttkit {

namespace {

const SparseOperator& lookup(const std::map<std::pair<int, int>, SparseOperator>& table, int a, int b,
                             const char* name) {
  auto it = table.find({a, b});
  if (it == table.end())
    throw IndexError(std::string(name) + "_" + std::to_string(a) + std::to_string(b) + " is not a Gauss coordinate");
  return it->second;
}

std::string idx(int a, int b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

Scalar c_power(const Scalar& c, int e) {
  Scalar r = 1;
  for (int k = 0; k < (e < 0 ? -e : e); ++k) r *= c;
  return e < 0 ? Scalar(1 / r) : r;
}

// Ordered chains i = s_0 < s_1 < ... < s_m = j with interior points drawn from
// [lo, j-1]; calls visit(sequence) for each.
void for_each_chain(int i, int j, int lo, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> mids;
  for (int s = lo; s < j; ++s) mids.push_back(s);
  const std::size_t m = mids.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    std::vector<int> seq{i};
    for (std::size_t b = 0; b < m; ++b)
      if (mask & (std::size_t{1} << b)) seq.push_back(mids[b]);
    seq.push_back(j);
    visit(seq);
  }
}

}  // namespace

const SparseOperator& GaussFrame::F(int j, int i) const { return lookup(f, j, i, "F"); }
const SparseOperator& GaussFrame::E(int i, int j) const { return lookup(e, i, j, "E"); }
const SparseOperator& GaussFrame::K(int i) const {
  if (i < 1 || i > n) throw IndexError("k index out of range");
  return k[static_cast<std::size_t>(i - 1)];
}
const SparseOperator& GaussFrame::Kinv(int i) const {
  if (i < 1 || i > n) throw IndexError("k index out of range");
  return k_inv[static_cast<std::size_t>(i - 1)];
}
const SparseOperator& TildeFrame::F(int j, int i) const { return lookup(f, j, i, "F~"); }
const SparseOperator& TildeFrame::E(int i, int j) const { return lookup(e, i, j, "E~"); }
const SparseOperator& GaussZeroModes::F(int j, int i) const { return lookup(f, j, i, "F[0]"); }
const SparseOperator& GaussZeroModes::E(int i, int j) const { return lookup(e, i, j, "E[0]"); }

GaussFrame gauss_decompose(const MonodromySource& source, const Scalar& u) {
  const int n = source.n();
  GaussFrame frame;
  frame.u = u;
  frame.n = n;
  frame.shape = source.shape();
  frame.k.resize(static_cast<std::size_t>(n));
  frame.k_inv.resize(static_cast<std::size_t>(n));
  OperatorMatrix m = *source.matrix(u);
  for (int p = n; p >= 1; --p) {
    const SparseOperator& kp = m.at(p, p);
    SparseOperator kinv;
    try {
      kinv = invert(kp);
    } catch (const SingularError&) {
      throw SingularError("gauss_decompose: k_" + std::to_string(p) + "(" + to_string(u) + ") is singular");
    }
    for (int i = 1; i < p; ++i) {
      frame.f[{p, i}] = m.at(i, p) * kinv;
      frame.e[{i, p}] = kinv * m.at(p, i);
    }
    for (int i = 1; i < p; ++i)
      for (int j = 1; j < p; ++j) m.at(i, j) -= m.at(i, p) * frame.e.at({j, p});
    frame.k[static_cast<std::size_t>(p - 1)] = kp;
    frame.k_inv[static_cast<std::size_t>(p - 1)] = std::move(kinv);
  }
  return frame;
}

TildeFrame tilde_coordinates(const GaussFrame& frame) {
  TildeFrame t;
  t.u = frame.u;
  t.n = frame.n;
  t.shape = frame.shape;
  for (int i = 1; i <= frame.n; ++i)
    for (int j = i + 1; j <= frame.n; ++j) {
      SparseOperator sf(frame.shape), se(frame.shape);
      for_each_chain(i, j, i + 1, [&](const std::vector<int>& seq) {
        const std::size_t len = seq.size() - 1;  // number of factors, ℓ + 1
        // F_{s1,s0} F_{s2,s1} ... F_{j,s_ℓ}
        SparseOperator pf = frame.F(seq[1], seq[0]);
        for (std::size_t a = 1; a < len; ++a) pf = pf * frame.F(seq[a + 1], seq[a]);
        // E_{s_ℓ,j} E_{s_{ℓ-1},s_ℓ} ... E_{s0,s1}
        SparseOperator pe = frame.E(seq[len - 1], seq[len]);
        for (std::size_t a = len - 1; a >= 1; --a) pe = pe * frame.E(seq[a - 1], seq[a]);
        if (len % 2 == 1) {  // (-1)^{ℓ+1} with ℓ = len - 1
          sf -= pf;
          se -= pe;
        } else {
          sf += pf;
          se += pe;
        }
      });
      t.f[{j, i}] = std::move(sf);
      t.e[{i, j}] = std::move(se);
    }
  return t;
}

OperatorMatrix f_matrix(const GaussFrame& frame) {
  OperatorMatrix m(frame.n, frame.shape);
  for (int i = 1; i <= frame.n; ++i) {
    m.at(i, i) = SparseOperator::identity(frame.shape);
    for (int j = i + 1; j <= frame.n; ++j) m.at(i, j) = frame.F(j, i);
  }
  return m;
}

OperatorMatrix d_matrix(const GaussFrame& frame) {
  OperatorMatrix m(frame.n, frame.shape);
  for (int i = 1; i <= frame.n; ++i) m.at(i, i) = frame.K(i);
  return m;
}

OperatorMatrix e_matrix(const GaussFrame& frame) {
  OperatorMatrix m(frame.n, frame.shape);
  for (int i = 1; i <= frame.n; ++i) {
    m.at(i, i) = SparseOperator::identity(frame.shape);
    for (int j = i + 1; j <= frame.n; ++j) m.at(j, i) = frame.E(i, j);
  }
  return m;
}

OperatorMatrix f_inverse_matrix(const TildeFrame& tilde) {
  OperatorMatrix m(tilde.n, tilde.shape);
  for (int i = 1; i <= tilde.n; ++i) {
    m.at(i, i) = SparseOperator::identity(tilde.shape);
    for (int j = i + 1; j <= tilde.n; ++j) m.at(i, j) = tilde.F(j, i);
  }
  return m;
}

OperatorMatrix e_inverse_matrix(const TildeFrame& tilde) {
  OperatorMatrix m(tilde.n, tilde.shape);
  for (int i = 1; i <= tilde.n; ++i) {
    m.at(i, i) = SparseOperator::identity(tilde.shape);
    for (int j = i + 1; j <= tilde.n; ++j) m.at(j, i) = tilde.E(i, j);
  }
  return m;
}

OperatorMatrix matrix_product(const OperatorMatrix& a, const OperatorMatrix& b) {
  if (a.n != b.n || a.data.empty()) throw ShapeError("matrix_product: size mismatch");
  const SpaceShape shape = a.data.front().shape();
  OperatorMatrix out(a.n, shape);
  for (int i = 1; i <= a.n; ++i)
    for (int j = 1; j <= a.n; ++j)
      for (int l = 1; l <= a.n; ++l)
        if (!a.at(i, l).is_zero() && !b.at(l, j).is_zero()) out.at(i, j) += a.at(i, l) * b.at(l, j);
  return out;
}

OperatorMatrix reconstruct(const GaussFrame& frame) {
  return matrix_product(matrix_product(f_matrix(frame), d_matrix(frame)), e_matrix(frame));
}

bool is_identity(const OperatorMatrix& m) {
  if (m.data.empty()) return true;
  const SpaceShape shape = m.data.front().shape();
  const auto id = SparseOperator::identity(shape);
  for (int i = 1; i <= m.n; ++i)
    for (int j = 1; j <= m.n; ++j)
      if (i == j ? m.at(i, j) != id : !m.at(i, j).is_zero()) return false;
  return true;
}

CheckList verify_gauss_frame(const MonodromySource& source, const Scalar& u) {
  CheckList out;
  const auto frame = gauss_decompose(source, u);
  const auto t = source.matrix(u);
  const auto rec = reconstruct(frame);
  for (int i = 1; i <= frame.n; ++i)
    for (int j = 1; j <= frame.n; ++j)
      out.add("Gmat", "T" + idx(i, j), rec.at(i, j) == t->at(i, j));
  const auto vac = source.vacuum();
  for (int i = 1; i <= frame.n; ++i) {
    out.add("tii", "k" + std::to_string(i) + " vacuum",
            frame.K(i).apply(vac) == vac * source.lambda(i, u));
    for (int j = i + 1; j <= frame.n; ++j)
      out.add("GE1", "E" + idx(i, j) + " vacuum", frame.E(i, j).apply(vac).is_zero());
  }
  const auto tilde = tilde_coordinates(frame);
  const auto f = f_matrix(frame), e = e_matrix(frame);
  const auto fi = f_inverse_matrix(tilde), ei = e_inverse_matrix(tilde);
  out.add("tFF", "F^-1 F", is_identity(matrix_product(fi, f)));
  out.add("tFF", "F F^-1", is_identity(matrix_product(f, fi)));
  out.add("tEE", "E^-1 E", is_identity(matrix_product(ei, e)));
  out.add("tEE", "E E^-1", is_identity(matrix_product(e, ei)));
  return out;
}

GaussZeroModes gauss_zero_modes(const MonodromySource& source) {
  if (!source.has_zero_modes())
    throw DomainError("gauss_zero_modes: " + source.describe() + " has no zero modes");
  GaussZeroModes z;
  z.n = source.n();
  for (int i = 1; i <= z.n; ++i) {
    z.k.push_back(source.zero_mode(i, i));
    for (int j = i + 1; j <= z.n; ++j) {
      z.f[{j, i}] = source.zero_mode(i, j);
      z.e[{i, j}] = source.zero_mode(j, i);
    }
  }
  return z;
}

CheckList verify_multiple_commutators(const MonodromySource& source, const Scalar& u, bool swap_order) {
  CheckList out;
  const int n = source.n();
  const Scalar c = source.c();
  const auto z = gauss_zero_modes(source);
  const auto fr = gauss_decompose(source, u);
  const auto ti = tilde_coordinates(fr);
  auto br = [swap_order](const SparseOperator& a, const SparseOperator& b) {
    return swap_order ? commutator(b, a) : commutator(a, b);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const Scalar pref = c_power(c, i + 1 - j);
      // F_ji(u) = c^{i+1-j} [[…[F_{j,j-1}(u), F_{j-1,j-2}[0]], …], F_{i+1,i}[0]]
      SparseOperator x = fr.F(j, j - 1);
      for (int s = j - 1; s >= i + 1; --s) x = br(x, z.F(s, s - 1));
      out.add("zm-comF", "F" + idx(j, i), x * pref == fr.F(j, i));
      // F~_ji(u) = -c^{i+1-j} [F_{j,j-1}[0], […, [F_{i+2,i+1}[0], F_{i+1,i}(u)]…]]
      x = fr.F(i + 1, i);
      for (int s = i + 2; s <= j; ++s) x = br(z.F(s, s - 1), x);
      out.add("zm-comF", "F~" + idx(j, i), x * (-pref) == ti.F(j, i));
      // E_ij(u) = c^{i+1-j} [E_{i,i+1}[0], […, [E_{j-2,j-1}[0], E_{j-1,j}(u)]…]]
      x = fr.E(j - 1, j);
      for (int s = j - 2; s >= i; --s) x = br(z.E(s, s + 1), x);
      out.add("zm-comE", "E" + idx(i, j), x * pref == fr.E(i, j));
      // E~_ij(u) = -c^{i+1-j} [[…[E_{i,i+1}(u), E_{i+1,i+2}[0]], …], E_{j-1,j}[0]]
      x = fr.E(i, i + 1);
      for (int s = i + 1; s <= j - 1; ++s) x = br(x, z.E(s, s + 1));
      out.add("zm-comE", "E~" + idx(i, j), x * (-pref) == ti.E(i, j));
    }
  const Scalar cinv = 1 / c;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      out.add("ap6", "F" + idx(j, i), br(fr.F(j, j - 1), z.F(j - 1, i)) * cinv == fr.F(j, i));
      out.add("ap7", "F" + idx(j, i),
              fr.F(j, i) - fr.F(j - 1, i) * fr.F(j, j - 1) == br(z.F(j, j - 1), fr.F(j - 1, i)) * cinv);
      for (int s = i + 1; s < j; ++s) {
        SparseOperator lhs = fr.F(s, i);
        for (int r = s + 1; r <= j; ++r) lhs = br(z.F(r, r - 1), lhs);
        lhs *= c_power(c, s - j);
        SparseOperator rhs(source.shape());
        // Σ_ℓ (-1)^ℓ over chains i < i_1 < … < i_ℓ < j with i_1 >= s.
        for_each_chain(i, j, s, [&](const std::vector<int>& seq) {
          SparseOperator p = fr.F(seq[1], seq[0]);
          for (std::size_t a = 1; a + 1 < seq.size(); ++a) p = p * fr.F(seq[a + 1], seq[a]);
          if ((seq.size() - 2) % 2 == 0)
            rhs += p;
          else
            rhs -= p;
        });
        out.add("ap8", "F" + idx(j, i) + " s=" + std::to_string(s), lhs == rhs);
      }
    }
  for (int i = 1; i < n; ++i)
    out.add("kF0", "k" + std::to_string(i),
            br(fr.Kinv(i), z.F(i + 1, i)) == fr.Kinv(i) * fr.F(i + 1, i) * c);
  return out;
}

CheckList verify_gauss_exchange_relations(const MonodromySource& source, const Scalar& u, const Scalar& v) {
  CheckList out;
  const int n = source.n();
  const Scalar c = source.c();
  const Scalar fvu = f_scalar(v, u, c), guv = g_scalar(u, v, c), gvu = g_scalar(v, u, c);
  const auto fu = gauss_decompose(source, u);
  const auto fv = gauss_decompose(source, v);
  for (int i = 1; i < n; ++i) {
    out.add("ap3", "i=" + std::to_string(i),
            fu.K(i) * fv.F(i + 1, i) * fu.Kinv(i) == fv.F(i + 1, i) * fvu + fu.F(i + 1, i) * guv);
    out.add("ap4", "i=" + std::to_string(i),
            fu.Kinv(i) * fv.E(i, i + 1) * fu.K(i) == fv.E(i, i + 1) * fvu + fu.E(i, i + 1) * guv);
    for (int j = 1; j < n; ++j) {
      const auto lhs = commutator(fv.E(i, i + 1), fu.F(j + 1, j));
      const bool ok = i == j ? lhs == (fu.K(i) * fu.Kinv(i + 1) - fv.K(i) * fv.Kinv(i + 1)) * gvu : lhs.is_zero();
      out.add("ap5", "i=" + std::to_string(i) + " j=" + std::to_string(j), ok);
    }
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j) {
      const auto lhs = fv.F(j, j - 1) * fu.F(j - 1, i);
      const auto rhs = fu.F(j - 1, i) * fv.F(j, j - 1) * fvu +
                       (fv.F(j, i) - fu.F(j, i) + fu.F(j - 1, i) * fu.F(j, j - 1)) * guv;
      out.add("ap1", "F" + idx(j, i), lhs == rhs);
      const auto lhs_e = fu.E(i, j - 1) * fv.E(j - 1, j);
      const auto rhs_e = fv.E(j - 1, j) * fu.E(i, j - 1) * fvu +
                         (fv.E(i, j) - fu.E(i, j) + fu.E(j - 1, j) * fu.E(i, j - 1)) * guv;
      out.add("ap2", "E" + idx(i, j), lhs_e == rhs_e);
    }
  const auto fc = gauss_decompose(source, u - c);
  for (int i = 1; i < n; ++i) {
    out.add("b4", "i=" + std::to_string(i), fu.Kinv(i) * fu.F(i + 1, i) == fc.F(i + 1, i) * fu.Kinv(i));
    out.add("b5", "i=" + std::to_string(i), fu.E(i, i + 1) * fu.Kinv(i) == fu.Kinv(i) * fc.E(i, i + 1));
  }
  return out;
}

GaussFrame hat_gauss_via_formula(const MonodromySource& base, const Scalar& u) {
  const int n = base.n();
  const Scalar c = base.c();
  std::map<int, GaussFrame> frames;
  std::map<int, TildeFrame> tildes;
  auto frame_at = [&](int m) -> const GaussFrame& {
    auto it = frames.find(m);
    if (it == frames.end()) it = frames.emplace(m, gauss_decompose(base, u - m * c)).first;
    return it->second;
  };
  auto tilde_at = [&](int m) -> const TildeFrame& {
    auto it = tildes.find(m);
    if (it == tildes.end()) it = tildes.emplace(m, tilde_coordinates(frame_at(m))).first;
    return it->second;
  };
  GaussFrame out;
  out.u = u;
  out.n = n;
  out.shape = base.shape();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const auto& t = tilde_at(n - j + 1);
      out.f[{j, i}] = t.F(n + 1 - i, n + 1 - j);
      out.e[{i, j}] = t.E(n + 1 - j, n + 1 - i);
    }
  for (int j = 1; j <= n; ++j) {
    SparseOperator k = frame_at(n - j).Kinv(n + 1 - j);
    for (int l = 1; l <= n - j; ++l) k = k * frame_at(l).K(l) * frame_at(l - 1).Kinv(l);
    out.k.push_back(k);
    out.k_inv.push_back(invert(k));
  }
  return out;
}

CheckList verify_hat_gauss(const HattedSource& hatted, const Scalar& u) {
  CheckList out;
  const int n = hatted.n();
  const auto formula = hat_gauss_via_formula(hatted.base(), u);
  const auto direct = gauss_decompose(hatted, u);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      out.add("hFF", "F^" + idx(j, i), formula.F(j, i) == direct.F(j, i));
      out.add("hEE", "E^" + idx(i, j), formula.E(i, j) == direct.E(i, j));
    }
  const auto vac = hatted.vacuum();
  for (int j = 1; j <= n; ++j) {
    out.add("hk", "k^" + std::to_string(j), formula.K(j) == direct.K(j));
    out.add("hk", "k^" + std::to_string(j) + " vacuum", formula.K(j).apply(vac) == vac * hatted.lambda(j, u));
  }
  return out;
}

CheckList verify_induction_relations(const HattedSource& hatted, const Scalar& u) {
  CheckList out;
  const int n = hatted.n();
  const Scalar c = hatted.c();
  const auto& base = hatted.base();
  const auto th = hatted.matrix(u);
  const auto fu = gauss_decompose(base, u);
  const auto fc = gauss_decompose(base, u - c);
  const auto tu = tilde_coordinates(fu);
  const auto tc = tilde_coordinates(fc);
  // Right-lower corner of T̂ and its normal-ordered forms.
  out.add("b1", "T^NN", th->at(n, n) == fu.Kinv(1));
  out.add("b1", "T^N-1,N", th->at(n - 1, n) == fu.Kinv(1) * tu.F(2, 1));
  out.add("b1", "T^N,N-1", th->at(n, n - 1) == tu.E(1, 2) * fu.Kinv(1));
  out.add("b4", "T^N-1,N normal ordered", th->at(n - 1, n) == tc.F(2, 1) * fu.Kinv(1));
  out.add("b5", "T^N,N-1 normal ordered", th->at(n, n - 1) == fu.Kinv(1) * tc.E(1, 2));
  out.add("b7", "T^N-1,N-1",
          th->at(n - 1, n - 1) == fc.K(1) * fc.Kinv(2) * fu.Kinv(1) + tc.F(2, 1) * fu.Kinv(1) * tc.E(1, 2));
  if (!hatted.has_zero_modes()) return out;
  const Scalar cinv = 1 / c;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      out.add("b8", "T^" + idx(i, j), commutator(th->at(j, j), hatted.zero_mode(i, j)) * cinv == th->at(i, j));
  for (int l = 2; l <= n; ++l)
    out.add("b12", "l=" + std::to_string(l),
            commutator(th->at(l - 1, l), hatted.zero_mode(l, l - 1)) == (th->at(l, l) - th->at(l - 1, l - 1)) * c);
  return out;
}

}  // namespace rttkit
