#include <sstream>

#include "holab/liealg.hpp"

namespace holab {

void LieAlgebraTable::set(int i, int j, int k, const Q& v) {
  c_[(size_t(i) * n_ + j) * n_ + k] = v;
  c_[(size_t(j) * n_ + i) * n_ + k] = -v;
}

Vec<Q> unit_vec(int n, int i) {
  Vec<Q> v(n, Q(0));
  v[i] = 1;
  return v;
}

Vec<Q> LieAlgebraTable::bracket_basis(int i, int j) const {
  Vec<Q> out(n_);
  for (int k = 0; k < n_; ++k) out[k] = C(i, j, k);
  return out;
}

Vec<Q> LieAlgebraTable::bracket(const Vec<Q>& x, const Vec<Q>& y) const {
  Vec<Q> out(n_, Q(0));
  for (int i = 0; i < n_; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (int j = 0; j < n_; ++j) {
      if (sgn(y[j]) == 0) continue;
      Q s = x[i] * y[j];
      for (int k = 0; k < n_; ++k)
        if (sgn(C(i, j, k))) out[k] += s * C(i, j, k);
    }
  }
  return out;
}

Mat<Q> LieAlgebraTable::ad_basis(int i) const {
  Mat<Q> A(n_, n_);
  for (int j = 0; j < n_; ++j)
    for (int k = 0; k < n_; ++k) A(k, j) = C(i, j, k);
  return A;
}

Mat<Q> LieAlgebraTable::ad(const Vec<Q>& x) const {
  Mat<Q> A(n_, n_);
  for (int i = 0; i < n_; ++i)
    if (sgn(x[i])) A = A + scale(ad_basis(i), x[i]);
  return A;
}

Mat<Q> columns_of(const std::vector<Vec<Q>>& vs, int n) {
  Mat<Q> P(n, int(vs.size()));
  for (size_t j = 0; j < vs.size(); ++j)
    for (int i = 0; i < n; ++i) P(i, int(j)) = vs[j][i];
  return P;
}

Vec<Q> coords_in(const Mat<Q>& P, const Vec<Q>& v) {
  Mat<Q> Pt = transpose(P);
  Mat<Q> rhs(P.r, 1);
  for (int i = 0; i < P.r; ++i) rhs(i, 0) = v[i];
  Mat<Q> c = mat_inverse(Pt * P) * (Pt * rhs);
  Mat<Q> back = P * c;
  for (int i = 0; i < P.r; ++i)
    if (back(i, 0) != v[i]) throw Error(Err::INVALID_INPUT, "vector outside the given span");
  Vec<Q> out(P.c);
  for (int j = 0; j < P.c; ++j) out[j] = c(j, 0);
  return out;
}

LieAlgebraTable LieAlgebraTable::change_basis(const Mat<Q>& P) const {
  Mat<Q> Pinv = mat_inverse(P);
  LieAlgebraTable out(n_);
  std::vector<Vec<Q>> cols;
  for (int j = 0; j < n_; ++j) {
    Vec<Q> v(n_);
    for (int i = 0; i < n_; ++i) v[i] = P(i, j);
    cols.push_back(v);
  }
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      Vec<Q> b = bracket(cols[i], cols[j]);
      for (int k = 0; k < n_; ++k) {
        Q s = 0;
        for (int l = 0; l < n_; ++l) s += Pinv(k, l) * b[l];
        out.set(i, j, k, s);
      }
    }
  return out;
}

LieAlgebraTable LieAlgebraTable::from_matrices(const std::vector<Mat<Q>>& basis) {
  const int n = int(basis.size());
  LieAlgebraTable out(n);
  if (n == 0) return out;
  std::vector<Vec<Q>> flat;
  for (const auto& B : basis) flat.push_back(flatten(B));
  Mat<Q> P = columns_of(flat, int(flat[0].size()));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec<Q> c = coords_in(P, flatten(commutator(basis[i], basis[j])));
      for (int k = 0; k < n; ++k) out.set(i, j, k, c[k]);
    }
  return out;
}

JacobiResult jacobi_check(const LieAlgebraTable& L) {
  JacobiResult r;
  const int n = L.dim();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        Vec<Q> ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        Vec<Q> a = L.bracket(L.bracket_basis(i, j), ek);
        Vec<Q> b = L.bracket(L.bracket_basis(j, k), ei);
        Vec<Q> c = L.bracket(L.bracket_basis(k, i), ej);
        for (int l = 0; l < n; ++l) {
          Q s = abs(a[l] + b[l] + c[l]);
          if (s > r.residual) {
            r.residual = s;
            r.i = i;
            r.j = j;
            r.k = k;
          }
        }
      }
  return r;
}

Mat<Q> killing_form(const LieAlgebraTable& L) {
  const int n = L.dim();
  std::vector<Mat<Q>> ad;
  for (int i = 0; i < n; ++i) ad.push_back(L.ad_basis(i));
  Mat<Q> K(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Q s = 0;
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          if (sgn(ad[i](k, l)) && sgn(ad[j](l, k))) s += ad[i](k, l) * ad[j](l, k);
      K(i, j) = s;
      K(j, i) = s;
    }
  return K;
}

namespace {

Subspace<Q> derived(const LieAlgebraTable& L, const Subspace<Q>& s) {
  Subspace<Q> out(L.dim());
  const auto& rows = s.rows();
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = i + 1; j < rows.size(); ++j) out.add(L.bracket(rows[i], rows[j]));
  return out;
}

}  // namespace

std::string LieFingerprint::str() const {
  std::ostringstream os;
  os << "dim=" << dim << ";killing=(" << n_pos << "," << n_zero << "," << n_neg << ");derived=";
  for (size_t k = 0; k < derived_series.size(); ++k) os << (k ? "," : "") << derived_series[k];
  os << ";center=" << center << ";radical=" << radical << ";semisimple=" << (semisimple ? 1 : 0);
  return os.str();
}

bool LieFingerprint::operator==(const LieFingerprint& o) const { return str() == o.str(); }

LieFingerprint killing_fingerprint(const LieAlgebraTable& L) {
  const int n = L.dim();
  LieFingerprint fp;
  fp.dim = n;
  Mat<Q> K = killing_form(L);
  Inertia in = inertia(K);
  fp.n_pos = in.pos;
  fp.n_zero = in.zero;
  fp.n_neg = in.neg;
  fp.semisimple = n > 0 && in.zero == 0;

  Subspace<Q> cur(n);
  for (int i = 0; i < n; ++i) cur.add(unit_vec(n, i));
  fp.derived_series.push_back(n);
  Subspace<Q> first = derived(L, cur);
  for (Subspace<Q> s = first;;) {
    fp.derived_series.push_back(s.dim());
    if (s.dim() == 0 || s.dim() == fp.derived_series[fp.derived_series.size() - 2]) break;
    s = derived(L, s);
  }

  // center: x with sum_i x_i C(i,j,k) = 0 for all j,k
  Mat<Q> sys(n * n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) sys(j * n + k, i) = L.C(i, j, k);
  fp.center = rank_nullspace(sys).nullspace.dim();

  // radical = Killing-orthogonal complement of [g, g] (characteristic zero)
  const auto& drows = first.rows();
  Mat<Q> ort(int(drows.size()), n);
  for (size_t r = 0; r < drows.size(); ++r) {
    for (int j = 0; j < n; ++j) {
      Q s = 0;
      for (int i = 0; i < n; ++i) s += drows[r][i] * K(i, j);
      ort(int(r), j) = s;
    }
  }
  fp.radical = drows.empty() ? n : rank_nullspace(ort).nullspace.dim();
  return fp;
}

SubalgebraResult subalgebra_closure(const LieAlgebraTable& L, const std::vector<Vec<Q>>& gens) {
  const int n = L.dim();
  SubalgebraResult out{Subspace<Q>(n), {}, LieAlgebraTable(0)};
  std::vector<Vec<Q>> frontier;
  for (const auto& g : gens)
    if (out.span.add(g)) frontier.push_back(g);
  std::vector<Vec<Q>> all = frontier;
  while (!frontier.empty()) {
    std::vector<Vec<Q>> next;
    for (const auto& a : frontier)
      for (size_t j = 0; j < all.size(); ++j) {
        Vec<Q> b = L.bracket(a, all[j]);
        if (out.span.add(b)) next.push_back(b);
      }
    all.insert(all.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  out.basis = out.span.rows();
  const int k = int(out.basis.size());
  out.table = LieAlgebraTable(k);
  if (k == 0) return out;
  Mat<Q> P = columns_of(out.basis, n);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Vec<Q> c = coords_in(P, L.bracket(out.basis[i], out.basis[j]));
      for (int l = 0; l < k; ++l) out.table.set(i, j, l, c[l]);
    }
  return out;
}

Subspace<Q> largest_ideal_in(const LieAlgebraTable& L, const std::vector<Vec<Q>>& vs) {
  const int n = L.dim();
  Subspace<Q> cur(n);
  for (const auto& v : vs) cur.add(v);
  // I_{k+1} = {x in I_k : [e_j, x] in I_k for all j}
  while (cur.dim() > 0) {
    const auto rows = cur.rows();
    const int d = int(rows.size());
    // unknown coefficients c in R^d; condition: reduce([e_j, sum c_r rows_r]) = 0
    Mat<Q> sys(n * n, d);
    for (int r = 0; r < d; ++r)
      for (int j = 0; j < n; ++j) {
        Vec<Q> red = cur.reduce(L.bracket(unit_vec(n, j), rows[r]));
        for (int k = 0; k < n; ++k) sys(j * n + k, r) = red[k];
      }
    auto ns = rank_nullspace(sys).nullspace;
    if (ns.dim() == d) break;
    Subspace<Q> next(n);
    for (const auto& c : ns.rows()) {
      Vec<Q> x(n, Q(0));
      for (int r = 0; r < d; ++r)
        if (sgn(c[r]))
          for (int k = 0; k < n; ++k) x[k] += c[r] * rows[r][k];
      next.add(x);
    }
    cur = next;
  }
  return cur;
}

}  // namespace holab
