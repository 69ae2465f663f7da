#include <sstream>

#include "holab/holonomy.hpp"

namespace holab {

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "dim=" << dim << ";commutant=" << commutant_dim << ";derived=" << derived_dim
     << ";center=" << center_dim << ";cx=" << complex_structures
     << ";symcomm=" << sym_commutant_dim << ";fixed=" << fixed_dim
     << ";lagr=" << (lagrangian_split ? 1 : 0);
  return os.str();
}

namespace {

using MQ = Mat<Q>;

// S in the commutant, g-symmetric, anticommuting with K, S^2 = c I (c > 0).
std::optional<MQ> lagrangian_involution(const std::vector<MQ>& comm, const MQ& g, const MQ& K) {
  const int n = g.r;
  Mat<Q> sys(2 * n * n, int(comm.size()));
  for (size_t k = 0; k < comm.size(); ++k) {
    MQ gs = g * comm[k];
    MQ sym = gs - transpose(gs);
    MQ anti = comm[k] * K + K * comm[k];
    for (int e = 0; e < n * n; ++e) {
      sys(e, int(k)) = sym.a[e];
      sys(n * n + e, int(k)) = anti.a[e];
    }
  }
  std::vector<MQ> cand;
  auto ns_sys = rank_nullspace(sys).nullspace;
  for (const auto& c : ns_sys.rows()) {
    MQ S(n, n);
    for (size_t k = 0; k < comm.size(); ++k)
      if (sgn(c[k]) != 0) S = S + scale(comm[k], c[k]);
    cand.push_back(S);
  }
  auto good = [&](const MQ& S) {
    MQ S2 = S * S;
    return sgn(S2(0, 0)) > 0 && is_zero_mat(S2 - scale(MQ::identity(n), S2(0, 0)));
  };
  for (const auto& S : cand)
    if (good(S)) return S;
  for (size_t i = 0; i < cand.size(); ++i)
    for (size_t j = i + 1; j < cand.size(); ++j)
      if (MQ S = cand[i] + cand[j]; good(S)) return S;
  return std::nullopt;
}

bool all_commute(const std::vector<MQ>& h, const MQ& X) {
  for (const auto& H : h)
    if (!is_zero_mat(commutator(H, X))) return false;
  return true;
}

// {H in span(h) : tr(H K) = 0}
std::vector<MQ> trace_orthogonal(const std::vector<MQ>& h, const MQ& K) {
  Mat<Q> row(1, int(h.size()));
  for (size_t k = 0; k < h.size(); ++k) row(0, int(k)) = trace(h[k] * K);
  std::vector<MQ> out;
  auto ns_row = rank_nullspace(row).nullspace;
  for (const auto& c : ns_row.rows()) {
    MQ H(K.r, K.r);
    for (size_t k = 0; k < h.size(); ++k)
      if (sgn(c[k]) != 0) H = H + scale(h[k], c[k]);
    out.push_back(H);
  }
  return out;
}

int center_dim(const std::vector<MQ>& h) {
  if (h.empty()) return 0;
  const int n = h[0].r;
  Mat<Q> sys(int(h.size()) * n * n, int(h.size()));
  for (size_t j = 0; j < h.size(); ++j)
    for (size_t k = 0; k < h.size(); ++k) {
      MQ c = commutator(h[k], h[j]);
      for (int e = 0; e < n * n; ++e) sys(int(j) * n * n + e, int(k)) = c.a[e];
    }
  return rank_nullspace(sys).nullspace.dim();
}

int sym_commutant_dim(const std::vector<MQ>& comm, const MQ& g) {
  const int n = g.r;
  Mat<Q> sys(n * n, int(comm.size()));
  for (size_t k = 0; k < comm.size(); ++k) {
    MQ s = g * comm[k];
    s = s - transpose(s);
    for (int e = 0; e < n * n; ++e) sys(e, int(k)) = s.a[e];
  }
  return rank_nullspace(sys).nullspace.dim();
}

}  // namespace

Classification classify_subalgebra(const std::vector<Mat<Q>>& h, const Mat<Q>& g, int m) {
  const int n = g.r;
  Classification out;
  Fingerprint& fp = out.fp;
  auto hs = span_of(h, n);
  std::vector<MQ> basis = basis_matrices(hs, n);
  fp.dim = hs.dim();
  if (fp.dim == 0) {
    fp.commutant_dim = n * n;
    fp.sym_commutant_dim = n * (n + 1) / 2;
    fp.fixed_dim = n;
    out.label = HolLabel::TRIVIAL;
    out.certificate = "zero algebra";
    return out;
  }
  auto comm = basis_matrices(commutant(basis, n), n);
  fp.commutant_dim = int(comm.size());
  Subspace<Q> der(n * n);
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) der.add(flatten(commutator(basis[i], basis[j])));
  fp.derived_dim = der.dim();
  fp.center_dim = center_dim(basis);
  auto cx = invariant_complex_structures(basis, g);
  fp.complex_structures = int(cx.size()) / 2;
  fp.sym_commutant_dim = sym_commutant_dim(comm, g);
  {
    Mat<Q> stack(int(basis.size()) * n, n);
    for (size_t k = 0; k < basis.size(); ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) stack(int(k) * n + i, j) = basis[k](i, j);
    fp.fixed_dim = n - rank_nullspace(stack).rank;
  }

  const int so_dim = m * (m - 1) / 2;
  for (size_t ci = 0; ci < cx.size(); ci += 2) {
    const MQ& K = cx[ci].raw;
    bool K_in_h = hs.contains(flatten(K));
    if (fp.dim == m * m && K_in_h) {
      out.label = HolLabel::U_M;
      out.certificate = "commutes with an invariant complex structure J, contains J, dim u(m)";
      return out;
    }
    bool traceless = true;
    for (const auto& H : basis)
      if (sgn(trace(H * K)) != 0) traceless = false;
    if (fp.dim == m * m - 1 && traceless && m >= 2) {
      out.label = HolLabel::SU_M;
      out.certificate = "commutes with J, complex-traceless, dim su(m)";
      return out;
    }
    if (auto S = lagrangian_involution(comm, g, K)) {
      fp.lagrangian_split = true;
      if (fp.dim == so_dim && !K_in_h) {
        out.label = HolLabel::SO_M_LAGRANGIAN;
        out.certificate = "commutes with J and a g-symmetric J-anti-invariant involution, dim so(m)";
        return out;
      }
    }
    if (fp.dim == so_dim + 1 && K_in_h) {
      auto h0 = trace_orthogonal(basis, K);
      auto comm0 = basis_matrices(commutant(h0, n), n);
      if (auto S = lagrangian_involution(comm0, g, K); S && all_commute(h0, *S)) {
        out.label = HolLabel::SO_M_PLUS_U1;
        out.certificate = "J central in h, J-orthogonal part preserves a Lagrangian splitting";
        return out;
      }
    }
  }
  out.label = HolLabel::OTHER;
  out.certificate = "no structural certificate";
  return out;
}

}  // namespace holab
