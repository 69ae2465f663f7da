#include "holab/holonomy.hpp"

namespace holab {

namespace {

using MQ = Mat<Q>;

MQ columns(const std::vector<Vec<Q>>& vs, int n) {
  MQ B(n, int(vs.size()));
  for (size_t j = 0; j < vs.size(); ++j)
    for (int i = 0; i < n; ++i) B(i, int(j)) = vs[j][i];
  return B;
}

MQ kernel_columns(const MQ& A) {
  auto ns = rank_nullspace(A).nullspace;
  return columns(ns.rows(), A.c);
}

// Action of H on the invariant subspace spanned by the columns of B.
MQ restrict_to(const MQ& H, const MQ& B, const MQ& g) {
  MQ Bt = transpose(B);
  return mat_inverse(Bt * g * B) * Bt * g * H * B;
}

struct Splitter {
  const std::vector<MQ>& h;
  const MQ& g;
  Decomposition out;

  void orthogonal_lines(const MQ& B) {
    const int n = B.r;
    std::vector<Vec<Q>> done;
    for (int j = 0; j < B.c; ++j) {
      Vec<Q> v(n);
      for (int i = 0; i < n; ++i) v[i] = B(i, j);
      for (const auto& u : done) {
        Q num = 0, den = 0;
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) {
            num += u[a] * g(a, b) * v[b];
            den += u[a] * g(a, b) * u[b];
          }
        Q c = num / den;
        for (int a = 0; a < n; ++a) v[a] -= c * u[a];
      }
      done.push_back(v);
      out.blocks.push_back({columns({v}, n), true});
    }
  }

  void split(const MQ& B) {
    const int k = B.c;
    std::vector<MQ> hb;
    bool acts = false;
    for (const auto& H : h) {
      hb.push_back(restrict_to(H, B, g));
      if (!is_zero_mat(hb.back())) acts = true;
    }
    if (!acts) {
      orthogonal_lines(B);
      return;
    }
    if (k == 1) {
      out.blocks.push_back({B, false});
      return;
    }
    MQ gb = transpose(B) * g * B;
    auto comm = basis_matrices(commutant(hb, k), k);
    // g-symmetric part of the commutant
    MQ sys(k * k, int(comm.size()));
    for (size_t c = 0; c < comm.size(); ++c) {
      MQ s = gb * comm[c];
      s = s - transpose(s);
      for (int e = 0; e < k * k; ++e) sys(e, int(c)) = s.a[e];
    }
    std::vector<MQ> sym;
    auto ns_sys = rank_nullspace(sys).nullspace;
    for (const auto& c : ns_sys.rows()) {
      MQ S(k, k);
      for (size_t j = 0; j < comm.size(); ++j)
        if (sgn(c[j]) != 0) S = S + scale(comm[j], c[j]);
      sym.push_back(S);
    }
    if (sym.size() <= 1) {
      out.blocks.push_back({B, false});
      return;
    }
    // Any commuting S has invariant eigenspaces; g-orthogonal complements stay invariant.
    std::vector<MQ> tries = sym;
    tries.insert(tries.end(), comm.begin(), comm.end());
    const size_t base = tries.size();
    for (size_t i = 0; i < base; ++i)
      for (size_t j = i + 1; j < base; ++j) {
        tries.push_back(tries[i] + tries[j]);
        tries.push_back(tries[i] - tries[j]);
        tries.push_back(tries[i] * tries[j]);
      }
    for (const auto& S : tries) {
      for (const Q& lam : rational_roots(charpoly(S))) {
        MQ V = kernel_columns(S - scale(MQ::identity(k), lam));
        if (V.c == 0 || V.c == k) continue;
        MQ Vperp = kernel_columns(transpose(V) * gb);
        split(B * V);
        split(B * Vperp);
        return;
      }
    }
    out.complete = false;
    out.blocks.push_back({B, false});
  }
};

}  // namespace

Decomposition isotypic_decomposition(const std::vector<Mat<Q>>& h, const Mat<Q>& g,
                                     bool allow_incomplete) {
  Splitter s{h, g, {}};
  s.split(MQ::identity(g.r));
  if (!s.out.complete && !allow_incomplete)
    throw Error(Err::SPLIT_INCOMPLETE, "reducible block without a rational eigenvalue splitting");
  return s.out;
}

}  // namespace holab
