#include <map>

#include "holab/holonomy.hpp"

namespace holab {

const char* conn_name(ConnTag t) {
  switch (t) {
    case ConnTag::SCHOUTEN: return "SCHOUTEN";
    case ConnTag::ADAPTED: return "ADAPTED";
    case ConnTag::WAGNER: return "WAGNER";
    case ConnTag::CUSTOM: return "CUSTOM";
  }
  return "?";
}

const char* mode_name(HolMode m) { return m == HolMode::FULL ? "FULL" : "HORIZONTAL"; }

const char* label_name(HolLabel l) {
  switch (l) {
    case HolLabel::TRIVIAL: return "TRIVIAL";
    case HolLabel::SO_M_LAGRANGIAN: return "SO_M_LAGRANGIAN";
    case HolLabel::SO_M_PLUS_U1: return "SO_M_PLUS_U1";
    case HolLabel::SU_M: return "SU_M";
    case HolLabel::U_M: return "U_M";
    case HolLabel::OTHER: return "OTHER";
  }
  return "?";
}

ConnTag conn_from_name(const std::string& s) {
  for (ConnTag t : {ConnTag::SCHOUTEN, ConnTag::ADAPTED, ConnTag::WAGNER, ConnTag::CUSTOM})
    if (s == conn_name(t)) return t;
  throw Error(Err::INVALID_INPUT, "unknown connection tag '" + s + "'");
}

namespace {

// Monomials of degree <= r in n variables, indexed.
class MonoIndex {
public:
  MonoIndex(int n, int r) : r_(r) {
    Mono m;
    fill(n, 0, r, m);
  }
  int size() const { return int(idx_.size()); }
  int degree() const { return r_; }
  int at(const Mono& m) const { return idx_.at(m); }

private:
  int r_;
  std::map<Mono, int> idx_;
  void fill(int n, int i, int left, Mono& m) {
    if (i == n) {
      idx_.emplace(m, int(idx_.size()));
      return;
    }
    for (int e = 0; e <= left; ++e) {
      Mono k = m;
      k.set(i, e);
      fill(n, i + 1, left - e, k);
    }
  }
};

Vec<Q> flatten_jets(const JetMat& S, const MonoIndex& idx) {
  Vec<Q> v(S.size() * idx.size(), Q(0));
  for (size_t k = 0; k < S.size(); ++k)
    for (const auto& [mono, c] : S[k].poly().terms())
      if (int(mono.deg) <= idx.degree()) v[k * idx.size() + idx.at(mono)] = c;
  return v;
}

Extension to_extension(ConnTag t) {
  switch (t) {
    case ConnTag::WAGNER: return Extension::WAGNER;
    case ConnTag::CUSTOM: return Extension::CUSTOM;
    default: return Extension::ADAPTED;
  }
}

}  // namespace

HolonomyReport infinitesimal_holonomy(const Geometry& geo, const std::vector<Q>& point,
                                      const HolonomyOptions& opt) {
  if (opt.depth < 0 || opt.depth > kMaxDepth)
    throw Error(Err::INVALID_INPUT, "depth must lie in [0, " + std::to_string(kMaxDepth) + "]");
  if (opt.mode == HolMode::FULL && opt.conn == ConnTag::SCHOUTEN)
    throw Error(Err::INVALID_INPUT, "the Schouten connection is partial; FULL needs an extension");
  if (!geo.regular_at(point)) throw Error(Err::POLE_AT_POINT, "model is singular at the point");

  const int d = geo.d, n = geo.n;
  const int order = opt.depth + 2;
  SeriesOrderScope scope(order);
  PointGeom pg(geo, point, order);

  HolonomyReport rep{opt.mode, opt.conn, opt.depth, {}, false, true, true, 0, Subspace<Q>(d * d), {}, {}};

  JetMat N = jm_zero(d, n);
  if (opt.mode == HolMode::FULL) {
    N = pg.nomizu(to_extension(opt.conn), opt.custom);
    rep.extension_metric = extension_is_metric(pg, N);
  }

  std::vector<JetMat> current;
  if (opt.mode == HolMode::HORIZONTAL) {
    // R(alpha) for alpha in ker dtheta, as sections: e_a^e_b corrected by a pivot pair.
    int pa = -1, pb = -1;
    for (int a = 0; a < d && pa < 0; ++a)
      for (int b = a + 1; b < d; ++b)
        if (sgn(pg.W[size_t(a) * d + b].value()) != 0) {
          pa = a;
          pb = b;
          break;
        }
    if (pa < 0) throw Error(Err::NOT_CONTACT, "dtheta vanishes on the distribution");
    const JetMat& Rp = pg.R[size_t(pa) * d + pb];
    Jet winv = pg.W[size_t(pa) * d + pb].inverse();
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        if (a == pa && b == pb) continue;
        Jet c = -(pg.W[size_t(a) * d + b] * winv);
        current.push_back(jm_add(pg.R[size_t(a) * d + b], jm_scale(Rp, c)));
      }
  } else {
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) current.push_back(pg.curv(a, b, N));
    for (int a = 0; a < d; ++a) current.push_back(pg.curv_reeb(a, N));
  }

  const int full_dim = d * (d - 1) / 2;
  std::vector<JetMat> kept;
  for (int k = 0; k <= opt.depth; ++k) {
    MonoIndex idx(n, opt.depth - k);
    Subspace<Q> seen(int(size_t(d) * d * idx.size()));
    for (const auto& S : kept) seen.add(flatten_jets(S, idx));
    std::vector<JetMat> fresh;
    for (auto& S : current) {
      if (jm_is_zero(S)) continue;
      if (seen.add(flatten_jets(S, idx))) {
        kept.push_back(S);
        fresh.push_back(std::move(S));
      }
    }
    std::vector<Mat<Q>> gens;
    for (const auto& S : kept) gens.push_back(PointGeom::value(S, d));
    auto cl = bracket_closure(gens, d, opt.max_rounds);
    rep.fixpoint = cl.fixpoint;
    rep.span = cl.span;
    rep.dims_by_depth.push_back(cl.span.dim());
    if (!cl.fixpoint) break;
    if (k == opt.depth || cl.span.dim() == full_dim) break;
    current.clear();
    for (const auto& S : fresh) {
      for (int c = 0; c < d; ++c) current.push_back(pg.cov(c, S));
      if (opt.mode == HolMode::FULL) current.push_back(pg.cov_reeb(N, S));
    }
  }
  rep.sections = int(kept.size());
  const auto& dims = rep.dims_by_depth;
  rep.stabilized = dims.back() == full_dim ||
                   (dims.size() >= 2 && dims[dims.size() - 1] == dims[dims.size() - 2]);
  rep.basis = basis_matrices(rep.span, d);
  Mat<Q> g0 = PointGeom::value(pg.g, d);
  rep.cls = classify_subalgebra(rep.basis, g0, geo.m);
  return rep;
}

}  // namespace holab
