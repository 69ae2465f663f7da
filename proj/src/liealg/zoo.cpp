#include <map>
#include <mutex>

#include "holab/liealg.hpp"

namespace holab {

namespace {

Mat<Q> metric_eta(int p, int q) {
  Mat<Q> eta(p + q, p + q);
  for (int i = 0; i < p + q; ++i) eta(i, i) = i < p ? -1 : 1;
  return eta;
}

// (e_i e_j^T - e_j e_i^T) eta, i < j
std::vector<Mat<Q>> so_basis(int p, int q) {
  const int n = p + q;
  Mat<Q> eta = metric_eta(p, q);
  std::vector<Mat<Q>> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat<Q> M(n, n);
      M(i, j) = 1;
      M(j, i) = -1;
      out.push_back(M * eta);
    }
  return out;
}

std::vector<std::string> so_labels(int n) {
  std::vector<std::string> l;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) l.push_back("L" + std::to_string(i + 1) + std::to_string(j + 1));
  return l;
}

}  // namespace

const char* zoo_label_name(ZooLabel l) {
  switch (l) {
    case ZooLabel::SO_M_PLUS_2: return "SO_M_PLUS_2";
    case ZooLabel::SO_2_M: return "SO_2_M";
    case ZooLabel::SO_1_M_PLUS_1: return "SO_1_M_PLUS_1";
    case ZooLabel::EUCLIDEAN_MOTION: return "EUCLIDEAN_MOTION";
    case ZooLabel::LORENTZ_MOTION: return "LORENTZ_MOTION";
    case ZooLabel::HEISENBERG: return "HEISENBERG";
    case ZooLabel::AMBIGUOUS: return "AMBIGUOUS";
    case ZooLabel::UNMATCHED: return "UNMATCHED";
  }
  return "?";
}

LieAlgebraTable so_table(int p, int q) {
  if (p < 0 || q < 0) throw Error(Err::INVALID_INPUT, "negative signature");
  auto L = LieAlgebraTable::from_matrices(so_basis(p, q));
  L.labels = so_labels(p + q);
  return L;
}

LieAlgebraTable motion_table(int p, int q) {
  const int n = p + q;
  std::vector<Mat<Q>> basis;
  for (const auto& A : so_basis(p, q)) {
    Mat<Q> M(n + 1, n + 1);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) M(i, j) = A(i, j);
    basis.push_back(M);
  }
  for (int i = 0; i < n; ++i) {
    Mat<Q> M(n + 1, n + 1);
    M(i, n) = 1;
    basis.push_back(M);
  }
  auto L = LieAlgebraTable::from_matrices(basis);
  L.labels = so_labels(n);
  for (int i = 0; i < n; ++i) L.labels.push_back("P" + std::to_string(i + 1));
  return L;
}

LieAlgebraTable heisenberg_table(int m) {
  LieAlgebraTable L(2 * m + 1);
  for (int i = 0; i < m; ++i) L.set(i, m + i, 2 * m, Q(1));
  for (int i = 0; i < m; ++i) L.labels.push_back("x" + std::to_string(i + 1));
  for (int i = 0; i < m; ++i) L.labels.push_back("y" + std::to_string(i + 1));
  L.labels.push_back("z");
  return L;
}

ZooMatch match_zoo(const LieFingerprint& fp, int m) {
  if (m < 1) throw Error(Err::INVALID_INPUT, "m must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<std::pair<ZooLabel, LieFingerprint>>> cache;
  std::vector<std::pair<ZooLabel, LieFingerprint>> refs;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(m);
    if (it == cache.end()) {
      std::vector<std::pair<ZooLabel, LieFingerprint>> v;
      v.emplace_back(ZooLabel::SO_M_PLUS_2, killing_fingerprint(so_table(0, m + 2)));
      v.emplace_back(ZooLabel::SO_2_M, killing_fingerprint(so_table(2, m)));
      v.emplace_back(ZooLabel::SO_1_M_PLUS_1, killing_fingerprint(so_table(1, m + 1)));
      v.emplace_back(ZooLabel::EUCLIDEAN_MOTION, killing_fingerprint(motion_table(0, m + 1)));
      v.emplace_back(ZooLabel::LORENTZ_MOTION, killing_fingerprint(motion_table(1, m)));
      v.emplace_back(ZooLabel::HEISENBERG, killing_fingerprint(heisenberg_table(m)));
      it = cache.emplace(m, std::move(v)).first;
    }
    refs = it->second;
  }
  ZooMatch out;
  for (const auto& [label, ref] : refs)
    if (ref == fp) out.matches.push_back(label);
  if (out.matches.size() == 1) out.label = out.matches[0];
  else if (out.matches.size() > 1) out.label = ZooLabel::AMBIGUOUS;
  return out;
}

}  // namespace holab
