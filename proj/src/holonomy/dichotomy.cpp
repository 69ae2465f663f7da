#include "holab/holonomy.hpp"

namespace holab {

DichotomyReport dichotomy_report(const Geometry& geo, const std::vector<Q>& point, int depth) {
  DichotomyReport out;
  {
    PointGeom pg(geo, point, 3);
    auto pr = point_report(pg);
    out.codazzi = pr.codazzi;
    out.reeb_curvature_zero = pr.reeb_curvature_zero;
  }
  HolonomyOptions ho;
  ho.depth = depth;
  ho.mode = HolMode::HORIZONTAL;
  auto hor = infinitesimal_holonomy(geo, point, ho);
  ho.mode = HolMode::FULL;
  ho.conn = ConnTag::ADAPTED;
  auto full = infinitesimal_holonomy(geo, point, ho);
  out.horizontal_dim = hor.dim();
  out.full_dim = full.dim();
  out.quotient_dim = full.dim() - hor.dim();
  if (!hor.span.subset_of(full.span)) {
    out.violation = true;
    out.detail = "horizontal algebra not contained in the adapted one";
    return out;
  }
  if (out.codazzi && out.quotient_dim != 0 && out.quotient_dim != 1) {
    out.violation = true;
    out.detail = "Codazzi model with quotient dimension " + std::to_string(out.quotient_dim);
    return out;
  }
  out.detail = out.codazzi ? "Codazzi: quotient dimension " + std::to_string(out.quotient_dim)
                           : "not Codazzi: no constraint";
  return out;
}

}  // namespace holab
