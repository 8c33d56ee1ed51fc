// JSON schemas:
//   algebra matrix : {rows, cols, entries: [[expression strings]]}
//   complex matrix : {dim, re: [[...]], im: [[...]]}
//   field          : {base, grid, block, q, fibers: [...]} with the extra
//                    equator_grid array and hemisphere-major fiber order for
//                    double cones
//   report         : {title, checks: [{name, pass, residual}]}
#ifndef NCSPHERE_JSON_IO_HPP
#define NCSPHERE_JSON_IO_HPP

#include <json.hpp>

#include "ncsphere/alg_matrix.hpp"
#include "ncsphere/field.hpp"
#include "ncsphere/parser.hpp"

namespace ncsphere {

using Json = nlohmann::json;

inline Json to_json(const AlgMatrix& m) {
  Json entries = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m.at(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

inline AlgMatrix alg_matrix_from_json(const Json& j, const PresPtr& pres) {
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  AlgMatrix m(pres, rows, cols);
  const auto& entries = j.at("entries");
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k)
      m.at(i, k) = parse_element(entries.at(i).at(k).get<std::string>(), pres);
  return m;
}

inline Json to_json(const CMatrix& m) {
  if (m.rows() != m.cols()) throw Error("complex-matrix JSON: expected a square matrix");
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json rr = Json::array(), ri = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      rr.push_back(m(i, j).real());
      ri.push_back(m(i, j).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ri));
  }
  return Json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

inline CMatrix cmatrix_from_json(const Json& j) {
  Eigen::Index dim = j.at("dim").get<Eigen::Index>();
  CMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i)
    for (Eigen::Index k = 0; k < dim; ++k)
      m(i, k) = Cplx(j.at("re").at(i).at(k).get<double>(), j.at("im").at(i).at(k).get<double>());
  return m;
}

inline Json to_json(const IntervalField& f) {
  Json fibers = Json::array();
  for (double t : f.grid) fibers.push_back(to_json(CMatrix(f.fiber(t))));
  return Json{{"base", "interval"},
              {"grid", f.grid},
              {"block", f.blocks},
              {"q", f.q},
              {"fibers", std::move(fibers)}};
}

// Fibers in hemisphere-major, then cone-major, then equator order.
inline Json to_json(const DoubleConeField& f) {
  Json fibers = Json::array();
  for (int h = 0; h < 2; ++h)
    for (double s : f.cone_grid)
      for (double t : f.equator_grid) fibers.push_back(to_json(CMatrix(f.fiber(h, s, t))));
  return Json{{"base", "double_cone"},
              {"grid", f.cone_grid},
              {"equator_grid", f.equator_grid},
              {"block", f.blocks},
              {"q", f.q},
              {"fibers", std::move(fibers)}};
}

inline Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json jc{{"name", c.name}, {"pass", c.pass}, {"residual", c.residual}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    checks.push_back(std::move(jc));
  }
  return Json{{"title", r.title}, {"checks", std::move(checks)}};
}

}  // namespace ncsphere

#endif
