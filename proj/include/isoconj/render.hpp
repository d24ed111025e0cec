// Static SVG pictures of 2-D conjugacy classes and coconjugation sets.
//
// All geometry is computed exactly; floating point appears only here, when
// lattice coordinates are embedded into the Euclidean plane through the
// upper-triangular square root of the Gram form. Output bytes are
// deterministic for fixed inputs (fixed formatting, fixed layer order).

#pragma once

#include "coconjugation.hpp"
#include "conjugacy.hpp"
#include "group.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace isoconj {

struct RenderWindow {
  long x0 = -4, y0 = -4, x1 = 4, y1 = 4; // lattice coordinates, inclusive
  bool empty() const { return x0 > x1 || y0 > y1; }
};

// upper-triangular E with E^T E = gram
struct Embedding {
  double e00 = 1, e01 = 0, e11 = 1;

  std::array<double, 2> map(double a, double b) const {
    return {e00 * a + e01 * b, e11 * b};
  }
};

inline Embedding embedding_from_gram(const RatMatrix& gram) {
  if (gram.rows() != 2 || gram.cols() != 2) throw std::invalid_argument("rendering needs dim 2");
  double g00 = gram.at(0, 0).get_d();
  double g01 = gram.at(0, 1).get_d();
  double g11 = gram.at(1, 1).get_d();
  Embedding e;
  e.e00 = std::sqrt(g00);
  e.e01 = g01 / e.e00;
  e.e11 = std::sqrt(g11 - e.e01 * e.e01);
  double scale = std::abs(g00) + std::abs(g01) + std::abs(g11);
  if (std::abs(e.e00 * e.e00 - g00) > 1e-9 * scale ||
      std::abs(e.e00 * e.e01 - g01) > 1e-9 * scale ||
      std::abs(e.e01 * e.e01 + e.e11 * e.e11 - g11) > 1e-9 * scale)
    throw std::runtime_error("embedding does not reproduce the gram form");
  return e;
}

struct ScenePoints {
  std::string id, fill;
  double radius = 0;
  std::vector<std::array<double, 2>> pts;
};

struct SceneLines {
  std::string id, stroke;
  double width = 0;
  bool dashed = false;
  std::vector<std::array<double, 4>> segs; // x1,y1,x2,y2
};

struct RenderScene {
  Embedding embedding;
  std::vector<ScenePoints> point_layers;
  std::vector<SceneLines> line_layers;
};

namespace detail {

inline const std::array<const char*, 12>& palette() {
  static const std::array<const char*, 12> p = {
      "#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
      "#e377c2", "#17becf", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a"};
  return p;
}

inline std::string fmt(double v) {
  if (v == 0) v = 0; // no "-0.0000"
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// long segment through p with direction d; the viewBox clips it
inline std::array<double, 4> line_through(const std::array<double, 2>& p,
                                          const std::array<double, 2>& d, double reach) {
  double len = std::sqrt(d[0] * d[0] + d[1] * d[1]);
  double f = len > 0 ? reach / len : 0;
  return {p[0] - f * d[0], p[1] - f * d[1], p[0] + f * d[0], p[1] + f * d[1]};
}

inline std::string scene_to_svg(const RenderScene& scene, const RenderWindow& w) {
  const Embedding& E = scene.embedding;
  double minx = 0, miny = 0, maxx = 0, maxy = 0;
  bool first = true;
  for (long a : {w.x0, w.x1})
    for (long b : {w.y0, w.y1}) {
      auto p = E.map(double(a), double(b));
      if (first || p[0] < minx) minx = p[0];
      if (first || p[0] > maxx) maxx = p[0];
      if (first || p[1] < miny) miny = p[1];
      if (first || p[1] > maxy) maxy = p[1];
      first = false;
    }
  double pad = 0.6;
  minx -= pad;
  miny -= pad;
  maxx += pad;
  maxy += pad;
  double scale = 48;
  double width = (maxx - minx) * scale, height = (maxy - miny) * scale;

  auto px = [&](const std::array<double, 2>& p) -> std::array<double, 2> {
    // SVG y axis points down
    return {(p[0] - minx) * scale, (maxy - p[1]) * scale};
  };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" +
         fmt(height) + "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
  svg += "<rect width=\"" + fmt(width) + "\" height=\"" + fmt(height) + "\" fill=\"#ffffff\"/>\n";
  for (const SceneLines& layer : scene.line_layers) {
    svg += "<g id=\"" + layer.id + "\" stroke=\"" + layer.stroke + "\" stroke-width=\"" +
           fmt(layer.width * scale) + "\"";
    if (layer.dashed) svg += " stroke-dasharray=\"6 4\"";
    svg += ">\n";
    for (const auto& s : layer.segs) {
      auto p1 = px({s[0], s[1]}), p2 = px({s[2], s[3]});
      svg += "<line x1=\"" + fmt(p1[0]) + "\" y1=\"" + fmt(p1[1]) + "\" x2=\"" + fmt(p2[0]) +
             "\" y2=\"" + fmt(p2[1]) + "\"/>\n";
    }
    svg += "</g>\n";
  }
  for (const ScenePoints& layer : scene.point_layers) {
    svg += "<g id=\"" + layer.id + "\" fill=\"" + layer.fill + "\">\n";
    for (const auto& q : layer.pts) {
      auto p = px(q);
      svg += "<circle cx=\"" + fmt(p[0]) + "\" cy=\"" + fmt(p[1]) + "\" r=\"" +
             fmt(layer.radius * scale) + "\"/>\n";
    }
    svg += "</g>\n";
  }
  svg += "</svg>\n";
  return svg;
}

inline ScenePoints lattice_layer(const Embedding& E, const RenderWindow& w) {
  ScenePoints lat{"lattice", "#c8c8c8", 0.05, {}};
  for (long a = w.x0; a <= w.x1; ++a)
    for (long b = w.y0; b <= w.y1; ++b) lat.pts.push_back(E.map(double(a), double(b)));
  return lat;
}

// points of an integer coset inside the window
inline std::vector<std::array<double, 2>> coset_points(const Embedding& E,
                                                       const AffineSublattice& c,
                                                       const RenderWindow& w) {
  std::vector<std::array<double, 2>> pts;
  IntVec v(2);
  for (long a = w.x0; a <= w.x1; ++a)
    for (long b = w.y0; b <= w.y1; ++b) {
      v[0] = a;
      v[1] = b;
      if (c.contains(v)) pts.push_back(E.map(double(a), double(b)));
    }
  return pts;
}

} // namespace detail

// lattice dots, one colored point layer per component, move-set lines per
// rank-1 component, and the fix line of the spherical part
inline RenderScene build_class_scene(const RatMatrix& gram, const PointGroup& g, const Isometry& h,
                                     const RenderWindow& w) {
  if (g.dim() != 2) throw std::invalid_argument("rendering needs dim 2");
  RenderScene scene;
  scene.embedding = embedding_from_gram(gram);
  const Embedding& E = scene.embedding;
  ClassDescription cls = conjugacy_class(g, h);
  double reach = double(std::max({std::labs(w.x0), std::labs(w.x1), std::labs(w.y0),
                                  std::labs(w.y1), 1L})) *
                 (E.e00 + std::abs(E.e01) + E.e11) * 2.0;

  if (!w.empty()) {
    scene.point_layers.push_back(detail::lattice_layer(E, w));

    SceneLines mov{"movset", "#999999", 0.02, false, {}};
    for (const Component& comp : cls.components) {
      if (comp.coset.lattice().rank() != 1) continue;
      IntVec d = comp.coset.lattice().basis().column(0);
      const IntVec& off = comp.coset.offset();
      mov.segs.push_back(detail::line_through(E.map(off[0].get_d(), off[1].get_d()),
                                              E.map(d[0].get_d(), d[1].get_d()), reach));
    }
    if (!mov.segs.empty()) scene.line_layers.push_back(std::move(mov));

    Sublattice fix = fix_lattice(g, h.point);
    if (fix.rank() == 1) {
      IntVec d = fix.basis().column(0);
      SceneLines fl{"fixset", "#1f77b4", 0.02, true, {}};
      fl.segs.push_back(detail::line_through({0, 0}, E.map(d[0].get_d(), d[1].get_d()), reach));
      scene.line_layers.push_back(std::move(fl));
    }

    for (size_t k = 0; k < cls.components.size(); ++k) {
      ScenePoints layer{"component" + std::to_string(k), detail::palette()[k % 12], 0.11, {}};
      layer.pts = detail::coset_points(E, cls.components[k].coset, w);
      scene.point_layers.push_back(std::move(layer));
    }
  }
  return scene;
}

// lattice dots, one colored point layer per coconjugation branch (the coset
// eta_u + Fix meet Z^2), and dashed fix-direction lines through each eta_u
inline RenderScene build_coconj_scene(const RatMatrix& gram, const PointGroup& g, const Isometry& h,
                                      const Isometry& h2, const RenderWindow& w) {
  if (g.dim() != 2) throw std::invalid_argument("rendering needs dim 2");
  RenderScene scene;
  scene.embedding = embedding_from_gram(gram);
  const Embedding& E = scene.embedding;
  CoconjDescription cc = coconjugation_set(g, h, h2);
  double reach = double(std::max({std::labs(w.x0), std::labs(w.x1), std::labs(w.y0),
                                  std::labs(w.y1), 1L})) *
                 (E.e00 + std::abs(E.e01) + E.e11) * 2.0;

  if (!w.empty()) {
    scene.point_layers.push_back(detail::lattice_layer(E, w));

    SceneLines fl{"fixlines", "#1f77b4", 0.02, true, {}};
    for (const CoconjBranch& br : cc.branches) {
      if (br.fix.rank() != 1) continue;
      IntVec d = br.fix.basis().column(0);
      fl.segs.push_back(detail::line_through(E.map(br.eta[0].get_d(), br.eta[1].get_d()),
                                             E.map(d[0].get_d(), d[1].get_d()), reach));
    }
    if (!fl.segs.empty()) scene.line_layers.push_back(std::move(fl));

    for (size_t k = 0; k < cc.branches.size(); ++k) {
      const CoconjBranch& br = cc.branches[k];
      ScenePoints layer{"branch" + std::to_string(k), detail::palette()[k % 12], 0.11, {}};
      layer.pts = detail::coset_points(E, AffineSublattice(br.eta, br.fix), w);
      scene.point_layers.push_back(std::move(layer));
    }

    ScenePoints marks{"translations", "#000000", 0.07, {}};
    marks.pts.push_back(E.map(h.trans[0].get_d(), h.trans[1].get_d()));
    marks.pts.push_back(E.map(h2.trans[0].get_d(), h2.trans[1].get_d()));
    scene.point_layers.push_back(std::move(marks));
  }
  return scene;
}

inline std::string render_class_svg(const RatMatrix& gram, const PointGroup& g, const Isometry& h,
                                    const RenderWindow& w) {
  return detail::scene_to_svg(build_class_scene(gram, g, h, w), w);
}

inline std::string render_coconj_svg(const RatMatrix& gram, const PointGroup& g, const Isometry& h,
                                     const Isometry& h2, const RenderWindow& w) {
  return detail::scene_to_svg(build_coconj_scene(gram, g, h, h2, w), w);
}

} // namespace isoconj
