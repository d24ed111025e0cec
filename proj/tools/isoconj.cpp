// isoconj command-line tool: exact conjugacy geometry for split
// crystallographic groups, plus SVG pictures of the 2-D cases.

#include "isoconj/catalog.hpp"
#include "isoconj/coconjugation.hpp"
#include "isoconj/conjugacy.hpp"
#include "isoconj/group.hpp"
#include "isoconj/group_json.hpp"
#include "isoconj/oracle.hpp"
#include "isoconj/render.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

using nlohmann::json;
using namespace isoconj;

namespace {

json to_json(const Int& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

json to_json(const IntVec& v) {
  json a = json::array();
  for (const Int& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

json to_json(const RatVec& v) {
  json a = json::array();
  for (const Rat& x : v) a.push_back(x.get_str());
  return a;
}

json element_json(const Isometry& h) {
  return json{{"trans", to_json(h.trans)}, {"point", h.point}, {"name", format_element(h)}};
}

json lattice_json(const Sublattice& s) {
  return json{{"basis", to_json(s.basis())}, {"rank", s.rank()}};
}

json coset_json(const AffineSublattice& c) {
  return json{{"offset", to_json(c.offset())},
              {"basis", to_json(c.lattice().basis())},
              {"rank", c.lattice().rank()}};
}

struct Context {
  GroupSpec spec;
  PointGroup pg;
  bool as_json = false;
};

std::string point_label(const PointGroup& pg, int p) {
  std::string s = "g" + std::to_string(p);
  for (const auto& [name, idx] : pg.names())
    if (idx == p) return s + " (" + name + ")";
  return s;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

json base_json(const char* command) { return json{{"schema", 1}, {"command", command}}; }

// ---- subcommand bodies ----------------------------------------------------

void cmd_info(const Context& ctx) {
  if (ctx.as_json) {
    json j = base_json("info");
    j["name"] = ctx.spec.name;
    j["dim"] = ctx.spec.dim;
    j["order"] = ctx.pg.size();
    j["gram"] = to_json(ctx.spec.gram);
    json gens = json::array();
    for (size_t k = 0; k < ctx.spec.generators.size(); ++k) {
      std::string nm = ctx.spec.generator_names.empty() ? "s" + std::to_string(k + 1)
                                                        : ctx.spec.generator_names[k];
      gens.push_back(json{{"name", nm},
                          {"index", *ctx.pg.find(ctx.spec.generators[k])},
                          {"matrix", to_json(ctx.spec.generators[k])}});
    }
    j["generators"] = gens;
    emit(j);
    return;
  }
  std::cout << "group:  " << ctx.spec.name << "\n";
  std::cout << "dim:    " << ctx.spec.dim << "\n";
  std::cout << "order:  " << ctx.pg.size() << " (point group)\n";
  std::cout << "gram:   " << ctx.spec.gram.str() << "\n";
  for (size_t k = 0; k < ctx.spec.generators.size(); ++k) {
    std::string nm = ctx.spec.generator_names.empty() ? "s" + std::to_string(k + 1)
                                                      : ctx.spec.generator_names[k];
    std::cout << "gen " << nm << " = g" << *ctx.pg.find(ctx.spec.generators[k]) << ": "
              << ctx.spec.generators[k].str() << "\n";
  }
}

void cmd_element(const Context& ctx, const Isometry& h) {
  if (ctx.as_json) {
    json j = base_json("element");
    j["element"] = element_json(h);
    j["point_matrix"] = to_json(ctx.pg.matrix(h.point));
    j["point_order"] = ctx.pg.element_order(h.point);
    emit(j);
    return;
  }
  std::cout << format_element(h) << "\n";
  std::cout << "point " << point_label(ctx.pg, h.point) << " of order "
            << ctx.pg.element_order(h.point) << ", matrix " << ctx.pg.matrix(h.point).str()
            << "\n";
}

void cmd_modset(const Context& ctx, const Isometry& h) {
  AffineSublattice m = mod_set(ctx.pg, h);
  if (ctx.as_json) {
    json j = base_json("modset");
    j["element"] = element_json(h);
    j["modset"] = coset_json(m);
    emit(j);
    return;
  }
  std::cout << "offset " << vec_str(m.offset()) << "\n";
  std::cout << "basis  " << m.lattice().basis().str() << " rank " << m.lattice().rank() << "\n";
}

void cmd_movset(const Context& ctx, const Isometry& h) {
  MovSet m = mov_set(ctx.pg, h);
  if (ctx.as_json) {
    json j = base_json("movset");
    j["element"] = element_json(h);
    j["offset"] = to_json(m.offset);
    j["basis"] = to_json(m.basis);
    j["dim"] = m.dim;
    emit(j);
    return;
  }
  std::cout << "offset (";
  for (size_t i = 0; i < m.offset.size(); ++i)
    std::cout << (i ? "," : "") << m.offset[i].get_str();
  std::cout << ")\n";
  std::cout << "basis  " << m.basis.str() << " dim " << m.dim << "\n";
}

void cmd_fixset(const Context& ctx, const Isometry& h) {
  if (!is_spherical(h))
    throw std::invalid_argument("fixset needs a spherical element (zero translation part)");
  RatMatrix basis = fix_set(ctx.pg, h.point);
  Sublattice lat = fix_lattice(ctx.pg, h.point);
  if (ctx.as_json) {
    json j = base_json("fixset");
    j["element"] = element_json(h);
    j["basis"] = to_json(basis);
    j["lattice"] = lattice_json(lat);
    emit(j);
    return;
  }
  std::cout << "basis   " << basis.str() << " dim " << basis.cols() << "\n";
  std::cout << "lattice " << lat.basis().str() << " rank " << lat.rank() << "\n";
}

void cmd_filling(const Context& ctx, const Isometry& h) {
  bool fills = filling_check(ctx.pg, h);
  if (ctx.as_json) {
    json j = base_json("filling");
    j["element"] = element_json(h);
    j["fills"] = fills;
    emit(j);
    return;
  }
  std::cout << (fills ? "true" : "false") << "\n";
}

json class_json(const ClassDescription& cls) {
  json comps = json::array();
  for (const Component& c : cls.components) {
    json cj = coset_json(c.coset);
    cj["point"] = c.point;
    comps.push_back(cj);
  }
  return json{{"representative", element_json(cls.representative)},
              {"component_count", cls.components.size()},
              {"components", comps}};
}

void print_components(const Context& ctx, const std::vector<Component>& comps) {
  for (size_t k = 0; k < comps.size(); ++k) {
    const Component& c = comps[k];
    std::cout << "component " << k << ": point " << point_label(ctx.pg, c.point) << ", coset "
              << vec_str(c.coset.offset());
    if (c.coset.lattice().rank() > 0)
      std::cout << " + span" << c.coset.lattice().basis().str();
    else
      std::cout << " (singleton)";
    std::cout << "\n";
  }
}

void cmd_class(const Context& ctx, const Isometry& h) {
  ClassDescription cls = conjugacy_class(ctx.pg, h);
  if (ctx.as_json) {
    json j = base_json("class");
    j.update(class_json(cls));
    emit(j);
    return;
  }
  std::cout << "class of " << format_element(h) << ": " << cls.components.size()
            << " component(s)\n";
  print_components(ctx, cls.components);
}

void cmd_components(const Context& ctx, const Isometry& h) {
  std::vector<Component> comps = components(ctx.pg, h);
  int spherical = component_count(ctx.pg, linearize(h));
  if (ctx.as_json) {
    json j = base_json("components");
    j["element"] = element_json(h);
    j["component_count"] = comps.size();
    j["spherical_component_count"] = spherical;
    json comps_j = json::array();
    for (const Component& c : comps) {
      json cj = coset_json(c.coset);
      cj["point"] = c.point;
      comps_j.push_back(cj);
    }
    j["components"] = comps_j;
    emit(j);
    return;
  }
  std::cout << comps.size() << " component(s); " << spherical
            << " for the spherical part\n";
  print_components(ctx, comps);
}

void cmd_stabilizer(const Context& ctx, const Isometry& h) {
  std::vector<int> stab = component_stabilizer(ctx.pg, h);
  if (ctx.as_json) {
    json j = base_json("stabilizer");
    j["element"] = element_json(h);
    j["stabilizer"] = stab;
    j["order"] = stab.size();
    j["component_count"] = component_count(ctx.pg, h);
    emit(j);
    return;
  }
  std::cout << "stabilizer of the base component: {";
  for (size_t i = 0; i < stab.size(); ++i) std::cout << (i ? "," : "") << "g" << stab[i];
  std::cout << "} order " << stab.size() << "\n";
}

json coconj_json(const CoconjDescription& cc) {
  json branches = json::array();
  for (const CoconjBranch& br : cc.branches)
    branches.push_back(json{
        {"u", br.u}, {"eta", to_json(br.eta)}, {"fix", lattice_json(br.fix)}});
  return json{{"conjugate", !cc.empty()}, {"branches", branches}};
}

void print_coconj(const Context& ctx, const CoconjDescription& cc) {
  if (cc.empty()) {
    std::cout << "empty (not conjugate)\n";
    return;
  }
  for (const CoconjBranch& br : cc.branches) {
    std::cout << "branch u=" << point_label(ctx.pg, br.u) << " eta=" << vec_str(br.eta);
    if (br.fix.rank() > 0)
      std::cout << " + fix" << br.fix.basis().str() << " (rank " << br.fix.rank() << ")";
    else
      std::cout << " (unique)";
    std::cout << "\n";
  }
}

void cmd_coconj(const Context& ctx, const Isometry& h, const Isometry& h2) {
  CoconjDescription cc = coconjugation_set(ctx.pg, h, h2);
  if (ctx.as_json) {
    json j = base_json("coconj");
    j["h"] = element_json(h);
    j["h2"] = element_json(h2);
    j.update(coconj_json(cc));
    emit(j);
    return;
  }
  print_coconj(ctx, cc);
}

void cmd_centralizer(const Context& ctx, const Isometry& h) {
  CoconjDescription cc = centralizer(ctx.pg, h);
  if (ctx.as_json) {
    json j = base_json("centralizer");
    j["element"] = element_json(h);
    j.update(coconj_json(cc));
    emit(j);
    return;
  }
  print_coconj(ctx, cc);
}

void cmd_conjugate_p(const Context& ctx, const Isometry& h, const Isometry& h2) {
  CoconjDescription cc = coconjugation_set(ctx.pg, h, h2);
  if (ctx.as_json) {
    json j = base_json("conjugate-p");
    j["h"] = element_json(h);
    j["h2"] = element_json(h2);
    j.update(coconj_json(cc));
    emit(j);
    return;
  }
  if (cc.empty()) {
    std::cout << "NOT CONJUGATE\n";
    return;
  }
  std::cout << "CONJUGATE (" << cc.branches.size() << " branch(es))\n";
  print_coconj(ctx, cc);
}

// deterministic across platforms: plain modulo reduction of mt19937_64 output
struct Rng {
  std::mt19937_64 gen;
  explicit Rng(unsigned long seed) : gen(seed) {}
  long bounded(long lo, long hi) { return lo + long(gen() % (unsigned long)(hi - lo + 1)); }
};

Isometry random_isometry(Rng& rng, const PointGroup& pg, long lam_range) {
  Isometry h = identity_isometry(pg.dim());
  for (int i = 0; i < pg.dim(); ++i) h.trans[i] = rng.bounded(-lam_range, lam_range);
  h.point = int(rng.bounded(0, pg.size() - 1));
  return h;
}

// class check: brute conjugates land in the description, and every described
// member in the window is certified by an explicit conjugator
bool verify_class_sample(const PointGroup& pg, const Isometry& h, long radius,
                         std::string& detail) {
  ClassDescription cls = conjugacy_class(pg, h);
  std::set<Isometry> oracle = brute_class(pg, h, Ball{radius});
  for (const Isometry& m : oracle) {
    bool found = false;
    for (const Component& c : cls.components)
      if (c.point == m.point && c.coset.contains(m.trans)) {
        found = true;
        break;
      }
    if (!found) {
      detail = "oracle conjugate " + format_element(m) + " missing from closed form";
      return false;
    }
  }
  std::set<Isometry> described = class_members_in_ball(cls, Ball{radius});
  IntMatrix id = IntMatrix::identity(pg.dim());
  for (const Isometry& m : described) {
    bool certified = false;
    for (int u = 0; u < pg.size() && !certified; ++u) {
      if (pg.conjugate_point(u, h.point) != m.point) continue;
      IntVec rhs = vec_sub(m.trans, pg.matrix(u) * h.trans);
      if (auto eta = solve_integer(id - pg.matrix(m.point), rhs))
        certified = conjugate(pg, Isometry{*eta, u}, h) == m;
    }
    if (!certified) {
      detail = "described member " + format_element(m) + " has no conjugator";
      return false;
    }
  }
  return true;
}

bool verify_coconj_sample(const PointGroup& pg, const Isometry& h, const Isometry& h2, long radius,
                          std::string& detail) {
  CoconjDescription cc = coconjugation_set(pg, h, h2);
  std::set<Isometry> oracle = brute_coconj(pg, h, h2, Ball{radius});
  CompareReport rep = compare(cc, pg.dim(), oracle, Ball{radius});
  if (!rep.equal) {
    detail = rep.summary();
    return false;
  }
  if (cc.empty() && !oracle.empty()) {
    detail = "description empty but brute force found a conjugator";
    return false;
  }
  return true;
}

int cmd_verify(const Context& ctx, long radius, long samples, unsigned long seed) {
  Rng rng(seed);
  long class_failures = 0, coconj_failures = 0;
  std::vector<std::string> failures;
  for (long i = 0; i < samples; ++i) {
    Isometry h = random_isometry(rng, ctx.pg, 2);
    std::string detail;
    if (!verify_class_sample(ctx.pg, h, radius, detail)) {
      ++class_failures;
      failures.push_back("class " + format_element(h) + ": " + detail);
    }
  }
  for (long i = 0; i < samples; ++i) {
    Isometry h = random_isometry(rng, ctx.pg, 2);
    Isometry h2;
    if (i % 2 == 0) {
      h2 = conjugate(ctx.pg, random_isometry(rng, ctx.pg, 2), h);
    } else {
      h2 = random_isometry(rng, ctx.pg, 2);
    }
    std::string detail;
    if (!verify_coconj_sample(ctx.pg, h, h2, radius, detail)) {
      ++coconj_failures;
      failures.push_back("coconj " + format_element(h) + " vs " + format_element(h2) + ": " +
                         detail);
    }
  }
  bool ok = class_failures == 0 && coconj_failures == 0;
  if (ctx.as_json) {
    json j = base_json("verify");
    j["group"] = ctx.spec.name;
    j["radius"] = radius;
    j["samples"] = samples;
    j["seed"] = seed;
    j["class_failures"] = class_failures;
    j["coconj_failures"] = coconj_failures;
    j["failures"] = failures;
    j["ok"] = ok;
    emit(j);
  } else {
    std::cout << "group " << ctx.spec.name << ": " << samples << " class samples, " << samples
              << " coconj pairs, radius " << radius << ", seed " << seed << "\n";
    for (const std::string& f : failures) std::cout << "FAIL " << f << "\n";
    std::cout << (ok ? "VERIFY OK" : "VERIFY FAILED") << "\n";
  }
  return ok ? 0 : 1;
}

RenderWindow parse_window(const std::string& text) {
  RenderWindow w;
  long v[4];
  char extra;
  if (std::sscanf(text.c_str(), "%ld,%ld,%ld,%ld%c", &v[0], &v[1], &v[2], &v[3], &extra) != 4)
    throw CLI::ValidationError("--window", "expected x0,y0,x1,y1");
  w.x0 = v[0];
  w.y0 = v[1];
  w.x1 = v[2];
  w.y1 = v[3];
  return w;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact conjugacy geometry for split groups of Euclidean isometries"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print help and exit"); // keep --h free for elements

  std::string group_key, group_file, elem_str, h_str, h2_str, window_str = "-4,-4,4,4", out_path;
  bool as_json = false;
  long radius = 4, samples = 20;
  unsigned long seed = 0;

  auto add_group_opts = [&](CLI::App* sub) {
    sub->set_help_flag("--help", "print help and exit");
    sub->add_option("--group", group_key, "catalog group key");
    sub->add_option("--group-file", group_file, "JSON group spec file");
    sub->add_flag("--json", as_json, "machine-readable output");
  };
  auto add_element_opt = [&](CLI::App* sub) {
    sub->add_option("--element", elem_str, "element, e.g. \"t[1,0]*s1\"")->required();
  };
  auto add_pair_opts = [&](CLI::App* sub) {
    sub->add_option("--h", h_str, "first element")->required();
    sub->add_option("--h2", h2_str, "second element")->required();
  };

  CLI::App* info = app.add_subcommand("info", "group summary");
  add_group_opts(info);
  CLI::App* element = app.add_subcommand("element", "parse and normalize an element");
  add_group_opts(element);
  add_element_opt(element);
  CLI::App* modset = app.add_subcommand("modset", "mod-set of an element");
  add_group_opts(modset);
  add_element_opt(modset);
  CLI::App* movset = app.add_subcommand("movset", "move-set of an element");
  add_group_opts(movset);
  add_element_opt(movset);
  CLI::App* fixset = app.add_subcommand("fixset", "fix-set of a spherical element");
  add_group_opts(fixset);
  add_element_opt(fixset);
  CLI::App* filling = app.add_subcommand("filling", "does the element fill its move-set");
  add_group_opts(filling);
  add_element_opt(filling);
  CLI::App* cls = app.add_subcommand("class", "closed-form conjugacy class");
  add_group_opts(cls);
  add_element_opt(cls);
  CLI::App* comps = app.add_subcommand("components", "components of the conjugacy class");
  add_group_opts(comps);
  add_element_opt(comps);
  CLI::App* stab = app.add_subcommand("stabilizer", "point-group stabilizer of the base component");
  add_group_opts(stab);
  add_element_opt(stab);
  CLI::App* coconj = app.add_subcommand("coconj", "all elements conjugating h to h2");
  add_group_opts(coconj);
  add_pair_opts(coconj);
  CLI::App* cent = app.add_subcommand("centralizer", "centralizer of an element");
  add_group_opts(cent);
  add_element_opt(cent);
  CLI::App* conjp = app.add_subcommand("conjugate-p", "decide whether h and h2 are conjugate");
  add_group_opts(conjp);
  add_pair_opts(conjp);
  CLI::App* verify = app.add_subcommand("verify", "cross-check closed forms against brute force");
  add_group_opts(verify);
  verify->add_option("--radius", radius, "translation window radius (default 4)");
  verify->add_option("--samples", samples, "number of sampled elements/pairs (default 20)");
  verify->add_option("--seed", seed, "RNG seed (default 0)");
  CLI::App* plot = app.add_subcommand("plot", "SVG picture of a class or coconjugation set");
  add_group_opts(plot);
  plot->add_option("--element", elem_str, "element whose class to draw");
  plot->add_option("--h", h_str, "first element (coconjugation picture)");
  plot->add_option("--h2", h2_str, "second element (coconjugation picture)");
  plot->add_option("--window", window_str, "lattice window x0,y0,x1,y1 (default -4,-4,4,4)");
  plot->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Context ctx;
    if (!group_key.empty() && !group_file.empty())
      throw CLI::ValidationError("--group", "use either --group or --group-file, not both");
    if (group_key.empty() && group_file.empty())
      throw CLI::ValidationError("--group", "one of --group or --group-file is required");
    ctx.as_json = as_json;
    try {
      ctx.spec = group_key.empty() ? load_group_spec(group_file) : catalog_get(group_key).spec;
      ctx.pg = validate_and_close(ctx.spec);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
    }

    auto one = [&]() { return parse_element(elem_str, ctx.pg); };
    auto pair = [&]() {
      return std::pair<Isometry, Isometry>(parse_element(h_str, ctx.pg),
                                           parse_element(h2_str, ctx.pg));
    };

    if (info->parsed()) {
      cmd_info(ctx);
    } else if (element->parsed()) {
      cmd_element(ctx, one());
    } else if (modset->parsed()) {
      cmd_modset(ctx, one());
    } else if (movset->parsed()) {
      cmd_movset(ctx, one());
    } else if (fixset->parsed()) {
      cmd_fixset(ctx, one());
    } else if (filling->parsed()) {
      cmd_filling(ctx, one());
    } else if (cls->parsed()) {
      cmd_class(ctx, one());
    } else if (comps->parsed()) {
      cmd_components(ctx, one());
    } else if (stab->parsed()) {
      cmd_stabilizer(ctx, one());
    } else if (coconj->parsed()) {
      auto [a, b] = pair();
      cmd_coconj(ctx, a, b);
    } else if (cent->parsed()) {
      cmd_centralizer(ctx, one());
    } else if (conjp->parsed()) {
      auto [a, b] = pair();
      cmd_conjugate_p(ctx, a, b);
    } else if (verify->parsed()) {
      return cmd_verify(ctx, radius, samples, seed);
    } else if (plot->parsed()) {
      RenderWindow w = parse_window(window_str);
      std::string svg;
      if (!elem_str.empty() && h_str.empty() && h2_str.empty()) {
        svg = render_class_svg(ctx.spec.gram, ctx.pg, one(), w);
      } else if (elem_str.empty() && !h_str.empty() && !h2_str.empty()) {
        auto [a, b] = pair();
        svg = render_coconj_svg(ctx.spec.gram, ctx.pg, a, b, w);
      } else {
        throw CLI::ValidationError("plot", "give --element, or --h and --h2");
      }
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
        out << svg;
      }
    }
    return 0;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ElementParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
