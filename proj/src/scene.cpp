#include "cga/scene.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "cga/transforms.hpp"

namespace cga {

namespace {

struct Token {
  std::string text;
  int col = 0;
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#') {
      ++j;
    }
    out.push_back(Token{line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

bool looks_like_number(const std::string& s) {
  const char* c = s.c_str();
  char* end = nullptr;
  std::strtod(c, &end);
  return end == c + s.size() && !s.empty();
}

double to_number(const Token& t, int line_no) {
  const char* s = t.text.c_str();
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end != s + t.text.size() || t.text.empty() || !std::isfinite(v)) {
    throw ParseError("E_SYNTAX", line_no, t.col,
                     "expected a number, got '" + t.text + "'");
  }
  return v;
}

EuclideanVector to_coords(const std::vector<Token>& toks, std::size_t first,
                          int count, int line_no) {
  EuclideanVector x(count);
  for (int i = 0; i < count; ++i) x[i] = to_number(toks[first + i], line_no);
  return x;
}

const Entity& named_point(const Scene& scene, const Token& t, int line_no) {
  auto it = scene.symbols.find(t.text);
  if (it == scene.symbols.end()) {
    throw ParseError("E_UNKNOWN_REF", line_no, t.col,
                     "unknown name '" + t.text + "'");
  }
  if (it->second.kind != EntityKind::Point) {
    throw ParseError("E_SYNTAX", line_no, t.col,
                     "'" + t.text + "' is not a point");
  }
  return it->second;
}

ConformalPoint point_of(const Entity& e) { return embed(e.coords); }

void add_entity(Scene& scene, const Token& name, Entity entity, int line_no) {
  if (looks_like_number(name.text)) {
    throw ParseError("E_SYNTAX", line_no, name.col,
                     "invalid entity name '" + name.text + "'");
  }
  if (!scene.symbols.emplace(name.text, std::move(entity)).second) {
    throw ParseError("E_DUPLICATE", line_no, name.col,
                     "name '" + name.text + "' is already defined");
  }
}

}  // namespace

const Entity& Scene::lookup(const std::string& name) const {
  auto it = symbols.find(name);
  if (it == symbols.end()) {
    throw ParseError("E_UNKNOWN_REF", 0, 0, "unknown name '" + name + "'");
  }
  return it->second;
}

Scene parse_scene(const std::string& text) {
  Scene scene;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  bool have_dim = false;

  while (std::getline(in, line)) {
    ++line_no;
    const std::vector<Token> toks = tokenize(line);
    if (toks.empty()) continue;
    const std::string& verb = toks[0].text;

    if (!have_dim) {
      if (verb != "dim") {
        throw ParseError("E_SYNTAX", line_no, toks[0].col,
                         "first statement must be 'dim <2|3>'");
      }
      if (toks.size() != 2) {
        throw ParseError("E_SYNTAX", line_no, toks[0].col, "usage: dim <2|3>");
      }
      const double v = to_number(toks[1], line_no);
      if (v != 2.0 && v != 3.0) {
        throw ParseError("E_DIM", line_no, toks[1].col, "dimension must be 2 or 3");
      }
      scene.dim = static_cast<int>(v);
      have_dim = true;
      continue;
    }

    try {
      if (verb == "dim") {
        throw ParseError("E_SYNTAX", line_no, toks[0].col, "duplicate dim statement");
      } else if (verb == "point") {
        if (toks.size() < 3) {
          throw ParseError("E_SYNTAX", line_no, toks[0].col,
                           "usage: point <name> <coords...>");
        }
        const int ncoords = static_cast<int>(toks.size()) - 2;
        if (ncoords != scene.dim) {
          throw ParseError("E_DIM", line_no, toks[2].col,
                           "point needs " + std::to_string(scene.dim) +
                               " coordinates in a dim-" + std::to_string(scene.dim) +
                               " scene, got " + std::to_string(ncoords));
        }
        const EuclideanVector x = to_coords(toks, 2, scene.dim, line_no);
        add_entity(scene, toks[1],
                   Entity{EntityKind::Point, embed(x).mv(), x, {x}}, line_no);
      } else if (verb == "line") {
        if (toks.size() != 4) {
          throw ParseError("E_SYNTAX", line_no, toks[0].col,
                           "usage: line <name> <pt> <pt>");
        }
        const Entity& a = named_point(scene, toks[2], line_no);
        const Entity& b = named_point(scene, toks[3], line_no);
        const CircleOrLine l = line_through(point_of(a), point_of(b));
        add_entity(scene, toks[1],
                   Entity{EntityKind::Line, l.blade, {}, {a.coords, b.coords}},
                   line_no);
      } else if (verb == "circle") {
        if (toks.size() != 5) {
          throw ParseError("E_SYNTAX", line_no, toks[0].col,
                           "usage: circle <name> <pt> <pt> <pt>");
        }
        const Entity& a = named_point(scene, toks[2], line_no);
        const Entity& b = named_point(scene, toks[3], line_no);
        const Entity& c = named_point(scene, toks[4], line_no);
        const CircleOrLine circ = circle_through(point_of(a), point_of(b), point_of(c));
        add_entity(scene, toks[1],
                   Entity{EntityKind::Circle, circ.blade, {},
                          {a.coords, b.coords, c.coords}},
                   line_no);
      } else if (verb == "plane") {
        if (scene.dim != 3) {
          throw ParseError("E_DIM", line_no, toks[0].col,
                           "planes need a dim-3 scene");
        }
        if (toks.size() != 5) {
          throw ParseError("E_SYNTAX", line_no, toks[0].col,
                           "usage: plane <name> <pt> <pt> <pt>");
        }
        const Entity& a = named_point(scene, toks[2], line_no);
        const Entity& b = named_point(scene, toks[3], line_no);
        const Entity& c = named_point(scene, toks[4], line_no);
        const SphereOrPlane p = plane_through(point_of(a), point_of(b), point_of(c));
        add_entity(scene, toks[1],
                   Entity{EntityKind::Plane, p.blade, {},
                          {a.coords, b.coords, c.coords}},
                   line_no);
      } else if (verb == "sphere") {
        if (scene.dim != 3) {
          throw ParseError("E_DIM", line_no, toks[0].col,
                           "spheres need a dim-3 scene");
        }
        if (toks.size() == 8 && toks[2].text == "center" && toks[6].text == "radius") {
          const EuclideanVector c = to_coords(toks, 3, 3, line_no);
          const double r = to_number(toks[7], line_no);
          const SphereOrPlane s = sphere_from_center_radius(c, r);
          add_entity(scene, toks[1], Entity{EntityKind::Sphere, s.blade, {}, {c}},
                     line_no);
        } else if (toks.size() == 6) {
          const Entity& a = named_point(scene, toks[2], line_no);
          const Entity& b = named_point(scene, toks[3], line_no);
          const Entity& c = named_point(scene, toks[4], line_no);
          const Entity& d = named_point(scene, toks[5], line_no);
          const SphereOrPlane s =
              sphere_through(point_of(a), point_of(b), point_of(c), point_of(d));
          add_entity(scene, toks[1],
                     Entity{EntityKind::Sphere, s.blade, {},
                            {a.coords, b.coords, c.coords, d.coords}},
                     line_no);
        } else {
          throw ParseError("E_SYNTAX", line_no, toks[0].col,
                           "usage: sphere <name> <pt> <pt> <pt> <pt> | "
                           "sphere <name> center <x> <y> <z> radius <r>");
        }
      } else {
        throw ParseError("E_SYNTAX", line_no, toks[0].col,
                         "unknown statement '" + verb + "'");
      }
    } catch (const GeomError& e) {
      throw ParseError("E_DEGENERATE", line_no, toks[0].col, e.what());
    }
  }

  if (!have_dim) {
    throw ParseError("E_SYNTAX", line_no, 1, "empty scene: missing 'dim'");
  }
  return scene;
}

std::string format_number(double v) {
  if (v == 0.0) v = 0.0;  // collapse negative zero
  char buf[48];
  std::snprintf(buf, sizeof buf, "%#.9g", v);
  return std::string(buf);
}

std::string format_point(const EuclideanVector& p) {
  std::string out = "(";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += format_number(p[i]);
  }
  out += ")";
  return out;
}

namespace {

nlohmann::ordered_json json_point(const EuclideanVector& p) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (int i = 0; i < p.size(); ++i) a.push_back(p[i]);
  return a;
}

bool lex_less(const EuclideanVector& a, const EuclideanVector& b) {
  for (int i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

[[noreturn]] void bad_query(const std::string& msg, int col = 0) {
  throw ParseError("E_QUERY", 0, col, msg);
}

const Entity& want(const Scene& scene, const Token& t) {
  auto it = scene.symbols.find(t.text);
  if (it == scene.symbols.end()) {
    throw ParseError("E_UNKNOWN_REF", 0, t.col, "unknown name '" + t.text + "'");
  }
  return it->second;
}

const Entity& want_point(const Scene& scene, const Token& t) {
  const Entity& e = want(scene, t);
  if (e.kind != EntityKind::Point) bad_query("'" + t.text + "' is not a point", t.col);
  return e;
}

bool is_lineish(const Entity& e) {
  return e.kind == EntityKind::Line || e.kind == EntityKind::Circle;
}
bool is_sphereish(const Entity& e) {
  return e.kind == EntityKind::Sphere || e.kind == EntityKind::Plane;
}

// Renders any primitive blade (or point) in its canonical text form.
QueryResult describe_blade(const Multivector& mv) {
  QueryResult r;
  const int g = dominant_grade(mv);
  if (g == 1) {
    const EuclideanVector p = extract_point(normalize_point_rel(mv));
    r.text = "point: " + format_point(p);
    r.data["kind"] = "point";
    r.data["point"] = json_point(p);
    return r;
  }
  if (g == 3) {
    const CircleOrLine c{mv};
    if (c.flat()) {
      const LineInfo info = line_info(mv);
      r.text = "line: point " + format_point(info.point) + " dir " +
               format_point(info.direction);
      r.data["kind"] = "line";
      r.data["point"] = json_point(info.point);
      r.data["dir"] = json_point(info.direction);
    } else {
      const CenterRadius cr = circle_center_radius(c);
      r.text = "circle: center " + format_point(cr.center) + " radius " +
               format_number(cr.radius);
      r.data["kind"] = "circle";
      r.data["center"] = json_point(cr.center);
      r.data["radius"] = cr.radius;
    }
    return r;
  }
  if (g == 4 && euclidean_dim(mv.signature()) == 3) {
    const SphereOrPlane s{mv};
    if (s.flat()) {
      const PlaneInfo info = plane_info(mv);
      r.text = "plane: normal " + format_point(info.normal) + " offset " +
               format_number(info.offset);
      r.data["kind"] = "plane";
      r.data["normal"] = json_point(info.normal);
      r.data["offset"] = info.offset;
    } else {
      const CenterRadius cr = sphere_center_radius(s);
      r.text = "sphere: center " + format_point(cr.center) + " radius " +
               format_number(cr.radius);
      r.data["kind"] = "sphere";
      r.data["center"] = json_point(cr.center);
      r.data["radius"] = cr.radius;
    }
    return r;
  }
  throw GeomError("result blade has no primitive interpretation (grade " +
                  std::to_string(g) + ")");
}

QueryResult describe_meet(const MeetOutcome& m) {
  QueryResult r;
  switch (m.kind) {
    case MeetKind::TwoPoints: {
      std::vector<EuclideanVector> pts = m.points;
      std::sort(pts.begin(), pts.end(), lex_less);
      r.text = "pair:";
      r.data["kind"] = "pair";
      r.data["points"] = nlohmann::ordered_json::array();
      for (const auto& p : pts) {
        r.text += " " + format_point(p);
        r.data["points"].push_back(json_point(p));
      }
      if (m.at_infinity) r.text += " inf";
      r.data["at_infinity"] = m.at_infinity;
      return r;
    }
    case MeetKind::TangentPoint: {
      r.data["kind"] = "tangent";
      if (m.points.empty()) {
        r.text = "tangent: inf";
        r.data["at_infinity"] = true;
      } else {
        r.text = "tangent: " + format_point(m.points[0]);
        r.data["point"] = json_point(m.points[0]);
        r.data["at_infinity"] = false;
      }
      return r;
    }
    case MeetKind::Empty:
      r.text = "empty";
      r.data["kind"] = "empty";
      return r;
    case MeetKind::Circle: {
      r.text = "circle: center " + format_point(m.circle->center) + " radius " +
               format_number(m.circle->radius);
      r.data["kind"] = "circle";
      r.data["center"] = json_point(m.circle->center);
      r.data["radius"] = m.circle->radius;
      return r;
    }
    case MeetKind::Line: {
      r.text = "line: point " + format_point(m.line->point) + " dir " +
               format_point(m.line->direction);
      r.data["kind"] = "line";
      r.data["point"] = json_point(m.line->point);
      r.data["dir"] = json_point(m.line->direction);
      return r;
    }
  }
  throw GeomError("unreachable meet kind");
}

MeetOutcome dispatch_meet(const Scene& scene, const Entity& a, const Entity& b,
                          double eps) {
  if (scene.dim == 2) {
    if (is_lineish(a) && is_lineish(b)) {
      return meet_lines_2d(CircleOrLine{a.mv}, CircleOrLine{b.mv}, eps);
    }
    bad_query("intersect in 2D expects two lines/circles");
  }
  if (is_lineish(a) && is_sphereish(b)) {
    return meet_line_sphere(CircleOrLine{a.mv}, SphereOrPlane{b.mv}, eps);
  }
  if (is_sphereish(a) && is_lineish(b)) {
    return meet_line_sphere(CircleOrLine{b.mv}, SphereOrPlane{a.mv}, eps);
  }
  if (is_sphereish(a) && is_sphereish(b)) {
    return meet_spheres(SphereOrPlane{a.mv}, SphereOrPlane{b.mv}, eps);
  }
  bad_query("unsupported intersect pair (3D line-line is out of scope)");
}

Multivector rotation_plane(const Scene& scene, const Token& t) {
  const Signature sig = Signature::conformal(scene.dim);
  if (t.text == "xy") {
    return Multivector::basis_blade(sig, 0b011, 1.0);
  }
  if (scene.dim == 3 && t.text == "yz") {
    return Multivector::basis_blade(sig, 0b110, 1.0);
  }
  if (scene.dim == 3 && t.text == "zx") {
    return Multivector::basis_blade(sig, 0b101, -1.0);  // e3 ^ e1
  }
  bad_query("unknown rotation plane '" + t.text + "'", t.col);
}

// Shared by collinear/coplanar: the blade may vanish entirely (repeated or
// concyclic inputs), which counts as degenerate-flat with measure zero.
double flat_measure_or_zero(const Multivector& blade, double input_scale,
                            bool sphere_like) {
  if (blade.norm() <= kDegenerateEps * input_scale) return 0.0;
  if (sphere_like) return flatness(SphereOrPlane{blade});
  return straightness(CircleOrLine{blade});
}

struct Bounce {
  std::vector<EuclideanVector> hits;
  EuclideanVector dir;
};

Bounce run_bounce(const Scene& scene, const Entity& line_ent,
                  const std::vector<const Entity*>& mirrors, long steps,
                  double eps) {
  EuclideanVector origin = line_ent.gens.at(0);
  EuclideanVector dir = (line_ent.gens.at(1) - line_ent.gens.at(0)).normalized();
  Multivector line = line_ent.mv;

  Bounce out;
  for (long step = 0; step < steps; ++step) {
    double best_t = std::numeric_limits<double>::infinity();
    const Entity* best_mirror = nullptr;
    EuclideanVector best_hit;

    for (const Entity* m : mirrors) {
      MeetOutcome outcome(Multivector(line.signature()));
      try {
        if (scene.dim == 2) {
          outcome = meet_lines_2d(CircleOrLine{line}, CircleOrLine{m->mv}, eps);
        } else {
          outcome = meet_line_sphere(CircleOrLine{line}, SphereOrPlane{m->mv}, eps);
        }
      } catch (const GeomError&) {
        continue;  // contained/coincident: no usable bounce off this mirror
      }
      for (const EuclideanVector& x : outcome.points) {
        const double t = (x - origin).dot(dir);
        if (t > 1e-9 && t < best_t) {
          best_t = t;
          best_mirror = m;
          best_hit = x;
        }
      }
    }
    if (best_mirror == nullptr) {
      throw GeomError("bounce: ray escapes after " + std::to_string(step) +
                      " hit(s); a result was required");
    }

    const Multivector mirror_plane =
        is_flat_blade(best_mirror->mv)
            ? best_mirror->mv
            : tangent_plane(best_mirror->mv, embed(best_hit));
    line = reflect_in_flat_or_sphere(line, mirror_plane);
    dir = reflect_vector(dir, plane_info(mirror_plane).normal);
    origin = best_hit;
    out.hits.push_back(best_hit);
  }
  out.dir = dir;
  return out;
}

QueryResult run_query_impl(const Scene& scene, const std::vector<Token>& toks,
                           double eps) {
  const std::string& verb = toks[0].text;
  QueryResult r;

  if (verb == "dist") {
    if (toks.size() != 3) bad_query("usage: dist <pt> <pt>");
    const Entity& a = want_point(scene, toks[1]);
    const Entity& b = want_point(scene, toks[2]);
    const double d = distance(a.mv, b.mv);
    r.text = format_number(d);
    r.data["kind"] = "scalar";
    r.data["value"] = d;
    return r;
  }

  if (verb == "circum") {
    if (toks.size() != 4 && toks.size() != 5) {
      bad_query("usage: circum <pt> <pt> <pt> [<pt>]");
    }
    CenterRadius cr;
    if (toks.size() == 4) {
      cr = circle_center_radius(circle_through(
          point_of(want_point(scene, toks[1])), point_of(want_point(scene, toks[2])),
          point_of(want_point(scene, toks[3]))));
    } else {
      if (scene.dim != 3) bad_query("circum with four points needs a dim-3 scene");
      cr = sphere_center_radius(sphere_through(
          point_of(want_point(scene, toks[1])), point_of(want_point(scene, toks[2])),
          point_of(want_point(scene, toks[3])), point_of(want_point(scene, toks[4]))));
    }
    r.text = "center " + format_point(cr.center) + " radius " + format_number(cr.radius);
    r.data["kind"] = toks.size() == 4 ? "circumcircle" : "circumsphere";
    r.data["center"] = json_point(cr.center);
    r.data["radius"] = cr.radius;
    return r;
  }

  if (verb == "intersect") {
    if (toks.size() != 3) bad_query("usage: intersect <prim> <prim>");
    const Entity& a = want(scene, toks[1]);
    const Entity& b = want(scene, toks[2]);
    if (a.kind == EntityKind::Point || b.kind == EntityKind::Point) {
      bad_query("intersect expects primitives, not points");
    }
    return describe_meet(dispatch_meet(scene, a, b, eps));
  }

  if (verb == "reflect") {
    if (toks.size() != 3) bad_query("usage: reflect <line|circle> <mirror>");
    const Entity& l = want(scene, toks[1]);
    const Entity& p = want(scene, toks[2]);
    if (!is_lineish(l)) bad_query("reflect expects a line or circle operand");
    const bool mirror_ok = scene.dim == 2 ? is_lineish(p) : is_sphereish(p);
    if (!mirror_ok) {
      bad_query(scene.dim == 2 ? "2D mirrors are lines or circles"
                               : "3D mirrors are planes or spheres");
    }
    return describe_blade(reflect_in_flat_or_sphere(l.mv, p.mv));
  }

  if (verb == "tangent") {
    if (toks.size() != 3) bad_query("usage: tangent <sphere|circle> <pt>");
    const Entity& s = want(scene, toks[1]);
    const Entity& p = want_point(scene, toks[2]);
    const bool ok = scene.dim == 2 ? s.kind == EntityKind::Circle
                                   : s.kind == EntityKind::Sphere;
    if (!ok) bad_query("tangent expects a circle (2D) or sphere (3D)");
    return describe_blade(tangent_plane(s.mv, point_of(p)));
  }

  if (verb == "angle") {
    if (toks.size() != 3) bad_query("usage: angle <line> <line>");
    const Entity& a = want(scene, toks[1]);
    const Entity& b = want(scene, toks[2]);
    if (!is_lineish(a) || !is_lineish(b)) bad_query("angle expects lines/circles");
    const double theta = angle_between_lines(CircleOrLine{a.mv}, CircleOrLine{b.mv});
    r.text = format_number(theta);
    r.data["kind"] = "scalar";
    r.data["value"] = theta;
    return r;
  }

  if (verb == "collinear" || verb == "coplanar") {
    const bool planar = verb == "coplanar";
    const std::size_t base = planar ? 5 : 4;
    if (toks.size() != base && toks.size() != base + 1) {
      bad_query("usage: " + verb + (planar ? " <pt> <pt> <pt> <pt> [eps]"
                                           : " <pt> <pt> <pt> [eps]"));
    }
    if (planar && scene.dim != 3) bad_query("coplanar needs a dim-3 scene");
    double tol = eps;
    if (toks.size() == base + 1) tol = to_number(toks[base], 0);

    Multivector blade(Signature::conformal(scene.dim));
    double scale = 1.0;
    {
      const Entity& a = want_point(scene, toks[1]);
      const Entity& b = want_point(scene, toks[2]);
      const Entity& c = want_point(scene, toks[3]);
      blade = outer_product(outer_product(point_of(a).mv(), point_of(b).mv()),
                            point_of(c).mv());
      scale = point_of(a).mv().norm() * point_of(b).mv().norm() *
              point_of(c).mv().norm();
      if (planar) {
        const Entity& d = want_point(scene, toks[4]);
        blade = outer_product(blade, point_of(d).mv());
        scale *= point_of(d).mv().norm();
      }
    }
    const double measure = flat_measure_or_zero(blade, scale, planar);
    const bool yes = measure < tol;
    const char* label = planar ? "flatness" : "straightness";
    r.text = std::string(yes ? "true" : "false") + " (" + label + " " +
             format_number(measure) + ")";
    r.data["kind"] = "predicate";
    r.data["value"] = yes;
    r.data[label] = measure;
    return r;
  }

  if (verb == "translate") {
    if (toks.size() != std::size_t(2 + scene.dim)) {
      bad_query("usage: translate <obj> <dx> <dy>" +
                std::string(scene.dim == 3 ? " <dz>" : ""));
    }
    const Entity& e = want(scene, toks[1]);
    const EuclideanVector delta = to_coords(toks, 2, scene.dim, 0);
    const Versor t = translator(delta);
    return describe_blade(apply_versor(t, e.mv));
  }

  if (verb == "rotate") {
    // rotate <obj> <xy|yz|zx> <theta> about <pt>
    if (toks.size() != 6 || toks[4].text != "about") {
      bad_query("usage: rotate <obj> <xy|yz|zx> <theta> about <pt>");
    }
    const Entity& e = want(scene, toks[1]);
    const Multivector plane = rotation_plane(scene, toks[2]);
    const double theta = to_number(toks[3], 0);
    const Entity& center = want_point(scene, toks[5]);
    const Versor rot =
        rotor_about_point(rotor_euclidean(plane, theta), center.coords);
    return describe_blade(apply_versor(rot, e.mv));
  }

  if (verb == "bounce") {
    if (toks.size() < 4) bad_query("usage: bounce <line> <mirror>... <N>");
    const Entity& l = want(scene, toks[1]);
    if (l.kind != EntityKind::Line) bad_query("bounce expects a straight line");
    std::vector<const Entity*> mirrors;
    for (std::size_t i = 2; i + 1 < toks.size(); ++i) {
      const Entity& m = want(scene, toks[i]);
      const bool ok = scene.dim == 2 ? is_lineish(m) : is_sphereish(m);
      if (!ok) bad_query("'" + toks[i].text + "' cannot act as a mirror");
      mirrors.push_back(&m);
    }
    const Token& last = toks.back();
    char* end = nullptr;
    const long steps = std::strtol(last.text.c_str(), &end, 10);
    if (end != last.text.c_str() + last.text.size() || steps < 0) {
      bad_query("bounce count must be a nonnegative integer", last.col);
    }
    const Bounce b = run_bounce(scene, l, mirrors, steps, eps);
    r.data["kind"] = "bounce";
    r.data["hits"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < b.hits.size(); ++i) {
      r.text += "hit " + std::to_string(i + 1) + ": " + format_point(b.hits[i]) + "\n";
      r.data["hits"].push_back(json_point(b.hits[i]));
    }
    r.text += "dir: " + format_point(b.dir);
    r.data["dir"] = json_point(b.dir);
    return r;
  }

  bad_query("unknown query verb '" + verb + "'", toks[0].col);
}

}  // namespace

QueryResult run_query(const Scene& scene, const std::string& query, double eps) {
  const std::vector<Token> toks = tokenize(query);
  if (toks.empty()) throw ParseError("E_QUERY", 0, 0, "empty query");
  try {
    QueryResult r = run_query_impl(scene, toks, eps);
    nlohmann::ordered_json with_query;
    with_query["query"] = query;
    for (auto& [key, value] : r.data.items()) with_query[key] = value;
    r.data = std::move(with_query);
    return r;
  } catch (const GeomError& e) {
    throw GeomError("query '" + query + "': " + e.what());
  }
}

}  // namespace cga
