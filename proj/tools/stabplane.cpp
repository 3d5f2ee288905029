// stabplane: exact geometry of the stability plane from the command line.
//
// Subcommands: gldim, exc, region, lepotier, wall, scan, plot, verify.
// Exit codes: 0 ok, 1 internal invariant breach, 2 bad usage, 3 honest
// uncertainty at the requested depth.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "stabplane/errors.hpp"
#include "stabplane/json_io.hpp"
#include "stabplane/selfcheck.hpp"
#include "stabplane/walls.hpp"

namespace sp = stabplane;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUncertain = 3;

struct Options {
  unsigned depth = 6;
  double tolerance = 1e-9;
  std::string window = "-2,2";
  std::string cache_path;
  std::string output;  // empty: stdout
};

std::pair<sp::Rat, sp::Rat> parse_window(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw sp::InvalidParams("window must be 'lo,hi': " + text);
  sp::Rat lo = sp::parse_rat(text.substr(0, comma));
  sp::Rat hi = sp::parse_rat(text.substr(comma + 1));
  if (!(lo < hi)) throw sp::InvalidParams("window must satisfy lo < hi");
  return {lo, hi};
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) parts.push_back(item);
  return parts;
}

std::vector<double> parse_doubles(const std::string& text, size_t expect) {
  auto parts = split_commas(text);
  if (parts.size() != expect)
    throw sp::InvalidParams("expected " + std::to_string(expect) + " values: " + text);
  std::vector<double> out;
  for (const std::string& p : parts) out.push_back(std::stod(p));
  return out;
}

sp::CharVector parse_char(const std::string& text) {
  auto parts = split_commas(text);
  if (parts.size() != 3)
    throw sp::InvalidParams("character needs three components: " + text);
  return {sp::parse_rat(parts[0]), sp::parse_rat(parts[1]), sp::parse_rat(parts[2])};
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.output.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.output, std::ios::binary);
  if (!out) throw sp::Error("cannot write " + opt.output);
  out << payload;
}

std::string value_text(double v) {
  if (v == static_cast<long>(v)) return std::to_string(static_cast<long>(v)) + ".0";
  return sp::format_double(v);
}

void load_cache_into(sp::BundleForest& forest, const Options& opt) {
  if (opt.cache_path.empty()) return;
  std::ifstream probe(opt.cache_path);
  if (!probe.good()) return;  // nothing cached yet
  forest.adopt(sp::load_cache(opt.cache_path));
}

void store_cache(const sp::BundleForest& forest, const Options& opt) {
  if (opt.cache_path.empty()) return;
  sp::save_cache(opt.cache_path, forest.snapshot(), opt.depth);
}

// ---------------------------------------------------------------------------
// plotting

struct SvgMap {
  double s_lo, s_hi, q_lo, q_hi;
  double width = 800;
  double height = 600;

  double x(double s) const { return (s - s_lo) / (s_hi - s_lo) * width; }
  double y(double q) const { return (q_hi - q) / (q_hi - q_lo) * height; }
};

std::string svg_num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string svg_header(const SvgMap& map) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << svg_num(map.width)
      << " " << svg_num(map.height) << "\">\n";
  out << "<rect class=\"bg\" width=\"" << svg_num(map.width) << "\" height=\""
      << svg_num(map.height) << "\" fill=\"white\"/>\n";
  return out.str();
}

void svg_parabola(std::ostringstream& out, const SvgMap& map, double level, int samples,
                  const char* cls) {
  out << "<path class=\"" << cls << "\" fill=\"none\" stroke=\"#999\" d=\"";
  for (int i = 0; i <= samples; ++i) {
    double s = map.s_lo + (map.s_hi - map.s_lo) * i / samples;
    double q = s * s / 2 - level;
    out << (i == 0 ? "M" : " L") << svg_num(map.x(s)) << " " << svg_num(map.y(q));
  }
  out << "\"/>\n";
}

std::string plot_curve(const sp::LPApprox& approx, const SvgMap& map) {
  std::ostringstream out;
  svg_parabola(out, map, 0.0, 96, "delta0");
  svg_parabola(out, map, 0.5, 96, "deltahalf");
  for (const sp::CurvePiece& piece : approx.pieces()) {
    double sl = piece.points.el_curve.s.to_double();
    double ql = piece.points.el_curve.q.to_double();
    double sm = sp::to_double(piece.points.e_plus.s);
    double qm = sp::to_double(piece.points.e_plus.q);
    double sr = piece.points.er_curve.s.to_double();
    double qr = piece.points.er_curve.q.to_double();
    out << "<path class=\"piece\" fill=\"none\" stroke=\"#103f8f\" d=\"M"
        << svg_num(map.x(sl)) << " " << svg_num(map.y(ql)) << " L" << svg_num(map.x(sm))
        << " " << svg_num(map.y(qm)) << " L" << svg_num(map.x(sr)) << " "
        << svg_num(map.y(qr)) << "\"/>\n";
    sp::ReducedPoint e = piece.owner.reduced();
    out << "<line class=\"slit\" stroke=\"#b22\" x1=\"" << svg_num(map.x(sp::to_double(e.s)))
        << "\" y1=\"" << svg_num(map.y(sp::to_double(e.q))) << "\" x2=\""
        << svg_num(map.x(sp::to_double(e.s))) << "\" y2=\""
        << svg_num(map.y(qm)) << "\"/>\n";
  }
  return out.str();
}

std::string plot_regions(const sp::ExceptionalTriple& t, const SvgMap& map) {
  auto pt = [&](const sp::ReducedPoint& p) {
    return svg_num(map.x(sp::to_double(p.s))) + " " + svg_num(map.y(sp::to_double(p.q)));
  };
  sp::FivePoints f1 = sp::five_points(t.e1);
  sp::FivePoints f3 = sp::five_points(t.e3);
  sp::ReducedPoint p1 = t.e1.reduced(), p2 = t.e2.reduced(), p3 = t.e3.reduced();
  std::ostringstream out;
  out << "<path class=\"mz\" fill=\"#eef6ee\" stroke=\"#2a2\" d=\"M" << pt(p1) << " L"
      << pt(f1.e_plus) << " L" << pt(p2) << " L" << pt(f3.e_plus) << " L" << pt(p3)
      << " Z\"/>\n";
  out << "<path class=\"mzc\" fill=\"#e8f0fe\" stroke=\"#36c\" d=\"M" << pt(p1) << " L"
      << pt(f1.e_r) << " L" << pt(p2) << " L" << pt(f3.e_l) << " L" << pt(p3) << " Z\"/>\n";
  return out.str();
}

std::string plot_gldim(sp::EvalContext& ctx, const SvgMap& map, const sp::Rat& s_lo,
                       const sp::Rat& s_hi, const sp::Rat& q_lo, const sp::Rat& q_hi,
                       unsigned cells) {
  auto grid = sp::scan_grid(ctx, s_lo, s_hi, q_lo, q_hi, cells, cells);
  std::ostringstream out;
  double w = map.width / cells, h = map.height / cells;
  for (const sp::ScanCell& cell : grid) {
    std::string color = "#bbbbbb";
    if (cell.result && !cell.result->uncertain()) {
      double t = std::min(1.0, std::max(0.0, cell.result->value - 2.0));
      int red = static_cast<int>(40 + 215 * t);
      int blue = static_cast<int>(255 - 215 * t);
      char buf[16];
      std::snprintf(buf, sizeof(buf), "#%02x28%02x", red, blue);
      color = buf;
    } else if (cell.result) {
      color = "#f2e28a";  // uncertain, flagged distinctly
    }
    double cx = map.x(sp::to_double(cell.s)) - w / 2;
    double cy = map.y(sp::to_double(cell.q)) - h / 2;
    out << "<rect class=\"cell\" x=\"" << svg_num(cx) << "\" y=\"" << svg_num(cy)
        << "\" width=\"" << svg_num(w) << "\" height=\"" << svg_num(h) << "\" fill=\""
        << color << "\"/>\n";
  }
  return out.str();
}

std::string plot_wall(const sp::Wall& w, const SvgMap& map) {
  std::ostringstream out;
  out << "<line class=\"wall\" stroke=\"#7a1fa2\" x1=\"" << svg_num(map.x(w.lo.s.to_double()))
      << "\" y1=\"" << svg_num(map.y(w.lo.q.to_double())) << "\" x2=\""
      << svg_num(map.x(w.hi.s.to_double())) << "\" y2=\""
      << svg_num(map.y(w.hi.q.to_double())) << "\"/>\n";
  return out.str();
}

// ---------------------------------------------------------------------------

int cmd_gldim(const Options& opt, const std::string& s_text, const std::string& q_text,
              const std::string& triple, const std::string& shape, const std::string& masses,
              const std::string& phases, const std::string& json_text) {
  sp::GldimResult res;
  if (!triple.empty() || !json_text.empty()) {
    sp::BundleForest forest;
    load_cache_into(forest, opt);
    sp::AlgebraicSC sc;
    if (!json_text.empty()) {
      sc = sp::algebraic_from_json(json_text, forest);
    } else {
      sc.triple =
          sp::make_triple(sp::DyadicLabel::parse(triple), sp::parse_shape(shape), forest);
      auto m = parse_doubles(masses, 3);
      auto phi = parse_doubles(phases, 3);
      sc.m1 = m[0];
      sc.m2 = m[1];
      sc.m3 = m[2];
      sc.phi1 = phi[0];
      sc.phi2 = phi[1];
      sc.phi3 = phi[2];
      sp::validate_params(sc);
    }
    res = sp::gldim_algebraic(sc, opt.tolerance);
    store_cache(forest, opt);
  } else {
    if (s_text.empty() || q_text.empty())
      throw sp::InvalidParams("need --s and --q, or --triple with --m/--phi");
    sp::Rat s = sp::parse_rat(s_text), q = sp::parse_rat(q_text);
    auto [lo, hi] = parse_window(opt.window);
    lo = std::min(lo, sp::Rat(s - 1));
    hi = std::max(hi, sp::Rat(s + 1));
    sp::EvalContext ctx(lo, hi, opt.depth, opt.tolerance);
    load_cache_into(ctx.forest(), opt);
    res = sp::gldim_geometric(sp::GeometricSC{s, q}, ctx);
    store_cache(ctx.forest(), opt);
  }
  std::cout << value_text(res.value) << " " << sp::to_string(res.kind) << "\n";
  std::cout << "witness: " << res.witness << "\n";
  return res.uncertain() ? kExitUncertain : kExitOk;
}

int cmd_exc(const Options& opt, const std::string& format) {
  auto [lo, hi] = parse_window(opt.window);
  sp::BundleForest forest;
  load_cache_into(forest, opt);
  auto bundles = forest.window(lo, hi, opt.depth);
  if (format == "json") {
    emit(opt, sp::cache_to_json(bundles, opt.depth));
  } else {
    std::ostringstream out;
    out << "label,rank,ch0,ch1,ch2,slope\n";
    for (const auto& b : bundles) {
      out << b.label.str() << "," << b.rank().get_str() << "," << sp::to_string(b.ch.ch0)
          << "," << sp::to_string(b.ch.ch1) << "," << sp::to_string(b.ch.ch2) << ","
          << sp::to_string(b.slope()) << "\n";
    }
    emit(opt, out.str());
  }
  store_cache(forest, opt);
  return kExitOk;
}

int cmd_region(const Options& opt, const std::string& s_text, const std::string& q_text) {
  sp::Rat s = sp::parse_rat(s_text), q = sp::parse_rat(q_text);
  auto [lo, hi] = parse_window(opt.window);
  lo = std::min(lo, sp::Rat(s - 1));
  hi = std::max(hi, sp::Rat(s + 1));
  sp::EvalContext ctx(lo, hi, opt.depth, opt.tolerance);
  load_cache_into(ctx.forest(), opt);
  sp::RegionResult res = ctx.regions().find(sp::PlanePoint(s, q), ctx.lp());
  std::cout << sp::to_string(res.tag.kind);
  if (res.tag.owner) std::cout << " owner=" << res.tag.owner->name();
  if (res.triple) std::cout << " triple=" << res.triple->name();
  std::cout << "\n";
  store_cache(ctx.forest(), opt);
  return res.tag.kind == sp::RegionKind::Uncertain ? kExitUncertain : kExitOk;
}

int cmd_lepotier(const Options& opt, const std::string& format) {
  auto [lo, hi] = parse_window(opt.window);
  sp::BundleForest forest;
  load_cache_into(forest, opt);
  sp::LPApprox approx = sp::build_lp(forest, lo, hi, opt.depth);
  if (format == "svg") {
    double m = std::max(std::abs(sp::to_double(lo)), std::abs(sp::to_double(hi)));
    SvgMap map{sp::to_double(lo), sp::to_double(hi), -1.5, m * m / 2 + 0.5};
    std::ostringstream out;
    out << svg_header(map) << plot_curve(approx, map) << "</svg>\n";
    emit(opt, out.str());
  } else {
    emit(opt, sp::lp_csv(approx));
  }
  store_cache(forest, opt);
  return kExitOk;
}

int cmd_wall(const Options& opt, const std::string& s_text, const std::string& q_text,
             const std::string& ch_text) {
  sp::Rat s = sp::parse_rat(s_text), q = sp::parse_rat(q_text);
  sp::CharVector v = parse_char(ch_text);
  auto [lo, hi] = parse_window(opt.window);
  lo = std::min(lo, sp::Rat(s - 1));
  hi = std::max(hi, sp::Rat(s + 1));
  sp::BundleForest forest;
  load_cache_into(forest, opt);
  sp::LPApprox approx = sp::build_lp(forest, lo, hi, opt.depth);
  sp::Wall w = sp::wall(sp::GeometricSC{s, q}, v, approx);
  std::ostringstream out;
  out << "line: ";
  if (w.line.is_vertical())
    out << "s = " << w.line.gamma().decimal(12) << " (vertical)\n";
  else
    out << "q = " << (-w.line.alpha()).decimal(12) << "*s + " << (-w.line.gamma()).decimal(12)
        << "\n";
  out << "lo: s=" << w.lo.s.decimal(17) << " q=" << w.lo.q.decimal(17)
      << " exact=" << w.lo.s.to_string() << (w.lo_unbounded ? " (unbounded)" : "") << "\n";
  out << "hi: s=" << w.hi.s.decimal(17) << " q=" << w.hi.q.decimal(17)
      << " exact=" << w.hi.s.to_string() << (w.hi_unbounded ? " (unbounded)" : "") << "\n";
  emit(opt, out.str());
  store_cache(forest, opt);
  return kExitOk;
}

int cmd_scan(const Options& opt, const std::string& qrange, unsigned ns, unsigned nq,
             unsigned jobs) {
  auto [s_lo, s_hi] = parse_window(opt.window);
  auto [q_lo, q_hi] = parse_window(qrange);
  sp::EvalContext ctx(s_lo, s_hi, opt.depth, opt.tolerance);
  load_cache_into(ctx.forest(), opt);
  auto cells = sp::scan_grid(ctx, s_lo, s_hi, q_lo, q_hi, ns, nq, jobs);
  emit(opt, sp::scan_csv(cells));
  store_cache(ctx.forest(), opt);
  bool uncertain = false;
  for (const auto& c : cells)
    if (c.result && c.result->uncertain()) uncertain = true;
  return uncertain ? kExitUncertain : kExitOk;
}

int cmd_plot(const Options& opt, const std::string& overlay, const std::string& qrange,
             const std::string& triple, const std::string& shape, const std::string& s_text,
             const std::string& q_text, const std::string& ch_text, unsigned cells) {
  auto [lo, hi] = parse_window(opt.window);
  sp::Rat q_lo, q_hi;
  if (!qrange.empty()) {
    auto [a, b] = parse_window(qrange);
    q_lo = a;
    q_hi = b;
  } else {
    sp::Rat m = std::max(sp::Rat(abs(lo)), sp::Rat(abs(hi)));
    q_lo = sp::rat(-3, 2);
    q_hi = m * m / 2 + sp::rat(1, 2);
  }
  SvgMap map{sp::to_double(lo), sp::to_double(hi), sp::to_double(q_lo), sp::to_double(q_hi)};
  std::ostringstream out;
  out << svg_header(map);

  sp::BundleForest forest;
  load_cache_into(forest, opt);
  if (overlay == "gldim") {
    sp::EvalContext ctx(lo, hi, opt.depth, opt.tolerance);
    load_cache_into(ctx.forest(), opt);
    out << plot_gldim(ctx, map, lo, hi, q_lo, q_hi, cells == 0 ? 24 : cells);
    sp::LPApprox approx = sp::build_lp(ctx.forest(), lo, hi, opt.depth);
    out << plot_curve(approx, map);
    store_cache(ctx.forest(), opt);
  } else {
    sp::LPApprox approx = sp::build_lp(forest, lo, hi, opt.depth);
    out << plot_curve(approx, map);
    if (overlay == "regions") {
      if (triple.empty()) throw sp::InvalidParams("regions overlay needs --triple");
      out << plot_regions(
          sp::make_triple(sp::DyadicLabel::parse(triple), sp::parse_shape(shape), forest), map);
    } else if (overlay == "walls") {
      if (s_text.empty() || q_text.empty() || ch_text.empty())
        throw sp::InvalidParams("walls overlay needs --s, --q and --ch");
      sp::Wall w = sp::wall(
          sp::GeometricSC{sp::parse_rat(s_text), sp::parse_rat(q_text)}, parse_char(ch_text),
          approx);
      out << plot_wall(w, map);
    } else if (overlay != "curve") {
      throw sp::InvalidParams("unknown overlay: " + overlay);
    }
    store_cache(forest, opt);
  }
  out << "</svg>\n";
  emit(opt, out.str());
  return kExitOk;
}

int cmd_verify(const std::string& suite) {
  std::vector<std::string> names;
  if (suite == "all")
    names = sp::suite_names();
  else
    names.push_back(suite);
  size_t checks = 0, failures = 0;
  for (const std::string& name : names) {
    sp::CheckReport rep = sp::run_suite(name);
    checks += rep.checks;
    failures += rep.failures;
    std::cout << name << ": " << (rep.failures == 0 ? "ok" : "FAIL") << " ("
              << rep.checks - rep.failures << "/" << rep.checks << " checks)\n";
    for (const std::string& msg : rep.messages) std::cout << "  ! " << msg << "\n";
  }
  std::cout << "total: " << checks << " checks, " << failures << " failures\n";
  return failures == 0 ? kExitOk : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact stability-plane computations"};
  app.require_subcommand(1);

  Options opt;
  if (const char* env = std::getenv("STABPLANE_CACHE")) opt.cache_path = env;
  app.add_option("--depth", opt.depth, "tree depth (default 6)");
  app.add_option("--tolerance", opt.tolerance, "phase tolerance (default 1e-9)");
  app.add_option("--window", opt.window, "slope window 'lo,hi' (default -2,2)");
  app.add_option("--cache", opt.cache_path, "bundle cache file (env STABPLANE_CACHE)");
  app.add_option("--output", opt.output, "write to file instead of stdout");

  std::string s_text, q_text, triple, shape = "consecutive", masses, phases, sc_json;
  std::string format = "csv", ch_text, qrange, overlay = "curve", suite = "all";
  unsigned ns = 16, nq = 16, jobs = 1, cells = 0;

  CLI::App* gldim = app.add_subcommand("gldim", "evaluate the global dimension function");
  gldim->fallthrough();
  gldim->add_option("--s", s_text);
  gldim->add_option("--q", q_text);
  gldim->add_option("--triple", triple, "center label of the triple, e.g. 0 or 1/2");
  gldim->add_option("--shape", shape, "consecutive|right-twisted|left-twisted");
  gldim->add_option("--m", masses, "three masses m1,m2,m3");
  gldim->add_option("--phi", phases, "three phases phi1,phi2,phi3");
  gldim->add_option("--json", sc_json, "algebraic data as JSON {triple:{center,shape},m,phi}");

  CLI::App* exc = app.add_subcommand("exc", "enumerate exceptional bundles");
  exc->fallthrough();
  exc->add_option("--format", format, "csv|json");

  CLI::App* region = app.add_subcommand("region", "locate a point in the region decomposition");
  region->fallthrough();
  region->add_option("--s", s_text)->required();
  region->add_option("--q", q_text)->required();

  CLI::App* lepotier = app.add_subcommand("lepotier", "curve approximation export");
  lepotier->fallthrough();
  lepotier->add_option("--format", format, "csv|svg");

  CLI::App* wallc = app.add_subcommand("wall", "clip the wall of a class through a point");
  wallc->fallthrough();
  wallc->add_option("--s", s_text)->required();
  wallc->add_option("--q", q_text)->required();
  wallc->add_option("--ch", ch_text, "class 'ch0,ch1,ch2'")->required();

  CLI::App* scan = app.add_subcommand("scan", "gldim over a grid, CSV");
  scan->fallthrough();
  scan->add_option("--qrange", qrange, "q range 'lo,hi'")->required();
  scan->add_option("--ns", ns, "samples in s (default 16)");
  scan->add_option("--nq", nq, "samples in q (default 16)");
  scan->add_option("--jobs", jobs, "parallel rows (default 1)");

  CLI::App* plot = app.add_subcommand("plot", "SVG picture of the plane");
  plot->fallthrough();
  plot->add_option("--overlay", overlay, "curve|regions|gldim|walls");
  plot->add_option("--qrange", qrange);
  plot->add_option("--triple", triple);
  plot->add_option("--shape", shape);
  plot->add_option("--s", s_text);
  plot->add_option("--q", q_text);
  plot->add_option("--ch", ch_text);
  plot->add_option("--cells", cells, "heat cells per axis (gldim overlay)");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  verify->fallthrough();
  verify->add_option("--suite", suite, "numk|plane|exceptional|lepotier|stability|gldim|walls|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (gldim->parsed())
      return cmd_gldim(opt, s_text, q_text, triple, shape, masses, phases, sc_json);
    if (exc->parsed()) return cmd_exc(opt, format);
    if (region->parsed()) return cmd_region(opt, s_text, q_text);
    if (lepotier->parsed()) return cmd_lepotier(opt, format);
    if (wallc->parsed()) return cmd_wall(opt, s_text, q_text, ch_text);
    if (scan->parsed()) return cmd_scan(opt, qrange, ns, nq, jobs);
    if (plot->parsed())
      return cmd_plot(opt, overlay, qrange, triple, shape, s_text, q_text, ch_text, cells);
    if (verify->parsed()) return cmd_verify(suite);
  } catch (const sp::InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sp::NotGeometric& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const sp::Error& e) {
    std::cerr << "internal: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
