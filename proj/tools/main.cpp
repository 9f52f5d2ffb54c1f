// Command-line front end: analyze mechanisms, enumerate triangulations,
// check regularity of subdivision files, build robust mechanisms, analyze
// affine maximizers, and render 2D diagrams as SVG.
//
// Exit codes: 0 ok, 2 parse error, 3 invariant violation, 4 size guard,
// 5 render dimension.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tropmech/errors.hpp"
#include "tropmech/io.hpp"
#include "tropmech/render.hpp"
#include "tropmech/report.hpp"

namespace {

using namespace tropmech;

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty())
    std::cout << content;
  else
    write_text_file(out_path, content);
}

QVec parse_viewport(const std::string& s) {
  QVec vp;
  std::string part;
  std::stringstream ss(s);
  while (std::getline(ss, part, ',')) vp.push_back(parse_rational(part));
  if (vp.size() != 4) throw ParseError("viewport wants x0,y0,x1,y1");
  return vp;
}

int run(int argc, char** argv) {
  CLI::App app{"Exact analysis of allocation mechanisms via regular subdivisions"};
  app.require_subcommand(1);

  std::string in_path, out_path, svg_path;
  std::string viewport = "-1,-1,2,2";
  std::string orbits = "none", kind, target;
  bool regular_only = false, long_running = false, no_labels = false;
  int items = 0, players = 2, threads = 1;
  std::size_t max_reps = 64;

  auto* analyze = app.add_subcommand("analyze", "Analyze a one-player mechanism file");
  analyze->add_option("mechanism", in_path, "mechanism JSON file")->required();
  analyze->add_option("--out", out_path, "report output path (default stdout)");
  analyze->add_option("--svg", svg_path, "also render difference sets (two items only)");
  analyze->add_option("--viewport", viewport, "rational box x0,y0,x1,y1 for --svg");

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate triangulations of a configuration");
  enumerate->add_option("config", in_path, "configuration shorthand or JSON file")->required();
  enumerate->add_flag("--regular-only", regular_only, "count regular triangulations only");
  enumerate->add_option("--orbits", orbits, "none|sym|full symmetry reduction");
  enumerate->add_flag("--long-running", long_running, "lift the size guard");
  enumerate->add_option("--threads", threads, "parallel workers for the search tree");
  enumerate->add_option("--max-representatives", max_reps, "cap on stored representatives");
  enumerate->add_option("--out", out_path, "counts output path (default stdout)");

  auto* check = app.add_subcommand("check", "Decide regularity of a subdivision file");
  check->add_option("subdivision", in_path, "subdivision JSON file")->required();
  check->add_option("--out", out_path, "result output path (default stdout)");

  auto* construct = app.add_subcommand("construct", "Build a robust mechanism");
  construct->add_option("--kind", kind, "cardinality|hamming|multiplayer")->required();
  construct->add_option("--items", items, "item count")->required();
  construct->add_option("--players", players, "player count (multiplayer only)");
  construct->add_option("--out", out_path, "mechanism output path (default stdout)");

  auto* affine = app.add_subcommand("affine", "Analyze an affine maximizer file");
  affine->add_option("maximizer", in_path, "affine maximizer JSON file")->required();
  affine->add_option("--out", out_path, "report output path (default stdout)");

  auto* render = app.add_subcommand("render", "Render a 2D diagram as SVG");
  render->add_option("input", in_path, "mechanism, polynomial, or maximizer JSON file")
      ->required();
  render->add_option("--target", target, "difference-sets|dual-subdivision|tight-span")
      ->required();
  render->add_option("--viewport", viewport, "rational box x0,y0,x1,y1");
  render->add_flag("--no-labels", no_labels, "omit text labels");
  render->add_option("--out", out_path, "SVG output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (analyze->parsed()) {
    Mechanism mech = mechanism_from_json(load_json_file(in_path));
    Json report = analyze_mechanism_report(mech);
    std::string svg;
    if (!svg_path.empty()) {
      RenderSpec spec;
      spec.viewport = parse_viewport(viewport);
      spec.target = RenderTarget::DifferenceSets;
      svg = render_difference_sets(mech, spec);
    }
    emit(out_path, dump_json(report));
    if (!svg_path.empty()) write_text_file(svg_path, svg);
    return 0;
  }

  if (enumerate->parsed()) {
    PointConfiguration cfg;
    if (in_path.find(':') != std::string::npos)
      cfg = parse_config_shorthand(in_path);
    else
      cfg = config_from_json(load_json_file(in_path));
    if (orbits != "none" && orbits != "sym" && orbits != "full")
      throw ParseError("--orbits wants none, sym, or full");
    EnumerateReportOptions opts;
    opts.regular_only = regular_only;
    opts.orbits = orbits;
    opts.long_running = long_running;
    opts.threads = threads;
    opts.max_representatives = max_reps;
    emit(out_path, dump_json(enumerate_report(cfg, opts)));
    return 0;
  }

  if (check->parsed()) {
    Subdivision s = subdivision_from_json(load_json_file(in_path));
    RegularityResult reg = is_regular(s.config, s);
    Json j;
    j["schema_version"] = 1;
    j["kind"] = "regularity-check";
    j["regular"] = reg.regular;
    if (reg.regular) {
      Json w = Json::array();
      for (const auto& h : reg.witness.heights) w.push_back(rational_json(h));
      j["witness_heights"] = w;
    }
    emit(out_path, dump_json(j));
    return 0;
  }

  if (construct->parsed()) {
    if (kind == "cardinality") {
      emit(out_path, dump_json(mechanism_json(construct_cardinality_robust(items).mech)));
    } else if (kind == "hamming") {
      emit(out_path, dump_json(mechanism_json(construct_hamming_robust(items).mech)));
    } else if (kind == "multiplayer") {
      emit(out_path, dump_json(affine_maximizer_json(construct_multiplayer_robust(players, items))));
    } else {
      throw ParseError("--kind wants cardinality, hamming, or multiplayer");
    }
    return 0;
  }

  if (affine->parsed()) {
    AffineMaximizer am = affine_maximizer_from_json(load_json_file(in_path));
    emit(out_path, dump_json(analyze_affine_report(am)));
    return 0;
  }

  if (render->parsed()) {
    Json j = load_json_file(in_path);
    RenderSpec spec;
    spec.viewport = parse_viewport(viewport);
    spec.labels = !no_labels;
    std::string svg;
    if (target == "difference-sets") {
      spec.target = RenderTarget::DifferenceSets;
      if (j.contains("payments"))
        svg = render_difference_sets(mechanism_from_json(j), spec);
      else if (j.contains("biases"))
        svg = render_affine_difference_sets(affine_maximizer_from_json(j), spec);
      else
        throw ParseError("difference-sets rendering wants a mechanism or maximizer file");
    } else if (target == "dual-subdivision") {
      spec.target = RenderTarget::DualSubdivision;
      TropicalPolynomial p = j.contains("payments")
                                 ? utility_polynomial(mechanism_from_json(j))
                                 : polynomial_from_json(j);
      svg = render_dual_subdivision(p, spec);
    } else if (target == "tight-span") {
      spec.target = RenderTarget::TightSpan;
      TropicalPolynomial p = j.contains("payments")
                                 ? utility_polynomial(mechanism_from_json(j))
                                 : polynomial_from_json(j);
      svg = render_tight_span(p, spec);
    } else {
      throw ParseError("--target wants difference-sets, dual-subdivision, or tight-span");
    }
    emit(out_path, svg);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const RenderDimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 5;
  } catch (const InvariantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
