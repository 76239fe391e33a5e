// Command-line front end: parses a root system, a word and a point, runs the
// requested computation and writes JSON, DOT or SVG.
//
// Exit codes: 0 success, 2 usage/parse error, 3 domain error, 4 internal
// disagreement between the two tangent-space computations.

#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "schubert/emit.hpp"
#include "schubert/schubert.hpp"

namespace {

using namespace schubert;

struct Options {
  std::string system;
  std::string word;
  std::string parabolic;
  std::string point;
  bool has_point = false;
  std::string format;
  std::string out;
};

RootSystemPtr load_system(const std::string& source) {
  if (!source.empty() && source[0] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(source);
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ValidationError("--system", std::string("bad Cartan matrix JSON: ") + e.what());
    }
    CartanMatrix c;
    if (!j.is_array()) throw CLI::ValidationError("--system", "Cartan matrix must be an array of arrays");
    for (const auto& row : j) {
      if (!row.is_array()) throw CLI::ValidationError("--system", "Cartan matrix must be an array of arrays");
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw CLI::ValidationError("--system", "Cartan entries must be integers");
        r.push_back(v.get<int>());
      }
      c.a.push_back(std::move(r));
    }
    return build_root_system(c, "custom");
  }
  auto preset = parse_preset(source);
  if (!preset) throw CLI::ValidationError("--system", "unknown root system '" + source + "'");
  return build_root_system(preset->first, preset->second);
}

void write_output(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw CLI::ValidationError("--out", "cannot open '" + opt.out + "' for writing");
  f << text;
}

std::string pick_format(const Options& opt, const std::string& fallback,
                        std::initializer_list<const char*> allowed) {
  const std::string format = opt.format.empty() ? fallback : opt.format;
  for (const char* a : allowed)
    if (format == a) return format;
  throw CLI::ValidationError("--format", "format '" + format + "' is not valid for this command");
}

int run_roots(const Options& opt) {
  auto rs = load_system(opt.system);
  const std::string format = pick_format(opt, "json", {"json", "text"});
  if (format == "json") {
    write_output(opt, roots_json(*rs).dump(2) + "\n");
  } else {
    std::string text = rs->name() + ": " + std::to_string(rs->positive_roots().size()) +
                       " positive roots\n";
    for (const Root& r : rs->positive_roots()) text += "  " + r.str() + "\n";
    write_output(opt, text);
  }
  return 0;
}

GalleryTypePtr load_type(const Options& opt, const RootSystemPtr& rs) {
  return make_gallery_type(rs, parse_word(*rs, opt.word), parse_word(*rs, opt.parabolic));
}

int run_galleries(const Options& opt) {
  auto rs = load_system(opt.system);
  auto typ = load_type(opt, rs);

  std::vector<Gallery> gs;
  Gallery* canonical = nullptr;
  Gallery canonical_storage = Gallery(typ, std::vector<bool>(static_cast<std::size_t>(typ->r()), false));
  if (opt.has_point) {
    const WeylElement u = element_from_word(rs, parse_word(*rs, opt.point));
    gs = enumerate_fiber(typ, u);
    canonical_storage = gamma_uw(typ, u);
    canonical = &canonical_storage;
  } else {
    gs = all_galleries(typ);
  }

  const std::string format = pick_format(opt, "json", {"json", "text"});
  if (format == "json") {
    json out;
    out["system"] = rs->name();
    out["word"] = opt.word;
    out["parabolic"] = format_word(*rs, typ->target_type());
    out["count"] = gs.size();
    std::map<std::string, int> sizes;
    json list = json::array();
    for (const Gallery& g : gs) {
      json jg = gallery_json(g);
      if (canonical && g == *canonical) jg["canonical"] = true;
      sizes[jg["target"].get<std::string>()] += 1;
      list.push_back(std::move(jg));
    }
    out["fiber_sizes"] = json(sizes);
    out["galleries"] = std::move(list);
    write_output(opt, out.dump(2) + "\n");
  } else {
    std::string text;
    for (const Gallery& g : gs) {
      const std::string target = word_string(g.target());
      text += g.display() + " -> " + (target.empty() ? "e" : target);
      const auto ws = walls_of(g);
      text += "  [";
      for (int j = g.r(); j >= 1; --j) {
        text += std::to_string(j) + ":" + ws[static_cast<std::size_t>(j)].wall.str() +
                (ws[static_cast<std::size_t>(j)].crossing ? "x" : "b");
        if (j > 1) text += " ";
      }
      text += "]";
      if (canonical && g == *canonical) text += "  (canonical)";
      text += "\n";
    }
    write_output(opt, text);
  }
  return 0;
}

int run_tangent(const Options& opt) {
  auto rs = load_system(opt.system);
  auto typ = load_type(opt, rs);
  pick_format(opt, "json", {"json"});
  const WeylElement u = opt.has_point ? element_from_word(rs, parse_word(*rs, opt.point))
                                      : WeylElement::identity(rs);

  const WeightSet by_definition = combinatorial_weights(typ, u);
  const WeightSet closed = weights_closed_form(u, typ->top(), typ->target_type());
  const bool agreement = by_definition.weights == closed.weights;

  json out;
  out["system"] = rs->name();
  out["word"] = opt.word;
  out["parabolic"] = format_word(*rs, typ->target_type());
  out["definition"] = weight_set_json(by_definition);
  out["closed_form"] = weight_set_json(closed);
  out["dimension"] = by_definition.dim();
  out["agreement"] = agreement;
  write_output(opt, out.dump(2) + "\n");
  if (!agreement) {
    std::cerr << "tangent-space computations disagree at point '" << opt.point << "'\n";
    return 4;
  }
  return 0;
}

int run_smooth(const Options& opt) {
  auto rs = load_system(opt.system);
  if (!opt.parabolic.empty())
    fail(errc::unsupported_parabolic,
         "the rational-smoothness verdict is only offered for the Borel case");
  pick_format(opt, "json", {"json"});
  auto typ = load_type(opt, rs);  // validates the word
  const SmoothnessReport report = smoothness_report(typ->top());
  write_output(opt, smoothness_json(report).dump(2) + "\n");
  return 0;
}

int run_graph(const Options& opt) {
  auto rs = load_system(opt.system);
  auto typ = load_type(opt, rs);
  pick_format(opt, "dot", {"dot"});
  write_output(opt, graph_dot(gallery_graph(typ)));
  return 0;
}

int run_apartment(const Options& opt) {
  auto rs = load_system(opt.system);
  pick_format(opt, "svg", {"svg"});
  std::vector<Gallery> gs;
  if (!opt.word.empty()) {
    auto typ = load_type(opt, rs);
    if (opt.has_point)
      gs = enumerate_fiber(typ, element_from_word(rs, parse_word(*rs, opt.point)));
    else
      gs = all_galleries(typ);
  }
  write_output(opt, apartment_svg(rs, gs));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial tangent spaces of Schubert varieties via galleries"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool need_word) {
    cmd->add_option("--system", opt.system, "root system preset (A2, B2, ...) or Cartan matrix JSON")
        ->required();
    auto* word = cmd->add_option("--word", opt.word, "reduced word for w, e.g. 'aba' or '010'");
    if (need_word) word->required();
    cmd->add_option("--parabolic", opt.parabolic, "target parabolic type, e.g. 'b'");
    cmd->add_option("--point", opt.point, "word for the point u")->each([&](const std::string&) {
      opt.has_point = true;
    });
    cmd->add_option("--format", opt.format, "output format: json, text, dot or svg");
    cmd->add_option("--out", opt.out, "output file (default stdout)");
  };

  auto* roots = app.add_subcommand("roots", "list the roots of a system");
  add_common(roots, false);
  auto* galleries = app.add_subcommand("galleries", "list combinatorial galleries of a type");
  add_common(galleries, true);
  auto* tangent = app.add_subcommand("tangent", "combinatorial tangent space at a point");
  add_common(tangent, true);
  auto* smooth = app.add_subcommand("smooth", "rational smoothness report for a Schubert variety");
  add_common(smooth, true);
  auto* graph = app.add_subcommand("graph", "curve graph of a gallery type as DOT");
  add_common(graph, true);
  auto* apartment = app.add_subcommand("apartment", "rank-2 apartment picture as SVG");
  add_common(apartment, false);

  try {
    app.parse(argc, argv);
    if (roots->parsed()) return run_roots(opt);
    if (galleries->parsed()) return run_galleries(opt);
    if (tangent->parsed()) return run_tangent(opt);
    if (smooth->parsed()) return run_smooth(opt);
    if (graph->parsed()) return run_graph(opt);
    if (apartment->parsed()) return run_apartment(opt);
    return 2;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 2;
  } catch (const schubert::error& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
}
