// graphlim: command-line front end for the graph-limit toolkit.
//
// Exit status: 0 on success, 1 on a domain error (bad input file, violated
// invariant, exhausted budget), 2 on a usage error (unknown flag, name or
// subcommand).

#include "graphlim/certificates.hpp"
#include "graphlim/classes.hpp"
#include "graphlim/densities.hpp"
#include "graphlim/errors.hpp"
#include "graphlim/graph.hpp"
#include "graphlim/graphon.hpp"
#include "graphlim/limit_lab.hpp"
#include "graphlim/sampler.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace graphlim;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int parse_int(std::string_view text) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(std::string(text), &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception &) {
    throw UsageError("expected an integer, got '" + std::string(text) + "'");
  }
}

// path:4, cycle:5, complete:k, empty:k, star:k, named:NAME[:k], g6:<text>,
// or a file (graph6 when the extension is .g6, edge list otherwise).
Graph parse_graph_spec(const std::string &spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const auto head = spec.substr(0, colon);
    const auto rest = spec.substr(colon + 1);
    if (head == "g6") return from_graph6(rest);
    if (head == "path" || head == "cycle" || head == "complete" || head == "empty" ||
        head == "star") {
      const int k = parse_int(rest);
      return make_named(head, std::span<const int>(&k, 1)).graph;
    }
    if (head == "named") {
      const auto inner = rest.find(':');
      if (inner == std::string::npos) return make_named(rest).graph;
      const int k = parse_int(rest.substr(inner + 1));
      return make_named(rest.substr(0, inner), std::span<const int>(&k, 1)).graph;
    }
  }
  if (!std::filesystem::exists(spec))
    throw UsageError("not a graph spec or readable file: " + spec);
  const auto text = read_file(spec);
  if (std::filesystem::path(spec).extension() == ".g6") return from_graph6(text);
  return from_edge_list(text);
}

StepGraphon parse_graphon_spec(const std::string &spec) {
  if (spec.rfind("named:", 0) == 0) return named_graphon(spec.substr(6));
  if (!std::filesystem::exists(spec))
    throw UsageError("not a graphon spec or readable file: " + spec);
  return parse_graphon(read_file(spec));
}

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto end = text.find(sep, start);
    out.push_back(text.substr(start, end - start));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

// Comma-separated graph specs plus "cycles>=K" and "oddcycles".
ForbiddenFamily parse_family_spec(const std::string &spec, bool subgraph,
                                  std::size_t truncation) {
  ForbiddenFamily family;
  family.mode = subgraph ? ContainmentMode::Subgraph : ContainmentMode::Induced;
  family.truncation = truncation;
  for (const auto &item : split(spec, ',')) {
    if (item.empty()) throw UsageError("empty item in family spec");
    if (item.rfind("cycles>=", 0) == 0) {
      family.cycle_min = static_cast<std::size_t>(parse_int(item.substr(8)));
    } else if (item == "oddcycles") {
      family.cycle_min = 3;
      family.cycle_parity = CycleParity::Odd;
    } else {
      family.members.push_back(parse_graph_spec(item));
    }
  }
  try {
    family.validate();
  } catch (const std::invalid_argument &e) {
    throw UsageError(e.what());
  }
  return family;
}

std::vector<Vertex> parse_vertex_list(const std::string &text) {
  std::vector<Vertex> out;
  if (text.empty()) return out;
  for (const auto &item : split(text, ',')) {
    const int v = parse_int(item);
    if (v < 0) throw UsageError("negative vertex in --parts");
    out.push_back(static_cast<Vertex>(v));
  }
  return out;
}

Bipartition parse_parts(const std::string &text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) throw UsageError("--parts expects <list>/<list>");
  return {parse_vertex_list(text.substr(0, slash)), parse_vertex_list(text.substr(slash + 1))};
}

GraphPredicate class_oracle(const std::string &name) {
  try {
    return class_spec(name).oracle;
  } catch (const UnknownName &e) {
    throw UsageError(e.what());
  }
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Graph limits of hereditary graph classes"};
  app.require_subcommand(1);

  std::string kind, f_spec, g_spec, w_spec, class_name, family_spec, mode, parts_spec, emit;
  std::size_t n = 0, trials = 0, truncate = 8, nmax = 5;
  std::uint64_t seed = 0, budget = PrfOptions{}.node_budget;
  std::vector<std::size_t> n_list;

  auto *density = app.add_subcommand("density", "exact t, t_inj or t_ind of F in G");
  density->add_option("--kind", kind)->required()->check(CLI::IsMember({"hom", "inj", "ind"}));
  density->add_option("-F", f_spec)->required();
  density->add_option("-G", g_spec)->required();

  auto *gdensity = app.add_subcommand("gdensity", "exact t or t_ind of F in a step graphon");
  gdensity->add_option("--kind", kind)->required()->check(CLI::IsMember({"t", "tind"}));
  gdensity->add_option("-F", f_spec)->required();
  gdensity->add_option("-W", w_spec)->required();

  auto *sample_cmd = app.add_subcommand("sample", "draw G(n,W)");
  sample_cmd->add_option("-W", w_spec)->required();
  sample_cmd->add_option("-n", n)->required();
  sample_cmd->add_option("--seed", seed)->required();
  sample_cmd->add_option("--emit", emit)
      ->default_val("graph6")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  auto *recognize = app.add_subcommand("recognize", "class membership of a graph");
  recognize->add_option("--class", class_name)->required();
  recognize->add_option("-G", g_spec)->required();

  auto *closure = app.add_subcommand("closure", "closure membership of a graphon");
  closure->add_option("-W", w_spec)->required();
  closure->add_option("--family", family_spec)->required();
  closure->add_option("--mode", mode)->default_val("induced")->check(
      CLI::IsMember({"induced", "subgraph"}));
  closure->add_option("--truncate", truncate);

  auto *dichotomy = app.add_subcommand("dichotomy", "Monte Carlo P(G(n,W) in class)");
  dichotomy->add_option("-W", w_spec)->required();
  dichotomy->add_option("--class", class_name)->required();
  dichotomy->add_option("--n", n_list)->required()->delimiter(',');
  dichotomy->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
  dichotomy->add_option("--seed", seed)->required();

  auto *prf = app.add_subcommand("prf", "search intra-part completions of a bipartite F");
  prf->add_option("-F", f_spec)->required();
  prf->add_option("--parts", parts_spec)->required();
  prf->add_option("--family", family_spec)->required();
  prf->add_option("--truncate", truncate);
  prf->add_option("--budget", budget);

  auto *ptwin = app.add_subcommand("ptwin", "scan class members for twin-extension failures");
  ptwin->add_option("--class", class_name)->required();
  ptwin->add_option("--nmax", nmax)->check(CLI::Range(1, 7));

  auto *catalog = app.add_subcommand("catalog", "list named graphs, graphons and classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    auto &out = std::cout;
    if (*density) {
      const auto f = parse_graph_spec(f_spec), g = parse_graph_spec(g_spec);
      const auto value = kind == "hom"   ? hom_density(f, g)
                         : kind == "inj" ? inj_density(f, g)
                                         : ind_density(f, g);
      out << to_string(value) << "\n";
    } else if (*gdensity) {
      const auto f = parse_graph_spec(f_spec);
      const auto w = parse_graphon_spec(w_spec);
      out << to_string(kind == "t" ? hom_density(f, w) : ind_density(f, w)) << "\n";
    } else if (*sample_cmd) {
      const auto s = sample(parse_graphon_spec(w_spec), n, seed);
      out << (emit == "graph6" ? to_graph6(s.graph) + "\n" : to_edge_list(s.graph));
      out << "blocks";
      for (auto b : s.blocks) out << ' ' << b;
      out << "\n";
    } else if (*recognize) {
      const auto oracle = class_oracle(class_name);
      out << (oracle(parse_graph_spec(g_spec)) ? "true" : "false") << "\n";
    } else if (*closure) {
      const auto w = parse_graphon_spec(w_spec);
      const auto family = parse_family_spec(family_spec, mode == "subgraph", truncate);
      out << closure_membership(w, family).to_string() << "\n";
    } else if (*dichotomy) {
      const auto w = parse_graphon_spec(w_spec);
      const auto oracle = class_oracle(class_name);
      for (const auto &report : dichotomy_probe(w, oracle, n_list, trials, seed))
        out << report.to_string() << "\n";
    } else if (*prf) {
      const auto f = parse_graph_spec(f_spec);
      const auto parts = parse_parts(parts_spec);
      const auto family = parse_family_spec(family_spec, false, truncate);
      out << prf_search(f, parts, family, PrfOptions{budget}).to_string() << "\n";
    } else if (*ptwin) {
      const auto oracle = class_oracle(class_name);
      if (auto ce = ptwin_scan(oracle, nmax))
        out << "COUNTEREXAMPLE G=" << to_graph6(ce->graph) << " v=" << ce->vertex << "\n";
      else
        out << "ok\n";
    } else if (*catalog) {
      out << "graphs:\n";
      for (const auto &name : catalog_graph_names()) out << "  " << name << "\n";
      out << "graphons:\n";
      for (const auto &name : catalog_graphon_names()) out << "  " << name << "\n";
      out << "classes:\n";
      for (const auto &name : class_names()) out << "  " << name << "\n";
    }
  } catch (const UsageError &e) {
    std::cerr << "graphlim: " << e.what() << "\n";
    return 2;
  } catch (const UnknownName &e) {
    std::cerr << "graphlim: " << e.what() << "\n";
    return 2;
  } catch (const std::exception &e) {
    std::cerr << "graphlim: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
