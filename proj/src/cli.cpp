// Copyright 2026 The rdc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "rdc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "rdc/construct.hpp"
#include "rdc/corpus.hpp"
#include "rdc/dot.hpp"
#include "rdc/error.hpp"
#include "rdc/json_io.hpp"
#include "rdc/molecule.hpp"
#include "rdc/shapes.hpp"
#include "rdc/topology.hpp"

namespace rdc::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Failure of a predicate, already reported on stdout.
struct CheckFailed {};

std::string emit(const json& j) { return j.dump() + "\n"; }

class Context {
 public:
  Context(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  OgPoset load(const std::string& path) {
    std::string text;
    if (path == "-") {
      text.assign(std::istreambuf_iterator<char>(in_), {});
    } else {
      std::ifstream f(path);
      if (!f) throw UsageError("cannot open " + path);
      text.assign(std::istreambuf_iterator<char>(f), {});
    }
    return parse_poset(text);
  }

  std::ostream& out() { return out_; }

 private:
  std::istream& in_;
  std::ostream& out_;
};

int to_int(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError(std::string("expected an integer for ") + what + ", got '" +
                   s + "'");
}

void expect_args(const std::vector<std::string>& args, std::size_t n,
                 const std::string& usage) {
  if (args.size() != n) throw UsageError("usage: " + usage);
}

ClosedSubset select(const OgPoset& p, const std::vector<int>& subset,
                    bool use_boundary) {
  ClosedSubset u = subset.empty() ? ClosedSubset::whole(p) : closure(p, subset);
  return use_boundary ? boundary(u) : u;
}

json homology_json(const std::vector<HomologyGroup>& h) {
  json groups = json::array();
  for (const HomologyGroup& g : h) {
    json torsion = json::array();
    for (const BigInt& t : g.torsion) {
      if (t <= std::numeric_limits<std::int64_t>::max()) {
        torsion.push_back(static_cast<std::int64_t>(t));
      } else {
        torsion.push_back(t.str());
      }
    }
    groups.push_back({{"betti", g.betti}, {"torsion", torsion}});
  }
  return {{"H", groups}};
}

json with_maps(const OgPoset& p, const std::vector<std::pair<std::string,
                                                         PosetMap>>& maps) {
  json m = json::object();
  for (const auto& [name, f] : maps) m[name] = map_to_json(f);
  return {{"maps", m}, {"shape", poset_to_json(p)}};
}

void print_shape(Context& ctx, const OgPoset& p,
                 const std::vector<std::pair<std::string, PosetMap>>& maps,
                 bool emit_maps) {
  if (emit_maps) {
    ctx.out() << emit(with_maps(p, maps));
  } else {
    ctx.out() << to_canonical_json(p);
  }
}

void cmd_shape(Context& ctx, const std::vector<std::string>& a, bool emit_maps) {
  if (a.empty()) throw UsageError("shape needs a family");
  const std::string& family = a[0];
  if (family == "globe" || family == "simplex" || family == "cube") {
    expect_args(a, 2, "shape " + family + " N");
    const int n = to_int(a[1], "N");
    if (n < 0) throw UsageError("N must be non-negative");
    const OgPoset p = family == "globe"     ? globe(n)
                      : family == "simplex" ? simplex(n)
                                            : cube(n);
    print_shape(ctx, p, {}, emit_maps);
  } else if (family == "phi") {
    expect_args(a, 2, "shape phi N   (N >= 2, builds Phi^N)");
    const Phi f = phi(to_int(a[1], "N") - 1);
    print_shape(ctx, f.poset,
                {{"input", f.input_incl},
                 {"output_first", f.first_incl},
                 {"output_second", f.second_incl}},
                emit_maps);
  } else if (family == "C") {
    expect_args(a, 3, "shape C N K");
    const Compositor c = compositor(to_int(a[1], "N"), to_int(a[2], "K"));
    print_shape(ctx, c.poset, {{"incl", c.incl}, {"retraction", c.retraction}},
                emit_maps);
  } else if (family == "E") {
    expect_args(a, 3, "shape E K N");
    const Extrusion e = extrusion(to_int(a[1], "K"), to_int(a[2], "N"));
    print_shape(ctx, e.poset, {{"j", e.j}, {"r", e.r}}, emit_maps);
  } else if (family == "Etilde") {
    expect_args(a, 3, "shape Etilde K N");
    const TildeExtrusion e = tilde_extrusion(to_int(a[1], "K"), to_int(a[2], "N"));
    print_shape(ctx, e.poset,
                {{"globe_incl", e.globe_incl}, {"retraction", e.retraction}},
                emit_maps);
  } else {
    throw UsageError("unknown shape family '" + family + "'");
  }
}

void cmd_map(Context& ctx, const std::vector<std::string>& a) {
  if (a.size() != 2) throw UsageError("usage: map a|c|gamma|sprec N");
  const std::string& which = a[0];
  const int n = to_int(a[1], "N");
  if (which == "a") {
    if (n < 0) throw UsageError("N must be non-negative");
    ctx.out() << emit(map_to_json(folding_a(n)));
  } else if (which == "c") {
    if (n < 2) throw UsageError("c needs N >= 2");
    ctx.out() << emit(map_to_json(folding_c(n - 1)));
  } else if (which == "gamma") {
    if (n < 0) throw UsageError("N must be non-negative");
    const std::vector<int> g = last_vertex(n);
    ctx.out() << emit({{"assignment", g},
                       {"source", g.size()},
                       {"target", n + 1}});
  } else if (which == "sprec") {
    if (n < 1) throw UsageError("sprec needs N >= 1");
    ctx.out() << emit(map_to_json(fatten(simplex_degeneracy(n - 1, 0)).map));
  } else {
    throw UsageError("unknown map '" + which + "'");
  }
}

json cert_to_json(const MoleculeCert& c) {
  std::vector<int> members;
  for (int x = 0; x < static_cast<int>(c.subset.parent().size()); ++x) {
    if (c.subset.contains(x)) members.push_back(x);
  }
  if (c.is_atom()) return {{"atom", c.top}, {"subset", members}};
  return {{"k", c.k},
          {"subset", members},
          {"left", cert_to_json(*c.left)},
          {"right", cert_to_json(*c.right)}};
}

void cmd_check(Context& ctx, const std::vector<std::string>& a,
               const std::vector<int>& subset, bool as_json) {
  if (a.size() != 2) {
    throw UsageError(
        "usage: check molecule|atom|spherical|regular|loopfree|cw FILE");
  }
  const std::string& what = a[0];
  const OgPoset p = ctx.load(a[1]);
  const ClosedSubset u = select(p, subset, false);
  bool ok = false;
  std::string detail;
  json certificate;
  if (what == "molecule") {
    const CertPtr cert = is_molecule(u);
    ok = cert != nullptr;
    if (cert) certificate = cert_to_json(*cert);
  } else if (what == "atom") {
    ok = is_atom(u);
  } else if (what == "spherical") {
    ok = is_molecule(u) != nullptr && has_spherical_boundary(u);
  } else if (what == "regular") {
    const auto bad = first_irregular_element(p);
    ok = !bad.has_value();
    if (bad) detail = "element " + std::to_string(*bad);
  } else if (what == "loopfree") {
    ok = is_totally_loop_free(u);
  } else if (what == "cw") {
    const CwReport r = cw_check(p);
    ok = r.ok;
    detail = r.message;
  } else {
    throw UsageError("unknown check '" + what + "'");
  }
  if (as_json) {
    json j = {{"check", what}, {"result", ok}};
    if (!detail.empty()) j["detail"] = detail;
    if (!certificate.is_null()) j["certificate"] = certificate;
    ctx.out() << emit(j);
  } else {
    ctx.out() << (ok ? "yes" : "no");
    if (!detail.empty() && !ok) ctx.out() << " (" << detail << ")";
    ctx.out() << "\n";
  }
  if (!ok) throw CheckFailed{};
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(to_int(item, "list entry"));
  }
  return out;
}

void cmd_op(Context& ctx, const std::vector<std::string>& a, int k,
            const std::string& dims, const std::vector<int>& subset,
            bool emit_maps) {
  if (a.empty()) throw UsageError("op needs an operation");
  const std::string& which = a[0];
  auto binary = [&](const std::string& usage) {
    expect_args(a, 3, "op " + which + " " + usage);
    return std::make_pair(ctx.load(a[1]), ctx.load(a[2]));
  };
  auto unary = [&](const std::string& usage) {
    expect_args(a, 2, "op " + which + " " + usage);
    return ctx.load(a[1]);
  };
  if (which == "paste") {
    auto [u, v] = binary("A B --k K");
    if (k < 0) throw UsageError("paste needs --k");
    const PastingResult r = paste(u, v, k);
    print_shape(ctx, r.whole, {{"left", r.left_incl}, {"right", r.right_incl}},
                emit_maps);
  } else if (which == "gray") {
    auto [u, v] = binary("A B");
    print_shape(ctx, gray(u, v), {}, emit_maps);
  } else if (which == "join") {
    auto [u, v] = binary("A B");
    print_shape(ctx, join(u, v), {}, emit_maps);
  } else if (which == "suspend") {
    print_shape(ctx, suspend(unary("A")), {}, emit_maps);
  } else if (which == "dual") {
    const OgPoset u = unary("A --dims 1,3|odd|even|all");
    Duality d = Duality::all();
    if (dims == "odd") {
      d = Duality::odd();
    } else if (dims == "even") {
      d = Duality::even();
    } else if (dims != "all") {
      const auto list = parse_list(dims);
      d = Duality::of(std::set<int>(list.begin(), list.end()));
    }
    print_shape(ctx, dual(u, d), {}, emit_maps);
  } else if (which == "inflate") {
    const Inflation inf = inflate(unary("A"));
    print_shape(ctx, inf.poset(),
                {{"collapse", inf.collapse},
                 {"input", inf.input_incl},
                 {"output", inf.output_incl}},
                emit_maps);
  } else if (which == "celto") {
    auto [u, v] = binary("A B");
    const CeltoResult r = celto(u, v);
    print_shape(ctx, r.atom,
                {{"input", r.input_incl}, {"output", r.output_incl}}, emit_maps);
  } else if (which == "compos") {
    const CeltoResult r = compos(unary("A"));
    print_shape(ctx, r.atom,
                {{"input", r.input_incl}, {"output", r.output_incl}}, emit_maps);
  } else if (which == "subst") {
    auto [u, w] = binary("U W --subset i,j,...");
    if (subset.empty()) throw UsageError("subst needs --subset for V");
    const SubstitutionResult r = substitute(u, closure(u, subset), w);
    print_shape(ctx, r.whole, {{"w", r.w_incl}}, emit_maps);
  } else {
    throw UsageError("unknown operation '" + which + "'");
  }
}

void cmd_topo(Context& ctx, const std::vector<std::string>& a,
              const std::vector<int>& subset, bool use_boundary, bool reduced) {
  if (a.size() != 2) throw UsageError("usage: topo nerve|homology|euler|cwcheck FILE");
  const std::string& which = a[0];
  const OgPoset p = ctx.load(a[1]);
  if (which == "cwcheck") {
    const CwReport r = cw_check(p);
    ctx.out() << emit({{"atoms_checked", r.atoms_checked},
                       {"failing_element", r.failing_element},
                       {"message", r.message},
                       {"ok", r.ok}});
    if (!r.ok) throw CheckFailed{};
    return;
  }
  const SimplicialComplex k = nerve(select(p, subset, use_boundary));
  if (which == "nerve") {
    json counts = json::array();
    for (int d = 0; d <= k.dim(); ++d) counts.push_back(k.count(d));
    ctx.out() << emit({{"counts", counts}, {"simplices", k.simplices}});
  } else if (which == "homology") {
    ctx.out() << emit(homology_json(homology(k, reduced)));
  } else if (which == "euler") {
    ctx.out() << euler(k) << "\n";
  } else {
    throw UsageError("unknown topology verb '" + which + "'");
  }
}

void cmd_corpus(Context& ctx, std::uint64_t seed, int max_dim,
                std::size_t max_elements, bool names_only) {
  CorpusBudget budget;
  budget.max_dim = max_dim;
  budget.max_elements = max_elements;
  const auto corpus = gen_corpus(seed, budget);
  json members = json::array();
  for (const CorpusEntry& e : corpus) {
    if (names_only) {
      members.push_back(e.name);
    } else {
      members.push_back({{"name", e.name}, {"poset", poset_to_json(e.poset)}});
    }
  }
  ctx.out() << emit({{"members", members}, {"seed", seed}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular directed complexes: shapes, operations and checks",
               "rdc"};
  app.require_subcommand(1);
  bool as_json = false;
  bool emit_maps = false;
  bool use_boundary = false;
  bool reduced = false;
  bool names_only = false;
  std::uint64_t seed = 0;
  int max_dim = 4;
  std::size_t max_elements = 200;
  int k = -1;
  std::string subset_text;
  std::string dims = "all";
  std::vector<std::string> params;

  auto positional = [&](CLI::App* sub, const std::string& help) {
    sub->add_option("args", params, help)->required();
  };
  CLI::App* shape = app.add_subcommand("shape", "Build a named shape");
  positional(shape, "globe N | simplex N | cube N | phi N | C N K | E K N | Etilde K N");
  shape->add_flag("--emit-maps", emit_maps, "Also write the structural maps");
  CLI::App* map = app.add_subcommand("map", "Build a named map");
  positional(map, "a N | c N | gamma N | sprec N");
  CLI::App* check = app.add_subcommand("check", "Test a predicate (exit 1 if false)");
  positional(check, "molecule|atom|spherical|regular|loopfree|cw FILE");
  check->add_option("--subset", subset_text, "Closure of these elements");
  check->add_flag("--json", as_json, "Machine-readable output");
  CLI::App* op = app.add_subcommand("op", "Apply an operation to complexes");
  positional(op, "paste|gray|join|suspend|dual|inflate|celto|compos|subst FILE...");
  op->add_option("--k", k, "Pasting dimension");
  op->add_option("--dims", dims, "Dual dimensions: list, odd, even or all");
  op->add_option("--subset", subset_text, "Submolecule for subst");
  op->add_flag("--emit-maps", emit_maps, "Also write the structural maps");
  CLI::App* topo = app.add_subcommand("topo", "Nerves and homology");
  positional(topo, "nerve|homology|euler|cwcheck FILE");
  topo->add_option("--subset", subset_text, "Closure of these elements");
  topo->add_flag("--boundary", use_boundary, "Use the boundary of the subset");
  topo->add_flag("--reduced", reduced, "Reduced homology");
  CLI::App* dot = app.add_subcommand("dot", "Hasse diagram in DOT format");
  positional(dot, "FILE");
  CLI::App* corpus = app.add_subcommand("corpus", "Generate the test corpus");
  corpus->add_option("--seed", seed, "Random seed");
  corpus->add_option("--max-dim", max_dim, "Largest dimension");
  corpus->add_option("--max-elements", max_elements, "Largest size");
  corpus->add_flag("--names", names_only, "List names only");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "rdc: " << e.what() << "\n";
    return kUsage;
  }

  Context ctx(in, out);
  try {
    const std::vector<int> subset = parse_list(subset_text);
    if (shape->parsed()) {
      cmd_shape(ctx, params, emit_maps);
    } else if (map->parsed()) {
      cmd_map(ctx, params);
    } else if (check->parsed()) {
      cmd_check(ctx, params, subset, as_json);
    } else if (op->parsed()) {
      cmd_op(ctx, params, k, dims, subset, emit_maps);
    } else if (topo->parsed()) {
      cmd_topo(ctx, params, subset, use_boundary, reduced);
    } else if (dot->parsed()) {
      expect_args(params, 1, "dot FILE");
      out << export_dot(ctx.load(params[0]));
    } else if (corpus->parsed()) {
      cmd_corpus(ctx, seed, max_dim, max_elements, names_only);
    }
  } catch (const CheckFailed&) {
    return kCheckFailed;
  } catch (const UsageError& e) {
    err << "rdc: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "rdc: " << e.what() << "\n";
    return e.kind() == ErrorKind::kParse ? kUsage : kCheckFailed;
  }
  return kOk;
}

}  // namespace rdc::cli
