// gsg: gain signed graph matroid and arrangement toolkit.
//
// Machine-readable results go to stdout as JSON lines; human summaries go to
// stderr.  Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 enumeration budget exceeded.

#include <filesystem>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"

#include "gsg/arrangement.hpp"
#include "gsg/instance_io.hpp"
#include "gsg/linalg.hpp"
#include "gsg/verify.hpp"

namespace {

using gsg::EdgeSet;
using gsg::GainSignedGraph;
using gsg::Matroid;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitBudget = 3;

ordered_json set_to_json(const EdgeSet& s, int extra_id) {
  ordered_json arr = ordered_json::array();
  s.for_each([&](int id) {
    if (id == extra_id)
      arr.push_back("inf");
    else
      arr.push_back(id);
  });
  return arr;
}

EdgeSet parse_subset(const std::string& csv, const Matroid& m) {
  EdgeSet s(m.ground_size());
  if (csv.empty()) return s;
  size_t pos = 0;
  while (pos < csv.size()) {
    size_t next = csv.find(',', pos);
    if (next == std::string::npos) next = csv.size();
    std::string tok = csv.substr(pos, next - pos);
    if (tok == "inf") {
      if (!m.extended())
        throw gsg::ParseError("subset contains 'inf' but --extended not given");
      s.set(m.extra_id());
    } else {
      int id = std::stoi(tok);
      if (id < 0 || id >= m.gain_graph().edge_count())
        throw gsg::ParseError("subset edge id out of range: " + tok);
      s.set(id);
    }
    pos = next + 1;
  }
  return s;
}

struct CommonFlags {
  std::string subset;
  bool extended = false;
  int max_subsets = 16;
  int max_edges = 20;
};

void apply_budget(Matroid& m, const CommonFlags& f) {
  m.budget.max_enum_edges = f.max_subsets;
  m.budget.max_circuit_edges = f.max_edges;
}

int cmd_rank(const std::string& file, const CommonFlags& flags) {
  GainSignedGraph u = gsg::load_instance(file);
  Matroid m(u, flags.extended);
  apply_budget(m, flags);
  EdgeSet s = flags.subset.empty() ? m.ground() : parse_subset(flags.subset, m);
  ordered_json j;
  j["op"] = "rank";
  j["subset"] = set_to_json(s, m.extra_id());
  j["rank"] = m.rank(s);
  j["nullity"] = m.nullity(s);
  j["hyperbalanced"] = m.set_hyperbalanced(s);
  std::cout << j.dump() << "\n";
  std::cerr << "rank " << m.rank(s) << ", nullity " << m.nullity(s) << "\n";
  return kExitOk;
}

int cmd_independent(const std::string& file, const CommonFlags& flags) {
  GainSignedGraph u = gsg::load_instance(file);
  Matroid m(u, flags.extended);
  apply_budget(m, flags);
  EdgeSet s = flags.subset.empty() ? m.ground() : parse_subset(flags.subset, m);
  auto cert = m.independence(s);
  ordered_json j;
  j["op"] = "independent";
  j["subset"] = set_to_json(s, m.extra_id());
  j["independent"] = cert.independent;
  switch (cert.special) {
    case gsg::IndependenceCertificate::SpecialKind::None:
      break;
    case gsg::IndependenceCertificate::SpecialKind::NonNeutralLoose:
      j["special"] = "non-neutral-loose";
      break;
    case gsg::IndependenceCertificate::SpecialKind::ExtraPoint:
      j["special"] = "extra-point";
      break;
    case gsg::IndependenceCertificate::SpecialKind::BalancedUnicycle:
      j["special"] = "balanced-unicycle";
      break;
    case gsg::IndependenceCertificate::SpecialKind::UnbalancedCore:
      j["special"] = "unbalanced-core";
      break;
  }
  std::cout << j.dump() << "\n";
  std::cerr << (cert.independent ? "independent" : "dependent") << "\n";
  return kExitOk;
}

int cmd_closure(const std::string& file, const CommonFlags& flags) {
  GainSignedGraph u = gsg::load_instance(file);
  Matroid m(u, flags.extended);
  apply_budget(m, flags);
  EdgeSet s = parse_subset(flags.subset, m);
  EdgeSet cl = m.closure(s);
  ordered_json j;
  j["op"] = "closure";
  j["subset"] = set_to_json(s, m.extra_id());
  j["closure"] = set_to_json(cl, m.extra_id());
  std::cout << j.dump() << "\n";
  std::cerr << "closure has " << cl.count() << " elements\n";
  return kExitOk;
}

int cmd_circuits(const std::string& file, const CommonFlags& flags) {
  GainSignedGraph u = gsg::load_instance(file);
  Matroid m(u, flags.extended);
  apply_budget(m, flags);
  auto circuits = m.circuits();
  for (const auto& c : circuits) {
    ordered_json j;
    j["op"] = "circuit";
    j["edges"] = set_to_json(c.edges, m.extra_id());
    j["class"] = gsg::to_string(c.cls);
    std::cout << j.dump() << "\n";
  }
  std::cerr << circuits.size() << " circuits\n";
  return kExitOk;
}

int cmd_bases(const std::string& file, const CommonFlags& flags) {
  GainSignedGraph u = gsg::load_instance(file);
  Matroid m(u, flags.extended);
  apply_budget(m, flags);
  auto bases = m.bases();
  for (const auto& b : bases) {
    ordered_json j;
    j["op"] = "basis";
    j["edges"] = set_to_json(b, m.extra_id());
    std::cout << j.dump() << "\n";
  }
  std::cerr << bases.size() << " bases\n";
  return kExitOk;
}

int cmd_cocircuits(const std::string& file, const CommonFlags& flags) {
  GainSignedGraph u = gsg::load_instance(file);
  Matroid m(u, flags.extended);
  apply_budget(m, flags);
  auto cocircuits = m.cocircuits();
  for (const auto& d : cocircuits) {
    ordered_json j;
    j["op"] = "cocircuit";
    j["edges"] = set_to_json(d, m.extra_id());
    std::cout << j.dump() << "\n";
  }
  std::cerr << cocircuits.size() << " cocircuits\n";
  return kExitOk;
}

int cmd_flats(const std::string& file, const CommonFlags& flags, bool balanced_only) {
  GainSignedGraph u = gsg::load_instance(file);
  Matroid m(u, flags.extended);
  apply_budget(m, flags);
  auto flats = m.flats(balanced_only);
  for (const auto& f : flats) {
    ordered_json j;
    j["op"] = "flat";
    j["edges"] = set_to_json(f.edges, m.extra_id());
    j["rank"] = f.rank;
    j["hyperbalanced"] = f.desc.hyperbalanced;
    std::cout << j.dump() << "\n";
  }
  std::cerr << flats.size() << " flats\n";
  return kExitOk;
}

int cmd_minor(const std::string& file, const std::string& delete_csv,
              const std::string& contract_csv, bool contract_extra) {
  GainSignedGraph u = gsg::load_instance(file);
  Matroid plain(u, false);
  EdgeSet to_delete = parse_subset(delete_csv, plain);
  EdgeSet to_contract = parse_subset(contract_csv, plain);
  if (to_delete.intersects(to_contract))
    throw gsg::ParseError("--delete and --contract must be disjoint");
  gsg::MinorResult con = gsg::contract(u, to_contract, contract_extra);
  // deletion after contraction, through the contraction's edge map
  EdgeSet mapped(con.minor.edge_count());
  to_delete.for_each([&](int id) {
    if (con.edge_map[id] >= 0) mapped.set(con.edge_map[id]);
  });
  GainSignedGraph result = gsg::delete_edges(con.minor, mapped);
  std::optional<std::string> note;
  if (con.gains_erased) note = "gains erased by hyperfrustrated contraction";
  std::cout << gsg::serialize_instance(result, note);
  std::cerr << "minor: " << result.vertex_count() << " vertices, "
            << result.edge_count() << " edges"
            << (con.gains_erased ? " (gains erased)" : "") << "\n";
  return kExitOk;
}

int cmd_arrangement(const std::string& file, const std::string& family,
                    int n, int k, int l, const std::string& signs,
                    bool emit_instance, const CommonFlags& flags) {
  GainSignedGraph u = [&]() {
    if (!family.empty()) {
      auto fam = gsg::family_from_name(family);
      if (!fam) throw gsg::ParseError("unknown family: " + family);
      gsg::FamilySpec spec;
      spec.family = *fam;
      spec.n = n;
      spec.gain_min = -k;
      spec.gain_max = l;
      spec.signs = signs;
      return gsg::generate_family(spec);
    }
    if (file.empty()) throw gsg::ParseError("arrangement needs a file or --family");
    return gsg::load_instance(file);
  }();
  if (emit_instance) {
    std::cout << gsg::serialize_instance(u);
    return kExitOk;
  }
  gsg::EnumerationBudget budget;
  budget.max_enum_edges = flags.max_subsets;
  auto hps = gsg::build_arrangement(u);
  for (const auto& h : hps) {
    ordered_json j;
    j["op"] = "hyperplane";
    j["edge"] = h.edge;
    j["equation"] = gsg::format_hyperplane(h);
    std::cout << j.dump() << "\n";
  }
  auto polys = gsg::chromatic_polynomials(u, budget);
  ordered_json j;
  j["op"] = "polynomials";
  j["chi"] = polys.chi.to_string();
  j["chi_balanced"] = polys.chi_balanced.to_string();
  j["chi_infinity"] = polys.chi_infinity.to_string();
  std::cout << j.dump() << "\n";
  bool degenerate = false;
  for (const auto& h : hps)
    if (h.kind == gsg::Hyperplane::Kind::Degenerate) degenerate = true;
  if (!degenerate && u.group().embeds_in_rationals()) {
    auto rc = gsg::count_regions(u, budget);
    ordered_json r;
    r["op"] = "regions";
    r["regions"] = rc.regions;
    r["bounded"] = rc.bounded;
    r["regions_infinity"] = rc.regions_infinity;
    std::cout << r.dump() << "\n";
    std::cerr << "regions " << rc.regions << ", bounded " << rc.bounded << "\n";
  } else {
    std::cerr << "degenerate arrangement; region counts skipped\n";
  }
  return kExitOk;
}

int cmd_verify(const std::string& corpus_dir, std::uint64_t seed, int count) {
  std::vector<std::pair<std::string, gsg::ParsedInstance>> instances;
  if (!corpus_dir.empty()) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
      if (entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw gsg::ParseError("no .json instances in " + corpus_dir);
    for (const auto& p : files)
      instances.emplace_back(p.filename().string(), gsg::load_instance_lenient(p.string()));
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) {
      auto u = gsg::random_instance(rng, 4, 6, gsg::Group::integers(), -2, 2);
      gsg::ParsedInstance pi = gsg::parse_instance_lenient(gsg::serialize_instance(u));
      instances.emplace_back("random-" + std::to_string(i), std::move(pi));
    }
  }

  bool all_pass = true;
  for (const auto& [name, parsed] : instances) {
    if (!parsed.valid()) {
      all_pass = false;
      ordered_json j;
      j["op"] = "verify";
      j["instance"] = name;
      j["check"] = "instance-validity";
      j["pass"] = false;
      j["witness"] = parsed.issues.front();
      std::cout << j.dump() << "\n";
      std::cerr << name << ": INVALID (" << parsed.issues.front() << ")\n";
      continue;
    }
    GainSignedGraph u = parsed.build();
    gsg::VerifyOptions opts;
    opts.seed = seed;
    for (const auto& check : gsg::run_verification(u, opts)) {
      ordered_json j;
      j["op"] = "verify";
      j["instance"] = name;
      j["check"] = check.name;
      j["pass"] = check.pass;
      j["checked"] = check.checked;
      if (!check.detail.empty()) j["detail"] = check.detail;
      std::cout << j.dump() << "\n";
      if (!check.pass) {
        all_pass = false;
        std::cerr << name << ": FAIL " << check.name << " (" << check.detail << ")\n";
      }
    }
    std::cerr << name << ": checked\n";
  }
  std::cerr << (all_pass ? "all checks passed" : "verification FAILED") << "\n";
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_polytope(const std::string& file, const std::string& points) {
  gsg::PolytopeQuery q;
  GainSignedGraph u = gsg::load_instance(file);
  if (points == "edge") {
    q.family = gsg::PointFamily::EdgePoints;
    q.graph = u.graph();
  } else if (points == "bidirected") {
    q.family = gsg::PointFamily::BidirectedEdgePoints;
    q.bidirected = u.signed_graph();
    q.orientation = u.orientation();
  } else if (points == "arc") {
    q.family = gsg::PointFamily::ArcPoints;
    q.graph = u.graph();
  } else if (points == "double-arc") {
    q.family = gsg::PointFamily::DoubleArcPoints;
    q.graph = u.graph();
  } else {
    throw gsg::ParseError("unknown point family: " + points);
  }
  int dim = gsg::polytope_dimension(q);
  ordered_json j;
  j["op"] = "polytope";
  j["points"] = points;
  j["dimension"] = dim;
  std::cout << j.dump() << "\n";
  std::cerr << points << " dimension " << dim << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gain signed graph matroids, arrangements, and polytopes"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string file, delete_csv, contract_csv, family, corpus_dir, points = "edge";
  std::string signs = "+";
  int n = 2, k = 0, l = 0, random_count = 25;
  std::uint64_t seed = 1;
  bool contract_extra = false, balanced_only = false, emit_instance = false;

  auto add_common = [&](CLI::App* cmd, bool with_subset = true) {
    cmd->add_option("file", file, "instance file")->required();
    if (with_subset) cmd->add_option("--subset", flags.subset, "edge ids, e.g. 0,2,5 or inf");
    cmd->add_flag("--extended", flags.extended, "include the extra point e_infinity");
    cmd->add_option("--max-subsets", flags.max_subsets,
                    "edge cap for subset enumerations (default 16)");
    cmd->add_option("--max-edges", flags.max_edges,
                    "edge cap for circuit search (default 20)");
  };

  add_common(app.add_subcommand("rank", "matroid rank of a subset"));
  add_common(app.add_subcommand("independent", "independence with certificate"));
  add_common(app.add_subcommand("closure", "closure of a subset"));
  add_common(app.add_subcommand("circuits", "all hypercircuits with classes"));
  add_common(app.add_subcommand("bases", "all bases"));
  add_common(app.add_subcommand("cocircuits", "all cocircuits"));
  auto* flats_cmd = app.add_subcommand("flats", "all flats");
  add_common(flats_cmd);
  flats_cmd->add_flag("--balanced-only", balanced_only, "hyperbalanced flats only");

  auto* minor = app.add_subcommand("minor", "delete/contract, emits an instance");
  minor->add_option("file", file, "instance file")->required();
  minor->add_option("--delete", delete_csv, "edge ids to delete");
  minor->add_option("--contract", contract_csv, "edge ids to contract");
  minor->add_flag("--contract-extra", contract_extra, "contract e_infinity");

  auto* arr = app.add_subcommand("arrangement", "hyperplanes, polynomials, regions");
  arr->add_option("file", file, "instance file");
  arr->add_option("--family", family,
                  "shi|catalan|linial|sign-symmetric-shi|shi-threshold|"
                  "linial-threshold|catalan-threshold|generalized-threshold|"
                  "custom-deformation");
  arr->add_option("--n", n, "number of coordinates");
  arr->add_option("--k", k, "gain window lower bound is -k");
  arr->add_option("--l", l, "gain window upper bound");
  arr->add_option("--signs", signs, "custom-deformation pattern: +, -, o");
  arr->add_flag("--emit-instance", emit_instance, "print the instance file instead");
  arr->add_option("--max-subsets", flags.max_subsets, "edge cap for polynomials");

  auto* ver = app.add_subcommand("verify", "run the oracle battery");
  ver->add_option("--corpus", corpus_dir, "directory of instance files");
  std::vector<std::uint64_t> random_args;
  ver->add_option("--random", random_args, "seed and instance count")
      ->expected(2);

  auto* poly = app.add_subcommand("polytope", "affine dimension of point families");
  poly->add_option("file", file, "graph/digraph/bidirected instance file")->required();
  poly->add_option("--points", points, "edge|bidirected|arc|double-arc");

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("rank")) return cmd_rank(file, flags);
    if (app.got_subcommand("independent")) return cmd_independent(file, flags);
    if (app.got_subcommand("closure")) return cmd_closure(file, flags);
    if (app.got_subcommand("circuits")) return cmd_circuits(file, flags);
    if (app.got_subcommand("bases")) return cmd_bases(file, flags);
    if (app.got_subcommand("cocircuits")) return cmd_cocircuits(file, flags);
    if (app.got_subcommand("flats")) return cmd_flats(file, flags, balanced_only);
    if (app.got_subcommand("minor"))
      return cmd_minor(file, delete_csv, contract_csv, contract_extra);
    if (app.got_subcommand("arrangement"))
      return cmd_arrangement(file, family, n, k, l, signs, emit_instance, flags);
    if (app.got_subcommand("verify")) {
      if (random_args.size() == 2) {
        seed = random_args[0];
        random_count = static_cast<int>(random_args[1]);
      } else if (corpus_dir.empty()) {
        throw gsg::ParseError("verify needs --corpus DIR or --random SEED COUNT");
      }
      return cmd_verify(corpus_dir, seed, random_count);
    }
    if (app.got_subcommand("polytope")) return cmd_polytope(file, points);
  } catch (const gsg::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << " (limit " << e.limit << ")\n";
    return kExitBudget;
  } catch (const gsg::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const gsg::ContractionObstruction& e) {
    std::cerr << "contraction refused: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitOk;
}
