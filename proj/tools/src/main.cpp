#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "qdm/error.hpp"
#include "qdm/io.hpp"
#include "qdm/parallel.hpp"
#include "qdm/qg.hpp"
#include "qdm/tools/reproductions.hpp"
#include "qdm/tools/search.hpp"

namespace {

using namespace qdm;

// Exit statuses.
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;
constexpr int kDiscovery = 3;
constexpr int kInternal = 70;

struct Globals {
  unsigned threads = 0;
  std::string form_path;
};

struct Loaded {
  AmbientPtr ambient;
  Family family;
};

AmbientPtr make_ambient(std::uint32_t q, int n, const Globals& g) {
  LatticePtr lattice = Lattice::build(Field::of_order(q), n);
  if (g.form_path.empty()) return Ambient::make(lattice);
  return Ambient::make(lattice, read_gram_file(g.form_path));
}

Loaded load_family(const std::string& path, const Globals& g, const AmbientPtr& reuse = nullptr) {
  FamilyFile file = read_family_file(path);
  AmbientPtr amb = reuse;
  if (amb && (amb->lattice().q() != file.q || amb->n() != file.n)) {
    fail(Errc::kParseError, path + ": expected q = " + std::to_string(amb->lattice().q()) +
                                " and n = " + std::to_string(amb->n()));
  }
  if (!amb) amb = make_ambient(file.q, file.n, g);
  Family f = to_family(file, amb->lattice_ptr());
  return {amb, std::move(f)};
}

QMatroid load_qmatroid(const std::string& path, const Globals& g, const AmbientPtr& reuse = nullptr) {
  Loaded in = load_family(path, g, reuse);
  return QMatroid::from_bases(in.ambient, in.family, g.threads);
}

// A failing witness printed as a family file, so it can be fed back in.
void print_witness(std::ostream& out, const Lattice& lat,
                   const std::vector<std::pair<std::string, SubspaceId>>& witness) {
  out << "# witness\n" << lat.q() << ' ' << lat.n() << '\n';
  std::map<SubspaceId, std::string> seen;
  for (const auto& [role, id] : witness) {
    if (auto it = seen.find(id); it != seen.end()) {
      out << "# " << role << " = " << it->second << '\n';
      continue;
    }
    seen.emplace(id, role);
    out << lat.render(id) << "  # " << role << '\n';
  }
}

int report(const AxiomReport& r, const Lattice& lat, const std::string& label) {
  if (r) {
    std::cout << label << ": pass\n";
    return kPass;
  }
  std::cout << label << ": fail " << r.axiom;
  if (!r.detail.empty()) std::cout << " (" << r.detail << ')';
  std::cout << '\n';
  print_witness(std::cout, lat, r.witness);
  return kFail;
}

int report(const MapReport& r, const Lattice& lat) {
  std::cout << r.criterion << ": " << (r.verdict ? "holds" : "fails");
  if (!r.detail.empty()) std::cout << " (" << r.detail << ')';
  std::cout << '\n';
  if (r.verdict) return kPass;
  print_witness(std::cout, lat, r.witness);
  return kFail;
}

void print_family(const Family& f, const std::string& comment = {}) {
  if (!comment.empty()) std::cout << "# " << comment << '\n';
  write_family(std::cout, f);
}

int cmd_enumerate(std::uint32_t q, int n, std::optional<int> k, bool count) {
  const FieldPtr field = Field::of_order(q);
  if (n < 0) fail(Errc::kInvalidDimension, "n must be non-negative");
  if (k && (*k < 0 || *k > n)) {
    fail(Errc::kInvalidDimension, "k = " + std::to_string(*k) + " is outside 0.." + std::to_string(n));
  }
  if (count) {
    if (k) {
      std::cout << gaussian_binomial(n, *k, q) << '\n';
    } else {
      for (int d = 0; d <= n; ++d) std::cout << (d ? " " : "") << gaussian_binomial(n, d, q);
      std::cout << '\n';
    }
    return kPass;
  }
  const LatticePtr lat = Lattice::build(field, n);
  for (int d = k.value_or(0); d <= k.value_or(n); ++d) {
    for (SubspaceId id : lat->of_dim(d)) std::cout << lat->render(id) << '\n';
  }
  return kPass;
}

int cmd_verify(const std::string& path, const std::string& axioms, const Globals& g) {
  const Loaded in = load_family(path, g);
  const Lattice& lat = in.ambient->lattice();
  if (axioms == "f1f2") return report(check_f1f2(in.family, g.threads), lat, "(F1)(F2)");
  if (axioms == "f3f4") return report(check_f3f4(in.family, g.threads), lat, "(F3)(F4)");
  if (axioms == "saturated") return report(is_saturated(in.family), lat, "saturation");
  BasisOutcome outcome = try_from_bases(in.ambient, in.family, g.threads);
  return report(outcome.report, lat, "q-matroid bases");
}

int cmd_qmatroid(const std::string& action, const std::string& path, const std::string& which, const Globals& g) {
  const Loaded in = load_family(path, g);
  const Lattice& lat = in.ambient->lattice();
  BasisOutcome outcome = try_from_bases(in.ambient, in.family, g.threads);
  if (!outcome.matroid) return report(outcome.report, lat, "q-matroid bases");
  const QMatroid& m = *outcome.matroid;
  if (action == "validate") {
    std::cout << "valid q-matroid of rank " << m.full_rank() << " on F_" << lat.q() << '^' << lat.n() << '\n';
    return report(check_cryptomorphisms(derived(m)), lat, "derived axiom systems");
  }
  if (action == "dump") {
    write_rank_table(std::cout, m);
    return kPass;
  }
  if (action == "dual") {
    print_family(derived(dual(m)).bases, "bases of the dual");
    return kPass;
  }
  const DerivedFamilies d = derived(m);
  const std::vector<std::pair<std::string, const Family*>> all{
      {"independents", &d.independents}, {"bases", &d.bases},   {"spanning", &d.spanning},
      {"circuits", &d.circuits},         {"flats", &d.flats},   {"hyperplanes", &d.hyperplanes},
      {"loops", &d.loops},               {"coloops", &d.coloops}};
  bool shown = false;
  for (const auto& [name, f] : all) {
    if (which != "all" && which != name) continue;
    print_family(*f, name + " (" + std::to_string(f->size()) + ")");
    shown = true;
  }
  if (!shown) fail(Errc::kParseError, "unknown derived family '" + which + "'");
  return kPass;
}

int cmd_strongmap(const std::string& p1, const std::string& p2, const std::string& criterion, const Globals& g) {
  const QMatroid m1 = load_qmatroid(p1, g);
  const QMatroid m2 = load_qmatroid(p2, g, m1.ambient_ptr());
  const Lattice& lat = m1.lattice();
  std::vector<MapReport> reports;
  if (criterion == "rankdiff" || criterion == "all") reports.push_back(is_strong_rankdiff(m1, m2, g.threads));
  if (criterion == "flats" || criterion == "all") reports.push_back(is_strong_flats(m1, m2));
  if (criterion == "circuits" || criterion == "all") reports.push_back(is_strong_circuits(m1, m2));
  if (criterion == "weak") reports.push_back(is_weak(m1, m2));
  if (criterion == "sandwich") reports.push_back(basis_sandwich(m1, m2));
  int status = kPass;
  for (const MapReport& r : reports) status = std::max(status, report(r, lat));
  if (criterion == "all") {
    const bool agree = reports[0].verdict == reports[1].verdict && reports[1].verdict == reports[2].verdict;
    if (!agree) fail(Errc::kInternalInconsistency, "the three strong-map criteria disagree");
  }
  return status;
}

int cmd_qg(const std::string& upper_path, const std::string& lower_path, const std::string& mode, const Globals& g) {
  const QMatroid upper = load_qmatroid(upper_path, g);
  const QMatroid lower = load_qmatroid(lower_path, g, upper.ambient_ptr());
  const Lattice& lat = upper.lattice();
  const Certificate cert = mode == "strong" ? Certificate::kStrong : Certificate::kWeak;
  const MapReport check = cert == Certificate::kStrong ? is_strong_rankdiff(upper, lower, g.threads) : basis_sandwich(upper, lower);
  if (!check) return report(check, lat);
  const QGPair pair = QGPair::make(upper, lower, cert, g.threads);
  if (cert == Certificate::kStrong) {
    print_family(qg_family(pair, g.threads).feasible(), "q-g family (strong pair)");
  } else {
    print_family(weak_qg_family(pair), "weak q-g family (basis sandwich)");
  }
  return kPass;
}

int cmd_qdelta(const std::string& action, const std::string& path, const std::string& x_text,
               const std::string& y_text, const Globals& g) {
  const Loaded in = load_family(path, g);
  const Lattice& lat = in.ambient->lattice();
  const QDeltaMatroid delta = QDeltaMatroid::unchecked(in.ambient, in.family);
  if (action == "dual") {
    print_family(dual(delta).feasible(), "dual feasible family");
    return kPass;
  }
  const AxiomReport axioms = check_f1f2(in.family, g.threads);
  if (!axioms) return report(axioms, lat, "(F1)(F2)");
  if (action == "upper-lower") {
    const UpperLower ul = upper_lower(delta, g.threads);
    print_family(derived(ul.upper).bases, "upper bases, rank " + std::to_string(ul.upper.full_rank()));
    print_family(derived(ul.lower).bases, "lower bases, rank " + std::to_string(ul.lower.full_rank()));
    return kPass;
  }
  if (action == "rank") {
    for (SubspaceId a : lat.all()) std::cout << a << ' ' << lat.dim(a) << ' ' << rank_delta(delta, a) << ' ' << lat.render(a) << '\n';
    return kPass;
  }
  auto parse_subspace = [&](const std::string& text) {
    std::istringstream file(std::to_string(lat.q()) + " " + std::to_string(lat.n()) + "\n" + text + "\n");
    return lat.id_of(parse_family(file, "<argument>").members.at(0));
  };
  if (!x_text.empty()) {
    const SubspaceId x = parse_subspace(x_text);
    const SubspaceId y = y_text.empty() ? in.ambient->perp(x) : parse_subspace(y_text);
    std::cout << birank(delta, x, y) << '\n';
    return kPass;
  }
  for (SubspaceId x : lat.all()) {
    std::cout << x << ' ' << birank(delta, x, in.ambient->perp(x)) << ' ' << lat.render(x) << '\n';
  }
  return kPass;
}

int cmd_codes(const std::string& action, const std::vector<std::string>& paths, const Globals& g) {
  const RankMetricCode c1 = read_code_file(paths.at(0));
  const AmbientPtr amb = make_ambient(c1.tower().base()->order(), c1.n(), g);
  if (action == "qmatroid") {
    write_rank_table(std::cout, code_qmatroid(c1, amb, g.threads));
    return kPass;
  }
  if (paths.size() != 2) fail(Errc::kParseError, "codes nested needs two code files");
  const RankMetricCode c2 = read_code_file(paths[1]);
  const QGPair pair = nested_pair(c1, c2, amb, g.threads);
  std::cout << "strong map certified: rank " << pair.upper().full_rank() << " -> " << pair.lower().full_rank() << '\n';
  print_family(qg_family(pair, g.threads).feasible(), "q-g family of the nested pair");
  return kPass;
}

int run_reproduction(const tools::Reproduction& r, unsigned threads) {
  std::cout << "[" << r.id << "] " << r.expectation << '\n';
  const bool ok = r.run(std::cout, threads);
  std::cout << "[" << r.id << "] " << (ok ? "reproduced" : "NOT reproduced") << "\n\n";
  return ok ? kPass : kFail;
}

int cmd_reproduce(const std::string& id, bool all, bool list, const Globals& g) {
  if (list) {
    for (const auto& r : tools::reproductions()) std::cout << r.id << "  " << r.expectation << '\n';
    return kPass;
  }
  if (all) {
    int status = kPass;
    for (const auto& r : tools::reproductions()) status = std::max(status, run_reproduction(r, g.threads));
    return status;
  }
  if (id.empty()) fail(Errc::kUnknownCase, "name a case, or pass --all or --list");
  return run_reproduction(tools::find_reproduction(id), g.threads);
}

int cmd_search(const std::string& target, std::uint64_t budget, std::uint64_t seed, int n, const std::string& witness,
               const Globals& g) {
  tools::SearchOptions opt;
  opt.target = tools::parse_search_target(target);
  opt.budget = budget;
  opt.seed = seed;
  opt.n = n;
  opt.threads = g.threads;
  const tools::SearchResult result = tools::run_search(opt);
  std::cout << "target " << tools::search_target_name(opt.target) << ", seed " << seed << ", budget " << budget
            << ", n " << n << '\n';
  std::cout << "iterations " << result.iterations << ", families tested " << result.tested << '\n';
  if (!result.counterexample) {
    std::cout << "no counterexample found\n";
    return kPass;
  }
  std::cout << "counterexample: " << result.detail << '\n';
  std::ofstream out(witness);
  if (!out) fail(Errc::kParseError, "cannot write '" + witness + "'");
  out << "# " << tools::search_target_name(opt.target) << " seed " << seed << ": " << result.detail << '\n';
  write_family(out, *result.counterexample);
  std::cout << "witness written to " << witness << '\n';
  return kDiscovery;
}

int exit_status(const Error& e) {
  switch (e.code()) {
    case Errc::kNotAQMatroid:
    case Errc::kNotAQDeltaMatroid:
    case Errc::kBasisMismatch:
    case Errc::kCertificateMissing:
    case Errc::kNotNested:
      return kFail;
    case Errc::kInternalInconsistency:
    case Errc::kValidationFailed:
      return kInternal;
    default:
      return kInputError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-matroid and q-Delta-matroid toolkit"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--threads", g.threads, "Worker threads for the quantifier loops (0 = all cores)");
  app.add_option("--form", g.form_path, "Gram matrix file for the ambient bilinear form");

  std::function<int()> action;

  auto* enumerate = app.add_subcommand("enumerate", "List subspaces of F_q^n, or count them");
  std::uint32_t q = 2;
  int n = 0;
  std::optional<int> k;
  bool count = false;
  enumerate->add_option("q", q)->required();
  enumerate->add_option("n", n)->required();
  enumerate->add_option("k", k, "Only this dimension");
  enumerate->add_flag("--count", count, "Print counts instead of subspaces");
  enumerate->callback([&] { action = [&] { return cmd_enumerate(q, n, k, count); }; });

  auto* verify = app.add_subcommand("verify", "Check a family file against an axiom system");
  std::string family_path, axioms = "f1f2";
  verify->add_option("file", family_path)->required();
  verify->add_option("--axioms", axioms)->check(CLI::IsMember({"f1f2", "f3f4", "saturated", "qmatroid"}));
  verify->callback([&] { action = [&] { return cmd_verify(family_path, axioms, g); }; });

  auto* qmat = app.add_subcommand("qmatroid", "Work with a q-matroid given by its bases");
  std::string qm_action, which = "all";
  qmat->add_option("action", qm_action)->required()->check(CLI::IsMember({"validate", "dump", "dual", "derived"}));
  qmat->add_option("file", family_path)->required();
  qmat->add_option("--which", which, "Derived family to print");
  qmat->callback([&] { action = [&] { return cmd_qmatroid(qm_action, family_path, which, g); }; });

  auto* strong = app.add_subcommand("strongmap", "Check the identity map between two q-matroids");
  std::string sm_action, first, second, criterion = "all";
  strong->add_option("action", sm_action)->required()->check(CLI::IsMember({"check"}));
  strong->add_option("from", first, "Bases of the domain")->required();
  strong->add_option("to", second, "Bases of the codomain")->required();
  strong->add_option("--criterion", criterion)
      ->check(CLI::IsMember({"rankdiff", "flats", "circuits", "all", "weak", "sandwich"}));
  strong->callback([&] { action = [&] { return cmd_strongmap(first, second, criterion, g); }; });

  auto* qg = app.add_subcommand("qg", "Build the family of a q-matroid pair");
  std::string qg_action, mode = "strong";
  qg->add_option("action", qg_action)->required()->check(CLI::IsMember({"build"}));
  qg->add_option("--upper", first, "Bases of the upper q-matroid")->required();
  qg->add_option("--lower", second, "Bases of the lower q-matroid")->required();
  qg->add_option("--mode", mode)->check(CLI::IsMember({"weak", "strong"}));
  qg->callback([&] { action = [&] { return cmd_qg(first, second, mode, g); }; });

  auto* qd = app.add_subcommand("qdelta", "Work with a feasible family");
  std::string qd_action, x_text, y_text;
  qd->add_option("action", qd_action)->required()->check(CLI::IsMember({"dual", "upper-lower", "rank", "birank"}));
  qd->add_option("file", family_path)->required();
  qd->add_option("--x", x_text, "birank: the space X, as vectors");
  qd->add_option("--y", y_text, "birank: the space Y (default: perp X)");
  qd->callback([&] { action = [&] { return cmd_qdelta(qd_action, family_path, x_text, y_text, g); }; });

  auto* codes = app.add_subcommand("codes", "q-matroids of rank-metric codes");
  std::string code_action;
  std::vector<std::string> code_paths;
  codes->add_option("action", code_action)->required()->check(CLI::IsMember({"qmatroid", "nested"}));
  codes->add_option("files", code_paths, "Code file(s); nested takes C1 then C2")->required();
  codes->callback([&] { action = [&] { return cmd_codes(code_action, code_paths, g); }; });

  auto* reproduce = app.add_subcommand("paper", "Run a reproduction with a fixed expected outcome");
  std::string case_id;
  bool all = false, list = false;
  reproduce->add_option("case", case_id);
  reproduce->add_flag("--all", all);
  reproduce->add_flag("--list", list);
  reproduce->callback([&] { action = [&] { return cmd_reproduce(case_id, all, list, g); }; });

  auto* search = app.add_subcommand("search", "Seeded random search for counterexamples");
  std::string target, witness = "qdm-witness.txt";
  std::uint64_t budget = 1000, seed = 1;
  int search_n = 4;
  search->add_option("--target", target)->required()->check(CLI::IsMember({"f3f4-vs-qg", "upper-lower-strong"}));
  search->add_option("--budget", budget);
  search->add_option("--seed", seed);
  search->add_option("--n", search_n, "Ambient dimension over F_2");
  search->add_option("--witness", witness, "Where to write a counterexample");
  search->callback([&] { action = [&] { return cmd_search(target, budget, seed, search_n, witness, g); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }
  try {
    set_default_threads(g.threads);
    return action();
  } catch (const Error& e) {
    std::cerr << "qdm: " << e.what() << '\n';
    return exit_status(e);
  } catch (const std::exception& e) {
    std::cerr << "qdm: " << e.what() << '\n';
    return kInputError;
  }
}
