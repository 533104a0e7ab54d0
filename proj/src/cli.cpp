#include "latrep/cli.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "latrep/birkhoff.hpp"
#include "latrep/corpus.hpp"
#include "latrep/io.hpp"
#include "latrep/operator_classes.hpp"
#include "latrep/quotient.hpp"

namespace latrep {

namespace {

struct RunConfig {
  int cap_size = kDefaultElementCap;
  int cap_family = kDefaultFamilyCap;
  std::uint64_t seed = 0;
  bool dot = false;
};

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string family_line(const UpSetFamily& fam) {
  std::string out;
  for (int i = 0; i < fam.size(); ++i) {
    if (i) out += ", ";
    out += fam.label(i);
  }
  return out;
}

void print_covers(std::ostream& out, const Poset& p) {
  bool any = false;
  for (int i = 0; i < p.size(); ++i) {
    for (int j : bits_of(p.covers_up(i))) {
      out << (any ? "; " : "") << p.name(i) << " < " << p.name(j);
      any = true;
    }
  }
  if (!any) out << "(antichain)";
}

int cmd_check(const RunConfig& cfg, const std::filesystem::path& file, std::ostream& out) {
  NamedLattice nl = read_lattice_file(file);
  const Lattice& l = nl.lattice;
  if (cfg.dot) {
    out << dot_poset(nl.name, l.order());
    return 0;
  }
  out << "lattice " << nl.name << ": " << l.size() << " elements, bottom " << l.name(l.bottom())
      << ", top " << l.name(l.top()) << "\n";
  out << "M(L): " << set_label(l.order(), meet_irreducibles(l)) << "\n";

  auto dist = distributivity(l);
  out << "distributive: " << yesno(dist.holds);
  if (!dist.holds) {
    out << " (witness " << l.name(dist.x) << ", " << l.name(dist.y) << ", " << l.name(dist.z)
        << ")";
  }
  out << "\n";

  auto decomp = meet_decomposition(l);
  out << "meet decomposition (DP): " << yesno(decomp.holds);
  if (!decomp.holds) out << " (witness " << l.name(decomp.witness) << ")";
  out << "\n";

  auto prime = meet_prime_condition(l);
  out << "meet-prime condition: " << yesno(prime.holds);
  if (!prime.holds) {
    out << " (witness q=" << l.name(prime.q) << ", C=" << set_label(l.order(), prime.family)
        << ")";
  }
  out << "\n";

  out << "atomic boolean: " << yesno(is_atomic_boolean(l)) << "\n";

  if (dist.holds && decomp.holds && prime.holds) {
    auto graded = graded_chains(l, cfg.cap_size);
    out << "graded chains: " << yesno(graded.holds) << " (every maximal chain has "
        << graded.expected << " elements)\n";
  } else {
    out << "graded chains: skipped (preconditions not met)\n";
  }

  auto verdict = upset_representation(l, cfg.cap_size);
  out << "representable as an up-set lattice: " << yesno(verdict.representable) << "\n";
  if (verdict.representable) {
    out << "  M-poset: ";
    print_covers(out, verdict.irreducibles);
    out << "\n";
    for (int p = 0; p < l.size(); ++p) {
      out << "  f: " << l.name(p) << " -> "
          << set_label(verdict.irreducibles, verdict.map[static_cast<std::size_t>(p)]) << "\n";
    }
  } else {
    out << "  reason: " << verdict.reason << "\n";
  }
  return 0;
}

int cmd_upsets(const RunConfig& cfg, const std::filesystem::path& file, std::ostream& out) {
  NamedPoset np = read_poset_file(file);
  if (cfg.dot) {
    // Drawing needs the whole lattice; bound the diagram by the family cap.
    auto sets = all_upsets(np.poset, cfg.cap_size);
    if (static_cast<int>(sets.size()) > cfg.cap_family) {
      throw cap_exceeded("the up-set lattice has " + std::to_string(sets.size()) +
                         " elements, above the family cap of " + std::to_string(cfg.cap_family) +
                         " for diagrams");
    }
    UpsetLattice f = upset_lattice(np.poset, cfg.cap_size);
    out << dot_poset("F_" + np.name, f.lattice.order());
    return 0;
  }
  for (Mask s : all_upsets(np.poset, cfg.cap_size)) out << set_label(np.poset, s) << "\n";
  return 0;
}

int cmd_birkhoff(const RunConfig& cfg, const std::filesystem::path& file, std::ostream& out) {
  NamedLattice nl = read_lattice_file(file);
  const Lattice& l = nl.lattice;
  auto verdict = upset_representation(l, cfg.cap_size);
  if (cfg.dot) {
    out << dot_poset("M_" + nl.name, verdict.irreducibles);
    return verdict.representable ? 0 : 3;
  }
  out << "lattice " << nl.name << ": " << l.size() << " elements\n";
  out << "M(L): " << set_label(l.order(), meet_irreducibles(l)) << "\n";
  UpsetLattice f = upset_lattice(verdict.irreducibles, cfg.cap_size);
  out << "F_{M(L)}: " << f.family.size() << " up-sets\n";
  if (verdict.representable) {
    out << "verdict: representable\n";
    for (int p = 0; p < l.size(); ++p) {
      out << "  f: " << l.name(p) << " -> "
          << set_label(verdict.irreducibles, verdict.map[static_cast<std::size_t>(p)]) << "\n";
    }
    return 0;
  }
  out << "verdict: not representable (" << verdict.reason << ")\n";
  return 3;
}

int cmd_cuts(const RunConfig& cfg, const std::filesystem::path& file, std::ostream& out) {
  NamedFuzzy nf = read_fuzzy_file(file);
  const FuzzyUpSet& mu = nf.map;
  MeetClosure closure = image_meet_closure(mu);
  if (cfg.dot) {
    out << dot_poset("Lmu_" + nf.name, closure.lattice.order());
    return 0;
  }
  out << "fuzzy " << nf.name << ": " << mu.domain().size() << " domain elements into "
      << mu.codomain().size() << "-element lattice\n";
  for (int x = 0; x < mu.domain().size(); ++x) {
    out << "  mu: " << mu.domain().name(x) << " -> " << mu.codomain().name(mu.value(x)) << "\n";
  }
  UpSetFamily cuts = cut_family(mu);
  out << "distinct cuts: " << family_line(cuts) << "\n";
  out << "image meet-closure: " << closure.lattice.size() << " elements\n";

  auto report = cuts_are_all_upsets(mu, cfg.cap_size);
  out << "cuts are all up-sets: " << yesno(report.holds);
  if (!report.holds) {
    out << " (witness x=" << mu.domain().name(report.x) << ", family="
        << set_label(mu.domain(), report.family) << ")";
  }
  out << "\n";
  if (report.holds) {
    out << "image inside M(L^mu): " << yesno(image_in_irreducibles(mu, cfg.cap_size)) << "\n";
  }
  return report.holds ? 0 : 3;
}

int cmd_embed(const RunConfig& cfg, const std::filesystem::path& l0_file,
              const std::filesystem::path& l_file, const std::string& witness_out,
              std::ostream& out) {
  NamedLattice l0 = read_lattice_file(l0_file);
  NamedLattice host = read_lattice_file(l_file);
  auto verdict = decide_embedding(l0.lattice, host.lattice, cfg.cap_family, cfg.cap_size);
  if (!verdict.embeds) {
    out << "verdict: " << l0.name << " does not embed into " << host.name << "\n";
    return 3;
  }
  const MonotonicOperator& g = *verdict.witness;
  if (cfg.dot) {
    out << dot_poset("FMq_" + l0.name, upset_lattice(quotient(g).classes, cfg.cap_size).lattice.order());
    return 0;
  }
  out << "verdict: " << l0.name << " embeds into " << host.name << "\n";
  out << "witness family over M(" << host.name << "): " << family_line(operator_family(g, cfg.cap_size))
      << "\n";
  std::string poset_ref = witness_out.empty() ? "-" : witness_out + ".poset";
  out << format_operator("G_" + l0.name, g, poset_ref);
  if (!witness_out.empty()) {
    std::ofstream pf(witness_out + ".poset");
    pf << format_poset("M_" + host.name, g.carrier());
    std::ofstream mf(witness_out + ".monop");
    mf << format_operator("G_" + l0.name, g, poset_ref);
    out << "witness written to " << witness_out << ".poset and " << witness_out << ".monop\n";
  }
  return 0;
}

int cmd_hql(const RunConfig& cfg, const std::filesystem::path& file, bool force,
            std::ostream& out) {
  NamedLattice nl = read_lattice_file(file);
  OperatorClassLattice classes = class_lattice(nl.lattice, cfg.cap_family, force);
  if (cfg.dot) {
    out << dot_poset("HQL_" + nl.name, classes.order.order());
    return 0;
  }
  out << classes.families.size() << " classes\n";
  if (!classes.asserted) {
    out << "note: input is not distributive; structure reported, not asserted\n";
  }
  for (std::size_t i = 0; i < classes.families.size(); ++i) {
    out << "  C" << i << ": " << family_line(classes.families[i]) << "\n";
  }
  out << "bottom: C" << classes.order.bottom() << ", top: C" << classes.order.top() << "\n";
  return 0;
}

int cmd_gen(const RunConfig& cfg, int n, int random_count, const std::string& dir,
            std::ostream& out) {
  std::vector<NamedPoset> emitted;
  if (random_count > 0) {
    if (n < 1 || n > cfg.cap_size) {
      throw cap_exceeded("random posets on " + std::to_string(n) +
                         " elements exceed the cap of " + std::to_string(cfg.cap_size));
    }
    std::mt19937_64 rng(cfg.seed);
    for (int i = 0; i < random_count; ++i) {
      emitted.push_back({"r" + std::to_string(n) + "_" + std::to_string(i), random_poset(n, rng)});
    }
  } else {
    auto posets = enumerate_posets(n);
    for (std::size_t i = 0; i < posets.size(); ++i) {
      emitted.push_back({"g" + std::to_string(n) + "_" + std::to_string(i), posets[i]});
    }
  }
  for (const auto& np : emitted) {
    std::string text = cfg.dot ? dot_poset(np.name, np.poset) : format_poset(np.name, np.poset);
    if (dir.empty()) {
      out << text << "\n";
    } else {
      std::filesystem::create_directories(dir);
      std::ofstream f(std::filesystem::path(dir) / (np.name + (cfg.dot ? ".dot" : ".poset")));
      f << text;
    }
  }
  if (!dir.empty()) out << emitted.size() << " posets written to " << dir << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite lattices as up-set families: representation, embedding, operator classes"};
  app.require_subcommand(1);

  RunConfig cfg;
  app.add_option("--cap-size", cfg.cap_size, "max poset size for enumerations")
      ->capture_default_str();
  app.add_option("--cap-family", cfg.cap_family, "max |F_{M(L)}| for sublattice searches")
      ->capture_default_str();
  app.add_option("--seed", cfg.seed, "seed for random corpora")->capture_default_str();
  app.add_flag("--dot", cfg.dot, "emit a DOT Hasse diagram instead of the text report");

  std::string file0, file1, witness_out, gen_dir;
  int gen_n = 3, gen_random = 0;
  bool force = false;

  auto* check = app.add_subcommand("check", "validate a lattice file and report its predicates");
  check->add_option("latticefile", file0)->required();
  auto* upsets = app.add_subcommand("upsets", "list every up-set of a poset");
  upsets->add_option("posetfile", file0)->required();
  auto* birkhoff = app.add_subcommand("birkhoff", "decide representability as an up-set lattice");
  birkhoff->add_option("latticefile", file0)->required();
  auto* cuts = app.add_subcommand("cuts", "analyze the cut family of a monotone map");
  cuts->add_option("fuzzyfile", file0)->required();
  auto* embed = app.add_subcommand("embed", "decide whether the first lattice embeds into the second");
  embed->add_option("l0file", file0)->required();
  embed->add_option("lfile", file1)->required();
  embed->add_option("--witness-out", witness_out, "basename for the emitted witness files");
  auto* hql = app.add_subcommand("hql", "the lattice of monotonic-operator classes over M(L)");
  hql->add_option("latticefile", file0)->required();
  hql->add_flag("--force", force, "also run on non-distributive lattices (reported, not asserted)");
  auto* gen = app.add_subcommand("gen", "emit a poset corpus");
  gen->add_option("n", gen_n, "number of elements")->required();
  gen->add_option("--random", gen_random, "emit this many random posets instead of all classes");
  gen->add_option("--dir", gen_dir, "write one file per poset into this directory");

  std::vector<const char*> argv;
  argv.push_back("latrep");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(cfg, file0, out);
    if (upsets->parsed()) return cmd_upsets(cfg, file0, out);
    if (birkhoff->parsed()) return cmd_birkhoff(cfg, file0, out);
    if (cuts->parsed()) return cmd_cuts(cfg, file0, out);
    if (embed->parsed()) return cmd_embed(cfg, file0, file1, witness_out, out);
    if (hql->parsed()) return cmd_hql(cfg, file0, force, out);
    if (gen->parsed()) return cmd_gen(cfg, gen_n, gen_random, gen_dir, out);
  } catch (const certificate_error& e) {
    err << "certificate violation: " << e.what() << "\n";
    return 5;
  } catch (const cap_exceeded& e) {
    err << "cap exceeded: " << e.what() << "\n";
    return 4;
  } catch (const not_a_lattice& e) {
    err << "not a lattice: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace latrep
