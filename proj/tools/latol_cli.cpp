// Command-line front end for the lattice tolerance library.
//
// Exit codes: 0 = success / check passed; 1 = a mathematical check failed
// (not a tolerance, not amicable, not permuting, catalog violation);
// 2 = unusable input (bad flags, unreadable or malformed files, queries
// outside the domain).

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "latol/amicability.hpp"
#include "latol/errors.hpp"
#include "latol/io.hpp"
#include "latol/lattice.hpp"
#include "latol/relation.hpp"
#include "latol/verify.hpp"
#include "latol/witness.hpp"

namespace {

using namespace latol;

std::string role_line(const ElementRole& role) {
  std::string out = std::to_string(role.element) + ":";
  if (role.is_top()) out += " top (lower " + std::to_string(*role.lower_neighbour) + ")";
  if (role.is_bottom()) {
    if (role.is_top()) out += ",";
    out += " bottom (upper " + std::to_string(*role.upper_neighbour) + ")";
  }
  return out;
}

const char* kind_name(TopKind k) {
  switch (k) {
    case TopKind::split: return "split";
    case TopKind::adherent: return "adherent";
    default: return "none";
  }
}
const char* kind_name(BottomKind k) {
  switch (k) {
    case BottomKind::split: return "split";
    case BottomKind::adherent: return "adherent";
    default: return "none";
  }
}

std::string block_str(const std::vector<element_id>& blk) {
  std::string out = "{";
  for (size_t i = 0; i < blk.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(blk[i]);
  }
  return out + "}";
}

std::string chain_str(const std::vector<element_id>& xs) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(xs[i]);
  }
  return out;
}

void print_trace(const WitnessTrace& w) {
  std::string kind = w.kind == WitnessCase::trivial  ? "trivial"
                     : w.kind == WitnessCase::meet   ? "meet"
                                                     : "climb";
  std::string line = "case=" + kind + " dualized=" + (w.dualized ? "yes" : "no");
  if (w.u >= 0) line += " u=" + std::to_string(w.u);
  if (!w.chain.empty()) line += " chain=" + chain_str(w.chain);
  if (w.end_kind != EndKind::none)
    line += std::string(" end=") + (w.end_kind == EndKind::split ? "split" : "adherent");
  line += " d=" + std::to_string(w.d);
  std::cout << line << "\n";
}

struct Paths {
  std::string lattice, t, s;
};

int run(CLI::App& app, int argc, char** argv) {
  Paths paths;
  element_id arg_a = 0, arg_b = 0;
  int max_n = 7;
  int enum_n = 0;
  bool all_u = false;
  bool no_lemmas = false;
  std::string report_path, out_path;

  auto add_lattice = [&](CLI::App* cmd) {
    cmd->add_option("lattice", paths.lattice, "lattice file")->required();
  };

  CLI::App* c_check = app.add_subcommand("check-tolerance",
                                         "is the relation a tolerance / congruence / 2-uniform");
  add_lattice(c_check);
  c_check->add_option("tolerance", paths.t, "relation file")->required();

  CLI::App* c_blocks = app.add_subcommand("blocks", "blocks of a tolerance");
  add_lattice(c_blocks);
  c_blocks->add_option("tolerance", paths.t, "tolerance file")->required();

  CLI::App* c_classify =
      app.add_subcommand("classify", "per-element roles of one or two 2-uniform tolerances");
  add_lattice(c_classify);
  c_classify->add_option("T", paths.t, "tolerance file")->required();
  c_classify->add_option("S", paths.s, "second tolerance file (switches to two-fold roles)");

  CLI::App* c_amicable = app.add_subcommand("amicable", "check the pair for amicability");
  add_lattice(c_amicable);
  c_amicable->add_option("T", paths.t, "tolerance file")->required();
  c_amicable->add_option("S", paths.s, "tolerance file")->required();

  CLI::App* c_permutes = app.add_subcommand("permutes", "check T o S = S o T");
  add_lattice(c_permutes);
  c_permutes->add_option("T", paths.t, "tolerance file")->required();
  c_permutes->add_option("S", paths.s, "tolerance file")->required();

  CLI::App* c_witness =
      app.add_subcommand("witness", "construct d with (a,d) in S and (d,b) in T");
  add_lattice(c_witness);
  c_witness->add_option("T", paths.t, "tolerance file")->required();
  c_witness->add_option("S", paths.s, "tolerance file")->required();
  c_witness->add_option("a", arg_a, "left element")->required();
  c_witness->add_option("b", arg_b, "right element")->required();
  c_witness->add_flag("--all-u", all_u, "run the construction for every valid middle element");

  CLI::App* c_enum_t =
      app.add_subcommand("enumerate-tolerances", "all 2-uniform tolerances of the lattice");
  add_lattice(c_enum_t);

  CLI::App* c_enum_l =
      app.add_subcommand("enumerate-lattices", "canonical forms of all n-element lattices");
  c_enum_l->add_option("-n,--n", enum_n, "element count (1..8)")->required();

  CLI::App* c_verify = app.add_subcommand(
      "verify", "verify permutability = amicability and the supporting laws over the catalog");
  c_verify->add_option("--max-n", max_n, "largest lattice size to check (default 7, max 8)");
  c_verify->add_flag("--all-u", all_u, "also run every valid middle element per witness");
  c_verify->add_flag("--no-lemmas", no_lemmas, "skip the structural law suite");
  c_verify->add_option("--report", report_path, "also write the report to this file");

  CLI::App* c_dot = app.add_subcommand("export-dot", "Graphviz drawing of the Hasse diagram");
  add_lattice(c_dot);
  c_dot->add_option("--t", paths.t, "tolerance drawn as solid grey blocks");
  c_dot->add_option("--s", paths.s, "tolerance drawn as dotted black blocks");
  c_dot->add_option("-o,--out", out_path, "output file (default stdout)");

  app.require_subcommand(1);
  app.parse(argc, argv);

  if (*c_check) {
    const Lattice l = parse_lattice_file(paths.lattice);
    const BinaryRelation rel = parse_tolerance_file(paths.t, l.size());
    const bool tol = is_tolerance(l, rel);
    std::cout << (tol ? "TOLERANCE" : "NOT A TOLERANCE") << "\n";
    if (tol) {
      std::cout << (is_congruence(l, rel) ? "CONGRUENCE" : "NOT A CONGRUENCE") << "\n";
      std::cout << (is_two_uniform(l, rel) ? "2-UNIFORM" : "NOT 2-UNIFORM") << "\n";
    }
    return tol ? 0 : 1;
  }

  if (*c_blocks) {
    const Lattice l = parse_lattice_file(paths.lattice);
    const BinaryRelation rel = parse_tolerance_file(paths.t, l.size());
    std::string out;
    for (const auto& blk : blocks(l, rel)) {
      if (!out.empty()) out += " ";
      out += block_str(blk);
    }
    std::cout << out << "\n";
    return 0;
  }

  if (*c_classify) {
    const Lattice l = parse_lattice_file(paths.lattice);
    const BinaryRelation t = parse_tolerance_file(paths.t, l.size());
    if (paths.s.empty()) {
      for (const ElementRole& role : classify(l, t)) std::cout << role_line(role) << "\n";
    } else {
      const BinaryRelation s = parse_tolerance_file(paths.s, l.size());
      for (const TwoFoldRole& role : two_fold_roles(l, t, s))
        std::cout << role.element << ": top=" << kind_name(role.top)
                  << " bottom=" << kind_name(role.bottom) << "\n";
    }
    return 0;
  }

  if (*c_amicable) {
    const Lattice l = parse_lattice_file(paths.lattice);
    const BinaryRelation t = parse_tolerance_file(paths.t, l.size());
    const BinaryRelation s = parse_tolerance_file(paths.s, l.size());
    const auto violations = amicability_violations(l, t, s);
    std::cout << (violations.empty() ? "AMICABLE" : "NOT AMICABLE") << "\n";
    for (const auto& v : violations) std::cout << to_line(v) << "\n";
    return violations.empty() ? 0 : 1;
  }

  if (*c_permutes) {
    const Lattice l = parse_lattice_file(paths.lattice);
    const BinaryRelation t = parse_tolerance_file(paths.t, l.size());
    const BinaryRelation s = parse_tolerance_file(paths.s, l.size());
    const bool perm = permutes(t, s);
    std::cout << (perm ? "PERMUTING" : "NOT PERMUTING") << "\n";
    if (!perm) {
      const RelationImage ts = compose(t, s), st = compose(s, t);
      for (int a = 0; a < l.size(); ++a)
        for (int b = 0; b < l.size(); ++b)
          if (ts.get(a, b) != st.get(a, b))
            std::cout << "(" << a << "," << b << ") in "
                      << (ts.get(a, b) ? "ToS only" : "SoT only") << "\n";
    }
    const auto violations = amicability_violations(l, t, s);
    std::cout << (violations.empty() ? "AMICABLE" : "NOT AMICABLE") << "\n";
    for (const auto& v : violations) std::cout << to_line(v) << "\n";
    return perm ? 0 : 1;
  }

  if (*c_witness) {
    const Lattice l = parse_lattice_file(paths.lattice);
    const BinaryRelation t = parse_tolerance_file(paths.t, l.size());
    const BinaryRelation s = parse_tolerance_file(paths.s, l.size());
    if (all_u) {
      const auto middles = middle_elements(t, s, arg_a, arg_b);
      if (middles.empty() && !(t.contains(arg_a, arg_b) || s.contains(arg_a, arg_b)))
        throw NotInProductError("(" + std::to_string(arg_a) + "," + std::to_string(arg_b) +
                                ") is not in T o S");
      for (element_id u : middles) {
        std::cout << "u=" << u << ": ";
        print_trace(construct_witness(l, t, s, arg_a, arg_b, u));
      }
    } else {
      print_trace(construct_witness(l, t, s, arg_a, arg_b));
    }
    return 0;
  }

  if (*c_enum_t) {
    const Lattice l = parse_lattice_file(paths.lattice);
    for (const BinaryRelation& rel : enumerate_two_uniform(l))
      std::cout << to_string(rel) << "\n";
    return 0;
  }

  if (*c_enum_l) {
    for (const Lattice& l : enumerate_lattices(enum_n)) std::cout << l.canonical_hex() << "\n";
    return 0;
  }

  if (*c_verify) {
    const CatalogReport report = run_catalog(max_n, all_u, !no_lemmas);
    const std::string text = report.to_text();
    std::cout << text;
    if (!report_path.empty()) {
      std::ofstream out(report_path);
      if (!out) throw ParseError(0, "cannot write " + report_path);
      out << text;
    }
    return report.total_violations() == 0 ? 0 : 1;
  }

  if (*c_dot) {
    const Lattice l = parse_lattice_file(paths.lattice);
    BinaryRelation t(1), s(1);
    const BinaryRelation* tp = nullptr;
    const BinaryRelation* sp = nullptr;
    if (!paths.t.empty()) {
      t = parse_tolerance_file(paths.t, l.size());
      tp = &t;
    }
    if (!paths.s.empty()) {
      s = parse_tolerance_file(paths.s, l.size());
      sp = &s;
    }
    const std::string dot = export_dot(l, tp, sp);
    if (out_path.empty()) {
      std::cout << dot;
    } else {
      std::ofstream out(out_path);
      if (!out) throw ParseError(0, "cannot write " + out_path);
      out << dot;
    }
    return 0;
  }

  return 2;  // unreachable: require_subcommand guarantees a branch above
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-uniform lattice tolerances: blocks, amicability, permutability"};
  try {
    return run(app, argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, bad flags exit 2
  } catch (const NotAmicableError& e) {
    std::cout << "NOT AMICABLE: " << e.what() << "\n";
    return 1;
  } catch (const NotInProductError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const LatolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
