// monocat: validation and construction tool for crossed structures over
// finite monoids and their internal categories.
//
// Verbs: check, build-cat, enumerate, classify, qu, roundtrip-group,
// weak-compose. Reports go to stdout, one PASS/FAIL line per check; exit 0
// on all-pass, 1 on any FAIL, 2 on input errors. Output is byte-identical
// across runs for fixed inputs and --seed.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monocat/catalog.hpp"
#include "monocat/crossed.hpp"
#include "monocat/enumerate.hpp"
#include "monocat/internal_category.hpp"
#include "monocat/io.hpp"
#include "monocat/quadratic.hpp"

namespace fs = std::filesystem;
using namespace monocat;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitInputError = 2;

struct CommonOpts {
  std::uint64_t seed = 0;
  std::uint64_t max_c2 = 4096;
  std::string emit_dir;
  std::string resolve_dir;

  VerifyOptions verify() const { return VerifyOptions{max_c2, seed, 1'000'000}; }
};

/// Loads every other *.txt file of the resolution directory (defaulting to
/// the target's parent), then the target file itself; returns the target's
/// entries.
std::vector<io::EntryRef> load_with_context(const fs::path& target, const CommonOpts& opts,
                                            io::Workspace& ws) {
  fs::path dir = opts.resolve_dir.empty() ? target.parent_path() : fs::path(opts.resolve_dir);
  if (dir.empty()) dir = ".";
  std::vector<fs::path> files;
  if (fs::is_directory(dir))
    for (const auto& entry : fs::directory_iterator(dir))
      if (entry.is_regular_file() && entry.path().extension() == ".txt" &&
          !fs::equivalent(entry.path(), target))
        files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  for (const auto& f : files) io::parse_file(f, ws);
  return io::parse_file(target, ws);
}

const FiniteMonoid& resolve_monoid(const std::string& name, const CommonOpts& opts,
                                   io::Workspace& ws) {
  if (!opts.resolve_dir.empty() && ws.monoids.empty())
    io::load_directory(opts.resolve_dir, ws);
  const FiniteMonoid* m = ws.find_monoid(name);
  if (!m) throw io::ParseError(name, 0, "unknown monoid (not in catalog or --dir)");
  return *m;
}

void write_file(const fs::path& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw io::ParseError(path.string(), 0, "cannot write file");
  out << contents;
}

int report_exit(bool all_pass) { return all_pass ? kExitPass : kExitFail; }

// -- check --------------------------------------------------------------------

int cmd_check(const std::string& file, const CommonOpts& opts) {
  io::Workspace ws;
  const auto entries = load_with_context(file, opts, ws);
  bool ok = true;
  for (const auto& e : entries) {
    if (e.violation) {
      ok = false;
      std::cout << "FAIL " << e.kind << ' ' << e.name << ' ' << e.violation->to_string()
                << '\n';
    } else {
      std::cout << "PASS " << e.kind << ' ' << e.name << '\n';
    }
  }
  return report_exit(ok);
}

// -- build-cat ------------------------------------------------------------------

int cmd_build_cat(const std::string& file, const CommonOpts& opts) {
  io::Workspace ws;
  const auto entries = load_with_context(file, opts, ws);
  bool ok = true;
  bool any = false;
  for (const auto& e : entries) {
    if (e.kind != "xbsmod") continue;
    any = true;
    if (e.violation) {
      ok = false;
      std::cout << "FAIL xbsmod " << e.name << ' ' << e.violation->to_string() << '\n';
      continue;
    }
    const CrossedSemiBimodule& x = ws.xbsmods.at(e.name);
    const BuiltInternalCategory built = build_internal_category_reported(x, opts.verify());
    std::cout << "category " << e.name << " c0=" << built.category.c0.size
              << " c1=" << built.category.c1.size << " c2=" << built.category.c2_size << '\n';
    std::cout << built.report.render();
    ok &= built.report.all_pass();

    if (!opts.emit_dir.empty()) {
      fs::create_directories(opts.emit_dir);
      std::ostringstream out;
      io::emit_monoid(out, e.name + "_c0", built.category.c0);
      io::emit_monoid(out, e.name + "_c1", built.category.c1);
      if (built.category.c2) io::emit_monoid(out, e.name + "_c2", *built.category.c2);
      write_file(fs::path(opts.emit_dir) / (e.name + "_cat.txt"), out.str());
    }
  }
  if (!any) {
    std::cout << "FAIL no xbsmod entries in " << file << '\n';
    return kExitFail;
  }
  return report_exit(ok);
}

// -- enumerate / classify -------------------------------------------------------

EnumerationLimits make_limits(Elem max_size, std::uint64_t max_nodes) {
  EnumerationLimits limits;
  limits.max_a = max_size;
  limits.max_k = max_size;
  if (max_nodes) limits.node_budget = max_nodes;
  return limits;
}

int cmd_enumerate(const std::string& a_name, const std::string& k_name,
                  const std::string& kind, Elem max_size, std::uint64_t max_nodes,
                  const CommonOpts& opts) {
  io::Workspace ws;
  EnumerationTask task;
  task.a = resolve_monoid(a_name, opts, ws);
  task.k = resolve_monoid(k_name, opts, ws);
  task.limits = make_limits(max_size, max_nodes);
  if (kind == "xbsmod")
    task.kind = StructureKind::xbsmod;
  else if (kind == "xsmod")
    task.kind = StructureKind::xsmod;
  else if (kind == "xmod")
    task.kind = StructureKind::xmod;
  else
    throw io::ParseError(kind, 0, "kind must be xbsmod, xsmod or xmod");

  const EnumerationResult result = run_enumeration(task);

  std::ostringstream dump;
  auto emit_one = [&](std::size_t i, auto&& bundle_fn) {
    const std::string stem = kind + "_" + std::to_string(i);
    if (opts.emit_dir.empty()) {
      bundle_fn(dump, stem);
    } else {
      std::ostringstream one;
      bundle_fn(one, stem);
      fs::create_directories(opts.emit_dir);
      write_file(fs::path(opts.emit_dir) / (stem + ".txt"), one.str());
    }
  };
  for (std::size_t i = 0; i < result.xbsmods.size(); ++i)
    emit_one(i, [&](std::ostream& out, const std::string& stem) {
      io::emit_xbsmod_bundle(out, stem, result.xbsmods[i]);
    });
  for (std::size_t i = 0; i < result.xsmods.size(); ++i)
    emit_one(i, [&](std::ostream& out, const std::string& stem) {
      io::emit_xsmod_bundle(out, stem, result.xsmods[i]);
    });
  for (std::size_t i = 0; i < result.xmods.size(); ++i)
    emit_one(i, [&](std::ostream& out, const std::string& stem) {
      io::emit_xmod_bundle(out, stem, result.xmods[i]);
    });

  std::cout << "count " << task.a.size << ' ' << task.k.size << ' ' << kind << ' '
            << result.count() << '\n';
  std::cout << "nodes " << result.nodes << '\n';
  std::cout << dump.str();
  return kExitPass;
}

int cmd_classify(const std::string& a_name, const std::string& k_name, Elem max_size,
                 std::uint64_t max_nodes, const CommonOpts& opts) {
  io::Workspace ws;
  const FiniteMonoid& a = resolve_monoid(a_name, opts, ws);
  const FiniteMonoid& k = resolve_monoid(k_name, opts, ws);
  const ClassifyReport rep = classify_pair(a, k, make_limits(max_size, max_nodes));
  std::cout << "total " << rep.total << '\n'
            << "lambda-trivial " << rep.lambda_trivial << '\n'
            << "circ-constant " << rep.circ_constant << '\n'
            << "group-case " << rep.group_case << '\n'
            << rep.checks.render();
  return report_exit(rep.checks.all_pass());
}

// -- qu -------------------------------------------------------------------------

int cmd_qu(std::uint32_t n, std::uint32_t p, std::uint32_t q, bool with_cat,
           const CommonOpts& opts) {
  const QuParams params = make_qu_params(n, p, q);  // constraint errors -> input error
  std::cout << "qu n=" << n << " p=" << params.p << " q=" << params.q << '\n';
  bool ok = true;
  try {
    const CrossedSemiBimodule x = build_qu(params);
    std::cout << "PASS qu-structure sizes A=" << x.a.size << " K=" << x.k.size << '\n';

    if (!opts.emit_dir.empty()) {
      fs::create_directories(opts.emit_dir);
      std::ostringstream out;
      io::emit_xbsmod_bundle(out, "qu", x);
      write_file(fs::path(opts.emit_dir) / "qu.txt", out.str());
    }
    if (with_cat) {
      const BuiltInternalCategory built = build_internal_category_reported(x, opts.verify());
      std::cout << "category qu c0=" << built.category.c0.size
                << " c1=" << built.category.c1.size << " c2=" << built.category.c2_size
                << '\n';
      std::cout << built.report.render();
      ok &= built.report.all_pass();
      if (!opts.emit_dir.empty()) {
        std::ostringstream out;
        io::emit_monoid(out, "qu_c0", built.category.c0);
        io::emit_monoid(out, "qu_c1", built.category.c1);
        if (built.category.c2) io::emit_monoid(out, "qu_c2", *built.category.c2);
        write_file(fs::path(opts.emit_dir) / "qu_cat.txt", out.str());
      }
    }
  } catch (const ValidationError& e) {
    // an axiom failure here would be a finding about the parameter triple
    std::cout << "FAIL qu " << e.violation().to_string() << '\n';
    ok = false;
  }
  return report_exit(ok);
}

// -- roundtrip-group --------------------------------------------------------------

int cmd_roundtrip_group(const std::string& file, const CommonOpts& opts) {
  io::Workspace ws;
  const auto entries = load_with_context(file, opts, ws);
  bool ok = true;
  bool any = false;

  auto roundtrip_xbsmod = [&](const std::string& name, const CrossedSemiBimodule& x) {
    try {
      const CrossedModule m = group_to_xmod(x);
      const CrossedSemiBimodule back = xmod_to_xbsmod(m);
      const bool again = group_to_xmod(back) == m;
      std::cout << (again ? "PASS" : "FAIL") << " group-roundtrip " << name << '\n';
      ok &= again;
      const CanonicalWeakIso iso = canonical_weak_iso(x);
      std::cout << iso.report.render();
      ok &= iso.report.all_pass();

      if (!opts.emit_dir.empty()) {
        // the canonical pair as composable weak-morphism files
        fs::create_directories(opts.emit_dir);
        const std::string tw = name + "_tw";
        std::ostringstream fwd;
        io::emit_xbsmod_bundle(fwd, tw, iso.twisted);
        io::emit_xbsmod_bundle(fwd, name, x);
        io::emit_hom(fwd, name + "_fwd_kappa", tw + "_A", name + "_A", iso.forward.kappa);
        io::emit_weak_morphism(fwd, name + "_fwd", tw, name, name + "_fwd_kappa",
                               iso.forward);
        write_file(fs::path(opts.emit_dir) / (name + "_fwd.txt"), fwd.str());

        std::ostringstream bwd;
        io::emit_hom(bwd, name + "_bwd_kappa", name + "_A", tw + "_A", iso.backward.kappa);
        io::emit_weak_morphism(bwd, name + "_bwd", name, tw, name + "_bwd_kappa",
                               iso.backward);
        write_file(fs::path(opts.emit_dir) / (name + "_bwd.txt"), bwd.str());
      }
    } catch (const ValidationError& e) {
      std::cout << "FAIL group-roundtrip " << name << ' ' << e.violation().to_string()
                << '\n';
      ok = false;
    }
  };

  for (const auto& e : entries) {
    if (e.violation) {
      if (e.kind == "xbsmod" || e.kind == "xmod") {
        std::cout << "FAIL " << e.kind << ' ' << e.name << ' ' << e.violation->to_string()
                  << '\n';
        ok = false;
        any = true;
      }
      continue;
    }
    if (e.kind == "xbsmod") {
      any = true;
      roundtrip_xbsmod(e.name, ws.xbsmods.at(e.name));
    } else if (e.kind == "xmod") {
      any = true;
      const CrossedModule& m = ws.xmods.at(e.name);
      try {
        const bool same = group_to_xmod(xmod_to_xbsmod(m)) == m;
        std::cout << (same ? "PASS" : "FAIL") << " xmod-roundtrip " << e.name << '\n';
        ok &= same;
      } catch (const ValidationError& err) {
        std::cout << "FAIL xmod-roundtrip " << e.name << ' ' << err.violation().to_string()
                  << '\n';
        ok = false;
      }
    }
  }
  if (!any) {
    std::cout << "FAIL no xbsmod or xmod entries in " << file << '\n';
    return kExitFail;
  }
  return report_exit(ok);
}

// -- weak-compose ------------------------------------------------------------------

int cmd_weak_compose(const std::string& outer_file, const std::string& inner_file,
                     const CommonOpts& opts) {
  io::Workspace ws;
  auto one_weak = [&](const std::string& file) -> std::string {
    const auto entries = load_with_context(file, opts, ws);
    const io::EntryRef* found = nullptr;
    for (const auto& e : entries)
      if (e.kind == "weakmorphism") {
        if (found) throw io::ParseError(file, 0, "more than one weakmorphism entry");
        if (e.violation)
          throw io::ParseError(file, 0, "invalid weakmorphism: " + e.violation->to_string());
        found = &e;
      }
    if (!found) throw io::ParseError(file, 0, "no weakmorphism entry");
    return found->name;
  };

  const io::NamedWeakMorphism outer = ws.weak_morphisms.at(one_weak(outer_file));
  const io::NamedWeakMorphism inner = ws.weak_morphisms.at(one_weak(inner_file));
  try {
    const WeakMorphism composite = compose_weak(outer.morphism, inner.morphism);
    const CrossedSemiBimodule& from = ws.xbsmods.at(inner.from);
    const CrossedSemiBimodule& to = ws.xbsmods.at(outer.to);
    const auto violation = check_weak_morphism(composite, from, to);
    std::cout << (violation ? "FAIL" : "PASS") << " weak-compose from=" << inner.from
              << " to=" << outer.to;
    if (violation) std::cout << ' ' << violation->to_string();
    std::cout << '\n';

    std::ostringstream out;
    io::emit_hom(out, "composite_kappa", inner.from + "_A", outer.to + "_A",
                 composite.kappa);
    io::emit_weak_morphism(out, "composite", inner.from, outer.to, "composite_kappa",
                           composite);
    if (opts.emit_dir.empty()) {
      std::cout << out.str();
    } else {
      fs::create_directories(opts.emit_dir);
      write_file(fs::path(opts.emit_dir) / "composite.txt", out.str());
    }
    return report_exit(!violation);
  } catch (const ValidationError& e) {
    std::cout << "FAIL weak-compose " << e.violation().to_string() << '\n';
    return kExitFail;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"crossed structures over finite monoids: validation, internal categories, "
               "enumeration"};
  app.require_subcommand(1);

  CommonOpts common;
  app.add_option("--seed", common.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--max-c2", common.max_c2,
                 "exhaustive C2 associativity up to this size, sampled above")
      ->capture_default_str();
  app.add_option("--emit", common.emit_dir, "directory for emitted structure files");
  app.add_option("--dir", common.resolve_dir,
                 "input directory for name resolution (default: the file's directory)");

  std::string file, file2, a_name, k_name, kind = "xbsmod";
  Elem max_size = 4;
  std::uint64_t max_nodes = 0;
  std::uint32_t qu_n = 2, qu_p = 0, qu_q = 0;
  bool with_cat = false;

  auto* check = app.add_subcommand("check", "validate every entry of a structure file");
  check->add_option("file", file)->required();

  auto* build = app.add_subcommand(
      "build-cat", "build and verify the internal category of each xbsmod entry");
  build->add_option("file", file)->required();

  auto* enumerate = app.add_subcommand("enumerate", "enumerate crossed structures on (A, K)");
  enumerate->add_option("--A", a_name, "A monoid (catalog name or --dir name)")->required();
  enumerate->add_option("--K", k_name, "K monoid")->required();
  enumerate->add_option("--kind", kind, "xbsmod | xsmod | xmod")->capture_default_str();
  enumerate->add_option("--max-size", max_size, "element-count cap")->capture_default_str();
  enumerate->add_option("--max-nodes", max_nodes, "search node budget (0 = unlimited)");

  auto* classify = app.add_subcommand(
      "classify", "partition the enumerated structures and cross-check the class "
                  "characterizations");
  classify->add_option("--A", a_name)->required();
  classify->add_option("--K", k_name)->required();
  classify->add_option("--max-size", max_size)->capture_default_str();
  classify->add_option("--max-nodes", max_nodes);

  auto* qu = app.add_subcommand("qu", "build the quadratic-algebra structure over Z/nZ");
  qu->add_option("n", qu_n)->required();
  qu->add_option("p", qu_p)->required();
  qu->add_option("q", qu_q)->required();
  qu->add_flag("--build-cat", with_cat, "also build and verify the internal category");

  auto* roundtrip = app.add_subcommand(
      "roundtrip-group", "group-case roundtrip and canonical weak isomorphism checks");
  roundtrip->add_option("file", file)->required();

  auto* wcompose = app.add_subcommand(
      "weak-compose", "compose two weak morphisms: OUTER INNER applies INNER first");
  wcompose->add_option("outer", file)->required();
  wcompose->add_option("inner", file2)->required();

  for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  }

  try {
    if (*check) return cmd_check(file, common);
    if (*build) return cmd_build_cat(file, common);
    if (*enumerate) return cmd_enumerate(a_name, k_name, kind, max_size, max_nodes, common);
    if (*classify) return cmd_classify(a_name, k_name, max_size, max_nodes, common);
    if (*qu) return cmd_qu(qu_n, qu_p, qu_q, with_cat, common);
    if (*roundtrip) return cmd_roundtrip_group(file, common);
    if (*wcompose) return cmd_weak_compose(file, file2, common);
  } catch (const io::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ValidationError& e) {
    const std::string& check_name = e.violation().check;
    if (check_name == "cap-exceeded" || check_name == "budget-exceeded" ||
        check_name == "constraint-violated" || check_name == "too-large") {
      std::cerr << "error: " << e.violation().to_string() << '\n';
      return kExitInputError;
    }
    std::cout << "FAIL " << e.violation().to_string() << '\n';
    return kExitFail;
  }
  return kExitInputError;
}
