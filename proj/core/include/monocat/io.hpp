#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "monocat/crossed.hpp"
#include "monocat/monoid.hpp"

namespace monocat::io {

/// Structural error in an input file (bad token, wrong row count, unknown
/// name). Algebraic law violations are not parse errors; see EntryRef.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string file, std::size_t line, const std::string& what);
  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

struct NamedMorphism {
  std::string from, to;
  XbsMorphism morphism;
};

struct NamedWeakMorphism {
  std::string from, to;
  WeakMorphism morphism;
};

/// One entry parsed from a file, with the violation when its validation
/// failed (invalid entries are not registered in the workspace).
struct EntryRef {
  std::string kind;  // monoid | action | hom | xbsmod | xsmod | xmod | morphism | weakmorphism
  std::string name;
  std::optional<Violation> violation;
};

/// Name-resolved collections. Lookup falls back to the built-in catalog for
/// monoid names.
struct Workspace {
  std::map<std::string, FiniteMonoid> monoids;
  std::map<std::string, MonoidAction> actions;
  std::map<std::string, SetAction> set_actions;
  std::map<std::string, MonoidHom> homs;
  std::map<std::string, CrossedSemiBimodule> xbsmods;
  std::map<std::string, CrossedSemiModule> xsmods;
  std::map<std::string, CrossedModule> xmods;
  std::map<std::string, NamedMorphism> morphisms;
  std::map<std::string, NamedWeakMorphism> weak_morphisms;

  const FiniteMonoid* find_monoid(const std::string& name) const;
};

/// Parses one file into the workspace, entry headers in order:
///   monoid <name> <size> <identity>          then <size> rows
///   action <name> <left|right|set> <actor> <carrier>   then |A| rows
///   hom <name> <source> <target>             then 1 row
///   xbsmod <name> A=<m> K=<m> circ=<a> lambda=<a> rho=<a>
///   xsmod <name> K=<m> A=<m> partial=<h> rho=<a>
///   xmod <name> K=<m> A=<m> partial=<h> rho=<a>
///   morphism <name> from=<x> to=<x> kappa=<h> alpha=<h>
///   weakmorphism <name> from=<x> to=<x> kappa=<h>      then |A| rows
/// Lines starting with '#' and blank lines are ignored.
std::vector<EntryRef> parse_file(const std::filesystem::path& path, Workspace& ws);
std::vector<EntryRef> parse_stream(std::istream& in, const std::string& display_name,
                                   Workspace& ws);

/// Loads every regular *.txt file in the directory in sorted filename order.
std::vector<EntryRef> load_directory(const std::filesystem::path& dir, Workspace& ws);

// -- emission (round-trips through parse to identical values) ----------------

void emit_monoid(std::ostream& out, const std::string& name, const FiniteMonoid& m);
void emit_action(std::ostream& out, const std::string& name, const std::string& actor,
                 const std::string& carrier, const MonoidAction& a);
void emit_set_action(std::ostream& out, const std::string& name, const std::string& actor,
                     const std::string& carrier, const SetAction& a);
void emit_hom(std::ostream& out, const std::string& name, const std::string& source,
              const std::string& target, const MonoidHom& h);
void emit_weak_morphism(std::ostream& out, const std::string& name, const std::string& from,
                        const std::string& to, const std::string& kappa,
                        const WeakMorphism& w);

/// Self-contained bundle: the two monoids, the three actions and the xbsmod
/// header, under names derived from `name`.
void emit_xbsmod_bundle(std::ostream& out, const std::string& name,
                        const CrossedSemiBimodule& x);
void emit_xsmod_bundle(std::ostream& out, const std::string& name, const CrossedSemiModule& s);
void emit_xmod_bundle(std::ostream& out, const std::string& name, const CrossedModule& m);

}  // namespace monocat::io
