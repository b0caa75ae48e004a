#include "monocat/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "monocat/catalog.hpp"

namespace monocat::io {

ParseError::ParseError(std::string file, std::size_t line, const std::string& what)
    : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
      file_(std::move(file)),
      line_(line) {}

const FiniteMonoid* Workspace::find_monoid(const std::string& name) const {
  if (auto it = monoids.find(name); it != monoids.end()) return &it->second;
  return catalog_find(name);
}

namespace {

struct Lines {
  std::istream& in;
  std::string file;
  std::size_t line_no = 0;

  /// Next content line, tokenized; '#'-comments and blank lines skipped.
  std::optional<std::vector<std::string>> next() {
    std::string line;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      std::vector<std::string> tokens;
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return tokens;
    }
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(file, line_no, what); }
};

Elem parse_index(Lines& src, const std::string& tok) {
  for (char c : tok)
    if (c < '0' || c > '9') src.fail("expected a nonnegative integer, got '" + tok + "'");
  unsigned long v = 0;
  try {
    v = std::stoul(tok);
  } catch (const std::exception&) {
    src.fail("integer out of range: '" + tok + "'");
  }
  if (v > 0xFFFFFFFFul) src.fail("integer out of range: '" + tok + "'");
  return static_cast<Elem>(v);
}

std::vector<Elem> parse_row(Lines& src, std::size_t expect) {
  auto tokens = src.next();
  if (!tokens) src.fail("unexpected end of file inside a table");
  if (tokens->size() != expect)
    src.fail("expected " + std::to_string(expect) + " entries, got " +
             std::to_string(tokens->size()));
  std::vector<Elem> row;
  row.reserve(expect);
  for (const auto& tok : *tokens) row.push_back(parse_index(src, tok));
  return row;
}

/// key=value field, enforcing the key.
std::string field(Lines& src, const std::vector<std::string>& tokens, std::size_t i,
                  const std::string& key) {
  if (i >= tokens.size()) src.fail("missing field " + key + "=...");
  const std::string& tok = tokens[i];
  if (tok.size() <= key.size() + 1 || tok.compare(0, key.size(), key) != 0 ||
      tok[key.size()] != '=')
    src.fail("expected field " + key + "=..., got '" + tok + "'");
  return tok.substr(key.size() + 1);
}

const FiniteMonoid& need_monoid(Lines& src, const Workspace& ws, const std::string& name) {
  const FiniteMonoid* m = ws.find_monoid(name);
  if (!m) src.fail("unknown monoid '" + name + "'");
  return *m;
}

const MonoidAction& need_action(Lines& src, const Workspace& ws, const std::string& name,
                                ActionSide side) {
  auto it = ws.actions.find(name);
  if (it == ws.actions.end()) src.fail("unknown action '" + name + "'");
  if (it->second.side != side)
    src.fail("action '" + name + "' has the wrong side for this slot");
  return it->second;
}

}  // namespace

std::vector<EntryRef> parse_stream(std::istream& in, const std::string& display_name,
                                   Workspace& ws) {
  Lines src{in, display_name};
  std::vector<EntryRef> entries;

  auto record = [&](const std::string& kind, const std::string& name, auto&& action) {
    EntryRef ref{kind, name, std::nullopt};
    try {
      action();
    } catch (const ValidationError& e) {
      ref.violation = e.violation();
    }
    entries.push_back(std::move(ref));
  };

  while (auto tokens = src.next()) {
    const std::string& kind = (*tokens)[0];
    if (kind == "monoid") {
      if (tokens->size() != 4) src.fail("usage: monoid <name> <size> <identity>");
      const std::string name = (*tokens)[1];
      const Elem size = parse_index(src, (*tokens)[2]);
      const Elem identity = parse_index(src, (*tokens)[3]);
      std::vector<Elem> table;
      table.reserve(static_cast<std::size_t>(size) * size);
      for (Elem i = 0; i < size; ++i) {
        auto row = parse_row(src, size);
        table.insert(table.end(), row.begin(), row.end());
      }
      record("monoid", name,
             [&] { ws.monoids[name] = validate_monoid(std::move(table), size, identity); });
    } else if (kind == "action") {
      if (tokens->size() != 5) src.fail("usage: action <name> <side> <actor> <carrier>");
      const std::string name = (*tokens)[1], side_tok = (*tokens)[2];
      const FiniteMonoid& actor = need_monoid(src, ws, (*tokens)[3]);
      const FiniteMonoid& carrier = need_monoid(src, ws, (*tokens)[4]);
      // rows are indexed by the A-side monoid in every variant: the actor for
      // left/right monoid actions, the carrier set for circ-style actions
      const bool is_set = side_tok == "set";
      if (!is_set && side_tok != "left" && side_tok != "right")
        src.fail("action side must be left, right or set");
      const Elem rows = is_set ? carrier.size : actor.size;
      const Elem cols = is_set ? actor.size : carrier.size;
      std::vector<Elem> table;
      table.reserve(static_cast<std::size_t>(rows) * cols);
      for (Elem r = 0; r < rows; ++r) {
        auto row = parse_row(src, cols);
        table.insert(table.end(), row.begin(), row.end());
      }
      if (is_set) {
        record("action", name, [&] {
          ws.set_actions[name] = validate_set_action(actor, carrier.size, std::move(table));
        });
      } else {
        const ActionSide side = side_tok == "left" ? ActionSide::left : ActionSide::right;
        record("action", name, [&] {
          ws.actions[name] = validate_monoid_action(side, actor, carrier, std::move(table));
        });
      }
    } else if (kind == "hom") {
      if (tokens->size() != 4) src.fail("usage: hom <name> <source> <target>");
      const std::string name = (*tokens)[1];
      const FiniteMonoid& source = need_monoid(src, ws, (*tokens)[2]);
      const FiniteMonoid& target = need_monoid(src, ws, (*tokens)[3]);
      auto map = parse_row(src, source.size);
      record("hom", name,
             [&] { ws.homs[name] = validate_hom(std::move(map), source, target); });
    } else if (kind == "xbsmod") {
      if (tokens->size() != 7)
        src.fail("usage: xbsmod <name> A=<m> K=<m> circ=<a> lambda=<a> rho=<a>");
      const std::string name = (*tokens)[1];
      const FiniteMonoid& a = need_monoid(src, ws, field(src, *tokens, 2, "A"));
      const FiniteMonoid& k = need_monoid(src, ws, field(src, *tokens, 3, "K"));
      const std::string circ_name = field(src, *tokens, 4, "circ");
      auto cit = ws.set_actions.find(circ_name);
      if (cit == ws.set_actions.end()) src.fail("unknown action '" + circ_name + "'");
      const SetAction& circ = cit->second;
      const MonoidAction& lambda =
          need_action(src, ws, field(src, *tokens, 5, "lambda"), ActionSide::left);
      const MonoidAction& rho =
          need_action(src, ws, field(src, *tokens, 6, "rho"), ActionSide::right);
      record("xbsmod", name,
             [&] { ws.xbsmods[name] = validate_xbsmod(a, k, circ, lambda, rho); });
    } else if (kind == "xsmod" || kind == "xmod") {
      if (tokens->size() != 6)
        src.fail("usage: " + kind + " <name> K=<m> A=<m> partial=<h> rho=<a>");
      const std::string name = (*tokens)[1];
      need_monoid(src, ws, field(src, *tokens, 2, "K"));
      need_monoid(src, ws, field(src, *tokens, 3, "A"));
      const std::string hom_name = field(src, *tokens, 4, "partial");
      auto hit = ws.homs.find(hom_name);
      if (hit == ws.homs.end()) src.fail("unknown hom '" + hom_name + "'");
      const MonoidHom& partial = hit->second;
      const MonoidAction& rho =
          need_action(src, ws, field(src, *tokens, 5, "rho"), ActionSide::right);
      if (kind == "xsmod")
        record("xsmod", name, [&] { ws.xsmods[name] = validate_xsmod(partial, rho); });
      else
        record("xmod", name, [&] { ws.xmods[name] = validate_xmod(partial, rho); });
    } else if (kind == "morphism") {
      if (tokens->size() != 6)
        src.fail("usage: morphism <name> from=<x> to=<x> kappa=<h> alpha=<h>");
      const std::string name = (*tokens)[1];
      const std::string from = field(src, *tokens, 2, "from");
      const std::string to = field(src, *tokens, 3, "to");
      auto fit = ws.xbsmods.find(from), tit = ws.xbsmods.find(to);
      if (fit == ws.xbsmods.end()) src.fail("unknown xbsmod '" + from + "'");
      if (tit == ws.xbsmods.end()) src.fail("unknown xbsmod '" + to + "'");
      auto kit = ws.homs.find(field(src, *tokens, 4, "kappa"));
      auto ait = ws.homs.find(field(src, *tokens, 5, "alpha"));
      if (kit == ws.homs.end() || ait == ws.homs.end()) src.fail("unknown hom");
      record("morphism", name, [&] {
        XbsMorphism m{kit->second, ait->second};
        ws.morphisms[name] = NamedMorphism{
            from, to, validate_morphism(m, fit->second, tit->second)};
      });
    } else if (kind == "weakmorphism") {
      if (tokens->size() != 5)
        src.fail("usage: weakmorphism <name> from=<x> to=<x> kappa=<h>");
      const std::string name = (*tokens)[1];
      const std::string from = field(src, *tokens, 2, "from");
      const std::string to = field(src, *tokens, 3, "to");
      auto fit = ws.xbsmods.find(from), tit = ws.xbsmods.find(to);
      if (fit == ws.xbsmods.end()) src.fail("unknown xbsmod '" + from + "'");
      if (tit == ws.xbsmods.end()) src.fail("unknown xbsmod '" + to + "'");
      auto kit = ws.homs.find(field(src, *tokens, 4, "kappa"));
      if (kit == ws.homs.end()) src.fail("unknown hom");
      const CrossedSemiBimodule& x = fit->second;
      const CrossedSemiBimodule& y = tit->second;
      std::vector<Elem> gamma;
      gamma.reserve(static_cast<std::size_t>(x.a.size) * x.k.size);
      for (Elem r = 0; r < x.a.size; ++r) {
        auto row = parse_row(src, x.k.size);
        gamma.insert(gamma.end(), row.begin(), row.end());
      }
      record("weakmorphism", name, [&] {
        WeakMorphism w{kit->second, x.k, y.k, std::move(gamma)};
        ws.weak_morphisms[name] =
            NamedWeakMorphism{from, to, validate_weak_morphism(w, x, y)};
      });
    } else {
      src.fail("unknown entry kind '" + kind + "'");
    }
  }
  return entries;
}

std::vector<EntryRef> parse_file(const std::filesystem::path& path, Workspace& ws) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, "cannot open file");
  return parse_stream(in, path.string(), ws);
}

std::vector<EntryRef> load_directory(const std::filesystem::path& dir, Workspace& ws) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<EntryRef> entries;
  for (const auto& f : files) {
    auto part = parse_file(f, ws);
    entries.insert(entries.end(), part.begin(), part.end());
  }
  return entries;
}

namespace {

void emit_rows(std::ostream& out, const std::vector<Elem>& table, std::size_t rows,
               std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) out << ' ';
      out << table[r * cols + c];
    }
    out << '\n';
  }
}

}  // namespace

void emit_monoid(std::ostream& out, const std::string& name, const FiniteMonoid& m) {
  out << "monoid " << name << ' ' << m.size << ' ' << m.identity << '\n';
  emit_rows(out, m.table, m.size, m.size);
}

void emit_action(std::ostream& out, const std::string& name, const std::string& actor,
                 const std::string& carrier, const MonoidAction& a) {
  out << "action " << name << ' ' << (a.side == ActionSide::left ? "left" : "right") << ' '
      << actor << ' ' << carrier << '\n';
  emit_rows(out, a.table, a.actor.size, a.carrier.size);
}

void emit_set_action(std::ostream& out, const std::string& name, const std::string& actor,
                     const std::string& carrier, const SetAction& a) {
  out << "action " << name << " set " << actor << ' ' << carrier << '\n';
  emit_rows(out, a.table, a.carrier_size, a.actor.size);
}

void emit_hom(std::ostream& out, const std::string& name, const std::string& source,
              const std::string& target, const MonoidHom& h) {
  out << "hom " << name << ' ' << source << ' ' << target << '\n';
  emit_rows(out, h.map, 1, h.map.size());
}

void emit_weak_morphism(std::ostream& out, const std::string& name, const std::string& from,
                        const std::string& to, const std::string& kappa,
                        const WeakMorphism& w) {
  out << "weakmorphism " << name << " from=" << from << " to=" << to << " kappa=" << kappa
      << '\n';
  emit_rows(out, w.gamma, w.kappa.source.size, w.k_source.size);
}

void emit_xbsmod_bundle(std::ostream& out, const std::string& name,
                        const CrossedSemiBimodule& x) {
  emit_monoid(out, name + "_A", x.a);
  emit_monoid(out, name + "_K", x.k);
  emit_set_action(out, name + "_circ", name + "_K", name + "_A", x.circ);
  emit_action(out, name + "_lambda", name + "_A", name + "_K", x.lambda);
  emit_action(out, name + "_rho", name + "_A", name + "_K", x.rho);
  out << "xbsmod " << name << " A=" << name << "_A K=" << name << "_K circ=" << name
      << "_circ lambda=" << name << "_lambda rho=" << name << "_rho\n";
}

void emit_xsmod_bundle(std::ostream& out, const std::string& name, const CrossedSemiModule& s) {
  emit_monoid(out, name + "_A", s.a);
  emit_monoid(out, name + "_K", s.k);
  emit_hom(out, name + "_partial", name + "_K", name + "_A", s.partial);
  emit_action(out, name + "_rho", name + "_A", name + "_K", s.rho);
  out << "xsmod " << name << " K=" << name << "_K A=" << name << "_A partial=" << name
      << "_partial rho=" << name << "_rho\n";
}

void emit_xmod_bundle(std::ostream& out, const std::string& name, const CrossedModule& m) {
  emit_monoid(out, name + "_A", m.a);
  emit_monoid(out, name + "_K", m.k);
  emit_hom(out, name + "_partial", name + "_K", name + "_A", m.partial);
  emit_action(out, name + "_rho", name + "_A", name + "_K", m.rho);
  out << "xmod " << name << " K=" << name << "_K A=" << name << "_A partial=" << name
      << "_partial rho=" << name << "_rho\n";
}

}  // namespace monocat::io
