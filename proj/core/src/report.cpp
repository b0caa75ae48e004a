#include "monocat/report.hpp"

#include <sstream>

namespace monocat {

namespace {

void render_witness(std::ostringstream& out, const std::vector<std::uint64_t>& w) {
  out << " (";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ',';
    out << w[i];
  }
  out << ')';
}

}  // namespace

std::string Violation::to_string() const {
  std::ostringstream out;
  out << check;
  if (!witness.empty()) render_witness(out, witness);
  if (!note.empty()) out << " [" << note << ']';
  return out.str();
}

ValidationError::ValidationError(Violation v)
    : std::runtime_error(v.to_string()), violation_(std::move(v)) {}

std::string CheckLine::render() const {
  std::ostringstream out;
  out << (pass ? "PASS " : "FAIL ") << name;
  if (!note.empty()) out << ' ' << note;
  if (!pass && !witness.empty()) render_witness(out, witness);
  return out.str();
}

bool CheckReport::all_pass() const {
  for (const auto& l : lines)
    if (!l.pass) return false;
  return true;
}

void CheckReport::add_pass(std::string name, std::string note) {
  lines.push_back(CheckLine{std::move(name), true, {}, std::move(note)});
}

void CheckReport::add_fail(std::string name, std::vector<std::uint64_t> witness,
                           std::string note) {
  lines.push_back(CheckLine{std::move(name), false, std::move(witness), std::move(note)});
}

void CheckReport::add(std::string name, const std::optional<Violation>& v, std::string note) {
  if (v)
    add_fail(std::move(name), v->witness, note.empty() ? v->note : std::move(note));
  else
    add_pass(std::move(name), std::move(note));
}

void CheckReport::append(const CheckReport& other) {
  lines.insert(lines.end(), other.lines.begin(), other.lines.end());
}

void CheckReport::require_all_pass() const {
  for (const auto& l : lines)
    if (!l.pass) throw ValidationError(Violation{l.name, l.witness, l.note});
}

std::string CheckReport::render() const {
  std::string out;
  for (const auto& l : lines) {
    out += l.render();
    out += '\n';
  }
  return out;
}

}  // namespace monocat
