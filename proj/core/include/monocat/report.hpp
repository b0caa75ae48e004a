#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace monocat {

/// A single violated law: which check failed and at which witness tuple.
/// Re-evaluating the law at the witness must reproduce the failure.
struct Violation {
  std::string check;                        // kebab-case law name, e.g. "not-associative"
  std::vector<std::uint64_t> witness = {};  // element indices, in quantifier order
  std::string note = {};                    // optional extra context

  std::string to_string() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(Violation v);
  const Violation& violation() const { return violation_; }

 private:
  Violation violation_;
};

/// One line of a verification report.
struct CheckLine {
  std::string name;
  bool pass = false;
  std::vector<std::uint64_t> witness = {};  // set on failure
  std::string note = {};                    // e.g. associativity method

  std::string render() const;  // "PASS name [note]" / "FAIL name [note] (w,...)"
};

struct CheckReport {
  std::vector<CheckLine> lines;

  bool all_pass() const;
  void add_pass(std::string name, std::string note = {});
  void add_fail(std::string name, std::vector<std::uint64_t> witness, std::string note = {});
  void add(std::string name, const std::optional<Violation>& v, std::string note = {});
  void append(const CheckReport& other);
  /// Throws ValidationError on the first failing line.
  void require_all_pass() const;

  std::string render() const;  // newline-terminated lines, in insertion order
};

}  // namespace monocat
