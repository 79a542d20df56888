#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "deq/classify.hpp"
#include "deq/dimodule.hpp"
#include "deq/tensor_ops.hpp"

namespace deq::cli {

/// Malformed input file; line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Field header text: "Q", "F 5" or "QFUN a,b,c".
Field parse_field_spec(std::string_view spec);

/// Matrix file:
///
///   field Q | field F <p> | field QFUN <var,...>
///   dim <n>
///   n² rows of n² scalar literals
///
/// A row is split on commas when it contains one. Otherwise whitespace
/// separates entries except inside parentheses or next to a binary
/// operator, so "1 q - 2 0" has three entries. Blank lines and lines
/// starting with '#' are ignored.
EndoPair parse_matrix_file(std::string_view text);
/// Comma-separated rows; parse_matrix_file inverts it exactly.
std::string print_matrix_file(const EndoPair& r);

/// Cayley table file:
///
///   order <m>
///   labels <l1> ... <lm>
///   m rows of m labels; entry b of row a is the label of a*b
CayleyTable parse_cayley_file(std::string_view text);
std::string print_cayley_file(const CayleyTable& g);

/// Graded module file over a group with the given labels:
///
///   field ...
///   dim <d>
///   action <label>   followed by d rows, one block per group element
///   grade <label>    followed by d rows, the projector onto M_label
///
/// Grade blocks are optional; a missing one is the zero projector.
struct ModuleFile {
  Field field;
  std::vector<Matrix> action;
  std::vector<Matrix> projectors;
};
ModuleFile parse_module_file(std::string_view text, const std::vector<std::string>& group_labels);

enum class Subcommand { check, frt, dmap, dimodule, classify, examples, props };

struct RunConfig {
  Subcommand subcommand = Subcommand::check;
  /// Overrides the default field where no file supplies one; must agree
  /// with a matrix file's header otherwise.
  std::optional<std::string> field_spec;
  std::vector<std::string> inputs;
  /// Report destination; standard output when empty.
  std::optional<std::string> output;
  std::optional<std::string> sidecar;
  int verbosity = 0;
  std::optional<std::uint64_t> budget;
  bool orbits = false;

  // dimodule
  std::optional<std::string> group_path;
  std::optional<std::string> module_path;
  std::optional<std::string> r_output;

  // classify
  std::size_t n = 2;
  std::uint32_t p = 2;
  CensusFilter filter = CensusFilter::all;
  std::optional<std::size_t> limit;
  unsigned workers = 0;

  // examples
  std::string directory = ".";

  // props
  std::uint64_t seed = 1;
  std::size_t samples = 200;
};

/// Exit codes: 0 success, 1 negative mathematical verdict, 2 usage or input
/// error (including an exceeded candidate budget), 3 internal inconsistency.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line into a RunConfig and runs it.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Fixture files written by the examples subcommand, as (file name, contents).
std::vector<std::pair<std::string, std::string>> example_fixtures();

}  // namespace deq::cli
