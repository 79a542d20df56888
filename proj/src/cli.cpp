#include "deq/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>

#include "deq/dmap.hpp"
#include "deq/examples.hpp"
#include "deq/frt.hpp"
#include "deq/literal.hpp"

namespace deq::cli {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

// ---------------------------------------------------------------- lexing

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;
  std::string text;
};

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('\n', start), text.size());
    ++number;
    std::string line(text.substr(start, end - start));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = std::find_if_not(line.begin(), line.end(), is_space);
    if (first != line.end() && *first != '#') out.push_back({number, std::move(line)});
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::vector<Token> split_whitespace(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

Token trimmed(const std::string& line, std::size_t begin, std::size_t end) {
  while (begin < end && is_space(line[begin])) ++begin;
  while (end > begin && is_space(line[end - 1])) --end;
  return {line.substr(begin, end - begin), begin + 1};
}

// Without commas, whitespace separates entries only outside parentheses and
// where neither side is a binary operator; "1 - q 2" is two entries, "1 -2" too.
std::vector<Token> split_spaced(const std::string& line) {
  std::vector<Token> out;
  auto binary_before = [](char c) { return c == '+' || c == '-' || c == '*' || c == '/' || c == '^' || c == '('; };
  std::size_t i = 0, begin = std::string::npos;
  int depth = 0;
  while (i < line.size()) {
    if (!is_space(line[i])) {
      if (begin == std::string::npos) begin = i;
      depth += line[i] == '(';
      depth -= line[i] == ')';
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && is_space(line[j])) ++j;
    bool separates = begin != std::string::npos && j < line.size() && depth <= 0 && !binary_before(line[i - 1]);
    if (separates) {
      const char next = line[j];
      const bool spaced_minus = next == '-' && (j + 1 == line.size() || is_space(line[j + 1]));
      separates = !(next == '+' || next == '*' || next == '/' || next == '^' || next == ')' || spaced_minus);
    }
    if (separates) {
      out.push_back(trimmed(line, begin, i));
      begin = std::string::npos;
    }
    i = j;
  }
  if (begin != std::string::npos) out.push_back(trimmed(line, begin, line.size()));
  return out;
}

std::vector<Token> split_row(const Line& line) {
  if (line.text.find(',') == std::string::npos) return split_spaced(line.text);
  std::vector<Token> out;
  std::size_t begin = 0;
  for (;;) {
    const std::size_t comma = line.text.find(',', begin);
    const std::size_t end = comma == std::string::npos ? line.text.size() : comma;
    Token t = trimmed(line.text, begin, end);
    if (t.text.empty()) throw ParseError("empty entry", line.number, t.column);
    out.push_back(std::move(t));
    if (comma == std::string::npos) break;
    begin = comma + 1;
  }
  return out;
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(content_lines(text)) {}

  bool done() const { return next_ == lines_.size(); }

  const Line& take(const std::string& expected) {
    if (done()) throw ParseError("unexpected end of file, expected " + expected, last_line() + 1, 1);
    return lines_[next_++];
  }

  const Line* peek() const { return done() ? nullptr : &lines_[next_]; }

  // "keyword rest"; returns rest and its column
  Token keyword_line(const std::string& keyword) {
    const Line& l = take("'" + keyword + "'");
    const auto tokens = split_whitespace(l.text);
    if (tokens.front().text != keyword) {
      throw ParseError("expected '" + keyword + "', found '" + tokens.front().text + "'", l.number, tokens.front().column);
    }
    const std::size_t after = tokens.front().column - 1 + keyword.size();
    Token rest = trimmed(l.text, after, l.text.size());
    if (rest.text.empty()) throw ParseError("missing value after '" + keyword + "'", l.number, l.text.size() + 1);
    line_ = l.number;
    return rest;
  }

  std::size_t line() const { return line_; }
  std::size_t last_line() const { return lines_.empty() ? 0 : lines_.back().number; }


 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t line_ = 0;
};

std::size_t parse_count(const Token& t, std::size_t line, const std::string& what) {
  std::size_t value = 0;
  for (char c : t.text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || value > 1'000'000) {
      throw ParseError(what + " must be a positive integer", line, t.column);
    }
    value = value * 10 + static_cast<std::size_t>(c - '0');
  }
  if (value == 0) throw ParseError(what + " must be a positive integer", line, t.column);
  return value;
}

Field read_field(Reader& in) {
  const Token spec = in.keyword_line("field");
  try {
    return parse_field_spec(spec.text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), in.line(), spec.column);
  }
}

Matrix read_rows(Reader& in, const Field& field, std::size_t size) {
  Matrix m(field, size, size);
  for (std::size_t r = 0; r < size; ++r) {
    const Line& l = in.take("matrix row " + std::to_string(r + 1) + " of " + std::to_string(size));
    const auto tokens = split_row(l);
    if (tokens.size() != size) {
      throw ParseError("expected " + std::to_string(size) + " entries, found " + std::to_string(tokens.size()), l.number,
                       tokens.empty() ? 1 : tokens.front().column);
    }
    for (std::size_t c = 0; c < size; ++c) {
      try {
        m(r, c) = parse_scalar(field, tokens[c].text);
      } catch (const LiteralError& e) {
        throw ParseError(e.what(), l.number, tokens[c].column + e.column() - 1);
      } catch (const std::exception& e) {
        throw ParseError(e.what(), l.number, tokens[c].column);
      }
    }
  }
  return m;
}

void expect_end(Reader& in) {
  if (const Line* l = in.peek()) throw ParseError("unexpected content after the last row", l->number, 1);
}

// ---------------------------------------------------------------- reports

class Report {
 public:
  void line(const std::string& text) { text_ += text + "\n"; }
  void entry(const std::string& key, const std::string& value) {
    line(key + ": " + value);
    record(key, value);
  }
  void record(const std::string& key, const std::string& value) { kv_.emplace_back(key, value); }

  const std::string& text() const { return text_; }
  std::string sidecar() const {
    std::string out;
    for (const auto& [k, v] : kv_) out += k + "=" + v + "\n";
    return out;
  }

 private:
  std::string text_;
  std::vector<std::pair<std::string, std::string>> kv_;
};

const char* verdict(bool b) { return b ? "true" : "false"; }

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream o(path, std::ios::binary);
  if (!o || !(o << contents)) throw UsageError("cannot write " + path);
}

std::string with_path(const std::string& path, const ParseError& e) {
  return path + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": parse error: " +
         std::string(e.what()).substr(std::string(e.what()).find(": ") + 2);
}

std::string single_input(const RunConfig& c) {
  if (c.inputs.size() != 1) throw UsageError("expected exactly one input file");
  return c.inputs.front();
}

EndoPair load_matrix(const RunConfig& c) {
  const std::string path = single_input(c);
  EndoPair r = [&] {
    try {
      return parse_matrix_file(read_file(path));
    } catch (const ParseError& e) {
      throw UsageError(with_path(path, e));
    }
  }();
  if (c.field_spec && !(parse_field_spec(*c.field_spec) == r.field())) {
    throw UsageError("--field " + *c.field_spec + " disagrees with the file header field " + r.field().header());
  }
  return r;
}

void header(Report& rep, const std::string& name, const EndoPair& r) {
  rep.line("deq " + name + " 1");
  rep.entry("field", r.field().header());
  rep.entry("n", std::to_string(r.n()));
}

std::string tuple_text(const std::array<std::size_t, 6>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < 6; ++k) s += (k ? "," : "") + std::to_string(t[k] + 1);
  return s + ")";
}


void relation_lines(Report& rep, const FrtPresentation& p) {
  rep.entry("dim_I", std::to_string(p.relations.size()));
  rep.line("relations:");
  for (std::size_t k = 0; k < p.relations.size(); ++k) {
    rep.line("  " + p.relations[k] + " = 0");
    rep.record("relation." + std::to_string(k + 1), p.relations[k] + " = 0");
  }
}

// a negative D verdict ends frt and dmap early with the failing equation
bool report_d(Report& rep, const EndoPair& r) {
  const auto bad = first_d_violation(r);
  if (bad.has_value() == check_d(r)) throw std::logic_error("coordinate and operator D verdicts disagree");
  rep.entry("D", verdict(!bad));
  if (bad) rep.entry("D_violation", tuple_text(*bad));
  return !bad;
}

int check_command(const RunConfig& c, Report& rep) {
  const EndoPair r = load_matrix(c);
  header(rep, "check", r);
  const EquivalentForms forms = check_equivalent_forms(r);
  const bool d = report_d(rep, r);
  if (!forms.consistent() || forms.d != d) throw std::logic_error("equivalent forms disagree with the D verdict");
  rep.entry("QYBE", verdict(check_qybe(r)));
  rep.entry("Hopf", verdict(check_hopf(r)));
  rep.entry("pentagon", verdict(check_pentagon(r)));
  rep.entry("formT", verdict(forms.form_t));
  rep.entry("formU", verdict(forms.form_u));
  rep.entry("formW", verdict(forms.form_w));
  rep.entry("formW_printed", verdict(forms.form_w_printed));
  return d ? 0 : 1;
}

int frt_command(const RunConfig& c, Report& rep) {
  const EndoPair r = load_matrix(c);
  header(rep, "frt", r);
  if (!report_d(rep, r)) return 1;
  const FrtPresentation p = d_bialgebra(r);
  relation_lines(rep, p);
  const Coalgebra& g = p.generators();
  rep.entry("generators", std::to_string(g.dim()));
  for (std::size_t a = 0; a < g.dim(); ++a) {
    const std::string eps = "ε(" + g.labels()[a] + ") = " + g.counit()[a].to_string();
    rep.line("  " + sweedler(g, a) + "; " + eps);
    rep.record("generator." + std::to_string(a + 1), g.labels()[a]);
  }
  rep.entry("round_trip", verdict(p.round_trip));
  if (!p.round_trip) throw std::logic_error("canonical dimodule does not regenerate R");
  return 0;
}

int dmap_command(const RunConfig& c, Report& rep) {
  const EndoPair r = load_matrix(c);
  header(rep, "dmap", r);
  if (!report_d(rep, r)) return 1;
  const FrtPresentation p = d_bialgebra(r);
  relation_lines(rep, p);
  const DMap s = sigma_from_r(r);
  const Coalgebra& parent = *s.quotient->parent();
  const Coalgebra& quotient = *s.quotient->quotient();
  std::string basis;
  for (const auto& l : quotient.labels()) basis += (basis.empty() ? "" : " ") + l;
  rep.entry("quotient_dim", std::to_string(quotient.dim()));
  rep.entry("quotient_basis", basis);
  rep.line("sigma:");
  std::size_t nonzero = 0;
  for (std::size_t a = 0; a < parent.dim(); ++a)
    for (std::size_t g = 0; g < quotient.dim(); ++g) {
      if (s.sigma(a, g).is_zero()) continue;
      ++nonzero;
      rep.line("  σ(" + parent.labels()[a] + " ⊗ " + quotient.labels()[g] + ") = " + s.sigma(a, g).to_string());
    }
  rep.record("sigma_nonzero", std::to_string(nonzero));
  rep.entry("is_dmap", verdict(is_dmap(s)));
  rep.entry("kind", s.strong() ? "strong" : "weak");
  if (commutes_with_flip(r)) {
    const StrongDMap strong = strong_dmap_from_symmetric(r);
    rep.entry("symmetric_strong_dmap", "true");
    rep.entry("strong_dmap_roundtrip", verdict(r_sigma(strong.comodule, strong.dmap) == r));
  } else {
    rep.entry("symmetric_strong_dmap", "false");
  }
  if (invert(r)) {
    convolution_inverse_of_sigma(r);
    rep.entry("convolution_inverse", "invertible");
  } else {
    rep.entry("convolution_inverse", "singular");
  }
  return 0;
}

CayleyTable load_cayley(const std::string& path) {
  try {
    return parse_cayley_file(read_file(path));
  } catch (const ParseError& e) {
    throw UsageError(with_path(path, e));
  }
}

int dimodule_command(const RunConfig& c, Report& rep) {
  if (!c.group_path) throw UsageError("dimodule needs --group <cayley table file>");
  const CayleyTable g = load_cayley(*c.group_path);
  std::optional<ModuleFile> module;
  if (c.module_path) {
    try {
      module = parse_module_file(read_file(*c.module_path), g.labels);
    } catch (const ParseError& e) {
      throw UsageError(with_path(*c.module_path, e));
    }
  }
  Field field = module ? module->field : Field::rationals();
  if (c.field_spec) {
    const Field requested = parse_field_spec(*c.field_spec);
    if (module && !(requested == field)) throw UsageError("--field disagrees with the module file header");
    field = requested;
  }
  const auto h = std::make_shared<const FinBialgebra>(group_bialgebra(field, g));
  std::vector<Matrix> action, projectors;
  if (module) {
    if (const auto defect = module_defect(h->algebra(), module->action)) throw UsageError("not a module: " + *defect);
    action = module->action;
    projectors = module->projectors;
  } else {
    const GradedModule example = coset_graded_example(h, g);
    action = example.action();
    projectors = example.projectors();
  }
  const std::size_t d = action.front().rows(), m = g.labels.size();
  Matrix coaction(field, d * m, d);
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t v = 0; v < d; ++v)
      for (std::size_t l = 0; l < d; ++l) coaction(v * m + s, l) = projectors[s](v, l);
  if (const auto defect = comodule_defect(*h->coalgebra(), coaction)) {
    throw UsageError("grade projectors do not define a coaction: " + *defect);
  }
  const Comodule rho(h->coalgebra(), coaction);

  rep.line("deq dimodule 1");
  rep.entry("field", field.header());
  rep.entry("group_order", std::to_string(m));
  rep.entry("dim", std::to_string(d));
  rep.entry("source", module ? "module file" : "coset example");
  rep.line("compatibility:");
  bool all = true;
  for (std::size_t x = 0; x < m; ++x) {
    const bool ok = compatible_operator(action[x], rho);
    all = all && ok;
    rep.line("  " + g.labels[x] + ": " + verdict(ok));
    rep.record("compatible." + g.labels[x], verdict(ok));
  }
  rep.entry("compatible", verdict(all));
  if (!all) return 1;
  const LongDimodule dimodule(h, action, rho);
  const EndoPair r = r_from_dimodule(dimodule);
  rep.line("R:");
  rep.line(print_matrix_file(r).substr(0, print_matrix_file(r).size() - 1));
  rep.entry("D", verdict(check_d(r)));
  rep.entry("QYBE", verdict(check_qybe(r)));
  if (c.r_output) write_file(*c.r_output, print_matrix_file(r));
  return 0;
}

int classify_command(const RunConfig& c, Report& rep) {
  CensusConfig config;
  config.n = c.n;
  config.p = c.p;
  config.filter = c.filter;
  config.orbits = c.orbits;
  config.limit = c.limit;
  config.workers = c.workers;
  if (c.budget) config.budget = *c.budget;
  const CensusReport census = enumerate_solutions(config);
  const std::string text = format_report(census);
  rep.line(text.substr(0, text.size() - 1));
  rep.record("n", std::to_string(census.n));
  rep.record("p", std::to_string(census.p));
  rep.record("filter", to_string(census.filter));
  rep.record("candidates", census.candidates.get_str());
  rep.record("solutions", std::to_string(census.solutions));
  rep.record("bijective", std::to_string(census.bijective));
  rep.record("symmetric", std::to_string(census.symmetric));
  rep.record("qybe", std::to_string(census.qybe));
  rep.record("selected", std::to_string(census.selected));
  if (census.orbits) rep.record("orbits", std::to_string(census.orbits->size()));
  rep.record("oracle_sample", std::to_string(census.sampled));
  rep.record("listed", std::to_string(census.listed.size()));
  return 0;
}

int examples_command(const RunConfig& c, Report& rep) {
  std::error_code ec;
  std::filesystem::create_directories(c.directory, ec);
  if (ec) throw UsageError("cannot create " + c.directory + ": " + ec.message());
  rep.line("deq examples 1");
  const auto fixtures = example_fixtures();
  rep.entry("files", std::to_string(fixtures.size()));
  for (const auto& [name, contents] : fixtures) {
    write_file((std::filesystem::path(c.directory) / name).string(), contents);
    rep.line("  " + name);
    rep.record("file", name);
  }
  return 0;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng) {
  return f.from_integer(static_cast<long long>(rng() % f.characteristic()));
}

Matrix random_matrix(const Field& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

int props_command(const RunConfig& c, Report& rep) {
  if (c.n < 1 || c.n > 3) throw UsageError("props needs 1 <= n <= 3");
  const Field f = Field::prime(c.p);
  const Coalgebra comatrix_n = comatrix(f, c.n);
  std::mt19937_64 rng(c.seed);
  std::size_t coideal = 0, annihilation = 0, forms = 0, product = 0, solutions = 0;
  for (std::size_t t = 0; t < c.samples; ++t) {
    const EndoPair r(random_matrix(f, c.n * c.n, c.n * c.n, rng));
    const bool d = check_d(r);
    solutions += d;
    coideal += !coideal_identity_holds(obstructions(r), comatrix_n);
    annihilation += annihilation_check(r) != d;
    forms += !check_equivalent_forms(r).consistent();
    const Matrix a = random_matrix(f, c.n, c.n, rng), b = random_matrix(f, c.n, c.n, rng);
    product += check_d(product_solution(a, b)) != (a * b == b * a);
  }
  rep.line("deq props 1");
  rep.entry("field", f.header());
  rep.entry("n", std::to_string(c.n));
  rep.entry("seed", std::to_string(c.seed));
  rep.entry("samples", std::to_string(c.samples));
  rep.entry("d_solutions", std::to_string(solutions));
  rep.entry("coideal_identity_failures", std::to_string(coideal));
  rep.entry("annihilation_failures", std::to_string(annihilation));
  rep.entry("equivalent_forms_failures", std::to_string(forms));
  rep.entry("product_law_failures", std::to_string(product));
  return coideal + annihilation + forms + product == 0 ? 0 : 1;
}

std::string coefficient_table(const EndoPair& r) {
  std::string out = "field " + r.field().header() + "\ndim " + std::to_string(r.n()) + "\n";
  const std::size_t n = r.n();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
          if (r.x(u, v, j, i).is_zero()) continue;
          out += "x_{" + std::to_string(u + 1) + std::to_string(v + 1) + "}^{" + std::to_string(j + 1) +
                 std::to_string(i + 1) + "} = " + r.x(u, v, j, i).to_string() + "\n";
        }
  return out;
}

}  // namespace

Field parse_field_spec(std::string_view spec) {
  const std::string s = trimmed(std::string(spec), 0, spec.size()).text;
  if (s == "Q") return Field::rationals();
  if (s.rfind("QFUN", 0) == 0 && (s.size() == 4 || is_space(s[4]))) {
    std::vector<std::string> vars;
    const std::string rest = s.substr(4);
    std::size_t begin = 0;
    for (;;) {
      const std::size_t comma = rest.find(',', begin);
      const std::size_t end = comma == std::string::npos ? rest.size() : comma;
      vars.push_back(trimmed(rest, begin, end).text);
      if (comma == std::string::npos) break;
      begin = comma + 1;
    }
    return Field::rational_functions(std::move(vars));
  }
  if (s.rfind("F", 0) == 0) {
    const std::string digits = trimmed(s, 1, s.size()).text;
    if (!digits.empty() && digits.size() <= 9 &&
        std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      return Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
    }
  }
  throw std::invalid_argument("unknown field '" + s + "'; expected Q, F <p> or QFUN <vars>");
}

EndoPair parse_matrix_file(std::string_view text) {
  Reader in(text);
  const Field field = read_field(in);
  const Token dim = in.keyword_line("dim");
  const std::size_t n = parse_count(dim, in.line(), "dim");
  if (n > 16) throw ParseError("dim must be at most 16", in.line(), dim.column);
  Matrix m = read_rows(in, field, n * n);
  expect_end(in);
  return EndoPair(std::move(m));
}

std::string print_matrix_file(const EndoPair& r) {
  std::string out = "field " + r.field().header() + "\ndim " + std::to_string(r.n()) + "\n";
  const Matrix& m = r.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? ", " : "") + m(i, j).to_string();
    out += "\n";
  }
  return out;
}

CayleyTable parse_cayley_file(std::string_view text) {
  Reader in(text);
  const Token order = in.keyword_line("order");
  const std::size_t m = parse_count(order, in.line(), "order");
  const Token labels = in.keyword_line("labels");
  const std::size_t labels_line = in.line();
  CayleyTable g;
  std::map<std::string, std::size_t> index;
  for (auto t : split_whitespace(labels.text)) {
    if (!index.emplace(t.text, g.labels.size()).second) {
      throw ParseError("duplicate label '" + t.text + "'", labels_line, labels.column + t.column - 1);
    }
    g.labels.push_back(t.text);
  }
  if (g.labels.size() != m) {
    throw ParseError("expected " + std::to_string(m) + " labels, found " + std::to_string(g.labels.size()), labels_line,
                     labels.column);
  }
  for (std::size_t a = 0; a < m; ++a) {
    const Line& l = in.take("table row " + std::to_string(a + 1));
    const auto tokens = split_whitespace(l.text);
    if (tokens.size() != m) {
      throw ParseError("expected " + std::to_string(m) + " entries, found " + std::to_string(tokens.size()), l.number,
                       tokens.front().column);
    }
    std::vector<std::size_t> row;
    for (const auto& t : tokens) {
      const auto it = index.find(t.text);
      if (it == index.end()) throw ParseError("unknown label '" + t.text + "'", l.number, t.column);
      row.push_back(it->second);
    }
    g.table.push_back(std::move(row));
  }
  expect_end(in);
  return g;
}

std::string print_cayley_file(const CayleyTable& g) {
  std::string out = "order " + std::to_string(g.labels.size()) + "\nlabels";
  for (const auto& l : g.labels) out += " " + l;
  out += "\n";
  for (const auto& row : g.table) {
    for (std::size_t b = 0; b < row.size(); ++b) out += (b ? " " : "") + g.labels[row[b]];
    out += "\n";
  }
  return out;
}

ModuleFile parse_module_file(std::string_view text, const std::vector<std::string>& group_labels) {
  Reader in(text);
  const Field field = read_field(in);
  const Token dim = in.keyword_line("dim");
  const std::size_t d = parse_count(dim, in.line(), "dim");
  if (d > 64) throw ParseError("dim must be at most 64", in.line(), dim.column);
  std::vector<std::optional<Matrix>> action(group_labels.size()), grade(group_labels.size());
  while (const Line* l = in.peek()) {
    const auto tokens = split_whitespace(l->text);
    const std::size_t number = l->number;
    if (tokens.size() != 2 || (tokens[0].text != "action" && tokens[0].text != "grade")) {
      throw ParseError("expected 'action <label>' or 'grade <label>'", number, tokens.front().column);
    }
    const auto it = std::find(group_labels.begin(), group_labels.end(), tokens[1].text);
    if (it == group_labels.end()) throw ParseError("unknown group element '" + tokens[1].text + "'", number, tokens[1].column);
    auto& slot = (tokens[0].text == "action" ? action : grade)[static_cast<std::size_t>(it - group_labels.begin())];
    if (slot) throw ParseError("duplicate " + tokens[0].text + " block for " + tokens[1].text, number, tokens[0].column);
    in.take("block header");
    slot = read_rows(in, field, d);
  }
  ModuleFile out{field, {}, {}};
  for (std::size_t x = 0; x < group_labels.size(); ++x) {
    if (!action[x]) throw ParseError("missing action block for " + group_labels[x], in.last_line() + 1, 1);
    out.action.push_back(*action[x]);
    out.projectors.push_back(grade[x] ? *grade[x] : Matrix(field, d, d));
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> example_fixtures() {
  const Field q = Field::rationals();
  const Field abc = Field::rational_functions({"a", "b", "c"});
  const Field qfun = Field::rational_functions({"q"});
  const std::vector<std::pair<std::string, EndoPair>> matrices = {
      {"identity.txt", EndoPair::identity(q, 2)},
      {"jordan.txt", jordan_example(abc)},
      {"jordan-unit.txt", jordan_example(q, "1", "1", "1")},
      {"r_q.txt", r_q_example(qfun)},
      {"r_q-3.txt", r_q_example(q, "3")},
      {"projection.txt", projection_example(q)},
      {"yb-operator.txt", yb_example(qfun)},
      {"yb-operator-q2.txt", yb_example(q, "2")},
      {"s3-graded.txt", s3_graded_example(q)},
  };
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [name, r] : matrices) {
    std::string text = print_matrix_file(r);
    if (!(parse_matrix_file(text) == r)) throw std::logic_error(name + " does not survive a print/parse round trip");
    out.emplace_back(name, std::move(text));
  }
  out.emplace_back("jordan-coefficients.txt", coefficient_table(jordan_example(abc)));
  out.emplace_back("s3.cayley", print_cayley_file(symmetric_group(3)));
  return out;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report rep;
  int status = 0;
  try {
    switch (config.subcommand) {
      case Subcommand::check: status = check_command(config, rep); break;
      case Subcommand::frt: status = frt_command(config, rep); break;
      case Subcommand::dmap: status = dmap_command(config, rep); break;
      case Subcommand::dimodule: status = dimodule_command(config, rep); break;
      case Subcommand::classify: status = classify_command(config, rep); break;
      case Subcommand::examples: status = examples_command(config, rep); break;
      case Subcommand::props: status = props_command(config, rep); break;
    }
    if (config.output) write_file(*config.output, rep.text());
    else out << rep.text();
    if (config.sidecar) write_file(*config.sidecar, rep.sidecar());
  } catch (const BudgetExceeded& e) {
    err << "deq: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "deq: error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr) {
      err << "deq: internal error: " << e.what() << "\n";
      return 3;
    }
    err << "deq: error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "deq: error: " << e.what() << "\n";
    return 2;
  }
  if (config.verbosity > 0) err << "deq: exit status " << status << "\n";
  return status;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solver for the D-equation R12 R23 = R23 R12 and its companions", "deq"};
  app.require_subcommand(1);
  RunConfig c;
  std::string input;
  std::string filter = "all";
  std::size_t props_n = 2;
  std::uint32_t props_p = 5;
  app.add_flag("-v,--verbose", c.verbosity, "Print progress to standard error");

  auto reporting = [&](CLI::App* s) {
    s->add_option("-o,--out", c.output, "Write the report to this file");
    s->add_option("--sidecar", c.sidecar, "Write key=value results to this file");
  };
  auto matrix_input = [&](CLI::App* s) {
    s->add_option("matrix", input, "Matrix file")->required();
    s->add_option("--field", c.field_spec, "Expected field: Q, 'F <p>' or 'QFUN <vars>'");
    reporting(s);
  };

  CLI::App* check = app.add_subcommand("check", "D, QYBE, Hopf, pentagon and equivalent-form verdicts");
  matrix_input(check);
  CLI::App* frt = app.add_subcommand("frt", "Presentation of the universal bialgebra D(R)");
  matrix_input(frt);
  CLI::App* dmap = app.add_subcommand("dmap", "The D-map sigma attached to R");
  matrix_input(dmap);

  CLI::App* dimodule = app.add_subcommand("dimodule", "Compatibility of a graded group module and the R it induces");
  dimodule->add_option("--group", c.group_path, "Cayley table file")->required();
  dimodule->add_option("--module", c.module_path, "Graded module file; the coset example when absent");
  dimodule->add_option("--field", c.field_spec, "Field for the coset example");
  dimodule->add_option("--emit-r", c.r_output, "Write the regenerated R as a matrix file");
  reporting(dimodule);

  CLI::App* classify = app.add_subcommand("classify", "Census of D-solutions over F_p");
  classify->add_option("--n", c.n, "Dimension of M")->capture_default_str();
  classify->add_option("--p", c.p, "Prime characteristic")->capture_default_str();
  classify->add_option("--filter", filter, "all, bijective, symmetric or qybe")
      ->check(CLI::IsMember({"all", "bijective", "symmetric", "qybe"}))
      ->capture_default_str();
  classify->add_flag("--orbits", c.orbits, "Reduce modulo conjugation by GL_n");
  classify->add_option("--limit", c.limit, "List at most this many entries");
  classify->add_option("--workers", c.workers, "Worker threads; 0 picks the hardware count");
  classify->add_option("--budget", c.budget, "Candidate budget; overrides DEQ_CANDIDATE_BUDGET");
  reporting(classify);

  CLI::App* examples = app.add_subcommand("examples", "Write the example fixtures as files");
  examples->add_option("dir", c.directory, "Output directory")->capture_default_str();
  reporting(examples);

  CLI::App* props = app.add_subcommand("props", "Randomized identity checks over F_p");
  props->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  props->add_option("--samples", c.samples, "Number of random operators")->capture_default_str();
  props->add_option("--n", props_n, "Dimension of M")->capture_default_str();
  props->add_option("--p", props_p, "Prime characteristic")->capture_default_str();
  reporting(props);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  const std::map<std::string, Subcommand> by_name = {
      {"check", Subcommand::check},       {"frt", Subcommand::frt},           {"dmap", Subcommand::dmap},
      {"dimodule", Subcommand::dimodule}, {"classify", Subcommand::classify}, {"examples", Subcommand::examples},
      {"props", Subcommand::props}};
  c.subcommand = by_name.at(name);
  if (!input.empty()) c.inputs = {input};
  c.filter = parse_filter(filter);
  if (c.subcommand == Subcommand::props) {
    c.n = props_n;
    c.p = props_p;
  }
  if (c.field_spec) {
    try {
      parse_field_spec(*c.field_spec);
    } catch (const std::invalid_argument& e) {
      err << "deq: error: --field: " << e.what() << "\n";
      return 2;
    }
  }
  return run(c, out, err);
}

}  // namespace deq::cli
