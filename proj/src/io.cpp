#include "assocloc/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "assocloc/error.hpp"

namespace assocloc {

namespace {

struct Line {
  int number = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    Line l{number, {}};
    for (std::string tok; in >> tok;) l.tokens.push_back(tok);
    if (!l.tokens.empty()) out.push_back(std::move(l));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
  throw Error(ErrorCode::Parse, source + ":" + std::to_string(line) + ": " + msg);
}

std::uint64_t parse_uint(const std::string& tok, const std::string& source, int line,
                         const char* what) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    fail(source, line, std::string("expected ") + what + ", got '" + tok + "'");
  return v;
}

std::uint64_t parse_key(const std::string& tok, const std::string& key, const std::string& source,
                        int line) {
  if (tok.rfind(key + "=", 0) != 0) fail(source, line, "expected " + key + "=<value>");
  return parse_uint(tok.substr(key.size() + 1), source, line, key.c_str());
}

Vec parse_coords(const Line& l, std::size_t from, std::size_t n, std::uint32_t p,
                 const std::string& source) {
  if (l.tokens.size() != from + n)
    fail(source, l.number, "expected " + std::to_string(n) + " coordinates, got " +
                               std::to_string(l.tokens.size() - std::min(from, l.tokens.size())));
  Vec v;
  for (std::size_t k = from; k < l.tokens.size(); ++k) {
    const auto x = parse_uint(l.tokens[k], source, l.number, "coordinate");
    if (x >= p) fail(source, l.number, "coordinate " + l.tokens[k] + " is not reduced mod p");
    v.push_back(static_cast<Elem>(x));
  }
  return v;
}

void write_vec(std::ostream& out, std::span<const Elem> v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Parse, path + ": cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

RawAlgebra parse_algebra(std::string_view text, const std::string& source) {
  const auto lines = tokenize(text);
  if (lines.empty()) fail(source, 1, "empty algebra file");
  const Line& h = lines.front();
  if (h.tokens.size() != 4 || h.tokens[0] != "algebra")
    fail(source, h.number, "expected 'algebra <name> p=<prime> dim=<n>'");
  RawAlgebra raw;
  raw.name = h.tokens[1];
  const auto p = parse_key(h.tokens[2], "p", source, h.number);
  if (p > 0xffffffffu || !is_prime(static_cast<std::uint32_t>(p)))
    throw Error(ErrorCode::NotPrime, source + ":" + std::to_string(h.number) + ": p=" +
                                         std::to_string(p) + " is not prime");
  raw.p = static_cast<std::uint32_t>(p);
  raw.dim = parse_key(h.tokens[3], "dim", source, h.number);
  if (raw.dim == 0) fail(source, h.number, "dim must be positive");
  const std::size_t n = raw.dim;

  raw.products.assign(n * n, Vec{});
  raw.product_lines.assign(n * n, 0);
  raw.source = source;
  bool have_unit = false;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& l = lines[li];
    const std::string& kw = l.tokens[0];
    if (kw == "basis") {
      if (!raw.basis_names.empty()) fail(source, l.number, "duplicate basis line");
      if (l.tokens.size() != n + 1)
        fail(source, l.number, "expected " + std::to_string(n) + " basis labels");
      raw.basis_names.assign(l.tokens.begin() + 1, l.tokens.end());
    } else if (kw == "unit") {
      if (have_unit) fail(source, l.number, "duplicate unit line");
      raw.unit = parse_coords(l, 1, n, raw.p, source);
      have_unit = true;
    } else if (kw == "mul") {
      if (l.tokens.size() < 4 || l.tokens[3] != ":")
        fail(source, l.number, "expected 'mul <i> <j> : <coords>'");
      const auto i = parse_uint(l.tokens[1], source, l.number, "index");
      const auto j = parse_uint(l.tokens[2], source, l.number, "index");
      if (i < 1 || i > n || j < 1 || j > n) fail(source, l.number, "index out of range 1..dim");
      const std::size_t idx = (i - 1) * n + (j - 1);
      if (raw.product_lines[idx] != 0)
        fail(source, l.number, "duplicate product for (" + l.tokens[1] + "," + l.tokens[2] +
                                   "), first at line " + std::to_string(raw.product_lines[idx]));
      raw.products[idx] = parse_coords(l, 4, n, raw.p, source);
      raw.product_lines[idx] = l.number;
    } else {
      fail(source, l.number, "unknown keyword '" + kw + "'");
    }
  }
  if (!have_unit) fail(source, h.number, "missing unit line");
  for (std::size_t idx = 0; idx < n * n; ++idx)
    if (raw.product_lines[idx] == 0)
      fail(source, h.number, "missing product (" + std::to_string(idx / n + 1) + "," +
                                 std::to_string(idx % n + 1) + ")");
  return raw;
}

Algebra read_algebra(std::string_view text, const std::string& source) {
  return Algebra::validate(parse_algebra(text, source));
}

Algebra load_algebra(const std::string& path) { return read_algebra(read_file(path), path); }

ModuleRep read_module(std::string_view text, const Algebra& a, const std::string& source) {
  const auto lines = tokenize(text);
  if (lines.empty()) fail(source, 1, "empty module file");
  const Line& h = lines.front();
  if (h.tokens.size() != 5 || h.tokens[0] != "module" || h.tokens[2] != "over")
    fail(source, h.number, "expected 'module <name> over <algebra> dim=<m>'");
  if (h.tokens[3] != a.name())
    fail(source, h.number, "module is over '" + h.tokens[3] + "' but the algebra is '" +
                               a.name() + "'");
  const std::size_t m = parse_key(h.tokens[4], "dim", source, h.number);
  const std::size_t n = a.dim();
  const PrimeField f = a.field();

  std::vector<Mat> action(n);
  std::vector<bool> seen(n, false);
  std::size_t li = 1;
  while (li < lines.size()) {
    const Line& l = lines[li];
    if (l.tokens.size() != 2 || l.tokens[0] != "act") fail(source, l.number, "expected 'act <i>'");
    const auto i = parse_uint(l.tokens[1], source, l.number, "index");
    if (i < 1 || i > n) fail(source, l.number, "act index out of range 1..dim(A)");
    if (seen[i - 1]) fail(source, l.number, "duplicate act block " + l.tokens[1]);
    seen[i - 1] = true;
    Mat x(f, m, m);
    for (std::size_t r = 0; r < m; ++r) {
      if (++li >= lines.size()) fail(source, l.number, "act block ends early");
      const Vec row = parse_coords(lines[li], 0, m, f.p(), source);
      std::copy(row.begin(), row.end(), x.row_span(r).begin());
    }
    action[i - 1] = std::move(x);
    ++li;
  }
  for (std::size_t i = 0; i < n; ++i)
    if (!seen[i]) fail(source, h.number, "missing act block " + std::to_string(i + 1));
  return validate_module(a, std::move(action), h.tokens[1]);
}

ModuleRep load_module(const std::string& path, const Algebra& a) {
  return read_module(read_file(path), a, path);
}

std::string serialize_algebra(const Algebra& a) {
  std::ostringstream out;
  const std::size_t n = a.dim();
  out << "algebra " << a.name() << " p=" << a.field().p() << " dim=" << n << "\n";
  out << "basis";
  for (const auto& b : a.basis_names()) out << " " << b;
  out << "\nunit ";
  write_vec(out, a.unit());
  out << "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      out << "mul " << i + 1 << " " << j + 1 << " : ";
      write_vec(out, a.product(i, j));
      out << "\n";
    }
  return out.str();
}

std::string serialize_module(const ModuleRep& m) {
  std::ostringstream out;
  out << "module " << m.name << " over " << m.algebra.name() << " dim=" << m.dim << "\n";
  for (std::size_t i = 0; i < m.action.size(); ++i) {
    out << "act " << i + 1 << "\n";
    for (std::size_t r = 0; r < m.dim; ++r) {
      write_vec(out, m.action[i].row_span(r));
      out << "\n";
    }
  }
  return out.str();
}

}  // namespace assocloc
