#include "uncertainty/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "uncertainty/errors.hpp"

namespace uncertainty {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Parses a signed decimal prefix of `s`; advances `s` past it.
double take_number(std::string_view& s, std::string_view whole) {
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr == s.data()) {
    throw ParseError("malformed complex number '" + std::string(whole) + "'");
  }
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return negative ? -value : value;
}

bool is_imag_unit(char c) { return c == 'j' || c == 'i'; }

cd checked(cd z, std::string_view whole) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw ParseError("non-finite value '" + std::string(whole) + "'");
  }
  return z;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> parts;
  std::size_t pos = 0;
  while (true) {
    const auto next = line.find(sep, pos);
    parts.push_back(line.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return parts;
}

std::size_t parse_count(std::string_view s, std::string_view whole) {
  s = trim(s);
  std::size_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("malformed index set spec '" + std::string(whole) + "'");
  }
  return v;
}

cd entry_from_json(const json& e) {
  double re = 0.0;
  double im = 0.0;
  if (e.is_number()) {
    re = e.get<double>();
  } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
    re = e[0].get<double>();
    im = e[1].get<double>();
  } else if (e.is_string()) {
    return parse_complex(e.get<std::string>());
  } else {
    throw ParseError("matrix entry must be [re, im], a number, or a complex string");
  }
  return checked({re, im}, e.dump());
}

std::size_t count_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw ParseError(std::string("missing or invalid field '") + key + "'");
  }
  return j[key].get<std::size_t>();
}

}  // namespace

cd parse_complex(std::string_view text) {
  const std::string_view whole = trim(text);
  std::string_view s = whole;
  if (s.empty()) throw ParseError("empty complex number");
  // Pure imaginary unit forms: "j", "-j".
  if (s == "j" || s == "+j" || s == "i") return {0.0, 1.0};
  if (s == "-j" || s == "-i") return {0.0, -1.0};

  const double first = take_number(s, whole);
  if (s.empty()) return checked({first, 0.0}, whole);
  if (s.size() == 1 && is_imag_unit(s.front())) return checked({0.0, first}, whole);
  if (s.front() != '+' && s.front() != '-') throw ParseError("malformed complex number '" + std::string(whole) + "'");
  double second = 0.0;
  if (s.size() == 2 && is_imag_unit(s[1])) {
    second = s.front() == '-' ? -1.0 : 1.0;
    s.remove_prefix(1);
  } else {
    second = take_number(s, whole);
  }
  if (s.size() != 1 || !is_imag_unit(s.front())) {
    throw ParseError("malformed complex number '" + std::string(whole) + "'");
  }
  return checked({first, second}, whole);
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x == 0.0 ? 0.0 : x);
  return std::string(buf, ptr);
}

std::string format_complex(cd z) {
  std::string out = format_real(z.real());
  if (z.imag() == 0.0) return out;
  const std::string im = format_real(z.imag());
  if (im.front() != '-') out += '+';
  out += im;
  out += 'j';
  return out;
}

ComplexMatrix read_matrix_csv(std::istream& in) {
  std::vector<cd> entries;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string line;
  while (std::getline(in, line)) {
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const auto cells = split(view, ',');
    if (rows == 0) {
      cols = cells.size();
    } else if (cells.size() != cols) {
      throw ParseError("CSV row " + std::to_string(rows + 1) + " has " + std::to_string(cells.size()) +
                       " entries, expected " + std::to_string(cols));
    }
    for (auto cell : cells) entries.push_back(parse_complex(cell));
    ++rows;
  }
  if (rows == 0) throw ParseError("CSV matrix is empty");
  return ComplexMatrix(rows, cols, std::move(entries));
}

void write_matrix_csv(std::ostream& out, const ComplexMatrix& a) {
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out << ',';
      out << format_complex(a(i, j));
    }
    out << '\n';
  }
}

ComplexVector read_vector_csv(std::istream& in) {
  const ComplexMatrix m = read_matrix_csv(in);
  if (m.cols() != 1 && m.rows() != 1) throw ParseError("CSV vector must be a single row or column");
  return ComplexVector(m.entries().begin(), m.entries().end());
}

void write_vector_csv(std::ostream& out, std::span<const cd> x) {
  for (cd z : x) out << format_complex(z) << '\n';
}

json matrix_to_json(const ComplexMatrix& a) {
  json entries = json::array();
  for (cd z : a.entries()) entries.push_back({z.real(), z.imag()});
  return {{"rows", a.rows()}, {"cols", a.cols()}, {"entries", std::move(entries)}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("matrix JSON must be an object");
  const std::size_t rows = count_field(j, "rows");
  const std::size_t cols = count_field(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("matrix JSON needs an 'entries' array");
  const json& e = j["entries"];
  if (e.size() != rows * cols) {
    throw ParseError("matrix JSON has " + std::to_string(e.size()) + " entries, expected " +
                     std::to_string(rows * cols));
  }
  std::vector<cd> entries;
  entries.reserve(e.size());
  for (const auto& v : e) entries.push_back(entry_from_json(v));
  return ComplexMatrix(rows, cols, std::move(entries));
}

json vector_to_json(std::span<const cd> x) {
  json entries = json::array();
  for (cd z : x) entries.push_back({z.real(), z.imag()});
  return {{"dim", x.size()}, {"entries", std::move(entries)}};
}

ComplexVector vector_from_json(const json& j) {
  const json* e = &j;
  if (j.is_object()) {
    if (!j.contains("entries") || !j["entries"].is_array()) throw ParseError("vector JSON needs an 'entries' array");
    e = &j["entries"];
    if (j.contains("dim") && count_field(j, "dim") != e->size()) throw ParseError("vector JSON 'dim' disagrees with entries");
  } else if (!j.is_array()) {
    throw ParseError("vector JSON must be an object or array");
  }
  ComplexVector x;
  x.reserve(e->size());
  for (const auto& v : *e) x.push_back(entry_from_json(v));
  return x;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

ComplexMatrix read_matrix_file(const std::filesystem::path& path) {
  if (path.extension() == ".json") return matrix_from_json(read_json_file(path));
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_matrix_csv(in);
}

ComplexVector read_vector_file(const std::filesystem::path& path) {
  if (path.extension() == ".json") return vector_from_json(read_json_file(path));
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  return read_vector_csv(in);
}

IndexSet parse_index_set(std::string_view spec, std::size_t universe) {
  const std::string_view s = trim(spec);
  if (s.empty()) return IndexSet::empty(universe);
  if (s.starts_with("picket:")) {
    const auto body = s.substr(7);
    const auto slash = body.find('/');
    if (slash == std::string_view::npos) throw ParseError("picket spec must be 'picket:m/n'");
    const std::size_t m = parse_count(body.substr(0, slash), spec);
    const std::size_t n = parse_count(body.substr(slash + 1), spec);
    if (m != universe) {
      throw ValidationError("picket spec size " + std::to_string(m) + " differs from matrix size " +
                            std::to_string(universe));
    }
    if (n == 0 || m % n != 0) throw DomainError("picket fence needs n dividing m");
    std::vector<std::size_t> members;
    for (std::size_t k = 1; k <= n; ++k) members.push_back(k * (m / n));
    return IndexSet(universe, std::move(members));
  }
  if (s.starts_with("interval:")) {
    const auto body = s.substr(9);
    const auto plus = body.find('+');
    if (plus == std::string_view::npos) throw ParseError("interval spec must be 'interval:l+n'");
    const std::size_t l = parse_count(body.substr(0, plus), spec);
    const std::size_t n = parse_count(body.substr(plus + 1), spec);
    return IndexSet::circular_interval(universe, l, n);
  }
  std::vector<std::size_t> members;
  for (auto part : split(s, ',')) members.push_back(parse_count(part, spec));
  return IndexSet(universe, std::move(members));
}

std::string format_index_set(const IndexSet& s) {
  std::string out;
  for (std::size_t i : s.members()) {
    if (!out.empty()) out += ',';
    out += std::to_string(i);
  }
  return out;
}

}  // namespace uncertainty
