#include "tubelift/serialize.hpp"

#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace tubelift::io {

namespace {

using nlohmann::ordered_json;

std::string header(std::string_view kind) {
  return "# tubelift " + std::string(kind) + " v" + std::to_string(kFormatVersion);
}

ordered_json json_header(std::string_view kind) {
  ordered_json j;
  j["format"] = "tubelift-" + std::string(kind);
  j["version"] = kFormatVersion;
  return j;
}

void expect_header(std::istream& is, std::string_view kind) {
  std::string line;
  if (!std::getline(is, line) || line != header(kind))
    throw std::invalid_argument("expected header '" + header(kind) + "', got '" + line + "'");
}

// Reads "key=value" (or "key value") and checks the key.
std::string read_field(std::istream& is, std::string_view key) {
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("missing field " + std::string(key));
  const auto sep = line.find_first_of("= ");
  if (sep == std::string::npos || line.substr(0, sep) != key)
    throw std::invalid_argument("expected field " + std::string(key) + ", got '" + line + "'");
  return line.substr(sep + 1);
}

std::int64_t to_int(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return v;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "table-text" || name == "text") return Format::kText;
  if (name == "structured" || name == "json") return Format::kStructured;
  throw std::invalid_argument("unknown format '" + std::string(name) + "'");
}

std::string format_name(Format f) { return f == Format::kText ? "table-text" : "structured"; }

void write_qseries(std::ostream& os, const QSeries& s, Format f) {
  if (f == Format::kStructured) {
    auto j = json_header("qseries");
    j["weight"] = s.weight();
    j["truncation"] = s.truncation();
    auto& c = j["coefficients"] = ordered_json::array();
    for (const auto& v : s.coefficients()) c.push_back(to_fraction_string(v));
    os << j.dump(1) << '\n';
    return;
  }
  os << header("qseries") << '\n';
  os << "weight " << s.weight() << '\n';
  os << "truncation " << s.truncation() << '\n';
  const auto coeffs = s.coefficients();
  for (std::size_t n = 0; n < coeffs.size(); ++n) os << n << ':' << to_fraction_string(coeffs[n]) << '\n';
}

QSeries read_qseries(std::istream& is) {
  expect_header(is, "qseries");
  const int weight = static_cast<int>(to_int(read_field(is, "weight")));
  const auto trunc = static_cast<std::size_t>(to_int(read_field(is, "truncation")));
  QSeries s(weight, trunc);
  std::string line;
  std::size_t expected = 0;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad series line '" + line + "'");
    const auto n = static_cast<std::size_t>(to_int(line.substr(0, colon)));
    if (n != expected || n > trunc) throw std::invalid_argument("series entries out of order at " + line);
    s[n] = parse_rational(line.substr(colon + 1));
    ++expected;
  }
  if (expected != trunc + 1) throw std::invalid_argument("series file is missing coefficients");
  return s;
}

void write_expansion(std::ostream& os, const siegel::SiegelExpansion& e, Format f) {
  if (f == Format::kStructured) {
    auto j = json_header("expansion");
    j["group"] = e.group();
    j["weight"] = e.weight();
    j["trace_bound"] = e.trace_bound();
    auto& c = j["coefficients"] = ordered_json::array();
    for (const auto& [t, v] : e.table()) c.push_back({{"n", t.n}, {"r", t.r}, {"m", t.m}, {"value", to_fraction_string(v)}});
    os << j.dump(1) << '\n';
    return;
  }
  os << header("expansion") << '\n';
  os << "group=" << e.group() << '\n';
  os << "weight=" << e.weight() << '\n';
  os << "trace_bound=" << e.trace_bound() << '\n';
  for (const auto& [t, v] : e.table()) os << t.n << ' ' << t.r << ' ' << t.m << ' ' << to_fraction_string(v) << '\n';
}

siegel::SiegelExpansion read_expansion(std::istream& is) {
  expect_header(is, "expansion");
  if (read_field(is, "group") != "Sp4") throw std::invalid_argument("only group=Sp4 expansions are supported");
  const int weight = static_cast<int>(to_int(read_field(is, "weight")));
  const std::int64_t bound = to_int(read_field(is, "trace_bound"));
  std::map<siegel::FourierIndex, Rational> table;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    siegel::FourierIndex t;
    std::string value;
    if (!(fields >> t.n >> t.r >> t.m >> value)) throw std::invalid_argument("bad expansion line '" + line + "'");
    if (!table.emplace(t, parse_rational(value)).second) throw std::invalid_argument("duplicate index " + t.to_string());
  }
  return siegel::SiegelExpansion(weight, bound, std::move(table));
}

void write_provenance(std::ostream& os, const lift::LiftResult& r, Format f) {
  if (f == Format::kStructured) {
    auto j = json_header("provenance");
    j["weight"] = r.expansion.weight();
    j["trace_bound"] = r.expansion.trace_bound();
    auto& entries = j["indices"] = ordered_json::array();
    for (const auto& [t, locals] : r.provenance) {
      ordered_json e{{"n", t.n}, {"r", t.r}, {"m", t.m}};
      auto& primes = e["primes"] = ordered_json::array();
      for (const auto& l : locals)
        primes.push_back({{"p", l.p}, {"content_exponent", l.content_exponent},
                          {"conductor_exponent", l.conductor_exponent}, {"degree", l.degree}});
      entries.push_back(std::move(e));
    }
    os << j.dump(1) << '\n';
    return;
  }
  os << header("provenance") << '\n';
  os << "weight=" << r.expansion.weight() << '\n';
  os << "trace_bound=" << r.expansion.trace_bound() << '\n';
  for (const auto& [t, locals] : r.provenance) {
    os << t.n << ' ' << t.r << ' ' << t.m << " :";
    for (const auto& l : locals)
      os << " p=" << l.p << ",a=" << l.content_exponent << ",b=" << l.conductor_exponent << ",degree=" << l.degree;
    os << '\n';
  }
}

void write_component(std::ostream& os, const jacobi::ThetaComponent& c, Format f) {
  if (f == Format::kStructured) {
    auto j = json_header("component");
    j["S"] = c.index.m;
    j["xi"] = to_fraction_string(c.xi);
    j["offset_denominator"] = c.offset_denominator;
    j["weight"] = to_fraction_string(c.weight);
    j["max_numerator_exponent"] = c.max_numerator_exponent;
    auto& t = j["coefficients"] = ordered_json::array();
    for (const auto& [num, v] : c.coefficients) t.push_back({{"numerator_exponent", num}, {"value", to_fraction_string(v)}});
    os << j.dump(1) << '\n';
    return;
  }
  os << header("component") << '\n';
  os << "S=" << c.index.m << '\n';
  os << "xi=" << to_fraction_string(c.xi) << '\n';
  os << "offset_denominator=" << c.offset_denominator << '\n';
  os << "weight=" << to_fraction_string(c.weight) << '\n';
  os << "max_numerator_exponent=" << c.max_numerator_exponent << '\n';
  for (const auto& [num, v] : c.coefficients) os << num << " : " << to_fraction_string(v) << '\n';
}

jacobi::ThetaComponent read_component(std::istream& is) {
  expect_header(is, "component");
  jacobi::ThetaComponent c;
  c.index = jacobi::JacobiIndex(to_int(read_field(is, "S")));
  c.xi = parse_rational(read_field(is, "xi"));
  c.offset_denominator = to_int(read_field(is, "offset_denominator"));
  c.weight = parse_rational(read_field(is, "weight"));
  c.max_numerator_exponent = to_int(read_field(is, "max_numerator_exponent"));
  if (c.offset_denominator != 4 * c.index.m) throw std::invalid_argument("component offset denominator must be 4S");
  const Rational rho = Rational(2 * c.index.m) * c.xi;
  if (rho.get_den() != 1) throw std::invalid_argument("component xi is not in (1/2S)Z");
  c.lattice_residue = rho.get_num().get_si();
  c.offset = c.index.sigma(c.xi, c.xi);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto sep = line.find(" : ");
    if (sep == std::string::npos) throw std::invalid_argument("bad component line '" + line + "'");
    c.coefficients.emplace(to_int(line.substr(0, sep)), parse_rational(line.substr(sep + 3)));
  }
  return c;
}

bool Report::all_passed() const {
  for (const auto& e : entries)
    if (!e.passed) return false;
  return true;
}

void write_report(std::ostream& os, const Report& r, Format f) {
  if (f == Format::kStructured) {
    auto j = json_header("report");
    j["title"] = r.title;
    j["status"] = r.all_passed() ? "PASS" : "FAIL";
    auto& checks = j["checks"] = ordered_json::array();
    for (const auto& e : r.entries) {
      ordered_json c{{"check", e.check}, {"status", e.passed ? "PASS" : "FAIL"}};
      for (const auto& [k, v] : e.fields) c[k] = v;
      checks.push_back(std::move(c));
    }
    os << j.dump(1) << '\n';
    return;
  }
  os << header("report") << '\n';
  os << "title=" << r.title << '\n';
  os << "status=" << (r.all_passed() ? "PASS" : "FAIL") << '\n';
  for (const auto& e : r.entries) {
    os << '\n' << "check=" << e.check << '\n' << "status=" << (e.passed ? "PASS" : "FAIL") << '\n';
    for (const auto& [k, v] : e.fields) os << k << '=' << v << '\n';
  }
}

}  // namespace tubelift::io
