#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tubelift/jacobi.hpp"
#include "tubelift/lift.hpp"
#include "tubelift/qseries.hpp"
#include "tubelift/siegel.hpp"

namespace tubelift::io {

/// kText is the line-oriented table format; kStructured is JSON. Both carry
/// a versioned header.
enum class Format { kText, kStructured };

/// "table-text" / "text" or "structured" / "json".
Format parse_format(std::string_view name);
std::string format_name(Format f);

inline constexpr int kFormatVersion = 1;

void write_qseries(std::ostream& os, const QSeries& s, Format f = Format::kText);
QSeries read_qseries(std::istream& is);

void write_expansion(std::ostream& os, const siegel::SiegelExpansion& e, Format f = Format::kText);
siegel::SiegelExpansion read_expansion(std::istream& is);

/// Per index: the primes used, their local exponents and polynomial degrees.
void write_provenance(std::ostream& os, const lift::LiftResult& r, Format f = Format::kText);

void write_component(std::ostream& os, const jacobi::ThetaComponent& c, Format f = Format::kText);
jacobi::ThetaComponent read_component(std::istream& is);

struct ReportEntry {
  std::string check;
  bool passed = true;
  std::vector<std::pair<std::string, std::string>> fields;
};

struct Report {
  std::string title;
  std::vector<ReportEntry> entries;
  bool all_passed() const;
};

void write_report(std::ostream& os, const Report& r, Format f = Format::kText);

}  // namespace tubelift::io
