#ifndef FINLANG_CORE_REPORT_HPP_
#define FINLANG_CORE_REPORT_HPP_

// Machine-readable reports.  Only choice-independent data goes in, so equal
// inputs give byte-identical text whatever seed drove the choices.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "lattice.hpp"
#include "rootdata.hpp"

namespace finlang {

enum class Pipeline { kAuto = 0, kSpectral = 1, kStratified = 2, kBoth = 3 };

std::string pipeline_name(Pipeline p);

struct CountReport {
  nlohmann::ordered_json doc;
  Int total = 0;
  bool has_match = false;
  bool match = false;
  bool pipelines_agree = true;

  // Two-space indented JSON with a trailing newline.
  std::string text() const;
};

// count: runs the requested pipeline(s).  compare: additionally runs the
// brute-force oracle; match requires oracle equality and, when both
// pipelines ran, their agreement.
CountReport count_report(GroupSpec const& g, Pipeline p, std::optional<std::uint64_t> seed);
CountReport compare_report(GroupSpec const& g, Pipeline p, std::optional<std::uint64_t> seed);

std::string cells_report(std::string const& type);
std::string tables_report(std::string const& type);
std::string oracle_report(std::string const& name, Int q);

}  // namespace finlang

#endif  // FINLANG_CORE_REPORT_HPP_
