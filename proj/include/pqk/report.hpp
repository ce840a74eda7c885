#ifndef PQK_REPORT_HPP
#define PQK_REPORT_HPP

#include <string>
#include <vector>

#include "pqk/index_engine.hpp"

namespace pqk {

namespace golden {

/// A printed index display: top-weight coefficients over a common
/// denominator. `u5_printed_as_u4` marks the one display whose pure
/// u-power is printed with the wrong exponent (weight forces u^5).
struct IndexDisplay {
  int p, q;
  long long den;
  std::vector<std::pair<long long, std::string>> terms;
  bool u5_printed_as_u4 = false;
};

const std::vector<IndexDisplay>& index_displays();

/// The display as a linear form over the ring's monomial names.
LinearForm display_form(const IndexContext& ctx, const IndexDisplay& d);

/// Printed Chern-character and A-hat class data (weight component ->
/// coefficient list), as linear data over monomial names.
struct ClassDisplay {
  long long den;
  std::vector<std::pair<long long, std::string>> terms;
};
const std::vector<ClassDisplay>& ch_h_display();   // by weight 1..5
const std::vector<ClassDisplay>& ch_e_display();
const std::vector<ClassDisplay>& ahat_display();

}  // namespace golden

struct CheckRecord {
  std::string id;
  std::string anchor;    // stable label of the reproduced statement
  std::string expected;
  std::string computed;
  enum class Status { pass, fail, typo_noted } status = Status::fail;
  long long elapsed_us = 0;
};

struct Report {
  std::vector<CheckRecord> records;
  bool ok() const {
    for (const auto& r : records)
      if (r.status == CheckRecord::Status::fail) return false;
    return true;
  }
  int failures() const {
    int n = 0;
    for (const auto& r : records)
      if (r.status == CheckRecord::Status::fail) ++n;
    return n;
  }
};

struct ReproduceOptions {
  std::string only;          // id prefix filter; empty = all
  bool include_dim24_sweep = true;
};

/// Runs every golden check; deterministic order and content.
Report reproduce_all(const ReproduceOptions& opt = {});

std::string to_json(const Report& rep, bool timings = false);
std::string to_markdown(const Report& rep, bool timings = false);
std::string to_csv(const Report& rep, bool timings = false);

}  // namespace pqk

#endif
