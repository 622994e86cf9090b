#ifndef GBD_REPORT_HPP
#define GBD_REPORT_HPP

#include <string>

#include "gbd/decide.hpp"
#include "gbd/system.hpp"
#include "gbd/theory.hpp"

namespace gbd {

/// Machine-readable report, schema "groebner-decide/1". Field order is
/// deterministic; emit -> parse -> emit is a fixed point. Indices 1-based.
std::string report_to_json(const DecisionReport& report, const SystemFile& sys);

std::string report_to_text(const DecisionReport& report, const SystemFile& sys);

std::string theory_report_to_json(const TheoryReport& report, const SystemFile& sys);

std::string theory_report_to_text(const TheoryReport& report, const SystemFile& sys);

} // namespace gbd

#endif
