#ifndef GBD_PARSER_HPP
#define GBD_PARSER_HPP

#include <string>
#include <string_view>

#include "gbd/system.hpp"

namespace gbd {

/// Parse the line-oriented system format:
///
///   ring <name>+
///   field q | field gf <prime>      (optional, default q)
///   order lex|grlex|grevlex [<name>+]
///   poly <expression>               (one per line, at least one)
///
/// `#` starts a comment. An expression is a signed sum of monomials;
/// a monomial is [integer] ([*] variable [^ integer])*.
SystemFile parse_system(std::string_view text);

/// Inverse of parse_system; parse(serialize(s)) == s for valid systems.
std::string serialize_system(const SystemFile& sys);

/// Parse a single polynomial expression over a known ring/field.
Polynomial parse_poly_expr(std::string_view text, const RingContext& ring, const FieldSpec& field);

/// Parse "<kind> [<name>+]", e.g. "grlex x y z"; omitted names mean
/// declaration order.
Ordering parse_order_spec(std::string_view text, const RingContext& ring);

} // namespace gbd

#endif
