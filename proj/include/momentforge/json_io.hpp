#ifndef MOMENTFORGE_JSON_IO_HPP
#define MOMENTFORGE_JSON_IO_HPP

#include <json.hpp>

#include "momentforge/finab.hpp"
#include "momentforge/inversion.hpp"
#include "momentforge/localize.hpp"
#include "momentforge/sampler.hpp"

// Wire formats. Every reader throws InputError naming the offending field.
//   group     {"2":[2,1],"3":[1]}
//   rational  "p/q" or "p" (a bare JSON integer is also accepted)
//   bracket   {"lower":"2/7","upper":"13/45"}
//   moments   {"basis":[{"kind":"abelian","h":2}],"bound":[4],"moments":[{"k":[0],"value":"1"},...]}
//   module    {"primes":[2,3],"order_bound":72,"moments":[{"group":{"2":[1]},"value":"1"},...]}

namespace momentforge {

using Json = nlohmann::json;

Json to_json(const FinAbGroup& g);
FinAbGroup group_from_json(const Json& j);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const Bracket& b);
Bracket bracket_from_json(const Json& j);

Json to_json(const SimpleType& t);
SimpleType simple_type_from_json(const Json& j);

Json to_json(const MomentTable& t);
MomentTable moment_table_from_json(const Json& j);

Json to_json(const ModuleMomentTable& t);
ModuleMomentTable module_table_from_json(const Json& j);

Json to_json(const ExtensionTable& t);

/// {"t":..,"group":..,"frequency":"a/b","bracket":{..},"reference":<number>}
Json to_json(const ReportRecord& r);

/// Parses text, mapping syntax errors to InputError with `what` as context.
Json parse_json(const std::string& text, const std::string& what);

} // namespace momentforge

#endif // MOMENTFORGE_JSON_IO_HPP
