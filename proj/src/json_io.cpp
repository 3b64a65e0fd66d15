#include "momentforge/json_io.hpp"

#include "momentforge/errors.hpp"

namespace momentforge {

namespace {

const Json& field(const Json& j, const char* name, const char* what)
{
  if (!j.is_object())
    throw InputError(std::string(what) + " must be a JSON object");
  auto it = j.find(name);
  if (it == j.end())
    throw InputError(std::string(what) + " is missing field '" + name + "'");
  return *it;
}

std::uint64_t as_u64(const Json& j, const std::string& what)
{
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError(what + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

MultiIndex index_from_json(const Json& j, const std::string& what)
{
  if (!j.is_array())
    throw InputError(what + " must be an array of nonnegative integers");
  MultiIndex out;
  for (const Json& e : j)
    out.exponents.push_back(static_cast<unsigned>(as_u64(e, what)));
  return out;
}

} // namespace

Json to_json(const FinAbGroup& g)
{
  Json out = Json::object();
  for (const auto& [p, parts] : g.components())
    out[std::to_string(p)] = parts;
  return out;
}

FinAbGroup group_from_json(const Json& j)
{
  if (!j.is_object())
    throw InputError("group must be an object mapping primes to partitions, got " + j.dump());
  std::map<std::uint64_t, Partition> comps;
  for (const auto& [key, value] : j.items()) {
    if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("group key '" + key + "' is not a decimal prime");
    if (!value.is_array())
      throw InputError("partition for prime " + key + " must be an array");
    Partition parts;
    for (const Json& e : value) {
      const std::uint64_t part = as_u64(e, "partition entry for prime " + key);
      if (part == 0)
        throw InputError("partition for prime " + key + " has a zero entry");
      parts.push_back(static_cast<unsigned>(part));
    }
    comps[std::stoull(key)] = std::move(parts);
  }
  return FinAbGroup(std::move(comps));
}

Json to_json(const Rational& r)
{
  return to_string(r);
}

Rational rational_from_json(const Json& j)
{
  if (j.is_string())
    return parse_rational(j.get<std::string>());
  if (j.is_number_integer())
    return Rational(Integer(j.dump()));
  throw InputError("rational must be a \"p/q\" string, got " + j.dump());
}

Json to_json(const Bracket& b)
{
  return Json{{"lower", to_json(b.lower)}, {"upper", to_json(b.upper)}};
}

Bracket bracket_from_json(const Json& j)
{
  return Bracket::make(rational_from_json(field(j, "lower", "bracket")),
                       rational_from_json(field(j, "upper", "bracket")));
}

Json to_json(const SimpleType& t)
{
  if (t.is_abelian())
    return Json{{"kind", "abelian"}, {"h", t.h()}};
  return Json{{"kind", "nonabelian"}, {"aut", t.aut_count()}};
}

SimpleType simple_type_from_json(const Json& j)
{
  const Json& kind = field(j, "kind", "basis entry");
  if (kind == "abelian")
    return SimpleType::abelian(as_u64(field(j, "h", "abelian basis entry"), "h"));
  if (kind == "nonabelian")
    return SimpleType::non_abelian(as_u64(field(j, "aut", "nonabelian basis entry"), "aut"));
  throw InputError("unknown basis kind " + kind.dump());
}

Json to_json(const MomentTable& t)
{
  Json basis = Json::array();
  for (const SimpleType& s : t.basis().types)
    basis.push_back(to_json(s));
  Json moments = Json::array();
  for (const auto& [k, v] : t.values())
    moments.push_back(Json{{"k", k.exponents}, {"value", to_json(v)}});
  return Json{{"basis", basis}, {"bound", t.bound().exponents}, {"moments", moments}};
}

MomentTable moment_table_from_json(const Json& j)
{
  const Json& basis_json = field(j, "basis", "moment table");
  if (!basis_json.is_array())
    throw InputError("moment table 'basis' must be an array");
  TypeBasis basis;
  for (const Json& e : basis_json)
    basis.types.push_back(simple_type_from_json(e));
  const MultiIndex bound = index_from_json(field(j, "bound", "moment table"), "moment table 'bound'");
  const Json& moments = field(j, "moments", "moment table");
  if (!moments.is_array())
    throw InputError("moment table 'moments' must be an array");
  std::map<MultiIndex, Rational> values;
  for (const Json& e : moments) {
    MultiIndex k = index_from_json(field(e, "k", "moment entry"), "moment entry 'k'");
    if (!values.emplace(k, rational_from_json(field(e, "value", "moment entry"))).second)
      throw InputError("duplicate moment entry at " + k.to_string());
  }
  return MomentTable(std::move(basis), bound, std::move(values));
}

Json to_json(const ModuleMomentTable& t)
{
  Json moments = Json::array();
  for (const auto& [g, v] : t.values())
    moments.push_back(Json{{"group", to_json(g)}, {"value", to_json(v)}});
  return Json{{"primes", t.primes()}, {"order_bound", t.order_bound()}, {"moments", moments}};
}

ModuleMomentTable module_table_from_json(const Json& j)
{
  const Json& primes_json = field(j, "primes", "module moment table");
  if (!primes_json.is_array())
    throw InputError("module moment table 'primes' must be an array");
  std::set<std::uint64_t> primes;
  for (const Json& p : primes_json)
    primes.insert(as_u64(p, "prime"));
  const std::uint64_t bound = as_u64(field(j, "order_bound", "module moment table"), "order_bound");
  const Json& moments = field(j, "moments", "module moment table");
  if (!moments.is_array())
    throw InputError("module moment table 'moments' must be an array");
  std::map<FinAbGroup, Rational> values;
  for (const Json& e : moments) {
    FinAbGroup g = group_from_json(field(e, "group", "module moment entry"));
    if (!values.emplace(g, rational_from_json(field(e, "value", "module moment entry"))).second)
      throw InputError("duplicate module moment for " + g.to_string());
  }
  return ModuleMomentTable(std::move(primes), bound, std::move(values));
}

Json to_json(const ExtensionTable& t)
{
  Json out = Json::array();
  for (const auto& [g, classes] : t.entries)
    out.push_back(Json{{"middle", to_json(g)}, {"classes", to_json(classes)}});
  return out;
}

Json to_json(const ReportRecord& r)
{
  return Json{{"t", r.t},
              {"group", to_json(r.group)},
              {"frequency", to_json(r.frequency)},
              {"bracket", to_json(r.bracket)},
              {"reference", r.reference}};
}

Json parse_json(const std::string& text, const std::string& what)
{
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw InputError("cannot parse " + what + " as JSON: " + e.what());
  }
}

} // namespace momentforge
