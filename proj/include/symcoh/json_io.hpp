#ifndef SYMCOH_JSON_IO_HPP
#define SYMCOH_JSON_IO_HPP

#include "symcoh/cohomology.hpp"
#include "symcoh/extension.hpp"
#include "symcoh/report.hpp"

#include <json.hpp>

namespace symcoh {

using Json = nlohmann::json;

/// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
Json integer_to_json(const Integer& x);
/// ParseError on anything but an integral number or a decimal string.
Integer integer_from_json(const Json& j);

/// The list of invariant factors.
Json to_json(const AbGroup& a);
AbGroup abgroup_from_json(const Json& j);

/// {order, table, label}
Json to_json(const FinGroup& g);
FinGroup fingroup_from_json(const Json& j);

/// {base: [factors], matrices: [one k x k matrix per element]}
Json to_json(const GModule& m);
/// `base` may be any list of moduli; the action is validated.
GModule module_from_json(const FinGroup& g, const Json& j);

/// {degree, symmetric, group, invariant_factors, representatives?}
Json to_json(const CohomologyResult& r, bool with_representatives);
Json to_json(const ComparisonResult& c);
Json to_json(const VerificationReport& r);
Json to_json(const ExtensionReport& r);

}  // namespace symcoh

#endif  // SYMCOH_JSON_IO_HPP
