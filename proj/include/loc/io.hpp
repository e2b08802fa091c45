#pragma once
#include "loc/alperin.hpp"
#include "loc/cohomology.hpp"
#include "loc/locality.hpp"
#include "loc/transporter.hpp"

#include "json.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace loc {

using Json = nlohmann::ordered_json;

// ---- parsing; malformed structure throws SpecError, references to
// nonexistent group elements throw DomainError ----

// {"name": str, "kind": "symmetric"|"dihedral"|"cyclic"|"permutation",
//  "n": int, "generators": ["(1 2)", ...]}; a bare string names a built-in.
GroupPtr parse_group_spec(const Json& j);

// "all" | "nontrivial" | {"overgroups_of": [gens]} | {"explicit": [[gens],..]}
DeltaSpec parse_delta_spec(const Json& j, const FiniteGroup& g);

// {"group": <group spec or built-in name>, "p": int, "S": [gens] (optional),
//  "delta": <delta spec> (optional, default "all")}. The overrides win over
// the corresponding file fields when present.
Locality parse_locality_spec(const Json& j, std::optional<int> p_override,
                             const std::optional<Json>& delta_override);

// {"target": "cycle", "factors": [{"Q": [gens], "x": "cycle"}, ...]}
Certificate parse_certificate(const Json& j, const Locality& loc);
Json certificate_to_json(const Locality& loc, const Certificate& cert);

// {"orders": [int], "action": {"<generator label>": [[int]], ...}} — the
// action of the named generators is extended multiplicatively to the group
GModule parse_module(const Json& j, GroupPtr g, long long p);

// {"values": {"<object id>": [orders], ...},
//  "maps": {"<i>-><j>:<element label>": [[int]], ...}}
FunctorPres parse_functor(const Json& j, const TransporterCat& t);

Json orders_to_json(const AbPres& a);
Json generator_labels(const Subgroup& h);

// Reads a file as JSON (SpecError on unreadable path or bad JSON).
Json load_json_file(const std::string& path);

// The command-line surface, in-process. args excludes the program name.
// Returns the exit code; on failure a {"error": code, "detail": str} object
// is written to err.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace loc
