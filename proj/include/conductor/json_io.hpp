#pragma once

#include <json.hpp>

#include <memory>
#include <string>

#include "conductor/chartab.hpp"
#include "conductor/conductor_finite.hpp"
#include "conductor/fitting.hpp"
#include "conductor/group.hpp"
#include "conductor/iwasawa.hpp"
#include "conductor/local_field.hpp"

namespace conductor {

using json = nlohmann::json;

/// Parse a file; malformed input raises InvalidInput with the byte offset.
json read_json_file(const std::string& path);
json parse_json(const std::string& text, const std::string& origin = "input");

/// {"perm_gens": [[...]], "degree": d} or {"mult_table": [[...]]}.
std::shared_ptr<const FiniteGroup> group_from_json(const json& j);
json group_to_json(const FiniteGroup& g);

/// For permutation groups alpha_images lists the image permutation of each
/// perm_gens entry; for table groups it lists the image of every element in
/// the indexing of the input table.
GroupAutomorphism alpha_from_json(const json& group_json, std::shared_ptr<const FiniteGroup> h,
                                  const json& alpha_images);
/// {"h": <group>, "alpha_images": [...], "p": p}.
SemidirectData semidirect_from_json(const json& j);
json semidirect_to_json(const SemidirectData& sd);

json cyclo_to_json(const CycloNumber& x);
CycloNumber cyclo_from_json(const json& j);

/// {"p", "m", "stab_gens"} plus the derived e, f, d_abs on output.
json field_to_json(const AbelianLocalField& k);
AbelianLocalField field_from_json(const json& j);
/// "qp", "unram:f", "cyclo:m" or a field descriptor file path.
AbelianLocalField parse_base_field(const std::string& spec, unsigned p);

json table_to_json(const CharacterTable& t);

json report_to_json(const FiniteConductorReport& r);
FiniteConductorReport report_from_json(const json& j);

json description_to_json(const ConductorDescription& d);
ConductorDescription description_from_json(const json& j);

/// {"a", "b", "entries": a x b}; an entry is a dense coefficient array of
/// length |G| or a list of [element, coefficient] pairs.
PresentationMatrix presentation_from_json(const json& j, const FiniteGroup& g);
json presentation_to_json(const PresentationMatrix& h);

json fitting_to_json(const FittingGenerators& f);

}  // namespace conductor
