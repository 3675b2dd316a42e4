#pragma once

#include <string>

#include "json.hpp"
#include "wig/adic.hpp"
#include "wig/group.hpp"
#include "wig/phase_space.hpp"
#include "wig/second_degree.hpp"

namespace wig {

using Json = nlohmann::json;

// Stable wire formats:
//   Group           {"orders":[3,9]}
//   Subgroup        {"generators":[[...],...]}
//   StateVector     {"group":{"orders":[...]},"values":[[re,im],...]}
//   SStateSpec      {"H":{"generators":[...]},"beta":[[m_ij]],"chi":[...],
//                    "shift":[...],"scale":[re,im]}
//   NAdicNumber     {"base":2,"start":-1,"digits":[1,0,1,...]}
//   SchwartzBruhat  {"base":2,"m":-1,"M":2,"coeffs":[[re,im],...]}
// The beta matrix is written in the invariant-factor basis that
// cyclic_decompose computes for H; that basis is a deterministic function of
// the element set, so the matrix round-trips.

Json group_to_json(const Group& g);
Group group_from_json(const Json& j);

Json subgroup_to_json(const Subgroup& h);
Subgroup subgroup_from_json(const Group& g, const Json& j);

Json state_to_json(const StateVector& f);
StateVector state_from_json(const Json& j);

Json sstate_spec_to_json(const SStateSpec& spec);
SStateSpec sstate_spec_from_json(const Group& g, const Json& j);

Json nadic_to_json(const NAdicNumber& x);
NAdicNumber nadic_from_json(const Json& j);

Json sb_to_json(const SchwartzBruhatFn& f);
SchwartzBruhatFn sb_from_json(const Json& j);

Json solenoid_to_json(const SolenoidPoint& p);
SolenoidPoint solenoid_from_json(const Json& j);

/// Rows x_index,dual_index,re,im in row-major order; JSON export mirrors the
/// CSV columns.
Json table_to_json(const PhaseTable& t);
std::string table_to_csv(const PhaseTable& t);

/// Same layout for the n-adic table, with the class-group levels attached.
Json sb_table_to_json(const SbWignerTable& t);
std::string sb_table_to_csv(const SbWignerTable& t);

Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace wig
