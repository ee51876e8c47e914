// JSON forms of the core types. Coefficients are emitted as JSON numbers when
// they fit in 64 bits and as decimal strings beyond that; parsing accepts
// both, so round-trips are exact at any size.
#pragma once

#include <json.hpp>

#include "macsym/partition.hpp"
#include "macsym/ratfunc.hpp"
#include "macsym/symfunc.hpp"
#include "macsym/transition.hpp"

namespace macsym {

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);

// Partition <-> [3,1]
void to_json(nlohmann::json& j, const Partition& p);
void from_json(const nlohmann::json& j, Partition& p);

// RatQT <-> {"num":[[c,eq,et],...],"den":[[c,eq,et],...]}, exponent-sorted.
void to_json(nlohmann::json& j, const PolyQT& p);
void from_json(const nlohmann::json& j, PolyQT& p);
void to_json(nlohmann::json& j, const RatQT& r);
void from_json(const nlohmann::json& j, RatQT& r);

// FamilyLabel <-> {"kind":"M","deg":1,"id":"f1"}
void to_json(nlohmann::json& j, const FamilyLabel& f);
void from_json(const nlohmann::json& j, FamilyLabel& f);

// SymFunc <-> {"terms":[{"coeff":...,"factors":[{"family":...,"basis":"p",
//   "partition":[2,1]}]},...]}
void to_json(nlohmann::json& j, const SymFunc& f);
void from_json(const nlohmann::json& j, SymFunc& f);

void to_json(nlohmann::json& j, const Matrix& m);
void from_json(const nlohmann::json& j, Matrix& m);
void to_json(nlohmann::json& j, const MacdonaldBasisTable& t);
void from_json(const nlohmann::json& j, MacdonaldBasisTable& t);
void to_json(nlohmann::json& j, const GreenTable& t);
void from_json(const nlohmann::json& j, GreenTable& t);

/// Compact PartitionFn form used on the command line: an object keyed by
/// family id, e.g. {"triv":[2],"phi:2":[1]}. "triv" is the degree-1 L-family
/// and "f1" the degree-1 M-family; any other id may carry a degree suffix
/// ":<d>" and gets the supplied default kind.
PartitionFn partition_fn_from_json(const nlohmann::json& j,
                                   FamilyKind default_kind);
nlohmann::json partition_fn_to_json(const PartitionFn& fn);

}  // namespace macsym
