#pragma once

#include <json.hpp>

#include "stone/cargraph.hpp"
#include "stone/height.hpp"
#include "stone/homeo.hpp"
#include "stone/selfsim.hpp"

// JSON forms. Ordinals are strings in the canonical notation; part indices
// are 1-based, matching the maximal point w^alpha * i they hold.
namespace stone::json_io {

using nlohmann::json;

json encode(const Ordinal& x);
json encode(const Space& s);
json encode(const ClopenSet& a);
json encode(const CharPair& p);
json encode(const GoodPartition& p);
json encode(const ShiftMove& m);
json encode(const DistanceCertificate& c);
json encode(const HeightReport& r);
json encode(const GroupClass& g);
json encode(const SelfSimVertex& v);
json encode(const SelfSimPath& p);

// Decoders throw SyntaxError (offset 0) on structurally wrong documents.
Ordinal decode_ordinal(const json& j);
Space decode_space(const json& j);
ClopenSet decode_clopen(const json& j);
CharPair decode_char_pair(const json& j);
GoodPartition decode_partition(const json& j);
ShiftMove decode_move(const Space& space, const json& j);
/// The path's start is not part of the document and must be supplied.
DistanceCertificate decode_certificate(const GoodPartition& start, const json& j);
HeightReport decode_height_report(const json& j);
GroupClass decode_group_class(const json& j);

}  // namespace stone::json_io
