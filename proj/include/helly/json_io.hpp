#ifndef HELLY_JSON_IO_HPP
#define HELLY_JSON_IO_HPP

#include <json.hpp>

#include "helly/bounds.hpp"
#include "helly/complex.hpp"
#include "helly/constructions.hpp"
#include "helly/geometry.hpp"
#include "helly/homology.hpp"
#include "helly/hypergraph.hpp"

namespace helly {

// Keys serialize in alphabetical order (nlohmann's default map), so dump() is
// byte-stable across runs. Rationals are encoded as strings "p/q" in lowest
// terms with q > 0.
using Json = nlohmann::json;

Json complex_to_json(const Complex& k);
Complex complex_from_json(const Json& j);

Json hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json fvector_to_json(const FVector& fv);
Json betti_to_json(const BettiProfile& profile);
Json leray_to_json(const LerayCertificate& cert);

Json constraint_to_json(const LinearConstraint& c);
LinearConstraint constraint_from_json(const Json& j);

Json polyhedron_to_json(const HPolyhedron& h);
HPolyhedron polyhedron_from_json(const Json& j);

Json product_body_to_json(const ProductBody& b);
ProductBody product_body_from_json(const Json& j);

// Includes coefficient bit-size statistics (the induction does not bound
// coefficient growth, so the sizes are reported).
Json slab_family_to_json(const SlabFamily& family);

Json condition_report_to_json(const ConditionReport& report);
Json block_partition_to_json(const BlockPartition& partition);
Json plan_to_json(const ProductFamilyPlan& plan);
Json product_stats_to_json(const ProductFamilyStats& stats);

}  // namespace helly

#endif
