#ifndef PUREORDER_SERIALIZE_HPP
#define PUREORDER_SERIALIZE_HPP

#include <string>

#include "json.hpp"

#include "pureorder/dedekind.hpp"
#include "pureorder/monogeneity.hpp"
#include "pureorder/oracle.hpp"
#include "pureorder/radical.hpp"
#include "pureorder/wieferich_witness.hpp"

namespace pureorder {

using json = nlohmann::json;

// Every mathematically unbounded integer is emitted as a decimal
// string so consumers never round through doubles; structural counts
// ride along as strings too for a uniform schema.

json to_json(const Factorization& f);
json to_json(const IntPoly& f);
json to_json(const ModPoly& f);
json to_json(const AlgebraicElement& x);
json to_json(const OrderLattice& o);
json to_json(const PureField& f);
json to_json(const DedekindReport& r);
json to_json(const MaxOrderResult& r);
json to_json(const ChiReport& r);
json to_json(const StructureReport& r);
json to_json(const MonogeneityVerdict& v);
json to_json(const AuditReport& r);

// "-3 * 19^2" style rendering of a factored integer
std::string to_string(const Factorization& f);

// "19^(1/3)" style rendering of the field generator
std::string radical_name(const PureField& f);

} // namespace pureorder

#endif
