#pragma once

#include "moorex/expansion.hpp"
#include "moorex/report.hpp"

namespace moorex::detail {

Json json_big(const BigInt& v);
void put_rational(Json& j, const std::string& key, const Rational& r);
Json bound_entry_json(const BoundEntry& e);
Json check_lower_bound(const BoundEntry& e, const Rational& measured);
Json check_upper_bound(const BoundEntry& e, double measured);

}  // namespace moorex::detail
