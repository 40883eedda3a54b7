#include "spg/cost.hpp"

#include <ostream>

#include "spg/error.hpp"

namespace spg {

CostValue operator+(CostValue a, CostValue b) {
    if (a.is_top() || b.is_top()) {
        return CostValue::top();
    }
    Cost sum = 0;
    if (__builtin_add_overflow(a.value(), b.value(), &sum) || sum == std::numeric_limits<Cost>::max()) {
        throw Error(ErrorCode::CostOverflow, "cost sum exceeds the 63-bit range");
    }
    return sum;
}

std::string CostValue::str() const { return is_top() ? std::string("T") : std::to_string(value_); }

std::ostream& operator<<(std::ostream& os, CostValue v) { return os << v.str(); }

std::ostream& operator<<(std::ostream& os, const CostPair& p) {
    return os << '(' << p.decider << ',' << p.follower << ')';
}

} // namespace spg
