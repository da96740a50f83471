#pragma once

#include "residue_lab/number.hpp"

#include <optional>
#include <string>

namespace rlab {

// One computed quantity against one bound. `pass` is present only for
// statements whose constant is 1 (exact theorems); everything else is a
// ratio report with the implied constant set to 1.
struct BoundCheck {
    u64 p = 0;
    std::string quantity;
    u128 value = 0;
    double rhs = 0.0;
    double ratio = 0.0;
    std::optional<bool> pass;
    std::string paper_tag;
    std::string params;
};

inline BoundCheck make_check(u64 p, std::string quantity, u128 value, double rhs,
                             std::optional<bool> pass, std::string paper_tag,
                             std::string params = "") {
    BoundCheck c;
    c.p = p;
    c.quantity = std::move(quantity);
    c.value = value;
    c.rhs = rhs;
    c.ratio = (value == 0 && rhs == 0.0)
                  ? 0.0
                  : static_cast<double>(static_cast<long double>(value) / rhs);
    c.pass = pass;
    c.paper_tag = std::move(paper_tag);
    c.params = std::move(params);
    return c;
}

} // namespace rlab
