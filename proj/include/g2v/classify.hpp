#pragma once

#include "g2v/singular.hpp"

#include <string>
#include <vector>

#include "json.hpp"

namespace g2v {

// One reducibility type present at a lowest weight, together with the lowest
// weight of the submodule its singular vector generates.
struct Finding {
    SvType sv_type;
    Weight target;
    bool operator==(const Finding&) const = default;
};

// Weight reached from lw by the singular vector of type t.
Weight target_weight(const Weight& lw, const SvType& t);

// All types whose parameter candidates are positive integers at lw, in type
// order i..v. Type iii additionally requires p != q and p != 2q.
std::vector<Finding> classify(const Weight& lw);

// "irreducible" or "A" followed by the ascending digits of the types present.
std::string case_label(const std::vector<Finding>& findings);

nlohmann::json finding_to_json(const Finding& f);

}  // namespace g2v
