#pragma once

#include <json.hpp>

#include "syzforms/dist.hpp"
#include "syzforms/form_space.hpp"
#include "syzforms/forms.hpp"
#include "syzforms/resolution.hpp"

namespace syzforms {

nlohmann::json betti_json(const BettiTable& t);
nlohmann::json form_json(const PForm& w);
PForm form_from_json(const nlohmann::json& j, const Ring& ring);
nlohmann::json form_space_json(const FormSpace& s);
nlohmann::json chern_json(const ChernClasses& c);
nlohmann::json cohomology_json(int i, int twist, long dim);

}  // namespace syzforms
