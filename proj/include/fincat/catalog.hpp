#pragma once

#include "fincat/category.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fincat {

/// A named test category with hand-derived strict/weak well-foundedness labels.
struct Fixture {
    std::string name;
    CatPtr category;
    bool strictly_well_founded = false;
    bool well_founded = false;
};

const std::vector<Fixture>& catalog();

std::optional<Fixture> fixture_by_name(const std::string& name);

} // namespace fincat
