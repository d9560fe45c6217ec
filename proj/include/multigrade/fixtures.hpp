#pragma once

#include <string_view>
#include <vector>

#include "multigrade/chain.hpp"

namespace multigrade {

// Historic degree-2 chains over 1..18 and 1..27, embedded so the CLI and
// tests work offline.
struct Fixture {
    const char* id;
    const char* note;
    Chain chain; // canonical, claimed degree 2
};

const std::vector<Fixture>& builtin_fixtures();

// nullptr when the id is unknown
const Fixture* find_fixture(std::string_view id);

} // namespace multigrade
