#include "multigrade/fixtures.hpp"

namespace multigrade {

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> fixtures = [] {
        std::vector<Fixture> out;
        auto add = [&out](const char* id, const char* note,
                          std::vector<std::vector<Elem>> sets) {
            out.push_back(Fixture{id, note, canonicalize(make_chain(2, std::move(sets)))});
        };
        add("prouhet-27", "Prouhet's three-set split of 1..27",
            {{1, 6, 8, 12, 14, 16, 20, 22, 27},
             {2, 4, 9, 10, 15, 17, 21, 23, 25},
             {3, 5, 7, 11, 13, 18, 19, 24, 26}});
        add("18a", "pair-base split of 1..18, offsets (1,2,3)",
            {{1, 5, 9, 12, 14, 16},
             {2, 6, 7, 10, 15, 17},
             {3, 4, 8, 11, 13, 18}});
        add("18b", "pair-base split of 1..18, offsets (1,3,2)",
            {{1, 6, 8, 11, 15, 16},
             {3, 5, 7, 10, 14, 18},
             {2, 4, 9, 12, 13, 17}});
        add("27a", "latin-base split of 1..27, offsets (1,2,3)",
            {{1, 6, 8, 11, 13, 18, 21, 23, 25},
             {2, 4, 9, 12, 14, 16, 19, 24, 26},
             {3, 5, 7, 10, 15, 17, 20, 22, 27}});
        add("27b", "latin-base split of 1..27, offsets (1,3,2)",
            {{1, 5, 9, 12, 13, 17, 20, 24, 25},
             {2, 6, 7, 10, 14, 18, 21, 22, 26},
             {3, 4, 8, 11, 15, 16, 19, 23, 27}});
        add("27c", "fourth split of 1..27, not produced by the constructions",
            {{1, 5, 9, 11, 15, 16, 21, 22, 26},
             {2, 6, 7, 12, 13, 17, 19, 23, 27},
             {3, 4, 8, 10, 14, 18, 20, 24, 25}});
        return out;
    }();
    return fixtures;
}

const Fixture* find_fixture(std::string_view id) {
    for (const auto& f : builtin_fixtures())
        if (id == f.id) return &f;
    return nullptr;
}

} // namespace multigrade
