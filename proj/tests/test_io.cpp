#include <doctest.h>

#include "helpers.hpp"
#include "liepoisson/io.hpp"

using namespace liepoisson;

TEST_CASE("matrix JSON roundtrip")
{
    Rng rng = make_rng(81);
    for (const auto& inst : testing::instances()) {
        const Mat g = sample(inst, GroupSpace::G0, rng);
        const Json j = matrix_to_json(inst, g);
        CHECK(j["kind"] == (inst.is_group() ? "group" : "grass"));
        CHECK(j.contains("block2") == inst.is_group());
        const auto [back_inst, back] = matrix_from_json(Json::parse(j.dump()));
        CHECK(back_inst.name() == inst.name());
        CHECK(frob(back - g) == 0.0);
    }
    const Mat m = testing::mat({{1, testing::I}, {2, 3}, {0, -1}});
    CHECK(frob(plain_matrix_from_json(plain_matrix_to_json(m)) - m) == 0.0);
}

TEST_CASE("malformed matrix JSON")
{
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"kind":"grass"})")), Error);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"({"kind":"ring","n":2,"rows":2,"cols":2,"data":[]})")), Error);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(
                        R"({"kind":"grass","p":1,"q":1,"rows":2,"cols":2,"data":[[1,0],[0,0],[0,0]]})")),
                    Error);
    CHECK_THROWS_AS(plain_matrix_from_json(Json::parse(R"({"rows":1,"cols":1,"data":[["x",0]]})")), Error);
}
