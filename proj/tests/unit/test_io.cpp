#include <doctest.h>

#include "gkz/io.hpp"
#include "gkz/restriction.hpp"

using namespace gkz;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("complex literal parsing") {
    CHECK(parse_complex("0.5") == Complex{0.5, 0.0});
    CHECK(parse_complex("-0.7+0.2i") == Complex{-0.7, 0.2});
    CHECK(parse_complex("0.3-1i") == Complex{0.3, -1.0});
    CHECK(parse_complex("2i") == Complex{0.0, 2.0});
    CHECK(parse_complex("-i") == Complex{0.0, -1.0});
    CHECK(parse_complex("1e-3+2e-4i") == Complex{1e-3, 2e-4});
    CHECK_THROWS_AS(parse_complex("abc"), ValidationError);
}

TEST_CASE("sector point parsing") {
    SectorPoint p = parse_sector_point("1.5@3.14");
    CHECK(p.modulus == 1.5);
    CHECK(p.argument == 3.14);
    SectorPoint q = parse_sector_point("2@pi");
    CHECK(q.argument == doctest::Approx(kPi));
    CHECK_THROWS_AS(parse_sector_point("1.5"), ValidationError);
}

TEST_CASE("series JSON round trip") {
    SeriesLabel label;
    label.A = {2, 3};
    label.beta = {0.5, 0.0};
    label.j = 0;
    label.variant = SeriesVariant::psi2;
    FractionalSeries s = psi_series(2, 3, label.beta, 0, 5);
    Json doc = series_to_json(s, label);
    CHECK(doc["schema"] == "v1");
    CHECK(doc["terms"].size() == 6);
    CHECK(doc["polynomial"] == false);

    SeriesLabel back_label;
    FractionalSeries back = series_from_json(doc, &back_label);
    CHECK(back.nvars == s.nvars);
    CHECK(back.terms == s.terms);
    CHECK(back.base_exponents == s.base_exponents);
    CHECK(back.truncation == s.truncation);
    CHECK(back_label.A == label.A);
    CHECK(back_label.variant == SeriesVariant::psi2);
    // emitted JSON is deterministic
    CHECK(series_to_json(back, back_label).dump() == doc.dump());
}

TEST_CASE("cycle JSON round trip") {
    Cycle c = build_tilde_cycle(cycle_Cp(1, 3, 0.5), 2, {0.7, 0.0}, 1);
    Json doc = cycle_to_json(c);
    Cycle back = cycle_from_json(doc);
    REQUIRE(back.terms.size() == c.terms.size());
    for (size_t i = 0; i < c.terms.size(); ++i) {
        CHECK(back.terms[i].weight == c.terms[i].weight);
        REQUIRE(back.terms[i].segments.size() == c.terms[i].segments.size());
        for (size_t k = 0; k < c.terms[i].segments.size(); ++k) {
            const PathSegment& got = back.terms[i].segments[k];
            const PathSegment& want = c.terms[i].segments[k];
            CHECK(got.kind == want.kind);
            CHECK(got.radius == want.radius);
            if (want.kind == PathSegment::Kind::Arc) {
                CHECK(got.arg_from == want.arg_from);
                CHECK(got.arg_to == want.arg_to);
            } else {
                CHECK(got.arg == want.arg);
            }
        }
    }
    CHECK(cycle_to_json(back).dump() == doc.dump());
}

TEST_CASE("coefficient table JSON round trip") {
    CoefficientTable t = expansion_table(2, 3, {0.3, 0.0}, 1, SectorPoint(1.0, kPi), 4);
    t.gevrey_s = 1.49;
    Json doc = table_to_json(t);
    CHECK(doc["kind"] == "coefficient_table");
    CHECK(doc["entries"].size() == t.entries.size());
    bool has_disc = false;
    for (const auto& e : doc["entries"])
        if (e.contains("discrepancy")) has_disc = true;
    CHECK(has_disc);
    CoefficientTable back = table_from_json(doc);
    CHECK(back.entries.size() == t.entries.size());
    CHECK(back.gevrey_s.has_value());
    CHECK(table_to_json(back).dump() == doc.dump());
}
