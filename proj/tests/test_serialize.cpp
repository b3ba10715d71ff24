#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "rankcodes/serialize.hpp"
#include "test_helpers.hpp"

using namespace rankcodes;
using namespace rankcodes::testing;
using nlohmann::json;

namespace {

errc code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return errc::bad_input;
}

std::string message_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.what();
    }
    return {};
}

RankCode gab34(unsigned k) {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    const Fqm a = f->alpha();
    return gabidulin(f, {{1, a, f->pow(a, 2), f->pow(a, 3)}, k, 1});
}

}  // namespace

TEST_CASE("field round trip") {
    const FieldPtr f = make_field(3, 4, {2, 0, 0, 2, 1});
    const json j = field_to_json(*f);
    CHECK(j["q"] == 3);
    CHECK(j["m"] == 4);
    CHECK(j["modulus"] == json::array({2, 0, 0, 2, 1}));
    const FieldPtr back = field_from_json(j);
    CHECK(*back == *f);
}

TEST_CASE("field parse failures name the offending key") {
    CHECK(code_of([] { field_from_json(json{{"m", 4}}); }) == errc::bad_input);
    CHECK(message_of([] { field_from_json(json{{"m", 4}}); }).find("field.q") != std::string::npos);
    CHECK(code_of([] { field_from_json(json{{"q", 3}, {"m", 4}}); }) == errc::bad_input);
    CHECK(code_of([] { field_from_json(json::array()); }) == errc::bad_input);
    CHECK(code_of([] { field_from_json(json{{"q", 3}, {"m", 4}, {"modulus", "x"}}); }) == errc::bad_input);
    // Semantic validation still happens in the Field constructor.
    CHECK(code_of([] { field_from_json(json{{"q", 4}, {"m", 2}, {"modulus", json::array({1, 1, 1})}}); }) ==
          errc::not_prime);
}

TEST_CASE("matrix round trip at both levels") {
    const Matrix ext = ext_matrix({{1, 0, 3, 9}, {0, 1, 9, 6}});
    const json je = matrix_to_json(ext);
    CHECK(je["field"] == "ext");
    CHECK(je["rows"] == 2);
    CHECK(je["cols"] == 4);
    CHECK(matrix_from_json(je) == ext);

    const Matrix base = base_matrix({{1, 0}, {2, 1}});
    const json jb = matrix_to_json(base);
    CHECK(jb["field"] == "base");
    CHECK(matrix_from_json(jb) == base);
}

TEST_CASE("matrix parse failures") {
    const json good{{"field", "ext"}, {"rows", 1}, {"cols", 2}, {"entries", json::array({json::array({1, 2})})}};
    CHECK_NOTHROW(matrix_from_json(good));

    json bad = good;
    bad.erase("entries");
    CHECK(code_of([&] { matrix_from_json(bad); }) == errc::bad_input);
    CHECK(message_of([&] { matrix_from_json(bad); }).find("entries") != std::string::npos);

    bad = good;
    bad["field"] = "galois";
    CHECK(code_of([&] { matrix_from_json(bad); }) == errc::bad_input);

    bad = good;
    bad["entries"] = json::array({json::array({1})});  // jagged vs cols = 2
    CHECK(code_of([&] { matrix_from_json(bad); }) == errc::bad_input);

    bad = good;
    bad["entries"] = json::array({json::array({1, -2})});
    CHECK(code_of([&] { matrix_from_json(bad); }) == errc::bad_input);

    bad = good;
    bad["rows"] = 2;  // one row supplied
    CHECK(code_of([&] { matrix_from_json(bad); }) == errc::bad_input);
}

TEST_CASE("code round trip") {
    const RankCode c = gab34(2);
    const json j = code_to_json(c);
    CHECK(j["n"] == 4);
    CHECK(j["k"] == 2);
    CHECK(j["field"]["q"] == 3);
    REQUIRE(j["generator"].is_array());
    const RankCode back = code_from_json(j);
    CHECK(*back.field() == *c.field());
    CHECK(back.generator() == c.generator());
    CHECK(same_row_space(back, c));
}

TEST_CASE("code parse failures include semantic validation") {
    const json f34{{"q", 3}, {"m", 4}, {"modulus", json::array({2, 0, 0, 2, 1})}};
    json j{{"field", f34},
           {"n", 4},
           {"k", 2},
           {"generator", json::array({json::array({1, 0, 1, 1}), json::array({0, 1, 1, 1})})}};
    CHECK_NOTHROW(code_from_json(j));

    json bad = j;
    bad["generator"] = json::array({json::array({1, 2, 0, 1}), json::array({2, 1, 0, 2})});
    CHECK(code_of([&] { code_from_json(bad); }) == errc::rank_deficient_generator);

    bad = j;
    bad["n"] = 5;
    CHECK(code_of([&] { code_from_json(bad); }) == errc::bad_input);  // shape disagrees

    bad = j;
    bad.erase("k");
    CHECK(code_of([&] { code_from_json(bad); }) == errc::bad_input);

    bad = j;
    bad["generator"] = json::array({json::array({1, 0, 1, 1, 0}), json::array({0, 1, 1, 1, 0})});
    CHECK(code_of([&] { code_from_json(bad); }) == errc::bad_input);
}

TEST_CASE("isometry round trip") {
    Isometry iso;
    iso.lambda = 7;
    iso.a = base_matrix({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}});
    iso.sigma = 3;
    const json j = isometry_to_json(iso);
    const Isometry back = isometry_from_json(j);
    CHECK(back.lambda == 7);
    CHECK(back.sigma == 3);
    CHECK(back.a == iso.a);

    json bad = j;
    bad["A"] = json::array({json::array({1, 0})});  // not square
    CHECK(code_of([&] { isometry_from_json(bad); }) == errc::bad_input);
    bad = j;
    bad.erase("lambda");
    CHECK(code_of([&] { isometry_from_json(bad); }) == errc::bad_input);
}

TEST_CASE("verdict serialization") {
    const RankCode good = gab34(2);
    const json pass = mrd_verdict_to_json(is_mrd_minor(good));
    CHECK(pass["is_mrd"] == true);
    CHECK(pass["method"] == "minor");
    CHECK(pass["checked"] == 729);
    CHECK(pass["witness"].is_null());

    const FieldPtr f = good.field();
    const RankCode bad = new_code(f, ext_matrix({{1, 0, 1, 1}, {0, 1, 1, 1}}));

    const json jd = mrd_verdict_to_json(is_mrd_distance(bad));
    CHECK(jd["is_mrd"] == false);
    CHECK(jd["method"] == "distance");
    CHECK(jd["witness"]["type"] == "distance");
    REQUIRE(jd["witness"]["coeffs"].is_array());

    const json js = mrd_verdict_to_json(is_mrd_subspace(bad));
    CHECK(js["witness"]["type"] == "subspace");
    CHECK(js["witness"]["V"].is_array());

    const json jm = mrd_verdict_to_json(is_mrd_minor(bad));
    CHECK(jm["witness"]["type"] == "minor");
    CHECK(jm["witness"]["A"].is_array());
    CHECK(jm["witness"]["minor_cols"].is_array());
}

TEST_CASE("gabidulin verdict serialization") {
    const json j = gabidulin_verdict_to_json(detect_gabidulin(gab34(2)));
    CHECK(j["is_generalized_gabidulin"] == true);
    CHECK(j["valid_steps"] == json::array({1, 3}));
    CHECK(j["dims"]["1"] == 1);
    CHECK(j["dims"]["3"] == 1);
}

TEST_CASE("gamma report serialization") {
    const FieldPtr f = make_field(3, 5, {1, 1, 2, 0, 0, 1});
    const json j = gamma_report_to_json(validate_gamma(ConstructionKind::construction4, *f, 2));
    CHECK(j["kind"] == "construction4");
    CHECK(j["gamma"] == 2);
    CHECK(j["pass"] == true);
    REQUIRE(j["exclusions"].is_array());
    CHECK(j["exclusions"].size() == 4);
    CHECK(j["exclusions"][0]["s"] == 1);
    CHECK(j["exclusions"][0]["value"] == 195);
    CHECK(j["exclusions"][0]["in_base_field"] == false);
}

TEST_CASE("search report serialization") {
    SearchSpace space;
    space.field = make_field(3, 4, {2, 0, 0, 2, 1});
    space.n = 4;
    space.k = 2;
    space.mode = SearchMode::exhaustive;
    space.shard_index = 36975;
    space.shard_total = 1000000;
    const SearchReport report = run_search(space);
    const json j = search_report_to_json(report, space.field);
    CHECK(j["counts"]["candidates_scanned"] == 37);
    CHECK(j["counts"]["mrd_non_gabidulin"] == report.mrd_non_gabidulin);
    CHECK(j["shard"]["index"] == 36975);
    CHECK(j["shard"]["total"] == 1000000);
    REQUIRE(j["exemplars"].is_array());
    REQUIRE_FALSE(j["exemplars"].empty());
    CHECK(j["exemplars"][0]["index"] == 36975);
    const RankCode exemplar = code_from_json(j["exemplars"][0]["code"]);
    CHECK(exemplar.generator() == ext_matrix({{1, 0, 3, 9}, {0, 1, 9, 6}}));
}
