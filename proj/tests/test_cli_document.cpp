#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "homyd/catalog.hpp"
#include "homyd/spec_document.hpp"

using namespace homyd;
using nlohmann::json;

namespace {

std::string read_suite(const std::string& name) {
    std::ifstream in(std::string(HOMYD_SUITES_DIR) + "/" + name, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json c2_document() {
    return json::parse(R"({
        "field": "rational",
        "structures": {
            "H": {
                "kind": "hom_bialgebra",
                "dim": 2,
                "mu": [[["1", "0"], ["0", "1"]], [["0", "1"], ["1", "0"]]],
                "delta": [[["1", "0"], ["0", "0"]], [["0", "0"], ["0", "1"]]],
                "alpha": [["1", "0"], ["0", "1"]]
            }
        },
        "tasks": [{"name": "h", "op": "check_hom_bialgebra", "args": ["H"]}]
    })");
}

std::string expect_document_error(const std::string& text) {
    try {
        parse_spec(text);
    } catch (const DocumentError& e) {
        return e.what();
    }
    ADD_FAILURE() << "document parsed";
    return "";
}

const TaskResult& find(const ReportBundle& b, const std::string& name) {
    for (const auto& r : b.results)
        if (r.name == name) return r;
    throw std::runtime_error("no task " + name);
}

}  // namespace

TEST(ParseSpec, EmptyTaskListIsANoOp) {
    auto d = parse_spec(R"({"field": "rational", "structures": {}, "tasks": []})");
    auto b = run_tasks(d);
    EXPECT_TRUE(b.results.empty());
    EXPECT_TRUE(b.all_passed());
}

TEST(ParseSpec, C6TwistRoundTrips) {
    auto d = example_document("cyclic_twist", {"6", "5", "0"});
    const auto text = serialize(d);
    auto back = parse_spec(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(serialize(back), text);
    auto b = run_tasks(back);
    ASSERT_EQ(b.results.size(), 1u);
    EXPECT_TRUE(b.all_passed());
    for (const char* s : {"suite_rational.json", "suite_prime7.json", "suite_prime11.json"}) {
        const auto shipped = read_suite(s);
        EXPECT_EQ(serialize(parse_spec(shipped)), shipped) << s;
    }
}

TEST(ParseSpec, UnresolvedReferenceIsNamed) {
    auto j = c2_document();
    j["tasks"].push_back({{"name", "m"}, {"op", "check_yd"}, {"args", {"M9"}}});
    const auto msg = expect_document_error(j.dump());
    EXPECT_NE(msg.find("\"M9\""), std::string::npos) << msg;
    EXPECT_NE(msg.find("unresolved"), std::string::npos) << msg;
    auto k = c2_document();
    k["structures"]["Y"] = json::parse(R"({"kind": "yd", "over": "M9", "dim": 1, "act": [[["1"]], [["1"]]],
                                           "coact": [[["1"], ["0"]]], "alpha": [["1"]]})");
    EXPECT_NE(expect_document_error(k.dump()).find("\"M9\""), std::string::npos);
}

TEST(ParseSpec, ScalarsAndDimensions) {
    auto j = c2_document();
    j["field"] = "prime:5";
    EXPECT_NO_THROW(parse_spec(j.dump()));
    j["structures"]["H"]["alpha"][0][0] = "6";
    const auto msg = expect_document_error(j.dump());
    EXPECT_NE(msg.find("not reduced"), std::string::npos) << msg;
    EXPECT_NE(msg.find("alpha"), std::string::npos) << msg;
    auto q = c2_document();
    q["structures"]["H"]["alpha"][0][0] = "2/4";
    auto d = std::get<SpecDocument<RationalField>>(parse_spec(q.dump()));
    EXPECT_EQ((*d.structures.at("H").alpha)[0][0], Rational(mpq_class(1, 2)));
    q["structures"]["H"]["alpha"][0][0] = 0.5;
    EXPECT_NE(expect_document_error(q.dump()).find("string"), std::string::npos);
    auto bad_dim = c2_document();
    bad_dim["structures"]["H"]["alpha"] = json::parse(R"([["1", "0", "0"], ["0", "1", "0"]])");
    EXPECT_NE(expect_document_error(bad_dim.dump()).find("entries"), std::string::npos);
    auto bad_field = c2_document();
    bad_field["field"] = "prime:6";
    EXPECT_EQ(expect_document_error(bad_field.dump()).rfind("field", 0), 0u);
}

TEST(ParseSpec, SyntaxErrorsCarryLineAndColumn) {
    try {
        parse_spec("{\n  \"field\": \"rational\",\n  \"tasks\": [,]\n}");
        FAIL() << "parsed";
    } catch (const DocumentError& e) {
        EXPECT_EQ(e.location(), "3:13");
    }
    try {
        parse_spec(read_suite("malformed.json"));
        FAIL() << "parsed";
    } catch (const DocumentError& e) {
        EXPECT_NE(e.location().find(':'), std::string::npos);
    }
}

TEST(RunTasks, PerturbedSuitePinpointsLawAndIndex) {
    auto b = run_tasks(parse_spec(read_suite("perturbed_suite.json")));
    EXPECT_FALSE(b.all_passed());
    const auto& r = find(b, "yd_Y5a");
    EXPECT_EQ(r.status, "fail");
    // The perturbed constant sits in the coaction of basis vector 1.
    bool pinpointed = false;
    for (const auto& f : r.failures)
        if (f.at("law") == "comodule_alpha_compat" && f.at("index") == json::array({1})) {
            pinpointed = true;
            EXPECT_NE(f.at("lhs"), f.at("rhs"));
        }
    EXPECT_TRUE(pinpointed);
    EXPECT_TRUE(find(b, "yd_Y5b").passed());
    EXPECT_TRUE(find(b, "qt_R5_4").passed());
    EXPECT_EQ(find(b, "braid_hybe_Y5bY5aY5a").status.rfind("inapplicable", 0), 0u);
    auto clean = run_tasks(parse_spec(read_suite("suite_prime11.json")));
    EXPECT_TRUE(clean.all_passed());
    ASSERT_EQ(clean.results.size(), b.results.size());
}

TEST(RunTasks, NonInvertibleAlphaIsInapplicable) {
    DocumentBuilder<RationalField> b(RationalField{});
    auto h = cyclic_endo_twist(RationalField{}, 4, 2);
    b.hom_bialgebra("H", h);
    const RationalField Q;
    b.yd("Y", "H", YDModule<RationalField>(h, LinearMap<RationalField>(Q, {1}, {4, 1}), LinearMap<RationalField>(Q, {4, 1}, {1}),
                                           LinearMap<RationalField>::identity(Q, {1})));
    b.task("yd", "check_yd", {"Y"});
    b.task("hexagons", "check_hexagons", {"Y", "Y", "Y"}, "hat");
    b.task("hom", "check_hom_bialgebra", {"H"});
    auto d = b.build();
    auto rep = run_tasks(parse_spec(serialize(d)));
    EXPECT_EQ(rep.results[0].status.rfind("inapplicable: ", 0), 0u) << rep.results[0].status;
    EXPECT_EQ(rep.results[1].status.rfind("inapplicable: ", 0), 0u) << rep.results[1].status;
    EXPECT_NE(rep.results[0].status, "fail");
    EXPECT_TRUE(rep.results[2].passed());
    EXPECT_FALSE(rep.all_passed());
    EXPECT_NE(rep.to_human().find("2 inapplicable"), std::string::npos);
}

TEST(RunTasks, ParallelRunsAreByteIdentical) {
    for (const char* s : {"suite_rational.json", "suite_prime11.json", "perturbed_suite.json"}) {
        auto d = parse_spec(read_suite(s));
        const auto serial = run_tasks(d, 1, s).to_json().dump(2);
        for (std::size_t w : {2u, 4u, 16u}) EXPECT_EQ(run_tasks(d, w, s).to_json().dump(2), serial) << s << " " << w;
        EXPECT_EQ(run_tasks(d, 1, s).to_human(), run_tasks(d, 3, s).to_human());
    }
}

TEST(ExampleDocument, NamedGenerators) {
    EXPECT_TRUE(run_tasks(example_document("s3_conjugation", {"1", "0"})).all_passed());
    EXPECT_TRUE(run_tasks(example_document("graded_yd", {"5", "4", "11"})).all_passed());
    EXPECT_TRUE(run_tasks(example_document("r_matrix", {"3", "7", "2", "1"})).all_passed());
    EXPECT_TRUE(run_tasks(example_document("bicharacter", {"5", "11", "3", "4"})).all_passed());
    EXPECT_FALSE(run_tasks(example_document("bicharacter", {"5", "11", "3", "2"})).all_passed());
    EXPECT_TRUE(std::holds_alternative<SpecDocument<PrimeField>>(example_document("suite", {"7"})));
    EXPECT_THROW(example_document("r_matrix", {"3", "7", "9", "1"}), PreconditionError);
    EXPECT_THROW(example_document("nope", {}), PreconditionError);
    EXPECT_THROW(example_document("cyclic_twist", {"6", "5"}), PreconditionError);
}

TEST(ReportBundle, JsonShape) {
    auto b = run_tasks(parse_spec(c2_document().dump()), 1, "c2");
    auto j = b.to_json();
    EXPECT_EQ(j.at("source"), "c2");
    EXPECT_EQ(j.at("field"), "rational");
    ASSERT_EQ(j.at("tasks").size(), 1u);
    EXPECT_EQ(j.at("tasks")[0].at("status"), "pass");
    EXPECT_EQ(j.at("tasks")[0].at("passed"), true);
}
