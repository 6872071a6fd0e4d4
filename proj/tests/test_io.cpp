#include <aa/json_io.hpp>
#include <aa/selfcheck.hpp>

#include <doctest.h>

using namespace aa;

TEST_CASE("rational strings") {
    CHECK(to_string(Rat(3, 7)) == "3/7");
    CHECK(to_string(Rat(-2)) == "-2");
    CHECK(parse_rational("3/7") == Rat(3, 7));
    CHECK(parse_rational("-2") == Rat(-2));
    CHECK(parse_rational("4/6") == Rat(2, 3));
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK(rat_from_json(rat_to_json(Rat(-22, 7))) == Rat(-22, 7));
}

TEST_CASE("surface document") {
    SurfaceModel s = blow_up(make_hirzebruch(2), CenterSpec{{{0, 1}}});
    json j = to_json(s);
    CHECK(j["base"]["type"] == "hirzebruch");
    CHECK(j["base"]["n"] == 2);
    CHECK(j["rank"] == 3);
    CHECK(j["blowups"].size() == 1);
    CHECK(j["blowups"][0]["on"][0] == 0);
}

TEST_CASE("form documents") {
    LinearForm f = LinearForm(Rat(1, 2)) + LinearForm::variable(1, Rat(-3));
    json j = to_json(f);
    CHECK(j["constant"] == "1/2");
    CHECK(j["coeffs"]["1"] == "-3");

    QuadraticForm q;
    q.constant = 1;
    q.quadratic[{0, 1}] = Rat(2);
    json qj = to_json(q);
    CHECK(qj["quadratic"][0]["coeff"] == "2");
}

TEST_CASE("certificate round trip") {
    HomogeneousSystem sys;
    sys.dim = 2;
    sys.columns = {{Rat(1), Rat(-1)}, {Rat(0), Rat(1)}};
    FeasibilityCertificate cert = gordan_feasible(sys);
    REQUIRE(cert.feasible);

    json doc = {{"system", to_json(sys)}, {"certificate", to_json(cert)}};
    HomogeneousSystem sys2 = homogeneous_system_from_json(doc["system"]);
    FeasibilityCertificate cert2 = certificate_from_json(doc["certificate"]);
    CHECK(sys2.columns == sys.columns);
    CHECK(verify_certificate(sys2, cert2));

    FeasibilityCertificate dual;
    dual.feasible = false;
    dual.dual = {Rat(1, 2), Rat(1, 2)};
    CHECK_FALSE(certificate_from_json(to_json(dual)).feasible);
    CHECK(certificate_from_json(to_json(dual)).dual == dual.dual);
}

TEST_CASE("document envelope") {
    json doc = make_document("tail-classification", json::object());
    CHECK(doc["schema"] == "aa-schema/1");
    CHECK(doc["kind"] == "tail-classification");
}

TEST_CASE("evidence document") {
    SurfaceModel s = make_hirzebruch(1);
    TailSequenceSpec spec{s, hirzebruch_zf_chain(s), 1, 0};
    TailEvidence ev = classify_tail(spec, {});
    json j = to_json(ev);
    CHECK(j["verdict"] == "ALF_ModuloCurves");
    CHECK(j["budget"] == "3");
    CHECK(j["origin"]["in_closure"] == true);
    // embedded certificate re-verifies from the document alone
    CHECK(verify_certificate(homogeneous_system_from_json(j["origin"]["system"]),
                             certificate_from_json(j["origin"]["certificate"])));
}

TEST_CASE("csv rendering") {
    std::string csv = points_csv({"b1", "b2"}, {{Rat(1, 3), Rat(0)}, {Rat(2), Rat(-1, 2)}});
    CHECK(csv == "b1,b2\n1/3,0\n2,-1/2\n");
}
