#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cen/cli.hpp"
#include "support.hpp"

using namespace cen;
using namespace cen::testing;
using nlohmann::json;

namespace {

std::string write_temp(const json& doc) {
    static int counter = 0;
    const auto path = std::filesystem::temp_directory_path() /
                      ("cenalg_cli_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json");
    std::ofstream(path) << doc.dump();
    return path.string();
}

json q_file(std::initializer_list<std::initializer_list<long>> rows) {
    json r = json::array();
    for (const auto& row : rows) r.push_back(json(std::vector<long>(row)));
    return {{"field", "q"}, {"rows", r}};
}

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
    args.insert(args.begin(), {"--format", "json"});
    const auto r = invoke(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("jordan command") {
    CHECK(invoke_json({"jordan", write_temp(q_file({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}))})["sizes"] == json({2, 1}));
    CHECK(invoke_json({"jordan", write_temp(q_file({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}))})["sizes"] == json({1, 1, 1}));
    std::mt19937_64 rng(51);
    const auto a = planted_nilpotent<ModP>(JordanType({2, 2, 1}), F(7), rng);
    const json doc{{"field", "fp"}, {"p", 7}, {"rows", cli::matrix_to_json(a)}};
    const auto j = invoke_json({"jordan", write_temp(doc)});
    CHECK(j["sizes"] == json({2, 2, 1}));
    CHECK(j["n"] == 2);
    CHECK(j["m"] == 3);
}

TEST_CASE("centralizer command") {
    const auto j = invoke_json({"centralizer", "--check", write_temp(q_file({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}))});
    CHECK(j["dimension"] == 5);
    CHECK(j["check"]["agree"] == true);
    const json zero{{"field", "fp"}, {"p", 5}, {"rows", {{0, 0}, {0, 0}}}};
    CHECK(invoke_json({"centralizer", write_temp(zero)})["dimension"] == 4);
    json h = json::array();
    for (int r = 0; r < 3; ++r) {
        json row = json::array();
        for (int c = 0; c < 3; ++c) row.push_back({r == 0 && c == 1 ? "1" : "0", "0", "0", "0"});
        h.push_back(row);
    }
    const auto jh = invoke_json({"centralizer", "--check", write_temp({{"field", "hq"}, {"rows", h}})});
    CHECK(jh["dimension"] == 20);
    CHECK(jh["check"]["agree"] == true);

    const auto split = invoke_json({"centralizer", "--check", write_temp(q_file({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}))});
    CHECK(split["nilpotent"] == false);
    CHECK(split["dimension"] == 5);
    CHECK(split["check"]["brute"] == 5);
}

TEST_CASE("report command") {
    const auto file = write_temp(q_file({{0, 1, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}}));
    const auto j = invoke_json({"report", "--check", "--trials", "20", file});
    REQUIRE(j["blocks"].size() == 1);
    const auto& b = j["blocks"][0];
    CHECK(b["pi_degree"] == 2);
    CHECK(b["radical_dim"] == 8);
    CHECK(b["trace_form_radical_dim"] == 8);
    CHECK(b["quotient"] == json({"M_2", "M_1"}));
    CHECK(b["identities"][0]["failures"].empty());
    CHECK(b["identities"][1]["copies"] == 4);
    CHECK(j["consistent"] == true);
}

TEST_CASE("contain command") {
    const auto j3 = write_temp(q_file({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    const auto j3sq = write_temp(q_file({{0, 0, 1}, {0, 0, 0}, {0, 0, 0}}));
    const auto c = invoke_json({"contain", j3, j3sq});
    CHECK(c["contained"] == true);
    CHECK(c["h_text"] == "z^2");
    CHECK(c["h"] == json({"0", "0", "1"}));

    const auto j22 = write_temp(q_file({{0, 1, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}}));
    const auto swap = write_temp(q_file({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}}));
    const auto n = invoke_json({"contain", j22, swap});
    CHECK(n["contained"] == false);
    const auto w = std::get<Matrix<Rational>>(cli::parse_matrix({{"field", "q"}, {"rows", n["witness"]}}));
    const auto a = jordan_matrix<Rational>(JordanType({2, 2}), Q());
    const auto s = mat<Rational>(Q(), {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
    CHECK(w * a == a * w);
    CHECK_FALSE(w * s == s * w);
}

TEST_CASE("identity command is deterministic") {
    const auto file = write_temp(q_file({{0, 0}, {0, 0}}));
    const auto s3a = invoke({"--format", "json", "identity", file, "--degree", "3", "--trials", "5", "--seed", "7"});
    const auto s3b = invoke({"--format", "json", "identity", file, "--degree", "3", "--trials", "5", "--seed", "7"});
    CHECK(s3a.code == 0);
    CHECK(s3a.out == s3b.out);
    CHECK_FALSE(json::parse(s3a.out)["failures"].empty());
    const auto s4 = invoke_json({"identity", file, "--trials", "10"});
    CHECK(s4["degree"] == 4);
    CHECK(s4["failures"].empty());
    CHECK(invoke_json({"identity", file, "--kind", "product", "--trials", "5"})["identity"] == "product");
}

TEST_CASE("JSON output round-trips byte for byte") {
    const auto j21 = write_temp(q_file({{0, 1, 0}, {0, 0, 0}, {0, 0, 0}}));
    const auto diag = write_temp(q_file({{2, 0, 0}, {0, 2, 0}, {0, 0, 3}}));
    for (const auto& args : std::vector<std::vector<std::string>>{{"jordan", j21},
                                                                   {"centralizer", "--check", j21},
                                                                   {"centralizer", diag},
                                                                   {"report", "--trials", "5", j21},
                                                                   {"report", "--trials", "5", diag},
                                                                   {"contain", j21, diag},
                                                                   {"identity", j21, "--trials", "3"}}) {
        std::vector<std::string> full{"--format", "json"};
        full.insert(full.end(), args.begin(), args.end());
        const auto r = invoke(full);
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
        CHECK(r.out.find('.') == std::string::npos);
    }
}

TEST_CASE("exit codes") {
    CHECK(invoke({"jordan", write_temp(q_file({{1, 0}, {0, 1}}))}).code == cli::not_nilpotent);
    const auto ns = invoke({"centralizer", write_temp(q_file({{0, -1}, {1, 0}}))});
    CHECK(ns.code == cli::not_nilpotent);
    CHECK(ns.err.find("z^2 + 1") != std::string::npos);
    CHECK(invoke({"jordan", write_temp(q_file({{0, 1, 0}, {0, 0, 0}}))}).code == cli::shape_error);
    CHECK(invoke({"jordan", write_temp({{"field", "q"}, {"rows", {{1, 2}, {3}}}})}).code == cli::shape_error);
    const auto j3 = write_temp(q_file({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}));
    CHECK(invoke({"contain", j3, write_temp(q_file({{0, 1}, {0, 0}}))}).code == cli::shape_error);
    CHECK(invoke({"jordan", write_temp({{"field", "q"}, {"rows", {{1.5}}}})}).code == cli::parse_error);
    CHECK(invoke({"jordan", write_temp({{"field", "fp"}, {"rows", {{1}}}})}).code == cli::parse_error);
    CHECK(invoke({"jordan", write_temp({{"field", "fp"}, {"p", 6}, {"rows", {{1}}}})}).code == cli::parse_error);
    CHECK(invoke({"jordan", write_temp({{"field", "r"}, {"rows", {{1}}}})}).code == cli::parse_error);
    CHECK(invoke({"jordan", write_temp({{"field", "q"}, {"p", 5}, {"rows", {{1}}}})}).code == cli::parse_error);
    CHECK(invoke({"jordan", "/nonexistent/matrix.json"}).code == cli::parse_error);
    CHECK(invoke({"frobnicate"}).code == cli::parse_error);
    CHECK(invoke({"--format", "xml", "jordan", j3}).code == cli::parse_error);
    const json hq{{"field", "hq"}, {"rows", {{{"0", "0", "0", "0"}}}}};
    CHECK(invoke({"report", write_temp(hq)}).code == cli::parse_error);
    const json fp_q{{"field", "fp"}, {"p", 5}, {"rows", {{0}}}};
    CHECK(invoke({"contain", j3, write_temp(fp_q)}).code == cli::parse_error);
    CHECK(invoke({"--help"}).code == cli::ok);
}

TEST_CASE("matrix literals") {
    const auto q = std::get<Matrix<Rational>>(cli::parse_matrix({{"field", "q"}, {"rows", json::array({json::array({"1/2", -3})})}}));
    CHECK(q(0, 0) == Rational(1, 2));
    CHECK(q(0, 1) == Rational(-3));
    const auto f = std::get<Matrix<ModP>>(cli::parse_matrix({{"field", "fp"}, {"p", 7}, {"rows", {{-1, "15"}}}}));
    CHECK(f(0, 0) == ModP(6, 7));
    CHECK(f(0, 1) == ModP(1, 7));
    const auto h = std::get<Matrix<Quaternion>>(cli::parse_matrix({{"field", "hq"}, {"rows", {{{"1/2", 0, "-1", 2}}}}}));
    CHECK(h(0, 0) == Quaternion(Rational(1, 2), 0, -1, 2));
    CHECK(cli::scalar_to_json(h(0, 0)) == json({"1/2", "0", "-1", "2"}));
    CHECK(cli::scalar_to_json(ModP(3, 7)) == json(3));
    CHECK_THROWS_AS(cli::parse_matrix({{"field", "fp"}, {"p", 7}, {"rows", {{"1/2"}}}}), ParseError);
    CHECK_THROWS_AS(cli::parse_matrix({{"field", "hq"}, {"rows", {{{1, 2, 3}}}}}), ParseError);
    CHECK(cli::render_text({{"a", 1}, {"b", {{"c", "x"}}}}) == "a: 1\nb:\n  c: x\n");
}

}
