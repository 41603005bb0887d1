#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "irratio/cli.hpp"
#include "irratio/report_json.hpp"

using namespace irratio;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "irratio");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

// RAII override of IRRATIO_MAX_DIGITS.
struct EnvDigits {
    explicit EnvDigits(const char* value) { ::setenv("IRRATIO_MAX_DIGITS", value, 1); }
    ~EnvDigits() { ::unsetenv("IRRATIO_MAX_DIGITS"); }
};

void collect_strings(const Json& j, std::vector<std::string>& out) {
    if (j.is_string())
        out.push_back(j.get<std::string>());
    else if (j.is_structured())
        for (const auto& v : j)
            collect_strings(v, out);
    else
        out.push_back(j.dump());
}

// Every scalar in the JSON report appears on the matching "key: ..." text line.
void check_same_content(const std::vector<std::string>& args) {
    std::vector<std::string> json_args = args;
    json_args.push_back("--json");
    const Result text = run_cli(args), json = run_cli(json_args);
    REQUIRE(text.code == 0);
    REQUIRE(json.code == 0);
    const Json report = Json::parse(json.out);
    std::istringstream lines(text.out);
    std::string line;
    std::size_t matched = 0;
    for (const auto& [key, value] : report.items()) {
        REQUIRE(std::getline(lines, line));
        CHECK(line.rfind(key + ": ", 0) == 0);
        std::vector<std::string> scalars;
        collect_strings(value, scalars);
        for (const auto& s : scalars)
            CHECK(line.find(s) != std::string::npos);
        ++matched;
    }
    CHECK(matched == report.size());
    CHECK_FALSE(std::getline(lines, line));
}

} // namespace

TEST_CASE("digits command") {
    const Result pi = run_cli({"digits", "pi", "--digits", "6"});
    CHECK(pi.code == 0);
    CHECK(pi.out.rfind("3.141592…\n", 0) == 0);
    const Result e = run_cli({"digits", "e", "--digits", "12"});
    CHECK(e.out.rfind("2.718281828459…\n", 0) == 0);
    const Result arch = run_cli({"digits", "pi", "--digits", "8", "--method", "archimedes"});
    CHECK(arch.code == 0);
    CHECK(arch.out.rfind("3.14159265…\n", 0) == 0);
    const Json j = Json::parse(run_cli({"digits", "pi", "--digits", "10", "--json"}).out);
    CHECK(j.at("digits") == "3.1415926535");
    CHECK(j.at("method") == "cos-root");
    const RationalInterval enc = j.at("enclosure").get<RationalInterval>();
    CHECK(enc.width() < ten_to_minus(10));
}

TEST_CASE("witness commands") {
    const Result e = run_cli({"witness", "e", "19/7"});
    CHECK(e.code == 0);
    CHECK(e.out.find("M: -20\n") != std::string::npos);
    CHECK(e.out.find("verdict: CONTRADICTION\n") != std::string::npos);

    const Result pi = run_cli({"witness", "pi2", "10/1"});
    CHECK(pi.code == 0);
    CHECK(pi.out.find("n: 26\n") != std::string::npos);
    CHECK(pi.out.find("N: -4239621545521305164037255254851328000000\n") != std::string::npos);

    CHECK(run_cli({"witness", "pi2", "10", "--n", "27"}).out.find("n: 27\n") != std::string::npos);

    const Result root = run_cli({"witness", "sqrt", "2"});
    CHECK(root.code == 0);
    CHECK(root.out.find("irrational") != std::string::npos);
    const Json sq = Json::parse(run_cli({"witness", "sqrt", "144", "--json"}).out);
    CHECK(sq.at("result") == "perfect-square");
    CHECK(sq.at("root") == "12");
}

TEST_CASE("JSON field names") {
    const Json pi = Json::parse(run_cli({"witness", "pi2", "10/1", "--json"}).out);
    for (const char* key : {"a", "b", "n", "N", "I_enclosure", "upper_bound", "verdict"})
        CHECK(pi.contains(key));
    CHECK(pi.at("I_enclosure").contains("lo"));
    CHECK(pi.at("I_enclosure").contains("hi"));
    CHECK(pi.at("n") == "26");
    const Json e = Json::parse(run_cli({"witness", "e", "19/7", "--json"}).out);
    for (const char* key : {"a", "b", "n", "M", "tail_enclosure", "verdict"})
        CHECK(e.contains(key));
    CHECK(e.at("M") == "-20");
}

TEST_CASE("JSON round trip") {
    const PiWitnessReport pi = pi_witness(10, 1);
    const Json out = Json::parse(run_cli({"witness", "pi2", "10/1", "--json"}).out);
    CHECK(out.get<PiWitnessReport>() == pi);
    CHECK(Json(pi).get<PiWitnessReport>() == pi);
    for (long b = 1; b <= 20; b += 3) {
        const EWitnessReport e = e_witness(3 * b, b);
        CHECK(Json::parse(Json(e).dump()).get<EWitnessReport>() == e);
    }
    for (long a : {1L, 5L, 17L}) {
        const PiWitnessReport r = pi_witness(a, 3);
        CHECK(Json::parse(Json(r).dump()).get<PiWitnessReport>() == r);
    }
    const PiRat v = PiRat::monomial(Rational(Integer(-1), Integer(2)), -2) + PiRat(3);
    CHECK(Json(v).get<PiRat>() == v);
    CHECK_THROWS(Json("MAYBE").get<Verdict>());
}

TEST_CASE("text and JSON modes report the same content") {
    check_same_content({"witness", "pi2", "10/1"});
    check_same_content({"witness", "pi2", "7/3"});
    check_same_content({"witness", "e", "19/7"});
    check_same_content({"witness", "e", "3/1"});
    check_same_content({"check", "squeeze", "--h", "1/2"});
}

TEST_CASE("tables and checks") {
    const Result pascal = run_cli({"pascal", "--rows", "5"});
    CHECK(pascal.out == "1\n1 1\n1 2 1\n1 3 3 1\n1 4 6 4 1\n1 5 10 10 5 1\n");
    const Result arch = run_cli({"archimedes", "--doublings", "4", "--digits", "7"});
    CHECK(arch.code == 0);
    CHECK(arch.out.find("96") != std::string::npos);
    CHECK(arch.out.find("3.1410319… < pi < 3.1427145…") != std::string::npos);
    const Json rows = Json::parse(run_cli({"archimedes", "--doublings", "4", "--json"}).out);
    CHECK(rows.size() == 5);
    CHECK(rows.back().at("sides") == "96");

    const Result cf = run_cli({"cf", "pi", "--depth", "5"});
    CHECK(cf.out.find("[3; 7, 15, 1, 292]") != std::string::npos);
    CHECK(cf.out.find("355/113") != std::string::npos);
    const Json cfe = Json::parse(run_cli({"cf", "e", "--depth", "8", "--json"}).out);
    CHECK(cfe.at("partial_quotients") == Json::parse(R"(["2","1","2","1","1","4","1","1"])"));

    const Result ids = run_cli({"check", "identities", "--max-n", "6"});
    CHECK(ids.code == 0);
    CHECK(ids.out.find("all checks passed") != std::string::npos);
    const Result growth = run_cli({"growth", "--max-n", "7"});
    CHECK(growth.out.find("5040") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({"--help"}).code == cli::ok);
    CHECK(run_cli({"witness", "e", "19/7"}).code == cli::ok);

    // Invalid input.
    CHECK(run_cli({}).code == cli::invalid_input);
    CHECK(run_cli({"frobnicate"}).code == cli::invalid_input);
    CHECK(run_cli({"digits", "tau", "--digits", "5"}).code == cli::invalid_input);
    CHECK(run_cli({"digits", "pi", "--digits", "0"}).code == cli::invalid_input);
    CHECK(run_cli({"digits", "pi", "--digits", "x"}).code == cli::invalid_input);
    CHECK(run_cli({"digits", "pi", "--digits", "5", "--method", "newton"}).code == cli::invalid_input);
    CHECK(run_cli({"digits", "e", "--digits", "5", "--method", "archimedes"}).code == cli::invalid_input);
    CHECK(run_cli({"witness", "pi2", "1/0"}).code == cli::invalid_input);
    CHECK(run_cli({"witness", "pi2", "-3/2"}).code == cli::invalid_input);
    CHECK(run_cli({"witness", "pi2", "1.5"}).code == cli::invalid_input);
    CHECK(run_cli({"witness", "pi2", "10/1", "--n", "20"}).code == cli::invalid_input);
    CHECK(run_cli({"witness", "e", "abc"}).code == cli::invalid_input);
    CHECK(run_cli({"witness", "sqrt", "0"}).code == cli::invalid_input);
    CHECK(run_cli({"check", "squeeze", "--h", "2"}).code == cli::invalid_input);
    CHECK(run_cli({"check", "squeeze", "--h", "0.5"}).code == cli::invalid_input);
    CHECK(run_cli({"cf", "pi", "--depth", "0"}).code == cli::invalid_input);
    CHECK(run_cli({"archimedes", "--doublings", "61"}).code == cli::invalid_input);

    // Resource and precision caps.
    CHECK(run_cli({"witness", "pi2", "10/1", "--max-n", "5"}).code == cli::resource_cap);
    CHECK(run_cli({"witness", "e", "3/2000"}).code == cli::resource_cap);
    CHECK(run_cli({"digits", "pi", "--digits", "50", "--method", "archimedes"}).code == cli::resource_cap);
    {
        EnvDigits cap("20");
        const Result r = run_cli({"digits", "pi", "--digits", "50"});
        CHECK(r.code == cli::resource_cap);
        CHECK_FALSE(r.err.empty());
        CHECK(run_cli({"witness", "pi2", "10/1"}).code == cli::resource_cap);
    }
    {
        EnvDigits bad("lots");
        CHECK(run_cli({"digits", "pi", "--digits", "5"}).code == cli::invalid_input);
    }
}
