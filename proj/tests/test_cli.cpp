#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ecmf/cli.hpp"

using ecmf::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result invoke(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("dim 2 reproduces the worked parts") {
    const Result r = invoke({"dim", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"N\":2,\"c0\":2,\"g0\":0,\"mu0\":3,\"mu02\":1,\"mu03\":0}\n");
}

TEST_CASE("frey output carries the discriminant and conductor") {
    const Result r = invoke({"frey", "1", "8", "9", "1", "--pmax", "30"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"delta\":\"5184\"") != std::string::npos);
    CHECK(r.out.find("\"conductor\":\"6\"") != std::string::npos);
    CHECK(r.out.find("\"ap_crosscheck_ok\":true") != std::string::npos);
}

TEST_CASE("reduce text format") {
    const Result r = invoke({"reduce", "0", "0.5", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out == "0+2i word S\n");
}

TEST_CASE("curve ap emits ascending CSV") {
    const Result r = invoke({"curve", "ap", "[1,1]", "--pmax", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("n,a_n\n1,1\n5,-3\n", 0) == 0);
}

TEST_CASE("qexp emits coefficient strings") {
    const Result r = invoke({"qexp", "delta", "--prec", "4"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"coeffs\":[\"1\",\"-24\",\"252\"],\"lowest\":1,\"prec\":4,\"weight\":12}\n");
}

TEST_CASE("repeated invocations are byte identical") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"lattice", "check", "--radius", "20"},
          {"frey", "1", "2", "3", "1", "--pmax", "40"},
          {"classical", "abc", "--scan", "--cmax", "60"},
          {"galois", "frob", "3", "2"}}) {
        const Result a = invoke(args);
        const Result b = invoke(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("exit codes") {
    // Usage errors: unknown subcommand and missing arguments.
    CHECK(invoke({"frobnicate"}).code == 1);
    CHECK(invoke({"dim"}).code == 1);
    CHECK_FALSE(invoke({"frobnicate"}).err.empty());

    // Domain errors.
    CHECK(invoke({"frey", "1", "1", "2", "3"}).code == 2);      // not a Fermat triple
    CHECK(invoke({"classical", "abc", "1", "2", "4"}).code == 2);
    CHECK(invoke({"curve", "analyze", "(0,0,1)"}).code == 2);   // singular curve

    // Success.
    CHECK(invoke({"dim", "11"}).code == 0);
}

TEST_CASE("config file values merge under flags") {
    const std::string path = "ecmf_test_config.ini";
    {
        std::ofstream f(path);
        f << "prec=5\n";
    }
    const Result from_config = invoke({"qexp", "delta", "--config", path});
    CHECK(from_config.out.find("\"prec\":5") != std::string::npos);

    const Result flag_wins = invoke({"qexp", "delta", "--config", path, "--prec", "6"});
    CHECK(flag_wins.out.find("\"prec\":6") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("exact payloads round trip through parse and emit") {
    const Result r = invoke({"curve", "analyze", "(0,1,-8)", "--pmax", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"delta\":\"5184\"") != std::string::npos);
    CHECK(r.out.find("\"conductor\":6") != std::string::npos);
    CHECK(r.out.find("\"model\":\"(0,1,-8)\"") != std::string::npos);
}
