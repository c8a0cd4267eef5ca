#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
	int exit_code = -1;
	std::string out;
	std::string err;
};

std::string slurp(const std::string& path) {
	std::ifstream f(path, std::ios::binary);
	std::ostringstream os;
	os << f.rdbuf();
	return os.str();
}

/* Runs the CLI with the given arguments, capturing stdout/stderr. */
RunResult run_cli(const std::string& args) {
	static int counter = 0;
	std::string out_path = "cli_test_out_" + std::to_string(counter) + ".txt";
	std::string err_path = "cli_test_err_" + std::to_string(counter) + ".txt";
	++counter;

	std::string cmd = std::string(QREG_CLI_PATH) + " " + args + " > " + out_path +
	                  " 2> " + err_path;
	int status = std::system(cmd.c_str());

	RunResult result;
	result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	result.out = slurp(out_path);
	result.err = slurp(err_path);
	std::remove(out_path.c_str());
	std::remove(err_path.c_str());
	return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
	return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify subcommand") {
	RunResult r = run_cli("verify --k 2 --xmax 5 --qmax 12");
	CHECK(r.exit_code == 0);
	CHECK(contains(r.out, "status=verified"));
	CHECK(contains(r.out, "left=product"));

	SUBCASE("json format") {
		RunResult j = run_cli("verify --k 1 --xmax 6 --qmax 12 --format json");
		CHECK(j.exit_code == 0);
		auto parsed = nlohmann::json::parse(j.out);
		CHECK(parsed["status"] == "verified");
		CHECK(parsed["k"] == 1);
		CHECK(parsed["mismatches"].empty());
	}
	SUBCASE("alternate methods") {
		RunResult p = run_cli("verify --k 2 --xmax 4 --qmax 10 --left enumeration "
		                      "--right profile-sum");
		CHECK(p.exit_code == 0);
		CHECK(contains(p.out, "right=profile-sum"));
	}
	SUBCASE("worker cap does not change the outcome") {
		RunResult p = run_cli("verify --k 3 --xmax 6 --qmax 14 --threads 4");
		CHECK(p.exit_code == 0);
		CHECK(contains(p.out, "status=verified"));
	}
}

TEST_CASE("bijection subcommands") {
	SUBCASE("reduce") {
		RunResult r = run_cli("bijection reduce --k 2 \"3 6 10 10 15 19 19\"");
		CHECK(r.exit_code == 0);
		CHECK(contains(r.out, "base = 1 2 3 3 4 5 5"));
		CHECK(contains(r.out, "lambda = 2 2 2 3 3 3 3 5 5 5 6 6 7 7"));
		CHECK(contains(r.out, "forbidden = 1 4"));
	}
	SUBCASE("trace follows the reference steps") {
		RunResult r = run_cli("bijection trace --k 2 \"3 6 10 10 15 19 19\"");
		CHECK(r.exit_code == 0);
		CHECK(contains(r.out, "step 1: partition=1 4 8 8 13 17 17 lambda=7 7"));
		CHECK(contains(r.out, "step 2: partition=1 2 6 6 11 15 15 lambda=6 6 7 7"));
		CHECK(contains(r.out, "step 3: partition=1 2 3 3 8 12 12 lambda=5 5 5 6 6 7 7"));
		CHECK(contains(r.out, "base word=1 1 2 1 2 forbidden=1 4"));
	}
	SUBCASE("build inverts reduce") {
		RunResult r = run_cli("bijection build --k 2 --base \"1 2 3 3 4 5 5\" "
		                      "--lambda \"2 2 2 3 3 3 3 5 5 5 6 6 7 7\"");
		CHECK(r.exit_code == 0);
		CHECK(contains(r.out, "3 6 10 10 15 19 19"));
	}
	SUBCASE("build with an empty lambda returns the base") {
		RunResult r = run_cli("bijection build --k 2 --base \"1 2 2\" --lambda \"\"");
		CHECK(r.exit_code == 0);
		CHECK(contains(r.out, "1 2 2"));
	}
	SUBCASE("non-2-regular input is a usage error") {
		RunResult r = run_cli("bijection reduce --k 2 \"1 1 1\"");
		CHECK(r.exit_code == 2);
		CHECK(contains(r.err, "occurs 3 times"));
	}
	SUBCASE("malformed partition text is a usage error") {
		RunResult r = run_cli("bijection reduce --k 2 \"3 1 2\"");
		CHECK(r.exit_code == 2);
	}
	SUBCASE("forbidden lambda part is a usage error") {
		RunResult r = run_cli("bijection build --k 2 --base \"1 1\" --lambda \"1\"");
		CHECK(r.exit_code == 2);
		CHECK(contains(r.err, "forbidden"));
	}
}

TEST_CASE("table subcommand") {
	SUBCASE("b table in json matches the reference polynomials") {
		RunResult r = run_cli("table --which b --max 4 --format json");
		CHECK(r.exit_code == 0);
		auto parsed = nlohmann::json::parse(r.out);
		CHECK(parsed["entries"].size() == 15);
		bool found = false;
		for (const auto& e : parsed["entries"]) {
			if (e["m"] == 2 && e["n"] == 2) {
				found = true;
				CHECK(e["poly"]["coeffs"] ==
				      nlohmann::json::array({"1", "3", "7", "9", "10", "9", "6"}));
			}
		}
		CHECK(found);
	}
	SUBCASE("a table plain output") {
		RunResult r = run_cli("table --which a --max 2");
		CHECK(r.exit_code == 0);
		CHECK(contains(r.out, "a(2, 0) = q^3 - q^4 - q^6 + q^7"));
		CHECK(contains(r.out, "a(0, 2) = 1"));
	}
	SUBCASE("k-index table") {
		RunResult r = run_cli("table --which bk --k 3 --max 1");
		CHECK(r.exit_code == 0);
		CHECK(contains(r.out, "b(0, 0, 0) = 1"));
		CHECK(contains(r.out, "b(1, 0, 0) = 1 + q"));
	}
}

TEST_CASE("oracle subcommand") {
	RunResult r = run_cli("oracle --k 2 --xmax 4 --qmax 6");
	CHECK(r.exit_code == 0);
	CHECK(contains(r.out, "x=1: 0 1 1 1 1 1 1"));

	RunResult j = run_cli("oracle --k 2 --xmax 4 --qmax 6 --format json");
	CHECK(j.exit_code == 0);
	auto parsed = nlohmann::json::parse(j.out);
	CHECK(parsed["series"]["terms"][4]["coeffs"][6] == "1");
}

TEST_CASE("scan subcommand") {
	RunResult r = run_cli("scan --k 2 --bound 5");
	CHECK(r.exit_code == 0);
	CHECK(contains(r.out, "tuples=21"));
	CHECK(contains(r.out, "counterexamples=0"));

	RunResult j = run_cli("scan --k 3 --bound 3 --format json");
	CHECK(j.exit_code == 0);
	auto parsed = nlohmann::json::parse(j.out);
	CHECK(parsed["status"] == "clean");
	CHECK(parsed["tuples_checked"] == 20);
}

TEST_CASE("bessel subcommand") {
	RunResult r = run_cli("bessel --bound 5");
	CHECK(r.exit_code == 0);
	CHECK(contains(r.out, "limit_check bound=5 ok=true"));
	CHECK(contains(r.out, "(1, 1): b = 1 + 2q ; q_analog = 1 + q + q^2"));
}

TEST_CASE("usage errors exit with code 2") {
	CHECK(run_cli("nonsense").exit_code == 2);
	CHECK(run_cli("verify --no-such-flag").exit_code == 2);
	CHECK(run_cli("verify --k 0").exit_code == 2);
	CHECK(run_cli("").exit_code == 2);
	CHECK(run_cli("scan --k 1 --bound 3").exit_code == 2);
	CHECK(run_cli("bijection").exit_code == 2);
}

TEST_CASE("help exits cleanly") {
	CHECK(run_cli("--help").exit_code == 0);
	CHECK(run_cli("verify --help").exit_code == 0);
}

TEST_CASE("identical invocations produce byte-identical output") {
	std::string cmd = "table --which b --max 3 --format json";
	RunResult first = run_cli(cmd);
	RunResult second = run_cli(cmd);
	CHECK(first.exit_code == 0);
	CHECK(first.out == second.out);

	std::string scan_cmd = "scan --k 2 --bound 4 --format json";
	auto strip_elapsed = [](std::string s) {
		auto j = nlohmann::json::parse(s);
		j.erase("elapsed_ms");
		return j.dump();
	};
	CHECK(strip_elapsed(run_cli(scan_cmd).out) == strip_elapsed(run_cli(scan_cmd).out));
}

TEST_CASE("output goes to a file when requested") {
	std::string path = "cli_test_table.json";
	RunResult r = run_cli("table --which b --max 2 --format json --output " + path);
	CHECK(r.exit_code == 0);
	CHECK(r.out.empty());
	auto parsed = nlohmann::json::parse(slurp(path));
	CHECK(parsed["entries"].size() == 6);
	std::remove(path.c_str());
}
