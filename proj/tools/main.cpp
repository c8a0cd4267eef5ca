#include "CLI11.hpp"

#include "qreg/analysis.hpp"
#include "qreg/bijection.hpp"
#include "qreg/genfun.hpp"
#include "qreg/partition.hpp"
#include "qreg/serialize.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

namespace {

using qreg::json;

constexpr int kExitClean = 0;
constexpr int kExitFinding = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
	std::string format = "plain";
	std::string output;  // empty = stdout
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
	cmd->add_option("--format", opts.format, "Output format")
	    ->check(CLI::IsMember({"plain", "json"}))
	    ->capture_default_str();
	cmd->add_option("--output", opts.output, "Write output to this file instead of stdout");
}

int emit(const CommonOpts& opts, const std::string& text) {
	std::string payload = text;
	if (payload.empty() || payload.back() != '\n') payload += '\n';
	if (opts.output.empty()) {
		std::cout << payload;
	} else {
		std::ofstream file(opts.output, std::ios::binary);
		if (!file) {
			std::cerr << "error: cannot open output file '" << opts.output << "'\n";
			return kExitUsage;
		}
		file << payload;
	}
	return kExitClean;
}

std::string join_ints(const std::vector<int>& v) {
	std::ostringstream os;
	for (std::size_t i = 0; i < v.size(); ++i) {
		if (i > 0) os << ' ';
		os << v[i];
	}
	return os.str();
}

std::string join_set(const std::set<int>& v) {
	std::ostringstream os;
	bool first = true;
	for (int x : v) {
		if (!first) os << ' ';
		os << x;
		first = false;
	}
	return os.str();
}

std::string tuple_label(const std::vector<int>& t) {
	std::ostringstream os;
	os << "b(";
	for (std::size_t i = 0; i < t.size(); ++i) {
		if (i > 0) os << ", ";
		os << t[i];
	}
	os << ")";
	return os.str();
}

/* The base partition text must be sizes 1..s with multiplicities; anything
 * else cannot be the image of the backward phase. */
std::vector<int> word_from_base(const qreg::Partition& base) {
	qreg::MultiplicityProfile prof = qreg::profile(base);
	for (std::size_t i = 0; i < prof.sizes.size(); ++i) {
		if (prof.sizes[i] != static_cast<int>(i) + 1)
			throw std::invalid_argument(
			    "base partition must use the part sizes 1..s consecutively");
	}
	return prof.mults;
}

int run_verify(int k, int xmax, int qmax, const std::string& left, const std::string& right,
               int threads, const CommonOpts& opts) {
	qreg::LeftMethod lm =
	    left == "product" ? qreg::LeftMethod::Product : qreg::LeftMethod::Enumeration;
	qreg::RightMethod rm =
	    right == "recurrence" ? qreg::RightMethod::Recurrence : qreg::RightMethod::ProfileSum;
	qreg::VerificationReport report = qreg::verify_identity(k, xmax, qmax, lm, rm, threads);

	std::string text;
	if (opts.format == "json") {
		text = qreg::report_to_json(report).dump(2);
	} else {
		std::ostringstream os;
		os << "k=" << report.k << " xmax=" << report.xmax << " qmax=" << report.qmax
		   << " left=" << report.lhs_method << " right=" << report.rhs_method
		   << " status=" << (report.verified ? "verified" : "mismatch")
		   << " mismatches=" << report.mismatches.size()
		   << " elapsed_ms=" << report.elapsed_ms;
		for (const auto& m : report.mismatches) {
			os << "\nmismatch x=" << m.x << " q=" << m.q << " lhs=" << m.lhs.get_str()
			   << " rhs=" << m.rhs.get_str();
		}
		text = os.str();
	}
	int rc = emit(opts, text);
	if (rc != kExitClean) return rc;
	return report.verified ? kExitClean : kExitFinding;
}

int run_table(const std::string& which, int k, int max, const CommonOpts& opts) {
	std::ostringstream plain;
	json j;
	j["table"] = which;
	j["max"] = max;
	json entries = json::array();

	if (which == "a" || which == "b") {
		qreg::ATable as;
		qreg::BTable bs;
		for (int m = 0; m <= max; ++m) {
			for (int n = 0; m + n <= max; ++n) {
				const qreg::IntPoly& p = which == "a" ? as.at(m, n) : bs.at(m, n);
				plain << which << "(" << m << ", " << n << ") = " << p.str() << "\n";
				json e;
				e["m"] = m;
				e["n"] = n;
				e["poly"] = qreg::poly_to_json(p);
				entries.push_back(std::move(e));
			}
		}
	} else {
		j["k"] = k;
		qreg::BTableK table(k);
		std::vector<std::vector<int>> tuples;
		std::vector<int> tuple;
		std::function<void(int)> rec = [&](int used) {
			if (static_cast<int>(tuple.size()) == k) {
				tuples.push_back(tuple);
				return;
			}
			for (int v = 0; used + v <= max; ++v) {
				tuple.push_back(v);
				rec(used + v);
				tuple.pop_back();
			}
		};
		rec(0);
		for (const auto& t : tuples) {
			const qreg::IntPoly& p = table.at(t);
			plain << tuple_label(t) << " = " << p.str() << "\n";
			json e;
			e["tuple"] = t;
			e["poly"] = qreg::poly_to_json(p);
			entries.push_back(std::move(e));
		}
	}
	j["entries"] = std::move(entries);
	return emit(opts, opts.format == "json" ? j.dump(2) : plain.str());
}

int run_reduce(const std::string& text, int k, const CommonOpts& opts) {
	qreg::Partition p = qreg::Partition::parse(text);
	qreg::ReducedPair pair = qreg::reduce(p, k);
	if (opts.format == "json") {
		json j = qreg::reduced_pair_to_json(pair);
		if (k == 2) j["forbidden"] = qreg::forbidden_sizes(pair.word);
		return emit(opts, j.dump(2));
	}
	std::ostringstream os;
	os << "base = " << pair.base().str() << "\n";
	os << "word = " << join_ints(pair.word) << "\n";
	os << "lambda = " << pair.lambda.str() << "\n";
	if (k == 2) os << "forbidden = " << join_set(qreg::forbidden_sizes(pair.word)) << "\n";
	return emit(opts, os.str());
}

int run_trace(const std::string& text, int k, const CommonOpts& opts) {
	qreg::Partition p = qreg::Partition::parse(text);
	std::vector<qreg::TraceStep> steps = qreg::reduce_trace(p, k);
	qreg::ReducedPair pair = qreg::reduce(p, k);

	if (opts.format == "json") {
		json j;
		j["k"] = k;
		json arr = json::array();
		for (std::size_t i = 0; i < steps.size(); ++i) {
			json s;
			s["step"] = i + 1;
			s["partition"] = steps[i].intermediate.str();
			s["lambda"] = steps[i].lambda_so_far.str();
			arr.push_back(std::move(s));
		}
		j["steps"] = std::move(arr);
		j["word"] = pair.word;
		if (k == 2) j["forbidden"] = qreg::forbidden_sizes(pair.word);
		return emit(opts, j.dump(2));
	}

	std::ostringstream os;
	for (std::size_t i = 0; i < steps.size(); ++i) {
		os << "step " << i + 1 << ": partition=" << steps[i].intermediate.str()
		   << " lambda=" << steps[i].lambda_so_far.str() << "\n";
	}
	os << "base word=" << join_ints(pair.word);
	if (k == 2) os << " forbidden=" << join_set(qreg::forbidden_sizes(pair.word));
	os << "\n";
	return emit(opts, os.str());
}

int run_build(const std::string& base_text, const std::string& lambda_text, int k,
              const CommonOpts& opts) {
	qreg::Partition base = qreg::Partition::parse(base_text);
	qreg::ReducedPair pair{k, word_from_base(base), qreg::Partition::parse(lambda_text)};
	qreg::Partition built = qreg::build(pair);
	if (opts.format == "json") {
		json j;
		j["k"] = k;
		j["partition"] = built.str();
		j["weight"] = built.weight();
		return emit(opts, j.dump(2));
	}
	return emit(opts, built.str());
}

int run_oracle(int k, int xmax, int qmax, const CommonOpts& opts) {
	qreg::XQSeries s = qreg::oracle_series(k, xmax, qmax);
	if (opts.format == "json") {
		json j;
		j["k"] = k;
		j["series"] = qreg::xqseries_to_json(s);
		return emit(opts, j.dump(2));
	}
	std::ostringstream os;
	os << "k=" << k << " xmax=" << xmax << " qmax=" << qmax << "\n";
	for (int x = 0; x <= xmax; ++x) {
		os << "x=" << x << ":";
		for (int q = 0; q <= qmax; ++q) os << " " << s.coeff(x, q).get_str();
		os << "\n";
	}
	return emit(opts, os.str());
}

int run_scan(int k, int bound, int threads, const CommonOpts& opts) {
	qreg::ScanReport report = qreg::scan_unimodality(k, bound, threads);
	std::string text;
	if (opts.format == "json") {
		text = qreg::report_to_json(report).dump(2);
	} else {
		std::ostringstream os;
		os << "k=" << report.k << " bound=" << report.sum_bound
		   << " tuples=" << report.tuples_checked
		   << " counterexamples=" << report.counterexamples.size()
		   << " elapsed_ms=" << report.elapsed_ms;
		for (const auto& c : report.counterexamples) {
			os << "\ncounterexample tuple=" << join_ints(c.tuple) << " poly=" << c.poly.str();
		}
		text = os.str();
	}
	int rc = emit(opts, text);
	if (rc != kExitClean) return rc;
	return report.clean() ? kExitClean : kExitFinding;
}

int run_bessel(int bound, const CommonOpts& opts) {
	bool limit_ok = qreg::bessel_limit_check(bound);
	std::vector<qreg::QAnalogMismatch> mismatches = qreg::q_bessel_mismatch(bound);

	std::string text;
	if (opts.format == "json") {
		json j;
		j["bound"] = bound;
		j["limit_check"] = limit_ok;
		j["mismatch_count"] = mismatches.size();
		json arr = json::array();
		for (const auto& m : mismatches) {
			json one;
			one["m"] = m.m;
			one["n"] = m.n;
			one["b"] = qreg::poly_to_json(m.b);
			one["q_analog"] = qreg::poly_to_json(m.q_analog);
			arr.push_back(std::move(one));
		}
		j["mismatches"] = std::move(arr);
		text = j.dump(2);
	} else {
		std::ostringstream os;
		os << "limit_check bound=" << bound << " ok=" << (limit_ok ? "true" : "false") << "\n";
		os << "q_analog_mismatches = " << mismatches.size();
		for (const auto& m : mismatches) {
			os << "\n(" << m.m << ", " << m.n << "): b = " << m.b.str()
			   << " ; q_analog = " << m.q_analog.str();
		}
		text = os.str();
	}
	int rc = emit(opts, text);
	if (rc != kExitClean) return rc;
	return limit_ok ? kExitClean : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"Exact q-series toolkit for k-regular partitions"};
	app.require_subcommand(1);

	int k = 2, xmax = 8, qmax = 24, max = 4, bound = 8, threads = 1;
	std::string left = "product", right = "recurrence", which = "b";
	std::string partition_text, base_text, lambda_text;
	CommonOpts verify_opts, table_opts, reduce_opts, trace_opts, build_opts, oracle_opts,
	    scan_opts, bessel_opts;

	CLI::App* verify = app.add_subcommand(
	    "verify", "Check the product and sum sides of the identity coefficientwise");
	verify->add_option("--k", k, "Regularity bound")->check(CLI::PositiveNumber)
	    ->capture_default_str();
	verify->add_option("--xmax", xmax, "Largest x-degree compared")
	    ->check(CLI::NonNegativeNumber)->capture_default_str();
	verify->add_option("--qmax", qmax, "Largest q-degree compared")
	    ->check(CLI::NonNegativeNumber)->capture_default_str();
	verify->add_option("--left", left, "Left-side method")
	    ->check(CLI::IsMember({"product", "enumeration"}))->capture_default_str();
	verify->add_option("--right", right, "Right-side method")
	    ->check(CLI::IsMember({"recurrence", "profile-sum"}))->capture_default_str();
	verify->add_option("--threads", threads, "Worker cap")->check(CLI::PositiveNumber)
	    ->capture_default_str();
	add_common(verify, verify_opts);

	CLI::App* table = app.add_subcommand("table", "Print the a, b, or k-index b polynomials");
	table->add_option("--which", which, "Which table")
	    ->check(CLI::IsMember({"a", "b", "bk"}))->capture_default_str();
	table->add_option("--k", k, "Index count for --which bk")->check(CLI::PositiveNumber)
	    ->capture_default_str();
	table->add_option("--max", max, "Largest index sum")->check(CLI::NonNegativeNumber)
	    ->capture_default_str();
	add_common(table, table_opts);

	CLI::App* bijection = app.add_subcommand("bijection", "Backward/forward phase between "
	                                                      "k-regular partitions and pairs");
	bijection->require_subcommand(1);
	CLI::App* reduce = bijection->add_subcommand("reduce", "Partition -> base + lambda");
	reduce->add_option("partition", partition_text, "Partition text, weakly increasing")
	    ->required();
	reduce->add_option("--k", k, "Regularity bound")->check(CLI::PositiveNumber)
	    ->capture_default_str();
	add_common(reduce, reduce_opts);

	CLI::App* trace = bijection->add_subcommand("trace", "Reduce, printing every step");
	trace->add_option("partition", partition_text, "Partition text, weakly increasing")
	    ->required();
	trace->add_option("--k", k, "Regularity bound")->check(CLI::PositiveNumber)
	    ->capture_default_str();
	add_common(trace, trace_opts);

	CLI::App* build = bijection->add_subcommand("build", "Base + lambda -> partition");
	build->add_option("--base", base_text, "Base partition text (sizes 1..s)")->required();
	build->add_option("--lambda", lambda_text, "Auxiliary partition text (may be empty)");
	build->add_option("--k", k, "Regularity bound")->check(CLI::PositiveNumber)
	    ->capture_default_str();
	add_common(build, build_opts);

	CLI::App* oracle = app.add_subcommand(
	    "oracle", "Brute-force length/weight counts of k-regular partitions as a series");
	oracle->add_option("--k", k, "Regularity bound")->check(CLI::PositiveNumber)
	    ->capture_default_str();
	oracle->add_option("--xmax", xmax, "Largest length tracked")
	    ->check(CLI::NonNegativeNumber)->capture_default_str();
	oracle->add_option("--qmax", qmax, "Largest weight tracked")
	    ->check(CLI::NonNegativeNumber)->capture_default_str();
	add_common(oracle, oracle_opts);

	CLI::App* scan = app.add_subcommand(
	    "scan", "Scan the b polynomials for unimodality counterexamples");
	scan->add_option("--k", k, "Index count (>= 2)")->check(CLI::Range(2, 1 << 20))
	    ->capture_default_str();
	scan->add_option("--bound", bound, "Largest index sum scanned")
	    ->check(CLI::NonNegativeNumber)->capture_default_str();
	scan->add_option("--threads", threads, "Worker cap")->check(CLI::PositiveNumber)
	    ->capture_default_str();
	add_common(scan, scan_opts);

	CLI::App* bessel = app.add_subcommand(
	    "bessel", "q -> 1 limit checks and the Gaussian q-analog comparison");
	bessel->add_option("--bound", bound, "Largest m+n checked")
	    ->check(CLI::NonNegativeNumber)->capture_default_str();
	add_common(bessel, bessel_opts);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? kExitClean : kExitUsage;
	}

	try {
		if (verify->parsed())
			return run_verify(k, xmax, qmax, left, right, threads, verify_opts);
		if (table->parsed()) return run_table(which, k, max, table_opts);
		if (reduce->parsed()) return run_reduce(partition_text, k, reduce_opts);
		if (trace->parsed()) return run_trace(partition_text, k, trace_opts);
		if (build->parsed()) return run_build(base_text, lambda_text, k, build_opts);
		if (oracle->parsed()) return run_oracle(k, xmax, qmax, oracle_opts);
		if (scan->parsed()) return run_scan(k, bound, threads, scan_opts);
		if (bessel->parsed()) return run_bessel(bound, bessel_opts);
	} catch (const std::invalid_argument& e) {
		std::cerr << "error: " << e.what() << "\n";
		return kExitUsage;
	} catch (const std::exception& e) {
		std::cerr << "internal error: " << e.what() << "\n";
		return kExitUsage;
	}
	return kExitUsage;
}
