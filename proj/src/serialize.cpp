#include "qreg/serialize.hpp"

#include <stdexcept>

namespace qreg {

namespace {

json coeffs_to_json(const std::vector<mpz_class>& coeffs) {
	json arr = json::array();
	for (const auto& c : coeffs) arr.push_back(c.get_str());
	return arr;
}

std::vector<mpz_class> coeffs_from_json(const json& arr) {
	if (!arr.is_array()) throw std::invalid_argument("coeffs: expected an array");
	std::vector<mpz_class> out;
	out.reserve(arr.size());
	for (const auto& item : arr) {
		if (!item.is_string()) throw std::invalid_argument("coeffs: expected decimal strings");
		out.emplace_back(item.get<std::string>());
	}
	return out;
}

}  // namespace

json poly_to_json(const IntPoly& p) {
	json j;
	j["var"] = "q";
	j["coeffs"] = coeffs_to_json(p.coeffs());
	return j;
}

IntPoly poly_from_json(const json& j) {
	if (j.value("var", "") != "q") throw std::invalid_argument("poly: expected var \"q\"");
	return IntPoly(coeffs_from_json(j.at("coeffs")));
}

json series_to_json(const QSeries& s) {
	json j;
	j["var"] = "q";
	j["coeffs"] = coeffs_to_json(s.coeffs());
	j["trunc"] = s.trunc();
	return j;
}

QSeries series_from_json(const json& j) {
	if (j.value("var", "") != "q") throw std::invalid_argument("series: expected var \"q\"");
	int trunc = j.at("trunc").get<int>();
	auto coeffs = coeffs_from_json(j.at("coeffs"));
	if (static_cast<int>(coeffs.size()) != trunc + 1)
		throw std::invalid_argument("series: coefficient count must be trunc + 1");
	return QSeries(std::move(coeffs), trunc);
}

json xqseries_to_json(const XQSeries& s) {
	json j;
	j["xmax"] = s.xmax();
	j["qmax"] = s.qmax();
	json terms = json::array();
	for (int x = 0; x <= s.xmax(); ++x) {
		json t;
		t["x"] = x;
		t["coeffs"] = coeffs_to_json(s.term(x).coeffs());
		terms.push_back(std::move(t));
	}
	j["terms"] = std::move(terms);
	return j;
}

json report_to_json(const VerificationReport& r) {
	json j;
	j["k"] = r.k;
	j["xmax"] = r.xmax;
	j["qmax"] = r.qmax;
	j["status"] = r.verified ? "verified" : "mismatch";
	j["lhs_method"] = r.lhs_method;
	j["rhs_method"] = r.rhs_method;
	json ms = json::array();
	for (const auto& m : r.mismatches) {
		json one;
		one["x"] = m.x;
		one["q"] = m.q;
		one["lhs"] = m.lhs.get_str();
		one["rhs"] = m.rhs.get_str();
		ms.push_back(std::move(one));
	}
	j["mismatches"] = std::move(ms);
	j["elapsed_ms"] = r.elapsed_ms;
	return j;
}

json report_to_json(const ScanReport& r) {
	json j;
	j["k"] = r.k;
	j["sum_bound"] = r.sum_bound;
	j["status"] = r.clean() ? "clean" : "counterexample";
	j["tuples_checked"] = r.tuples_checked;
	json cs = json::array();
	for (const auto& c : r.counterexamples) {
		json one;
		one["tuple"] = c.tuple;
		one["poly"] = poly_to_json(c.poly);
		cs.push_back(std::move(one));
	}
	j["counterexamples"] = std::move(cs);
	j["elapsed_ms"] = r.elapsed_ms;
	return j;
}

json reduced_pair_to_json(const ReducedPair& r) {
	json j;
	j["k"] = r.k;
	j["word"] = r.word;
	j["base"] = r.base().str();
	j["lambda"] = r.lambda.str();
	j["base_weight"] = r.base_weight();
	j["lambda_weight"] = r.lambda.weight();
	return j;
}

}  // namespace qreg
