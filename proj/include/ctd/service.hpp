#ifndef CTD_SERVICE_HPP
#define CTD_SERVICE_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "ctd/equivalence.hpp"
#include "ctd/mutation_class.hpp"

namespace ctd::service {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Payload problems are the caller's fault (400); everything else raised by the
// core is a domain answer (422).
inline int http_status_for(const std::string& code) {
  static const std::vector<std::string> client = {"bad-request", "unknown-op", "parse",
                                                  "loop",        "2-cycle",    "multiple-arrow",
                                                  "bad-vertex"};
  for (const auto& c : client)
    if (c == code) return 400;
  if (code == "internal") return 500;
  return 422;
}

namespace detail {

inline const json& field(const json& req, const char* name) {
  if (!req.contains(name)) throw Error("bad-request", std::string("missing field \"") + name + "\"");
  return req.at(name);
}

inline int int_field(const json& req, const char* name) {
  const json& v = field(req, name);
  if (!v.is_number_integer()) throw Error("bad-request", std::string("field \"") + name + "\" must be an integer");
  return v.get<int>();
}

inline bool flag(const json& req, const char* name) {
  if (!req.contains(name)) return false;
  if (!req.at(name).is_boolean()) throw Error("bad-request", std::string("field \"") + name + "\" must be a boolean");
  return req.at(name).get<bool>();
}

// A quiver is either the structured object or a string in the text format.
inline Quiver quiver_of(const json& v) {
  if (v.is_string()) return parse_quiver(v.get<std::string>());
  if (v.is_object()) return quiver_from_json(v);
  throw Error("bad-request", "quiver must be an object or a string");
}

inline json cartan_json(const CartanMatrix& c) {
  json rows = json::array();
  for (int i = 0; i < c.n; ++i) {
    json row = json::array();
    for (int j = 0; j < c.n; ++j) row.push_back(c(i, j));
    rows.push_back(row);
  }
  return rows;
}

inline json poly_json(const IntPolynomial& p) {
  return {{"text", factored_string(p)}, {"coefficients", p.coeffs()}};
}

inline json classify_json(const Quiver& q) {
  if (is_type_a(q)) {
    AShape a = analyze_type_a(q);
    return {{"n", q.size()}, {"family", "A"}, {"s", a.s}, {"t", a.t}};
  }
  return {{"n", q.size()}, {"family", "D"}, {"form", to_string(classify_type_d(q))}};
}

inline json definedness_json(const Definedness& d) { return {{"neg", d.neg}, {"pos", d.pos}}; }

inline json op_mutate(const json& req) {
  Quiver q = quiver_of(field(req, "quiver"));
  int k = int_field(req, "k");
  q.check_vertex(k);
  Quiver m = mutate(q, k);
  return {{"quiver", quiver_to_json(m)}, {"text", serialize_quiver(m)}};
}

inline json op_invariants(const json& req) {
  Quiver q = quiver_of(field(req, "quiver"));
  CartanMatrix c = cartan_matrix(q);
  json out = classify_json(q);
  out["det"] = cartan_det(c);
  out["cartan"] = cartan_json(c);
  out["polynomial"] = poly_json(associated_polynomial(c));
  if (flag(req, "chi")) {
    IntPolynomial chi;
    if (out["family"] == "A")
      chi = chi_formula(analyze_type_a(q));
    else
      chi = chi_formula(classify_type_d(q));
    out["chi"] = poly_json(chi);
  }
  if (req.contains("modp") && !req.at("modp").is_null()) {
    int p = int_field(req, "modp");
    json factors = json::array();
    for (const auto& f : asymmetry_invariant_factors(c, p)) factors.push_back(modp_poly_string(f));
    out["modp"] = {{"p", p}, {"invariant_factors", factors}};
  }
  return out;
}

inline json op_mutation_report(const json& req) {
  Quiver q = quiver_of(field(req, "quiver"));
  json rows = json::array();
  for (const auto& r : mutation_report(q))
    rows.push_back({{"k", r.k},
                    {"before", definedness_json(r.before)},
                    {"after", definedness_json(r.after)},
                    {"verdict", to_string(r.verdict)}});
  return {{"vertices", rows}};
}

inline json op_std_form(const json& req) {
  Quiver q = quiver_of(field(req, "quiver"));
  std::string rel = req.contains("relation") ? req.at("relation").get<std::string>() : "good";
  TypeDForm f = classify_type_d(q);
  json out = {{"form", to_string(f)}, {"relation", rel}};
  if (rel == "good") {
    out["standard_form"] = to_string(good_standard_form(f));
    if (ctd::detail::spike_sequence(canonical_form(f))) out["params"] = to_string(good_params(f));
  } else if (rel == "derived") {
    out["standard_form"] = to_string(derived_standard_form(f));
  } else {
    throw Error("bad-request", "relation must be \"good\" or \"derived\"");
  }
  return out;
}

inline json op_good_equiv(const json& req) {
  const json& qs = field(req, "quivers");
  if (!qs.is_array() || qs.size() != 2) throw Error("bad-request", "\"quivers\" must hold exactly two quivers");
  TypeDForm f = classify_type_d(quiver_of(qs[0]));
  TypeDForm g = classify_type_d(quiver_of(qs[1]));
  bool eq = good_equivalent(f, g);
  json out = {{"equivalent", eq}, {"forms", {to_string(f), to_string(g)}}};
  bool both_params = ctd::detail::spike_sequence(canonical_form(f)) && ctd::detail::spike_sequence(canonical_form(g));
  if (both_params) out["params"] = {to_string(good_params(f)), to_string(good_params(g))};
  if (!eq) out["witness"] = both_params ? "distinct good-mutation parameters" : "distinct good-mutation normal forms";
  return out;
}

inline json op_enumerate_forms(const json& req) {
  int n = int_field(req, "n");
  if (n > 40) throw Error("precondition", "n is limited to 40");
  json forms = json::array();
  for (const auto& f : enumerate_standard_forms(n, flag(req, "op_identify"))) forms.push_back(to_string(f));
  return {{"n", n}, {"count", forms.size()}, {"forms", forms}};
}

inline json op_count_classes(const json& req) {
  int n = int_field(req, "n");
  if (n < 4) throw Error("precondition", "standard forms need n >= 4");
  if (n > 24) throw Error("precondition", "n is limited to 24");
  ClassCount c = count_derived_classes_report(n);
  json out = {{"n", n},
              {"forms", c.forms},
              {"forms_op", c.forms_op},
              {"polynomials", c.polynomials},
              {"polynomials_mod3", c.polynomials_mod3},
              {"exact", c.exact}};
  out["classes"] = c.exact ? json(c.polynomials) : json(nullptr);
  if (!c.exact) out["note"] = "bound only: invariants are not known to be complete for this n";
  return out;
}

inline Quiver start_quiver(const json& v) {
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.size() >= 2 && (s[0] == 'd' || s[0] == 'D') && s.find_first_not_of("0123456789", 1) == std::string::npos &&
        s.size() <= 4) {
      int n = std::stoi(s.substr(1));
      if (n < 4) throw Error("precondition", "D_n needs n >= 4");
      return dynkin_d(n);
    }
  }
  return quiver_of(v);
}

inline json op_mutation_class(const json& req) {
  Quiver q = start_quiver(field(req, "start"));
  std::size_t cap = kDefaultClassCap;
  if (req.contains("cap")) {
    int c = int_field(req, "cap");
    if (c < 1) throw Error("bad-request", "cap must be positive");
    cap = static_cast<std::size_t>(c);
  }
  ClassReport r = mutation_class(q, cap);
  return {{"n", q.size()}, {"size", r.size}, {"truncated", r.truncated}};
}

}  // namespace detail

inline json ok(json result) { return {{"v", kSchemaVersion}, {"ok", true}, {"result", std::move(result)}}; }

inline json failure(const std::string& code, const std::string& message) {
  return {{"v", kSchemaVersion}, {"ok", false}, {"error", {{"code", code}, {"message", message}}}};
}

inline json dispatch(const std::string& op, const json& req) {
  if (op == "mutate") return detail::op_mutate(req);
  if (op == "classify") return detail::classify_json(detail::quiver_of(detail::field(req, "quiver")));
  if (op == "invariants") return detail::op_invariants(req);
  if (op == "mutation_report") return detail::op_mutation_report(req);
  if (op == "std_form") return detail::op_std_form(req);
  if (op == "good_equiv") return detail::op_good_equiv(req);
  if (op == "enumerate_forms") return detail::op_enumerate_forms(req);
  if (op == "count_classes") return detail::op_count_classes(req);
  if (op == "mutation_class") return detail::op_mutation_class(req);
  throw Error("unknown-op", "unknown op \"" + op + "\"");
}

// Never throws: every failure becomes an error response.
inline json handle_request(const json& req) {
  try {
    if (!req.is_object()) throw Error("bad-request", "request must be a JSON object");
    const json& op = detail::field(req, "op");
    if (!op.is_string()) throw Error("bad-request", "\"op\" must be a string");
    return ok(dispatch(op.get<std::string>(), req));
  } catch (const Error& e) {
    return failure(e.code(), e.what());
  } catch (const json::exception& e) {
    return failure("bad-request", e.what());
  } catch (const std::exception& e) {
    return failure("internal", e.what());
  }
}

inline json handle_request_text(const std::string& body) {
  json req;
  try {
    req = json::parse(body);
  } catch (const json::parse_error& e) {
    return failure("bad-request", std::string("malformed JSON: ") + e.what());
  }
  return handle_request(req);
}

inline int http_status(const json& response) {
  if (response.value("ok", false)) return 200;
  return http_status_for(response["error"].value("code", "internal"));
}

}  // namespace ctd::service

#endif
