#include "ctd/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ctd/server.hpp"
#include "ctd/service.hpp"

namespace ctd {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  auto p = text.find_first_not_of(" \t\r\n");
  return p != std::string::npos && text[p] == '{';
}

// Quiver files go into requests verbatim: JSON as an object, text as a string.
json quiver_payload(const std::string& path) {
  std::string text = read_file(path);
  if (looks_like_json(text)) {
    try {
      return json::parse(text);
    } catch (const json::parse_error& e) {
      throw Error("parse", path + ": " + e.what());
    }
  }
  return text;
}

std::string definedness_text(const json& d) {
  bool neg = d["neg"], pos = d["pos"];
  if (neg && pos) return "both";
  if (neg) return "neg";
  if (pos) return "pos";
  return "none";
}

void print_text(const std::string& op, const json& req, const json& r, std::ostream& out) {
  if (op == "mutate") {
    if (req["quiver"].is_object())
      out << r["quiver"].dump() << "\n";
    else
      out << r["text"].get<std::string>();
  } else if (op == "classify") {
    if (r["family"] == "A")
      out << "A s=" << r["s"] << " t=" << r["t"] << "\n";
    else
      out << r["form"].get<std::string>() << "\n";
  } else if (op == "invariants") {
    out << "det = " << r["det"] << "\n";
    out << "polynomial = " << r["polynomial"]["text"].get<std::string>() << "\n";
    out << "coefficients = " << r["polynomial"]["coefficients"].dump() << "\n";
    if (r.contains("chi")) out << "chi = " << r["chi"]["text"].get<std::string>() << "\n";
    if (r.contains("modp")) {
      out << "invariant factors mod " << r["modp"]["p"] << " =";
      for (const auto& f : r["modp"]["invariant_factors"]) out << " [" << f.get<std::string>() << "]";
      out << "\n";
    }
    out << "cartan =\n";
    for (const auto& row : r["cartan"]) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
      out << "\n";
    }
  } else if (op == "mutation_report") {
    out << "k before after verdict\n";
    for (const auto& v : r["vertices"])
      out << v["k"] << " " << definedness_text(v["before"]) << " " << definedness_text(v["after"]) << " "
          << v["verdict"].get<std::string>() << "\n";
  } else if (op == "std_form") {
    out << r["standard_form"].get<std::string>() << "\n";
  } else if (op == "good_equiv") {
    out << (r["equivalent"].get<bool>() ? "true" : "false");
    if (r.contains("witness")) out << " (" << r["witness"].get<std::string>() << ")";
    out << "\n";
  } else if (op == "enumerate_forms") {
    for (const auto& f : r["forms"]) out << f.get<std::string>() << "\n";
  } else if (op == "count_classes") {
    if (r["exact"].get<bool>()) {
      out << r["classes"] << "\n";
    } else {
      out << "standard forms = " << r["forms"] << " (" << r["forms_op"] << " up to opposites)\n";
      out << "distinct polynomials = " << r["polynomials"] << "\n";
      out << "distinct polynomial and mod-3 class = " << r["polynomials_mod3"] << "\n";
      out << r["note"].get<std::string>() << "\n";
    }
  } else if (op == "mutation_class") {
    out << r["size"] << (r["truncated"].get<bool>() ? " (truncated)" : "") << "\n";
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cluster-tilted algebras of Dynkin type A and D"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the structured result");

  std::vector<std::string> files;
  int k = 0, n = 0, port = 7474;
  bool chi = false, op_identify = false;
  int modp = 0;
  std::string relation, start, host = "127.0.0.1";
  int cap = 0;

  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate at a vertex");
  mutate_cmd->add_option("-q,--quiver", files, "Quiver file")->required()->expected(1);
  mutate_cmd->add_option("-k", k, "Vertex")->required();

  auto* classify_cmd = app.add_subcommand("classify", "Type A shape or type D form");
  classify_cmd->add_option("-q,--quiver", files, "Quiver file")->required()->expected(1);

  auto* inv_cmd = app.add_subcommand("invariants", "Cartan matrix, determinant, associated polynomial");
  inv_cmd->add_option("-q,--quiver", files, "Quiver file")->required()->expected(1);
  inv_cmd->add_flag("--chi", chi, "Also evaluate the closed form for chi");
  inv_cmd->add_option("--modp", modp, "Invariant factors of the asymmetry mod a prime");

  auto* report_cmd = app.add_subcommand("mutation-report", "Good/bad verdict per vertex");
  report_cmd->add_option("-q,--quiver", files, "Quiver file")->required()->expected(1);

  auto* std_cmd = app.add_subcommand("std-form", "Standard form for good or derived equivalence");
  std_cmd->add_option("-q,--quiver", files, "Quiver file")->required()->expected(1);
  std_cmd->add_option("--relation", relation, "good or derived")->required()->check(CLI::IsMember({"good", "derived"}));

  auto* equiv_cmd = app.add_subcommand("good-equiv", "Decide good mutation equivalence");
  equiv_cmd->add_option("-q,--quiver", files, "Quiver files")->required()->expected(2);

  auto* enum_cmd = app.add_subcommand("enumerate-forms", "Derived standard forms with n vertices");
  enum_cmd->add_option("--n", n, "Vertex count")->required();
  enum_cmd->add_flag("--op-identify", op_identify, "Identify D3 forms with their opposites");

  auto* count_cmd = app.add_subcommand("count-classes", "Count derived equivalence classes");
  count_cmd->add_option("--n", n, "Vertex count")->required();

  auto* class_cmd = app.add_subcommand("mutation-class", "Size of a mutation class");
  class_cmd->add_option("--start", start, "dN or a quiver file")->required();
  class_cmd->add_option("--cap", cap, "Stop after this many quivers");

  auto* serve_cmd = app.add_subcommand("serve", "Serve the JSON API on loopback");
  serve_cmd->add_option("--port", port, "Port");
  serve_cmd->add_option("--host", host, "Bind address");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::Success&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (serve_cmd->parsed()) {
    HttpService svc;
    int bound = svc.bind(host, port);
    if (bound < 0) {
      err << "cannot bind " << host << ":" << port << "\n";
      return 2;
    }
    err << "listening on http://" << host << ":" << bound << "\n";
    svc.listen();
    return 0;
  }

  json req;
  std::string op;
  try {
    if (mutate_cmd->parsed()) {
      op = "mutate";
      req = {{"quiver", quiver_payload(files[0])}, {"k", k}};
    } else if (classify_cmd->parsed()) {
      op = "classify";
      req = {{"quiver", quiver_payload(files[0])}};
    } else if (inv_cmd->parsed()) {
      op = "invariants";
      req = {{"quiver", quiver_payload(files[0])}, {"chi", chi}};
      if (inv_cmd->count("--modp")) req["modp"] = modp;
    } else if (report_cmd->parsed()) {
      op = "mutation_report";
      req = {{"quiver", quiver_payload(files[0])}};
    } else if (std_cmd->parsed()) {
      op = "std_form";
      req = {{"quiver", quiver_payload(files[0])}, {"relation", relation}};
    } else if (equiv_cmd->parsed()) {
      op = "good_equiv";
      req = {{"quivers", {quiver_payload(files[0]), quiver_payload(files[1])}}};
    } else if (enum_cmd->parsed()) {
      op = "enumerate_forms";
      req = {{"n", n}, {"op_identify", op_identify}};
    } else if (count_cmd->parsed()) {
      op = "count_classes";
      req = {{"n", n}};
    } else if (class_cmd->parsed()) {
      op = "mutation_class";
      bool named = start.size() >= 2 && (start[0] == 'd' || start[0] == 'D') &&
                   start.find_first_not_of("0123456789", 1) == std::string::npos;
      req = {{"start", named ? json(start) : quiver_payload(start)}};
      if (class_cmd->count("--cap")) req["cap"] = cap;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error [" << e.code() << "]: " << e.what() << "\n";
    return 1;
  }

  req["op"] = op;
  json resp = service::handle_request(req);
  if (!resp["ok"].get<bool>()) {
    const auto& e = resp["error"];
    err << "error [" << e["code"].get<std::string>() << "]: " << e["message"].get<std::string>() << "\n";
    return e["code"] == "bad-request" ? 2 : 1;
  }
  if (as_json)
    out << resp["result"].dump(2) << "\n";
  else
    print_text(op, req, resp["result"], out);
  return 0;
}

}  // namespace ctd
