#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "numsg/closed_form.hpp"
#include "numsg/checked.hpp"
#include "numsg/format.hpp"
#include "numsg/numset.hpp"
#include "numsg/posvec.hpp"
#include "numsg/verify.hpp"

namespace numsg::cli {
namespace {

using Json = nlohmann::ordered_json;

// Sets small enough to spell out element by element in decode output.
constexpr Int kDisplayConductorLimit = 4096;

struct Options {
  std::string format = "text";
  std::string gens;
  std::string vector;
  std::string filter = "all";
  std::string suite;
  Int n = 0;
  Int bound = 0;
  Int max_frobenius = 8;
  Int max_modulus = 6;
};

/// Thrown when a command ran correctly but found a disagreement.
class VerificationFailure : public std::runtime_error {
public:
  explicit VerificationFailure(Json doc)
      : std::runtime_error("verification failure"), doc_(std::move(doc)) {}
  const Json& doc() const { return doc_; }

private:
  Json doc_;
};

Json ints(std::span<const Int> values) { return Json(std::vector<Int>(values.begin(), values.end())); }
Json ints(std::span<const int> values) { return Json(std::vector<int>(values.begin(), values.end())); }

std::vector<int> parse_small_list(const std::string& text) {
  std::vector<int> out;
  for (Int x : parse_int_list(text)) {
    if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max()) {
      throw ValidationError("entry " + std::to_string(x) + " out of range");
    }
    out.push_back(static_cast<int>(x));
  }
  return out;
}

Json envelope(const std::string& command, Json input) {
  Json doc;
  doc["command"] = command;
  doc["status"] = "ok";
  doc["input"] = std::move(input);
  return doc;
}

Json cmd_encode(const Options& o) {
  const auto gens = parse_int_list(o.gens);
  Json doc = envelope("encode", Json{{"gens", ints(gens)}, {"n", o.n}});
  const auto set = from_generators(gens);
  if (o.n < 1 || !set.contains(o.n)) {
    throw ValidationError("n not in semigroup: " + std::to_string(o.n));
  }
  const auto apery = apery_set(set, o.n);
  const auto v = encode(apery);
  std::vector<Int> positions{0};
  for (Int x : v.entries()) positions.push_back(checked_add(positions.back(), x));
  doc["n"] = o.n;
  doc["position_vector"] = ints(v.entries());
  doc["apery_set"] = ints(apery.elements());
  doc["positions"] = positions;
  return doc;
}

Json cmd_decode(const Options& o) {
  const auto v = parse_position_vector(o.vector);
  Json doc = envelope("decode", Json{{"vector", ints(v.entries())}});
  const auto apery = decode(v);
  doc["n"] = v.modulus();
  doc["position_vector"] = ints(v.entries());
  doc["apery_set"] = ints(apery.elements());
  if (apery.max() - apery.modulus() + 1 <= kDisplayConductorLimit) {
    doc["numerical_set"] = to_text(numset_from_apery(apery));
  }
  const auto witness = first_violation(apery);
  doc["is_semigroup"] = !witness.has_value();
  if (!witness) {
    const auto s = summary(apery);
    doc["minimal_generators"] = s.minimal_generators;
    doc["frobenius"] = s.frobenius;
    doc["genus"] = s.genus;
    doc["multiplicity_is_n"] = has_multiplicity_n(v);
    doc["witness"] = nullptr;
  } else {
    doc["witness"] = {witness->first, witness->second};
  }
  return doc;
}

Json cmd_check(const Options& o) {
  const auto v = parse_position_vector(o.vector);
  Json doc = envelope("check", Json{{"vector", ints(v.entries())}});
  const auto profile = class_profile(v);
  const bool general = is_semigroup_vector(v);
  doc["n"] = v.modulus();
  doc["position_vector"] = ints(v.entries());
  doc["is_semigroup"] = general;
  bool agree = true;
  if (v.modulus() <= 5) {
    const bool table = is_semigroup_closed_form(v);
    doc["is_semigroup_closed_form"] = table;
    agree = table == general;
  }
  if (general) doc["multiplicity_is_n"] = has_multiplicity_n(v);
  doc["representative"] = ints(profile.representative.entries());
  doc["permutation"] = ints(profile.permutation.entries());
  doc["u"] = ints(profile.u);
  doc["gamma"] = ints(profile.gamma);
  if (!agree) {
    doc["status"] = "error";
    doc["error_message"] = "closed-form and general semigroup predicates disagree";
    throw VerificationFailure(std::move(doc));
  }
  return doc;
}

VectorFilter parse_filter(const std::string& name) {
  if (name == "all") return VectorFilter::all;
  if (name == "semigroups") return VectorFilter::semigroups;
  if (name == "semigroups_with_multiplicity_n") return VectorFilter::semigroups_with_multiplicity_n;
  throw ValidationError("unknown filter '" + name + "'");
}

Json cmd_enumerate(const Options& o) {
  Json doc = envelope("enumerate", Json{{"n", o.n}, {"bound", o.bound}, {"filter", o.filter}});
  VectorEnumerator it(o.n, o.bound, parse_filter(o.filter));
  Json vectors = Json::array();
  while (auto v = it.next()) vectors.push_back(ints(v->entries()));
  doc["n"] = o.n;
  doc["count"] = vectors.size();
  doc["vectors"] = std::move(vectors);
  return doc;
}

Json report_json(const verify::SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["passed"] = r.passed;
  j["checked"] = r.checked;
  j["unit"] = r.unit;
  j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  return j;
}

Json cmd_verify(const Options& o) {
  Json doc = envelope("verify", Json{{"suite", o.suite},
                                     {"n", o.n},
                                     {"bound", o.bound},
                                     {"max_frobenius", o.max_frobenius},
                                     {"max_modulus", o.max_modulus}});
  std::vector<verify::SuiteReport> reports;
  const bool all = o.suite == "all";
  if (all || o.suite == "bijection") reports.push_back(verify::bijection(o.n, o.bound));
  if (all || o.suite == "lemma31") {
    reports.push_back(verify::apery_criterion(o.max_frobenius, o.max_modulus));
  }
  if (all || o.suite == "thm36") reports.push_back(verify::vector_criterion(o.n, o.bound));
  if ((all && o.n >= 2 && o.n <= 5) || o.suite == "tables") {
    reports.push_back(verify::closed_forms(o.n, o.bound));
  }
  Json suites = Json::array();
  bool passed = true;
  for (const auto& r : reports) {
    suites.push_back(report_json(r));
    passed = passed && r.passed;
  }
  doc["passed"] = passed;
  doc["suites"] = std::move(suites);
  if (!passed) {
    doc["status"] = "error";
    doc["error_message"] = "verification failed";
    throw VerificationFailure(std::move(doc));
  }
  return doc;
}

Json cmd_perm_to(const Options& o) {
  const Permutation pi(parse_small_list(o.vector));
  Json doc = envelope("perm to-conversion", Json{{"permutation", ints(pi.entries())}});
  doc["permutation"] = ints(pi.entries());
  doc["conversion_vector"] = ints(conversion_vector(pi).entries());
  return doc;
}

Json cmd_perm_from(const Options& o) {
  const ConversionVector r(parse_small_list(o.vector));
  Json doc = envelope("perm from-conversion", Json{{"conversion_vector", ints(r.entries())}});
  doc["conversion_vector"] = ints(r.entries());
  doc["permutation"] = ints(permutation_from_conversion(r).entries());
  return doc;
}

std::string scalar_text(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array()) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) out += ',';
      out += scalar_text(v[i]);
    }
    return out;
  }
  if (v.is_object()) {
    std::string out;
    for (const auto& [k, x] : v.items()) {
      if (!out.empty()) out += ' ';
      out += k + "=" + scalar_text(x);
    }
    return out;
  }
  return v.dump();
}

void render_text(const Json& doc, std::ostream& out) {
  const auto command = doc["command"].get<std::string>();
  if (command == "enumerate") {
    for (const auto& v : doc["vectors"]) out << scalar_text(v) << '\n';
    out << "count: " << doc["count"].get<std::size_t>() << '\n';
    return;
  }
  if (command == "verify") {
    for (const auto& s : doc["suites"]) {
      out << s["suite"].get<std::string>() << ": " << (s["passed"].get<bool>() ? "PASS" : "FAIL")
          << ", " << s["checked"].get<std::uint64_t>() << ' ' << s["unit"].get<std::string>()
          << " checked";
      if (!s["counterexample"].is_null()) {
        out << "; first counterexample: " << s["counterexample"].get<std::string>();
      }
      out << '\n';
    }
    out << "result: " << (doc["passed"].get<bool>() ? "PASS" : "FAIL") << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (key == "command" || key == "status") continue;
    if (key == "apery_set") {
      out << key << ": " << doc["n"].get<Int>() << ":{" << scalar_text(value) << "}\n";
      continue;
    }
    out << key << ": " << scalar_text(value) << '\n';
  }
}

void emit(const Json& doc, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << doc.dump() << '\n';
  } else {
    render_text(doc, out);
  }
}

void emit_error(const std::string& command, const std::string& message, const Options& o,
               std::ostream& out, std::ostream& err) {
  if (o.format == "json") {
    Json doc;
    doc["command"] = command;
    doc["status"] = "error";
    doc["error_message"] = message;
    out << doc.dump() << '\n';
  } else {
    err << "error: " << message << '\n';
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Position vectors of numerical semigroups", "numsg"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
  };

  auto* encode_cmd = app.add_subcommand("encode", "Position vector of <gens> with respect to n");
  encode_cmd->add_option("--gens", o.gens, "Comma-separated generators")->required();
  encode_cmd->add_option("--n", o.n, "Modulus, must lie in the semigroup")->required();
  add_format(encode_cmd);

  auto* decode_cmd = app.add_subcommand("decode", "Apery set and invariants of a position vector");
  decode_cmd->add_option("vector", o.vector, "Comma-separated positive integers")->required();
  add_format(decode_cmd);

  auto* check_cmd = app.add_subcommand("check", "Semigroup test of a position vector");
  check_cmd->add_option("vector", o.vector, "Comma-separated positive integers")->required();
  add_format(check_cmd);

  auto* enum_cmd = app.add_subcommand("enumerate", "List vectors in {1..bound}^(n-1)");
  enum_cmd->add_option("--n", o.n, "Modulus")->required();
  enum_cmd->add_option("--bound", o.bound, "Largest entry")->required();
  enum_cmd->add_option("--filter", o.filter, "all | semigroups | semigroups_with_multiplicity_n")
      ->capture_default_str();
  add_format(enum_cmd);

  o.n = 4;
  o.bound = 6;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check against brute-force oracles");
  verify_cmd->add_option("suite", o.suite, "bijection | lemma31 | thm36 | tables | all")
      ->required()
      ->check(CLI::IsMember({"bijection", "lemma31", "thm36", "tables", "all"}));
  verify_cmd->add_option("--n", o.n, "Modulus of the vector grid")->capture_default_str();
  verify_cmd->add_option("--bound", o.bound, "Largest grid entry")->capture_default_str();
  verify_cmd->add_option("--max-frobenius", o.max_frobenius, "Largest Frobenius number enumerated")
      ->capture_default_str();
  verify_cmd->add_option("--max-modulus", o.max_modulus, "Largest modulus tried per set")
      ->capture_default_str();
  add_format(verify_cmd);

  auto* perm_cmd = app.add_subcommand("perm", "Permutation <-> conversion vector");
  perm_cmd->require_subcommand(1);
  auto* to_cmd = perm_cmd->add_subcommand("to-conversion", "Conversion vector of a permutation");
  to_cmd->add_option("permutation", o.vector, "Comma-separated permutation of 1..m")->required();
  add_format(to_cmd);
  auto* from_cmd = perm_cmd->add_subcommand("from-conversion", "Permutation of a conversion vector");
  from_cmd->add_option("vector", o.vector, "Comma-separated conversion vector")->required();
  add_format(from_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  std::string command = "unknown";
  try {
    Json doc;
    if (*encode_cmd) {
      command = "encode";
      doc = cmd_encode(o);
    } else if (*decode_cmd) {
      command = "decode";
      doc = cmd_decode(o);
    } else if (*check_cmd) {
      command = "check";
      doc = cmd_check(o);
    } else if (*enum_cmd) {
      command = "enumerate";
      doc = cmd_enumerate(o);
    } else if (*verify_cmd) {
      command = "verify";
      doc = cmd_verify(o);
    } else if (*to_cmd) {
      command = "perm to-conversion";
      doc = cmd_perm_to(o);
    } else {
      command = "perm from-conversion";
      doc = cmd_perm_from(o);
    }
    emit(doc, o, out);
    return kOk;
  } catch (const VerificationFailure& f) {
    emit(f.doc(), o, out);
    return kVerificationFailure;
  } catch (const ValidationError& e) {
    emit_error(command, e.what(), o, out, err);
    return kInputError;
  } catch (const OverflowError& e) {
    emit_error(command, e.what(), o, out, err);
    return kOverflowOrGuard;
  } catch (const GuardError& e) {
    emit_error(command, e.what(), o, out, err);
    return kOverflowOrGuard;
  } catch (const std::logic_error& e) {
    emit_error(command, std::string("internal consistency check failed: ") + e.what(), o, out, err);
    return kVerificationFailure;
  }
}

}  // namespace numsg::cli
