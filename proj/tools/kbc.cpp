// Command-line front end: classification, mapping-class action,
// canonicalization, the exact matrix representation, enumeration, and the
// verification suites. JSON (stable field order, stable bytes) by default;
// --format table for humans.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "kbc/canonicalize.hpp"
#include "kbc/classify.hpp"
#include "kbc/mcg.hpp"
#include "kbc/rep.hpp"
#include "kbc/verify.hpp"
#include "kbc/word.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  try {
    q = mpq_class(text, 10);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad rational '" + text + "', expected p or p/q");
  }
  if (q.get_den() == 0)
    throw std::invalid_argument("bad rational '" + text + "': zero denominator");
  q.canonicalize();
  return q;
}

json topo_json(const kbc::TopoType& t) {
  json pieces = json::array();
  for (const kbc::SurfacePiece& p : t.pieces)
    pieces.push_back({{"name", p.name},
                      {"orientable", p.orientable},
                      {"genus", p.genus},
                      {"boundary", p.boundary_components},
                      {"euler", p.euler_characteristic}});
  return {{"separating", t.separating}, {"one_sided", t.one_sided}, {"pieces", pieces}};
}

void fill_class_fields(json& rec, const std::optional<kbc::SccClass>& cls) {
  rec["member"] = cls.has_value();
  if (cls) {
    rec["family"] = kbc::family_name(cls->family);
    if (cls->family == kbc::SccClass::Family::Slope) {
      rec["n"] = cls->n;
      rec["doubled"] = cls->doubled;
    } else {
      rec["n"] = nullptr;
      rec["doubled"] = nullptr;
    }
    rec["inverted"] = cls->inverted;
  } else {
    rec["family"] = nullptr;
    rec["n"] = nullptr;
    rec["doubled"] = nullptr;
    rec["inverted"] = false;
  }
}

json laurent_json(const kbc::Laurent& p) {
  json terms = json::array();
  for (const auto& [exps, coeff] : p.terms())
    terms.push_back(json::array({exps.first, exps.second, coeff.get_str()}));
  return terms;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

int run_classify(const std::string& word_text, const std::string& format) {
  kbc::Word w = kbc::parse_word(word_text);
  std::optional<kbc::SccClass> cls = kbc::classify(w);

  json rec;
  rec["input"] = word_text;
  rec["reduced"] = kbc::to_string(w);
  rec["cyclic"] = kbc::to_string(kbc::cyclic_reduce(w).core);
  fill_class_fields(rec, cls);
  rec["topo"] = cls ? topo_json(kbc::topo_type(*cls)) : json(nullptr);

  if (format == "json") {
    emit(rec);
    return 0;
  }
  std::cout << "input:    " << word_text << "\n"
            << "reduced:  " << rec["reduced"].get<std::string>() << "\n"
            << "cyclic:   " << rec["cyclic"].get<std::string>() << "\n"
            << "simple:   " << (cls ? "yes" : "no") << "\n";
  if (cls) {
    std::cout << "family:   " << kbc::family_name(cls->family);
    if (cls->family == kbc::SccClass::Family::Slope)
      std::cout << " (n=" << cls->n << (cls->doubled ? ", doubled" : "") << ")";
    std::cout << (cls->inverted ? ", inverted" : "") << "\n";
    kbc::TopoType t = kbc::topo_type(*cls);
    std::cout << "cut type: " << (t.separating ? "separating" : "non-separating") << ", "
              << (t.one_sided ? "one-sided" : "two-sided") << "\n";
    for (const kbc::SurfacePiece& p : t.pieces)
      std::cout << "piece:    " << p.name << " (genus " << p.genus << ", "
                << p.boundary_components << " boundary, euler " << p.euler_characteristic
                << ")\n";
  }
  return 0;
}

int run_act(const std::string& mcg_text, const std::string& word_text,
            const std::string& format) {
  kbc::McgWord phi = kbc::parse_mcg_word(mcg_text);
  kbc::Word w = kbc::parse_word(word_text);
  kbc::Word out = kbc::apply_mcg(phi, w);

  if (format == "json") {
    json rec;
    rec["mcg"] = json::array();
    for (kbc::McgGenerator g : phi) rec["mcg"].push_back(kbc::to_token(g));
    rec["input"] = word_text;
    rec["output"] = kbc::to_string(out);
    emit(rec);
  } else {
    std::cout << kbc::to_string(out) << "\n";
  }
  return 0;
}

int run_canonicalize(const std::string& word_text, const std::string& format) {
  kbc::Word w = kbc::parse_word(word_text);
  std::optional<kbc::CanonicalizationResult> r = kbc::canonicalize(w);

  if (format == "json") {
    json rec;
    rec["input"] = word_text;
    if (!r) {
      rec["member"] = false;
      emit(rec);
      return 0;
    }
    rec["mcg"] = json::array();
    for (kbc::McgGenerator g : r->mcg) rec["mcg"].push_back(kbc::to_token(g));
    rec["target"] = kbc::to_string(kbc::target_word(r->target));
    rec["target_inverted"] = r->target_inverted;
    rec["conjugator"] = kbc::to_string(r->conjugator);
    emit(rec);
    return 0;
  }
  if (!r) {
    std::cout << "not a simple closed curve\n";
    return 0;
  }
  std::cout << "mcg:        " << (r->mcg.empty() ? "(identity)" : kbc::to_string(r->mcg))
            << "\n"
            << "target:     " << kbc::to_string(kbc::target_word(r->target))
            << (r->target_inverted ? " (inverted)" : "") << "\n"
            << "conjugator: " << kbc::to_string(r->conjugator) << "\n";
  return 0;
}

int run_rep(const std::string& word_text, const std::string& alpha_text,
            const std::string& beta_text, bool symbolic_only, const std::string& format) {
  kbc::Word w = kbc::parse_word(word_text);
  kbc::UTMatrix m = kbc::rho(w);
  kbc::Params params(parse_rational(alpha_text), parse_rational(beta_text));

  if (format == "json") {
    json rec;
    rec["word"] = word_text;
    rec["symbolic"] = {{"d1", laurent_json(m.d1)},
                       {"u", laurent_json(m.u)},
                       {"d2", laurent_json(m.d2)}};
    if (symbolic_only) {
      rec["numeric"] = nullptr;
    } else {
      kbc::RationalUTMatrix num = kbc::specialize(m, params);
      rec["numeric"] = {{"alpha", params.alpha.get_str()},
                        {"beta", params.beta.get_str()},
                        {"d1", num.d1.get_str()},
                        {"u", num.u.get_str()},
                        {"d2", num.d2.get_str()}};
    }
    rec["projective_identity"] = kbc::is_projective_identity(m);
    emit(rec);
    return 0;
  }
  std::cout << "word: " << kbc::to_string(w) << "\n"
            << "rho = [ " << m.d1.str() << "   " << m.u.str() << " ]\n"
            << "      [ 0   " << m.d2.str() << " ]\n";
  if (!symbolic_only) {
    kbc::RationalUTMatrix num = kbc::specialize(m, params);
    std::cout << "at alpha=" << params.alpha.get_str() << ", beta=" << params.beta.get_str()
              << ": [ " << num.d1.get_str() << "  " << num.u.get_str() << " ; 0  "
              << num.d2.get_str() << " ]\n";
  }
  std::cout << "projective identity: "
            << (kbc::is_projective_identity(m) ? "yes" : "no") << "\n";
  return 0;
}

int run_enumerate(int max_len, const std::string& format) {
  auto classes = kbc::enumerate_classes(max_len);
  if (format == "json") {
    json rows = json::array();
    for (const auto& [cyc, cls] : classes) {
      json rec;
      rec["length"] = cyc.size();
      rec["cyclic"] = kbc::to_string(cyc);
      fill_class_fields(rec, cls);
      rows.push_back(std::move(rec));
    }
    emit(rows);
    return 0;
  }
  std::cout << "length  cyclic            family\n";
  for (const auto& [cyc, cls] : classes) {
    std::string family = "-";
    if (cls) {
      family = kbc::family_name(cls->family);
      if (cls->family == kbc::SccClass::Family::Slope)
        family += " (n=" + std::to_string(cls->n) + (cls->doubled ? ", doubled" : "") + ")";
      if (cls->inverted) family += " inverted";
    }
    std::string word = kbc::to_string(cyc);
    std::cout << std::to_string(cyc.size()) << std::string(8 - std::to_string(cyc.size()).size(), ' ')
              << word << std::string(word.size() < 18 ? 18 - word.size() : 1, ' ') << family
              << "\n";
  }
  return 0;
}

int run_kernel_witness(const std::string& format) {
  kbc::Word w = kbc::kernel_witness();
  bool a5_nontrivial = !kbc::a5_image(w).is_identity();
  bool rho_identity = kbc::is_projective_identity(kbc::rho(w));
  if (format == "json") {
    json rec;
    rec["word"] = kbc::to_string(w);
    rec["a5_nontrivial"] = a5_nontrivial;
    rec["rho_identity"] = rho_identity;
    emit(rec);
  } else {
    std::cout << "word: " << kbc::to_string(w) << "\n"
              << "A5 image: " << kbc::a5_image(w).str() << "\n"
              << "rho(word) projectively trivial: " << (rho_identity ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_verify(int max_n, int max_len, int max_power, const std::string& alpha_text,
               const std::string& beta_text, const std::string& format) {
  kbc::Params params(parse_rational(alpha_text), parse_rational(beta_text));
  kbc::ParamsCheck pc = kbc::check_params_detail(params, 64);
  if (!pc.ok)
    throw std::invalid_argument("parameters fail the hypothesis: some alpha^k beta^l = +-1");

  auto results = kbc::run_verify_suite(max_n, max_len, max_power, params);
  long long total = 0;
  for (const auto& r : results) total += r.violations;

  if (format == "json") {
    json rec;
    rec["max_n"] = max_n;
    rec["max_len"] = max_len;
    rec["max_power"] = max_power;
    rec["alpha"] = params.alpha.get_str();
    rec["beta"] = params.beta.get_str();
    rec["params_check"] = pc.bounded ? "bounded" : "exact";
    rec["checks"] = json::array();
    for (const auto& r : results) {
      json c;
      c["name"] = r.name;
      c["cases"] = r.cases;
      c["violations"] = r.violations;
      c["notes"] = r.notes;
      rec["checks"].push_back(std::move(c));
    }
    rec["total_violations"] = total;
    rec["ok"] = total == 0;
    emit(rec);
  } else {
    for (const auto& r : results) {
      std::cout << (r.violations ? "FAIL  " : "ok    ") << r.name << "  cases=" << r.cases
                << " violations=" << r.violations << "\n";
      for (const std::string& n : r.notes) std::cout << "      " << n << "\n";
    }
    std::cout << (total == 0 ? "all checks passed" : "violations found") << "\n";
  }
  return total == 0 ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simple closed curves on the once-punctured Klein bottle"};
  app.require_subcommand(1);

  std::string word_text, mcg_text, format = "json";
  std::string alpha_text = "2", beta_text = "3";
  bool symbolic_only = false;
  int max_len = 6, max_n = 10, max_power = 5;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
  };

  CLI::App* classify = app.add_subcommand("classify", "classify a word");
  classify->add_option("word", word_text, "word in a, b, A, B with ^ exponents")
      ->required();
  add_format(classify);

  CLI::App* act = app.add_subcommand("act", "apply a mapping-class composition");
  act->add_option("mcg-word", mcg_text, "tokens tb, tb-, y, w1; leftmost acts last")
      ->required();
  act->add_option("word", word_text)->required();
  add_format(act);

  CLI::App* canon = app.add_subcommand("canonicalize", "reduce to a base curve");
  canon->add_option("word", word_text)->required();
  add_format(canon);

  CLI::App* rep = app.add_subcommand("rep", "matrix image under rho");
  rep->add_option("word", word_text)->required();
  rep->add_option("--alpha", alpha_text, "rational p or p/q")->capture_default_str();
  rep->add_option("--beta", beta_text, "rational p or p/q")->capture_default_str();
  rep->add_flag("--symbolic", symbolic_only, "skip the numeric specialization");
  add_format(rep);

  CLI::App* enumerate = app.add_subcommand("enumerate", "all cyclic classes up to a length");
  enumerate->add_option("--max-len", max_len, "maximum cyclic length (<= 12)")
      ->required();
  add_format(enumerate);

  CLI::App* witness = app.add_subcommand("kernel-witness",
                                         "a nontrivial word that rho kills");
  add_format(witness);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--max-n", max_n, "slope range for closure/reachability and rho")
      ->required();
  verify->add_option("--max-len", max_len, "cyclic length for the enumeration check")
      ->required();
  verify->add_option("--max-power", max_power, "powers checked against +-I")->required();
  verify->add_option("--alpha", alpha_text)->capture_default_str();
  verify->add_option("--beta", beta_text)->capture_default_str();
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(word_text, format);
    if (app.got_subcommand(act)) return run_act(mcg_text, word_text, format);
    if (app.got_subcommand(canon)) return run_canonicalize(word_text, format);
    if (app.got_subcommand(rep))
      return run_rep(word_text, alpha_text, beta_text, symbolic_only, format);
    if (app.got_subcommand(enumerate)) return run_enumerate(max_len, format);
    if (app.got_subcommand(witness)) return run_kernel_witness(format);
    if (app.got_subcommand(verify))
      return run_verify(max_n, max_len, max_power, alpha_text, beta_text, format);
  } catch (const kbc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
