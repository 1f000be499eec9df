#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "cox/json_io.hpp"
#include "cox/parabolic.hpp"

using namespace cox;
using nlohmann::json;

namespace {

constexpr int kDepthCap = 1000;
constexpr std::size_t kSizeCap = 10'000'000;

CoxeterSystem load_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open system file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return CoxeterSystem::parse(buf.str());
}

GenSet parse_genset(const Group& g, const std::string& text) {
  GenSet out;
  if (text.empty()) return out;
  bool single = true;
  for (const auto& l : g.system().labels()) single = single && l.size() == 1;
  if (text.find(',') == std::string::npos && single) {
    for (char c : text) out = out.with(g.system().generator_index(std::string(1, c)));
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      if (comma == std::string::npos) comma = text.size();
      out = out.with(g.system().generator_index(text.substr(pos, comma - pos)));
      pos = comma + 1;
      if (comma == text.size()) break;
    }
  }
  return out;
}

json genset_to_json(const Group& g, GenSet I) {
  json out = json::array();
  for (int s : I.members()) out.push_back(g.system().label(s));
  return out;
}

// "a=3,b=2" optionally repeated per class with ';'.
std::vector<std::pair<Rational, Rational>> parse_rational_pairs(const Group& g,
                                                                const std::string& body) {
  std::vector<std::pair<Rational, Rational>> pairs;
  std::size_t pos = 0;
  while (pos <= body.size()) {
    std::size_t semi = body.find(';', pos);
    if (semi == std::string::npos) semi = body.size();
    std::string chunk = body.substr(pos, semi - pos);
    std::size_t comma = chunk.find(',');
    if (chunk.rfind("a=", 0) != 0 || comma == std::string::npos ||
        chunk.compare(comma + 1, 2, "b=") != 0)
      throw ParseError("expected a=<rational>,b=<rational>: " + chunk);
    pairs.emplace_back(parse_rational(chunk.substr(2, comma - 2)),
                       parse_rational(chunk.substr(comma + 3)));
    pos = semi + 1;
    if (semi == body.size()) break;
  }
  std::size_t classes = g.system().generator_classes().size();
  if (pairs.size() == 1) pairs.resize(classes, pairs[0]);
  if (pairs.size() != classes)
    throw ParseError("parameter count does not match the number of generator classes");
  return pairs;
}

DeformationParameters<RationalField> parse_rational_spec(const Group& g,
                                                         const std::string& spec) {
  if (spec.rfind("rational:", 0) != 0)
    throw ParseError("this command needs rational parameters, e.g. rational:a=3,b=2");
  return rational_params(g, parse_rational_pairs(g, spec.substr(9)));
}

void check_budget(int depth, std::size_t size, bool allow_large) {
  if (allow_large) return;
  if (depth > kDepthCap)
    throw PreconditionError("depth above the cap; pass --allow-large to acknowledge");
  if (size > kSizeCap)
    throw PreconditionError("size budget above the cap; pass --allow-large to acknowledge");
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

json element_record(const Group& g, const Element& w) {
  return {{"schema", kSchemaVersion},
          {"word", element_to_json(g, w)},
          {"display", g.format(w)},
          {"length", w.length()}};
}

int run(int argc, char** argv) {
  CLI::App app{"exact workbench for Coxeter groups and Iwahori-Hecke algebras"};
  app.require_subcommand(1);

  std::string system_path, word, second_word, base_word, chamber_word, left_set, right_set;
  std::string params_spec = "rational:a=3,b=2", cert_path;
  std::vector<std::string> params_list;
  int radius = 3, gain = 2, depth = 64, threads = 0;
  std::size_t max_ball = 1'000'000, max_closure = 1'000'000, bound = 10'000;
  bool allow_large = false, serial = false, list_elements = false;

  app.add_option("--threads", threads, "OpenMP thread count (0 = library default)");
  app.add_flag("--serial", serial, "run library kernels on the serial reference path");
  app.add_flag("--allow-large", allow_large, "acknowledge budgets above the built-in caps");

  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", system_path, "system JSON file")->required();
  };

  auto* c_classify = app.add_subcommand("classify", "type classification of the system");
  add_system(c_classify);

  auto* c_nf = app.add_subcommand("nf", "normal form, length and descent sets of a word");
  add_system(c_nf);
  c_nf->add_option("--word", word)->required();

  auto* c_mul = app.add_subcommand("mul", "product of two group elements");
  add_system(c_mul);
  c_mul->add_option("x", word)->required();
  c_mul->add_option("y", second_word)->required();

  auto* c_ball = app.add_subcommand("ball", "length profile of the ball of a given radius");
  add_system(c_ball);
  c_ball->add_option("--radius", radius)->required();
  c_ball->add_option("--max-ball", max_ball);
  c_ball->add_flag("--elements", list_elements, "also emit one record per element");

  auto* c_dcoset = app.add_subcommand("dcoset", "double coset decomposition u * wbar * v");
  add_system(c_dcoset);
  c_dcoset->add_option("--word", word)->required();
  c_dcoset->add_option("--left", left_set, "generator subset I")->required();
  c_dcoset->add_option("--right", right_set, "generator subset J")->required();

  auto* c_project = app.add_subcommand("project", "gate projection onto a residue");
  add_system(c_project);
  c_project->add_option("--word", word)->required();
  c_project->add_option("--base", base_word)->required();
  c_project->add_option("--residue", right_set, "generator subset J")->required();

  auto* c_uplus = app.add_subcommand("uplus", "search a non-decreasing conjugation certificate");
  add_system(c_uplus);
  c_uplus->add_option("--word", word)->required();
  c_uplus->add_option("--gain", gain)->required();
  c_uplus->add_option("--conjugators", left_set, "restrict conjugating generators");
  c_uplus->add_option("--depth", depth);
  c_uplus->add_option("--max-closure", max_closure);

  auto* c_flat = app.add_subcommand("flatclosure", "closure under length-preserving conjugation");
  add_system(c_flat);
  c_flat->add_option("--word", word)->required();
  c_flat->add_option("--max-closure", max_closure);

  auto* c_bad = app.add_subcommand("badchamber", "decide badness of a chamber for a word");
  add_system(c_bad);
  c_bad->add_option("--word", word)->required();
  c_bad->add_option("--chamber", chamber_word)->required();
  c_bad->add_option("--max-closure", max_closure);

  auto* c_class = app.add_subcommand("class", "bounded conjugacy class enumeration");
  add_system(c_class);
  c_class->add_option("--word", word)->required();
  c_class->add_option("--bound", bound);

  auto* c_trans = app.add_subcommand("translation", "affine type: is the element a translation");
  add_system(c_trans);
  c_trans->add_option("--word", word)->required();

  auto* c_hmul = app.add_subcommand("hecke-mul", "product T_x * T_y in the Hecke algebra");
  add_system(c_hmul);
  c_hmul->add_option("x", word)->required();
  c_hmul->add_option("y", second_word)->required();
  c_hmul->add_option("--params", params_spec, "generic | rational:a=..,b=.. | laurent:L=..");

  auto* c_comm = app.add_subcommand("commutator", "T_s x - x T_s for a basis element x = T_w");
  add_system(c_comm);
  c_comm->add_option("--gen", second_word, "generator label")->required();
  c_comm->add_option("--word", word)->required();
  c_comm->add_option("--params", params_spec);

  auto* c_cdim = app.add_subcommand("centre-dim", "kernel dimension of the truncated commutant");
  add_system(c_cdim);
  c_cdim->add_option("--radius", radius)->required();
  c_cdim->add_option("--params", params_spec)->required();
  c_cdim->add_option("--max-ball", max_ball);

  auto* c_cassert = app.add_subcommand("centre-assert", "two-route triviality check with certificates");
  add_system(c_cassert);
  c_cassert->add_option("--radius", radius)->required();
  c_cassert->add_option("--params", params_list, "rational parameter points (repeatable)");
  c_cassert->add_option("--max-ball", max_ball);

  auto* c_certify = app.add_subcommand("certify", "independently replay a certificate file");
  add_system(c_certify);
  c_certify->add_option("--certificate", cert_path, "certificate JSON file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  }

#ifdef _OPENMP
  if (threads > 0) omp_set_num_threads(threads);
#endif
  const bool parallel = !serial;
  check_budget(std::max(depth, radius), std::max(max_ball, std::max(max_closure, bound)),
               allow_large);

  CoxeterSystem sys = load_system(system_path);
  Group g(sys);

  if (c_classify->parsed()) {
    emit(classification_to_json(sys));
    return 0;
  }
  if (c_nf->parsed()) {
    Element w = g.parse_word(word);
    json rec = element_record(g, w);
    rec["left_descents"] = genset_to_json(g, g.left_descents(w));
    rec["right_descents"] = genset_to_json(g, g.right_descents(w));
    emit(rec);
    return 0;
  }
  if (c_mul->parsed()) {
    emit(element_record(g, g.multiply(g.parse_word(word), g.parse_word(second_word))));
    return 0;
  }
  if (c_ball->parsed()) {
    std::vector<Element> ball = g.ball(radius, {max_ball}, parallel);
    std::vector<std::size_t> profile(radius + 1, 0);
    for (const Element& w : ball) ++profile[w.length()];
    emit({{"schema", kSchemaVersion},
          {"radius", radius},
          {"size", ball.size()},
          {"profile", profile}});
    if (list_elements)
      for (const Element& w : ball) emit(element_record(g, w));
    return 0;
  }
  if (c_dcoset->parsed()) {
    GenSet I = parse_genset(g, left_set), J = parse_genset(g, right_set);
    DoubleCosetDecomposition d = decompose_double_coset(g, g.parse_word(word), I, J);
    emit({{"schema", kSchemaVersion},
          {"I", genset_to_json(g, d.I)},
          {"J", genset_to_json(g, d.J)},
          {"H", genset_to_json(g, d.H)},
          {"u", element_to_json(g, d.u)},
          {"wbar", element_to_json(g, d.wbar)},
          {"v", element_to_json(g, d.v)},
          {"lengths_additive",
           d.u.length() + d.wbar.length() + d.v.length() ==
               g.multiply(g.multiply(d.u, d.wbar), d.v).length()}});
    return 0;
  }
  if (c_project->parsed()) {
    GenSet J = parse_genset(g, right_set);
    emit(element_record(
        g, project_to_residue(g, g.parse_word(word), g.parse_word(base_word), J)));
    return 0;
  }
  if (c_uplus->parsed()) {
    Element w = g.parse_word(word);
    GenSet I = left_set.empty() ? GenSet::all(g.rank()) : parse_genset(g, left_set);
    UplusSearchResult res = uplus_bfs(g, w, I, gain, {depth, max_closure});
    if (const auto* cert = std::get_if<GrowthCertificate>(&res)) {
      emit(growth_certificate_to_json(g, w, *cert));
      return 0;
    }
    if (const auto* ex = std::get_if<Exhausted>(&res)) {
      emit({{"schema", kSchemaVersion},
            {"kind", "exhausted"},
            {"reachable_size", ex->reachable.size()}});
      return 0;
    }
    emit({{"schema", kSchemaVersion}, {"kind", "budget-exceeded"}});
    return 3;
  }
  if (c_flat->parsed()) {
    FlatClosureResult res = flat_closure(g, g.parse_word(word), max_closure);
    if (const auto* closure = std::get_if<std::vector<Element>>(&res)) {
      json elems = json::array();
      for (const Element& w : *closure) elems.push_back(element_to_json(g, w));
      emit({{"schema", kSchemaVersion}, {"size", closure->size()}, {"elements", elems}});
      return 0;
    }
    emit({{"schema", kSchemaVersion}, {"kind", "budget-exceeded"}});
    return 3;
  }
  if (c_bad->parsed()) {
    BadChamberVerdict verdict =
        w_bad_decide(g, g.parse_word(word), g.parse_word(chamber_word), max_closure);
    if (verdict.status == BadChamberVerdict::Status::Inconclusive) {
      emit({{"schema", kSchemaVersion}, {"kind", "budget-exceeded"}});
      return 3;
    }
    json rec{{"schema", kSchemaVersion},
             {"bad", verdict.status == BadChamberVerdict::Status::Bad}};
    if (verdict.escape)
      rec["escape"] = growth_certificate_to_json(g, verdict.escape->steps.front().from,
                                                 *verdict.escape);
    rec["flat_closure_size"] = verdict.flat_closure.size();
    emit(rec);
    return 0;
  }
  if (c_class->parsed()) {
    ConjugacyClassResult res = conjugacy_class_bounded(g, g.parse_word(word), bound);
    if (const auto* finite = std::get_if<FiniteClass>(&res)) {
      json lengths = json::array();
      for (const Element& w : finite->members) lengths.push_back(w.length());
      emit({{"schema", kSchemaVersion},
            {"finite", true},
            {"size", finite->members.size()},
            {"lengths", lengths}});
    } else {
      emit({{"schema", kSchemaVersion}, {"finite", false}, {"bound", bound}});
    }
    return 0;
  }
  if (c_trans->parsed()) {
    emit({{"schema", kSchemaVersion}, {"translation", is_translation(g, g.parse_word(word))}});
    return 0;
  }
  if (c_hmul->parsed() || c_comm->parsed()) {
    bool comm = c_comm->parsed();
    auto run_generic = [&](auto&& ring, auto&& params) {
      HeckeElement<std::decay_t<decltype(ring)>> result;
      if (comm) {
        int s = g.system().generator_index(second_word);
        result = commutator_with_generator(g, ring, params, s,
                                           t_basis(ring, g.parse_word(word)));
      } else {
        result = multiply(g, ring, params, t_basis(ring, g.parse_word(word)),
                          t_basis(ring, g.parse_word(second_word)));
      }
      emit(hecke_to_json(g, ring, result));
    };
    if (params_spec == "generic") {
      GenericPolyRing ring = make_generic_ring(g);
      run_generic(ring, generic_params(g, ring));
    } else if (params_spec.rfind("laurent:", 0) == 0) {
      LaurentRing ring;
      std::vector<int> exps;
      std::string body = params_spec.substr(8);
      std::size_t pos = 0;
      while (pos <= body.size()) {
        std::size_t semi = body.find(';', pos);
        if (semi == std::string::npos) semi = body.size();
        std::string chunk = body.substr(pos, semi - pos);
        if (chunk.rfind("L=", 0) != 0) throw ParseError("expected L=<int>: " + chunk);
        exps.push_back(std::stoi(chunk.substr(2)));
        pos = semi + 1;
        if (semi == body.size()) break;
      }
      if (exps.size() == 1) exps.resize(g.system().generator_classes().size(), exps[0]);
      run_generic(ring, laurent_params(g, ring, exps));
    } else {
      RationalField ring;
      run_generic(ring, parse_rational_spec(g, params_spec));
    }
    return 0;
  }
  if (c_cdim->parsed()) {
    int dim = centre_dimension_at(g, radius, parse_rational_spec(g, params_spec), {max_ball},
                                  parallel);
    emit({{"schema", kSchemaVersion}, {"radius", radius}, {"dimension", dim}});
    return 0;
  }
  if (c_cassert->parsed()) {
    std::vector<DeformationParameters<RationalField>> points;
    for (const std::string& spec : params_list) points.push_back(parse_rational_spec(g, spec));
    if (points.empty()) points.push_back(parse_rational_spec(g, "rational:a=3,b=2"));
    if (points.size() == 1) points.push_back(parse_rational_spec(g, "rational:a=5,b=7"));
    CentreReport report = assert_centre_trivial_up_to(g, radius, points, {max_ball}, parallel);
    emit(centre_report_to_json(g, report));
    return report.ok ? 0 : 1;
  }
  if (c_certify->parsed()) {
    std::ifstream in(cert_path);
    if (!in) throw ParseError("cannot open certificate file: " + cert_path);
    json j = json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded()) throw ParseError("certificate file is not valid JSON");
    std::string kind = j.value("kind", "");
    bool valid = false;
    std::string error;
    if (kind == "growth-certificate") {
      auto [start, cert] = growth_certificate_from_json(g, j);
      valid = replay_growth_certificate(g, start, cert, &error);
    } else if (kind == "zero-propagation-certificate") {
      valid = replay_zero_certificate(g, zero_certificate_from_json(g, j), &error);
    } else {
      throw ParseError("unknown certificate kind: " + kind);
    }
    emit({{"schema", kSchemaVersion}, {"kind", kind}, {"valid", valid}, {"error", error}});
    return valid ? 0 : 1;
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceededError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
