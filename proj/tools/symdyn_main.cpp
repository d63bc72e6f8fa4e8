#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "symdyn/builtins.hpp"
#include "symdyn/circuits.hpp"
#include "symdyn/criteria.hpp"
#include "symdyn/partial_action.hpp"
#include "symdyn/report.hpp"
#include "symdyn/spectrum.hpp"

using namespace symdyn;

namespace {

int const kExitOk = 0;
int const kExitPropertyFailure = 1;
int const kExitInputError = 2;

Subshift load_shift(std::string const& spec) {
  ensure_builtin_rules_registered();
  for (auto const& n : builtin_shift_names())
    if (spec == n) return builtin_shift(n);
  return load_spec_file(spec);
}

void emit(json const& doc, std::string const& out) {
  if (out.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream f(out);
    if (!f) throw std::invalid_argument("cannot write " + out);
    f << doc.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symbolic-dynamics toolkit: subshifts, spectra, and decision criteria"};
  app.require_subcommand(1);
  std::string out;
  app.add_option("--out", out, "write the JSON report to a file instead of stdout");

  std::string spec, word, gamma, gtext, xtext, family, only, example_id;
  std::vector<std::string> bwords;
  std::size_t radius = 3, kmax = 10;
  std::string dot_path;
  bool sup = false;
  std::string xopt;

  auto* lang = app.add_subcommand("lang", "language membership of a finite word");
  lang->add_option("spec", spec)->required();
  lang->add_option("word", word)->required();

  auto* follower = app.add_subcommand("follower", "follower set of a finite constraint set");
  follower->add_option("spec", spec)->required();
  follower->add_option("B", bwords, "constraint words")->required();

  auto* circuit = app.add_subcommand("circuit", "circuit, exit and strong exit report");
  circuit->add_option("spec", spec)->required();
  circuit->add_option("gamma", gamma)->required();

  auto* paction = app.add_subcommand("paction", "standard partial action on a point");
  paction->add_option("spec", spec)->required();
  paction->add_option("g", gtext, "group element, e.g. 10- for 1.0^-1")->required();
  paction->add_option("x", xtext, "point pre:per, e.g. :1 for 1^inf")->required();

  auto* spectrum = app.add_subcommand("spectrum", "truncated spectrum element of a point");
  spectrum->add_option("spec", spec)->required();
  spectrum->add_option("x", xtext)->required();
  spectrum->add_option("--radius", radius);
  spectrum->add_option("--dot", dot_path, "also write a Cayley-ball DOT rendering");

  auto* limit = app.add_subcommand("limit", "stabilized spectrum ball along a point family");
  limit->add_option("spec", spec)->required();
  limit->add_option("--family", family, "builtin family name")->required();
  limit->add_option("--radius", radius);
  limit->add_option("--kmax", kmax);

  auto* criteria = app.add_subcommand("criteria", "decision criteria for the shift");
  criteria->add_option("spec", spec)->required();
  criteria->add_option("--only", only, "top-free|minimal|simple|cofinality");

  auto* costc = app.add_subcommand("cost", "reaching cost of a point (or sup) from words");
  costc->add_option("spec", spec)->required();
  costc->add_option("--B", bwords, "constraint words")->required();
  costc->add_option("--x", xopt, "point pre:per");
  costc->add_flag("--sup", sup, "supremum over the shift");

  auto* repro = app.add_subcommand("reproduce", "run a registered example scenario");
  repro->add_option("id", example_id, "scenario id, or 'all'")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (repro->parsed()) {
      ensure_builtin_rules_registered();
      json results = json::array();
      bool all_pass = true;
      std::vector<std::string> ids = example_id == "all"
                                         ? reproduce_ids()
                                         : std::vector<std::string>{example_id};
      for (auto const& id : ids) {
        ReproduceResult r = reproduce(id);
        all_pass = all_pass && r.pass;
        results.push_back({{"id", id}, {"pass", r.pass}, {"detail", r.detail}});
      }
      json doc;
      doc["tool"] = "symdyn";
      doc["version"] = kToolVersion;
      doc["command"] = "reproduce";
      doc["result"] = results;
      emit(doc, out);
      return all_pass ? kExitOk : kExitPropertyFailure;
    }

    Subshift s = load_shift(spec);
    Alphabet const& a = s.alphabet();

    if (lang->parsed()) {
      Word w = parse_word(a, word);
      json body;
      body["word"] = word_str(a, w);
      body["in_language"] = in_language(s, w);
      if (!s.exact()) body["confidence"] = "bounded";
      emit(report_document(s, "lang", body), out);
      return kExitOk;
    }
    if (follower->parsed()) {
      std::vector<Word> B;
      for (auto const& b : bwords) B.push_back(parse_word(a, b));
      auto cfg = follower_config(s, B);
      json body;
      json parts = json::array();
      for (auto const& p : cfg.parts) {
        json ids = json::array();
        for (auto q : p) ids.push_back(s.automaton().names()[q]);
        parts.push_back(ids);
      }
      body["config"] = parts;
      bool nonempty = follower_nonempty(s, cfg);
      body["nonempty"] = nonempty;
      if (nonempty) {
        auto u = follower_unique_point(s, cfg);
        body["unique_point"] = u ? json(point_str(a, *u)) : json(nullptr);
      }
      emit(report_document(s, "follower", body), out);
      return kExitOk;
    }
    if (circuit->parsed()) {
      auto rep = circuit_report(s, parse_word(a, gamma));
      json body;
      body["gamma"] = word_str(a, rep.gamma);
      body["is_circuit"] = rep.circuit;
      if (rep.circuit) {
        body["exit"] = rep.exit ? json(point_str(a, *rep.exit)) : json(nullptr);
        body["strong_exit"] = rep.strong ? json(point_str(a, *rep.strong)) : json(nullptr);
      }
      body["confidence"] = rep.exact ? "exact" : "bounded";
      emit(report_document(s, "circuit", body), out);
      return kExitOk;
    }
    if (paction->parsed()) {
      GroupElement g = parse_group(a, gtext);
      EvPeriodic x = parse_point(a, xtext);
      json body;
      body["g"] = group_str(a, g);
      body["x"] = point_str(a, x);
      body["x_in_domain"] = domain_contains(s, g.inverse(), x);
      auto y = try_act(s, g, x);
      body["image"] = y ? json(point_str(a, *y)) : json(nullptr);
      auto fp = fixed_point(s, g);
      body["fixed_point"] = fp ? json(point_str(a, *fp)) : json(nullptr);
      emit(report_document(s, "paction", body), out);
      return kExitOk;
    }
    if (spectrum->parsed()) {
      EvPeriodic x = parse_point(a, xtext);
      SpectrumBall xi = xi_ball(s, x, radius);
      json body = ball_json(s, xi);
      auto val = validate_element(s, xi);
      body["valid"] = val.ok;
      if (!val.ok) body["violated"] = val.violated;
      if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw std::invalid_argument("cannot write " + dot_path);
        f << ball_dot(s, xi);
        body["dot"] = dot_path;
      }
      emit(report_document(s, "spectrum", body), out);
      return kExitOk;
    }
    if (limit->parsed()) {
      auto fam = builtin_family(family, a);
      auto rep = limit_ball(s, fam, radius, kmax);
      json body;
      body["family"] = family;
      body["stabilized"] = rep.stabilized;
      body["stabilized_at"] = rep.stabilized_at;
      body["window"] = rep.window;
      body["ball"] = ball_json(s, rep.ball);
      emit(report_document(s, "limit", body), out);
      return rep.stabilized ? kExitOk : kExitPropertyFailure;
    }
    if (criteria->parsed()) {
      json body = json::array();
      bool coherent = true;
      auto add = [&](std::string const& name, Verdict const& v) {
        body.push_back(verdict_json(s, name, v));
      };
      if (only.empty() || only == "top-free") add("topologically-free", is_topologically_free(s));
      if (only.empty() || only == "cofinality") {
        add("cofinal", is_cofinal(s));
        add("collectively-cofinal", is_collectively_cofinal(s));
        add("strongly-cofinal", is_strongly_cofinal(s));
        add("hyper-cofinal", is_hyper_cofinal(s));
      }
      if (only.empty() || only == "minimal") add("minimal", is_minimal(s));
      if (only.empty() || only == "simple") {
        add("simple", is_simple(s));
        add("non-eventually-periodic-point", has_non_ev_periodic_point(s));
      }
      if (only.empty() && s.exact()) {
        add("surjective", is_surjective(s));
        add("finite-type", is_finite_type(s));
      }
      emit(report_document(s, "criteria", body), out);
      return coherent ? kExitOk : kExitPropertyFailure;
    }
    if (costc->parsed()) {
      std::vector<Word> B;
      for (auto const& b : bwords) B.push_back(parse_word(a, b));
      if (sup ? !xopt.empty() : xopt.empty())
        throw std::invalid_argument("cost needs exactly one of --x or --sup");
      CostReport r = sup ? sup_cost(s, B) : cost(s, B, parse_point(a, xopt));
      emit(report_document(s, "cost", cost_json(s, r)), out);
      return kExitOk;
    }
  } catch (DepthExceeded const& e) {
    std::cerr << "depth exceeded: " << e.what() << "\n";
    return kExitInputError;
  } catch (RadiusError const& e) {
    std::cerr << "radius too small: " << e.what() << "\n";
    return kExitInputError;
  } catch (std::invalid_argument const& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitInputError;
}
