#include "symdyn/report.hpp"

#include <fstream>

#include "symdyn/builtins.hpp"
#include "symdyn/circuits.hpp"
#include "symdyn/partial_action.hpp"

namespace symdyn {

char const* const kToolVersion = "0.1.0";

namespace {

json words_json(Alphabet const& a, std::vector<Word> const& ws) {
  json out = json::array();
  for (auto const& w : ws) out.push_back(word_str(a, w));
  return out;
}

}  // namespace

Subshift load_spec_json(json const& j) {
  ensure_builtin_rules_registered();
  static std::set<std::string> const allowed{"alphabet", "kind",  "forbidden",
                                             "states",   "edges", "rule",
                                             "depth_bound"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw std::invalid_argument("unknown field in shift spec: " + it.key());
  if (!j.contains("alphabet") || !j.contains("kind"))
    throw std::invalid_argument("shift spec needs alphabet and kind");
  std::vector<std::string> symbols = j.at("alphabet").get<std::vector<std::string>>();
  Alphabet alph(symbols);
  std::string kind = j.at("kind").get<std::string>();
  auto require_only = [&](std::set<std::string> const& keys) {
    for (auto it = j.begin(); it != j.end(); ++it)
      if (!keys.count(it.key()))
        throw std::invalid_argument("field " + it.key() + " not valid for kind " + kind);
  };
  if (kind == "full") {
    require_only({"alphabet", "kind"});
    return Subshift::full(alph);
  }
  if (kind == "sft") {
    require_only({"alphabet", "kind", "forbidden"});
    std::vector<Word> forb;
    for (auto const& f : j.at("forbidden")) forb.push_back(parse_word(alph, f.get<std::string>()));
    return Subshift::sft(alph, std::move(forb));
  }
  if (kind == "sofic") {
    require_only({"alphabet", "kind", "states", "edges"});
    std::vector<std::string> states = j.at("states").get<std::vector<std::string>>();
    std::map<std::string, State> id;
    for (std::size_t i = 0; i < states.size(); ++i) {
      if (id.count(states[i])) throw std::invalid_argument("duplicate state " + states[i]);
      id[states[i]] = static_cast<State>(i);
    }
    Automaton aut(alph, states.size());
    aut.names() = states;
    for (auto const& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3)
        throw std::invalid_argument("edges must be [src,label,dst] triples");
      auto src = id.find(e[0].get<std::string>());
      auto dst = id.find(e[2].get<std::string>());
      if (src == id.end() || dst == id.end())
        throw std::invalid_argument("edge references unknown state");
      aut.add_edge(src->second, alph.index_of(e[1].get<std::string>()), dst->second);
    }
    return Subshift::sofic(alph, std::move(aut));
  }
  if (kind == "oracle") {
    require_only({"alphabet", "kind", "rule", "depth_bound"});
    return Subshift::oracle(alph, j.at("rule").get<std::string>(),
                            j.at("depth_bound").get<std::size_t>());
  }
  throw std::invalid_argument("unknown shift kind: " + kind);
}

Subshift load_spec_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  json j = json::parse(in);
  Subshift s = load_spec_json(j);
  if (s.label.empty()) {
    auto base = path.find_last_of('/');
    s.label = path.substr(base == std::string::npos ? 0 : base + 1);
  }
  return s;
}

json spec_json(Subshift const& s) {
  json j;
  j["alphabet"] = s.alphabet().symbols();
  j["kind"] = kind_name(s.kind());
  switch (s.kind()) {
    case Kind::Full:
      break;
    case Kind::SFT: {
      json f = json::array();
      for (auto const& w : s.forbidden()) f.push_back(word_str(s.alphabet(), w));
      j["forbidden"] = f;
      break;
    }
    case Kind::Sofic: {
      Automaton const& aut = s.automaton();
      j["states"] = aut.names();
      json edges = json::array();
      for (State q = 0; q < aut.n_states(); ++q)
        for (Sym a = 0; a < s.alphabet().size(); ++a)
          for (State t : aut.succ(q, a))
            edges.push_back({aut.names()[q], s.alphabet().name(a), aut.names()[t]});
      j["edges"] = edges;
      break;
    }
    case Kind::Oracle:
      j["rule"] = s.rule_name();
      j["depth_bound"] = s.depth_bound();
      break;
  }
  return j;
}

json verdict_json(Subshift const& s, std::string const& criterion, Verdict const& v) {
  Alphabet const& a = s.alphabet();
  json j;
  j["criterion"] = criterion;
  j["value"] = v.value;
  if (!v.exact) {
    j["confidence"] = "bounded";
    j["depth"] = v.depth;
  } else {
    j["confidence"] = "exact";
  }
  if (v.memory) j["memory"] = *v.memory;
  if (!v.note.empty()) j["note"] = v.note;
  json w;
  if (v.witness_words) w["B"] = words_json(a, *v.witness_words);
  if (v.witness_word) w["word"] = word_str(a, *v.witness_word);
  if (v.witness_word2) w["word2"] = word_str(a, *v.witness_word2);
  if (v.witness_point) w["point"] = point_str(a, *v.witness_point);
  if (!w.empty()) j["witness"] = w;

  // Replay scripts for false verdicts: module calls with expected results.
  if (!v.value) {
    json replay = json::array();
    if (criterion == "topologically-free" && v.witness_words && v.witness_point) {
      replay.push_back({{"op", "follower_unique_point"},
                        {"B", words_json(a, *v.witness_words)},
                        {"expect_point", point_str(a, *v.witness_point)}});
      replay.push_back({{"op", "contains_point"},
                        {"x", point_str(a, *v.witness_point)},
                        {"expect", true}});
    } else if ((criterion == "cofinal" || criterion == "collectively-cofinal") &&
               v.witness_words && v.witness_point) {
      replay.push_back({{"op", "cost"},
                        {"B", words_json(a, *v.witness_words)},
                        {"x", point_str(a, *v.witness_point)},
                        {"expect", "infinite"}});
    } else if ((criterion == "strongly-cofinal" || criterion == "hyper-cofinal" ||
                criterion == "minimal" || criterion == "simple") &&
               v.witness_words && v.witness_point) {
      json call = {{"op", "cost"},
                   {"B", words_json(a, *v.witness_words)},
                   {"x", point_str(a, *v.witness_point)}};
      if (v.witness_word2)
        call["expect_at_least"] = v.witness_word2->size();
      else
        call["expect"] = "infinite";
      replay.push_back(call);
    } else if (criterion == "surjective" && v.witness_word) {
      replay.push_back({{"op", "left_extendable"},
                        {"w", word_str(a, *v.witness_word)},
                        {"expect", false}});
    }
    if (!replay.empty()) j["replay"] = replay;
  }
  return j;
}

json cost_json(Subshift const& s, CostReport const& r) {
  Alphabet const& a = s.alphabet();
  json j;
  j["B"] = words_json(a, r.constraint);
  j["x"] = r.point ? json(point_str(a, *r.point)) : json("sup");
  if (r.infinite) {
    j["cost"] = "infinite";
  } else {
    j["cost"] = r.cost;
    if (r.point) {
      j["alpha"] = word_str(a, r.alpha);
      j["gamma"] = word_str(a, r.gamma);
    }
  }
  if (r.attained_at) j["attained_at"] = point_str(a, *r.attained_at);
  j["confidence"] = r.exact ? "exact" : "bounded";
  if (!r.exact) j["depth"] = r.depth;
  if (!r.growth.empty()) {
    json g = json::array();
    for (auto const& [pt, c] : r.growth)
      g.push_back({{"x", point_str(a, pt)},
                   {"cost", c == UINT64_MAX ? json("infinite") : json(c)}});
    j["growth"] = g;
  }
  if (!r.note.empty()) j["note"] = r.note;
  if (r.point && !r.infinite) {
    j["replay"] = json::array({json{{"op", "contains_point"},
                                    {"x", "witness: beta gamma . sigma^{|alpha|}(x)"},
                                    {"expect", true}}});
  }
  return j;
}

json ball_json(Subshift const& s, SpectrumBall const& xi) {
  Alphabet const& a = s.alphabet();
  json j;
  j["radius"] = xi.radius;
  json m = json::array();
  for (auto const& g : xi.members) m.push_back(group_str(a, g));
  j["members"] = m;
  j["stem"] = word_str(a, xi.members.empty() ? Word{} : stem_of(xi));
  if (xi.stem_exact) j["stem_point"] = point_str(a, *xi.stem_exact);
  switch (xi.provenance) {
    case Provenance::ExactPoint: j["provenance"] = "exact-point"; break;
    case Provenance::LimitOf: j["provenance"] = "limit"; break;
    case Provenance::Translated: j["provenance"] = "translated"; break;
  }
  j["confidence"] = xi.exact ? "exact" : "bounded";
  if (!xi.exact) j["depth"] = xi.depth;
  j["origin"] = xi.origin;
  return j;
}

json report_document(Subshift const& s, std::string const& command, json body) {
  json doc;
  doc["tool"] = "symdyn";
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["shift"] = spec_json(s);
  if (!s.label.empty()) doc["shift_label"] = s.label;
  doc["result"] = std::move(body);
  return doc;
}

// ---------------------------------------------------------------------------
// Reproduction suite.
// ---------------------------------------------------------------------------

namespace {

ReproduceResult repro_even_strong_exits() {
  Subshift even = builtin_shift("even");
  Alphabet const& a = even.alphabet();
  json detail;
  std::size_t circuits = 0;
  for (std::size_t len = 1; len <= 8; ++len) {
    Word g(len, 0);
    for (;;) {
      if (is_circuit(even, g)) {
        ++circuits;
        auto se = strong_exit(even, g);
        if (!se) {
          detail["failed_at"] = word_str(a, g);
          return {false, detail};
        }
        // Replay: the witness exits every checked power.
        EvPeriodic ginf(Word{}, g);
        for (std::size_t n = 1; n <= 5; ++n) {
          Word p;
          for (std::size_t i = 0; i < n; ++i) p.insert(p.end(), g.begin(), g.end());
          if (!contains_point(even, se->with_prefix(p)) || *se == ginf) {
            detail["bad_witness_at"] = word_str(a, g);
            return {false, detail};
          }
        }
        // The two closed forms are strong exits as well: an all-ones circuit
        // exits through zeros, and a circuit with a zero exits through
        // (prefix up to its first zero) 0 1^inf.
        EvPeriodic form = [&]() {
          auto zero = std::find(g.begin(), g.end(), 0);
          if (zero == g.end()) return EvPeriodic(Word{}, Word{0});
          Word pre(g.begin(), zero);
          pre.push_back(0);
          return EvPeriodic(pre, Word{1});
        }();
        StateSet chain = even.automaton().endpoints(g);
        for (;;) {
          StateSet nx = even.automaton().step_word(chain, g);
          if (nx == chain) break;
          chain = nx;
        }
        if (!even.automaton().survives(chain, form) || form == ginf) {
          detail["paper_form_fails_at"] = word_str(a, g);
          return {false, detail};
        }
      }
      std::size_t i = g.size();
      while (i > 0 && std::size_t(g[i - 1]) + 1 == a.size()) g[--i] = 0;
      if (i == 0) break;
      ++g[i - 1];
    }
  }
  detail["circuits_checked"] = circuits;
  return {circuits > 0, detail};
}

ReproduceResult repro_even_isolated_point() {
  Subshift even = builtin_shift("even");
  auto B = std::vector<Word>{parse_word(even.alphabet(), "01"), parse_word(even.alphabet(), "011")};
  auto cfg = follower_config(even, B);
  if (!follower_nonempty(even, cfg)) return {false, {{"error", "empty follower set"}}};
  auto p = follower_unique_point(even, cfg);
  EvPeriodic ones(Word{}, Word{1});
  json detail;
  detail["unique_point"] = p ? point_str(even.alphabet(), *p) : "none";
  return {p && *p == ones, detail};
}

ReproduceResult repro_even_not_topfree() {
  Subshift even = builtin_shift("even");
  Verdict v = is_topologically_free(even);
  json detail = verdict_json(even, "topologically-free", v);
  bool gamma_ok = v.witness_word && *v.witness_word == Word{1};
  return {!v.value && v.exact && gamma_ok, detail};
}

ReproduceResult repro_even_not_minimal() {
  Subshift even = builtin_shift("even");
  Verdict v = is_minimal(even);
  return {!v.value && v.exact, verdict_json(even, "minimal", v)};
}

ReproduceResult repro_even_anomalous_xi() {
  Subshift even = builtin_shift("even");
  auto family = builtin_family("even-odd-ones", even.alphabet());
  auto rep = limit_ball(even, family, 2, 10);
  json detail;
  detail["stabilized"] = rep.stabilized;
  detail["ball"] = ball_json(even, rep.ball);
  if (!rep.stabilized) return {false, detail};
  GroupElement zero_inv = parse_group(even.alphabet(), "0-");
  EvPeriodic ones(Word{}, Word{1});
  bool stem_ok = rep.ball.stem_exact && *rep.ball.stem_exact == ones;
  bool zero_out = !rep.ball.contains(zero_inv);
  SpectrumBall basin = xi_ball(even, ones, 2);
  bool zero_in_basin = basin.contains(zero_inv);
  bool differ = basin.members != rep.ball.members;
  detail["stem_is_ones"] = stem_ok;
  detail["zero_inverse_absent"] = zero_out;
  detail["zero_inverse_in_xi_of_limit"] = zero_in_basin;
  return {stem_ok && zero_out && zero_in_basin && differ, detail};
}

ReproduceResult repro_pow2_unbounded_cost() {
  Subshift pow2 = builtin_shift("pow2");
  json detail;
  json table = json::array();
  bool ok = true;
  for (std::size_t m = 1; m <= 6; ++m) {
    std::size_t n = 3u << (m - 1);
    EvPeriodic x(Word(n, 1), Word{0});
    CostReport c = cost(pow2, {Word{0}}, x);
    std::uint64_t expect = 1u << (m - 1);
    table.push_back({{"n", n}, {"cost", c.infinite ? json("infinite") : json(c.cost)},
                     {"expect", expect}});
    ok = ok && !c.infinite && c.cost == expect;
  }
  CostReport sup = sup_cost(pow2, {Word{0}});
  detail["growth"] = table;
  detail["sup_infinite"] = sup.infinite;
  return {ok && sup.infinite, detail};
}

ReproduceResult repro_markov3() {
  Subshift m3 = builtin_shift("markov3");
  Alphabet const& a = m3.alphabet();
  Verdict simple = is_simple(m3);
  Verdict surj = is_surjective(m3);
  CostReport th = thomsen_sup(m3, {parse_word(a, "2")});
  json detail;
  detail["simple"] = verdict_json(m3, "simple", simple);
  detail["surjective"] = verdict_json(m3, "surjective", surj);
  detail["thomsen"] = cost_json(m3, th);
  bool surj_witness = surj.witness_word && *surj.witness_word == parse_word(a, "1");
  EvPeriodic w(parse_word(a, "1"), parse_word(a, "2"));
  bool th_witness = th.attained_at && *th.attained_at == w;
  return {simple.value && simple.exact && !surj.value && surj_witness && th.infinite &&
              th_witness,
          detail};
}

ReproduceResult repro_ex14_cond_i() {
  Subshift ex = builtin_shift("ex14");
  Alphabet const& a = ex.alphabet();
  json detail;
  // Lambda_1(z) = {0,1,2}: one-letter left extensions of the substitution
  // point, probed at the full depth bound.
  Word z = ex14_z_prefix(ex.depth_bound() - 1);
  json lz = json::array();
  bool z_all = true;
  for (Sym c = 0; c < a.size(); ++c) {
    Word cz{c};
    cz.insert(cz.end(), z.begin(), z.end());
    bool in = ex.rule(cz);
    if (in) lz.push_back(a.name(c));
    z_all = z_all && in;
  }
  detail["lambda1_z"] = lz;
  // z has no period up to 64 (checked on a longer prefix).
  Word zz = ex14_z_prefix(192);
  bool aperiodic = true;
  for (std::size_t p = 1; p <= 64 && aperiodic; ++p) {
    bool periodic = true;
    for (std::size_t i = 0; i + p < zz.size(); ++i)
      if (zz[i] != zz[i + p]) {
        periodic = false;
        break;
      }
    aperiodic = !periodic;
  }
  detail["z_aperiodic_to_64"] = aperiodic;
  // Sampled points other than z extend only by {1,2}.
  auto pts = enumerate_points(ex, 4);
  std::size_t checked = 0;
  bool sampled_ok = true;
  for (auto const& x : pts) {
    if (checked >= 20) break;
    auto ext = lambda_l(ex, x, 1);
    std::vector<Word> expect{Word{1}, Word{2}};
    sampled_ok = sampled_ok && ext == expect;
    ++checked;
  }
  detail["sampled_points"] = checked;
  detail["lambda1_others_is_12"] = sampled_ok;
  Verdict tf = is_topologically_free(ex, 32);
  detail["topologically_free"] = verdict_json(ex, "topologically-free", tf);
  return {z_all && aperiodic && sampled_ok && checked == 20 && tf.value && !tf.exact &&
              tf.depth == 32,
          detail};
}

ReproduceResult repro_sft001_exits() {
  Subshift s = builtin_shift("sft001");
  Alphabet const& a = s.alphabet();
  auto e0 = exit_of(s, parse_word(a, "0"));
  auto e00 = exit_of(s, parse_word(a, "00"));
  json detail;
  detail["exit_of_0"] = e0 ? point_str(a, *e0) : "none";
  detail["exit_of_00"] = e00 ? point_str(a, *e00) : "none";
  bool replay = true;
  if (e0) {
    EvPeriodic zero_inf(Word{}, Word{0});
    replay = contains_point(s, e0->with_prefix(Word{0})) && *e0 != zero_inf;
  }
  return {e0.has_value() && !e00.has_value() && replay, detail};
}

}  // namespace

std::vector<std::string> reproduce_ids() {
  return {"even-strong-exits",  "even-isolated-point", "even-not-topfree",
          "even-not-minimal",   "even-anomalous-xi",   "pow2-unbounded-cost",
          "markov3-simple-nonthomsen", "ex14-condI",   "sft001-exits"};
}

ReproduceResult reproduce(std::string const& id) {
  if (id == "even-strong-exits") return repro_even_strong_exits();
  if (id == "even-isolated-point") return repro_even_isolated_point();
  if (id == "even-not-topfree") return repro_even_not_topfree();
  if (id == "even-not-minimal") return repro_even_not_minimal();
  if (id == "even-anomalous-xi") return repro_even_anomalous_xi();
  if (id == "pow2-unbounded-cost") return repro_pow2_unbounded_cost();
  if (id == "markov3-simple-nonthomsen") return repro_markov3();
  if (id == "ex14-condI") return repro_ex14_cond_i();
  if (id == "sft001-exits") return repro_sft001_exits();
  throw std::invalid_argument("unknown reproduce id: " + id);
}

}  // namespace symdyn
