#include "checks.hpp"

#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ekr/action_stats.hpp"
#include "ekr/bounds.hpp"
#include "ekr/class_algebra.hpp"
#include "ekr/data_dir.hpp"
#include "ekr/matrix_groups.hpp"
#include "ekr/psl.hpp"
#include "ekr/psu3.hpp"
#include "ekr/spectrum.hpp"
#include "ekr/suzuki_ree.hpp"
#include "ekr/symplectic.hpp"

namespace ekr::cli {

namespace {

struct Enumerated {
  GroupTable g;
  ConjugacyClassTable classes;
  ActionStats stats;
  ClassAlgebra algebra;

  explicit Enumerated(const GeneratorSet& gens)
      : g(GroupTable::enumerate(gens)), classes(g), stats(action_stats(g, classes)), algebra(g, classes) {}
};

class Recorder {
 public:
  Recorder(std::string scope, std::ostream& out, std::vector<Check>& sink) : scope_(std::move(scope)), out_(out), sink_(sink) {}
  void add(const std::string& name, bool pass, const std::string& detail) {
    sink_.push_back({scope_, name, pass, detail});
    out_ << (pass ? "PASS  " : "FAIL  ") << scope_ << "  " << name << "  " << detail << std::endl;
  }
  // Runs `body`; an exception becomes a failed check.
  void guarded(const std::string& name, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::string("error: ") + e.what());
    }
  }

 private:
  std::string scope_;
  std::ostream& out_;
  std::vector<Check>& sink_;
};

std::string value_text(const RealAlgebraic& v) {
  return v.is_rational() ? to_string(v.value()) : v.enclosure().to_string(6);
}

void small_sporadics(Recorder& rec) {
  const std::pair<const char*, const char*> rows[] = {
      {"M11 on 11 points", "m11_deg11.gens"}, {"M11 on 12 points", "m11_deg12.gens"},
      {"M12 on 12 points", "m12.gens"},       {"PSL2(11) on 11 points", "psl2_11_deg11.gens"},
      {"A7 on 15 points", "a7_deg15.gens"},   {"PSigmaL2(8) on 28 points", "psigmal2_8_deg28.gens"}};
  for (const auto& [label, file] : rows) {
    rec.guarded(label, [&, label = label, file = file] {
      Enumerated e(load_group_file(data_path(std::string("groups/") + file)));
      const WeightVector w = WeightVector::unit(e.stats);
      const Spectrum s = spectrum(e.algebra, e.stats, w);
      const std::size_t n = e.stats.degree;
      Rational tau(Integer(static_cast<unsigned long>(e.stats.derangements)), static_cast<unsigned long>(n - 1));
      tau = -tau;
      tau.canonicalize();
      const Integer mult = static_cast<unsigned long>((n - 1) * (n - 1));
      const BoundReport r = ekr_verdict(summarize(label, e.stats, e.classes, s, w));
      const bool pass = s.min().exact() && s.min().value.value() == tau && s.min().multiplicity == mult &&
                        r.verdict != Verdict::inconclusive;
      rec.add(label, pass,
              "|G|=" + std::to_string(e.g.order()) + " min=" + value_text(s.min().value) + " (expected " + to_string(tau) +
                  ") multiplicity " + to_string(s.min().multiplicity) + " (expected " + to_string(mult) + "), " +
                  to_string(r.verdict));
    });
  }
}

void suzuki(Recorder& rec) {
  for (unsigned long q : {8ul, 32ul, 128ul}) {
    const SuzukiData d = sz_spectrum(q);
    rec.add("Sz(" + std::to_string(q) + ") closed forms",
            d.r_squared_is_2q && d.multiplicities_sum_to_order && d.derangements_match_valency,
            "r^2=2q " + std::string(d.r_squared_is_2q ? "yes" : "no") + ", multiplicities sum to |G| " +
                (d.multiplicities_sum_to_order ? "yes" : "no") + ", class families give the valency " +
                (d.derangements_match_valency ? "yes" : "no"));
  }
  rec.guarded("Sz(8) enumerated spectrum", [&] {
    Enumerated e(load_group_file(data_path("groups/sz8.gens")));
    const WeightVector w = WeightVector::unit(e.stats);
    const Spectrum s = spectrum(e.algebra, e.stats, w);
    const SuzukiData d = sz_spectrum(8);
    bool match = s.entries.size() == d.spectrum.size();
    std::string text;
    for (std::size_t i = 0; match && i < s.entries.size(); ++i) {
      match = s.entries[i].exact() && s.entries[i].value.value() == Rational(d.spectrum[i].value) &&
              s.entries[i].multiplicity == d.spectrum[i].multiplicity;
    }
    for (const auto& x : s.entries) text += " (" + value_text(x.value) + ", " + to_string(x.multiplicity) + ")";
    rec.add("Sz(8) enumerated spectrum", match, "spectrum" + text);
    const BoundReport r = ekr_verdict(summarize("Sz(8)", e.stats, e.classes, s, w));
    const BoundEntry* b = r.find(BoundKind::ratio);
    const bool pass = b && b->value.is_point() && b->value.lo == 448 && r.verdict == Verdict::certified_with_surrogate;
    rec.add("Sz(8) ratio bound", pass, "bound " + (b ? b->value.to_string(3) : std::string("none")) + ", " + to_string(r.verdict));
  });
}

void ree(Recorder& rec) {
  for (unsigned long q : {27ul, 243ul, 2187ul}) {
    const ReeData d = ree_family_check(q);
    const std::string tag = "Ree(" + std::to_string(q) + ")";
    rec.add(tag + " class families", d.family_identity,
            "family total " + to_string(d.family_total) + ", valency " + to_string(d.valency));
    rec.add(tag + " dominance of xi3", d.dominance, "xi3 value " + to_string(d.xi3));
    rec.add(tag + " critical identity", d.critical_identity, "rhs " + d.critical_rhs.to_string(3));
  }
}

void psu3(Recorder& rec) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const std::string tag = "PSU3(" + std::to_string(q) + ") weighted scheme";
    rec.guarded(tag, [&] {
      Enumerated e(psu3_generators(q));
      const PSU3Scheme scheme = psu3_scheme(q);
      const WeightVector w = psu3_weights(scheme, e.classes, e.stats);
      const Spectrum s = spectrum(e.algebra, e.stats, w);
      const PSU3SpectrumCheck c = psu3_check_spectrum(scheme, s);
      const BoundReport r = ekr_verdict(summarize(tag, e.stats, e.classes, s, w));
      const BoundEntry* b = r.find(BoundKind::weighted_ratio);
      const bool tight = b && b->tight;
      rec.add(tag, c.all_pass() && tight && r.verdict != Verdict::inconclusive,
              "a=" + to_string(scheme.a) + " b=" + to_string(scheme.b) + " max=" + value_text(s.max().value) +
                  " min=" + value_text(s.min().value) + " multiplicity of -1 " +
                  (s.find(-1) ? to_string(s.find(-1)->multiplicity) : std::string("0")) + ", bound " +
                  (b ? b->value.to_string(3) : std::string("none")) + ", " + to_string(r.verdict));
    });
  }
  std::uint64_t p;
  unsigned k;
  std::string bad_t, bad_tp;
  std::size_t t_count = 0, tp_count = 0;
  for (std::uint64_t q = 3; q <= 200; ++q) {
    if (!prime_power(q, p, k)) continue;
    const TripleCounts t = psu3_triple_counts(q);
    if (t.d == 1) {
      ++t_count;
      if (!t.all_pass()) bad_t += " " + std::to_string(q);
    } else {
      ++tp_count;
      if (!t.all_pass()) bad_tp += " " + std::to_string(q);
    }
  }
  rec.add("Claims 1 and 2 on T, q <= 200", bad_t.empty(),
          std::to_string(t_count) + " values of q" + (bad_t.empty() ? "" : ", failing q:" + bad_t));
  rec.add("T' occurrence counts, q <= 200", bad_tp.empty(),
          std::to_string(tp_count) + " values of q" + (bad_tp.empty() ? "" : ", failing q:" + bad_tp));
  std::ostringstream sums;
  std::size_t sum_count = 0, sum_bad = 0;
  for (std::uint64_t q = 3; q <= 50; ++q) {
    if (!prime_power(q, p, k)) continue;
    const unsigned d = (q + 1) % 3 == 0 ? 3 : 1;
    const std::uint64_t last = d == 1 ? q : (q + 1) / 3 - 1;
    for (std::uint64_t u = 1; u <= last; ++u) {
      const CharacterSum cs = psu3_character_sum(q, u);
      ++sum_count;
      if (!cs.pass) {
        ++sum_bad;
        if (sum_bad <= 6)
          sums << " q=" << q << ",u=" << u << ": " << (cs.value ? to_string(*cs.value) : std::string("irrational"))
               << " vs " << to_string(cs.claimed) << ";";
      }
    }
  }
  rec.add("character sums, q <= 50", sum_bad == 0,
          std::to_string(sum_count) + " sums, " + std::to_string(sum_bad) + " differ from the stated value" + sums.str());
}

void psl(Recorder& rec) {
  const TotientSweep sw = psl_totient_sweep(7, 1'000'000);
  rec.add("totient inequality 7..10^6", sw.pass(),
          std::to_string(sw.checked) + " values, " + std::to_string(sw.failures.size()) + " failures, " +
              std::to_string(sw.exact_fallbacks) + " decided by exact powers");
  const std::tuple<unsigned, std::uint32_t, const char*> groups[] = {
      {2, 7, "PSL2(7)"}, {2, 11, "PSL2(11)"}, {4, 2, "PSL4(2)"}};
  for (const auto& [n, q, label] : groups) {
    rec.guarded(std::string(label) + " derangement proportion", [&, n = n, q = q, label = label] {
      Enumerated e(psl_generators(n, q));
      Rational measured(static_cast<unsigned long>(e.stats.derangements), static_cast<unsigned long>(e.g.order()));
      measured.canonicalize();
      const DerangementProportion d = psl_derangement_lower_bound(n, q, measured);
      rec.add(std::string(label) + " derangement proportion", d.pass.value_or(false),
              "measured " + to_string(measured) + ", bound " + d.bound.to_string(6));
      if (n == 4) {
        const WeightVector w = WeightVector::unit(e.stats);
        const Spectrum s = spectrum(e.algebra, e.stats, w);
        Rational tau(static_cast<unsigned long>(e.stats.derangements), 14ul);
        tau = -tau;
        tau.canonicalize();
        const BoundReport r = ekr_verdict(summarize(label, e.stats, e.classes, s, w));
        rec.add("PSL4(2) spectrum", s.min().exact() && s.min().value.value() == tau && s.min().multiplicity == 196 &&
                                        r.verdict != Verdict::inconclusive,
                "min " + value_text(s.min().value) + " multiplicity " + to_string(s.min().multiplicity) + ", " +
                    to_string(r.verdict));
      }
    });
  }
  rec.guarded("small degree table", [&] {
    const auto table = load_small_degree_table(data_path("psl_small_degrees.tsv").string());
    std::string text;
    bool ok = true;
    for (auto [n, q] : {std::pair<unsigned, std::uint64_t>{4, 2}, {4, 3}, {5, 2}, {6, 2}, {5, 3}}) {
      const DegreeFilter f = psl_degree_filter(n, q, table);
      ok = ok && f.row.has_value();
      text += " (" + std::to_string(n) + "," + std::to_string(q) + "): rhs " + f.rhs.to_string(2) + ", below:";
      for (const auto& d : f.degrees)
        if (d.below_rhs) text += " " + to_string(d.degree);
      text += ";";
    }
    rec.add("small degree table", ok, "every sample has a matching row;" + text);
  });
}

void symplectic(Recorder& rec) {
  for (unsigned n = 3; n <= 6; ++n)
    for (int eps : {1, -1}) {
      const SpScheme s = sp_scheme(n, eps);
      rec.add("Sp" + std::to_string(2 * n) + "(2) closed forms, eps " + (eps == 1 ? "+" : "-"),
              s.weil_degree_identity && s.ratio_matches,
              "d=" + to_string(s.d) + " tau=" + to_string(s.tau) + " bound " + to_string(s.bound));
    }
  rec.guarded("Sp6(2) enumerated", [&] {
    const SymplecticActions acts = sp2n2_actions(3);
    Enumerated e(acts.combined);
    const SpWeilCheck w = sp_weil_identity_check(e.g, e.classes, acts);
    rec.add("Sp6(2) Weil identity", w.all_pass() && e.classes.size() == 30,
            std::to_string(e.classes.size()) + " classes, fixed-point patterns (" + std::to_string(w.plus.fixed_same) + "," +
                std::to_string(w.plus.fixed_other) + ") and (" + std::to_string(w.minus.fixed_same) + "," +
                std::to_string(w.minus.fixed_other) + ")");
    for (int eps : {1, -1}) {
      const std::string tag = std::string("Sp6(2) weighted, eps ") + (eps == 1 ? "+" : "-");
      const ActionStats stats = action_stats(e.g, e.classes, eps == 1 ? acts.plus_range : acts.minus_range);
      const WeightVector wv = sp_weights(e.g, e.classes, stats, 3, eps);
      const Spectrum s = spectrum(e.algebra, stats, wv);
      const SpScheme sc = sp_scheme(3, eps);
      const BoundReport r = ekr_verdict(summarize(tag, stats, e.classes, s, wv));
      // Only d, tau and the bound are pinned: on plus-type forms two characters
      // of degree 35 share tau, so its multiplicity is 2 * 35^2.
      const bool pass = s.max().exact() && s.max().value.value() == Rational(sc.d) && s.min().exact() &&
                        s.min().value.value() == sc.tau && r.verdict != Verdict::inconclusive && r.target == sc.bound;
      rec.add(tag, pass,
              "d=" + value_text(s.max().value) + " tau=" + value_text(s.min().value) + " multiplicity " +
                  to_string(s.min().multiplicity) + ", bound " + to_string(r.target) + ", " + to_string(r.verdict));
    }
  });
}

}  // namespace

const std::vector<std::string>& scope_names() {
  static const std::vector<std::string> names{"small-sporadics", "suzuki", "ree", "psu3", "psl", "symplectic", "all-desk"};
  return names;
}

std::vector<Check> run_scope(const std::string& scope, std::ostream& out) {
  std::vector<Check> checks;
  const std::vector<std::pair<std::string, void (*)(Recorder&)>> table{
      {"small-sporadics", small_sporadics}, {"suzuki", suzuki}, {"ree", ree},
      {"psu3", psu3}, {"psl", psl}, {"symplectic", symplectic}};
  bool known = scope == "all-desk";
  for (const auto& [name, fn] : table) {
    if (scope != "all-desk" && scope != name) continue;
    known = true;
    Recorder rec(name, out, checks);
    fn(rec);
  }
  if (!known) throw std::invalid_argument("unknown scope '" + scope + "'");
  return checks;
}

int cmd_verify(const std::string& scope, std::ostream& out) {
  const auto checks = run_scope(scope, out);
  std::size_t failed = 0;
  for (const auto& c : checks) failed += !c.pass;
  out << checks.size() - failed << "/" << checks.size() << " checks passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

}  // namespace ekr::cli
