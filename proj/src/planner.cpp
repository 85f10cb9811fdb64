#include "cnniep/planner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "cnniep/constructors.hpp"

namespace cnniep {

namespace {

std::string format_margin(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

struct Shape {
  std::size_t reals = 0;
  std::size_t pairs = 0;
  bool negative = false;  // every real strictly negative
};

// Shape requirement of each construction; empty string when satisfied.
std::string shape_problem(const std::string& name, const Shape& s) {
  const bool even_pairs = s.pairs >= 2 && s.pairs % 2 == 0;
  if (name == "four_by_four") {
    return s.reals == 1 && s.pairs == 1 ? "" : "needs exactly one real besides lambda0 and one pair";
  }
  if (s.reals > 0 && !s.negative) return "needs every real besides lambda0 to be negative";
  if (name == "one_pair") return s.reals >= 1 && s.pairs == 1 ? "" : "needs n >= 1 reals and one pair";
  if (name == "three_pairs_8x8") {
    return s.reals == 1 && s.pairs == 3 ? "" : "needs one real and three pairs";
  }
  if (name == "circulant_pair") {
    return s.reals == 1 && even_pairs ? "" : "needs one real and an even number of pairs";
  }
  if (name == "three_pairs") return s.reals >= 1 && s.pairs == 3 ? "" : "needs n >= 1 reals and three pairs";
  if (name == "even_pairs") {
    return s.reals >= 1 && even_pairs ? "" : "needs n >= 1 reals and an even number of pairs";
  }
  if (name == "four_reals") return s.reals == 3 && s.pairs >= 1 ? "" : "needs three reals and m >= 1 pairs";
  if (name == "general") return s.reals >= 3 && s.pairs >= 1 ? "" : "needs n >= 3 reals and m >= 1 pairs";
  return "unknown construction";
}

Realization run_construction(const std::string& name, const Spectrum& c) {
  const double l0 = c.perron;
  if (name == "four_by_four") return realize_4x4(l0, c.reals[0], c.pairs[0]);
  if (name == "one_pair") return realize_one_pair(l0, c.reals, c.pairs[0]);
  if (name == "three_pairs_8x8") {
    return realize_three_pairs_8x8(l0, c.reals[0], c.pairs[0], c.pairs[1], c.pairs[2]);
  }
  if (name == "circulant_pair") return realize_circulant_pair(l0, c.reals[0], c.pairs);
  if (name == "three_pairs") return realize_three_pairs(l0, c.reals, c.pairs);
  if (name == "even_pairs") return realize_even_pairs(l0, c.reals, c.pairs);
  if (name == "four_reals") return realize_four_reals(l0, c.reals, c.pairs);
  if (name == "general") return realize_general(l0, c.reals, c.pairs);
  throw InvalidArgument("unknown construction: " + name);
}

Realization singleton(double lambda0) {
  Realization r;
  r.matrix = DenseMatrix(1, 1, lambda0);
  r.perron = {lambda0, Vector{1.0}};
  r.spectrum = {Complex(lambda0, 0.0)};
  r.trace.push_back({"singleton", {{"lambda0", lambda0}}, 1, r.spectrum});
  return r;
}

PlanResult finish(Realization r, std::string construction, const Spectrum& target,
                  const PlanOptions& opts) {
  PlanResult out{std::move(r), std::move(construction), std::nullopt};
  if (!opts.verify) return out;
  out.report = verify_realization(out.realization.matrix, target, opts.tolerances);
  if (!out.report->pass) throw VerificationFailed(std::move(out));
  return out;
}

}  // namespace

const std::vector<std::string>& construction_names() {
  static const std::vector<std::string> names = {
      "four_by_four",   "one_pair",    "three_pairs_8x8", "circulant_pair",
      "three_pairs",    "even_pairs",  "four_reals",      "general"};
  return names;
}

bool ConditionReport::any_applicable() const {
  return std::any_of(entries.begin(), entries.end(),
                     [](const ConditionEntry& e) { return e.applicable; });
}

const ConditionEntry* ConditionReport::find(const std::string& name) const {
  for (const ConditionEntry& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

PlanningCore planning_core(const Spectrum& s) {
  PlanningCore pc;
  pc.core.perron = s.perron;
  pc.core.pairs = s.pairs;
  std::size_t zeros = 0;
  for (double r : s.reals) {
    if (std::abs(r) <= kZeroTolerance) {
      ++zeros;
    } else {
      pc.core.reals.push_back(r);
    }
  }
  pc.padded_zeros = zeros - zeros % 2;
  if (zeros % 2 == 1) {
    pc.core.reals.push_back(0.0);
    std::sort(pc.core.reals.begin(), pc.core.reals.end(), std::greater<>());
  }
  return pc;
}

ConditionReport condition_report(const Spectrum& s) {
  const PlanningCore pc = planning_core(s);
  const Spectrum& c = pc.core;
  ConditionReport rep;
  rep.real_count = s.reals.size();
  rep.pair_count = s.pairs.size();
  rep.padded_zeros = pc.padded_zeros;
  rep.zero_count = static_cast<std::size_t>(std::count_if(
      s.reals.begin(), s.reals.end(), [](double r) { return std::abs(r) <= kZeroTolerance; }));
  rep.trivially_realizable = c.reals.empty() && c.pairs.empty();

  Shape shape{c.reals.size(), c.pairs.size(),
              std::all_of(c.reals.begin(), c.reals.end(), [](double r) { return r < 0.0; })};
  double sum_reals = 0.0;
  for (double r : c.reals) sum_reals += r;
  const double sum_margin = c.perron + sum_reals - 2.0 * sum_of_moduli(c.pairs);

  for (const std::string& name : construction_names()) {
    ConditionEntry e;
    e.name = name;
    const std::string problem = shape_problem(name, shape);
    if (!problem.empty()) {
      e.reason = problem;
      rep.entries.push_back(std::move(e));
      continue;
    }
    if (name == "four_by_four") {
      const FourByFourMargins m = check_4x4_necessary(c.perron, c.reals[0], c.pairs[0]);
      const bool sum_binds = m.sum_margin <= m.diff_margin;
      e.margin = sum_binds ? m.sum_margin : m.diff_margin;
      e.reason = std::string(sum_binds ? "lambda0 + lambda1 - 2|a|" : "lambda0 - lambda1 - 2|b|") +
                 " = " + format_margin(*e.margin);
    } else {
      e.margin = sum_margin;
      e.reason = "lambda0 + sum(lambda_j) - 2 sum|z_j| = " + format_margin(sum_margin);
    }
    e.applicable = *e.margin >= -kApplicabilityThreshold;
    rep.entries.push_back(std::move(e));
  }

  std::vector<std::string> notes;
  if (pc.padded_zeros > 0) {
    notes.push_back(std::to_string(pc.padded_zeros) +
                    " zero eigenvalues are attached in pairs after the core construction");
  }
  if (rep.zero_count % 2 == 1) {
    notes.push_back("odd number of zero eigenvalues: one zero stays in the core, where only "
                    "four_by_four allows a nonnegative real");
  }
  if (!rep.trivially_realizable && c.pairs.empty()) {
    notes.push_back("no construction here covers spectra without complex pairs");
  }
  for (std::size_t i = 0; i < notes.size(); ++i) rep.note += (i ? "; " : "") + notes[i];
  return rep;
}

PlanResult plan_and_realize(const Spectrum& s, const PlanOptions& opts) {
  const auto& names = construction_names();
  if (opts.preference != "auto" &&
      std::find(names.begin(), names.end(), opts.preference) == names.end()) {
    throw InvalidArgument("unknown construction: " + opts.preference);
  }
  ConditionReport rep = condition_report(s);
  const PlanningCore pc = planning_core(s);

  Realization r;
  std::string chosen;
  if (rep.trivially_realizable) {
    r = singleton(pc.core.perron);
    chosen = "singleton";
  } else {
    for (const ConditionEntry& e : rep.entries) {
      if (!e.applicable) continue;
      if (opts.preference != "auto" && e.name != opts.preference) continue;
      chosen = e.name;
      break;
    }
    if (chosen.empty()) {
      const std::string what = opts.preference == "auto"
                                   ? "no applicable sufficient condition"
                                   : "construction " + opts.preference + " does not apply";
      throw NoSufficientCondition(what, std::move(rep));
    }
    r = run_construction(chosen, pc.core);
  }
  for (std::size_t k = 0; k < pc.padded_zeros / 2; ++k) r = append_two_reals(r, zero_block(), 0.0, 0.0);
  return finish(std::move(r), std::move(chosen), s, opts);
}

PlanResult realize_with_partition(const Spectrum& s, const PartitionSpec& spec,
                                  const PlanOptions& opts) {
  const std::vector<Complex> described = spec.described_values();
  const std::vector<Complex> target = s.values();
  if (described.size() != target.size() ||
      !match_spectra(described, target, 1e-9 * std::max(1.0, s.perron)).ok) {
    throw PartitionError("partition blocks do not make up the spectrum");
  }
  for (std::size_t j = 0; j < spec.blocks.size(); ++j) {
    const double w = spec.blocks[j].omega;
    if (!(w >= 0.0) || w > s.perron) {
      throw PartitionError("omega of block " + std::to_string(j + 1) + " must lie in [0, lambda1]");
    }
  }

  const bool mixed = spec.mode == PartitionMode::mixed;
  std::vector<Realization> realizers;
  for (std::size_t j = 0; j < spec.blocks.size(); ++j) {
    const bool side_block = mixed && j < spec.mirrored;
    const PartitionBlock& block = spec.blocks[j];
    try {
      if (block.realizer) {
        realizers.push_back(realization_of(*block.realizer, !side_block));
        continue;
      }
      const std::vector<Complex> gamma = spec.gamma(j);
      const Spectrum g = Spectrum::normalize(gamma);
      if (side_block && g.reals.empty() &&
          g.perron - 2.0 * sum_of_moduli(g.pairs) >= -kApplicabilityThreshold) {
        realizers.push_back(realize_circulant(g.perron, g.pairs));
        continue;
      }
      PlanOptions sub = opts;
      sub.preference = "auto";
      sub.verify = true;
      realizers.push_back(plan_and_realize(g, sub).realization);
    } catch (const PartitionError&) {
      throw;
    } catch (const Error& e) {
      throw PartitionError("block " + std::to_string(j + 1) + ": " + e.what());
    }
  }
  Realization r = mixed ? realize_partitioned_mixed(spec, realizers)
                        : realize_partitioned(spec, realizers);
  return finish(std::move(r), "partition", s, opts);
}

}  // namespace cnniep
