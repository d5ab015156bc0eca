#include "segeval/synth.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

namespace segeval {

namespace {

// Walks every monotone edit script, folding the running cost front to back
// so each complete script is scored in forward order, and keeps the minimum.
void enumerate(const SegmentSequence& gt, const SegmentSequence& pred,
               const AlignmentConfig& cfg, std::size_t i, std::size_t j, double cost,
               double& best) {
  if (i == gt.size() && j == pred.size()) {
    best = std::min(best, cost);
    return;
  }
  if (i < gt.size()) {
    enumerate(gt, pred, cfg, i + 1, j, cost + cfg.indel_cost, best);
  }
  if (j < pred.size()) {
    enumerate(gt, pred, cfg, i, j + 1, cost + cfg.indel_cost, best);
  }
  if (i < gt.size() && j < pred.size()) {
    const double pair_cost = match_cost(gt[i], pred[j], cfg);
    if (pair_cost < std::numeric_limits<double>::infinity()) {
      enumerate(gt, pred, cfg, i + 1, j + 1, cost + pair_cost, best);
    }
  }
}

}  // namespace

double brute_force_align(const SegmentSequence& gt, const SegmentSequence& pred,
                         const AlignmentConfig& cfg) {
  if (gt.size() + pred.size() > 18) {
    throw TooLargeError("brute-force alignment is bounded to |gt| + |pred| <= 18");
  }
  double best = std::numeric_limits<double>::infinity();
  enumerate(gt, pred, cfg, 0, 0, 0.0, best);
  return best;
}

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

Time uniform_time(std::mt19937_64& rng, Time lo, Time hi) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  return lo + (hi - lo) * u;
}

// True when the segment keeps clear of both neighbours, so local edits stay
// local to the alignment.
bool isolated(const std::vector<Segment>& segs, std::size_t k) {
  if (k > 0 && overlap_length(segs[k - 1], segs[k]) >= 0.0) return false;
  if (k + 1 < segs.size() && overlap_length(segs[k], segs[k + 1]) >= 0.0) return false;
  return true;
}

std::vector<std::size_t> draw_targets(std::mt19937_64& rng, std::vector<std::size_t>& pool,
                                      int count, const char* what) {
  if (static_cast<int>(pool.size()) < count) {
    throw InfeasibleSpecError(std::string("not enough eligible segments for ") + what);
  }
  std::vector<std::size_t> chosen;
  for (int c = 0; c < count; ++c) {
    const std::size_t at = pick(rng, pool.size());
    chosen.push_back(pool[at]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(at));
  }
  return chosen;
}

}  // namespace

PerturbationResult perturb(const SegmentSequence& gt, const PerturbationSpec& spec) {
  if (spec.boundary_jitter < 0.0 || spec.n_label_swaps < 0 || spec.n_drops < 0 ||
      spec.n_spurious < 0 || spec.n_repetitions < 0) {
    throw InfeasibleSpecError("perturbation counts and jitter must be >= 0");
  }
  std::mt19937_64 rng(spec.seed);
  const Time eps = spec.resolution.epsilon;
  const std::vector<Segment>& src = gt.segments();

  std::set<Label> pool_set;
  for (const Segment& s : src) {
    if (!s.label.is_no_label()) pool_set.insert(s.label);
  }
  const std::vector<Label> pool(pool_set.begin(), pool_set.end());

  // Eligible targets: isolated user-labeled segments; repetitions also need
  // room for two fragments separated by a filler.
  std::vector<std::size_t> labeled;
  for (std::size_t k = 0; k < src.size(); ++k) {
    if (!src[k].label.is_no_label() && isolated(src, k)) labeled.push_back(k);
  }
  std::vector<std::size_t> rep_pool;
  for (std::size_t k : labeled) {
    // two fragments of a third each, plus an eps margin on both filler sides
    const Time len = src[k].end - src[k].begin;
    if (len > 6.0 * eps && len > 0.0) rep_pool.push_back(k);
  }

  if (spec.n_label_swaps > 0 && pool.size() < 2) {
    throw InfeasibleSpecError("label swaps need at least two distinct user labels");
  }
  if (spec.n_spurious > 0 && pool.empty()) {
    throw InfeasibleSpecError("spurious insertions need at least one user label");
  }

  const auto reps = draw_targets(rng, rep_pool, spec.n_repetitions, "repetitions");
  std::vector<std::size_t> remaining;
  for (std::size_t k : labeled) {
    if (std::find(reps.begin(), reps.end(), k) == reps.end()) remaining.push_back(k);
  }
  const auto drops = draw_targets(rng, remaining, spec.n_drops, "drops");
  const auto swaps = draw_targets(rng, remaining, spec.n_label_swaps, "label swaps");

  // Spurious segments land strictly inside isolated no-label segments with
  // room for an eps margin on both sides.
  std::vector<std::size_t> gap_pool;
  for (std::size_t k = 0; k < src.size(); ++k) {
    const Time len = src[k].end - src[k].begin;
    if (src[k].label.is_no_label() && isolated(src, k) && len > 3.0 * eps && len > 0.0) {
      gap_pool.push_back(k);
    }
  }
  const auto spurs = draw_targets(rng, gap_pool, spec.n_spurious, "spurious insertions");

  const auto is_in = [](const std::vector<std::size_t>& v, std::size_t k) {
    return std::find(v.begin(), v.end(), k) != v.end();
  };

  std::vector<Segment> out;
  out.reserve(src.size() + 2 * static_cast<std::size_t>(spec.n_spurious) +
              2 * static_cast<std::size_t>(spec.n_repetitions));
  for (std::size_t k = 0; k < src.size(); ++k) {
    const Segment& s = src[k];
    if (is_in(drops, k)) {
      out.push_back(Segment{Label::no_label(), s.begin, s.end});
    } else if (is_in(swaps, k)) {
      Label swapped = s.label;
      while (swapped == s.label) swapped = pool[pick(rng, pool.size())];
      out.push_back(Segment{swapped, s.begin, s.end});
    } else if (is_in(reps, k)) {
      const Time third = (s.end - s.begin) / 3.0;
      out.push_back(Segment{s.label, s.begin, s.begin + third});
      out.push_back(Segment{Label::no_label(), s.begin + third + eps, s.end - third - eps});
      out.push_back(Segment{s.label, s.end - third, s.end});
    } else if (is_in(spurs, k)) {
      const Time third = (s.end - s.begin) / 3.0;
      const Label planted = pool[pick(rng, pool.size())];
      out.push_back(Segment{s.label, s.begin, s.begin + third - eps});
      out.push_back(Segment{planted, s.begin + third, s.end - third});
      out.push_back(Segment{s.label, s.end - third + eps, s.end});
    } else {
      out.push_back(s);
    }
  }

  if (spec.boundary_jitter > 0.0) {
    for (std::size_t k = 0; k < out.size(); ++k) {
      Segment& s = out[k];
      if (s.label.is_no_label()) continue;
      const Segment original = s;
      Time b = s.begin + uniform_time(rng, -spec.boundary_jitter, spec.boundary_jitter);
      Time e = s.end + uniform_time(rng, -spec.boundary_jitter, spec.boundary_jitter);
      // clamp into the neighbours so both orderings survive
      if (k > 0) {
        b = std::max(b, out[k - 1].begin);
        e = std::max(e, out[k - 1].end);
      }
      if (k + 1 < out.size()) {
        b = std::min(b, out[k + 1].begin);
        e = std::min(e, out[k + 1].end);
      }
      // a jittered segment must still overlap its source, else keep the source
      if (b <= e && overlap_length(Segment{s.label, b, e}, original) > 0.0) {
        s.begin = b;
        s.end = e;
      }
    }
  }

  PlantedErrors planted;
  planted.false_negatives = spec.n_drops;
  planted.false_positives = spec.n_spurious + spec.n_repetitions;
  planted.substitutions = spec.n_label_swaps;
  planted.repetitions = spec.n_repetitions;
  return PerturbationResult{validate_sequence(out), planted};
}

std::vector<Segment> random_segments(std::mt19937_64& rng, int n_segments, int n_labels) {
  std::vector<Segment> segs;
  Time begin = static_cast<Time>(pick(rng, 4));
  Time end = begin + static_cast<Time>(pick(rng, 10));
  for (int k = 0; k < n_segments; ++k) {
    const Label label("L" + std::to_string(1 + pick(rng, static_cast<std::size_t>(n_labels))));
    segs.push_back(Segment{label, begin, end});
    begin += static_cast<Time>(pick(rng, 9));
    end = std::max(end, begin) + static_cast<Time>(pick(rng, 9));
  }
  return segs;
}

SegmentSequence make_disjoint_sequence(int n_segments, int n_labels) {
  std::vector<Segment> segs;
  Time t = 0.0;
  for (int k = 0; k < n_segments; ++k) {
    const Label label("L" + std::to_string(1 + k % n_labels));
    segs.push_back(Segment{label, t, t + 30.0});
    t += 40.0;
  }
  return validate_sequence(segs);
}

SegmentSequence shifted(const SegmentSequence& seq, Time delta) {
  std::vector<Segment> segs = seq.segments();
  for (Segment& s : segs) {
    s.begin += delta;
    s.end += delta;
  }
  return validate_sequence(segs);
}

SegmentSequence scaled(const SegmentSequence& seq, double alpha) {
  std::vector<Segment> segs = seq.segments();
  for (Segment& s : segs) {
    s.begin *= alpha;
    s.end *= alpha;
  }
  return validate_sequence(segs);
}

}  // namespace segeval
