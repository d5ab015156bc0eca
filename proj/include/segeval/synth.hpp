#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "segeval/alignment.hpp"
#include "segeval/segment.hpp"

namespace segeval {

// Exhaustive minimum over every monotone edit script: each segment consumed
// exactly once, pairings strictly order-preserving, one indel_cost per
// deletion and one match_cost per pairing. Exponential; throws TooLargeError
// when |gt| + |pred| exceeds 18. Test oracle for the dynamic program.
double brute_force_align(const SegmentSequence& gt, const SegmentSequence& pred,
                         const AlignmentConfig& cfg);

// Seeded recipe for fabricating a predicted sequence with a known error
// composition from a ground-truth sequence.
struct PerturbationSpec {
  std::uint64_t seed = 0;
  Time boundary_jitter = 0.0;  // max shift applied to untouched segment bounds
  int n_label_swaps = 0;       // relabel a segment with another user label
  int n_drops = 0;             // replace a segment with no-label
  int n_spurious = 0;          // plant a labeled segment inside a no-label gap
  int n_repetitions = 0;       // split a segment into two same-label fragments
  TimeResolution resolution{};
};

// What the perturbation planted, in pipeline terms.
struct PlantedErrors {
  int false_negatives = 0;  // drops
  int false_positives = 0;  // spurious + extra repetition fragments
  int substitutions = 0;    // label swaps
  int repetitions = 0;
};

struct PerturbationResult {
  SegmentSequence sequence;
  PlantedErrors planted;
};

// Applies the spec to a valid no-label-covered sequence. Targets are chosen
// seed-deterministically among segments that do not overlap their neighbors,
// so the planted composition survives alignment unchanged when jitter is 0.
// Throws InfeasibleSpecError when the requested counts cannot be placed.
PerturbationResult perturb(const SegmentSequence& gt, const PerturbationSpec& spec);

// Random valid sequence on an integer grid: n_segments labeled segments whose
// consecutive intervals may overlap, touch or leave gaps, labels drawn from
// {L1..Ln_labels}. No no-label segments; fill afterwards if needed.
std::vector<Segment> random_segments(std::mt19937_64& rng, int n_segments, int n_labels);

// Disjoint, evenly spaced segments (length 30, gap 10) with labels cycling
// through the pool; convenient base for perturbation fixtures.
SegmentSequence make_disjoint_sequence(int n_segments, int n_labels);

// Sequence shifted by delta / scaled by alpha > 0 (both bounds).
SegmentSequence shifted(const SegmentSequence& seq, Time delta);
SegmentSequence scaled(const SegmentSequence& seq, double alpha);

}  // namespace segeval
