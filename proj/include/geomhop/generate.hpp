#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "geomhop/common.hpp"
#include "geomhop/library.hpp"
#include "geomhop/problem.hpp"
#include "geomhop/solve.hpp"

namespace geomhop {

struct VisualStyle {
    double color_opacity = 0.6;
    double line_width = 1.5;   // px
    double font_size = 11.0;   // pt
    std::vector<std::string> palette;  // defaults to the 12 named colors

    bool valid() const { return line_width > 0 && font_size > 0; }
};

enum class DistractorMode { None, RevealIntermediate };
enum class Annotation { Coordinate, Individual };
enum class Modality { TextImage, TextOnly };
enum class QuestionType { Side, Angle, AreaOrPerimeter, Any };

struct ValueRanges {
    int len_min = 2, len_max = 25;       // integer lengths
    int ang_min = 25, ang_max = 160, ang_step = 5;  // degrees
};

enum class AggregateSampling { Forward, Direct };

struct GenerationConfig {
    int depth = 1;
    double p_branch = 0.0;
    double rho = 0.0;  // variablization probability
    DistractorMode distractor_mode = DistractorMode::None;
    double info_placement = 0.5;  // probability a fact lands on the image
    Annotation annotation = Annotation::Coordinate;
    Modality modality = Modality::TextImage;
    QuestionType question_type = QuestionType::Any;
    std::set<ShapeKind> shape_whitelist;  // empty means all kinds
    ValueRanges value_ranges;
    uint64_t seed = 0;
    VisualStyle style;
    AggregateSampling aggregate_sampling = AggregateSampling::Forward;
    int max_attempts = 1000;

    void validate() const;  // throws std::invalid_argument
    std::set<ShapeKind> effective_whitelist() const;
};

struct GenerationOutcome {
    ProblemGraph graph;
    SolutionTrace trace;
    ElementType query_type;
    int attempts = 1;
    int nominal_depth = 0;    // requested depth
    int effective_depth = 0;  // after distractor insertion
    int variablized_uses = 0;
};

// Algorithm: recursive backward construction. Returns the solved example;
// throws GenerationExhausted when the rejection budget runs out.
GenerationOutcome backward_generate(const GenerationConfig& cfg,
                                    const FormulaLibrary& lib = FormulaLibrary::builtin());

// same, continuing an existing random stream (used by the example pipeline
// to regenerate after a layout rejection without breaking determinism)
GenerationOutcome backward_generate(const GenerationConfig& cfg, Rng& rng,
                                    const FormulaLibrary& lib);

// Building blocks, exposed for tests and for the pipeline.

// Sample the shape/formula tree only; no values assigned yet.
ProblemGraph sample_structure(const GenerationConfig& cfg, Rng& rng, ElementType& query_type,
                              const FormulaLibrary& lib);

// Bind fact values (primitive dimensions sampled, aggregates computed
// forward from hidden dimensions) and solve. Throws on infeasibility.
SolutionTrace assign_values(ProblemGraph& g, const GenerationConfig& cfg, Rng& rng,
                            const FormulaLibrary& lib);

// Reveal the root's hidden inputs as text facts, demote everything below
// the root to distractors, and shrink the recorded proof to one hop.
void add_distractor(ProblemGraph& g, const FormulaLibrary& lib = FormulaLibrary::builtin());

// With probability rho per variablizable formula use, replace its numeric
// fact inputs and output with linear expressions sharing one variable.
// Returns the number of uses variablized. Never fails; skips uses for
// which no consistent small-integer coefficients exist.
int variablize(ProblemGraph& g, double rho, Rng& rng,
               const FormulaLibrary& lib = FormulaLibrary::builtin());

// Assign text/image channels to facts per modality and info placement.
void assign_channels(ProblemGraph& g, const GenerationConfig& cfg, Rng& rng);

}  // namespace geomhop
