#pragma once

#include <map>
#include <string>

#include "geomhop/generate.hpp"
#include "geomhop/labels.hpp"
#include "geomhop/library.hpp"
#include "geomhop/problem.hpp"

namespace geomhop {

// Deterministic sentence templates, one per formula, phrased after the
// published samples. Tokens:
//   {v:inK} {v:out} {s:K}  formatted values (inputs, output, step K)
//   {n:inK} {n:out}        bare element name ("AB", "BCA")
//   {shape}                shape reference core ("ABCD rectangle", "green shape")
//   {sideref:X} {ang:X}    full element references, annotation-aware
//   {baseref:inK}          composite rectangle-side reference
//   {vp1} {vp2} {p1n} {p2n} the two subtracted inputs, facts first
struct FormulaTemplate {
    std::string solution;
    std::string solution_individual;  // optional override
    std::string var_opener;           // optional variablized-use opener
};

class TemplateSet {
public:
    static const TemplateSet& builtin();
    static TemplateSet from_json_text(const std::string& text);

    const FormulaTemplate& for_formula(const std::string& id) const;
    std::string to_json_text() const;
    std::string checksum() const;

    std::map<std::string, FormulaTemplate> templates;
};

// Question string: conditional clauses for every text-channel fact and
// shape description, then the query clause, then the fixed numeric suffix
// when the solution needs pi or rounding.
std::string render_question(const ProblemGraph& g, Modality modality, Annotation annotation,
                            const FormulaLibrary& lib = FormulaLibrary::builtin(),
                            const TemplateSet& tset = TemplateSet::builtin());

// Chain-of-thought solution string; one sentence block per deduction step,
// ending with "Therefore the final answer is <label>."
std::string render_solution(const ProblemGraph& g, const SolutionTrace& trace,
                            Annotation annotation,
                            const FormulaLibrary& lib = FormulaLibrary::builtin(),
                            const TemplateSet& tset = TemplateSet::builtin());

}  // namespace geomhop
