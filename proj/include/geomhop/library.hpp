#pragma once

#include <map>
#include <string>
#include <vector>

#include "geomhop/formula.hpp"

namespace geomhop {

// The rule set shared by generation, solving and rendering. The builtin
// library is the source of truth; data/formulas.json is its serialized,
// human-auditable form and must stay byte-identical (a test enforces it).
class FormulaLibrary {
public:
    static const FormulaLibrary& builtin();
    static FormulaLibrary from_json_text(const std::string& text);

    const std::vector<FormulaSpec>& all() const { return specs_; }
    const FormulaSpec& by_id(const std::string& id) const;
    const FormulaSpec* find(const std::string& id) const;
    std::vector<const FormulaSpec*> for_shape(ShapeKind k) const;

    // formulas of a shape whose output element type matches t
    std::vector<const FormulaSpec*> with_output_type(ShapeKind k, ElementType t) const;

    size_t size() const { return specs_.size(); }
    int variablizable_count() const;

    std::string to_json_text() const;  // canonical serialization
    std::string checksum() const;      // hex checksum of the canonical form

    explicit FormulaLibrary(std::vector<FormulaSpec> specs);

private:
    std::vector<FormulaSpec> specs_;
    std::map<std::string, size_t> index_;
};

}  // namespace geomhop
