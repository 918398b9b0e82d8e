#pragma once

#include "legcalc/front.hpp"
#include "legcalc/pattern.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace legcalc {

enum class DefKind { Knot, Pattern };

struct Definition {
    DefKind kind = DefKind::Knot;
    std::string name;
    int strands = 0;         // patterns only
    std::vector<int> orient; // patterns only
    std::vector<MorseEvent> events;
    friend bool operator==(const Definition&, const Definition&) = default;
};

struct DslDocument {
    std::vector<Definition> defs;
    const Definition* find(std::string_view name) const;
    friend bool operator==(const DslDocument&, const DslDocument&) = default;
};

class SyntaxError : public Error {
public:
    SyntaxError(int line, int col, std::string expected, std::string found);
    int line() const { return line_; }
    int col() const { return col_; }
    const std::string& expected() const { return expected_; }

private:
    int line_, col_;
    std::string expected_;
};

// Parses and validates every definition. Throws SyntaxError, Error(DuplicateName)
// and Error(ValidationError) naming the definition.
DslDocument parse(std::string_view text);
// Syntax only, no validation.
DslDocument parse_syntax(std::string_view text);
std::string serialize(const DslDocument& doc);

FrontDiagram to_front(const Definition& d, std::vector<Tag> tags = {}, bool reversed = false);
PatternFront to_pattern(const Definition& d, std::vector<Tag> tags = {});
Definition definition_of(const std::string& name, const FrontDiagram& f);
Definition definition_of(const PatternFront& p);

// DSL identifiers: [A-Za-z_][A-Za-z0-9_]*. Other characters become '_'.
std::string sanitize_name(std::string_view name);

} // namespace legcalc
