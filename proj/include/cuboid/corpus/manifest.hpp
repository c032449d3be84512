#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuboid/corpus/environment.hpp"

namespace cuboid::corpus {

enum class RecordStatus { Active, SkippedByPaper };

/// One line of the identity manifest:
///   id | env | flags | anchor | expression
/// flags is a comma list of mod, plain, halfangle, subst:a=b, skipped-by-paper,
/// derived; "-" means none.
struct IdentityRecord {
    std::string id;
    std::string env;
    bool modular = false;
    bool halfangle = false;
    bool derived = false;
    RecordStatus status = RecordStatus::Active;
    std::vector<std::pair<std::string, std::string>> substitutions;
    std::string anchor;
    std::string expression;
    int line = 0;
};

/// Throws Error(Parse) with the line number on a malformed line or a
/// duplicate id.
std::vector<IdentityRecord> parse_manifest(const std::string& text);
/// Throws Error(Io) when the file cannot be read.
std::vector<IdentityRecord> load_manifest(const std::string& path);

/// Reads one s-expression against env. Heads:
///   + - * / ^  sin cos tan cot  op+ op-  H K M N  sqrt2 chalf reduce
/// and for angles: a+ a- a*, bare names, pi4.
/// Throws Error(Parse) on syntax, Error(UnboundAngle) or Error(MalformedInput)
/// on unknown names.
trig::Expr parse_expression(const std::string& text, const Environment& env);

}  // namespace cuboid::corpus
