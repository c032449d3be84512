#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cuboid/corpus/manifest.hpp"
#include "cuboid/io/json.hpp"

namespace cuboid::corpus {

enum class VerdictKind { Zero, Nonzero, Error, Skipped };
const char* to_string(VerdictKind v);

struct RecordResult {
    std::string id;
    std::string env;
    VerdictKind verdict = VerdictKind::Error;
    std::string detail;     // residue summary or error message
    std::size_t residue_terms = 0;
    std::uint32_t residue_degree = 0;
    double seconds = 0;
};

/// Residue polynomial numerators, one per surviving atom monomial, after
/// mapping slots to generators, the record substitutions and (for modular
/// records) reduction by the basic equation in s1. All empty means zero.
std::vector<Polynomial> residues(const IdentityRecord& rec, const trig::Expr& e);

/// Expand, half-angle reduce, take numerators, reduce. Errors become an
/// Error verdict; skipped-by-paper records report Skipped.
RecordResult verify_identity(const IdentityRecord& rec);
/// Same pipeline on an already-built expression.
RecordResult verify_expression(const IdentityRecord& rec, const trig::Expr& e);

struct VerificationReport {
    std::vector<RecordResult> records;  // manifest order
    std::size_t zero = 0, nonzero = 0, errors = 0, skipped = 0;
    double seconds = 0;
    bool all_zero() const { return nonzero == 0 && errors == 0; }
};

/// Shell-style glob on the id ("W.10*"); an empty filter matches all.
bool id_matches(const std::string& id, const std::string& filter);

/// Verifies every matching record on up to jobs threads. Results do not
/// depend on jobs.
VerificationReport run_corpus(const std::vector<IdentityRecord>& records, const std::string& filter = {},
                              unsigned jobs = 1);

/// Timings vary run to run, so they are opt-in.
io::Json to_json(const VerificationReport& r, bool timings = false);

/// Mutation control: scales the first term of a top-level sum by factor, or
/// adds factor to any other expression.
trig::Expr perturb(const trig::Expr& e, const Rational& factor = Rational(2));

}  // namespace cuboid::corpus
