#pragma once

#include <map>

#include "hopfstab/yanzhu.hpp"

namespace hopfstab {

/// Strict-format violation: message names the offending key path and entry.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// FNV-1a 64-bit content hash, lower-case hex.
std::string content_hash(const std::string& bytes);

/// Canonical serialization: sorted keys, canonical scalar strings, sparse
/// entries in index order, two-space indent, trailing newline. Parsing the
/// output and emitting again is byte-identical.
std::string emit_hopf(const HopfData& h);
std::string emit_comodalg(const ComodAlg& k);
std::string emit_modalg(const ModAlg& r);
std::string emit_module(const FieldSpec& f, std::size_t over, const ModuleRep& m);
std::string emit_subspace(const Subspace& s);
std::string emit_stabilizer(const StabSpace& st,
                            const std::map<std::string, std::string>& provenance = {});
std::string emit_report(const Report& r);

std::string document_kind(const std::string& text);

HopfData parse_hopf(const std::string& text);
ComodAlg parse_comodalg(const std::string& text);
ModAlg parse_modalg(const std::string& text);
ModuleRep parse_module(const std::string& text, FieldSpec* field_out = nullptr,
                       std::size_t* over_out = nullptr);
Subspace parse_subspace(const std::string& text);
StabSpace parse_stabilizer(const std::string& text,
                           std::map<std::string, std::string>* provenance_out = nullptr);
Report parse_report(const std::string& text);

/// Rejects a stabilizer document whose recorded input hashes disagree with
/// the actual inputs (missing entries are not checked).
void check_stab_provenance(const std::map<std::string, std::string>& recorded,
                           const std::map<std::string, std::string>& actual);

}  // namespace hopfstab
