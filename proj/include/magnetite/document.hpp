#pragma once

#include <optional>
#include <string>
#include <vector>

#include "magnetite/monoid.hpp"

namespace magnetite::cli {

/// On-disk description of a finitely generated monoid:
///   {"ambient":{"rank":R,"torsion":[d,...]},"generators":[[...],...],"name":"..."}
/// Generator vectors are flat: R free coordinates, then one residue per
/// torsion factor (reduced on load). "name" is optional.
struct MonoidDocument {
    AmbientGroup group;
    std::vector<GroupElement> generators;
    std::optional<std::string> name;

    FgMonoid to_monoid() const { return FgMonoid(group, generators); }
};

/// Parses and validates; throws ParseError with a field diagnostic.
MonoidDocument parse_document(const std::string& text);

MonoidDocument load_document(const std::string& path);

MonoidDocument document_from(const FgMonoid& m,
                             std::optional<std::string> name = std::nullopt);

/// Canonical bytes: sorted keys, two-space indent, LF endings, trailing
/// newline. parse(serialize(parse(text))) == parse(text), byte-stable.
std::string serialize_document(const MonoidDocument& doc);

}  // namespace magnetite::cli
