#pragma once

#include <span>
#include <string>
#include <vector>

#include "eatxt/diagnostics.hpp"
#include "eatxt/model.hpp"

namespace eatxt {

enum class MigrationAction {
    DropAttribute,
    RenameAttribute,
    DropElementKind,
};

struct MigrationRule {
    SchemaVersion from;
    SchemaVersion to;
    ElementKind kind;
    MigrationAction action;
    std::string_view attribute;  // DropAttribute / RenameAttribute
    std::string_view renamed_to; // RenameAttribute
    std::string_view note;
};

/// Registered rules for one direction; empty when nothing needs to change.
std::span<const MigrationRule> migration_rules(SchemaVersion from, SchemaVersion to);

struct MigrationReport {
    struct Application {
        const MigrationRule* rule;
        std::string element_path; // qualified name of the changed element
    };

    std::vector<Application> applied; // one entry per actual model change
    SchemaVersion resulting_version;
    std::vector<Diagnostic> warnings; // one W101 per dropped datum

    bool empty() const { return applied.empty() && warnings.empty(); }
};

struct MigrateResult {
    Model model;
    MigrationReport report;
};

/// Returns a new model tagged with `target` with every matching rule applied
/// everywhere. Migrating to the model's own version is the identity.
MigrateResult migrate(const Model& model, SchemaVersion target);

struct MigrateFileResult {
    std::string text; // empty when loading or serializing failed
    MigrationReport report;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return !has_errors(diagnostics); }
};

/// detect_version + from_eaxml + migrate + to_eaxml over document text.
MigrateFileResult migrate_file(std::string_view xml, SchemaVersion target);

/// Human-readable report listing, one line per application.
std::string render_report(const MigrationReport& report);

} // namespace eatxt
