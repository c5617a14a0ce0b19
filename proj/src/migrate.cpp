#include "eatxt/migrate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "eatxt/eaxml.hpp"

namespace eatxt {

namespace {

const std::vector<MigrationRule>& all_rules() {
    static const std::vector<MigrationRule> rules = [] {
        SchemaVersion v2112 = *SchemaVersion::parse("2.1.12");
        SchemaVersion v22 = *SchemaVersion::parse("2.2");
        std::vector<MigrationRule> r;
        // 2.2 removed the HardwareComponentType reference from
        // HardwareFunctionType; the attribute is optional, so the reverse
        // direction has nothing to add.
        r.push_back(MigrationRule{v2112, v22, ElementKind::HardwareFunctionType,
                                  MigrationAction::DropAttribute, "hardwareComponent", "",
                                  "hardwareComponent is not present in 2.2"});
        return r;
    }();
    return rules;
}

void apply_rules(Element& element, const std::string& path,
                 std::span<const MigrationRule> rules, SchemaVersion target,
                 MigrationReport& report) {
    for (const MigrationRule& rule : rules) {
        if (rule.kind != element.kind)
            continue;
        switch (rule.action) {
        case MigrationAction::DropAttribute: {
            auto it = std::find_if(element.attributes.begin(), element.attributes.end(),
                                   [&](const Attribute& a) { return a.name == rule.attribute; });
            if (it == element.attributes.end())
                break;
            Span span = it->name_span.value_or(element.span.value_or(Span{}));
            element.attributes.erase(it);
            report.applied.push_back(MigrationReport::Application{&rule, path});
            report.warnings.push_back(Diagnostic::warning(
                diag::attribute_dropped, span,
                "dropped '" + std::string(rule.attribute) + "' on " + path + " (not present in " +
                    std::string(target.str()) + ")"));
            break;
        }
        case MigrationAction::RenameAttribute: {
            auto it = std::find_if(element.attributes.begin(), element.attributes.end(),
                                   [&](const Attribute& a) { return a.name == rule.attribute; });
            if (it == element.attributes.end())
                break;
            it->name = std::string(rule.renamed_to);
            report.applied.push_back(MigrationReport::Application{&rule, path});
            break;
        }
        case MigrationAction::DropElementKind:
            // Handled by the parent while walking children.
            break;
        }
    }
    for (Element& child : element.children)
        apply_rules(child, path + "/" + child.short_name, rules, target, report);
}

} // namespace

std::span<const MigrationRule> migration_rules(SchemaVersion from, SchemaVersion to) {
    // With two registered versions a direct lookup suffices; a rule path
    // search only becomes necessary once a third version exists.
    static const auto by_direction = [] {
        std::map<std::pair<SchemaVersion, SchemaVersion>, std::vector<MigrationRule>> m;
        for (SchemaVersion a : SchemaVersion::all())
            for (SchemaVersion b : SchemaVersion::all()) {
                std::vector<MigrationRule>& rules = m[{a, b}];
                for (const MigrationRule& rule : all_rules())
                    if (rule.from == a && rule.to == b)
                        rules.push_back(rule);
            }
        return m;
    }();
    auto it = by_direction.find({from, to});
    if (it == by_direction.end())
        return {};
    return it->second;
}

MigrateResult migrate(const Model& model, SchemaVersion target) {
    MigrateResult result;
    result.model = model;
    result.model.version = target;
    result.report.resulting_version = target;
    if (model.version == target)
        return result;

    std::span<const MigrationRule> rules = migration_rules(model.version, target);
    for (Element& root : result.model.roots)
        apply_rules(root, "/" + root.short_name, rules, target, result.report);
    return result;
}

MigrateFileResult migrate_file(std::string_view xml, SchemaVersion target) {
    MigrateFileResult result;
    LoadResult loaded = from_eaxml(xml);
    result.diagnostics = std::move(loaded.diagnostics);
    result.report.resulting_version = target;
    if (has_errors(result.diagnostics))
        return result;

    MigrateResult migrated = migrate(loaded.model, target);
    result.report = std::move(migrated.report);

    SerializeResult serialized = to_eaxml(migrated.model);
    append(result.diagnostics, std::move(serialized.diagnostics));
    if (!has_errors(result.diagnostics))
        result.text = std::move(serialized.text);
    return result;
}

std::string render_report(const MigrationReport& report) {
    std::ostringstream out;
    out << "migration to " << report.resulting_version.str() << ": " << report.applied.size()
        << (report.applied.size() == 1 ? " change" : " changes") << "\n";
    for (const MigrationReport::Application& application : report.applied)
        out << "  - " << application.rule->note << " at " << application.element_path << "\n";
    return out.str();
}

} // namespace eatxt
