#include <CLI11.hpp>

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>

#include "eatxt/eaxml.hpp"
#include "eatxt/fileio.hpp"
#include "eatxt/formatter.hpp"
#include "eatxt/migrate.hpp"
#include "eatxt/parser.hpp"
#include "eatxt/services.hpp"
#include "eatxt/sync.hpp"
#include "eatxt/validate.hpp"

namespace {

using namespace eatxt;

constexpr int kExitOk = 0;
constexpr int kExitDiagnostics = 1; // error diagnostics were emitted
constexpr int kExitUsage = 2;       // usage or I/O failure

struct CommonArgs {
    std::string schema_id = "2.2";
    std::string file;
    std::string output;
};

SchemaVersion parse_schema_or_exit(const std::string& id) {
    std::optional<SchemaVersion> version = SchemaVersion::parse(id);
    if (!version) {
        std::cerr << "unsupported schema version '" << id
                  << "'; supported: " << SchemaVersion::registered_ids() << "\n";
        std::exit(kExitUsage);
    }
    return *version;
}

std::optional<std::string> read_or_complain(const std::string& path) {
    std::optional<std::string> content = read_file(path);
    if (!content)
        std::cerr << "cannot read '" << path << "'\n";
    return content;
}

int print_diagnostics(std::vector<Diagnostic> diagnostics, const std::string& path) {
    sort_by_span(diagnostics);
    for (const Diagnostic& d : diagnostics)
        std::cerr << render(d, path) << "\n";
    return has_errors(diagnostics) ? kExitDiagnostics : kExitOk;
}

bool write_output(const std::string& output, std::string_view content) {
    if (output.empty()) {
        std::cout << content;
        return true;
    }
    if (!write_file_atomic(output, content)) {
        std::cerr << "cannot write '" << output << "'\n";
        return false;
    }
    return true;
}

enum class FileFormat { Text, Xml };

std::optional<FileFormat> format_of(const std::string& path) {
    if (path.ends_with(".eatxt"))
        return FileFormat::Text;
    if (path.ends_with(".eaxml"))
        return FileFormat::Xml;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Subcommands
// ---------------------------------------------------------------------------

int cmd_check(const CommonArgs& args) {
    SchemaVersion schema = parse_schema_or_exit(args.schema_id);
    std::optional<FileFormat> format = format_of(args.file);
    if (!format) {
        std::cerr << "unsupported file extension (expected .eatxt or .eaxml): " << args.file
                  << "\n";
        return kExitUsage;
    }
    std::optional<std::string> content = read_or_complain(args.file);
    if (!content)
        return kExitUsage;

    std::vector<Diagnostic> diagnostics;
    if (*format == FileFormat::Text) {
        ParseResult parsed = parse(*content, schema);
        diagnostics = std::move(parsed.diagnostics);
        if (!has_errors(diagnostics))
            append(diagnostics, validate(parsed.model));
    } else {
        LoadResult loaded = from_eaxml(*content, schema);
        diagnostics = std::move(loaded.diagnostics);
        if (!has_errors(diagnostics))
            append(diagnostics, validate(loaded.model));
    }
    return print_diagnostics(std::move(diagnostics), args.file);
}

int cmd_fmt(const CommonArgs& args) {
    SchemaVersion schema = parse_schema_or_exit(args.schema_id);
    std::optional<std::string> content = read_or_complain(args.file);
    if (!content)
        return kExitUsage;
    FormatResult result = format(*content, schema);
    int code = print_diagnostics(std::move(result.diagnostics), args.file);
    if (!write_output(args.output, result.text))
        return kExitUsage;
    return code;
}

int cmd_export(const CommonArgs& args) {
    SchemaVersion schema = parse_schema_or_exit(args.schema_id);
    std::optional<std::string> content = read_or_complain(args.file);
    if (!content)
        return kExitUsage;
    ParseResult parsed = parse(*content, schema);
    std::vector<Diagnostic> diagnostics = std::move(parsed.diagnostics);
    if (!has_errors(diagnostics))
        append(diagnostics, validate(parsed.model));
    SerializeResult serialized;
    if (!has_errors(diagnostics)) {
        serialized = to_eaxml(parsed.model);
        append(diagnostics, std::move(serialized.diagnostics));
    }
    int code = print_diagnostics(std::move(diagnostics), args.file);
    if (code != kExitOk)
        return code; // refuse: no output on errors
    if (!write_output(args.output, serialized.text))
        return kExitUsage;
    return kExitOk;
}

int cmd_import(const CommonArgs& args, bool auto_migrate) {
    SchemaVersion schema = parse_schema_or_exit(args.schema_id);
    std::optional<std::string> content = read_or_complain(args.file);
    if (!content)
        return kExitUsage;
    LoadResult loaded = from_eaxml(*content, schema);

    bool version_mismatch = loaded.version != schema;
    std::vector<Diagnostic> mismatches;
    std::vector<Diagnostic> other;
    for (Diagnostic& d : loaded.diagnostics) {
        if (d.code == diag::schema_version_mismatch && version_mismatch)
            mismatches.push_back(std::move(d));
        else
            other.push_back(std::move(d));
    }

    if (version_mismatch && auto_migrate && !has_errors(other)) {
        // The mismatch is being handled, so the E005 is not an error here.
        MigrateResult migrated = migrate(loaded.model, schema);
        std::cerr << render_report(migrated.report);
        append(other, std::move(migrated.report.warnings));
        int code = print_diagnostics(std::move(other), args.file);
        if (code != kExitOk)
            return code;
        if (!write_output(args.output, emit(migrated.model)))
            return kExitUsage;
        return kExitOk;
    }
    if (version_mismatch) {
        append(other, std::move(mismatches));
        return print_diagnostics(std::move(other), args.file);
    }
    int code = print_diagnostics(std::move(other), args.file);
    if (code != kExitOk)
        return code;
    if (!write_output(args.output, emit(loaded.model)))
        return kExitUsage;
    return kExitOk;
}

int cmd_migrate(const CommonArgs& args, const std::string& target_id) {
    SchemaVersion target = parse_schema_or_exit(target_id);
    std::optional<std::string> content = read_or_complain(args.file);
    if (!content)
        return kExitUsage;
    MigrateFileResult result = migrate_file(*content, target);
    if (!result.report.empty())
        std::cerr << render_report(result.report);
    std::vector<Diagnostic> diagnostics = std::move(result.diagnostics);
    append(diagnostics, std::move(result.report.warnings));
    int code = print_diagnostics(std::move(diagnostics), args.file);
    if (code != kExitOk)
        return code;
    if (!write_output(args.output, result.text))
        return kExitUsage;
    return kExitOk;
}

nlohmann::ordered_json outline_to_json(const OutlineNode& node) {
    nlohmann::ordered_json j;
    j["label"] = node.label;
    j["kind"] = keyword_of(node.kind);
    j["path"] = node.path;
    j["synthetic"] = node.synthetic;
    j["children"] = nlohmann::ordered_json::array();
    for (const OutlineNode& child : node.children)
        j["children"].push_back(outline_to_json(child));
    return j;
}

void outline_to_text(const OutlineNode& node, int level, std::string& out) {
    out.append(4 * static_cast<std::size_t>(level), ' ');
    out += node.label;
    out += " [";
    out += keyword_of(node.kind);
    out += "]";
    if (node.synthetic)
        out += " (synthetic)";
    out += "\n";
    for (const OutlineNode& child : node.children)
        outline_to_text(child, level + 1, out);
}

int cmd_outline(const CommonArgs& args, int depth, bool json) {
    SchemaVersion schema = parse_schema_or_exit(args.schema_id);
    std::optional<FileFormat> format = format_of(args.file);
    if (!format) {
        std::cerr << "unsupported file extension (expected .eatxt or .eaxml): " << args.file
                  << "\n";
        return kExitUsage;
    }
    std::optional<std::string> content = read_or_complain(args.file);
    if (!content)
        return kExitUsage;

    Model model;
    std::vector<Diagnostic> diagnostics;
    if (*format == FileFormat::Text) {
        ParseResult parsed = parse(*content, schema);
        model = std::move(parsed.model);
        diagnostics = std::move(parsed.diagnostics);
    } else {
        LoadResult loaded = from_eaxml(*content, schema);
        model = std::move(loaded.model);
        diagnostics = std::move(loaded.diagnostics);
    }
    OutlineResult result = outline(model, depth);
    append(diagnostics, std::move(result.diagnostics));

    std::string rendered;
    if (json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const OutlineNode& node : result.nodes)
            j.push_back(outline_to_json(node));
        rendered = j.dump(2) + "\n";
    } else {
        for (const OutlineNode& node : result.nodes)
            outline_to_text(node, 0, rendered);
    }
    int code = print_diagnostics(std::move(diagnostics), args.file);
    if (!write_output(args.output, rendered))
        return kExitUsage;
    return code;
}

std::string escape_insert_text(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (c == '\n')
            out += "\\n";
        else if (c == '\t')
            out += "\\t";
        else
            out += c;
    }
    return out;
}

int cmd_complete(const CommonArgs& args, std::size_t offset) {
    SchemaVersion schema = parse_schema_or_exit(args.schema_id);
    std::optional<std::string> content = read_or_complain(args.file);
    if (!content)
        return kExitUsage;
    if (offset > content->size()) {
        std::cerr << "offset " << offset << " is past the end of the file (" << content->size()
                  << " bytes)\n";
        return kExitUsage;
    }
    std::string rendered;
    for (const CompletionItem& item : complete(*content, offset, schema)) {
        rendered += item.label;
        rendered += "\t";
        rendered += to_string(item.kind);
        rendered += "\t";
        rendered += escape_insert_text(item.insert_text);
        rendered += "\n";
    }
    if (!write_output(args.output, rendered))
        return kExitUsage;
    return kExitOk;
}

int cmd_template(const CommonArgs& args, const std::string& kind_word, const std::string& name) {
    std::optional<ElementKind> kind = kind_from_keyword(kind_word);
    if (!kind) {
        std::cerr << "unknown element kind '" << kind_word << "'; expected one of:";
        for (ElementKind k : all_kinds())
            std::cerr << " " << keyword_of(k);
        std::cerr << "\n";
        return kExitUsage;
    }
    if (!is_identifier(name)) {
        std::cerr << "'" << name << "' is not a legal identifier\n";
        return kExitUsage;
    }
    if (!write_output(args.output, expand_template(*kind, name)))
        return kExitUsage;
    return kExitOk;
}

volatile std::sig_atomic_t g_interrupted = 0;

int cmd_sync(const CommonArgs& args, const std::string& text_path, const std::string& xml_path,
             bool watch, int interval_ms) {
    SchemaVersion schema = parse_schema_or_exit(args.schema_id);
    bool text_exists = std::filesystem::exists(text_path);
    bool xml_exists = std::filesystem::exists(xml_path);
    if (!text_exists && !xml_exists) {
        std::cerr << "neither '" << text_path << "' nor '" << xml_path << "' exists\n";
        return kExitUsage;
    }
    SyncOptions options{text_path, xml_path, schema, &std::cerr};
    SyncEngine engine(options);
    SyncAction action = engine.sync_once();
    if (!watch)
        return action == SyncAction::ConversionFailed ? kExitDiagnostics : kExitOk;

    std::signal(SIGINT, [](int) { g_interrupted = 1; });
    std::signal(SIGTERM, [](int) { g_interrupted = 1; });
    run_watch_loop(engine, options, std::chrono::milliseconds(interval_ms),
                   [] { return g_interrupted == 0; });
    return kExitOk;
}

void add_schema_option(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--schema", args.schema_id, "Schema version (2.1.12 or 2.2)")
        ->envname("EATXT_SCHEMA");
}

void add_output_option(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("-o,--output", args.output, "Write the result to a file instead of stdout");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"EAST-ADL textual modeling toolchain"};
    app.require_subcommand(1);

    CommonArgs args;
    bool auto_migrate = false;
    bool watch = false;
    bool json = false;
    int depth = 10;
    int interval_ms = 200;
    std::size_t offset = 0;
    std::string target_id;
    std::string kind_word;
    std::string name;
    std::string text_path;
    std::string xml_path;

    CLI::App* check = app.add_subcommand("check", "Parse/load a model file and validate it");
    check->add_option("file", args.file, "A .eatxt or .eaxml file")->required();
    add_schema_option(check, args);

    CLI::App* fmt = app.add_subcommand("fmt", "Format a .eatxt file canonically");
    fmt->add_option("file", args.file, "The .eatxt file")->required();
    add_schema_option(fmt, args);
    add_output_option(fmt, args);

    CLI::App* exp = app.add_subcommand("export", "Serialize a .eatxt file to .eaxml");
    exp->add_option("file", args.file, "The .eatxt file")->required();
    add_schema_option(exp, args);
    add_output_option(exp, args);

    CLI::App* imp = app.add_subcommand("import", "Deserialize a .eaxml file to .eatxt");
    imp->add_option("file", args.file, "The .eaxml file")->required();
    imp->add_flag("--auto-migrate", auto_migrate,
                  "Migrate to the expected schema on version mismatch");
    add_schema_option(imp, args);
    add_output_option(imp, args);

    CLI::App* mig = app.add_subcommand("migrate", "Migrate a .eaxml file between schema versions");
    mig->add_option("file", args.file, "The .eaxml file")->required();
    mig->add_option("--to", target_id, "Target schema version")->required();
    add_output_option(mig, args);

    CLI::App* out = app.add_subcommand("outline", "Print the deep model outline");
    out->add_option("file", args.file, "A .eatxt or .eaxml file")->required();
    out->add_option("--depth", depth, "Maximum outline depth")->check(CLI::PositiveNumber);
    out->add_flag("--json", json, "Structured JSON output");
    add_schema_option(out, args);
    add_output_option(out, args);

    CLI::App* comp = app.add_subcommand("complete", "Content assist at a byte offset");
    comp->add_option("file", args.file, "The .eatxt file")->required();
    comp->add_option("--offset", offset, "Byte offset in the file")->required();
    add_schema_option(comp, args);
    add_output_option(comp, args);

    CLI::App* tmpl = app.add_subcommand("template", "Print a code template for an element kind");
    tmpl->add_option("kind", kind_word, "Element kind keyword")->required();
    tmpl->add_option("--name", name, "shortName for the new element")->required();
    add_output_option(tmpl, args);

    CLI::App* sync = app.add_subcommand("sync", "Keep a .eatxt/.eaxml pair consistent");
    sync->add_option("text", text_path, "The .eatxt file")->required();
    sync->add_option("xml", xml_path, "The .eaxml file")->required();
    sync->add_flag("--watch", watch, "Keep watching for changes");
    sync->add_option("--interval", interval_ms, "Poll interval in milliseconds")
        ->check(CLI::PositiveNumber);
    add_schema_option(sync, args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (check->parsed())
        return cmd_check(args);
    if (fmt->parsed())
        return cmd_fmt(args);
    if (exp->parsed())
        return cmd_export(args);
    if (imp->parsed())
        return cmd_import(args, auto_migrate);
    if (mig->parsed())
        return cmd_migrate(args, target_id);
    if (out->parsed())
        return cmd_outline(args, depth, json);
    if (comp->parsed())
        return cmd_complete(args, offset);
    if (tmpl->parsed())
        return cmd_template(args, kind_word, name);
    if (sync->parsed())
        return cmd_sync(args, text_path, xml_path, watch, interval_ms);
    return kExitUsage;
}
