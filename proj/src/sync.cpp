#include "eatxt/sync.hpp"

#include <ostream>
#include <thread>

#include "eatxt/eaxml.hpp"
#include "eatxt/fileio.hpp"
#include "eatxt/formatter.hpp"
#include "eatxt/parser.hpp"
#include "eatxt/validate.hpp"

namespace eatxt {

namespace {

std::uint64_t file_digest(const std::filesystem::path& path) {
    std::optional<std::string> content = read_file(path);
    return content ? content_digest(*content) : 0;
}

} // namespace

SyncEngine::SyncEngine(SyncOptions options) : options_(std::move(options)) {
    // The starting contents are taken as the synced baseline; conflict
    // detection begins from here.
    last_synced_text_ = file_digest(options_.text_path);
    last_synced_xml_ = file_digest(options_.xml_path);
}

void SyncEngine::note(const std::string& line) {
    if (options_.log != nullptr)
        *options_.log << line << "\n";
}

std::uint64_t SyncEngine::digest_of(SyncSide side) const {
    return file_digest(side == SyncSide::Text ? options_.text_path : options_.xml_path);
}

SyncAction SyncEngine::handle(SyncEvent event) {
    std::uint64_t text_now = digest_of(SyncSide::Text);
    std::uint64_t xml_now = digest_of(SyncSide::Xml);

    if (status_ == SyncStatus::Conflict) {
        std::uint64_t event_now = event.side == SyncSide::Text ? text_now : xml_now;
        std::uint64_t at_conflict = event.side == SyncSide::Text ? conflict_text_ : conflict_xml_;
        if (event_now == at_conflict)
            return SyncAction::None;
        // Touched again: the re-edited side becomes authoritative.
        status_ = SyncStatus::Clean;
        return convert(event.side);
    }

    bool text_changed = text_now != last_synced_text_;
    bool xml_changed = xml_now != last_synced_xml_;
    bool event_side_changed = event.side == SyncSide::Text ? text_changed : xml_changed;
    if (!event_side_changed)
        return SyncAction::None; // our own write, or nothing actually changed

    if (text_changed && xml_changed) {
        status_ = SyncStatus::Conflict;
        conflict_text_ = text_now;
        conflict_xml_ = xml_now;
        note("conflict: both files changed since the last sync");
        note("  " + options_.text_path.string());
        note("  " + options_.xml_path.string());
        note("touch one of the files to make it the authoritative side");
        return SyncAction::ConflictDetected;
    }
    return convert(event.side);
}

SyncAction SyncEngine::convert(SyncSide from) {
    if (from == SyncSide::Text) {
        std::optional<std::string> text = read_file(options_.text_path);
        if (!text) {
            note("cannot read " + options_.text_path.string());
            return SyncAction::ConversionFailed;
        }
        ParseResult parsed = parse(*text, options_.schema);
        std::vector<Diagnostic> diagnostics = std::move(parsed.diagnostics);
        if (!has_errors(diagnostics))
            append(diagnostics, validate(parsed.model));
        SerializeResult serialized;
        if (!has_errors(diagnostics)) {
            serialized = to_eaxml(parsed.model);
            append(diagnostics, std::move(serialized.diagnostics));
        }
        if (has_errors(diagnostics)) {
            for (const Diagnostic& d : diagnostics)
                note(render(d, options_.text_path.string()));
            note("sync: text conversion failed; " + options_.xml_path.string() + " left untouched");
            return SyncAction::ConversionFailed;
        }
        if (!write_file_atomic(options_.xml_path, serialized.text)) {
            note("cannot write " + options_.xml_path.string());
            return SyncAction::ConversionFailed;
        }
        last_synced_text_ = content_digest(*text);
        last_synced_xml_ = content_digest(serialized.text);
        ++conversions_;
        note("sync: " + options_.text_path.string() + " -> " + options_.xml_path.string());
        return SyncAction::ConvertedTextToXml;
    }

    std::optional<std::string> xml = read_file(options_.xml_path);
    if (!xml) {
        note("cannot read " + options_.xml_path.string());
        return SyncAction::ConversionFailed;
    }
    LoadResult loaded = from_eaxml(*xml, options_.schema);
    if (has_errors(loaded.diagnostics)) {
        for (const Diagnostic& d : loaded.diagnostics)
            note(render(d, options_.xml_path.string()));
        note("sync: xml conversion failed; " + options_.text_path.string() + " left untouched");
        return SyncAction::ConversionFailed;
    }
    std::string text = emit(loaded.model);
    if (!write_file_atomic(options_.text_path, text)) {
        note("cannot write " + options_.text_path.string());
        return SyncAction::ConversionFailed;
    }
    last_synced_xml_ = content_digest(*xml);
    last_synced_text_ = content_digest(text);
    ++conversions_;
    note("sync: " + options_.xml_path.string() + " -> " + options_.text_path.string());
    return SyncAction::ConvertedXmlToText;
}

SyncAction SyncEngine::sync_once() {
    std::error_code ec_text;
    std::error_code ec_xml;
    auto text_time = std::filesystem::last_write_time(options_.text_path, ec_text);
    auto xml_time = std::filesystem::last_write_time(options_.xml_path, ec_xml);
    if (ec_text && ec_xml) {
        note("neither " + options_.text_path.string() + " nor " + options_.xml_path.string() +
             " exists");
        return SyncAction::ConversionFailed;
    }
    if (ec_xml)
        return convert(SyncSide::Text);
    if (ec_text)
        return convert(SyncSide::Xml);
    // Ties go to the text side for determinism.
    return convert(xml_time > text_time ? SyncSide::Xml : SyncSide::Text);
}

void run_watch_loop(SyncEngine& engine, const SyncOptions& options,
                    std::chrono::milliseconds interval,
                    const std::function<bool()>& keep_running) {
    std::uint64_t seen_text = file_digest(options.text_path);
    std::uint64_t seen_xml = file_digest(options.xml_path);
    while (keep_running()) {
        std::this_thread::sleep_for(interval);
        std::uint64_t text_now = file_digest(options.text_path);
        std::uint64_t xml_now = file_digest(options.xml_path);
        if (text_now != seen_text) {
            seen_text = text_now;
            engine.handle(SyncEvent{SyncSide::Text});
            // The conversion may have rewritten the counterpart.
            seen_xml = file_digest(options.xml_path);
            continue;
        }
        if (xml_now != seen_xml) {
            seen_xml = xml_now;
            engine.handle(SyncEvent{SyncSide::Xml});
            seen_text = file_digest(options.text_path);
        }
    }
}

} // namespace eatxt
