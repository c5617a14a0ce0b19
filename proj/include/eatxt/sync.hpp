#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <iosfwd>

#include "eatxt/model.hpp"

namespace eatxt {

enum class SyncSide { Text, Xml };

struct SyncEvent {
    SyncSide side;
};

enum class SyncStatus { Clean, Conflict };

enum class SyncAction {
    None,               // nothing to do (our own write, or no real change)
    ConvertedTextToXml,
    ConvertedXmlToText,
    ConflictDetected,
    ConversionFailed,
};

struct SyncOptions {
    std::filesystem::path text_path;
    std::filesystem::path xml_path;
    SchemaVersion schema;
    std::ostream* log = nullptr; // diagnostics and status lines; null = quiet
};

/// Keeps a .eatxt/.eaxml pair consistent. Change events name the side that
/// was (possibly) modified; the engine re-reads both files and decides by
/// content digest, so its own writes never trigger a reverse conversion.
/// When both sides diverged from the last synced state it stops converting
/// and reports a conflict until one file is touched again.
class SyncEngine {
public:
    explicit SyncEngine(SyncOptions options);

    /// One change notification; events are handled strictly in order.
    SyncAction handle(SyncEvent event);

    /// One-shot mode: the newer file (by modification time) wins.
    SyncAction sync_once();

    SyncStatus status() const { return status_; }
    int conversion_count() const { return conversions_; }

private:
    SyncAction convert(SyncSide from);
    std::uint64_t digest_of(SyncSide side) const;
    void note(const std::string& line);

    SyncOptions options_;
    SyncStatus status_ = SyncStatus::Clean;
    std::uint64_t last_synced_text_ = 0;
    std::uint64_t last_synced_xml_ = 0;
    std::uint64_t conflict_text_ = 0;
    std::uint64_t conflict_xml_ = 0;
    int conversions_ = 0;
};

/// Polls both files at `interval` and feeds change events into the engine
/// until `keep_running` returns false.
void run_watch_loop(SyncEngine& engine, const SyncOptions& options,
                    std::chrono::milliseconds interval,
                    const std::function<bool()>& keep_running);

} // namespace eatxt
