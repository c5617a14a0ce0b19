#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

namespace eatxt {

std::optional<std::string> read_file(const std::filesystem::path& path);

/// Write-temp-then-rename, so readers never observe a half-written file.
bool write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// FNV-1a over the content; used for change detection, not security.
std::uint64_t content_digest(std::string_view content);

} // namespace eatxt
