#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>

namespace xbow {

/// Runs writer on a temporary sibling of path, then renames it over path.
/// On any failure the temporary file is removed and path is left untouched.
void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& writer);

}  // namespace xbow
