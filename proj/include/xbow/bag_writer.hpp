#pragma once

#include <filesystem>
#include <iosfwd>
#include <span>

#include "xbow/dataset.hpp"

namespace xbow {

enum class OutputFormat { arff, csv, libsvm };

/// Chooses the format from the file extension (.arff, .csv, .libsvm/.svm/.txt).
OutputFormat format_from_extension(const std::filesystem::path& path);

/// ARFF and CSV write the name (when any bag has one), the window time
/// (when any bag has one), tf_0..tf_{V-1}, then the label. LIBSVM writes
/// "<label> i:v" with 1-based indices and zero entries omitted.
void write_bags(std::span<const Bag> bags, OutputFormat format, std::ostream& out);

/// Writes to a temporary sibling file and renames it into place, so a
/// failure never leaves a partial file at path.
void write_bags(std::span<const Bag> bags, OutputFormat format,
                const std::filesystem::path& path);

}  // namespace xbow
