#include "xbow/file_util.hpp"

#include <fstream>
#include <system_error>

#include "xbow/error.hpp"

namespace xbow {

void write_file_atomically(const std::filesystem::path& path,
                           const std::function<void(std::ostream&)>& writer) {
  std::filesystem::path tmp = path;
  tmp += ".partial";
  try {
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw DataError("cannot open '" + tmp.string() + "' for writing");
      writer(out);
      out.flush();
      if (!out) throw DataError("write to '" + tmp.string() + "' failed");
    }
    std::filesystem::rename(tmp, path);
  } catch (...) {
    std::error_code ec;
    std::filesystem::remove(tmp, ec);
    throw;
  }
}

}  // namespace xbow
