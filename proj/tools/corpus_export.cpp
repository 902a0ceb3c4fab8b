// Writes the shipped corpus: one JSON document per fixture plus the
// deliberately broken documents under rejects/.  Output is deterministic, so
// rerunning on a clean tree is a no-op diff.

#include <filesystem>
#include <fstream>
#include <iostream>

#include "laxcat/corpus.hpp"

int main(int argc, char** argv) {
  namespace fs = std::filesystem;
  fs::path dir = argc > 1 ? argv[1] : "corpus";
  std::error_code ec;
  fs::create_directories(dir / "rejects", ec);
  if (ec) {
    std::cerr << "cannot create " << dir << ": " << ec.message() << "\n";
    return 2;
  }

  int written = 0;
  for (const auto& entry : laxcat::corpus::corpus_documents()) {
    laxcat::io::save(entry.doc, (dir / entry.file).string());
    ++written;
  }
  for (const auto& r : laxcat::corpus::corpus_rejects()) {
    std::ofstream out(dir / "rejects" / r.file, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write rejects/" << r.file << "\n";
      return 2;
    }
    out << r.doc.dump(2) << "\n";
    ++written;
  }
  std::cout << written << " documents written to " << dir.string() << "\n";
  return 0;
}
