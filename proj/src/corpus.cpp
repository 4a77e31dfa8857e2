#include "nilcmetrix/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nilcmetrix/errors.hpp"

namespace nilcmetrix {

namespace fs = std::filesystem;

InputFormat parse_input_format(std::string_view name) {
  if (name == "conllu") return InputFormat::Conllu;
  if (name == "text") return InputFormat::Text;
  throw Error("unknown input format '" + std::string(name) + "'");
}

std::vector<fs::path> list_input_files(const std::vector<fs::path>& inputs) {
  std::vector<fs::path> out;
  for (const auto& input : inputs) {
    if (fs::is_directory(input)) {
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(input)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().filename().string().starts_with(".")) continue;
        files.push_back(entry.path());
      }
      std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
        return a.filename().string() < b.filename().string();
      });
      out.insert(out.end(), files.begin(), files.end());
    } else if (fs::is_regular_file(input)) {
      out.push_back(input);
    } else {
      throw Error("input not found: " + input.string());
    }
  }
  return out;
}

Document load_document(const fs::path& path, InputFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  const std::string id = path.stem().string();
  try {
    return format == InputFormat::Conllu ? parse_conllu(std::string_view(text), id)
                                         : ingest_plaintext(text, id);
  } catch (const Error& e) {
    throw Error(path.string() + ": " + e.what());
  }
}

std::vector<Document> load_corpus(const std::vector<fs::path>& inputs, InputFormat format) {
  std::vector<Document> docs;
  for (const auto& file : list_input_files(inputs)) docs.push_back(load_document(file, format));
  return docs;
}

}  // namespace nilcmetrix
