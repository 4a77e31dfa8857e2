#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "nilcmetrix/text_model.hpp"

namespace nilcmetrix {

enum class InputFormat { Conllu, Text };

/// "conllu" or "text"; throws Error otherwise.
InputFormat parse_input_format(std::string_view name);

/// Regular files named by `inputs`; directories contribute their non-hidden
/// regular files in lexicographic order. Throws Error for a missing path.
std::vector<std::filesystem::path> list_input_files(
    const std::vector<std::filesystem::path>& inputs);

/// Reads one document; its id defaults to the file stem.
Document load_document(const std::filesystem::path& path, InputFormat format);

std::vector<Document> load_corpus(const std::vector<std::filesystem::path>& inputs,
                                  InputFormat format);

}  // namespace nilcmetrix
