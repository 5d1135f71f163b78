#pragma once

// Model file format, one statement per line ('#' starts a comment):
//
//   generator <name> <degree>
//   ...
//   d <name> = <polynomial>
//
// All generator lines precede the d lines; generators without a d line
// have zero differential.

#include <filesystem>
#include <string>
#include <string_view>

#include "lscat/differential.hpp"
#include "lscat/errors.hpp"

namespace lscat {

class IoError : public Error {
public:
    using Error::Error;
};

struct ModelFile {
    std::string path;
    std::string source;
    SullivanModel model;
};

// Throws ParseError (with line/column) on syntax errors and unknown names,
// ModelError on degree, minimality or d^2 violations.
SullivanModel parse_model(std::string_view source);

// As parse_model, plus IoError if the file cannot be read.
ModelFile parse_model_file(const std::filesystem::path& path);

// Canonical text that parse_model reads back to the same model.
std::string format_model(const SullivanModel& model);

}  // namespace lscat
